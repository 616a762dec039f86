#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mlfb/errors.hpp"
#include "mlfb/lattice.hpp"

namespace mlfb {

/// Exact enumeration of the integral points of a bounded polyhedron
/// {x : G x <= h}.
///
/// Coordinates are fixed one at a time. The admissible range of the next
/// coordinate is the rational min/max over the vertices of the current slice,
/// so every visited partial point extends to at least one real point of the
/// polyhedron. Each search node charges one unit of `budget`.
///
/// `visit` returns false to stop early; the function then returns false.
bool for_each_lattice_point(const IntMat& g, const IntVec& h, Budget& budget,
                            const std::function<bool(const IntVec&)>& visit);

std::optional<IntVec> find_lattice_point(const IntMat& g, const IntVec& h, Budget& budget);

std::vector<IntVec> lattice_points(const IntMat& g, const IntVec& h, Budget& budget);

}  // namespace mlfb
