#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mlfb/errors.hpp"
#include "mlfb/lattice.hpp"
#include "mlfb/testset.hpp"

namespace mlfb {

/// K_b = {x : A x <= b} together with the lattice points it was built from:
/// gens = (0, v_1, ..., v_d) and b = max(A 0, A v_1, ..., A v_d).
struct Body {
  IntVec b;
  std::vector<IntVec> gens;

  friend bool operator==(const Body&, const Body&) = default;
};

struct MlfbResult {
  std::vector<Body> bodies;
  /// witnesses[k][i]: lattice point in the relative interior of facet i of
  /// bodies[k].
  std::vector<std::vector<IntVec>> witnesses;
  /// The candidate superset the bodies were filtered from.
  std::vector<Body> candidates;
  std::size_t superset_size = 0;
  /// No kept body sits, up to translation, strictly inside another candidate.
  bool containment_consistent = true;
};

/// {u in T : a_i u < a_i v} for 1 <= i <= d.
std::vector<TestVector> h_set(const TestSet& t, std::size_t i, const TestVector& v);

/// Test vectors u with A u < body_rhs(A, points) in every coordinate.
std::vector<TestVector> interior_points_from_T(const SimplicialData& data, std::span<const IntVec> points,
                                               const TestSet& t);

/// Backtracking over d-tuples of test vectors. Returns a superset of the
/// canonical representatives of the maximal lattice-free bodies; every returned
/// body is lattice free and has 0 as perturbed optimum of its bounds b_i - 1.
std::vector<Body> enumerate_candidates(const TestSet& t);
std::vector<Body> enumerate_candidates(const TestSet& t, Budget& budget);

/// No integral x with A x < b in every coordinate.
bool is_lattice_free(const SimplicialData& data, const IntVec& b, Budget& budget);

/// Integral x with a_i x = b_i and a_j x < b_j for j != i.
std::optional<IntVec> facet_witness(const SimplicialData& data, const IntVec& b, std::size_t i,
                                    Budget& budget);

/// Keeps the candidates with a relative-interior lattice point on every facet.
MlfbResult filter_maximal(const SimplicialData& data, const std::vector<Body>& candidates, Budget& budget);

/// b + A z.
IntVec translate_body(const SimplicialData& data, const IntVec& b, const IntVec& z);

/// Unique translate with b_0 = 0 whose facet-0 lattice points have 0 as the
/// perturbed optimum. Throws NotLatticeFree for bodies with interior lattice
/// points and NotMaximal when facet 0 carries no relative-interior point.
IntVec canonicalize(const TestSet& t, const IntVec& b);
Body canonicalize(const TestSet& t, const Body& body);

/// Full pipeline: candidates, maximality filter, canonical form, sorted by b.
MlfbResult compute_mlfb(const TestSet& t, Budget& budget);

}  // namespace mlfb
