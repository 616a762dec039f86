#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mlfb/errors.hpp"
#include "mlfb/lattice.hpp"

namespace mlfb {

/// An improving lattice direction z together with its image w = A z.
///
/// The perturbed cost a_0 + eps a_1 + ... + eps^d a_d decreases along z
/// exactly when lex_sign(w) < 0.
struct TestVector {
  IntVec z;
  IntVec w;

  friend bool operator==(const TestVector&, const TestVector&) = default;
};

/// Orders by (w, z) lexicographically.
bool operator<(const TestVector& a, const TestVector& b);

/// Test set for the family min{a_0' z : a_i z <= b_i, i = 1..d} over all
/// integral right-hand sides.
class TestSet {
 public:
  /// Validates every entry (w = A z, lex_sign(w) < 0, no duplicates) and keeps
  /// the given order.
  TestSet(SimplicialData data, std::vector<TestVector> entries);

  const SimplicialData& data() const noexcept { return data_; }
  std::span<const TestVector> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const TestVector& operator[](std::size_t i) const { return entries_[i]; }

 private:
  SimplicialData data_;
  std::vector<TestVector> entries_;
};

/// Reduced Groebner basis of the lattice ideal of the column span of A under
/// the y-graded order that breaks ties by the sign of the first nonzero
/// coordinate of the exponent difference. Sorted by (w, z).
TestSet compute_test_set(const SimplicialData& data);
/// Same, charging one unit per S-pair and reduction step.
TestSet compute_test_set(const SimplicialData& data, Budget& budget);

/// Schrijver-type box radius: d times the largest absolute subdeterminant.
Integer default_brute_force_radius(const SimplicialData& data);

/// All lex-negative z with |z|_inf <= radius whose positive image part is
/// minimal among such vectors. Throws BoxTooLarge when the box has more than
/// `budget` points.
TestSet brute_force_test_set(const SimplicialData& data, const Integer& radius,
                             std::uint64_t budget = kDefaultBudget);

/// Descends from the feasible x0 of min{a_0' z : a_i z <= bounds_i, i = 1..d}
/// by applying the first feasible test vector until none applies.
IntVec ip_solve(const TestSet& t, const IntVec& bounds, const IntVec& x0);

/// Test set for A U: every z becomes U^-1 z, images are unchanged.
TestSet transform_test_set(const TestSet& t, const IntMat& u);

}  // namespace mlfb
