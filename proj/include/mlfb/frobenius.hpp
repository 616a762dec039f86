#pragma once

#include <cstdint>
#include <vector>

#include "mlfb/errors.hpp"
#include "mlfb/lattice.hpp"
#include "mlfb/mlfb.hpp"

namespace mlfb {

/// Positive, coprime weights a_1, ..., a_n with n >= 2.
class FrobeniusInstance {
 public:
  explicit FrobeniusInstance(IntVec a);

  const IntVec& weights() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }
  Integer weight_sum() const;
  bool contains_one() const;

 private:
  IntVec a_;
};

// All methods return -1 when every natural number is representable.

/// Sieve until min(a) consecutive representable integers appear.
Integer frobenius_naive(const FrobeniusInstance& inst, std::uint64_t budget = kDefaultBudget);

/// Natural numbers outside the semigroup, ascending.
std::vector<Integer> semigroup_gaps(const FrobeniusInstance& inst, std::uint64_t budget = kDefaultBudget);

/// Shortest paths on Z/a_1 with edges v -> v + a_i of weight a_i (i >= 2);
/// g = max residue distance - a_1.
Integer frobenius_brauer_shockley(const FrobeniusInstance& inst, std::uint64_t budget = kDefaultBudget);

struct FrobeniusMlfb {
  Integer g;
  SimplicialData data;
  MlfbResult bodies;
  /// b vector maximizing a.b over the candidate superset.
  IntVec best_b;
};

/// Maximum of a.b over the lattice-free candidate bodies of the kernel
/// lattice, minus the sum of the weights.
FrobeniusMlfb frobenius_by_mlfb(const FrobeniusInstance& inst, std::uint64_t budget = kDefaultBudget);

/// True iff a.b is a nonnegative integral combination of the weights, i.e. iff
/// K_b = {x : A x <= b} contains a lattice point (A = kernel basis).
bool representable(const FrobeniusInstance& inst, const IntVec& b, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------- n = 3

struct SpecialBasis {
  IntVec u;
  IntVec v;
  Integer gamma;
  Integer lambda;
  Integer mu;
};

/// gamma = gcd(a_2, a_3) = lambda a_2 - mu a_3 with 0 <= mu < a_2/gamma and
/// 0 < lambda <= a_3/gamma; u = (-gamma, lambda a_1, -mu a_1),
/// v = (0, -a_3/gamma, a_2/gamma).
SpecialBasis special_basis_3(const Integer& a1, const Integer& a2, const Integer& a3);

struct Ss3State {
  IntMat m;  // 3 x 2, columns span the kernel lattice
  IntMat u;  // 2 x 2 unimodular, m = m0 * u
  Integer gamma;
  Integer lambda;
  Integer mu;
  std::size_t steps = 0;
};

Ss3State ss3_initial_state(const Integer& a1, const Integer& a2, const Integer& a3);

/// True when m has the terminal sign pattern c_1 < 0, c_2 <= 0, B_11 > 0,
/// B_12 < 0, B_21 <= 0, B_22 > 0, B_11 + B_12 >= 0, B_21 + B_22 > 0
/// (row 0 = c, rows 1-2 = B).
bool ss3_is_terminal(const IntMat& m);

/// One column operation: col_0 += k col_1 if some k >= 1 keeps the sign
/// pattern (largest such k), else col_1 += k col_0. False when neither applies.
bool ss3_step(Ss3State& state);

/// Adds the largest nonnegative multiple of one column to the other that keeps
/// the sign pattern, until no such move exists. Throws ReductionStuck if the
/// final matrix fails ss3_is_terminal.
Ss3State ss3_reduce(Ss3State state);

struct Ss3Result {
  Integer g;
  Ss3State state;
  IntVec b1;
  IntVec b2;
  bool fell_back = false;
};

/// Three-variable reduction: test set {e_1, e_2, e_1 + e_2} of the reduced problem,
/// bodies max(0, g_i, g_1 + g_2). Falls back to frobenius_by_mlfb when the
/// reduction gets stuck.
Ss3Result frobenius_ss3(const Integer& a1, const Integer& a2, const Integer& a3,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace mlfb
