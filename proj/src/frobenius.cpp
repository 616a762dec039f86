#include "mlfb/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>

#include "mlfb/polytope.hpp"
#include "mlfb/testset.hpp"

namespace mlfb {

FrobeniusInstance::FrobeniusInstance(IntVec a) : a_(std::move(a)) {
  if (a_.size() < 2) throw Error(ErrorCode::Malformed, "need at least two weights");
  Integer g = 0;
  for (const auto& x : a_) {
    if (sgn(x) <= 0) throw Error(ErrorCode::NonPositive, "weight " + x.get_str() + " is not positive");
    g = gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::NonCoprime, "non-coprime weights (gcd " + g.get_str() + ")");
}

Integer FrobeniusInstance::weight_sum() const {
  Integer s = 0;
  for (const auto& x : a_) s += x;
  return s;
}

bool FrobeniusInstance::contains_one() const {
  return std::any_of(a_.begin(), a_.end(), [](const Integer& x) { return x == 1; });
}

// ---------------------------------------------------------------- naive sieve

namespace {

std::uint64_t to_cells(const Integer& x, std::uint64_t budget, const char* what) {
  if (x > Integer(static_cast<unsigned long>(budget))) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " " + x.get_str() + " exceeds budget of " +
                                               std::to_string(budget) + " cells");
  }
  return x.get_ui();
}

// Sieves 0, 1, 2, ... and reports every gap; returns the largest gap or -1.
Integer sieve(const FrobeniusInstance& inst, std::uint64_t budget, std::vector<Integer>* gaps) {
  const auto& a = inst.weights();
  Integer smallest = *std::min_element(a.begin(), a.end());
  const std::uint64_t run_needed = to_cells(smallest, budget, "smallest weight");
  std::vector<std::uint64_t> steps;
  const Integer limit(static_cast<unsigned long>(budget));
  for (const auto& x : a)
    if (x <= limit) steps.push_back(x.get_ui());
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  std::vector<char> rep;
  Integer last_gap = -1;
  std::uint64_t run = 0;
  for (std::uint64_t k = 0; run < run_needed; ++k) {
    if (k >= budget) {
      throw Error(ErrorCode::BudgetExceeded, "sieve exceeded budget of " + std::to_string(budget) + " cells");
    }
    bool r = k == 0;
    for (std::uint64_t s : steps) {
      if (s > k) break;
      if (rep[k - s]) {
        r = true;
        break;
      }
    }
    rep.push_back(r);
    if (r) {
      ++run;
    } else {
      run = 0;
      last_gap = Integer(static_cast<unsigned long>(k));
      if (gaps) gaps->push_back(last_gap);
    }
  }
  return last_gap;
}

}  // namespace

Integer frobenius_naive(const FrobeniusInstance& inst, std::uint64_t budget) {
  return sieve(inst, budget, nullptr);
}

std::vector<Integer> semigroup_gaps(const FrobeniusInstance& inst, std::uint64_t budget) {
  std::vector<Integer> gaps;
  sieve(inst, budget, &gaps);
  return gaps;
}

// ---------------------------------------------------------------- Brauer-Shockley

Integer frobenius_brauer_shockley(const FrobeniusInstance& inst, std::uint64_t budget) {
  const auto& a = inst.weights();
  const std::uint64_t modulus = to_cells(a[0], budget, "first weight");
  if (modulus == 1) return -1;

  struct Edge {
    std::uint64_t shift;
    Integer weight;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Integer r = a[i] % a[0];
    edges.push_back({r.get_ui(), a[i]});
  }

  std::vector<std::optional<Integer>> dist(modulus);
  using Item = std::pair<Integer, std::uint64_t>;
  auto later = [](const Item& x, const Item& y) {
    if (int c = cmp(x.first, y.first)) return c > 0;
    return x.second > y.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  dist[0] = Integer(0);
  queue.emplace(Integer(0), 0);
  std::vector<char> done(modulus, 0);
  while (!queue.empty()) {
    auto [du, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& e : edges) {
      std::uint64_t v = (u + e.shift) % modulus;
      Integer dv = du + e.weight;
      if (!dist[v] || dv < *dist[v]) {
        dist[v] = dv;
        queue.emplace(dv, v);
      }
    }
  }
  Integer best = 0;
  for (std::uint64_t f = 1; f < modulus; ++f) {
    if (*dist[f] > best) best = *dist[f];
  }
  return best - a[0];
}

// ---------------------------------------------------------------- via MLFB

FrobeniusMlfb frobenius_by_mlfb(const FrobeniusInstance& inst, std::uint64_t budget) {
  SimplicialData data = SimplicialData::from_weights(inst.weights());
  Budget work(budget);
  TestSet t = compute_test_set(data, work);
  MlfbResult bodies = compute_mlfb(t, work);
  if (bodies.candidates.empty()) throw Error(ErrorCode::NotSimplicial, "no lattice-free candidate bodies");
  // Every candidate is lattice free, and containment only raises a.b, so the
  // maximum over the superset equals the maximum over the maximal bodies.
  const Body* best = &bodies.candidates.front();
  Integer best_weight = dot(inst.weights(), best->b);
  for (const auto& c : bodies.candidates) {
    Integer w = dot(inst.weights(), c.b);
    if (w > best_weight) {
      best_weight = w;
      best = &c;
    }
  }
  IntVec best_b = best->b;
  return {best_weight - inst.weight_sum(), std::move(data), std::move(bodies), std::move(best_b)};
}

bool representable(const FrobeniusInstance& inst, const IntVec& b, std::uint64_t budget) {
  if (b.size() != inst.size()) throw Error(ErrorCode::DimensionMismatch, "b must have one entry per weight");
  IntMat a = kernel_lattice_basis(inst.weights());
  Budget work(budget);
  return find_lattice_point(a, b, work).has_value();
}

// ---------------------------------------------------------------- n = 3

SpecialBasis special_basis_3(const Integer& a1, const Integer& a2, const Integer& a3) {
  FrobeniusInstance check(IntVec(std::vector<Integer>{a1, a2, a3}));
  Integer gamma = gcd(a2, a3);
  Integer p = a2 / gamma, q = a3 / gamma;
  Integer lambda = 1;
  if (q != 1) mpz_invert(lambda.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Integer mu = (lambda * p - 1) / q;
  SpecialBasis s;
  s.gamma = gamma;
  s.lambda = lambda;
  s.mu = mu;
  s.u = IntVec(std::vector<Integer>{-gamma, lambda * a1, -mu * a1});
  s.v = IntVec(std::vector<Integer>{Integer(0), -q, p});
  return s;
}

Ss3State ss3_initial_state(const Integer& a1, const Integer& a2, const Integer& a3) {
  SpecialBasis s = special_basis_3(a1, a2, a3);
  Ss3State st;
  std::vector<IntVec> cols{s.u, s.v};
  st.m = IntMat::from_columns(cols);
  st.u = IntMat::identity(2);
  st.gamma = s.gamma;
  st.lambda = s.lambda;
  st.mu = s.mu;
  return st;
}

namespace {

enum class Sign { Negative, NonPositive, Positive };

// Sign pattern every intermediate matrix keeps; [row][col].
constexpr Sign kPattern[3][2] = {
    {Sign::Negative, Sign::NonPositive},
    {Sign::Positive, Sign::Negative},
    {Sign::NonPositive, Sign::Positive},
};

// Largest k >= 0 with col_dst + k col_src inside the pattern.
Integer max_step(const IntMat& m, std::size_t dst, std::size_t src) {
  std::optional<Integer> best;
  for (std::size_t r = 0; r < 3; ++r) {
    const Integer& x = m(r, dst);
    const Integer& s = m(r, src);
    if (sgn(s) == 0) continue;
    std::optional<Integer> bound;
    Integer num;
    switch (kPattern[r][dst]) {
      case Sign::Positive:  // x + k s > 0
        if (sgn(s) < 0) {
          num = x - 1;
          Integer den = -s;
          bound.emplace();
          mpz_fdiv_q(bound->get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        break;
      case Sign::NonPositive:  // x + k s <= 0
        if (sgn(s) > 0) {
          num = -x;
          bound.emplace();
          mpz_fdiv_q(bound->get_mpz_t(), num.get_mpz_t(), s.get_mpz_t());
        }
        break;
      case Sign::Negative:  // x + k s < 0
        if (sgn(s) > 0) {
          num = -x - 1;
          bound.emplace();
          mpz_fdiv_q(bound->get_mpz_t(), num.get_mpz_t(), s.get_mpz_t());
        }
        break;
    }
    if (bound && (!best || *bound < *best)) best = bound;
  }
  if (!best) throw Error(ErrorCode::ReductionStuck, "unbounded column step");
  return sgn(*best) < 0 ? Integer(0) : *best;
}

void add_multiple(IntMat& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

}  // namespace

bool ss3_is_terminal(const IntMat& m) {
  if (m.rows() != 3 || m.cols() != 2) return false;
  return sgn(m(0, 0)) < 0 && sgn(m(0, 1)) <= 0 && sgn(m(1, 0)) > 0 && sgn(m(1, 1)) < 0 &&
         sgn(m(2, 0)) <= 0 && sgn(m(2, 1)) > 0 && sgn(m(1, 0) + m(1, 1)) >= 0 &&
         sgn(m(2, 0) + m(2, 1)) > 0;
}

bool ss3_step(Ss3State& state) {
  for (auto [dst, src] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}}) {
    Integer k = max_step(state.m, dst, src);
    if (sgn(k) <= 0) continue;
    add_multiple(state.m, dst, src, k);
    add_multiple(state.u, dst, src, k);
    ++state.steps;
    return true;
  }
  return false;
}

Ss3State ss3_reduce(Ss3State state) {
  while (ss3_step(state)) {
  }
  if (!ss3_is_terminal(state.m)) {
    throw Error(ErrorCode::ReductionStuck, "reduction ended outside the terminal sign pattern");
  }
  return state;
}

Ss3Result frobenius_ss3(const Integer& a1, const Integer& a2, const Integer& a3, std::uint64_t budget) {
  FrobeniusInstance inst(IntVec(std::vector<Integer>{a1, a2, a3}));
  Ss3Result out;
  try {
    out.state = ss3_reduce(ss3_initial_state(a1, a2, a3));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ReductionStuck) throw;
    FrobeniusMlfb fallback = frobenius_by_mlfb(inst, budget);
    out.g = fallback.g;
    out.fell_back = true;
    return out;
  }
  IntVec g1 = out.state.m.col(0), g2 = out.state.m.col(1);
  IntVec both = g1 + g2;
  IntVec zero = IntVec::zero(3);
  std::vector<IntVec> first{zero, g1, both}, second{zero, g2, both};
  out.b1 = max_vectors(first);
  out.b2 = max_vectors(second);
  const IntVec& a = inst.weights();
  Integer w1 = dot(a, out.b1), w2 = dot(a, out.b2);
  out.g = (w1 > w2 ? w1 : w2) - inst.weight_sum();
  return out;
}

}  // namespace mlfb
