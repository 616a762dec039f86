#include "mlfb/testset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mlfb {

bool operator<(const TestVector& a, const TestVector& b) {
  if (a.w != b.w) return a.w < b.w;
  return a.z < b.z;
}

TestSet::TestSet(SimplicialData data, std::vector<TestVector> entries)
    : data_(std::move(data)), entries_(std::move(entries)) {
  const std::size_t d = data_.dim();
  for (const auto& e : entries_) {
    if (e.z.size() != d || e.w.size() != d + 1) {
      throw Error(ErrorCode::DimensionMismatch, "test vector has the wrong dimension");
    }
    if (data_.image(e.z) != e.w) throw Error(ErrorCode::Malformed, "test vector image is not A z");
    if (lex_sign(e.w) >= 0) throw Error(ErrorCode::Malformed, "test vector is not improving");
  }
  std::vector<TestVector> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::Malformed, "duplicate test vector");
  }
}

namespace {

// Lattice binomial u^{w+} - u^{w-} carried as its exponent difference w and
// the preimage z with w = A z.
struct Binomial {
  IntVec w;
  IntVec z;
};

bool is_positive_part_le(const IntVec& g, const IntVec& s) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (sgn(g[k]) > 0 && g[k] > s[k]) return false;
  }
  return true;
}

bool positive_part_equal(const IntVec& g, const IntVec& s) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    const bool gp = sgn(g[k]) > 0, sp = sgn(s[k]) > 0;
    if (gp != sp) return false;
    if (gp && g[k] != s[k]) return false;
  }
  return true;
}

// Positive part of g is componentwise <= the negative part of s.
bool positive_part_le_negative(const IntVec& g, const IntVec& s) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (sgn(g[k]) > 0 && g[k] > -s[k]) return false;
  }
  return true;
}

Integer positive_degree(const IntVec& w, const IntVec& y) {
  Integer deg = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (sgn(w[k]) > 0) deg += y[k] * w[k];
  return deg;
}

// Buchberger completion on lattice vectors for one term order. The order is
// the y-graded reverse lexicographic order whose cheapest variable is
// scan[0]; on a lattice vector (degree zero) it reduces to the sign of the
// first nonzero coordinate in `scan` order, negative meaning w+ leads.
class Completion {
 public:
  Completion(const IntVec& y, std::vector<std::size_t> scan, Budget* budget = nullptr)
      : y_(y), scan_(std::move(scan)), budget_(budget) {}

  std::vector<Binomial> run(std::vector<Binomial> gens) {
    basis_.clear();
    for (auto& g : gens) {
      orient(g);
      if (!g.w.is_zero()) add(std::move(g));
    }
    while (!pairs_.empty()) {
      Pair p = pairs_.top();
      pairs_.pop();
      const Binomial& f = basis_[p.i];
      const Binomial& g = basis_[p.j];
      if (leads_coprime(f.w, g.w)) continue;
      Binomial s{g.w - f.w, g.z - f.z};
      reduce(s);
      if (!s.w.is_zero()) add(std::move(s));
    }
    return minimalize();
  }

  void orient(Binomial& b) const {
    if (order_sign(b.w) > 0) {
      b.w = -b.w;
      b.z = -b.z;
    }
  }

  int order_sign(const IntVec& w) const {
    for (std::size_t k : scan_)
      if (int s = sgn(w[k])) return s;
    return 0;
  }

 private:
  struct Pair {
    Integer degree;
    std::size_t i;
    std::size_t j;
  };
  struct PairAfter {
    bool operator()(const Pair& a, const Pair& b) const {
      if (int c = cmp(a.degree, b.degree)) return c > 0;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };

  static bool leads_coprime(const IntVec& f, const IntVec& g) {
    for (std::size_t k = 0; k < f.size(); ++k)
      if (sgn(f[k]) > 0 && sgn(g[k]) > 0) return false;
    return true;
  }

  Integer lcm_degree(const IntVec& f, const IntVec& g) const {
    Integer deg = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const Integer& m = f[k] > g[k] ? f[k] : g[k];
      if (sgn(m) > 0) deg += y_[k] * m;
    }
    return deg;
  }

  void add(Binomial b) {
    const std::size_t j = basis_.size();
    basis_.push_back(std::move(b));
    if (budget_) budget_->charge(j);
    for (std::size_t i = 0; i < j; ++i) {
      pairs_.push(Pair{lcm_degree(basis_[i].w, basis_[j].w), i, j});
    }
  }

  // Leading-term reduction; each step strictly lowers the leading monomial.
  void reduce(Binomial& s) const {
    for (;;) {
      orient(s);
      if (s.w.is_zero()) return;
      auto it = std::find_if(basis_.begin(), basis_.end(),
                             [&](const Binomial& g) { return is_positive_part_le(g.w, s.w); });
      if (it == basis_.end()) return;
      if (budget_) budget_->charge();
      s.w -= it->w;
      s.z -= it->z;
    }
  }

  std::vector<Binomial> minimalize() const {
    std::vector<std::size_t> idx(basis_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Integer> deg;
    deg.reserve(basis_.size());
    for (const auto& b : basis_) deg.push_back(positive_degree(b.w, y_));
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
    std::vector<Binomial> kept;
    for (std::size_t i : idx) {
      const Binomial& b = basis_[i];
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Binomial& k) { return is_positive_part_le(k.w, b.w); });
      if (!redundant) kept.push_back(b);
    }
    return kept;
  }

  const IntVec& y_;
  std::vector<std::size_t> scan_;
  Budget* budget_;
  std::vector<Binomial> basis_;
  std::priority_queue<Pair, std::vector<Pair>, PairAfter> pairs_;
};

// Replaces every trailing monomial by its normal form.
void reduce_tails(std::vector<Binomial>& basis, const Completion& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j == i || !positive_part_le_negative(basis[j].w, basis[i].w)) continue;
        IntVec w = basis[i].w + basis[j].w;
        if (order.order_sign(w) >= 0 || !positive_part_equal(w, basis[i].w)) {
          throw std::logic_error("tail reduction changed a leading term; basis is not reduced");
        }
        basis[i].w = std::move(w);
        basis[i].z += basis[j].z;
        changed = true;
      }
    }
  }
}

}  // namespace

TestSet compute_test_set(const SimplicialData& data) {
  Budget unlimited(std::numeric_limits<std::uint64_t>::max());
  return compute_test_set(data, unlimited);
}

TestSet compute_test_set(const SimplicialData& data, Budget& budget) {
  const std::size_t d = data.dim();
  const IntVec& y = data.annihilator();

  std::vector<Binomial> gens;
  for (std::size_t j = 0; j < d; ++j) gens.push_back({data.matrix().col(j), IntVec::unit(d, j)});

  // The binomials of a lattice basis generate an ideal whose saturation is the
  // lattice ideal. Saturate one variable at a time: a reverse lexicographic
  // basis with u_i cheapest is already u_i-saturated in vector form. The last
  // round (u_0 cheapest) is the target order.
  std::vector<std::size_t> natural(d + 1);
  std::iota(natural.begin(), natural.end(), 0);
  for (std::size_t i = 1; i <= d; ++i) {
    std::vector<std::size_t> scan{i};
    for (std::size_t k = 0; k <= d; ++k)
      if (k != i) scan.push_back(k);
    Completion c(y, scan, &budget);
    gens = c.run(std::move(gens));
  }
  Completion target(y, natural, &budget);
  gens = target.run(std::move(gens));
  reduce_tails(gens, target);

  std::vector<TestVector> entries;
  entries.reserve(gens.size());
  for (auto& g : gens) entries.push_back({std::move(g.z), std::move(g.w)});
  std::sort(entries.begin(), entries.end());
  return TestSet(data, std::move(entries));
}

Integer default_brute_force_radius(const SimplicialData& data) {
  return Integer(static_cast<unsigned long>(data.dim())) * max_subdeterminant(data.matrix());
}

TestSet brute_force_test_set(const SimplicialData& data, const Integer& radius, std::uint64_t budget) {
  if (sgn(radius) <= 0) throw Error(ErrorCode::Malformed, "radius must be positive");
  const std::size_t d = data.dim();
  Integer box = 1;
  for (std::size_t k = 0; k < d; ++k) box *= 2 * radius + 1;
  if (box > Integer(static_cast<unsigned long>(budget))) {
    throw Error(ErrorCode::BoxTooLarge, "box of " + box.get_str() + " points exceeds budget " +
                                            std::to_string(budget));
  }

  struct Candidate {
    TestVector v;
    Integer degree;
  };
  std::vector<Candidate> candidates;
  IntVec z(d);
  for (std::size_t k = 0; k < d; ++k) z[k] = -radius;
  for (;;) {
    if (!z.is_zero()) {
      IntVec w = data.image(z);
      if (lex_sign(w) < 0) {
        Integer deg = positive_degree(w, data.annihilator());
        candidates.push_back({{z, std::move(w)}, std::move(deg)});
      }
    }
    std::size_t k = 0;
    while (k < d && z[k] == radius) z[k++] = -radius;
    if (k == d) break;
    ++z[k];
  }

  // A strict dominator has strictly smaller positive degree, so scanning by
  // degree only ever compares against already-kept vectors.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
  std::vector<TestVector> kept;
  for (auto& c : candidates) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const TestVector& k) {
      return is_positive_part_le(k.w, c.v.w) && !positive_part_equal(k.w, c.v.w);
    });
    if (!dominated) kept.push_back(std::move(c.v));
  }
  std::sort(kept.begin(), kept.end());
  return TestSet(data, std::move(kept));
}

IntVec ip_solve(const TestSet& t, const IntVec& bounds, const IntVec& x0) {
  const SimplicialData& data = t.data();
  const std::size_t d = data.dim();
  if (bounds.size() != d || x0.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "ip_solve expects d bounds and a point in Z^d");
  }
  IntVec x = x0;
  IntVec image = data.image(x);
  for (std::size_t i = 1; i <= d; ++i) {
    if (image[i] > bounds[i - 1]) {
      throw Error(ErrorCode::Infeasible, "start point violates bound of row " + std::to_string(i));
    }
  }
  auto applicable = [&](const TestVector& v) {
    for (std::size_t i = 1; i <= d; ++i)
      if (image[i] + v.w[i] > bounds[i - 1]) return false;
    return true;
  };
  for (;;) {
    auto it = std::find_if(t.entries().begin(), t.entries().end(), applicable);
    if (it == t.entries().end()) return x;
    x += it->z;
    image += it->w;
  }
}

TestSet transform_test_set(const TestSet& t, const IntMat& u) {
  const std::size_t d = t.data().dim();
  if (u.rows() != d || u.cols() != d) throw Error(ErrorCode::DimensionMismatch, "U must be d x d");
  IntMat inverse = unimodular_inverse(u);
  SimplicialData moved(t.data().matrix() * u, t.data().annihilator());
  std::vector<TestVector> entries;
  entries.reserve(t.size());
  for (const auto& e : t.entries()) entries.push_back({inverse * e.z, e.w});
  return TestSet(std::move(moved), std::move(entries));
}

}  // namespace mlfb
