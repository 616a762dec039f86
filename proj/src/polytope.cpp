#include "mlfb/polytope.hpp"

#include <utility>

namespace mlfb {

namespace {

using Rational = mpq_class;

struct System {
  std::vector<std::vector<Integer>> rows;  // each of length k
  std::vector<Integer> rhs;
};

// Solves the square system given by `pick`; false if singular.
bool solve_square(const System& s, const std::vector<std::size_t>& pick, std::vector<Rational>& x) {
  const std::size_t k = pick.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = s.rows[pick[i]][j];
    m[i][k] = s.rhs[pick[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && sgn(m[p][c]) == 0) ++p;
    if (p == k) return false;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[c][j];
    }
  }
  x.resize(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = m[i][k] / m[i][i];
  return true;
}

bool feasible(const System& s, const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += s.rows[i][j] * x[j];
    if (lhs > s.rhs[i]) return false;
  }
  return true;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Drops all-zero rows; false if one of them is violated.
bool prune_zero_rows(System& s) {
  System out;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    bool zero = true;
    for (const auto& c : s.rows[i]) zero = zero && sgn(c) == 0;
    if (zero) {
      if (sgn(s.rhs[i]) < 0) return false;
      continue;
    }
    out.rows.push_back(std::move(s.rows[i]));
    out.rhs.push_back(std::move(s.rhs[i]));
  }
  s = std::move(out);
  return true;
}

// Integral range of the first coordinate over the polyhedron; nullopt if the
// polyhedron has no real point (or the range holds no integer).
std::optional<std::pair<Integer, Integer>> first_coordinate_range(const System& s, std::size_t k) {
  if (k == 1) {
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      Rational bound(s.rhs[i], s.rows[i][0]);
      bound.canonicalize();
      if (sgn(s.rows[i][0]) > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (!lo || !hi) throw Error(ErrorCode::Malformed, "lattice point enumeration over an unbounded set");
    Integer a = ceil_of(*lo), b = floor_of(*hi);
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
  }

  std::optional<Rational> lo, hi;
  std::vector<std::size_t> pick;
  std::vector<Rational> x;
  const std::size_t m = s.rows.size();
  // Iterate over all k-subsets of the rows.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      if (!solve_square(s, pick, x) || !feasible(s, x)) return;
      if (!lo || x[0] < *lo) lo = x[0];
      if (!hi || x[0] > *hi) hi = x[0];
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  if (!lo) return std::nullopt;
  Integer a = ceil_of(*lo), b = floor_of(*hi);
  if (a > b) return std::nullopt;
  return std::make_pair(a, b);
}

class Enumerator {
 public:
  Enumerator(std::size_t dim, Budget& budget, const std::function<bool(const IntVec&)>& visit)
      : point_(dim), budget_(budget), visit_(visit) {}

  bool run(System s, std::size_t depth) {
    budget_.charge();
    if (!prune_zero_rows(s)) return true;
    const std::size_t k = point_.size() - depth;
    if (k == 0) return visit_(point_);
    if (s.rows.empty()) throw Error(ErrorCode::Malformed, "lattice point enumeration over an unbounded set");
    auto range = first_coordinate_range(s, k);
    if (!range) return true;
    for (Integer t = range->first; t <= range->second; ++t) {
      System sub;
      sub.rows.reserve(s.rows.size());
      sub.rhs.reserve(s.rows.size());
      for (std::size_t i = 0; i < s.rows.size(); ++i) {
        sub.rows.emplace_back(s.rows[i].begin() + 1, s.rows[i].end());
        sub.rhs.push_back(s.rhs[i] - s.rows[i][0] * t);
      }
      point_[depth] = t;
      if (!run(std::move(sub), depth + 1)) return false;
    }
    return true;
  }

 private:
  IntVec point_;
  Budget& budget_;
  const std::function<bool(const IntVec&)>& visit_;
};

}  // namespace

bool for_each_lattice_point(const IntMat& g, const IntVec& h, Budget& budget,
                            const std::function<bool(const IntVec&)>& visit) {
  if (g.rows() != h.size()) throw Error(ErrorCode::DimensionMismatch, "inequality system shape mismatch");
  System s;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    s.rows.push_back(g.row(i).coords());
    s.rhs.push_back(h[i]);
  }
  Enumerator e(g.cols(), budget, visit);
  return e.run(std::move(s), 0);
}

std::optional<IntVec> find_lattice_point(const IntMat& g, const IntVec& h, Budget& budget) {
  std::optional<IntVec> found;
  for_each_lattice_point(g, h, budget, [&](const IntVec& x) {
    found = x;
    return false;
  });
  return found;
}

std::vector<IntVec> lattice_points(const IntMat& g, const IntVec& h, Budget& budget) {
  std::vector<IntVec> out;
  for_each_lattice_point(g, h, budget, [&](const IntVec& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

}  // namespace mlfb
