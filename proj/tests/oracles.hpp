// Brute-force reference implementations used only by the tests. They share no
// code with the library algorithms beyond the IntVec/IntMat containers.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "mlfb/lattice.hpp"

namespace oracle {

using mlfb::IntMat;
using mlfb::IntVec;
using mlfb::Integer;

// Solves the square system rows * x = rhs over Q; nullopt if singular.
inline std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Integer bounding box [lo, hi] of the simplex {x : A x <= h} (A is (d+1) x d).
// Empty optional when the simplex is empty.
inline std::optional<std::pair<IntVec, IntVec>> simplex_box(const IntMat& a, const IntVec& h) {
  const std::size_t d = a.cols();
  std::vector<std::vector<mpq_class>> vertices;
  for (std::size_t skip = 0; skip < a.rows(); ++skip) {
    std::vector<std::vector<mpq_class>> m;
    std::vector<mpq_class> rhs;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == skip) continue;
      std::vector<mpq_class> row;
      for (std::size_t c = 0; c < d; ++c) row.emplace_back(a(r, c));
      m.push_back(std::move(row));
      rhs.emplace_back(h[r]);
    }
    auto x = solve(m, rhs);
    if (!x) continue;
    mpq_class lhs = 0;
    for (std::size_t c = 0; c < d; ++c) lhs += mpq_class(a(skip, c)) * (*x)[c];
    if (lhs <= mpq_class(h[skip])) vertices.push_back(*x);
  }
  if (vertices.empty()) return std::nullopt;
  IntVec lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    mpq_class mn = vertices[0][c], mx = vertices[0][c];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    mpz_fdiv_q(lo[c].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(hi[c].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  return std::make_pair(lo, hi);
}

inline void for_each_in_box(const IntVec& lo, const IntVec& hi, const std::function<void(const IntVec&)>& f) {
  IntVec z = lo;
  for (;;) {
    f(z);
    std::size_t k = 0;
    while (k < z.size() && z[k] == hi[k]) {
      z[k] = lo[k];
      ++k;
    }
    if (k == z.size()) return;
    ++z[k];
  }
}

// All integral points of {x : A x <= h}.
inline std::vector<IntVec> points(const IntMat& a, const IntVec& h) {
  std::vector<IntVec> out;
  auto box = simplex_box(a, h);
  if (!box) return out;
  for_each_in_box(box->first, box->second, [&](const IntVec& z) {
    IntVec w = a * z;
    for (std::size_t r = 0; r < w.size(); ++r)
      if (w[r] > h[r]) return;
    out.push_back(z);
  });
  return out;
}

inline bool lex_less(const IntVec& u, const IntVec& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return false;
}

// Lexicographic minimum of A z over integral z with a_k z <= bounds_{k-1}
// (k >= 1) and A z lex-below-or-equal A x0; the feasible set is a simplex.
inline IntVec ip_optimum(const IntMat& a, const IntVec& bounds, const IntVec& x0) {
  IntVec h(a.rows());
  h[0] = a.row_dot(0, x0);
  for (std::size_t k = 1; k < a.rows(); ++k) h[k] = bounds[k - 1];
  IntVec best = x0;
  IntVec best_w = a * x0;
  for (const auto& z : points(a, h)) {
    IntVec w = a * z;
    if (lex_less(w, best_w)) {
      best = z;
      best_w = w;
    }
  }
  return best;
}

// Lattice-free in the open sense and a relative-interior point on every facet.
inline bool is_maximal_lattice_free(const IntMat& a, const IntVec& b) {
  std::vector<bool> facet(a.rows(), false);
  for (const auto& z : points(a, b)) {
    IntVec w = a * z;
    std::size_t tight = 0, where = 0;
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (w[r] == b[r]) {
        ++tight;
        where = r;
      }
    }
    if (tight == 0) return false;
    if (tight == 1) facet[where] = true;
  }
  return std::all_of(facet.begin(), facet.end(), [](bool x) { return x; });
}

// b' - b in A Z^d.
inline bool same_orbit(const IntMat& a, const IntVec& b, const IntVec& c) {
  const std::size_t d = a.cols();
  IntVec diff = c - b;
  std::vector<std::vector<mpq_class>> m;
  std::vector<mpq_class> rhs;
  for (std::size_t r = 1; r <= d; ++r) {
    std::vector<mpq_class> row;
    for (std::size_t k = 0; k < d; ++k) row.emplace_back(a(r, k));
    m.push_back(std::move(row));
    rhs.emplace_back(diff[r]);
  }
  auto x = solve(m, rhs);
  if (!x) return false;
  IntVec z(d);
  for (std::size_t k = 0; k < d; ++k) {
    if ((*x)[k].get_den() != 1) return false;
    z[k] = (*x)[k].get_num();
  }
  return a * z == diff;
}

// Maximal lattice-free bodies with b_0 = 0 and 1 <= b_i <= limit, one per orbit.
inline std::vector<IntVec> maximal_bodies(const IntMat& a, long limit) {
  const std::size_t d = a.cols();
  std::vector<IntVec> reps;
  IntVec lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    lo[k] = 1;
    hi[k] = limit;
  }
  for_each_in_box(lo, hi, [&](const IntVec& tail) {
    IntVec b(d + 1);
    for (std::size_t k = 0; k < d; ++k) b[k + 1] = tail[k];
    if (!is_maximal_lattice_free(a, b)) return;
    for (const auto& r : reps)
      if (same_orbit(a, r, b)) return;
    reps.push_back(b);
  });
  return reps;
}

// Largest integer outside the semigroup, by dynamic programming up to
// min(a) * max(a); -1 if there is none.
inline long frobenius(const std::vector<long>& a) {
  long lo = *std::min_element(a.begin(), a.end());
  long hi = *std::max_element(a.begin(), a.end());
  long limit = lo * hi + 1;
  std::vector<char> rep(limit + 1, 0);
  rep[0] = 1;
  long g = -1;
  for (long k = 1; k <= limit; ++k) {
    for (long x : a)
      if (x <= k && rep[k - x]) rep[k] = 1;
    if (!rep[k]) g = k;
  }
  return g;
}

inline long gcd_all(const std::vector<long>& a) {
  long g = 0;
  for (long x : a) g = std::gcd(g, x);
  return g;
}

// Distinct coprime weights in [lo, hi], sorted.
inline std::vector<long> random_weights(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  for (;;) {
    std::vector<long> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(dist(rng));
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) continue;
    if (gcd_all(a) == 1) return a;
  }
}

inline IntVec to_vec(const std::vector<long>& a) {
  std::vector<Integer> v;
  for (long x : a) v.emplace_back(x);
  return IntVec(std::move(v));
}

}  // namespace oracle
