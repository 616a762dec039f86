#include "mlfb/mlfb.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "mlfb/polytope.hpp"

namespace mlfb {

namespace {

bool strictly_below(const IntVec& w, const IntVec& rhs) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] >= rhs[k]) return false;
  return true;
}

IntVec coordinatewise_max(IntVec a, const IntVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] > a[k]) a[k] = b[k];
  return a;
}

// Rows 1..d of A: the bounded rows of the integer programs.
IntMat bounded_rows(const SimplicialData& data) {
  const std::size_t d = data.dim();
  IntMat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = data.matrix()(i + 1, j);
  return m;
}

IntMat adjugate(const IntMat& m) {
  const std::size_t n = m.rows();
  IntMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

// Integral point with a_k x <= bounds_k for k = 1..d, taken along a ray that
// decreases every bounded row.
IntVec feasible_start(const SimplicialData& data, const IntVec& bounds) {
  const std::size_t d = data.dim();
  IntMat rows = bounded_rows(data);
  Integer det = determinant(rows);
  IntVec ones(d);
  for (auto& x : ones) x = 1;
  IntVec ray = adjugate(rows) * ones;  // rows * ray = det * 1
  if (sgn(det) > 0) ray = -ray;
  Integer step = abs(det);
  Integer t = 0;
  for (std::size_t k = 0; k < d; ++k) {
    // need -t*|det| <= bounds_k
    Integer need;
    Integer num = -bounds[k];
    mpz_cdiv_q(need.get_mpz_t(), num.get_mpz_t(), step.get_mpz_t());
    if (need > t) t = need;
  }
  return ray * t;
}

void enumerate_rec(const TestSet& t, std::size_t depth, const std::vector<std::size_t>& allowed,
                   const IntVec& rhs, std::vector<std::size_t>& chosen, std::vector<Body>& out, Budget& budget) {
  budget.charge();
  const SimplicialData& data = t.data();
  const std::size_t d = data.dim();
  const auto entries = t.entries();
  if (depth == d) {
    if (sgn(rhs[0]) != 0) return;
    for (std::size_t k = 1; k <= d; ++k)
      if (sgn(rhs[k]) <= 0) return;
    // 0 must be optimal for the bounds b_k - 1, otherwise this is not the
    // canonical position (or not lattice free).
    for (const auto& u : entries) {
      bool improves = true;
      for (std::size_t k = 1; k <= d && improves; ++k) improves = u.w[k] < rhs[k];
      if (improves) return;
    }
    Body body{rhs, {IntVec::zero(d)}};
    for (std::size_t idx : chosen) body.gens.push_back(entries[idx].z);
    out.push_back(std::move(body));
    return;
  }
  const std::size_t row = depth + 1;
  for (std::size_t idx : allowed) {
    const TestVector& v = entries[idx];
    if (sgn(v.w[row]) <= 0) continue;
    IntVec next_rhs = coordinatewise_max(rhs, v.w);
    bool has_interior = std::any_of(entries.begin(), entries.end(),
                                    [&](const TestVector& u) { return strictly_below(u.w, next_rhs); });
    if (has_interior) continue;
    std::vector<std::size_t> next_allowed;
    for (std::size_t u : allowed)
      if (entries[u].w[row] < v.w[row]) next_allowed.push_back(u);
    chosen.push_back(idx);
    enumerate_rec(t, depth + 1, next_allowed, next_rhs, chosen, out, budget);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<TestVector> h_set(const TestSet& t, std::size_t i, const TestVector& v) {
  if (i < 1 || i > t.data().dim()) {
    throw Error(ErrorCode::IndexOutOfRange, "facet index " + std::to_string(i) + " outside 1..d");
  }
  std::vector<TestVector> out;
  for (const auto& u : t.entries())
    if (u.w[i] < v.w[i]) out.push_back(u);
  return out;
}

std::vector<TestVector> interior_points_from_T(const SimplicialData& data, std::span<const IntVec> points,
                                               const TestSet& t) {
  IntVec rhs = body_rhs(data.matrix(), points);
  std::vector<TestVector> out;
  for (const auto& u : t.entries())
    if (strictly_below(u.w, rhs)) out.push_back(u);
  return out;
}

std::vector<Body> enumerate_candidates(const TestSet& t) {
  Budget unlimited(std::numeric_limits<std::uint64_t>::max());
  return enumerate_candidates(t, unlimited);
}

std::vector<Body> enumerate_candidates(const TestSet& t, Budget& budget) {
  const std::size_t d = t.data().dim();
  std::vector<std::size_t> all(t.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::size_t> chosen;
  std::vector<Body> raw;
  enumerate_rec(t, 0, all, IntVec::zero(d + 1), chosen, raw, budget);

  std::vector<Body> out;
  for (auto& body : raw) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const Body& o) { return o.b == body.b; });
    if (!seen) out.push_back(std::move(body));
  }
  return out;
}

bool is_lattice_free(const SimplicialData& data, const IntVec& b, Budget& budget) {
  if (b.size() != data.matrix().rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");
  IntVec strict = b;
  for (auto& x : strict) x -= 1;
  return !find_lattice_point(data.matrix(), strict, budget).has_value();
}

std::optional<IntVec> facet_witness(const SimplicialData& data, const IntVec& b, std::size_t i,
                                    Budget& budget) {
  const IntMat& a = data.matrix();
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");
  if (i >= a.rows()) throw Error(ErrorCode::IndexOutOfRange, "facet index " + std::to_string(i) + " outside 0..d");
  IntMat g(a.rows() + 1, a.cols());
  IntVec h(a.rows() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) g(r, c) = a(r, c);
    h[r] = r == i ? b[r] : b[r] - 1;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) g(a.rows(), c) = -a(i, c);
  h[a.rows()] = -b[i];
  return find_lattice_point(g, h, budget);
}

MlfbResult filter_maximal(const SimplicialData& data, const std::vector<Body>& candidates, Budget& budget) {
  MlfbResult result;
  result.candidates = candidates;
  result.superset_size = candidates.size();
  for (const auto& body : candidates) {
    std::vector<IntVec> witnesses;
    for (std::size_t i = 0; i < data.matrix().rows(); ++i) {
      auto w = facet_witness(data, body.b, i, budget);
      if (!w) break;
      witnesses.push_back(std::move(*w));
    }
    if (witnesses.size() != data.matrix().rows()) continue;
    if (!is_lattice_free(data, body.b, budget)) continue;
    result.bodies.push_back(body);
    result.witnesses.push_back(std::move(witnesses));
  }

  const IntVec& y = data.annihilator();
  for (const auto& kept : result.bodies) {
    const Integer weight = dot(y, kept.b);
    for (const auto& other : candidates) {
      // Translation preserves y.b, so strict containment needs a larger weight.
      if (dot(y, other.b) <= weight) continue;
      if (find_lattice_point(data.matrix(), other.b - kept.b, budget)) {
        result.containment_consistent = false;
      }
    }
  }
  return result;
}

IntVec translate_body(const SimplicialData& data, const IntVec& b, const IntVec& z) {
  if (b.size() != data.matrix().rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");
  return b + data.image(z);
}

namespace {

IntVec canonical_shift(const TestSet& t, const IntVec& b) {
  const SimplicialData& data = t.data();
  const std::size_t d = data.dim();
  if (b.size() != d + 1) throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");
  IntVec bounds(d);
  for (std::size_t k = 0; k < d; ++k) bounds[k] = b[k + 1] - 1;
  IntVec best = ip_solve(t, bounds, feasible_start(data, bounds));
  int c = cmp(data.matrix().row_dot(0, best), b[0]);
  if (c < 0) throw Error(ErrorCode::NotLatticeFree, "body has an interior lattice point");
  if (c > 0) throw Error(ErrorCode::NotMaximal, "facet 0 has no relative-interior lattice point");
  return best;
}

}  // namespace

IntVec canonicalize(const TestSet& t, const IntVec& b) {
  return translate_body(t.data(), b, -canonical_shift(t, b));
}

Body canonicalize(const TestSet& t, const Body& body) {
  IntVec shift = canonical_shift(t, body.b);
  Body out{translate_body(t.data(), body.b, -shift), {}};
  for (const auto& g : body.gens) out.gens.push_back(g - shift);
  return out;
}

MlfbResult compute_mlfb(const TestSet& t, Budget& budget) {
  std::vector<Body> candidates = enumerate_candidates(t, budget);
  MlfbResult filtered = filter_maximal(t.data(), candidates, budget);

  std::map<IntVec, std::size_t> order;  // canonical b -> index into filtered
  std::vector<Body> canonical;
  std::vector<std::vector<IntVec>> witnesses;
  for (std::size_t k = 0; k < filtered.bodies.size(); ++k) {
    IntVec shift = canonical_shift(t, filtered.bodies[k].b);
    Body body{translate_body(t.data(), filtered.bodies[k].b, -shift), {}};
    if (order.contains(body.b)) continue;
    for (const auto& g : filtered.bodies[k].gens) body.gens.push_back(g - shift);
    std::vector<IntVec> ws;
    for (const auto& w : filtered.witnesses[k]) ws.push_back(w - shift);
    order.emplace(body.b, canonical.size());
    canonical.push_back(std::move(body));
    witnesses.push_back(std::move(ws));
  }

  MlfbResult result;
  result.candidates = std::move(candidates);
  result.superset_size = filtered.superset_size;
  result.containment_consistent = filtered.containment_consistent;
  for (const auto& [b, idx] : order) {
    result.bodies.push_back(std::move(canonical[idx]));
    result.witnesses.push_back(std::move(witnesses[idx]));
  }
  return result;
}

}  // namespace mlfb
