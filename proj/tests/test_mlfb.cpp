#include <doctest.h>

#include <algorithm>
#include <random>

#include "mlfb/mlfb.hpp"
#include "oracles.hpp"

using namespace mlfb;

namespace {

const IntMat kNongen{{-1, 2}, {1, -3}, {2, -1}};

std::vector<IntVec> bs(const MlfbResult& r) {
  std::vector<IntVec> out;
  for (const auto& b : r.bodies) out.push_back(b.b);
  return out;
}

MlfbResult run(const SimplicialData& data) {
  Budget budget(kDefaultBudget);
  return compute_mlfb(compute_test_set(data), budget);
}

std::vector<SimplicialData> random_simplicial(std::mt19937_64& rng, int count, long range) {
  std::uniform_int_distribution<long> entry(-range, range);
  std::vector<SimplicialData> out;
  while (static_cast<int>(out.size()) < count) {
    IntMat a(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i, j) = entry(rng);
    try {
      out.emplace_back(a);
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("h_set") {
  SimplicialData d1(IntMat{{3}, {-2}}, IntVec{2, 3});
  TestSet t1 = compute_test_set(d1);
  CHECK(h_set(t1, 1, t1[0]).empty());
  CHECK_THROWS_AS(h_set(t1, 0, t1[0]), Error);
  CHECK_THROWS_AS(h_set(t1, 2, t1[0]), Error);

  TestSet t = compute_test_set(SimplicialData::from_weights(IntVec{12, 13, 17}));
  auto it = std::find_if(t.entries().begin(), t.entries().end(),
                         [](const TestVector& v) { return v.w == IntVec{-4, 5, -1}; });
  REQUIRE(it != t.entries().end());
  auto h = h_set(t, 1, *it);
  CHECK(h.size() == 2);
  for (const auto& v : t.entries()) {
    auto lowest = h_set(t, 2, v);
    bool minimal = std::none_of(t.entries().begin(), t.entries().end(),
                                [&](const TestVector& u) { return u.w[2] < v.w[2]; });
    CHECK(lowest.empty() == minimal);
  }
}

TEST_CASE("interior_points_from_T") {
  SimplicialData d1(IntMat{{3}, {-2}}, IntVec{2, 3});
  TestSet t1 = compute_test_set(d1);
  std::vector<IntVec> origin{IntVec{0}};
  CHECK(interior_points_from_T(d1, origin, t1).empty());
  std::vector<IntVec> pts{IntVec{0}, IntVec{-1}};
  CHECK(interior_points_from_T(d1, pts, t1).empty());

  SimplicialData data = SimplicialData::from_weights(IntVec{12, 13, 17});
  TestSet t = compute_test_set(data);
  std::vector<IntVec> small{IntVec::zero(2)};
  CHECK(interior_points_from_T(data, small, t).empty());
  std::vector<IntVec> grow{IntVec::zero(2), t[0].z};
  std::vector<IntVec> more = grow;
  more.push_back(t[1].z);
  more.push_back(t[2].z);
  CHECK(interior_points_from_T(data, grow, t).size() <= interior_points_from_T(data, more, t).size());
}

TEST_CASE("(2,3): one body") {
  SimplicialData data = SimplicialData::from_weights(IntVec{2, 3});
  TestSet t = compute_test_set(data);
  auto candidates = enumerate_candidates(t);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].b == IntVec{0, 2});
  CHECK(candidates[0].gens == std::vector<IntVec>{IntVec{0}, IntVec{-1}});

  Budget budget(1000);
  CHECK(is_lattice_free(data, IntVec{0, 2}, budget));
  CHECK_FALSE(is_lattice_free(data, IntVec{0, 4}, budget));
  CHECK(facet_witness(data, IntVec{0, 2}, 0, budget) == IntVec{0});
  CHECK(facet_witness(data, IntVec{0, 2}, 1, budget) == IntVec{-1});

  MlfbResult r = compute_mlfb(t, budget);
  CHECK(bs(r) == std::vector<IntVec>{IntVec{0, 2}});
  CHECK(canonicalize(t, IntVec{0, 2}) == IntVec{0, 2});
  CHECK(translate_body(data, IntVec{0, 2}, IntVec{1}) == IntVec{3, 0});
  CHECK(translate_body(data, IntVec{0, 2}, IntVec{0}) == IntVec{0, 2});
}

TEST_CASE("(12,13,17): the two canonical bodies") {
  SimplicialData data = SimplicialData::from_weights(IntVec{12, 13, 17});
  TestSet t = compute_test_set(data);
  auto candidates = enumerate_candidates(t);
  auto has = [&](const IntVec& b) {
    return std::any_of(candidates.begin(), candidates.end(), [&](const Body& c) { return c.b == b; });
  };
  CHECK(has(IntVec{0, 5, 2}));
  CHECK(has(IntVec{0, 2, 3}));

  Budget budget(kDefaultBudget);
  MlfbResult r = compute_mlfb(t, budget);
  CHECK(bs(r) == std::vector<IntVec>{IntVec{0, 2, 3}, IntVec{0, 5, 2}});
  CHECK(r.containment_consistent);
  for (std::size_t i = 0; i < 3; ++i) CHECK(facet_witness(data, IntVec{0, 5, 2}, i, budget).has_value());
}

TEST_CASE("nongen example") {
  SimplicialData data(kNongen);
  CHECK(data.annihilator() == IntVec{5, 3, 1});
  TestSet t = compute_test_set(data);
  Budget budget(kDefaultBudget);
  CHECK(is_lattice_free(data, IntVec{0, 1, 5}, budget));

  auto candidates = enumerate_candidates(t);
  CHECK(std::any_of(candidates.begin(), candidates.end(),
                    [&](const Body& c) { return oracle::same_orbit(kNongen, c.b, IntVec{0, 1, 5}); }));

  MlfbResult r = compute_mlfb(t, budget);
  REQUIRE(r.bodies.size() == 1);
  CHECK(oracle::same_orbit(kNongen, r.bodies[0].b, IntVec{0, 1, 5}));

  // Both translates with 0 in the relative interior of facet 0 give the same representative.
  std::vector<IntVec> zero_on_f0;
  for (long x = -6; x <= 6; ++x) {
    for (long y = -6; y <= 6; ++y) {
      IntVec b = translate_body(data, IntVec{0, 1, 5}, IntVec{x, y});
      if (sgn(b[0]) == 0 && sgn(b[1]) > 0 && sgn(b[2]) > 0) zero_on_f0.push_back(b);
    }
  }
  CHECK(zero_on_f0.size() == 2);
  for (const auto& b : zero_on_f0) CHECK(canonicalize(t, b) == r.bodies[0].b);
}

TEST_CASE("canonicalize rejects bodies that are not maximal lattice free") {
  SimplicialData data = SimplicialData::from_weights(IntVec{2, 3});
  TestSet t = compute_test_set(data);
  try {
    canonicalize(t, IntVec{0, 4});
    FAIL("expected NotLatticeFree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLatticeFree);
  }
  try {
    canonicalize(t, IntVec{-1, 2});
    FAIL("expected NotMaximal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMaximal);
  }
}

TEST_CASE("soundness and canonical invariance on random weights") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> shift(-25, 25);
  for (std::size_t n : {3, 4}) {
    for (int trial = 0; trial < 8; ++trial) {
      SimplicialData data = SimplicialData::from_weights(oracle::to_vec(oracle::random_weights(rng, n, 2, 40)));
      TestSet t = compute_test_set(data);
      Budget budget(kDefaultBudget);
      MlfbResult r = compute_mlfb(t, budget);
      REQUIRE(!r.bodies.empty());
      CHECK(r.containment_consistent);
      CHECK(std::is_sorted(r.bodies.begin(), r.bodies.end(),
                           [](const Body& x, const Body& y) { return x.b < y.b; }));
      for (std::size_t k = 0; k < r.bodies.size(); ++k) {
        const Body& body = r.bodies[k];
        CHECK(sgn(body.b[0]) == 0);
        CHECK(body.b == body_rhs(data.matrix(), body.gens));
        CHECK(is_lattice_free(data, body.b, budget));
        CHECK(oracle::is_maximal_lattice_free(data.matrix(), body.b));
        REQUIRE(r.witnesses[k].size() == n);
        for (std::size_t i = 0; i < n; ++i) {
          IntVec w = data.image(r.witnesses[k][i]);
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) CHECK(w[j] == body.b[j]);
            else CHECK(w[j] < body.b[j]);
          }
        }
        for (int s = 0; s < 20; ++s) {
          IntVec z(n - 1);
          for (auto& x : z) x = shift(rng);
          IntVec moved = translate_body(data, body.b, z);
          CHECK(dot(data.annihilator(), moved) == dot(data.annihilator(), body.b));
          CHECK(canonicalize(t, moved) == body.b);
        }
      }
    }
  }
}

TEST_CASE("completeness against an exhaustive box search") {
  std::mt19937_64 rng(67);
  std::vector<SimplicialData> cases = random_simplicial(rng, 12, 6);
  cases.emplace_back(kNongen);
  cases.push_back(SimplicialData::from_weights(IntVec{3, 5, 7}));
  cases.push_back(SimplicialData::from_weights(IntVec{4, 7, 9}));
  for (const auto& data : cases) {
    MlfbResult r = run(data);
    long limit = 4;
    for (const auto& b : r.bodies)
      for (const auto& x : b.b) limit = std::max(limit, 2 * x.get_si() + 2);
    auto want = oracle::maximal_bodies(data.matrix(), limit);
    CHECK(want.size() == r.bodies.size());
    for (const auto& w : want) {
      bool found = std::any_of(r.bodies.begin(), r.bodies.end(),
                               [&](const Body& b) { return oracle::same_orbit(data.matrix(), b.b, w); });
      CHECK_MESSAGE(found, "missing orbit of " << w << " for A = " << data.matrix());
    }
  }
}

TEST_CASE("filter_maximal drops a non-maximal candidate") {
  SimplicialData data = SimplicialData::from_weights(IntVec{2, 3});
  Budget budget(1000);
  std::vector<Body> candidates{Body{IntVec{0, 1}, {IntVec{0}}}, Body{IntVec{0, 2}, {IntVec{0}, IntVec{-1}}}};
  MlfbResult r = filter_maximal(data, candidates, budget);
  CHECK(r.superset_size == 2);
  CHECK(bs(r) == std::vector<IntVec>{IntVec{0, 2}});
}

TEST_CASE("a body whose generating tuple is affinely dependent") {
  // The only tuple from T reaching b = (0,7,1,1) is linearly dependent, yet the
  // body is a full simplex and maximal.
  SimplicialData data = SimplicialData::from_weights(IntVec{23, 36, 57, 73});
  MlfbResult r = run(data);
  CHECK(oracle::is_maximal_lattice_free(data.matrix(), IntVec{0, 7, 1, 1}));
  CHECK(std::any_of(r.bodies.begin(), r.bodies.end(),
                    [&](const Body& b) { return oracle::same_orbit(data.matrix(), b.b, IntVec{0, 7, 1, 1}); }));
}

TEST_CASE("budget exhaustion propagates") {
  SimplicialData data = SimplicialData::from_weights(IntVec{12, 13, 17});
  TestSet t = compute_test_set(data);
  Budget tiny(2);
  try {
    compute_mlfb(t, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}
