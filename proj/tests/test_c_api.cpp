#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "mlfb/mlfb_c.h"

namespace {

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  mlfb_free_string(s);
  return out;
}

struct Instance {
  mlfb_instance* p = nullptr;
  ~Instance() { mlfb_instance_free(p); }
};

struct Tests {
  mlfb_testset* p = nullptr;
  ~Tests() { mlfb_testset_free(p); }
};

struct Bodies {
  mlfb_bodies* p = nullptr;
  ~Bodies() { mlfb_bodies_free(p); }
};

}  // namespace

TEST_CASE("status strings and defaults") {
  CHECK(std::string(mlfb_status_string(MLFB_OK)) != "");
  CHECK(std::string(mlfb_status_string(MLFB_ERR_BUDGET)) != std::string(mlfb_status_string(MLFB_OK)));
  CHECK(mlfb_default_budget() == 10000000u);
  mlfb_free_string(nullptr);
}

TEST_CASE("frobenius through every method") {
  for (mlfb_method m : {MLFB_METHOD_AUTO, MLFB_METHOD_MLFB, MLFB_METHOD_BRAUER_SHOCKLEY, MLFB_METHOD_NAIVE,
                        MLFB_METHOD_SS3}) {
    char* g = nullptr;
    REQUIRE(mlfb_frobenius("12,13,17", m, mlfb_default_budget(), &g) == MLFB_OK);
    CHECK(take(g) == "57");
  }
  char* g = nullptr;
  REQUIRE(mlfb_frobenius("1,5", MLFB_METHOD_MLFB, 1000, &g) == MLFB_OK);
  CHECK(take(g) == "-1");
}

TEST_CASE("errors set a status and a message") {
  char* g = nullptr;
  CHECK(mlfb_frobenius("6,10", MLFB_METHOD_MLFB, 1000, &g) == MLFB_ERR_NON_COPRIME);
  CHECK(g == nullptr);
  CHECK(std::string(mlfb_last_error()).find("non-coprime") != std::string::npos);
  CHECK(mlfb_frobenius("6,0,5", MLFB_METHOD_MLFB, 1000, &g) == MLFB_ERR_NON_POSITIVE);
  CHECK(mlfb_frobenius("6,x", MLFB_METHOD_MLFB, 1000, &g) == MLFB_ERR_MALFORMED);
  CHECK(mlfb_frobenius("3,5,7,11", MLFB_METHOD_SS3, 1000, &g) == MLFB_ERR_INVALID_ARGUMENT);
  CHECK(mlfb_frobenius("12,13,17", MLFB_METHOD_NAIVE, 5, &g) == MLFB_ERR_BUDGET);
  CHECK(mlfb_frobenius(nullptr, MLFB_METHOD_MLFB, 1000, &g) == MLFB_ERR_INVALID_ARGUMENT);
  CHECK(mlfb_frobenius("12,13,17", MLFB_METHOD_MLFB, 1000, nullptr) == MLFB_ERR_INVALID_ARGUMENT);
  CHECK(mlfb_frobenius("12,13,17", static_cast<mlfb_method>(42), 1000, &g) == MLFB_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);

  mlfb_instance* inst = nullptr;
  CHECK(mlfb_instance_from_matrix("3 2\n1 0\n0 1\n1 1\n", &inst) == MLFB_ERR_NOT_SIMPLICIAL);
  CHECK(inst == nullptr);
  CHECK(mlfb_instance_from_matrix("3 2\n1 0\n", &inst) == MLFB_ERR_MALFORMED);
  CHECK(std::string(mlfb_last_error()).find("expected 3 rows") != std::string::npos);
  size_t n = 0;
  CHECK(mlfb_instance_dim(nullptr, &n) == MLFB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("instances, test sets and bodies for (12,13,17)") {
  Instance inst;
  REQUIRE(mlfb_instance_from_vector("12,13,17", &inst.p) == MLFB_OK);
  size_t d = 0;
  REQUIRE(mlfb_instance_dim(inst.p, &d) == MLFB_OK);
  CHECK(d == 2);
  char* y = nullptr;
  REQUIRE(mlfb_instance_annihilator(inst.p, &y) == MLFB_OK);
  CHECK(take(y) == "12,13,17");
  char* m = nullptr;
  REQUIRE(mlfb_instance_matrix(inst.p, &m) == MLFB_OK);
  CHECK(take(m).rfind("3 2\n", 0) == 0);

  Tests starved;
  CHECK(mlfb_testset_compute(inst.p, 1, &starved.p) == MLFB_ERR_BUDGET);
  CHECK(starved.p == nullptr);

  Tests t;
  REQUIRE(mlfb_testset_compute(inst.p, mlfb_default_budget(), &t.p) == MLFB_OK);
  size_t size = 0;
  REQUIRE(mlfb_testset_size(t.p, &size) == MLFB_OK);
  CHECK(size == 3);
  std::string images;
  for (size_t i = 0; i < size; ++i) {
    char *z = nullptr, *w = nullptr;
    REQUIRE(mlfb_testset_entry(t.p, i, &z, &w) == MLFB_OK);
    take(z);
    images += take(w) + ";";
  }
  CHECK(images.find("-4,5,-1") != std::string::npos);
  CHECK(images.find("-1,-3,3") != std::string::npos);
  CHECK(images.find("-5,2,2") != std::string::npos);
  char *z = nullptr, *w = nullptr;
  CHECK(mlfb_testset_entry(t.p, size, &z, &w) == MLFB_ERR_INVALID_ARGUMENT);

  Bodies b;
  REQUIRE(mlfb_bodies_compute(t.p, mlfb_default_budget(), &b.p) == MLFB_OK);
  size_t count = 0, superset = 0;
  REQUIRE(mlfb_bodies_count(b.p, &count) == MLFB_OK);
  REQUIRE(mlfb_bodies_superset_size(b.p, &superset) == MLFB_OK);
  CHECK(count == 2);
  CHECK(superset >= count);
  int consistent = 0;
  REQUIRE(mlfb_bodies_containment_consistent(b.p, &consistent) == MLFB_OK);
  CHECK(consistent == 1);
  std::string rhs[2];
  for (size_t i = 0; i < count; ++i) {
    char *bb = nullptr, *gens = nullptr, *wit = nullptr, *v = nullptr;
    REQUIRE(mlfb_bodies_body(b.p, i, &bb, &gens, &wit, &v) == MLFB_OK);
    rhs[i] = take(bb);
    CHECK(!take(gens).empty());
    CHECK(std::count(wit, wit + std::string(wit).size(), ';') == 2);
    take(wit);
    take(v);
    int lf = 0, all = 0;
    REQUIRE(mlfb_bodies_verify(b.p, i, mlfb_default_budget(), &lf, &all) == MLFB_OK);
    CHECK(lf == 1);
    CHECK(all == 1);
  }
  CHECK(rhs[0] == "0,2,3");
  CHECK(rhs[1] == "0,5,2");

  char* c = nullptr;
  REQUIRE(mlfb_canonicalize(t.p, "0,5,2", &c) == MLFB_OK);
  CHECK(take(c) == "0,5,2");
  CHECK(mlfb_canonicalize(t.p, "0,50,50", &c) == MLFB_ERR_NOT_LATTICE_FREE);
  CHECK(mlfb_canonicalize(t.p, "0,5", &c) == MLFB_ERR_INVALID_ARGUMENT);

  char* g = nullptr;
  Bodies again;
  REQUIRE(mlfb_frobenius_mlfb(inst.p, mlfb_default_budget(), &g, &again.p) == MLFB_OK);
  CHECK(take(g) == "57");
}

TEST_CASE("matrix instance") {
  Instance inst;
  REQUIRE(mlfb_instance_from_matrix("3 2\n-1 2\n1 -3\n2 -1\n", &inst.p) == MLFB_OK);
  char* y = nullptr;
  REQUIRE(mlfb_instance_annihilator(inst.p, &y) == MLFB_OK);
  CHECK(take(y) == "5,3,1");
  char* g = nullptr;
  mlfb_bodies* b = nullptr;
  CHECK(mlfb_frobenius_mlfb(inst.p, 1000, &g, &b) == MLFB_ERR_INVALID_ARGUMENT);
  Tests t;
  REQUIRE(mlfb_testset_compute(inst.p, mlfb_default_budget(), &t.p) == MLFB_OK);
  Bodies bodies;
  REQUIRE(mlfb_bodies_compute(t.p, mlfb_default_budget(), &bodies.p) == MLFB_OK);
  size_t count = 0;
  REQUIRE(mlfb_bodies_count(bodies.p, &count) == MLFB_OK);
  CHECK(count == 1);
  Bodies none;
  CHECK(mlfb_bodies_compute(t.p, 1, &none.p) == MLFB_ERR_BUDGET);
}

TEST_CASE("ss3, gaps and lattice utilities") {
  char *g = nullptr, *term = nullptr, *u = nullptr, *b1 = nullptr, *b2 = nullptr;
  size_t steps = 0;
  int fell = 1;
  REQUIRE(mlfb_frobenius_ss3("12,13,17", 1000, &g, &term, &u, &b1, &b2, &steps, &fell) == MLFB_OK);
  CHECK(take(g) == "57");
  CHECK(take(term) == "3 2\n-4 -1\n5 -3\n-1 3\n");
  take(u);
  CHECK(take(b1) == "0,5,2");
  CHECK(take(b2) == "0,2,3");
  CHECK(steps == 3);
  CHECK(fell == 0);

  char* gaps = nullptr;
  REQUIRE(mlfb_semigroup_gaps("6,10,15", 100000, &gaps) == MLFB_OK);
  CHECK(take(gaps) == "1,2,3,4,5,7,8,9,11,13,14,17,19,23,29");

  char* k = nullptr;
  REQUIRE(mlfb_kernel_basis("2,3", &k) == MLFB_OK);
  std::string ks = take(k);
  CHECK((ks == "2 1\n3\n-2\n" || ks == "2 1\n-3\n2\n"));

  char *h = nullptr, *v = nullptr;
  REQUIRE(mlfb_hnf("1 2\n4 6\n", &h, &v) == MLFB_OK);
  CHECK(take(h) == "1 2\n2 0\n");
  take(v);
}

TEST_CASE("big integers cross the boundary") {
  char* g = nullptr;
  REQUIRE(mlfb_frobenius("1000000007,1000000009", MLFB_METHOD_MLFB, 1000, &g) == MLFB_OK);
  CHECK(take(g) == "1000000014000000047");
}
