#include "mlfb/mlfb_c.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "mlfb/frobenius.hpp"
#include "mlfb/io.hpp"
#include "mlfb/mlfb.hpp"
#include "mlfb/testset.hpp"

using namespace mlfb;

struct mlfb_instance {
  SimplicialData data;
};

struct mlfb_testset {
  TestSet t;
};

struct mlfb_bodies {
  SimplicialData data;
  MlfbResult result;
};

namespace {

thread_local std::string last_error;

mlfb_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed:
      return MLFB_ERR_MALFORMED;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotUnimodular:
      return MLFB_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonCoprime:
      return MLFB_ERR_NON_COPRIME;
    case ErrorCode::NonPositive:
      return MLFB_ERR_NON_POSITIVE;
    case ErrorCode::NotSimplicial:
      return MLFB_ERR_NOT_SIMPLICIAL;
    case ErrorCode::Infeasible:
      return MLFB_ERR_INFEASIBLE;
    case ErrorCode::NotLatticeFree:
      return MLFB_ERR_NOT_LATTICE_FREE;
    case ErrorCode::NotMaximal:
      return MLFB_ERR_NOT_MAXIMAL;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::BoxTooLarge:
      return MLFB_ERR_BUDGET;
    case ErrorCode::ReductionStuck:
      return MLFB_ERR_INTERNAL;
  }
  return MLFB_ERR_INTERNAL;
}

mlfb_status fail(mlfb_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
mlfb_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return MLFB_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MLFB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MLFB_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join(const std::vector<IntVec>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ';';
    s += format_vector(vs[i]);
  }
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, std::string("null argument: ") + what);
}

FrobeniusInstance weights_from(const char* text) {
  require(text, "weights");
  return FrobeniusInstance(parse_vector(text));
}

}  // namespace

extern "C" {

const char* mlfb_status_string(mlfb_status status) {
  switch (status) {
    case MLFB_OK:
      return "ok";
    case MLFB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case MLFB_ERR_MALFORMED:
      return "malformed input";
    case MLFB_ERR_NON_COPRIME:
      return "non-coprime weights";
    case MLFB_ERR_NON_POSITIVE:
      return "non-positive weights";
    case MLFB_ERR_NOT_SIMPLICIAL:
      return "matrix is not simplicial";
    case MLFB_ERR_INFEASIBLE:
      return "infeasible";
    case MLFB_ERR_NOT_LATTICE_FREE:
      return "body is not lattice free";
    case MLFB_ERR_NOT_MAXIMAL:
      return "body is not maximal";
    case MLFB_ERR_BUDGET:
      return "budget exhausted";
    case MLFB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* mlfb_last_error(void) { return last_error.c_str(); }

void mlfb_free_string(char* s) { std::free(s); }

uint64_t mlfb_default_budget(void) { return kDefaultBudget; }

mlfb_status mlfb_instance_from_vector(const char* text, mlfb_instance** out) {
  return guarded([&] {
    require(out, "out");
    FrobeniusInstance inst = weights_from(text);
    *out = new mlfb_instance{SimplicialData::from_weights(inst.weights())};
  });
}

mlfb_status mlfb_instance_from_matrix(const char* text, mlfb_instance** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = new mlfb_instance{SimplicialData(parse_matrix(text))};
  });
}

void mlfb_instance_free(mlfb_instance* inst) { delete inst; }

mlfb_status mlfb_instance_dim(const mlfb_instance* inst, size_t* out) {
  return guarded([&] {
    require(inst && out, "inst/out");
    *out = inst->data.dim();
  });
}

mlfb_status mlfb_instance_matrix(const mlfb_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "inst/out");
    *out = dup(format_matrix(inst->data.matrix()));
  });
}

mlfb_status mlfb_instance_annihilator(const mlfb_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "inst/out");
    *out = dup(format_vector(inst->data.annihilator()));
  });
}

mlfb_status mlfb_testset_compute(const mlfb_instance* inst, uint64_t budget, mlfb_testset** out) {
  return guarded([&] {
    require(inst && out, "inst/out");
    Budget work(budget);
    *out = new mlfb_testset{compute_test_set(inst->data, work)};
  });
}

void mlfb_testset_free(mlfb_testset* t) { delete t; }

mlfb_status mlfb_testset_size(const mlfb_testset* t, size_t* out) {
  return guarded([&] {
    require(t && out, "t/out");
    *out = t->t.size();
  });
}

mlfb_status mlfb_testset_entry(const mlfb_testset* t, size_t i, char** z, char** w) {
  return guarded([&] {
    require(t && z && w, "t/z/w");
    if (i >= t->t.size()) throw Error(ErrorCode::IndexOutOfRange, "test set index out of range");
    std::string zs = format_vector(t->t[i].z), ws = format_vector(t->t[i].w);
    char* zc = dup(zs);
    char* wc = dup(ws);
    *z = zc;
    *w = wc;
  });
}

mlfb_status mlfb_canonicalize(const mlfb_testset* t, const char* b, char** out) {
  return guarded([&] {
    require(t && b && out, "t/b/out");
    *out = dup(format_vector(canonicalize(t->t, parse_vector(b))));
  });
}

mlfb_status mlfb_bodies_compute(const mlfb_testset* t, uint64_t budget, mlfb_bodies** out) {
  return guarded([&] {
    require(t && out, "t/out");
    Budget work(budget);
    MlfbResult r = compute_mlfb(t->t, work);
    *out = new mlfb_bodies{t->t.data(), std::move(r)};
  });
}

void mlfb_bodies_free(mlfb_bodies* bodies) { delete bodies; }

mlfb_status mlfb_bodies_count(const mlfb_bodies* bodies, size_t* out) {
  return guarded([&] {
    require(bodies && out, "bodies/out");
    *out = bodies->result.bodies.size();
  });
}

mlfb_status mlfb_bodies_superset_size(const mlfb_bodies* bodies, size_t* out) {
  return guarded([&] {
    require(bodies && out, "bodies/out");
    *out = bodies->result.superset_size;
  });
}

mlfb_status mlfb_bodies_containment_consistent(const mlfb_bodies* bodies, int* out) {
  return guarded([&] {
    require(bodies && out, "bodies/out");
    *out = bodies->result.containment_consistent ? 1 : 0;
  });
}

mlfb_status mlfb_bodies_body(const mlfb_bodies* bodies, size_t i, char** b, char** gens, char** witnesses,
                             char** y_dot_b) {
  return guarded([&] {
    require(bodies && b && gens && witnesses && y_dot_b, "bodies/outputs");
    const auto& r = bodies->result;
    if (i >= r.bodies.size()) throw Error(ErrorCode::IndexOutOfRange, "body index out of range");
    std::string strs[4] = {format_vector(r.bodies[i].b), join(r.bodies[i].gens), join(r.witnesses[i]),
                           dot(bodies->data.annihilator(), r.bodies[i].b).get_str()};
    char* outs[4] = {};
    try {
      for (int k = 0; k < 4; ++k) outs[k] = dup(strs[k]);
    } catch (...) {
      for (char* p : outs) std::free(p);
      throw;
    }
    *b = outs[0];
    *gens = outs[1];
    *witnesses = outs[2];
    *y_dot_b = outs[3];
  });
}

mlfb_status mlfb_bodies_verify(const mlfb_bodies* bodies, size_t i, uint64_t budget, int* lattice_free,
                               int* all_facets_witnessed) {
  return guarded([&] {
    require(bodies && lattice_free && all_facets_witnessed, "bodies/outputs");
    const auto& r = bodies->result;
    if (i >= r.bodies.size()) throw Error(ErrorCode::IndexOutOfRange, "body index out of range");
    Budget work(budget);
    const IntVec& b = r.bodies[i].b;
    bool free = is_lattice_free(bodies->data, b, work);
    bool witnessed = true;
    for (std::size_t k = 0; k < b.size() && witnessed; ++k) {
      witnessed = facet_witness(bodies->data, b, k, work).has_value();
    }
    *lattice_free = free ? 1 : 0;
    *all_facets_witnessed = witnessed ? 1 : 0;
  });
}

mlfb_status mlfb_frobenius(const char* weights, mlfb_method method, uint64_t budget, char** g) {
  return guarded([&] {
    require(g, "g");
    FrobeniusInstance inst = weights_from(weights);
    Integer result;
    switch (method) {
      case MLFB_METHOD_AUTO:
        if (inst.size() == 3) {
          const auto& a = inst.weights();
          result = frobenius_ss3(a[0], a[1], a[2], budget).g;
        } else {
          result = frobenius_by_mlfb(inst, budget).g;
        }
        break;
      case MLFB_METHOD_MLFB:
        result = frobenius_by_mlfb(inst, budget).g;
        break;
      case MLFB_METHOD_BRAUER_SHOCKLEY:
        result = frobenius_brauer_shockley(inst, budget);
        break;
      case MLFB_METHOD_NAIVE:
        result = frobenius_naive(inst, budget);
        break;
      case MLFB_METHOD_SS3: {
        if (inst.size() != 3) throw Error(ErrorCode::DimensionMismatch, "ss3 needs exactly three weights");
        const auto& a = inst.weights();
        result = frobenius_ss3(a[0], a[1], a[2], budget).g;
        break;
      }
      default:
        throw Error(ErrorCode::DimensionMismatch, "unknown method");
    }
    *g = dup(result.get_str());
  });
}

mlfb_status mlfb_frobenius_mlfb(const mlfb_instance* inst, uint64_t budget, char** g, mlfb_bodies** bodies) {
  return guarded([&] {
    require(inst && g && bodies, "inst/g/bodies");
    FrobeniusInstance weights(inst->data.annihilator());
    if (!(SimplicialData::from_weights(weights.weights()).matrix() == inst->data.matrix())) {
      throw Error(ErrorCode::DimensionMismatch, "instance was not built from a weight vector");
    }
    FrobeniusMlfb r = frobenius_by_mlfb(weights, budget);
    char* gs = dup(r.g.get_str());
    *bodies = new mlfb_bodies{std::move(r.data), std::move(r.bodies)};
    *g = gs;
  });
}

mlfb_status mlfb_frobenius_ss3(const char* weights, uint64_t budget, char** g, char** terminal, char** transform,
                               char** b1, char** b2, size_t* steps, int* fell_back) {
  return guarded([&] {
    require(g && terminal && transform && b1 && b2 && steps && fell_back, "outputs");
    FrobeniusInstance inst = weights_from(weights);
    if (inst.size() != 3) throw Error(ErrorCode::DimensionMismatch, "ss3 needs exactly three weights");
    const auto& a = inst.weights();
    Ss3Result r = frobenius_ss3(a[0], a[1], a[2], budget);
    std::string strs[5] = {r.g.get_str(), r.fell_back ? "" : format_matrix(r.state.m),
                           r.fell_back ? "" : format_matrix(r.state.u), format_vector(r.b1), format_vector(r.b2)};
    char* outs[5] = {};
    try {
      for (int k = 0; k < 5; ++k) outs[k] = dup(strs[k]);
    } catch (...) {
      for (char* p : outs) std::free(p);
      throw;
    }
    *g = outs[0];
    *terminal = outs[1];
    *transform = outs[2];
    *b1 = outs[3];
    *b2 = outs[4];
    *steps = r.state.steps;
    *fell_back = r.fell_back ? 1 : 0;
  });
}

mlfb_status mlfb_semigroup_gaps(const char* weights, uint64_t budget, char** out) {
  return guarded([&] {
    require(out, "out");
    auto gaps = semigroup_gaps(weights_from(weights), budget);
    std::string s;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (i) s += ',';
      s += gaps[i].get_str();
    }
    *out = dup(s);
  });
}

mlfb_status mlfb_kernel_basis(const char* weights, char** out) {
  return guarded([&] {
    require(weights && out, "weights/out");
    *out = dup(format_matrix(kernel_lattice_basis(parse_vector(weights))));
  });
}

mlfb_status mlfb_hnf(const char* matrix, char** h, char** u) {
  return guarded([&] {
    require(matrix && h && u, "matrix/h/u");
    HermiteForm f = hnf(parse_matrix(matrix));
    std::string hs = format_matrix(f.h), us = format_matrix(f.u);
    char* hc = dup(hs);
    char* uc = dup(us);
    *h = hc;
    *u = uc;
  });
}

}  // extern "C"
