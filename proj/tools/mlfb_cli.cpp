// Command-line front end; talks to the library only through the C API.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlfb/mlfb_c.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(mlfb_status s) {
  switch (s) {
    case MLFB_OK:
      return kExitOk;
    case MLFB_ERR_BUDGET:
      return kExitBudget;
    case MLFB_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitInvalid;
  }
}

void check(mlfb_status s) {
  if (s != MLFB_OK) {
    std::string msg = mlfb_last_error();
    throw Failure{exit_code_for(s), msg.empty() ? mlfb_status_string(s) : msg};
  }
}

// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { mlfb_free_string(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Instance = std::unique_ptr<mlfb_instance, Deleter<mlfb_instance, mlfb_instance_free>>;
using TestSet = std::unique_ptr<mlfb_testset, Deleter<mlfb_testset, mlfb_testset_free>>;
using Bodies = std::unique_ptr<mlfb_bodies, Deleter<mlfb_bodies, mlfb_bodies_free>>;

// Decimal text -> JSON number when it fits in int64, otherwise a JSON string.
json number(std::string_view s) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && end == s.data() + s.size()) return v;
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

json vector_json(std::string_view csv) {
  json arr = json::array();
  for (const auto& x : split(csv, ',')) arr.push_back(number(x));
  return arr;
}

json vectors_json(std::string_view text) {
  json arr = json::array();
  for (const auto& v : split(text, ';')) arr.push_back(vector_json(v));
  return arr;
}

// "m n\nrow\n..." -> [[...], ...]
json matrix_json(const std::string& text) {
  std::istringstream in(text);
  std::size_t m = 0, n = 0;
  in >> m >> n;
  json rows = json::array();
  for (std::size_t i = 0; i < m; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      std::string x;
      in >> x;
      row.push_back(number(x));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string plain_vector(const json& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInvalid, "cannot read matrix file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string weights;
  std::string vector;
  std::string matrix_file;
  std::string method = "auto";
  std::string format = "json";
  bool verify = false;
  std::optional<std::uint64_t> budget;
};

std::uint64_t effective_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("MLFB_BUDGET")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v == 0) {
      throw Failure{kExitInvalid, "MLFB_BUDGET must be a positive integer"};
    }
    return v;
  }
  return mlfb_default_budget();
}

json report(const char* command, json input) {
  json r;
  r["command"] = command;
  r["input"] = std::move(input);
  r["result"] = nullptr;
  r["verification"] = nullptr;
  return r;
}

json bodies_json(const mlfb_bodies* bodies) {
  std::size_t count = 0;
  check(mlfb_bodies_count(bodies, &count));
  json out = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    Text b, gens, witnesses, weight;
    check(mlfb_bodies_body(bodies, i, b.out(), gens.out(), witnesses.out(), weight.out()));
    json body;
    body["b"] = vector_json(b.str());
    body["gens"] = vectors_json(gens.str());
    body["witnesses"] = vectors_json(witnesses.str());
    body["a_dot_b"] = number(weight.str());
    out.push_back(std::move(body));
  }
  return out;
}

json verify_bodies(const mlfb_bodies* bodies, std::uint64_t budget, bool& ok) {
  std::size_t count = 0;
  check(mlfb_bodies_count(bodies, &count));
  int consistent = 0;
  check(mlfb_bodies_containment_consistent(bodies, &consistent));
  json per = json::array();
  ok = consistent != 0;
  for (std::size_t i = 0; i < count; ++i) {
    int free = 0, witnessed = 0;
    check(mlfb_bodies_verify(bodies, i, budget, &free, &witnessed));
    per.push_back({{"lattice_free", free != 0}, {"all_facets_witnessed", witnessed != 0}});
    ok = ok && free && witnessed;
  }
  json v;
  v["bodies"] = std::move(per);
  v["containment_consistent"] = consistent != 0;
  v["all_verified"] = ok;
  return v;
}

// ---------------------------------------------------------------- frob

json frob_method(const std::string& weights, const std::string& method, std::uint64_t budget, std::size_t n) {
  json r;
  r["method"] = method;
  if (method == "mlfb") {
    Instance inst;
    {
      mlfb_instance* p = nullptr;
      check(mlfb_instance_from_vector(weights.c_str(), &p));
      inst.reset(p);
    }
    Text g;
    mlfb_bodies* raw = nullptr;
    check(mlfb_frobenius_mlfb(inst.get(), budget, g.out(), &raw));
    Bodies bodies(raw);
    std::size_t superset = 0;
    check(mlfb_bodies_superset_size(bodies.get(), &superset));
    r["g"] = number(g.str());
    r["bodies"] = bodies_json(bodies.get());
    r["superset_size"] = superset;
  } else if (method == "ss3") {
    if (n != 3) throw Failure{kExitInvalid, "ss3 needs exactly three weights"};
    Text g, terminal, transform, b1, b2;
    std::size_t steps = 0;
    int fell_back = 0;
    check(mlfb_frobenius_ss3(weights.c_str(), budget, g.out(), terminal.out(), transform.out(), b1.out(), b2.out(),
                             &steps, &fell_back));
    r["g"] = number(g.str());
    r["fell_back"] = fell_back != 0;
    if (!fell_back) {
      r["terminal_matrix"] = matrix_json(terminal.str());
      r["transform"] = matrix_json(transform.str());
      r["steps"] = steps;
      r["b1"] = vector_json(b1.str());
      r["b2"] = vector_json(b2.str());
    }
  } else {
    mlfb_method m = method == "bs" ? MLFB_METHOD_BRAUER_SHOCKLEY : MLFB_METHOD_NAIVE;
    Text g;
    check(mlfb_frobenius(weights.c_str(), m, budget, g.out()));
    r["g"] = number(g.str());
  }
  return r;
}

int run_frob(const Options& o) {
  const std::uint64_t budget = effective_budget(o);
  // Validate and normalise the weights through the library first.
  Instance inst;
  {
    mlfb_instance* p = nullptr;
    check(mlfb_instance_from_vector(o.weights.c_str(), &p));
    inst.reset(p);
  }
  Text a;
  check(mlfb_instance_annihilator(inst.get(), a.out()));
  const std::string weights = a.str();
  const std::size_t n = split(weights, ',').size();
  const std::string method = o.method == "auto" ? (n == 3 ? "ss3" : "mlfb") : o.method;

  json input;
  input["weights"] = vector_json(weights);
  input["method"] = o.method;
  input["budget"] = budget;
  json out = report("frob", std::move(input));
  out["result"] = frob_method(weights, method, budget, n);
  int code = kExitOk;

  if (o.verify) {
    json methods = json::object();
    json skipped = json::array();
    std::vector<std::string> names{"mlfb", "bs", "naive"};
    if (n == 3) names.push_back("ss3");
    bool agree = true;
    const json& reference = out["result"]["g"];
    for (const auto& name : names) {
      try {
        json r = name == method ? out["result"] : frob_method(weights, name, budget, n);
        methods[name] = r["g"];
        agree = agree && r["g"] == reference;
      } catch (const Failure& f) {
        if (f.exit_code != kExitBudget) throw;
        skipped.push_back(name);
      }
    }
    json v;
    v["methods"] = std::move(methods);
    v["skipped"] = std::move(skipped);
    v["methods_agree"] = agree;
    out["verification"] = std::move(v);
    if (!agree) code = kExitMismatch;
  }

  if (o.format == "plain") {
    const json& r = out["result"];
    std::cout << "g " << (r["g"].is_string() ? r["g"].get<std::string>() : r["g"].dump()) << '\n';
    if (r.contains("bodies")) {
      for (const auto& b : r["bodies"]) std::cout << "body " << plain_vector(b["b"]) << '\n';
    }
    if (r.contains("b1")) {
      std::cout << "body " << plain_vector(r["b1"]) << '\n' << "body " << plain_vector(r["b2"]) << '\n';
    }
    if (o.verify) std::cout << "methods_agree " << (out["verification"]["methods_agree"].get<bool>() ? 1 : 0) << '\n';
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return code;
}

// ---------------------------------------------------------------- mlfb / testset

Instance load_instance(const Options& o, json& input) {
  mlfb_instance* p = nullptr;
  if (!o.vector.empty()) {
    check(mlfb_instance_from_vector(o.vector.c_str(), &p));
  } else {
    check(mlfb_instance_from_matrix(read_file(o.matrix_file).c_str(), &p));
  }
  Instance inst(p);
  Text m, y;
  check(mlfb_instance_matrix(inst.get(), m.out()));
  check(mlfb_instance_annihilator(inst.get(), y.out()));
  if (!o.vector.empty()) input["weights"] = vector_json(y.str());
  input["matrix"] = matrix_json(m.str());
  input["annihilator"] = vector_json(y.str());
  return inst;
}

TestSet make_test_set(const mlfb_instance* inst, std::uint64_t budget) {
  mlfb_testset* p = nullptr;
  check(mlfb_testset_compute(inst, budget, &p));
  return TestSet(p);
}

int run_mlfb(const Options& o) {
  const std::uint64_t budget = effective_budget(o);
  json input;
  Instance inst = load_instance(o, input);
  input["budget"] = budget;
  json out = report("mlfb", std::move(input));

  TestSet t = make_test_set(inst.get(), budget);
  mlfb_bodies* raw = nullptr;
  check(mlfb_bodies_compute(t.get(), budget, &raw));
  Bodies bodies(raw);
  std::size_t superset = 0, tsize = 0;
  check(mlfb_bodies_superset_size(bodies.get(), &superset));
  check(mlfb_testset_size(t.get(), &tsize));
  json r;
  r["test_set_size"] = tsize;
  r["superset_size"] = superset;
  r["bodies"] = bodies_json(bodies.get());
  out["result"] = std::move(r);

  int code = kExitOk;
  if (o.verify) {
    bool ok = true;
    out["verification"] = verify_bodies(bodies.get(), budget, ok);
    if (!ok) code = kExitMismatch;
  }
  if (o.format == "plain") {
    for (const auto& b : out["result"]["bodies"]) {
      std::cout << plain_vector(b["b"]) << " | " << (b["a_dot_b"].is_string() ? b["a_dot_b"].get<std::string>()
                                                                             : b["a_dot_b"].dump())
                << '\n';
    }
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return code;
}

int run_testset(const Options& o) {
  json input;
  Instance inst = load_instance(o, input);
  json out = report("testset", std::move(input));
  TestSet t = make_test_set(inst.get(), effective_budget(o));
  std::size_t size = 0;
  check(mlfb_testset_size(t.get(), &size));
  json entries = json::array();
  for (std::size_t i = 0; i < size; ++i) {
    Text z, w;
    check(mlfb_testset_entry(t.get(), i, z.out(), w.out()));
    entries.push_back({{"z", vector_json(z.str())}, {"w", vector_json(w.str())}});
  }
  if (o.format == "json") {
    out["result"] = {{"size", size}, {"entries", std::move(entries)}};
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& e : entries) std::cout << plain_vector(e["z"]) << " | " << plain_vector(e["w"]) << '\n';
  }
  return kExitOk;
}

int run_kernel_basis(const Options& o) {
  const std::string& weights = o.vector.empty() ? o.weights : o.vector;
  if (weights.empty()) throw Failure{kExitInvalid, "kernel-basis needs a weight vector"};
  Text m;
  check(mlfb_kernel_basis(weights.c_str(), m.out()));
  if (o.format == "plain") {
    std::cout << m.str();
    return kExitOk;
  }
  json input;
  input["weights"] = vector_json(weights);
  json out = report("kernel-basis", std::move(input));
  json rows = matrix_json(m.str());
  json columns = json::array();
  if (!rows.empty()) {
    for (std::size_t j = 0; j < rows[0].size(); ++j) {
      json col = json::array();
      for (const auto& row : rows) col.push_back(row[j]);
      columns.push_back(std::move(col));
    }
  }
  out["result"] = {{"matrix", std::move(rows)}, {"columns", std::move(columns)}};
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers and maximal lattice free bodies"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "plain"}));
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "Enumeration budget (work units)")->check(CLI::PositiveNumber);
  };

  auto* frob = app.add_subcommand("frob", "Frobenius number of coprime positive weights");
  frob->add_option("weights", o.weights, "Weights, e.g. 12,13,17")->required();
  frob->add_option("--method", o.method, "mlfb | bs | naive | ss3")
      ->check(CLI::IsMember({"auto", "mlfb", "bs", "naive", "ss3"}));
  frob->add_flag("--verify", o.verify, "Run every applicable method and compare");
  add_budget(frob);
  add_common(frob);

  auto* mlfb = app.add_subcommand("mlfb", "Maximal lattice free bodies up to translation");
  auto* mv = mlfb->add_option("--vector", o.vector, "Weights; the matrix is their kernel lattice basis");
  auto* mm = mlfb->add_option("--matrix", o.matrix_file, "File with a (d+1) x d matrix");
  mv->excludes(mm);
  mlfb->add_flag("--verify", o.verify, "Re-check lattice freeness and facet witnesses");
  add_budget(mlfb);
  add_common(mlfb);

  auto* ts = app.add_subcommand("testset", "Reduced test set of the perturbed program");
  auto* tv = ts->add_option("--vector", o.vector, "Weights");
  auto* tm = ts->add_option("--matrix", o.matrix_file, "Matrix file");
  tv->excludes(tm);
  o.format = "json";
  add_common(ts);

  auto* kb = app.add_subcommand("kernel-basis", "Basis of the kernel lattice of a weight vector");
  auto* kv = kb->add_option("--vector", o.vector, "Weights");
  auto* kp = kb->add_option("weights", o.weights, "Weights");
  kv->excludes(kp);
  add_common(kb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  // testset defaults to "z | Az" lines.
  if (ts->parsed() && ts->count("--format") == 0) o.format = "plain";

  try {
    if (frob->parsed()) return run_frob(o);
    if ((mlfb->parsed() || ts->parsed()) && o.vector.empty() && o.matrix_file.empty()) {
      throw Failure{kExitInvalid, "exactly one of --vector or --matrix is required"};
    }
    if (mlfb->parsed()) return run_mlfb(o);
    if (ts->parsed()) return run_testset(o);
    if (kb->parsed()) return run_kernel_basis(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
