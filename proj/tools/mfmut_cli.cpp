// mfmut: matching field polytopes, mutation chains and degeneration certificates.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mfmut/mfmut.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

void check(mfmut_status s) {
  if (s == MFMUT_OK) return;
  const bool usage = s == MFMUT_E_INVALID_PARAMETERS || s == MFMUT_E_SCALE_EXCEEDED || s == MFMUT_E_PARSE ||
                     s == MFMUT_E_NOT_COHERENT;
  throw CliError{usage ? kUsage : kFailed, std::string(mfmut_status_string(s)) + ": " + mfmut_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mfmut_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using FieldH = Handle<mfmut_field, mfmut_field_free>;
using WeightsH = Handle<mfmut_weights, mfmut_weights_free>;
using PolytopeH = Handle<mfmut_polytope, mfmut_polytope_free>;
using PlanH = Handle<mfmut_plan, mfmut_plan_free>;

struct Params {
  int k = 0, n = 0, ell = 0, from = 0, to = 0;
  std::optional<int> lambda;
  std::string format = "text";
  std::string output;
  std::string log;
  bool ehrhart = false;
};

std::string field_label(const Params& p) {
  std::string s = "B_" + std::to_string(p.ell);
  if (p.lambda) s += "^" + std::to_string(*p.lambda);
  return s;
}

void load_field(const Params& p, FieldH& f) {
  if (p.lambda)
    check(mfmut_field_intermediate(p.k, p.n, p.ell, *p.lambda, &f.p));
  else
    check(mfmut_field_block_diagonal(p.k, p.n, p.ell, &f.p));
}

void load_weights(const Params& p, WeightsH& w) {
  if (p.lambda)
    check(mfmut_weights_intermediate(p.k, p.n, p.ell, *p.lambda, &w.p));
  else
    check(mfmut_weights_block(p.k, p.n, p.ell, &w.p));
}

std::string rat_text(const Json& j) {
  std::string s = j.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

/// Tableaux as k×1 columns, ten per block.
void print_tableaux(std::ostream& os, const Json& field) {
  const int k = field.at("k").get<int>();
  const int n = field.at("n").get<int>();
  const int width = n >= 10 ? 2 : 1;
  std::vector<std::vector<int>> columns;
  for (const auto& e : field.at("entries")) {
    std::vector<int> col(static_cast<std::size_t>(k));
    const auto subset = e.at("subset").get<std::vector<int>>();
    const auto perm = e.at("perm").get<std::vector<int>>();
    for (std::size_t r = 0; r < subset.size(); ++r) col[static_cast<std::size_t>(perm[r] - 1)] = subset[r];
    columns.push_back(std::move(col));
  }
  for (std::size_t start = 0; start < columns.size(); start += 10) {
    if (start) os << '\n';
    const std::size_t end = std::min(columns.size(), start + 10);
    for (int r = 0; r < k; ++r) {
      for (std::size_t c = start; c < end; ++c) {
        if (c > start) os << "  ";
        std::string v = std::to_string(columns[c][static_cast<std::size_t>(r)]);
        os << std::string(static_cast<std::size_t>(width) - v.size(), ' ') << v;
      }
      os << '\n';
    }
  }
}

int cmd_generate(const Params& p, std::ostream& os) {
  FieldH f;
  load_field(p, f);
  char* s = nullptr;
  check(mfmut_field_to_json(f.p, &s));
  Json j = Json::parse(take(s));
  if (p.format == "json") {
    os << j.dump(2) << '\n';
  } else {
    os << field_label(p) << " on Gr(" << p.k << "," << p.n << ")\n";
    print_tableaux(os, j);
  }
  return kOk;
}

int cmd_weights(const Params& p, std::ostream& os) {
  WeightsH w;
  load_weights(p, w);
  char* s = nullptr;
  check(mfmut_weights_to_json(w.p, &s));
  Json m = Json::parse(take(s));
  int coherent = 0;
  check(mfmut_weights_is_coherent(w.p, p.k, p.n, &coherent));
  Json vec = nullptr;
  if (coherent) {
    check(mfmut_weights_induced_vector(w.p, p.k, p.n, &s));
    vec = Json::parse(take(s));
  }
  if (p.format == "json") {
    Json out = {{"field", field_label(p)}, {"weight_matrix", m}, {"coherent", coherent == 1}, {"weight_vector", vec}};
    os << out.dump(2) << '\n';
    return kOk;
  }
  const int cols = m.at("n").get<int>();
  const auto& entries = m.at("entries");
  os << "M for " << field_label(p) << " (" << m.at("k").get<int>() << "x" << cols << ")\n";
  for (const auto& row : entries) {
    bool first = true;
    for (const auto& v : row) {
      os << (first ? "" : " ") << v.get<long long>();
      first = false;
    }
    os << '\n';
  }
  os << "coherent: " << (coherent ? "yes" : "no") << '\n';
  if (coherent) {
    os << "w = (";
    for (std::size_t i = 0; i < vec.size(); ++i) os << (i ? "," : "") << rat_text(vec[i]);
    os << ")\n";
  }
  return kOk;
}

int cmd_polytope(const Params& p, std::ostream& os) {
  FieldH f;
  load_field(p, f);
  PolytopeH poly;
  check(mfmut_polytope_of_field(f.p, &poly.p));
  std::size_t dim = 0, vertices = 0, lattice = 0;
  check(mfmut_polytope_dimension(poly.p, &dim));
  check(mfmut_polytope_vertex_count(poly.p, &vertices));
  char* s = nullptr;
  check(mfmut_polytope_volume(poly.p, &s));
  const std::string volume = take(s);
  check(mfmut_polytope_lattice_point_count(poly.p, &lattice));
  check(mfmut_polytope_to_json(poly.p, &s));
  Json pj = Json::parse(take(s));
  if (p.format == "json") {
    Json out = {{"field", field_label(p)},
                {"ambient_dim", pj.at("ambient_dim")},
                {"dimension", std::to_string(dim) + "/1"},
                {"normalized_volume", volume + "/1"},
                {"vertex_count", std::to_string(vertices) + "/1"},
                {"lattice_point_count", std::to_string(lattice) + "/1"},
                {"vertices", pj.at("points")}};
    os << out.dump(2) << '\n';
    return kOk;
  }
  os << "P(" << field_label(p) << ") on Gr(" << p.k << "," << p.n << ")\n"
     << "ambient dimension: " << pj.at("ambient_dim").get<int>() << '\n'
     << "dimension: " << dim << '\n'
     << "normalized volume: " << volume << '\n'
     << "vertices: " << vertices << '\n'
     << "lattice points: " << lattice << '\n';
  for (const auto& pt : pj.at("points")) {
    os << " ";
    for (const auto& c : pt) os << ' ' << rat_text(c);
    os << '\n';
  }
  return kOk;
}

Json run_plan(const Params& p, bool& passed) {
  PlanH plan;
  check(mfmut_plan_create(p.k, p.n, p.from, p.to, &plan.p));
  int ok = 0;
  char* s = nullptr;
  check(mfmut_plan_execute(plan.p, p.ehrhart ? 1 : 0, &ok, &s));
  passed = ok == 1;
  return Json::parse(take(s));
}

void print_step_line(std::ostream& os, const Json& step) {
  const Json& r = step.at("report");
  os << (r.at("passed").get<bool>() ? "[pass] " : "[FAIL] ") << step.at("kind").get<std::string>() << "  "
     << step.at("label").get<std::string>() << "  vol " << rat_text(r.at("volume_before")) << " -> "
     << rat_text(r.at("volume_after")) << "  vertices " << rat_text(r.at("vertex_count_after"));
  if (r.contains("inner_product_classes")) {
    const Json& c = r.at("inner_product_classes");
    os << "  classes -1/0/+1 " << rat_text(c.at("-1")) << "/" << rat_text(c.at("0")) << "/" << rat_text(c.at("+1"))
       << "  split " << rat_text(r.at("volume_plus")) << "+" << rat_text(r.at("volume_minus"));
  }
  os << '\n';
  for (const auto& f : r.at("failures")) os << "    " << f.get<std::string>() << '\n';
}

int cmd_mutate(const Params& p, std::ostream& os) {
  bool passed = false;
  Json log = run_plan(p, passed);
  if (!p.log.empty()) {
    std::ofstream f(p.log);
    if (!f) throw CliError{kUsage, "cannot open log file " + p.log};
    f << log.dump(2) << '\n';
  }
  if (p.format == "json") {
    os << log.dump(2) << '\n';
  } else {
    os << "B_" << p.from << " -> B_" << p.to << " on Gr(" << p.k << "," << p.n << "): " << log.size() << " steps\n";
    for (const auto& step : log) print_step_line(os, step);
  }
  return passed ? kOk : kFailed;
}

int cmd_verify(const Params& p, std::ostream& os) {
  bool passed = false;
  Json log = run_plan(p, passed);
  if (p.format == "json") {
    Json steps = Json::array();
    for (const auto& step : log)
      steps.push_back({{"label", step.at("label")},
                       {"kind", step.at("kind")},
                       {"passed", step.at("report").at("passed")},
                       {"failures", step.at("report").at("failures")}});
    Json out = {{"k", std::to_string(p.k) + "/1"},
                {"n", std::to_string(p.n) + "/1"},
                {"from", std::to_string(p.from) + "/1"},
                {"to", std::to_string(p.to) + "/1"},
                {"passed", passed},
                {"steps", steps}};
    os << out.dump(2) << '\n';
  } else {
    for (const auto& step : log) print_step_line(os, step);
    os << (passed ? "PASS" : "FAIL") << ": " << log.size() << " steps, B_" << p.from << " -> B_" << p.to
       << " on Gr(" << p.k << "," << p.n << ")\n";
  }
  return passed ? kOk : kFailed;
}

int cmd_certify(const Params& p, std::ostream& os) {
  FieldH f;
  load_field(p, f);
  WeightsH w;
  load_weights(p, w);
  int certified = 0;
  char* s = nullptr;
  check(mfmut_certify(f.p, w.p, field_label(p).c_str(), &certified, &s));
  Json c = Json::parse(take(s));
  if (p.format == "json") {
    os << c.dump(2) << '\n';
  } else {
    os << c.at("field_id").get<std::string>() << " on Gr(" << p.k << "," << p.n << ")\n"
       << "volume: " << rat_text(c.at("volume")) << " (reference " << rat_text(c.at("reference_volume")) << ")\n"
       << "degree-2 relations: " << rat_text(c.at("relation_count")) << '\n'
       << "initial forms binomial: " << (c.at("all_deg2_initials_binomial").get<bool>() ? "yes" : "no") << '\n'
       << "initial forms in J: " << (c.at("all_deg2_initials_in_J").get<bool>() ? "yes" : "no") << '\n'
       << "verdict: " << c.at("verdict").get<std::string>() << '\n';
  }
  return certified ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching field polytopes, mutation chains and toric degeneration certificates"};
  app.require_subcommand(1);
  Params p;

  auto add_kn = [&](CLI::App* sub) {
    sub->add_option("--k", p.k, "Grassmannian Gr(k, n): k")->required();
    sub->add_option("--n", p.n, "Grassmannian Gr(k, n): n")->required();
    sub->add_option("--format", p.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("-o,--output", p.output, "Write the payload to a file instead of stdout");
  };
  auto add_field = [&](CLI::App* sub) {
    add_kn(sub);
    sub->add_option("--ell", p.ell, "Block diagonal index")->required();
    sub->add_option("--lambda", p.lambda, "Intermediate field index");
  };
  auto add_chain = [&](CLI::App* sub) {
    add_kn(sub);
    sub->add_option("--from", p.from, "Source block diagonal index")->required();
    sub->add_option("--to", p.to, "Target block diagonal index")->required();
    sub->add_flag("--ehrhart", p.ehrhart, "Record lattice-point counts at dilations 1 and 2");
  };

  auto* generate = app.add_subcommand("generate", "Emit a matching field");
  add_field(generate);
  auto* weights = app.add_subcommand("weights", "Emit a weight matrix and its induced Pluecker weights");
  add_field(weights);
  auto* polytope = app.add_subcommand("polytope", "Emit a matching field polytope and its invariants");
  add_field(polytope);
  auto* mutate = app.add_subcommand("mutate", "Execute a mutation plan and emit per-step logs");
  add_chain(mutate);
  mutate->add_option("--log", p.log, "Also write the JSON step log to this file");
  auto* verify = app.add_subcommand("verify", "Execute a mutation plan; exit 0 iff every step verifies");
  add_chain(verify);
  auto* certify = app.add_subcommand("certify", "Emit a toric degeneration certificate");
  add_field(certify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ostringstream out;
  int code = kOk;
  try {
    if (*generate) code = cmd_generate(p, out);
    else if (*weights) code = cmd_weights(p, out);
    else if (*polytope) code = cmd_polytope(p, out);
    else if (*mutate) code = cmd_mutate(p, out);
    else if (*verify) code = cmd_verify(p, out);
    else if (*certify) code = cmd_certify(p, out);
  } catch (const CliError& e) {
    std::cerr << "mfmut: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "mfmut: " << e.what() << '\n';
    return kFailed;
  }

  if (p.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(p.output);
    if (!f) {
      std::cerr << "mfmut: cannot open output file " << p.output << '\n';
      return kUsage;
    }
    f << out.str();
  }
  return code;
}
