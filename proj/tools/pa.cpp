#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pa/gns.hpp"
#include "pa/io.hpp"
#include "pa/suites.hpp"
#include "pa/tl.hpp"
#include "pa/tower.hpp"

using namespace pa;

namespace {

enum Exit { kOk = 0, kParse = 1, kPrecondition = 2, kInternal = 3, kFailed = 4 };

struct Common {
  std::string delta;
  int level = -1;
  int max_colour = -1;
  uint64_t seed = 42;
  int jobs = 1;
  std::string out;
  bool json_out = false;

  std::optional<Ring> ring() const {
    if (delta.empty()) return std::nullopt;
    return parse_delta(delta);
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--delta", c.delta, "sym, p/q or a decimal such as 2.5");
  app->add_option("--level", c.level, "level k");
  app->add_option("--max-colour", c.max_colour, "largest colour");
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output file");
  app->add_flag("--json", c.json_out, "machine-readable output");
}

void emit(const Common& c, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.out, text);
  }
}

void emit_scalar(const Common& c, const Scalar& s) {
  if (c.json_out || !c.out.empty()) {
    emit(c, to_json(s));
  } else {
    std::cout << s.str() << "\n";
  }
}

// An input file holds a graded element, or a plain element placed at --level.
GradedElement load_graded(const std::string& path, const Common& c) {
  json j = read_json_file(path);
  const Ring fallback = c.ring().value_or(Ring::symbolic());
  GradedElement a;
  if (j.contains("level")) {
    a = graded_from_json(j, fallback);
  } else {
    Element x = element_from_json(j, fallback);
    a = GradedElement::of(x, c.level < 0 ? x.n() : c.level);
  }
  if (auto r = c.ring(); r && a.ring().mode() == Mode::symbolic && r->mode() != Mode::symbolic) a = a.specialize(*r);
  return a;
}

Element load_element(const std::string& path, const Common& c) {
  json j = read_json_file(path);
  Element x = element_from_json(j, c.ring().value_or(Ring::symbolic()));
  if (auto r = c.ring(); r && x.ring().mode() == Mode::symbolic && r->mode() != Mode::symbolic) x = x.specialize(*r);
  return x;
}

void need_inputs(const std::string& op, const std::vector<std::string>& files, size_t n) {
  if (files.size() != n) {
    throw PreconditionError(op + " takes " + std::to_string(n) + " input file(s), got " + std::to_string(files.size()));
  }
}

const std::vector<std::string> kComputeOps = {
    "sharp",   "bullet", "dot",      "dagger", "include", "expect",   "phi",  "psi",    "trace-tk", "trace-Tr",
    "inner",   "unit",   "jones-e",  "c",      "d",       "multiply", "star", "tau",    "rotate",   "op-norm",
    "psd-sqrt"};

int cmd_compute(const std::string& op, const std::vector<std::string>& files, const Common& c) {
  auto g = [&](size_t i) { return load_graded(files[i], c); };
  auto e = [&](size_t i) { return load_element(files[i], c); };
  const Ring ring = c.ring().value_or(Ring::symbolic());
  const int level = std::max(0, c.level);

  static const std::map<std::string, GradedElement (*)(const GradedElement&, const GradedElement&)> binary = {
      {"sharp", sharp}, {"bullet", bullet}, {"dot", dot_action}};
  static const std::map<std::string, GradedElement (*)(const GradedElement&)> unary = {
      {"dagger", dagger}, {"include", include}, {"expect", cond_expect}, {"phi", phi}, {"psi", psi}};
  static const std::map<std::string, GradedElement (*)(const Ring&, int)> generators = {
      {"unit", [](const Ring& r, int k) { return GradedElement::of(unit(r, k), k); }},
      {"jones-e", jones_e},
      {"c", element_c},
      {"d", element_d}};

  if (auto it = binary.find(op); it != binary.end()) {
    need_inputs(op, files, 2);
    emit(c, to_json(it->second(g(0), g(1))));
  } else if (auto u = unary.find(op); u != unary.end()) {
    need_inputs(op, files, 1);
    emit(c, to_json(u->second(g(0))));
  } else if (auto gen = generators.find(op); gen != generators.end()) {
    need_inputs(op, files, 0);
    emit(c, to_json(gen->second(ring, level)));
  } else if (op == "trace-tk") {
    need_inputs(op, files, 1);
    emit_scalar(c, trace_tk(g(0)));
  } else if (op == "trace-Tr") {
    need_inputs(op, files, 1);
    emit_scalar(c, trace_Tr(g(0)));
  } else if (op == "inner") {
    need_inputs(op, files, 2);
    emit_scalar(c, inner_product(g(0), g(1)));
  } else if (op == "multiply") {
    need_inputs(op, files, 2);
    emit(c, to_json(multiply(e(0), e(1))));
  } else if (op == "star") {
    need_inputs(op, files, 1);
    emit(c, to_json(star(e(0))));
  } else if (op == "rotate") {
    need_inputs(op, files, 1);
    emit(c, to_json(rotate(e(0))));
  } else if (op == "tau") {
    need_inputs(op, files, 1);
    emit_scalar(c, tau(e(0)));
  } else if (op == "op-norm") {
    need_inputs(op, files, 1);
    const double v = op_norm(e(0));
    if (c.json_out || !c.out.empty()) {
      emit(c, json(v));
    } else {
      std::cout << v << "\n";
    }
  } else if (op == "psd-sqrt") {
    need_inputs(op, files, 1);
    emit(c, to_json(psd_sqrt(e(0))));
  } else {
    throw PreconditionError("unknown operation '" + op + "'");
  }
  return kOk;
}

int cmd_tangle_eval(const std::string& dsl, const std::vector<std::string>& files, const Common& c) {
  Tangle t = parse_tangle(read_text_file(dsl));
  std::vector<Element> inputs;
  for (const auto& f : files) inputs.push_back(load_element(f, c));
  const Ring ring = !inputs.empty() ? inputs.front().ring() : c.ring().value_or(Ring::symbolic());
  emit(c, to_json(evaluate(t, inputs, ring)));
  return kOk;
}

int cmd_verify(const std::string& suite, const Common& c) {
  SuiteConfig cfg;
  cfg.ring = c.ring();
  if (cfg.ring && cfg.ring->mode() == Mode::symbolic) cfg.ring.reset();
  if (c.level >= 0) cfg.level = c.level;
  cfg.max_colour = c.max_colour;
  cfg.seed = c.seed;
  cfg.jobs = c.jobs;
  if (cfg.ring && (suite == "positivity" || suite == "all") && cfg.ring->delta_value() < 2) {
    throw PreconditionError("positivity needs delta >= 2");
  }
  SuiteResult res = run_suite(suite, cfg);
  json report = res.to_json(cfg);
  if (!c.out.empty()) write_text_file(c.out, report.dump(2) + "\n");
  if (c.json_out) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& r : res.reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " " << r.params.dump() << "\n";
    }
    std::cout << (res.pass() ? "pass" : "fail") << ": " << res.reports.size() << " checks\n";
  }
  return res.pass() ? kOk : kFailed;
}

int cmd_dims(const Common& c) {
  const int top = c.max_colour < 0 ? 6 : c.max_colour;
  if (top > colour_cap()) {
    throw PreconditionError("colour " + std::to_string(top) + " exceeds the enumeration cap " + std::to_string(colour_cap()));
  }
  json rows = json::array();
  for (int n = 0; n <= top; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    const size_t dim = enumerate_diagrams(n).size();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back({{"n", n}, {"dim", dim}, {"catalan", catalan(n)}, {"ms", ms}});
    if (!c.json_out && c.out.empty()) std::cout << n << "\t" << dim << "\t" << ms << " ms\n";
  }
  if (c.json_out || !c.out.empty()) emit(c, rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar algebra tower toolkit"};
  app.require_subcommand(1);

  Common common;
  std::string op, suite, dsl;
  std::vector<std::string> files;

  auto* compute = app.add_subcommand("compute", "apply one operation to JSON inputs");
  compute->add_option("op", op, "operation")->required()->check(CLI::IsMember(kComputeOps));
  compute->add_option("inputs", files, "input JSON files");
  add_common(compute, common);

  auto* tangle = app.add_subcommand("tangle", "tangle commands");
  tangle->require_subcommand(1);
  auto* eval = tangle->add_subcommand("eval", "evaluate a DSL tangle on JSON inputs");
  eval->add_option("tangle", dsl, "DSL file")->required();
  eval->add_option("inputs", files, "input JSON files, one per internal box");
  add_common(eval, common);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_common(verify, common);

  auto* dims = app.add_subcommand("dims", "diagram basis dimensions");
  add_common(dims, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*compute) return cmd_compute(op, files, common);
    if (*eval) return cmd_tangle_eval(dsl, files, common);
    if (*verify) return cmd_verify(suite, common);
    if (*dims) return cmd_dims(common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ModeMismatch& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
