#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dglift/dsl.hpp"
#include "dglift/error.hpp"
#include "dglift/report.hpp"

using namespace dglift;

namespace {

int verbosity() {
  const char* v = std::getenv("DGLIFT_VERBOSE");
  return v ? std::atoi(v) : 0;
}

void log(const std::string& msg) {
  if (verbosity() > 0) std::cerr << "dglift: " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UsageError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const ProblemDescription::NamedAlgebra& pick_algebra(const ProblemDescription& p, const std::string& name) {
  if (name.empty()) {
    if (p.algebras.size() != 1)
      throw Error(ErrorKind::UsageError, "the file declares " + std::to_string(p.algebras.size()) +
                                             " algebras; choose one with --algebra");
    return p.algebras.front();
  }
  const auto* a = p.find_algebra(name);
  if (!a) throw Error(ErrorKind::UsageError, "no algebra named " + name);
  return *a;
}

std::vector<const ProblemDescription::NamedModule*> pick_modules(const ProblemDescription& p,
                                                                 const std::string& name) {
  std::vector<const ProblemDescription::NamedModule*> out;
  if (name.empty()) {
    for (const auto& m : p.modules) out.push_back(&m);
    if (out.empty()) throw Error(ErrorKind::UsageError, "the file declares no module");
    return out;
  }
  const auto* m = p.find_module(name);
  if (!m) throw Error(ErrorKind::UsageError, "no module named " + name);
  out.push_back(m);
  return out;
}

Bidegree parse_bidegree(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t a = 0, b = 0;
    const int n = std::stoi(s.substr(0, comma), &a);
    const int w = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return {n, w};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::UsageError, "--bidegree expects n,w but got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Naive liftability of semifree DG modules"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, module_name, algebra_name, element, bidegree, method_name;
  bool witness = false;
  SelftestOptions st;

  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Problem file")->required(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "Parse the file and run every construction check");
  add_file(validate);
  auto* delta = app.add_subcommand("delta", "Print δ(b) for an algebra element");
  add_file(delta);
  delta->add_option("--element", element, "Element of the algebra, e.g. 'X*Y*x'")->required();
  delta->add_option("--algebra", algebra_name, "Algebra name (default: the only one)");
  auto* obstruction = app.add_subcommand("obstruction", "Print Δ_N on every basis element");
  add_file(obstruction);
  obstruction->add_option("--module", module_name, "Module name (default: all)");
  auto* check = app.add_subcommand("check-lift", "Decide naive liftability");
  add_file(check);
  check->add_option("--module", module_name, "Module name (default: all)");
  check->add_flag("--witness", witness, "Include the connection Γ with ψ_{D_Γ} = 0");
  check->add_option("--method", method_name, "Force trivial, rank2-corollary or global-solve")
      ->check(CLI::IsMember({"trivial", "rank2-corollary", "global-solve"}));
  auto* homology = app.add_subcommand("homology", "Homology of J at one bidegree");
  add_file(homology);
  homology->add_option("--bidegree", bidegree, "n,w")->required();
  homology->add_option("--algebra", algebra_name, "Algebra name (default: the only one)");
  auto* selftest = app.add_subcommand("selftest", "Run the randomized invariant suites");
  selftest->add_option("--seed", st.seed, "Random seed");
  selftest->add_option("--cases", st.cases, "Cases per suite")->check(CLI::PositiveNumber);
  for (auto* c : {validate, delta, obstruction, check, homology, selftest}) add_format(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Format format = format_name == "json" ? Format::Json : Format::Text;
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.command = app.get_subcommands().front()->get_name();
  int status = 0;

  try {
    if (selftest->parsed()) {
      log("selftest seed " + std::to_string(st.seed) + ", " + std::to_string(st.cases) + " cases");
      std::vector<SuiteDoc> suites;
      for (const auto& s : run_selftest(st)) {
        suites.push_back(describe_suite(s));
        if (!s.passed()) status = 1;
      }
      doc.selftest = std::move(suites);
    } else {
      log("reading " + file);
      const ProblemDescription p = parse_problem(read_file(file));
      doc.problem = print_problem(p);
      if (validate->parsed()) {
        doc.valid = true;
      } else if (delta->parsed()) {
        const auto& a = pick_algebra(p, algebra_name);
        doc.delta = describe_delta(a.name, parse_algebra_element(a.algebra, element));
      } else if (homology->parsed()) {
        const auto& a = pick_algebra(p, algebra_name);
        doc.homology = describe_homology(a.name, diagonal_homology(a.algebra, parse_bidegree(bidegree)));
      } else if (obstruction->parsed()) {
        for (const auto* m : pick_modules(p, module_name))
          doc.results.push_back(describe_obstruction(m->name, *m->module));
      } else if (check->parsed()) {
        std::optional<Method> force;
        if (!method_name.empty()) force = parse_method(method_name);
        for (const auto* m : pick_modules(p, module_name)) {
          log("deciding " + m->name);
          const ObstructionReport r = check_naive_lift(*m->module, force);
          doc.results.push_back(describe_report(m->name, *m->module, r, witness));
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind());
    if (e.line() > 0) std::cerr << " at line " << e.line();
    std::cerr << ": " << e.what() << "\n";
    if (validate->parsed() && is_mathematical(e.kind())) {
      doc.valid = false;
      doc.timing_ms = 0;
      std::cout << emit_report(doc, format);
    }
    return is_mathematical(e.kind()) ? 1 : 2;
  }

  doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << emit_report(doc, format);
  return status;
}
