// qlogic: command-line front end to the quantum-logic workbench.
//
// Every command prints `key=value` lines. Exit status: 0 success, 1 a checked
// property failed (a witness is printed), 2 usage or input error.

#include <CLI11.hpp>

#include <qlogic/born_bell.hpp>
#include <qlogic/ideal_completion.hpp>
#include <qlogic/semantics.hpp>
#include <qlogic/suites.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace qlogic;
using namespace qlogic::bell;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

std::string fixed(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

int print_report(const SuiteReport& report, std::size_t expected, const std::string& key) {
  for (std::size_t k = 0; k < report.properties.size(); ++k) {
    const auto& p = report.properties[k];
    std::cout << "property." << k + 1 << "=" << (p.holds() ? "hold" : "FAIL") << " checked=" << p.checked
              << " failed=" << p.failed << " name=" << p.name << "\n";
    if (p.counterexample) std::cout << "counterexample." << k + 1 << "=" << *p.counterexample << "\n";
  }
  std::cout << key << "=" << std::min(report.holding(), expected) << "/" << expected
            << (report.all_hold() ? " hold" : " fail") << " trials=" << report.trials << "\n";
  return report.all_hold() ? kOk : kViolated;
}

struct EvalArgs {
  std::string context, formula, semantics = "weak-heyting";
};

int run_eval(const EvalArgs& a) {
  std::ifstream in = open_or_throw(a.context);
  const Context ctx = parse_context(in);
  const Semantics sem = parse_semantics(a.semantics);
  const Formula f = parse_formula(a.formula);
  const Value v = eval(f, ctx, sem);
  std::cout << "semantics=" << to_string(sem) << "\n"
            << "formula=" << f.to_string() << "\n"
            << "result=" << to_string(v) << "\n";
  if (const auto* k = std::get_if<Subspace>(&v)) {
    std::cout << "is_top=" << k->is_full() << "\nis_bottom=" << k->is_zero() << "\n";
  } else {
    const auto& s = std::get<RaySet>(v);
    std::cout << "is_top=" << equals(s, RaySet::top(ctx.dim())) << "\nis_bottom=" << is_empty(s) << "\n";
  }
  return kOk;
}

struct SuiteArgs {
  std::size_t dim = 3, trials = 500, depth = 3;
  std::uint64_t seed = 1;
};

int run_axioms(const SuiteArgs& a) {
  const SuiteReport report = run_axiom_suite(a.dim, a.trials, a.seed, a.depth);
  std::cout << "dim=" << a.dim << "\nseed=" << a.seed << "\n";
  for (std::size_t k = 0; k < report.properties.size(); ++k) {
    const auto& p = report.properties[k];
    std::cout << "law." << k + 1 << "=" << (p.holds() ? "hold" : "FAIL") << " failed=" << p.failed << " name=" << p.name
              << "\n";
    if (p.counterexample) std::cout << "counterexample." << k + 1 << "=" << *p.counterexample << "\n";
  }
  std::size_t axioms = 0;
  for (std::size_t k = 0; k < 4; ++k) axioms += report.properties[k].holds();
  const bool negation = report.properties[4].holds();
  std::cout << "negation_as_implication=" << (negation ? "hold" : "fail") << "\n";
  std::cout << "axioms=" << axioms << "/4 " << (axioms == 4 ? "hold" : "fail") << " trials=" << a.trials << "\n";
  return report.all_hold() ? kOk : kViolated;
}

int run_iso(const SuiteArgs& a) {
  const SuiteReport report = run_iso_suite(a.dim, a.trials, a.seed);
  std::cout << "dim=" << a.dim << "\nseed=" << a.seed << "\n";
  return print_report(report, report.properties.size(), "iso");
}

struct DiArgs {
  std::string lattice, file;
  std::size_t cap = kDefaultEnumerationCap;
};

int run_di(const DiArgs& a) {
  FiniteLattice l = [&] {
    if (!a.file.empty()) {
      std::ifstream in = open_or_throw(a.file);
      return parse_lattice(in);
    }
    return builtin_lattice(a.lattice);
  }();
  const IdealCompletion di(std::move(l), a.cap);
  const auto& ideals = di.ideals();
  const std::size_t n = ideals.size();
  std::cout << "lattice=" << (a.file.empty() ? a.lattice : a.file) << "\n"
            << "elements=" << di.lattice().size() << "\n"
            << "count=" << n << "\n";
  for (std::size_t i = 0; i < n; ++i) std::cout << "ideal." << i << "=" << to_string(di.lattice(), ideals[i]) << "\n";

  bool boolean = true;
  for (std::size_t i = 0; i < n; ++i) {
    const IdealSet ni = di.neg(ideals[i]);
    boolean = boolean && di.join(ideals[i], ni) == di.top();
    std::cout << "neg." << i << "=" << di.index_of(ni) << "\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << "rpc." << i << "=";
    for (std::size_t j = 0; j < n; ++j) std::cout << (j ? "," : "") << di.index_of(di.rpc(ideals[i], ideals[j]));
    std::cout << "\n";
  }
  std::cout << "boolean=" << boolean << "\n";
  return kOk;
}

int run_witness(std::size_t dim) {
  const DistributivityWitness w = distributivity_witness(dim);
  for (std::size_t k = 0; k < 3; ++k) std::cout << "K" << k + 1 << "=" << w.subspaces[k].to_string() << "\n";
  std::cout << "lhs.formula=K1 & (K2 | K3)\nlhs=" << w.lhs.to_string() << "\n"
            << "rhs.formula=(K1 & K2) | (K1 & K3)\nrhs=" << w.rhs.to_string() << "\n"
            << "distributive=" << (w.lhs == w.rhs) << "\n";
  return kOk;
}

struct BellArgs {
  std::vector<double> angles;
  bool degrees = false;
  std::size_t scan = 0, sweep = 0;
  std::uint64_t seed = 1;
};

int run_bell(const BellArgs& a) {
  if (!a.angles.empty()) {
    const double unit = a.degrees ? 1.0 : 180.0 / std::numbers::pi;
    const BellConfig cfg =
        BellConfig::in_plane_degrees(a.angles[0] * unit, a.angles[1] * unit, a.angles[2] * unit, a.angles[3] * unit);
    const auto sides = bell_sides(SingletSource(cfg));
    std::cout << "lhs=" << fixed(sides.lhs) << "\nrhs=" << fixed(sides.rhs) << "\nmargin=" << fixed(sides.margin())
              << "\nviolated=" << !sides.satisfied() << "\n";
  }
  if (a.scan) {
    const ScanResult r = scan_violation(a.scan);
    std::cout << "resolution=" << a.scan << "\n";
    const char* names[] = {"a1", "a2", "b1", "b2"};
    for (std::size_t k = 0; k < 4; ++k) std::cout << names[k] << "=" << fixed(r.degrees[k], 4) << "\n";
    std::cout << "margin=" << fixed(r.margin) << "\n";
  }
  if (a.sweep) {
    std::mt19937_64 rng(a.seed);
    std::size_t violations = 0;
    for (std::size_t v = 0; v < 16; ++v) violations += !classical_satisfies(ClassicalModel::vertex(v));
    for (std::size_t k = 0; k < a.sweep; ++k) violations += !classical_satisfies(ClassicalModel::random(rng));
    std::cout << "models=" << a.sweep + 16 << "\nvertices=16\nviolations=" << violations << "\n";
    if (violations) return kViolated;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum, weak-Heyting and classical logic on C^d"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula against a context file");
  eval_cmd->add_option("--context", eval_args.context, "Context file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--formula", eval_args.formula, "Formula text")->required();
  eval_cmd->add_option("--semantics", eval_args.semantics, "quantum | weak-heyting | classical")
      ->check(CLI::IsMember({"quantum", "weak-heyting", "classical"}))
      ->capture_default_str();

  SuiteArgs axiom_args, iso_args;
  auto* axioms_cmd = app.add_subcommand("axioms", "Randomized weak-Heyting axiom suite");
  auto* iso_cmd = app.add_subcommand("iso", "Ray set / distributive ideal correspondence properties");
  for (auto [cmd, args] : {std::pair{axioms_cmd, &axiom_args}, std::pair{iso_cmd, &iso_args}}) {
    cmd->add_option("--dim", args->dim, "Ambient dimension")->check(CLI::Range(1, 8))->capture_default_str();
    cmd->add_option("--trials", args->trials, "Random instances")->capture_default_str();
    cmd->add_option("--seed", args->seed, "RNG seed")->capture_default_str();
  }
  axioms_cmd->add_option("--depth", axiom_args.depth, "Nesting depth of generated ray sets")
      ->check(CLI::Range(0, 5))
      ->capture_default_str();

  DiArgs di_args;
  auto* di_cmd = app.add_subcommand("di", "Enumerate distributive ideals of a finite lattice");
  auto* lat_opt = di_cmd->add_option("--lattice", di_args.lattice, "Built-in lattice: moN or boolN");
  auto* file_opt = di_cmd->add_option("--file", di_args.file, "Lattice file")->check(CLI::ExistingFile);
  lat_opt->excludes(file_opt);
  di_cmd->require_option(1);
  di_cmd->add_option("--cap", di_args.cap, "Maximum lattice size")->capture_default_str();

  std::size_t witness_dim = 2;
  auto* witness_cmd = app.add_subcommand("witness", "Failure of distributivity in L(C^d)");
  witness_cmd->add_option("--dim", witness_dim, "Ambient dimension (>= 2)")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();

  BellArgs bell_args;
  auto* bell_cmd = app.add_subcommand("bell", "Singlet Born probabilities against the classical bound");
  bell_cmd->add_option("--angles", bell_args.angles, "A1,A2,B1,B2 in the x-z plane")
      ->delimiter(',')
      ->expected(4);
  bell_cmd->add_flag("--degrees", bell_args.degrees, "Angles are in degrees (default radians)");
  bell_cmd->add_option("--scan", bell_args.scan, "Grid resolution for a violation search")->check(CLI::Range(4, 720));
  bell_cmd->add_option("--classical-sweep", bell_args.sweep, "Random classical models to check");
  bell_cmd->add_option("--seed", bell_args.seed, "RNG seed for --classical-sweep")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::cout << std::boolalpha;
  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (axioms_cmd->parsed()) return run_axioms(axiom_args);
    if (iso_cmd->parsed()) return run_iso(iso_args);
    if (di_cmd->parsed()) return run_di(di_args);
    if (witness_cmd->parsed()) return run_witness(witness_dim);
    if (bell_cmd->parsed()) {
      if (bell_args.angles.empty() && !bell_args.scan && !bell_args.sweep)
        throw std::invalid_argument("bell needs --angles, --scan or --classical-sweep");
      return run_bell(bell_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error=" << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
