// opflow: command-line driver for identity verification, cohomology tables,
// deformation reports and Heisenberg-flow evolution. Every command writes a
// single JSON document to stdout; diagnostics go to stderr.
//
// Exit codes: 0 all checks passed, 1 identity violation, 2 usage or input
// error, 3 resource cap exceeded.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opflow/io.hpp"
#include "opflow/opflow.hpp"

namespace {

using opflow::Operation;
using opflow::Scalar;
using opflow::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr double kFloatTolerance = 1e-9;

struct Payload {
  Json inputs;
  Json results;
  bool all_passed = true;
  Json max_residual;
};

struct VerifyArgs {
  int dim = 2;
  int max_degree = 3;
  int trials = 100;
  std::uint64_t seed = 0;
};

/// Accumulates per-identity pass/fail counts in a fixed order.
class IdentityTally {
 public:
  void record(const std::string& name, const Operation& residual) {
    auto& e = entry(name);
    ++e.instances;
    const Scalar m = opflow::max_abs_coeff(residual);
    if (m != 0) ++e.failures;
    if (m > e.max_abs) e.max_abs = m;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& e : entries_) {
      arr.push_back(Json{{"name", e.name},
                         {"instances", e.instances},
                         {"failures", e.failures},
                         {"max_abs_residual", opflow::io::scalar_to_json(e.max_abs)}});
    }
    return arr;
  }

  bool all_passed() const {
    for (const auto& e : entries_)
      if (e.failures) return false;
    return true;
  }

  Scalar max_residual() const {
    Scalar m = 0;
    for (const auto& e : entries_)
      if (e.max_abs > m) m = e.max_abs;
    return m;
  }

 private:
  struct Entry {
    std::string name;
    long instances = 0;
    long failures = 0;
    Scalar max_abs = 0;
  };

  Entry& entry(const std::string& name) {
    for (auto& e : entries_)
      if (e.name == name) return e;
    entries_.push_back(Entry{name});
    return entries_.back();
  }

  std::vector<Entry> entries_;
};

Payload cmd_verify(const VerifyArgs& a, std::size_t max_entries) {
  namespace id = opflow::identities;
  const auto d = static_cast<std::size_t>(a.dim);
  // Largest intermediate: a cup associator of three max-degree operands.
  opflow::checked_pow(d, 3 * a.max_degree + 1, max_entries);

  opflow::Lcg rng(a.seed);
  constexpr long kBound = 3;
  auto degree = [&] { return static_cast<int>(rng.uniform(1, a.max_degree)); };
  IdentityTally tally;
  for (int t = 0; t < a.trials; ++t) {
    const Operation mu = opflow::random_operation(d, 2, rng, kBound);
    const Operation mu0 = opflow::random_operation(d, 2, rng, kBound);
    const int df = degree(), dg = degree(), dh = degree();
    const Operation f = opflow::random_operation(d, df, rng, kBound);
    const Operation g = opflow::random_operation(d, dg, rng, kBound);
    const Operation h = opflow::random_operation(d, dh, rng, kBound);

    for (const auto& [key, r] : opflow::composition_relation_residuals(h, f, g)) tally.record("composition_relations", r);
    for (const auto& r : id::unit_residuals(f)) tally.record("unit_axiom", r);
    tally.record("getzler", id::getzler(h, f, g));
    tally.record("vinberg", id::vinberg(h, f, g));
    tally.record("jacobi", id::jacobi(f, g, h));
    tally.record("generalized_jacobi", id::generalized_jacobi(f, g, h));
    tally.record("r_operator_commutator", id::r_commutator(f, g, h));
    tally.record("r_operator_derivation", id::r_derivation(f, g, h));
    tally.record("bracket_square", id::bracket_square(mu));
    tally.record("cup_as_flow", id::cup_as_flow(mu, f, g));
    tally.record("cup_associator", id::cup_associator(mu, f, g, h));
    tally.record("delta_squared", id::delta_squared(mu, f));
    tally.record("right_derivation", id::right_derivation(mu, f, g));
    tally.record("hochschild_agreement", id::hochschild_agreement(mu, f));
    tally.record("right_leibniz", id::right_leibniz(mu, f, g, h));
    tally.record("stokes_1", id::stokes1(mu, f, g));
    tally.record("stokes_2", id::stokes2(mu, h, f, g));
    tally.record("stokes_2_bracket", id::stokes2_bracket(mu, h, f, g));
    tally.record("stokes_3", id::stokes3(mu, f, g));
    const auto albert = opflow::albert_residuals(mu);
    tally.record("albert", albert.power3);
    tally.record("albert", albert.power4);
    const auto rep = opflow::deformation_report(opflow::DeformationPair::from_operations(mu, mu0));
    tally.record("maurer_cartan", rep.mc_residual);
    tally.record("bianchi", rep.bianchi_residual);
  }
  Payload p;
  p.inputs = Json{{"dim", a.dim}, {"max_degree", a.max_degree}, {"trials", a.trials}, {"seed", a.seed}};
  p.results = Json{{"identities", tally.to_json()}};
  p.all_passed = tally.all_passed();
  p.max_residual = opflow::io::scalar_to_json(tally.max_residual());
  return p;
}

opflow::AlgebraSpec load_algebra(const std::string& path) {
  return opflow::io::algebra_from_json(opflow::io::read_json_file(path));
}

Operation load_operation(const std::string& path) {
  return opflow::io::operation_from_json(opflow::io::read_json_file(path));
}

Payload cmd_cohomology(const std::string& file, int n_max, bool representatives, std::size_t max_entries) {
  const auto algebra = load_algebra(file);
  const auto report = opflow::cohomology_dimensions(algebra, n_max, {max_entries, representatives});
  Payload p;
  p.inputs = Json{{"algebra_file", file}, {"n_max", n_max}, {"representatives", representatives}};
  p.results = opflow::io::cohomology_report_to_json(report);
  p.max_residual = 0;
  return p;
}

struct DeformArgs {
  std::string algebra_file;
  std::string mu0_file;
  std::string omega_file;
  std::string dual_mode = "self_dual";
  std::string dual_file;
  std::string current_file;
};

opflow::DualMode parse_dual_mode(const std::string& s) {
  if (s == "self_dual") return opflow::DualMode::self_dual;
  if (s == "anti_self_dual") return opflow::DualMode::anti_self_dual;
  if (s == "custom") return opflow::DualMode::custom;
  throw opflow::DomainError("unknown dual mode '" + s + "'");
}

Payload cmd_deform(const DeformArgs& a) {
  const auto algebra = load_algebra(a.algebra_file);
  if (a.mu0_file.empty() == a.omega_file.empty()) {
    throw opflow::DomainError("exactly one of --mu0 and --omega must be given");
  }
  const auto pair = a.mu0_file.empty()
                        ? opflow::DeformationPair::from_deformation(algebra.mu, load_operation(a.omega_file))
                        : opflow::DeformationPair::from_operations(algebra.mu, load_operation(a.mu0_file));
  const auto mode = parse_dual_mode(a.dual_mode);
  std::optional<Operation> dual, current;
  if (!a.dual_file.empty()) dual = load_operation(a.dual_file);
  if (!a.current_file.empty()) current = load_operation(a.current_file);
  if (mode != opflow::DualMode::custom && dual) throw opflow::DomainError("--dual-file needs --dual custom");

  Json warnings = Json::array();
  opflow::DeformationReport rep = [&] {
    if (opflow::is_associative(pair.mu)) return opflow::gauge_residuals(pair, mode, dual, current);
    warnings.push_back("ground operation is not associative (d^2 != 0): gauge equations not evaluated");
    return opflow::deformation_report(pair);
  }();

  std::vector<const Operation*> residuals{&rep.mc_residual, &rep.bianchi_residual};
  if (rep.gauge) {
    residuals.push_back(&rep.gauge->residual1);
    residuals.push_back(&rep.gauge->residual2);
    residuals.push_back(&rep.gauge->conservation_residual);
  }
  Scalar worst = 0;
  for (const auto* r : residuals) {
    const Scalar m = opflow::max_abs_coeff(*r);
    if (m > worst) worst = m;
  }

  Payload p;
  p.inputs = Json{{"algebra_file", a.algebra_file}, {"mu0_file", a.mu0_file},   {"omega_file", a.omega_file},
                  {"dual_mode", a.dual_mode},       {"dual_file", a.dual_file}, {"current_file", a.current_file}};
  p.results = opflow::io::deformation_report_to_json(rep);
  p.results["warnings"] = std::move(warnings);
  p.all_passed = worst == 0;
  p.max_residual = opflow::io::scalar_to_json(worst);
  return p;
}

struct EvolveArgs {
  std::string algebra_file;
  std::string hamiltonian_file;
  std::string state_file;
  double t_end = 1.0;
  double dt = 1e-3;
  double lambda = 1.0;
  int stride = 1;
};

Payload cmd_evolve(const EvolveArgs& a, std::size_t max_entries) {
  const auto algebra = load_algebra(a.algebra_file);
  const Operation h = load_operation(a.hamiltonian_file);
  const Operation f0 = load_operation(a.state_file);
  const opflow::DynamicsConfig cfg{a.lambda, a.t_end, a.dt, opflow::Integrator::rk4};
  const auto traj = opflow::heisenberg_flow(algebra.mu, h, f0, cfg, max_entries);
  const auto h1 = opflow::cohomology_dimensions(algebra, 1, {max_entries, false}).dims.at(1).dim;
  const bool state_cocycle = opflow::is_cocycle(algebra.mu, f0);
  const auto defects = opflow::cocycle_defects(algebra.mu, traj, max_entries);

  opflow::Trajectory sampled{traj.dim, traj.degree, {}, {}};
  std::vector<double> sampled_defects;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    if (k % static_cast<std::size_t>(a.stride) != 0 && k + 1 != traj.times.size()) continue;
    sampled.times.push_back(traj.times[k]);
    sampled.states.push_back(traj.states[k]);
    sampled_defects.push_back(defects[k]);
  }
  double worst = 0.0;
  for (double v : defects) worst = std::max(worst, v);

  Payload p;
  p.inputs = Json{{"algebra_file", a.algebra_file},
                  {"hamiltonian_file", a.hamiltonian_file},
                  {"state_file", a.state_file},
                  {"t_end", a.t_end},
                  {"dt", a.dt},
                  {"lambda", a.lambda},
                  {"stride", a.stride}};
  p.results = Json{{"h1_dim", h1},
                   {"static", h1 == 0},
                   {"state_is_cocycle", state_cocycle},
                   {"cocycle_tolerance", kFloatTolerance},
                   {"max_cocycle_defect", worst},
                   {"cocycle_defect", sampled_defects},
                   {"trajectory", opflow::io::trajectory_to_json(sampled)}};
  p.all_passed = !state_cocycle || worst < kFloatTolerance;
  p.max_residual = worst;
  return p;
}

int emit(const std::string& command, const std::function<Payload()>& run, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  try {
    Payload p = run();
    Json report{{"command", command},
                {"inputs", std::move(p.inputs)},
                {"results", std::move(p.results)},
                {"all_passed", p.all_passed},
                {"max_residual", std::move(p.max_residual)}};
    if (timing) {
      report["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    }
    std::cout << report.dump(2) << "\n";
    if (!p.all_passed) std::cerr << command << ": identity violation detected\n";
    return p.all_passed ? kExitOk : kExitViolation;
  } catch (const opflow::ResourceError& e) {
    std::cerr << command << ": resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const opflow::Error& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operad calculus in endomorphism operads"};
  app.require_subcommand(1);
  std::size_t max_entries = opflow::kDefaultMaxEntries;
  bool timing = false;
  app.add_option("--max-entries", max_entries, "Entry budget for tensors and matrices")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "Include runtime_ms in the report (breaks byte-identical output)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the operad identities on seeded random inputs");
  verify->add_option("--dim", va.dim, "Module dimension")->check(CLI::Range(1, 4));
  verify->add_option("--max-degree", va.max_degree, "Largest operand degree")->check(CLI::Range(1, 4));
  verify->add_option("--trials", va.trials, "Number of random instances")->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", va.seed, "Seed of the 64-bit LCG");

  std::string coh_file;
  int n_max = 2;
  bool reps = false;
  auto* coh = app.add_subcommand("cohomology", "Tangent cohomology dimensions of an algebra file");
  coh->add_option("algebra_file", coh_file, "AlgebraSpec JSON")->required();
  coh->add_option("--n-max", n_max, "Highest cohomological degree")->check(CLI::Range(0, 32));
  coh->add_flag("--representatives", reps, "Also emit cocycle representatives");

  DeformArgs da;
  auto* deform = app.add_subcommand("deform", "Deformation report for a pair (μ, μ₀)");
  deform->add_option("algebra_file", da.algebra_file, "AlgebraSpec JSON with the ground μ")->required();
  deform->add_option("--mu0", da.mu0_file, "Operation JSON of the perturbed μ₀");
  deform->add_option("--omega", da.omega_file, "Operation JSON of the deformation ω = μ₀ - μ");
  deform->add_option("--dual", da.dual_mode, "self_dual | anti_self_dual | custom")
      ->check(CLI::IsMember({"self_dual", "anti_self_dual", "custom"}));
  deform->add_option("--dual-file", da.dual_file, "Operation JSON of Ω† for --dual custom");
  deform->add_option("--current", da.current_file, "Operation JSON of the current 𝒥 (default ∇Ω†)");

  EvolveArgs ea;
  auto* evolve = app.add_subcommand("evolve", "Integrate the Heisenberg flow df/dt = λ[h, f]");
  evolve->add_option("algebra_file", ea.algebra_file, "AlgebraSpec JSON")->required();
  evolve->add_option("hamiltonian_file", ea.hamiltonian_file, "Operation JSON of the degree-1 cocycle h")->required();
  evolve->add_option("state_file", ea.state_file, "Operation JSON of the initial state")->required();
  evolve->add_option("--t-end", ea.t_end, "Final time");
  evolve->add_option("--dt", ea.dt, "Step size");
  evolve->add_option("--lambda", ea.lambda, "Rate constant");
  evolve->add_option("--stride", ea.stride, "Emit every k-th sample")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (verify->parsed()) return emit("verify", [&] { return cmd_verify(va, max_entries); }, timing);
  if (coh->parsed()) return emit("cohomology", [&] { return cmd_cohomology(coh_file, n_max, reps, max_entries); }, timing);
  if (deform->parsed()) return emit("deform", [&] { return cmd_deform(da); }, timing);
  if (evolve->parsed()) return emit("evolve", [&] { return cmd_evolve(ea, max_entries); }, timing);
  return kExitUsage;
}
