#include "fom/bench/runner.hpp"

#include "fom/methods/conjugate_gradient.hpp"
#include "fom/methods/gradient.hpp"
#include "fom/methods/momentum.hpp"
#include "fom/model/model_oracle.hpp"
#include "fom/universal/restart.hpp"
#include "fom/universal/similar_triangles.hpp"
#include "fom/universal/universal_gradient.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace fom::bench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double param_or(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::uint64_t seed_of(const ProblemSpec& spec, std::optional<std::uint64_t> override_seed) {
  if (override_seed) return *override_seed;
  if (spec.seed) return *spec.seed;
  return static_cast<std::uint64_t>(param_or(spec.params, "seed", 0.0));
}

double require_param(const MethodSpec& m, const std::string& key, std::optional<double> fallback) {
  auto it = m.params.find(key);
  if (it != m.params.end()) return it->second;
  if (fallback) return *fallback;
  throw ConfigError("config field 'method.params." + key + "': required by " + m.name + " for this problem");
}

[[noreturn]] void not_applicable(const std::string& method, const std::string& family) {
  throw ConfigError("config field 'method.name': " + method + " does not apply to family " + family);
}

Point zoo_start(const ZooProblem& z) { return z.start ? *z.start : Point::Zero(z.problem.dim()); }

std::optional<double> declared_L(const ZooProblem& z) {
  if (z.problem.constants().L1) return z.problem.constants().L1;
  if (z.info.count("L_box")) return z.info.at("L_box");
  return std::nullopt;
}

double distance_to_opt(const ZooProblem& z, const Point& x0) {
  if (!z.problem.optimum()) throw ConfigError("problem has no known optimum");
  return (x0 - z.problem.optimum()->x).norm();
}

Trace run_zoo(const ZooProblem& z, const MethodSpec& m, int N) {
  const Problem& p = z.problem;
  const Point x0 = zoo_start(z);
  const auto& c = p.constants();
  const std::string& name = m.name;
  if (z.family == "worst_case_nonsmooth") reset_adversary(z);

  if (name == "gradient_descent")
    return gradient_descent(p, x0, StepRule::fixed_inverse_L(require_param(m, "L", declared_L(z))), N);
  if (name == "subgradient_descent") {
    const double R = require_param(m, "R", c.R ? c.R : std::optional<double>(distance_to_opt(z, x0)));
    return subgradient_descent(p, x0, R, require_param(m, "L0", c.L0), N);
  }
  if (name == "heavy_ball") {
    std::optional<double> a, b;
    if (c.mu && c.L1) {
      const double sL = std::sqrt(*c.L1), sm = std::sqrt(*c.mu);
      a = 4.0 / ((sL + sm) * (sL + sm));
      b = ((sL - sm) / (sL + sm)) * ((sL - sm) / (sL + sm));
    }
    return heavy_ball(p, x0, require_param(m, "alpha", a), require_param(m, "beta", b), N);
  }
  if (name == "nesterov_momentum") {
    std::optional<double> mu = c.mu;
    if (m.params.count("mu")) mu = m.params.at("mu");
    return nesterov_momentum(p, x0, require_param(m, "L", declared_L(z)), mu, N);
  }
  if (name == "linear_coupling") return linear_coupling_schedule(p, x0, require_param(m, "L", declared_L(z)), N);
  if (name == "cg_quadratic") {
    if (!z.hessian) not_applicable(name, z.family);
    return cg_quadratic(*z.hessian, *z.linear_term, x0, N);
  }
  if (name == "nonlinear_cg") {
    const std::string v = m.option("variant", "fr");
    if (v != "fr" && v != "prp") throw ConfigError("config field 'method.params.variant': expected fr or prp");
    const CgVariant variant = v == "fr" ? CgVariant::FletcherReeves : CgVariant::PolakRibierePolyak;
    const int period = static_cast<int>(m.get("restart", static_cast<double>(p.dim())));
    const LineSearch ls = z.hessian ? LineSearch::exact_quadratic(*z.hessian) : LineSearch::bisection(1e-10);
    return nonlinear_cg(p, x0, variant, period, N, ls);
  }
  const Geometry geo(ProxSetup::euclidean(p.set()));
  if (name == "similar_triangles") {
    auto model = linear_model(p.oracle_ptr());
    return similar_triangles(*model, geo, require_param(m, "L", declared_L(z)), x0, N, m.get("monotone", 0.0) != 0.0);
  }
  if (name == "universal_gradient") {
    UniversalOptions o;
    o.epsilon = m.get("epsilon", 1e-3);
    o.L0 = m.get("L0", 1.0);
    o.max_iterations = N;
    if (m.params.count("R"))
      o.R = m.params.at("R");
    else if (c.R)
      o.R = c.R;
    else if (p.optimum())
      o.R = distance_to_opt(z, x0);
    auto model = linear_model(p.oracle_ptr());
    return universal_gradient(*model, geo, x0, o);
  }
  if (name == "restart_subgradient") {
    RestartOptions o;
    o.mu = require_param(m, "mu", c.mu);
    o.epsilon = m.get("epsilon", 1e-3);
    o.R0 = require_param(m, "R0", p.optimum() ? std::optional<double>(distance_to_opt(z, x0)) : std::nullopt);
    o.max_stages = N;
    const double L0 = require_param(m, "L0", c.L0 ? c.L0 : std::optional<double>(1.0 + o.mu * 2.0 * o.R0));
    return restart_strongly_convex(subgradient_stage(p, L0), o, x0);
  }
  not_applicable(name, z.family);
}

Trace run_game(const MatrixGame& g, const MethodSpec& m, int N) {
  if (m.name == "mirror_prox") return mirror_prox(*g.field, g.geometry, m.get("L", g.L), g.start(), N);
  if (m.name == "universal_mirror_prox") {
    MirrorProxOptions o;
    o.epsilon = m.get("epsilon", 1e-2);
    o.L0 = m.get("L0", 1.0);
    o.max_iterations = N;
    return universal_mirror_prox(*g.field, g.geometry, g.start(), o);
  }
  not_applicable(m.name, "matrix_game");
}

struct ProgramRun {
  Trace trace;
  DualSolveResult result;
};

ProgramRun run_program(const ConstrainedProgram& prog, const MethodSpec& m, int N) {
  if (m.name != "dual_solve_restore") not_applicable(m.name, "constrained programs");
  const double eps = m.get("epsilon", 1e-3);
  const double eps_t = m.get("epsilon_tilde", eps);
  const DualMethod method = m.get("accelerated", 0.0) != 0.0 ? DualMethod::Accelerated : DualMethod::Gradient;
  DualSolveResult r = dual_solve_restore(prog, eps, eps_t, N, method);
  return {r.trace, r};
}

BoundCheck make_check(const std::string& name, double measured, double predicted, bool pass, std::string detail) {
  return {name, pass, measured, predicted, std::move(detail)};
}

BoundCheck check_zoo(const std::string& id, const ZooProblem& z, const MethodSpec& m, const Trace& t) {
  const Problem& p = z.problem;
  const auto& c = p.constants();
  const Point x0 = zoo_start(z);
  auto need_opt = [&]() -> const KnownOptimum& {
    if (!p.optimum()) throw ConfigError("check '" + id + "' needs a known optimum");
    return *p.optimum();
  };

  if (id == "descent") {
    if (m.name != "gradient_descent") throw ConfigError("check 'descent' applies to gradient_descent only");
    const double L = require_param(m, "L", declared_L(z));
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
      const double g = t.grad_norms[k];
      worst = std::max(worst, t.values[k + 1] - (t.values[k] - g * g / (2.0 * L)));
    }
    return make_check(id, worst, 0.0, worst <= 1e-10, "max of f(x+) - f(x) + |g|^2/(2L)");
  }
  if (id == "model-rate") {
    const KnownOptimum& opt = need_opt();
    const int N = t.iterations();
    const double R = (x0 - opt.x).norm();
    if (m.name == "gradient_descent") {
      const double L = require_param(m, "L", declared_L(z));
      const double gap = p.oracle().value(t.averaged_point) - opt.f;
      const double bound = L * R * R / (2.0 * N);
      return make_check(id, gap, bound, gap <= bound + 1e-10, "f(x_avg) - f* vs L R^2 / (2N)");
    }
    if (m.name == "subgradient_descent") {
      const double gap = p.oracle().value(t.averaged_point) - opt.f;
      const double bound = require_param(m, "L0", c.L0) * R / std::sqrt(static_cast<double>(N));
      return make_check(id, gap, bound, gap <= bound + 1e-10, "f(x_avg) - f* vs L0 R / sqrt(N)");
    }
    if (m.name == "similar_triangles") {
      const Geometry geo(ProxSetup::euclidean(p.set()));
      const double bound = similar_triangles_gap_bound(geo, opt.x, x0, t.extras.at("A").back());
      const double gap = t.last_value() - opt.f;
      return make_check(id, gap, bound, gap <= bound + 1e-10, "f(x^N) - f* vs V(x*, x0) / A_N");
    }
    throw ConfigError("check 'model-rate' does not apply to " + m.name);
  }
  if (id == "linear-rate") {
    if (m.name != "gradient_descent") throw ConfigError("check 'linear-rate' applies to gradient_descent only");
    if (!c.mu) throw ConfigError("check 'linear-rate' needs a declared strong convexity modulus");
    const double L = require_param(m, "L", declared_L(z));
    const double f_star = need_opt().f;
    const double N = t.iterations();
    const double bound = std::exp(-*c.mu * N / L) * (t.values.front() - f_star);
    const double gap = t.last_value() - f_star;
    return make_check(id, gap, bound, gap <= bound + 1e-10, "f(x^N) - f* vs exp(-mu N/L)(f(x0) - f*)");
  }
  if (id == "universal-count") {
    if (m.name != "universal_gradient") throw ConfigError("check 'universal-count' applies to universal_gradient only");
    double nu = 0.0, Lnu = 0.0;
    if (z.info.count("L_nu")) {
      nu = z.info.at("nu");
      Lnu = z.info.at("L_nu");
    } else if (c.L1) {
      nu = 1.0;
      Lnu = *c.L1;
    } else if (c.L0) {
      Lnu = 2.0 * *c.L0;
    } else {
      throw ConfigError("check 'universal-count' needs a Holder constant");
    }
    const double R = m.params.count("R") ? m.params.at("R") : (c.R ? *c.R : (x0 - need_opt().x).norm());
    const double bound = 2.0 * universal_iteration_bound(Lnu, nu, R, m.get("epsilon", 1e-3));
    const double n = t.iterations();
    return make_check(id, n, bound, t.converged && n <= bound, "iterations vs twice the universal count");
  }
  if (id == "restart-count") {
    if (m.name != "restart_subgradient") throw ConfigError("check 'restart-count' applies to restart_subgradient only");
    const double mu = require_param(m, "mu", c.mu);
    const double eps = m.get("epsilon", 1e-3);
    const double R0 = m.params.count("R0") ? m.params.at("R0") : (x0 - need_opt().x).norm();
    const double L0 = require_param(m, "L0", c.L0 ? c.L0 : std::optional<double>(1.0 + mu * 2.0 * R0));
    const double total = static_cast<double>(restart_total_iterations(t));
    const double bound = 512.0 * L0 * L0 / (mu * eps);
    const double gap = t.last_value() - need_opt().f;
    return make_check(id, total, bound, total <= bound && gap <= eps, "total iterations vs 512 L0^2/(mu eps)");
  }
  if (id == "lower-bound") {
    if (!z.info.count("lower_bound")) throw ConfigError("check 'lower-bound' needs a worst-case family");
    const double lb = z.info.at("lower_bound");
    const int N = static_cast<int>(z.params.at("N"));
    const double f_star = need_opt().f;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < t.size() && static_cast<int>(k) <= N; ++k) best = std::min(best, t.values[k] - f_star);
    const double tol = z.family == "worst_case_smooth" ? 1e-12 : 1e-9;
    return make_check(id, best, lb, best >= lb - tol, "min gap over the first N steps vs lower bound");
  }
  throw ConfigError("check '" + id + "' does not apply to family " + z.family);
}

BoundCheck check_game(const std::string& id, const MatrixGame& g, const MethodSpec& m, const Trace& t) {
  if (id != "saddle-gap") throw ConfigError("check '" + id + "' does not apply to matrix games");
  const double gap = g.gap(t.averaged_point);
  if (m.name == "mirror_prox") {
    const double L = m.get("L", g.L);
    const double bound = 2.0 * L * g.geometry.max_radius(g.start()) / t.iterations();
    return make_check(id, gap, bound, gap <= bound + 1e-9, "saddle gap vs 2 L Omega / N");
  }
  const double eps = m.get("epsilon", 1e-2);
  return make_check(id, gap, eps, t.converged && gap <= eps, "saddle gap at termination vs epsilon");
}

BoundCheck check_program(const std::string& id, const ConstrainedProgram& prog, const MethodSpec& m,
                         const DualSolveResult& r) {
  if (id != "restoration-budget") throw ConfigError("check '" + id + "' does not apply to constrained programs");
  if (!prog.reference) throw ConfigError("check 'restoration-budget' needs a reference dual solution");
  const double eps = m.get("epsilon", 1e-3);
  const double eps_t = m.get("epsilon_tilde", eps);
  const double bound = restoration_budget(r.L, prog.reference->x_star.norm(), eps, eps_t);
  return make_check(id, r.iterations, bound, r.converged && r.iterations <= bound,
                    "stopping iteration vs max(2LR^2/eps, 2LR/eps_tilde)");
}

void truncate_rows(std::vector<CsvRow>& rows, const Budget& b) {
  if (!b.oracle_calls) return;
  auto it = std::find_if(rows.begin(), rows.end(), [&](const CsvRow& r) { return r.grad_calls > *b.oracle_calls; });
  rows.erase(it, rows.end());
}

}  // namespace

std::optional<double> Instance::f_star() const {
  if (zoo && zoo->problem.optimum()) return zoo->problem.optimum()->f;
  if (program && program->reference) return -program->reference->phi_star;
  return std::nullopt;
}

Instance make_instance(const ProblemSpec& spec, std::optional<std::uint64_t> seed_override) {
  Instance in;
  in.family = spec.family;
  const auto& p = spec.params;
  const std::uint64_t seed = seed_of(spec, seed_override);
  auto dim = [&](const char* key, double fallback) {
    const double v = param_or(p, key, fallback);
    if (v < 1.0 || v != std::floor(v)) throw ConfigError(std::string("config field 'problem.params.") + key + "': expected a positive integer");
    return static_cast<Index>(v);
  };
  if (spec.family == "matrix_game") {
    in.game = random_matrix_game(dim("m", 5), dim("n", 5), seed);
  } else if (spec.family == "random_entropy_program") {
    in.program = random_entropy_program(dim("m", 5), dim("n", 10), param_or(p, "mu", 0.1), seed);
  } else if (spec.family == "consensus_path") {
    const int n = static_cast<int>(dim("nodes", 5));
    Point c(n);
    for (int i = 0; i < n; ++i) c(i) = i + 1.0;
    in.program = consensus_problem(n, path_graph(n), Point::Ones(n), c);
  } else {
    auto params = p;
    if (spec.seed || seed_override) params["seed"] = static_cast<double>(seed);
    in.zoo = make_zoo_problem(spec.family, params);
  }
  return in;
}

RunResult execute(const Instance& in, const MethodSpec& m, const Budget& budget, const std::vector<std::string>& checks) {
  RunResult r;
  r.method = m.name;
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<DualSolveResult> dual;
  try {
    if (in.zoo) {
      r.trace = run_zoo(*in.zoo, m, budget.iterations);
    } else if (in.game) {
      r.trace = run_game(*in.game, m, budget.iterations);
    } else {
      ProgramRun pr = run_program(*in.program, m, budget.iterations);
      r.trace = std::move(pr.trace);
      dual = std::move(pr.result);
    }
  } catch (const DivergenceError& e) {
    r.diverged = true;
    r.message = e.what();
  } catch (const NumericalError& e) {
    r.diverged = true;
    r.message = e.what();
  } catch (const AdaptivityError& e) {
    r.diverged = true;
    r.message = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.diverged) return r;
  const bool inf_value = std::any_of(r.trace.values.begin(), r.trace.values.end(), [](double v) { return std::isinf(v); });
  if (inf_value || (in.zoo && std::isnan(r.trace.last_value()))) {
    r.diverged = true;
    r.message = "non-finite objective value in the trace";
    return r;
  }

  std::function<double(const Point&)> breg;
  if (in.zoo && in.zoo->problem.optimum()) {
    const Point xs = in.zoo->problem.optimum()->x;
    breg = [xs](const Point& x) { return 0.5 * (x - xs).squaredNorm(); };
  } else if (in.program && in.program->reference) {
    const Point xs = in.program->reference->x_star;
    breg = [xs](const Point& x) { return 0.5 * (x - xs).squaredNorm(); };
  }
  r.rows = trace_rows(r.trace, m.name, breg);
  truncate_rows(r.rows, budget);

  for (const auto& id : checks) {
    if (in.zoo)
      r.checks.push_back(check_zoo(id, *in.zoo, m, r.trace));
    else if (in.game)
      r.checks.push_back(check_game(id, *in.game, m, r.trace));
    else
      r.checks.push_back(check_program(id, *in.program, m, *dual));
  }
  return r;
}

namespace {

void report(const RunResult& r, const Budget& budget, std::ostream& log) {
  log << r.method << ": " << r.trace.iterations() << " iterations";
  if (!r.trace.values.empty()) log << ", final f = " << format_number(r.trace.last_value());
  log << '\n';
  if (budget.wall_seconds && r.seconds > *budget.wall_seconds)
    log << "  warning: wall time " << r.seconds << " s exceeded the budget of " << *budget.wall_seconds << " s\n";
  for (const auto& c : r.checks)
    log << "  check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "  measured " << format_number(c.measured)
        << "  predicted " << format_number(c.predicted) << "  (" << c.detail << ")\n";
}

int exit_code(const std::vector<RunResult>& results, std::ostream& log) {
  for (const auto& r : results)
    if (r.diverged) {
      log << r.method << " diverged: " << r.message << '\n';
      return kExitDivergence;
    }
  for (const auto& r : results)
    for (const auto& c : r.checks)
      if (!c.pass) return kExitBound;
  return kExitOk;
}

std::string output_path(const CliOptions& o, const std::string& file) {
  std::filesystem::path p(file);
  if (p.is_absolute()) return p.string();
  std::filesystem::create_directories(o.out_dir);
  return (std::filesystem::path(o.out_dir) / p).string();
}

void emit(const std::vector<RunResult>& results, const RunConfig& config, const CliOptions& options,
          const Instance& in, bool with_method, std::ostream& log) {
  std::vector<CsvRow> rows;
  for (const auto& r : results) rows.insert(rows.end(), r.rows.begin(), r.rows.end());
  const std::string csv_path = output_path(options, config.outputs.trace);
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw ConfigError("config field 'outputs.trace': cannot write " + csv_path);
    write_csv(out, rows, with_method);
  }
  log << "trace written to " << csv_path << '\n';
  if (!options.plot) return;
  const std::string plot_file = config.outputs.plot ? *config.outputs.plot
                                                    : std::filesystem::path(config.outputs.trace).replace_extension(".svg").string();
  std::ifstream csv(csv_path);
  const CsvTable table = read_csv(csv);
  const std::string svg_path = output_path(options, plot_file);
  std::ofstream svg(svg_path);
  if (!svg) throw ConfigError("config field 'outputs.plot': cannot write " + svg_path);
  svg << svg_plot(table, in.f_star(), config.problem.family);
  log << "plot written to " << svg_path << '\n';
}

}  // namespace

int run_command(const RunConfig& config, const CliOptions& options, std::ostream& log) {
  if (config.methods.size() != 1) throw ConfigError("config field 'method': run takes exactly one method");
  const Instance in = make_instance(config.problem, options.seed);
  std::vector<RunResult> results{execute(in, config.methods[0], config.budget, config.verify)};
  report(results[0], config.budget, log);
  const int code = exit_code(results, log);
  if (code != kExitDivergence) emit(results, config, options, in, false, log);
  return code;
}

int compare_command(const RunConfig& config, const CliOptions& options, std::ostream& log) {
  if (config.methods.empty()) throw ConfigError("config field 'methods': method list is empty");
  const std::size_t n = config.methods.size();
  std::vector<RunResult> results(n);
  std::vector<std::string> errors(n);
  // Each run gets its own instance; the instances are identical for a fixed seed.
  auto work = [&](std::size_t i) {
    try {
      const Instance in = make_instance(config.problem, options.seed);
      results[i] = execute(in, config.methods[i], config.budget, config.verify);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  const std::size_t threads = static_cast<std::size_t>(std::max(1, options.threads));
  for (std::size_t start = 0; start < n; start += threads) {
    std::vector<std::thread> pool;
    for (std::size_t i = start; i < std::min(n, start + threads); ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!errors[i].empty()) throw ConfigError("methods[" + std::to_string(i) + "]: " + errors[i]);
  for (const auto& r : results) report(r, config.budget, log);
  const int code = exit_code(results, log);
  if (code != kExitDivergence) emit(results, config, options, make_instance(config.problem, options.seed), true, log);
  return code;
}

}  // namespace fom::bench
