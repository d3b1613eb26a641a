#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "pentagram/error.hpp"
#include "pentagram/io.hpp"
#include "pentagram/random.hpp"

using namespace pentagram;

namespace {

enum ExitCode { kPass = 0, kViolation = 2, kDegenerate = 3, kConfig = 4 };

enum class Verbosity { quiet, info, debug };

Verbosity verbosity() {
  const char* env = std::getenv("PENTAGRAM_LOG");
  const std::string v = env ? env : "";
  if (v == "quiet" || v == "0") return Verbosity::quiet;
  if (v == "debug" || v == "2") return Verbosity::debug;
  return Verbosity::info;
}

void log(Verbosity level, const std::string& msg) {
  if (level <= verbosity()) std::cerr << msg << '\n';
}

struct RunConfig {
  int d = 3;
  int n = 7;
  int p = 2;
  int r = 1;
  int steps = 0;
  int trials = 1;
  int grid = 256;
  std::string backend = "exact";
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string in;
  std::string out;
  bool closed = false;
  bool near_regular = false;
  std::string trace = "vertices";
  std::vector<std::string> scales{"1/2", "3/2", "3"};
  std::vector<double> nodes;
};

struct Report {
  std::string csv;
  bool pass = true;
  std::string summary;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::ConfigError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Main artifacts go to stdout without --out; side artifacts are only written with --out.
void emit(const RunConfig& cfg, const std::string& name, const std::string& content, bool main_artifact) {
  if (cfg.out.empty()) {
    if (main_artifact) std::cout << content;
    return;
  }
  std::filesystem::create_directories(cfg.out);
  const auto path = std::filesystem::path(cfg.out) / name;
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ConfigError, "cannot write " + path.string());
  f << content;
  log(Verbosity::debug, "wrote " + path.string());
}

template <class F>
auto run_trials(int count, F task) {
  using R = decltype(task(0));
  const int width = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<R> out;
  for (int start = 0; start < count; start += width) {
    std::vector<std::future<R>> batch;
    for (int t = start; t < std::min(count, start + width); ++t) batch.push_back(std::async(std::launch::async, task, t));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

TwistedPolygon<Rational> source_polygon(const RunConfig& cfg, int trial, bool force_closed = false) {
  if (!cfg.in.empty()) return polygon_from_json<Rational>(read_file(cfg.in));
  RandomSource rng(cfg.seed + static_cast<std::uint64_t>(trial));
  if (force_closed || cfg.closed) return rng.closed_polygon(cfg.d, cfg.n);
  if (cfg.near_regular) return rng.near_regular_polygon(cfg.d, cfg.n);
  return rng.twisted_polygon(cfg.d, cfg.n);
}

template <class S>
std::string str(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

template <class S>
bool negligible(const S& x, double tol) {
  if constexpr (is_exact_v<S>) {
    return x == S(0);
  } else {
    return std::abs(x) <= tol;
  }
}

template <class S>
double magnitude(const S& x) {
  return std::abs(ScalarTraits<S>::to_double(x));
}

const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

void require_dim(const RunConfig& cfg, int d, const char* what) {
  if (cfg.d != d) throw Error(ErrorKind::ConfigError, std::string(what) + " needs --d " + std::to_string(d));
}

template <class F>
int with_backend(const RunConfig& cfg, F&& f) {
  if (cfg.backend == "exact") return f(Rational{});
  if (cfg.backend == "float") return f(double{});
  throw Error(ErrorKind::ConfigError, "backend must be exact or float");
}

int finish(const RunConfig& cfg, const std::string& name, const Report& report) {
  emit(cfg, name, report.csv, true);
  log(Verbosity::info, report.summary + (report.pass ? " PASS" : " FAIL"));
  return report.pass ? kPass : kViolation;
}

int cmd_gen(const RunConfig& cfg) {
  return with_backend(cfg, [&]<class S>(S) {
    emit(cfg, "polygon.json", polygon_to_json(to_backend<S>(source_polygon(cfg, 0))), true);
    return int(kPass);
  });
}

template <class S>
TwistedPolygon<S> normalized(const TwistedPolygon<S>& poly) {
  if constexpr (is_exact_v<S>) {
    return poly;
  } else {
    std::vector<Vec<S>> vs;
    for (const auto& v : poly.vertices()) vs.push_back(v / v.norm());
    return TwistedPolygon<S>(std::move(vs), poly.monodromy());
  }
}

int cmd_map(const RunConfig& cfg) {
  const int steps = cfg.steps > 0 ? cfg.steps : 1;
  const MapParams params{cfg.p, cfg.r, true};
  return with_backend(cfg, [&]<class S>(S) {
    std::vector<TwistedPolygon<S>> trace{to_backend<S>(source_polygon(cfg, 0))};
    for (int s = 0; s < steps; ++s) trace.push_back(normalized(general_map(trace.back(), params)));
    std::ostringstream os;
    if (cfg.trace == "xyz") {
      require_dim(cfg, 3, "xyz trace");
      std::vector<Xyz3<S>> xyz;
      for (const auto& poly : trace) xyz.push_back(xyz_geometric(poly));
      write_xyz_csv(os, xyz);
    } else if (cfg.trace == "vertices") {
      write_vertex_csv(os, trace);
    } else {
      throw Error(ErrorKind::ConfigError, "trace must be vertices or xyz");
    }
    emit(cfg, "trace.csv", os.str(), true);
    emit(cfg, "polygon.json", polygon_to_json(trace.back()), false);
    log(Verbosity::info, "map: steps=" + std::to_string(steps) + ", T_{" + std::to_string(cfg.p) + "," +
                             std::to_string(cfg.r) + "}");
    return int(kPass);
  });
}

template <class S>
Report verify_lax_report(const RunConfig& cfg) {
  require_dim(cfg, 3, "verify lax");
  struct Row {
    S defect;
    int n;
  };
  const auto rows = run_trials(cfg.trials, [&](int t) {
    const auto poly = to_backend<S>(source_polygon(cfg, t));
    return Row{verify_lax(xyz_geometric(poly)), poly.size()};
  });
  Report rep;
  std::ostringstream os;
  os << "trial,seed,n,defect,status\n";
  double worst = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const bool ok = negligible(rows[t].defect, cfg.tol);
    rep.pass = rep.pass && ok;
    worst = std::max(worst, magnitude(rows[t].defect));
    os << t << ',' << cfg.seed + t << ',' << rows[t].n << ',' << str(rows[t].defect) << ',' << status(ok) << '\n';
  }
  rep.csv = os.str();
  rep.summary = "verify lax: trials=" + std::to_string(rows.size()) + ", max defect " + str(worst);
  return rep;
}

template <class S>
S relative_change(const S& now, const S& first) {
  const S diff = ScalarTraits<S>::abs(now - first);
  if constexpr (is_exact_v<S>) {
    return diff;
  } else {
    return diff / std::max(S(1e-300), std::abs(first));
  }
}

template <class S>
Report verify_integrals_report(const RunConfig& cfg) {
  require_dim(cfg, 3, "verify integrals");
  const int steps = cfg.steps > 0 ? cfg.steps : 5;
  struct Trial {
    std::vector<Integrals3D<S>> trace;
    std::string spectral;
  };
  const auto trials = run_trials(cfg.trials, [&](int t) {
    auto xyz = xyz_geometric(to_backend<S>(source_polygon(cfg, t)));
    const auto r = spectral_function(xyz);
    Trial out{{extract_integrals(r)}, spectral_to_json(r)};
    for (int s = 0; s < steps; ++s) {
      xyz = explicit_step(xyz);
      out.trace.push_back(extract_integrals(spectral_function(xyz)));
    }
    return out;
  });
  Report rep;
  std::ostringstream os;
  os << "trial,step,drift,status\n";
  double worst = 0;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const auto& trace = trials[t].trace;
    for (std::size_t s = 1; s < trace.size(); ++s) {
      S drift(0);
      for (const auto part : {&Integrals3D<S>::I, &Integrals3D<S>::J, &Integrals3D<S>::G})
        for (std::size_t j = 0; j < (trace[s].*part).size(); ++j)
          drift = std::max(drift, relative_change((trace[s].*part)[j], (trace[0].*part)[j]));
      const bool ok = negligible(drift, cfg.tol);
      rep.pass = rep.pass && ok;
      worst = std::max(worst, magnitude(drift));
      os << t << ',' << s << ',' << str(drift) << ',' << status(ok) << '\n';
    }
    std::ostringstream trace_csv;
    write_integrals_csv(trace_csv, trace);
    emit(cfg, "integrals_" + std::to_string(t) + ".csv", trace_csv.str(), false);
    emit(cfg, "spectral_" + std::to_string(t) + ".json", trials[t].spectral, false);
  }
  rep.csv = os.str();
  rep.summary = "verify integrals: steps=" + std::to_string(steps) + ", max drift " + str(worst);
  return rep;
}

template <class S>
Report verify_duality_report(const RunConfig& cfg) {
  const auto rows = run_trials(cfg.trials, [&](int t) {
    return duality_defect(to_backend<S>(source_polygon(cfg, t)), cfg.p, cfg.r);
  });
  Report rep;
  std::ostringstream os;
  os << "trial,d,p,r,defect,shift,status\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const bool ok = negligible(rows[t].defect, cfg.tol) && rows[t].shift == rows[0].shift;
    rep.pass = rep.pass && ok;
    os << t << ',' << cfg.d << ',' << cfg.p << ',' << cfg.r << ',' << str(rows[t].defect) << ',' << rows[t].shift
       << ',' << status(ok) << '\n';
  }
  rep.csv = os.str();
  rep.summary = "verify duality: T_{" + std::to_string(cfg.r) + "," + std::to_string(cfg.p) + "} after T_{" +
                std::to_string(cfg.p) + "," + std::to_string(cfg.r) + "} is the shift by " +
                std::to_string(rows.empty() ? 0 : rows[0].shift);
  return rep;
}

template <class S>
Report verify_scaling_report(const RunConfig& cfg) {
  if (cfg.d > 6) log(Verbosity::info, "verify scaling: d > 6 is an unverified conjecture range");
  std::vector<S> scales;
  for (const auto& s : cfg.scales) scales.push_back(ScalarTraits<S>::parse(s));
  const auto rows = run_trials(cfg.trials, [&](int t) {
    std::vector<S> out;
    if constexpr (is_exact_v<S>) {
      const auto poly = source_polygon(cfg, t);
      for (const auto& s : scales) out.push_back(scaling_invariance_defect(poly, s));
    } else if (!cfg.in.empty() || cfg.d <= 3) {
      const auto poly = to_backend<S>(source_polygon(cfg, t));
      for (const auto& s : scales) out.push_back(scaling_invariance_defect(poly, s));
    } else {
      // Balanced inputs halfway along the scaling orbit keep both sides well conditioned.
      RandomSource rng(cfg.seed + static_cast<std::uint64_t>(t));
      const auto c0 = to_backend<S>(rng.coefficient_sequence(cfg.d, cfg.n));
      for (const auto& s : scales) out.push_back(scaling_invariance_defect(scaling(c0, S(1) / std::sqrt(s)), s));
    }
    return out;
  });
  Report rep;
  std::ostringstream os;
  os << "trial,s,defect,status\n";
  double worst = 0;
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t i = 0; i < scales.size(); ++i) {
      const bool ok = negligible(rows[t][i], cfg.tol);
      rep.pass = rep.pass && ok;
      worst = std::max(worst, magnitude(rows[t][i]));
      os << t << ',' << cfg.scales[i] << ',' << str(rows[t][i]) << ',' << status(ok) << '\n';
    }
  rep.csv = os.str();
  rep.summary = "verify scaling: d = " + std::to_string(cfg.d) + ", max defect " + str(worst);
  return rep;
}

template <class S>
Report verify_codes_report(const RunConfig& cfg) {
  require_dim(cfg, 3, "verify codes");
  if (cfg.n % 2 == 0) throw Error(ErrorKind::ConfigError, "verify codes needs odd --n");
  const int q = cfg.n / 2;
  const auto rows = run_trials(cfg.trials, [&](int t) {
    const auto abc = abc_from_polygon(to_backend<S>(source_polygon(cfg, t)));
    const auto integrals = extract_integrals(spectral_function(abc));
    std::vector<std::pair<S, S>> out;
    for (int i = 0; i <= q; ++i) {
      const auto [ih, gh] = code_integrals(abc, cfg.n - 2 * i);
      out.emplace_back(ScalarTraits<S>::abs(ih - integrals.I[i]), ScalarTraits<S>::abs(gh - integrals.G[i]));
    }
    return out;
  });
  Report rep;
  std::ostringstream os;
  os << "trial,index,weight,codes,I_defect,G_defect,status\n";
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (int i = 0; i <= q; ++i) {
      const auto codes = admissible_codes(cfg.n, cfg.n - 2 * i);
      const std::string list = std::accumulate(codes.begin(), codes.end(), std::string{},
                                               [](std::string a, const std::string& b) { return a.empty() ? b : a + ' ' + b; });
      const auto& [di, dg] = rows[t][i];
      const bool ok = negligible(di, cfg.tol) && negligible(dg, cfg.tol);
      rep.pass = rep.pass && ok;
      os << t << ',' << i << ',' << cfg.n - 2 * i << ',' << list << ',' << str(di) << ',' << str(dg) << ','
         << status(ok) << '\n';
    }
  rep.csv = os.str();
  rep.summary = "verify codes: n = " + std::to_string(cfg.n) + ", weights 1.." + std::to_string(cfg.n);
  return rep;
}

template <class S>
Report verify_closed_report(const RunConfig& cfg) {
  require_dim(cfg, 3, "verify closed");
  const auto rows = run_trials(cfg.trials, [&](int t) { return closedness_residuals(to_backend<S>(source_polygon(cfg, t, true))); });
  const int rank_plus = rank(closed_condition_system(cfg.n, 1).first);
  const int rank_minus = rank(closed_condition_system(cfg.n, -1).first);
  Report rep;
  std::ostringstream os;
  os << "trial,sign,max_residual,identity_plus,identity_minus,rank_plus,rank_minus,status\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const auto largest = [](const std::array<S, 10>& v) {
      S m(0);
      for (const auto& x : v) m = std::max(m, ScalarTraits<S>::abs(x));
      return m;
    };
    const S plus = largest(rows[t].plus), minus = largest(rows[t].minus);
    const bool plus_ok = negligible(plus, cfg.tol), minus_ok = negligible(minus, cfg.tol);
    const int sign = plus_ok ? 1 : (minus_ok ? -1 : 0);
    const bool ok = sign != 0 && negligible(rows[t].identity_plus, cfg.tol) &&
                    negligible(rows[t].identity_minus, cfg.tol) && rank_plus == 9 && rank_minus == 9;
    rep.pass = rep.pass && ok;
    os << t << ',' << sign << ',' << str(sign >= 0 ? plus : minus) << ',' << str(rows[t].identity_plus) << ','
       << str(rows[t].identity_minus) << ',' << rank_plus << ',' << rank_minus << ',' << status(ok) << '\n';
  }
  rep.csv = os.str();
  rep.summary = "verify closed: n=" + std::to_string(cfg.n) + ", trials=" + std::to_string(rows.size());
  return rep;
}

int cmd_verify(const RunConfig& cfg, const std::string& what) {
  return with_backend(cfg, [&]<class S>(S) {
    if (what == "lax") return finish(cfg, "lax.csv", verify_lax_report<S>(cfg));
    if (what == "integrals") return finish(cfg, "integrals.csv", verify_integrals_report<S>(cfg));
    if (what == "duality") return finish(cfg, "duality.csv", verify_duality_report<S>(cfg));
    if (what == "scaling") return finish(cfg, "scaling.csv", verify_scaling_report<S>(cfg));
    if (what == "codes") return finish(cfg, "codes.csv", verify_codes_report<S>(cfg));
    if (what == "closed") return finish(cfg, "closed.csv", verify_closed_report<S>(cfg));
    throw Error(ErrorKind::ConfigError, "unknown check " + what);
  });
}

int cmd_genus(const RunConfig& cfg) {
  if (cfg.backend != "exact") throw Error(ErrorKind::ConfigError, "genus needs the exact backend");
  require_dim(cfg, 3, "genus");
  struct Row {
    BranchCensus census;
    std::string spectral;
  };
  const auto rows = run_trials(cfg.trials, [&](int t) {
    const auto r = spectral_function(source_polygon(cfg, t));
    return Row{finite_branch_count(r), spectral_to_json(r)};
  });
  const int n = cfg.n;
  const int expected = n % 2 ? 3 * (n / 2) : 3 * (n / 2) - 3;
  Report rep;
  std::ostringstream os;
  os << "trial,n,nu_fin,nu,genus,expected_genus,status\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const auto& c = rows[t].census;
    const bool ok = c.nu_finite == 3 * n && c.genus == expected;
    rep.pass = rep.pass && ok;
    os << t << ',' << n << ',' << c.nu_finite << ',' << c.nu << ',' << c.genus << ',' << expected << ',' << status(ok)
       << '\n';
    emit(cfg, "spectral_" + std::to_string(t) + ".json", rows[t].spectral, false);
  }
  rep.csv = os.str();
  rep.summary = "genus: nu_fin=" + std::to_string(rows[0].census.nu_finite) + " g=" + std::to_string(rows[0].census.genus);
  return finish(cfg, "genus.csv", rep);
}

int cmd_continuum(const RunConfig& cfg) {
  using LD = long double;
  const auto op = test_operator<LD>(cfg.d);
  const auto curve = fundamental_solutions(op, cfg.grid);
  const std::vector<LD> nodes(cfg.nodes.begin(), cfg.nodes.end());
  const auto offsets = nodes.empty() ? symmetric_offsets<LD>(cfg.d) : nodes;
  std::vector<LD> sorted = offsets;
  std::sort(sorted.begin(), sorted.end());
  bool symmetric = true;
  for (std::size_t i = 0; i < sorted.size(); ++i) symmetric = symmetric && sorted[i] == -sorted[sorted.size() - 1 - i];
  const auto eps = epsilon_grid<LD>();
  const auto family = run_trials(static_cast<int>(eps.size()), [&](int j) { return envelope(curve, eps[j], offsets); });

  Report rep;
  EpsilonFit<LD> fit;
  try {
    fit = fit_epsilon2(curve, family, symmetric);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PoorConditioning) throw;
    log(Verbosity::info, std::string("continuum: ") + e.what());
    fit = fit_epsilon2(curve, family, symmetric, LD(1e300));
    rep.pass = false;
  }
  std::ostringstream sweep, samples;
  write_sweep_csv(sweep, fit);
  write_continuum_csv(samples, curve, family.front(), fit);
  rep.csv = sweep.str();
  emit(cfg, "continuum.csv", samples.str(), false);

  std::ostringstream summary;
  summary << "continuum: C_" << cfg.d << " estimate " << str(fit.c_d) << ", residual " << str(fit.residual)
          << ", remainder order " << str(fit.remainder_order);
  if (cfg.d == 3) {
    const LD e = eps.back();
    const auto rec = recover_operator(family.back(), 3);
    const auto rhs = kdv24_rhs(op.sample(2, cfg.grid), op.sample(1, cfg.grid), op.sample(0, cfg.grid));
    LD worst = 0;
    for (int j = 0; j < 3; ++j) {
      const Vec<LD> drift = (rec[2 - j] - op.sample(2 - j, cfg.grid)) / (e * e);
      const Vec<LD> want = fit.c_d * rhs[j];
      worst = std::max(worst, (drift - want).cwiseAbs().maxCoeff() / want.cwiseAbs().maxCoeff());
    }
    summary << ", (2,4)-KdV drift mismatch " << str(worst);
    rep.pass = rep.pass && worst < LD(0.02);
  }
  rep.summary = summary.str();
  return finish(cfg, "sweep.csv", rep);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::ParseError:
    case ErrorKind::IrrationalRoot:
    case ErrorKind::GcdObstruction:
      return kConfig;
    default:
      return kDegenerate;
  }
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--d", cfg.d, "projective dimension")->check(CLI::PositiveNumber);
  app->add_option("--n", cfg.n, "polygon period")->check(CLI::PositiveNumber);
  app->add_option("--p", cfg.p, "diagonal stride")->check(CLI::PositiveNumber);
  app->add_option("--r", cfg.r, "intersection stride")->check(CLI::PositiveNumber);
  app->add_option("--steps", cfg.steps, "iterations")->check(CLI::NonNegativeNumber);
  app->add_option("--trials", cfg.trials, "random trials, seeds seed..seed+trials-1")->check(CLI::PositiveNumber);
  app->add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app->add_option("--seed", cfg.seed, "random seed");
  app->add_option("--tol", cfg.tol, "float tolerance");
  app->add_option("--in", cfg.in, "polygon JSON instead of a random polygon");
  app->add_option("--out", cfg.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher pentagram maps: generation, iteration and integrability checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string check;

  auto* gen = app.add_subcommand("gen", "random polygon as JSON");
  add_common(gen, cfg);
  gen->add_flag("--closed", cfg.closed, "trivial monodromy");
  gen->add_flag("--near-regular", cfg.near_regular, "well-conditioned polygon near the moment curve");

  auto* map = app.add_subcommand("map", "iterate T_{p,r} and emit a trace");
  add_common(map, cfg);
  map->add_flag("--closed", cfg.closed, "start from a closed polygon");
  map->add_option("--trace", cfg.trace, "vertices or xyz");

  auto* verify = app.add_subcommand("verify", "run a module check");
  add_common(verify, cfg);
  verify->add_option("check", check, "lax|integrals|duality|scaling|codes|closed")
      ->required()
      ->check(CLI::IsMember({"lax", "integrals", "duality", "scaling", "codes", "closed"}));
  verify->add_option("--scale", cfg.scales, "scaling parameters")->delimiter(',');

  auto* genus = app.add_subcommand("genus", "finite branch census of the spectral curve");
  add_common(genus, cfg);

  auto* continuum = app.add_subcommand("continuum", "eps sweep of the envelope and the eps^2 fit");
  add_common(continuum, cfg);
  continuum->add_option("--grid", cfg.grid, "grid points on [0, 2 pi)")->check(CLI::Range(8, 1 << 16));
  continuum->add_option("--nodes", cfg.nodes, "node offsets t_i (default symmetric)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  try {
    if (!cfg.in.empty()) {
      const auto poly = polygon_from_json<Rational>(read_file(cfg.in));
      cfg.d = poly.dim();
      cfg.n = poly.size();
    }
    if (gen->parsed()) return cmd_gen(cfg);
    if (map->parsed()) return cmd_map(cfg);
    if (verify->parsed()) return cmd_verify(cfg, check);
    if (genus->parsed()) return cmd_genus(cfg);
    if (continuum->parsed()) return cmd_continuum(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  }
  return kConfig;
}
