#include "commands.hpp"

#include "sgf/capacity/ball.hpp"
#include "sgf/capacity/export.hpp"
#include "sgf/capacity/riesz_reference.hpp"
#include "sgf/capacity/validators.hpp"
#include "sgf/error.hpp"
#include "sgf/fieldsim/atomize.hpp"
#include "sgf/persistence/estimators.hpp"
#include "sgf/persistence/repulsion.hpp"
#include "sgf/spectral/constructions.hpp"
#include "sgf/spectral/serialize.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace sgflab {

namespace {

using namespace sgf;

// ---- config helpers ----

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("key '") + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) && !j.at(key).is_null() ? get<T>(j, key) : fallback;
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

SpectralMeasure parse_measure(const json& j) {
  const std::string kind = get<std::string>(j, "kind");
  if (kind == "delta") {
    only_keys(j, {"kind", "mass", "d"}, "measure");
    const int d = get_or(j, "d", 1);
    return SpectralMeasure(d).with_atom(Point(d, 0.0), get_or(j, "mass", 1.0));
  }
  if (kind == "riesz") {
    only_keys(j, {"kind", "alpha", "d", "step", "extent"}, "measure");
    const int d = get_or(j, "d", 1);
    RieszGridSpec g = default_riesz_grid(d);
    g.step = get_or(j, "step", g.step);
    g.extent = get_or(j, "extent", g.extent);
    return riesz_measure(get<double>(j, "alpha"), d, g);
  }
  if (kind == "riesz_torus") {
    only_keys(j, {"kind", "alpha", "step"}, "measure");
    return riesz_torus_measure(get<double>(j, "alpha"), get_or(j, "step", 1.0 / 256.0));
  }
  if (kind == "iid") {
    only_keys(j, {"kind", "N"}, "measure");
    return iid_lattice_measure(get<int>(j, "N"));
  }
  if (kind == "atoms") {
    only_keys(j, {"kind", "d", "lattice", "atoms"}, "measure");
    const int d = get_or(j, "d", 1);
    SpectralMeasure mu(d, get_or(j, "lattice", false));
    // Each entry is [freq_1, ..., freq_d, mass per side].
    for (const auto& a : get<std::vector<std::vector<double>>>(j, "atoms")) {
      if (static_cast<int>(a.size()) != d + 1) throw ConfigError("atom entries need d frequencies and a mass");
      mu = mu.with_pair(Point(a.begin(), a.end() - 1), a.back());
    }
    return mu;
  }
  if (kind == "cantor") {
    only_keys(j, {"kind", "J", "s", "depth", "alpha", "include_riesz"}, "measure");
    CantorOptions opt;
    opt.alpha = get_or(j, "alpha", opt.alpha);
    opt.include_riesz = get_or(j, "include_riesz", opt.include_riesz);
    const int depth = get<int>(j, "depth");
    if (j.contains("J")) return cantor_measure_from_index_set(get<std::vector<int>>(j, "J"), depth, opt);
    return cantor_measure(get<std::vector<int>>(j, "s"), depth, opt);
  }
  if (kind == "irregular") {
    only_keys(j, {"kind", "alpha", "epsilon", "ratios"}, "measure");
    return irregular_measure(get<double>(j, "alpha"), get<double>(j, "epsilon"), get<std::vector<int>>(j, "ratios"))
        .measure;
  }
  if (kind == "json") {
    only_keys(j, {"kind", "spec"}, "measure");
    return measure_from_json(j.at("spec"));
  }
  throw ConfigError("unknown measure kind '" + kind + "'");
}

std::vector<Point> parse_domain(const json& j, const AtomizedSpectrum& spec) {
  const std::string kind = get<std::string>(j, "kind");
  if (kind == "sites") {
    only_keys(j, {"kind", "N"}, "domain");
    std::vector<Point> g;
    for (int i = 0; i < get<int>(j, "N"); ++i) g.push_back(Point(spec.dim, 0.0)), g.back()[0] = i;
    if (g.empty()) throw ConfigError("domain needs N >= 1");
    return g;
  }
  if (kind == "ball") {
    only_keys(j, {"kind", "T", "spacing"}, "domain");
    return ball_grid(spec, get<double>(j, "T"), get_or(j, "spacing", 0.25));
  }
  if (kind == "points") {
    only_keys(j, {"kind", "points"}, "domain");
    auto pts = get<std::vector<std::vector<double>>>(j, "points");
    if (pts.empty()) throw ConfigError("domain needs at least one point");
    for (const auto& p : pts)
      if (static_cast<int>(p.size()) != spec.dim) throw ConfigError("domain point dimension mismatch");
    return {pts.begin(), pts.end()};
  }
  throw ConfigError("unknown domain kind '" + kind + "'");
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// ---- commands ----

CommandResult riesz_table(const json& cfg, const RunContext&) {
  CommandResult r;
  std::ostringstream os;
  os << "alpha,d,regime,c_alpha,r,h_alpha\n";
  const auto radii = get<std::vector<double>>(cfg, "radii");
  for (double a : get<std::vector<double>>(cfg, "alphas"))
    for (int d : get<std::vector<int>>(cfg, "dims")) {
      RieszReference ref;
      try {
        ref = riesz_reference(a, d);
      } catch (const DomainError& e) {
        r.notes.push_back("skipped (alpha=" + num(a) + ", d=" + std::to_string(d) + "): " + e.what());
        continue;
      }
      for (double x : radii)
        os << num(a) << ',' << d << ',' << ref.regime_name() << ',' << num(ref.capacity) << ',' << num(x) << ','
           << num(ref.potential(x)) << '\n';
    }
  r.csv = os.str();
  return r;
}

CommandResult capacity(const json& cfg, const RunContext&) {
  CommandResult r;
  auto mu = parse_measure(cfg.at("measure"));
  r.spectrum_hash = spectrum_hash(mu);
  BallResolution res;
  res.spacing = get<double>(cfg, "spacing");
  res.shells = get<int>(cfg, "shells");
  SolverOptions opt;
  opt.gap_abs = get<double>(cfg, "gap_abs");
  opt.gap_rel = get<double>(cfg, "gap_rel");
  opt.max_iterations = get<long>(cfg, "max_iterations");
  const double pot_tol = get<double>(cfg, "pot_tol");
  std::ostringstream os;
  os << "T,method,points,capacity,energy,gap,iterations,converged,min_potential,dual_residual,dual_holds\n";
  std::string last_solution;
  for (double T : get<std::vector<double>>(cfg, "T")) {
    auto b = capacity_ball(mu, T, res, opt);
    const auto& s = b.solution;
    DualReport dual;
    if (!s.infinite_capacity && b.method != "radial-shells") dual = dual_check(b.gram, s, pot_tol);
    const bool dual_ok = b.method == "radial-shells" || s.infinite_capacity || dual.holds;
    os << num(T) << ',' << b.method << ',' << s.points.size() << ',' << num(s.capacity) << ',' << num(s.energy) << ','
       << num(s.gap) << ',' << s.iterations << ',' << (s.converged ? 1 : 0) << ',' << num(s.min_potential) << ','
       << num(dual.relative_residual) << ',' << (dual_ok ? 1 : 0) << '\n';
    if (!s.converged) r.failures.push_back("T=" + num(T) + ": solver did not reach the gap tolerance");
    if (get<bool>(cfg, "write_solution")) {
      std::ostringstream sol;
      write_solution_csv(sol, s);
      last_solution = sol.str();
    }
    r.summary["capacity"][num(T)] = s.capacity;
  }
  if (!last_solution.empty()) r.extra_files.emplace_back("solution.csv", last_solution);
  r.csv = os.str();
  return r;
}

CommandResult persist(const json& cfg, const RunContext& ctx) {
  CommandResult r;
  auto mu = parse_measure(cfg.at("measure"));
  r.spectrum_hash = spectrum_hash(mu);
  auto spec = atomize(mu, get<double>(cfg, "resolution"));
  auto domain = parse_domain(cfg.at("domain"), spec);
  const std::string method = get<std::string>(cfg, "method");
  if (method != "naive" && method != "importance") throw ConfigError("method must be 'naive' or 'importance'");
  MCOptions mc;
  mc.n_samples = get<long>(cfg, "n_samples");
  mc.seed = ctx.seed;
  mc.threads = ctx.threads;
  if (mc.n_samples < 1) throw ConfigError("n_samples must be >= 1");
  std::optional<EquilibriumSolution> sol;
  if (method == "importance") sol = domain_equilibrium(spec, domain);
  std::ostringstream os;
  os << "level,method,points,n_samples,hits,p,theta,se_p,se_theta,ess,tilt_level,rare,p_upper,unreliable\n";
  for (double level : get<std::vector<double>>(cfg, "levels")) {
    PersistenceEstimate e = method == "naive"
                                ? persist_naive(spec, domain, level, mc)
                                : persist_importance(spec, domain, level,
                                                     equilibrium_tilt(*sol, get<double>(cfg, "tilt_level")), mc);
    os << num(level) << ',' << e.method << ',' << domain.size() << ',' << e.n_samples << ',' << e.hits << ','
       << num(e.p) << ',' << num(e.theta) << ',' << num(e.se_p) << ',' << num(e.se_theta) << ',' << num(e.ess) << ','
       << num(e.tilt_level) << ',' << (e.rare ? 1 : 0) << ',' << num(e.p_upper) << ',' << (e.unreliable ? 1 : 0)
       << '\n';
    if (e.rare) r.notes.push_back("level " + num(level) + ": rare (no hits); p_upper is a one-sided 95% bound");
    if (e.unreliable) r.failures.push_back("level " + num(level) + ": effective sample size below 10");
  }
  r.summary["atomization"] = {{"atoms", spec.atoms.size()},
                              {"displaced_mass", spec.displaced_mass},
                              {"max_displacement", spec.max_displacement}};
  r.csv = os.str();
  return r;
}

CommandResult repulsion(const json& cfg, const RunContext& ctx) {
  CommandResult r;
  auto mu = parse_measure(cfg.at("measure"));
  r.spectrum_hash = spectrum_hash(mu);
  auto spec = atomize(mu, get<double>(cfg, "resolution"));
  RepulsionConfig rc;
  rc.alpha = get<double>(cfg, "alpha");
  rc.m = get_or(cfg, "m", mu.ac_mass());
  rc.level = get<double>(cfg, "level");
  rc.spacing = get<double>(cfg, "spacing");
  rc.n_conditioned = get<long>(cfg, "n_conditioned");
  rc.max_samples = get<long>(cfg, "max_samples");
  rc.min_accept_rate = get<double>(cfg, "min_accept_rate");
  rc.mc.seed = ctx.seed;
  rc.mc.threads = ctx.threads;
  std::ostringstream os;
  os << "T,accepted,tried,accept_rate,mean,se,ell_T,reference,normalized,gap,gap_se,all_positive,skipped\n";
  for (const auto& s : repulsion_experiment(spec, get<std::vector<double>>(cfg, "T"), uniform_ball_measure(), rc)) {
    os << num(s.T) << ',' << s.conditioned.accepted << ',' << s.conditioned.tried << ',' << num(s.accept_rate) << ','
       << num(s.conditioned.mean) << ',' << num(s.conditioned.se) << ',' << num(s.ell_T) << ',' << num(s.reference)
       << ',' << num(s.normalized) << ',' << num(s.gap) << ',' << num(s.gap_se) << ','
       << (s.conditioned.all_positive ? 1 : 0) << ',' << (s.skipped ? 1 : 0) << '\n';
    if (s.skipped) r.failures.push_back("T=" + num(s.T) + ": " + s.note);
  }
  r.summary["m"] = rc.m;
  r.csv = os.str();
  return r;
}

CommandResult counterexample(const json& cfg, const RunContext&) {
  CommandResult r;
  const std::string which = get<std::string>(cfg, "which");
  std::ostringstream os;
  if (which == "cantor") {
    const json& c = cfg.at("cantor");
    only_keys(c, {"J", "s", "depth"}, "cantor");
    const int depth = get<int>(c, "depth");
    std::vector<int> J = c.contains("J") && !c.at("J").is_null() ? get<std::vector<int>>(c, "J")
                                                                  : cantor_index_set(get<std::vector<int>>(c, "s"), depth);
    CantorOptions opt;
    opt.include_riesz = false;
    auto mu = cantor_measure_from_index_set(J, depth, opt);
    r.spectrum_hash = spectrum_hash(mu);
    os << "start,width,mass\n";
    for (const auto& iv : CantorRecipe{J, depth, 1.0}.intervals())
      os << num(iv.start) << ',' << num(iv.width) << ',' << num(iv.mass) << '\n';
    r.summary["intervals"] = std::size_t{1} << CantorRecipe{J, depth, 1.0}.branching();
  } else if (which == "irregular") {
    const json& c = cfg.at("irregular");
    only_keys(c, {"alpha", "epsilon", "ratios", "rho", "spacing"}, "irregular");
    const double eps = get<double>(c, "epsilon"), rho = get<double>(c, "rho");
    auto im = irregular_measure(get<double>(c, "alpha"), eps, get<std::vector<int>>(c, "ratios"));
    r.spectrum_hash = spectrum_hash(im.measure);
    BallResolution res;
    res.spacing = get<double>(c, "spacing");
    os << "i,T_a,T_b,cap_a,cap_b,ratio,exceeds_rho\n";
    bool first = true;
    for (std::size_t i = 1; i + 1 < im.scales.size(); ++i) {
      const double Tb = im.scales[i + 1] / 4.0, Ta = Tb - im.scales[i] / eps;
      if (!(Ta > 0.0)) continue;
      auto row = capacity_ratio(im.measure, Ta, Tb, res);
      os << i + 1 << ',' << num(Ta) << ',' << num(Tb) << ',' << num(row.cap) << ',' << num(row.cap_next) << ','
         << num(row.ratio) << ',' << (row.ratio > rho ? 1 : 0) << '\n';
      if (first) r.summary["first_ratio"] = row.ratio;
      first = false;
    }
  } else {
    throw ConfigError("which must be 'irregular' or 'cantor'");
  }
  r.csv = os.str();
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"riesz-table", "capacity", "persist", "repulsion", "counterexample"};
  return names;
}

json command_defaults(const std::string& command) {
  if (command == "riesz-table")
    return {{"alphas", {0.0, 0.5, 1.0, 2.0}}, {"dims", {1, 3, 5}}, {"radii", {0.0, 0.5, 0.9, 1.5, 2.0}}};
  if (command == "capacity")
    return {{"measure", {{"kind", "riesz"}, {"alpha", 1.0}, {"d", 3}}},
            {"T", {1.0}},
            {"spacing", 0.0625},
            {"shells", 64},
            {"gap_abs", 1e-8},
            {"gap_rel", 1e-6},
            {"max_iterations", 100000},
            {"pot_tol", 1e-3},
            {"write_solution", true}};
  if (command == "persist")
    return {{"measure", {{"kind", "iid"}, {"N", 8}}},
            {"domain", {{"kind", "sites"}, {"N", 8}}},
            {"levels", {0.0}},
            {"n_samples", 100000},
            {"method", "naive"},
            {"tilt_level", 1.0},
            {"resolution", 1.0 / 256.0}};
  if (command == "repulsion")
    return {{"measure", {{"kind", "riesz_torus"}, {"alpha", 0.5}}},
            {"alpha", 0.5},
            {"m", nullptr},
            {"T", {4.0, 8.0, 16.0}},
            {"level", 0.0},
            {"spacing", 0.25},
            {"n_conditioned", 200},
            {"max_samples", 2000000},
            {"min_accept_rate", 1e-4},
            {"resolution", 1.0 / 256.0}};
  if (command == "counterexample")
    return {{"which", "irregular"},
            {"irregular", {{"alpha", 0.5}, {"epsilon", 0.9}, {"ratios", {3, 5, 7}}, {"rho", 2.0}, {"spacing", 0.0625}}},
            {"cantor", {{"J", {1, 2}}, {"depth", 2}}}};
  throw ConfigError("unknown command '" + command + "'");
}

std::string command_columns(const std::string& command) {
  static const std::map<std::string, std::string> cols{
      {"riesz-table", "alpha,d,regime,c_alpha,r,h_alpha"},
      {"capacity",
       "T,method,points,capacity,energy,gap,iterations,converged,min_potential,dual_residual,dual_holds "
       "(+ solution.csv: x1..xd,nu,h for the last T)"},
      {"persist", "level,method,points,n_samples,hits,p,theta,se_p,se_theta,ess,tilt_level,rare,p_upper,unreliable"},
      {"repulsion", "T,accepted,tried,accept_rate,mean,se,ell_T,reference,normalized,gap,gap_se,all_positive,skipped"},
      {"counterexample", "irregular: i,T_a,T_b,cap_a,cap_b,ratio,exceeds_rho; cantor: start,width,mass"}};
  return "results.csv columns: " + cols.at(command);
}

json merge_config(const std::string& command, const json& user) {
  json cfg = command_defaults(command);
  if (user.is_null()) return cfg;
  if (!user.is_object()) throw ConfigError("config must be a JSON object");
  for (auto it = user.begin(); it != user.end(); ++it) {
    if (!cfg.contains(it.key())) throw ConfigError("unknown key '" + it.key() + "'");
    const json& def = cfg.at(it.key());
    const bool same_kind = def.is_null() || (def.is_number() && it.value().is_number()) ||
                           def.type() == it.value().type() ||
                           (def.is_number() && it.value().is_null());
    if (!same_kind) throw ConfigError("key '" + it.key() + "' has the wrong type");
    // Nested objects that select a variant (measure, domain) are replaced
    // whole; parameter blocks are merged key by key.
    if (it.key() == "irregular" || it.key() == "cantor") {
      cfg[it.key()].merge_patch(it.value());
    } else {
      cfg[it.key()] = it.value();
    }
  }
  return cfg;
}

CommandResult run_command(const std::string& command, const json& config, const RunContext& ctx) {
  try {
    if (command == "riesz-table") return riesz_table(config, ctx);
    if (command == "capacity") return capacity(config, ctx);
    if (command == "persist") return persist(config, ctx);
    if (command == "repulsion") return repulsion(config, ctx);
    if (command == "counterexample") return counterexample(config, ctx);
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  } catch (const ConstructionError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown command '" + command + "'");
}

}  // namespace sgflab
