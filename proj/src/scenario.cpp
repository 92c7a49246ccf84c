/*
 * Copyright 2026 The xydyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "xydyn/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "xydyn/bessel.hpp"
#include "xydyn/correlators.hpp"
#include "xydyn/error.hpp"
#include "xydyn/groundstate.hpp"
#include "xydyn/isotropic.hpp"
#include "xydyn/measures.hpp"
#include "xydyn/oracle.hpp"
#include "xydyn/spin_correlators.hpp"

namespace xydyn {

namespace {

constexpr std::size_t kMaxCells = 50'000'000;

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::config_invalid, what); }

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) {
    config_error(key + ": expected a number, got '" + v + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  const char* first = v.data();
  if (!v.empty() && v[0] == '+') ++first;
  const auto [p, ec] = std::from_chars(first, v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || first == v.data() + v.size()) {
    config_error(key + ": expected an integer, got '" + v + "'");
  }
  return out;
}

const std::map<std::string, ScenarioType>& scenario_names() {
  static const std::map<std::string, ScenarioType> m{
      {"vacuum_only", ScenarioType::vacuum_only},
      {"singlet_on_vacuum", ScenarioType::singlet_on_vacuum},
      {"psi_bell", ScenarioType::psi_bell},
      {"phi_bell", ScenarioType::phi_bell},
      {"ground_state_equilibrium", ScenarioType::ground_state_equilibrium},
      {"singlet_knitted_gs", ScenarioType::singlet_knitted_gs},
  };
  return m;
}

struct MeasureName {
  const char* name;
  MeasureKind kind;
  bool takes_distance;
};

constexpr MeasureName kMeasureNames[] = {
    {"concurrence", MeasureKind::concurrence, true},
    {"one_tangle", MeasureKind::one_tangle, false},
    {"entropy1", MeasureKind::entropy1, false},
    {"entropy2", MeasureKind::entropy2, true},
    {"bell_fidelities", MeasureKind::bell_fidelities, true},
    {"tangle_deviation", MeasureKind::tangle_deviation, false},
    {"total_concurrence", MeasureKind::total_concurrence, false},
    {"ckw_residual", MeasureKind::ckw_residual, false},
};

MeasureSpec parse_measure(const std::string& item) {
  std::string name = item;
  std::optional<int> d;
  const auto open = item.find('(');
  if (open != std::string::npos) {
    if (item.back() != ')') config_error("measures.list: malformed item '" + item + "'");
    name = trim(item.substr(0, open));
    d = parse_int("measures.list", trim(item.substr(open + 1, item.size() - open - 2)));
  }
  for (const auto& m : kMeasureNames) {
    if (name != m.name) continue;
    if (d && !m.takes_distance) config_error("measures.list: '" + name + "' takes no distance");
    MeasureSpec s{m.kind, d.value_or(1)};
    if (s.distance < 1 || s.distance > kGroundStateMaxDistance) {
      config_error("measures.list: distance must lie in [1, 16] for '" + name + "'");
    }
    return s;
  }
  config_error("measures.list: unknown measure '" + name + "'");
}

bool needs_sites(ScenarioType t) {
  return t == ScenarioType::singlet_on_vacuum || t == ScenarioType::psi_bell ||
         t == ScenarioType::phi_bell || t == ScenarioType::singlet_knitted_gs;
}

bool ground_based(ScenarioType t) {
  return t == ScenarioType::ground_state_equilibrium || t == ScenarioType::singlet_knitted_gs;
}

// pair states and magnetizations at one time

Eigen::Matrix4cd swap_sites(const Eigen::Matrix4cd& r) {
  // basis (uu, ud, du, dd): exchanging the sites swaps ud and du
  Eigen::Matrix4cd s = r;
  const int perm[4] = {0, 2, 1, 3};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s(a, b) = r(perm[a], perm[b]);
  return s;
}

class Slice {
 public:
  virtual ~Slice() = default;
  Eigen::Matrix4cd rho2(int l, int m) const {
    require(l != m, ErrorCode::invalid_argument, "pair sites coincide");
    const auto key = std::make_pair(std::min(l, m), std::max(l, m));
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, pair(key.first, key.second)).first;
    return l < m ? it->second : swap_sites(it->second);
  }
  virtual double mz(int l) const = 0;

 protected:
  // l < m
  virtual Eigen::Matrix4cd pair(int l, int m) const = 0;

 private:
  mutable std::map<std::pair<int, int>, Eigen::Matrix4cd> cache_;
};

class ContractionSlice : public Slice {
 public:
  explicit ContractionSlice(ContractionSet cs) : cs_(std::move(cs)) {}
  double mz(int l) const override { return magnetization(l, cs_); }

 protected:
  Eigen::Matrix4cd pair(int l, int m) const override {
    return rho2_from_correlators(correlator_bundle(l, m, cs_)).matrix();
  }

 private:
  ContractionSet cs_;
};

class ParticleSlice : public Slice {
 public:
  explicit ParticleSlice(SingleParticleState s) : s_(std::move(s)) {}
  double mz(int l) const override { return std::norm(s_.w(l)) - 0.5; }

 protected:
  Eigen::Matrix4cd pair(int l, int m) const override { return one_particle_rho2(s_, l, m); }

 private:
  SingleParticleState s_;
};

class PhiSlice : public Slice {
 public:
  PhiSlice(int i, int j, double phi, double t, double lambda)
      : i_(i), j_(j), phi_(phi), t_(t), lambda_(lambda) {}
  double mz(int l) const override {
    const double x = lambda_ * t_;
    const double a = bessel_j(l - i_, x), b = bessel_j(l - j_, x);
    return 0.5 * (a * a + b * b) - 0.5;
  }

 protected:
  Eigen::Matrix4cd pair(int l, int m) const override {
    return phi_state_coefficients(i_, j_, l, m, t_, lambda_, phi_).rho2();
  }

 private:
  int i_, j_;
  double phi_, t_, lambda_;
};

class VacuumSlice : public Slice {
 public:
  double mz(int) const override { return -0.5; }

 protected:
  Eigen::Matrix4cd pair(int, int) const override {
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    r(3, 3) = 1.0;
    return r;
  }
};

class GroundSlice : public Slice {
 public:
  explicit GroundSlice(std::shared_ptr<const GroundStateContraction> g) : g_(std::move(g)) {}
  double mz(int) const override { return 0.5 * (*g_)(0); }

 protected:
  Eigen::Matrix4cd pair(int l, int m) const override {
    const GroundStateCorrelators c = gs_correlators(m - l, *g_);
    CorrelatorBundle b;
    b.gxx = c.gxx;
    b.gyy = c.gyy;
    b.gzz = c.gzz;
    b.mz_l = b.mz_m = c.mz;
    return rho2_from_correlators(b).matrix();
  }

 private:
  std::shared_ptr<const GroundStateContraction> g_;
};

class OracleSlice : public Slice {
 public:
  explicit OracleSlice(SpinRegister reg) : reg_(std::move(reg)) {}
  double mz(int l) const override { return oracle_sz(reg_, wrap(l)); }

 protected:
  Eigen::Matrix4cd pair(int l, int m) const override {
    return reduced_density(reg_, {wrap(l), wrap(m)});
  }

 private:
  int wrap(int l) const { return ((l % reg_.n_sites) + reg_.n_sites) % reg_.n_sites; }
  SpinRegister reg_;
};


struct Window {
  int lo, hi;
};

class Engine {
 public:
  virtual ~Engine() = default;
  virtual std::unique_ptr<Slice> state(double t) const = 0;
  virtual std::unique_ptr<Slice> reference(double t) const = 0;
};

class AnalyticEngine : public Engine {
 public:
  AnalyticEngine(const ScenarioConfig& c, Window w, int reach) : c_(c), w_(w), p_(c.lambda, c.gamma) {
    if (c.type == ScenarioType::singlet_knitted_gs) {
      fail(ErrorCode::engine_capability, "singlet_knitted_gs requires the oracle engine");
    }
    if (c.type == ScenarioType::phi_bell && c.gamma != 0.0) {
      fail(ErrorCode::engine_capability,
           "phi_bell with the analytic engine is only available at gamma = 0");
    }
    if (c.type == ScenarioType::ground_state_equilibrium) {
      g_ = std::make_shared<GroundStateContraction>(p_, reach + 1);
    }
  }

  std::unique_ptr<Slice> state(double t) const override {
    const bool iso = c_.gamma == 0.0;
    switch (c_.type) {
      case ScenarioType::vacuum_only:
        return reference(t);
      case ScenarioType::singlet_on_vacuum:
      case ScenarioType::psi_bell: {
        const double phi = c_.type == ScenarioType::singlet_on_vacuum ? std::numbers::pi : c_.phi;
        if (iso) return std::make_unique<ParticleSlice>(wavepacket(c_.i, c_.j, phi, t, c_.lambda));
        return std::make_unique<ContractionSlice>(
            bell_contractions(t, w_.lo, w_.hi, p_, BellTag{c_.i, c_.j, phi}));
      }
      case ScenarioType::phi_bell:
        return std::make_unique<PhiSlice>(c_.i, c_.j, c_.phi, t, c_.lambda);
      case ScenarioType::ground_state_equilibrium:
        return std::make_unique<GroundSlice>(g_);
      default:
        fail(ErrorCode::engine_capability, "scenario not available in the analytic engine");
    }
  }

  std::unique_ptr<Slice> reference(double t) const override {
    if (ground_based(c_.type)) return std::make_unique<GroundSlice>(g_);
    if (c_.gamma == 0.0) return std::make_unique<VacuumSlice>();
    return std::make_unique<ContractionSlice>(vacuum_contractions(t, w_.lo, w_.hi, p_));
  }

 private:
  ScenarioConfig c_;
  Window w_;
  ModelParams p_;
  std::shared_ptr<const GroundStateContraction> g_;
};

class OracleEngine : public Engine {
 public:
  explicit OracleEngine(const ScenarioConfig& c)
      : c_(c), oracle_(ModelParams(c.lambda, c.gamma, FiniteRing{c.n_sites})) {
    const int n = c.n_sites;
    auto wrap = [n](int l) { return ((l % n) + n) % n; };
    if (needs_sites(c.type) && wrap(c.i) == wrap(c.j)) {
      config_error("scenario.i and scenario.j land on the same ring site");
    }
    switch (c.type) {
      case ScenarioType::vacuum_only:
        initial_ = oracle_.prepare(OracleVacuum{});
        break;
      case ScenarioType::singlet_on_vacuum:
        initial_ = oracle_.prepare(OraclePsiBell{wrap(c.i), wrap(c.j), std::numbers::pi});
        break;
      case ScenarioType::psi_bell:
        initial_ = oracle_.prepare(OraclePsiBell{wrap(c.i), wrap(c.j), c.phi});
        break;
      case ScenarioType::phi_bell:
        initial_ = oracle_.prepare(OraclePhiBell{wrap(c.i), wrap(c.j), c.phi});
        break;
      case ScenarioType::ground_state_equilibrium:
        initial_ = oracle_.prepare(OracleGroundState{});
        break;
      case ScenarioType::singlet_knitted_gs:
        initial_ = oracle_.prepare(OracleKnittedSinglet{wrap(c.i), wrap(c.j)});
        break;
    }
    reference_ = oracle_.prepare(ground_based(c.type) ? OracleScenario{OracleGroundState{}}
                                                      : OracleScenario{OracleVacuum{}});
  }

  std::unique_ptr<Slice> state(double t) const override {
    return std::make_unique<OracleSlice>(oracle_.evolve(initial_, t));
  }
  std::unique_ptr<Slice> reference(double t) const override {
    return std::make_unique<OracleSlice>(oracle_.evolve(reference_, t));
  }

 private:
  ScenarioConfig c_;
  RingOracle oracle_;
  SpinRegister initial_, reference_;
};

std::string with_distance(const char* name, int d) {
  return std::string(name) + "(" + std::to_string(d) + ")";
}

void evaluate(const ScenarioConfig& c, const Slice& s, const Slice* ref, double t,
              std::vector<GridRow>& out) {
  for (int x = c.x_min; x <= c.x_max; ++x) {
    for (const MeasureSpec& m : c.measures) {
      const int d = m.distance;
      switch (m.kind) {
        case MeasureKind::concurrence:
          out.push_back({with_distance("concurrence", d), x, t, concurrence_wootters(s.rho2(x, x + d))});
          break;
        case MeasureKind::one_tangle:
          out.push_back({"one_tangle", x, t, one_tangle(s.mz(x))});
          break;
        case MeasureKind::entropy1:
          out.push_back({"entropy1", x, t, entropy_one_site(s.mz(x))});
          break;
        case MeasureKind::entropy2:
          out.push_back({with_distance("entropy2", d), x, t, entropy_vn(s.rho2(x, x + d))});
          break;
        case MeasureKind::bell_fidelities: {
          const BellFidelities f = bell_fidelities(s.rho2(x, x + d));
          out.push_back({with_distance("bell_psi_minus", d), x, t, f.psi_minus});
          out.push_back({with_distance("bell_psi_plus", d), x, t, f.psi_plus});
          out.push_back({with_distance("bell_phi_minus", d), x, t, f.phi_minus});
          out.push_back({with_distance("bell_phi_plus", d), x, t, f.phi_plus});
          break;
        }
        case MeasureKind::tangle_deviation: {
          const TangleDeviation td = tangle_deviation(one_site_det(s.mz(x)), one_site_det(ref->mz(x)));
          out.push_back({"tangle_deviation", x, t, td.delta});
          out.push_back({"tangle_deviation_rel", x, t, td.relative});
          break;
        }
        case MeasureKind::total_concurrence:
        case MeasureKind::ckw_residual: {
          std::vector<double> cs;
          for (int y = x - c.partner_range; y <= x + c.partner_range; ++y) {
            if (y != x) cs.push_back(concurrence_wootters(s.rho2(x, y)));
          }
          if (m.kind == MeasureKind::total_concurrence) {
            double sum = 0.0;
            for (double v : cs) sum += v;
            out.push_back({"total_concurrence", x, t, sum});
          } else {
            out.push_back({"ckw_residual", x, t, ckw_residual(one_tangle(s.mz(x)), cs)});
          }
          break;
        }
      }
    }
  }
}

}  // namespace

void ScenarioConfig::validate() const {
  if (!(lambda >= 0.0)) config_error("model.lambda must be >= 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) config_error("model.gamma must lie in [0, 1]");
  if (needs_sites(type) && i == j) config_error("scenario.i and scenario.j must differ");
  if (!(dt > 0.0)) config_error("grid.dt must be > 0");
  if (x_min > x_max) config_error("grid.x_min must not exceed grid.x_max");
  if (!(t_min >= 0.0)) config_error("grid.t_min must be >= 0");
  if (t_min > t_max) config_error("grid.t_min must not exceed grid.t_max");
  if (partner_range < 1 || partner_range > 64) config_error("grid.partner_range must lie in [1, 64]");
  if (measures.empty()) config_error("measures.list must name at least one measure");
  const double steps = std::floor((t_max - t_min) / dt + 1e-9) + 1.0;
  const double cells = steps * (static_cast<double>(x_max) - x_min + 1.0) * measures.size();
  if (cells > static_cast<double>(kMaxCells)) config_error("grid too large");
  if (engine == EngineType::analytic && type == ScenarioType::ground_state_equilibrium) {
    for (const MeasureSpec& m : measures) {
      const bool partners = m.kind == MeasureKind::total_concurrence || m.kind == MeasureKind::ckw_residual;
      if (partners && partner_range > kGroundStateMaxDistance) {
        config_error("grid.partner_range must not exceed 16 for the analytic ground state");
      }
    }
  }
  if (engine == EngineType::oracle) {
    if (n_sites < 4 || n_sites > kOracleMaxSites || n_sites % 2 != 0) {
      config_error("engine.n_sites must be even and lie in [4, 12]");
    }
    for (const MeasureSpec& m : measures) {
      if (2 * m.distance > n_sites) config_error("measure distance exceeds half the ring");
    }
    if (2 * partner_range > n_sites) {
      bool uses = false;
      for (const MeasureSpec& m : measures) {
        uses |= m.kind == MeasureKind::total_concurrence || m.kind == MeasureKind::ckw_residual;
      }
      if (uses) config_error("grid.partner_range exceeds half the ring");
    }
  }
}

std::vector<double> ScenarioConfig::times() const {
  const long steps = static_cast<long>(std::floor((t_max - t_min) / dt + 1e-9));
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(steps + 1));
  for (long k = 0; k <= steps; ++k) ts.push_back(t_min + static_cast<double>(k) * dt);
  return ts;
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c;
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      config_error("line " + std::to_string(lineno) + ": expected 'section.key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.find('.') == std::string::npos) {
      config_error("line " + std::to_string(lineno) + ": key '" + key + "' has no section");
    }
    if (value.empty()) config_error(key + ": missing value");
    if (!kv.emplace(key, value).second) config_error(key + ": given twice");
  }

  static const std::set<std::string> known{
      "model.lambda", "model.gamma",  "scenario.type", "scenario.i",      "scenario.j",
      "scenario.phi", "grid.x_min",   "grid.x_max",    "grid.t_min",      "grid.t_max",
      "grid.dt",      "grid.partner_range", "measures.list", "engine.type", "engine.n_sites"};
  for (const auto& [k, v] : kv) {
    if (!known.count(k)) config_error("unknown key '" + k + "'");
  }
  auto need = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) config_error(std::string(key) + ": required");
    return it->second;
  };

  c.lambda = parse_double("model.lambda", need("model.lambda"));
  c.gamma = parse_double("model.gamma", need("model.gamma"));
  const std::string& type = need("scenario.type");
  auto st = scenario_names().find(type);
  if (st == scenario_names().end()) config_error("scenario.type: unknown scenario '" + type + "'");
  c.type = st->second;
  if (needs_sites(c.type)) {
    c.i = parse_int("scenario.i", need("scenario.i"));
    c.j = parse_int("scenario.j", need("scenario.j"));
  } else if (kv.count("scenario.i") || kv.count("scenario.j")) {
    config_error("scenario.i/j: not used by " + type);
  }
  if (kv.count("scenario.phi")) {
    if (c.type != ScenarioType::psi_bell && c.type != ScenarioType::phi_bell) {
      config_error("scenario.phi: not used by " + type);
    }
    c.phi = parse_double("scenario.phi", kv.at("scenario.phi"));
  }
  c.x_min = parse_int("grid.x_min", need("grid.x_min"));
  c.x_max = parse_int("grid.x_max", need("grid.x_max"));
  c.t_min = parse_double("grid.t_min", need("grid.t_min"));
  c.t_max = parse_double("grid.t_max", need("grid.t_max"));
  c.dt = parse_double("grid.dt", need("grid.dt"));
  if (kv.count("grid.partner_range")) {
    c.partner_range = parse_int("grid.partner_range", kv.at("grid.partner_range"));
  }
  // split on commas outside parentheses
  std::string cur;
  int depth = 0;
  for (char ch : need("measures.list")) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      c.measures.push_back(parse_measure(trim(cur)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  c.measures.push_back(parse_measure(trim(cur)));
  if (kv.count("engine.type")) {
    const std::string& e = kv.at("engine.type");
    if (e == "analytic") {
      c.engine = EngineType::analytic;
    } else if (e == "oracle") {
      c.engine = EngineType::oracle;
    } else if (e.rfind("oracle(", 0) == 0 && e.back() == ')') {
      c.engine = EngineType::oracle;
      if (kv.count("engine.n_sites")) config_error("engine.n_sites: ring size given twice");
      c.n_sites = parse_int("engine.type", trim(e.substr(7, e.size() - 8)));
    } else {
      config_error("engine.type: expected analytic or oracle, got '" + e + "'");
    }
  }
  if (kv.count("engine.n_sites")) c.n_sites = parse_int("engine.n_sites", kv.at("engine.n_sites"));
  c.validate();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_failure, "cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string scenario_name(ScenarioType t) {
  for (const auto& [name, type] : scenario_names())
    if (type == t) return name;
  return "unknown";
}

std::string engine_name(EngineType e) { return e == EngineType::analytic ? "analytic" : "oracle"; }

GridResult run(const ScenarioConfig& config, int threads) {
  config.validate();
  require(threads >= 1, ErrorCode::invalid_argument, "threads must be >= 1");
  int reach = 0;
  bool ref_needed = false;
  for (const MeasureSpec& m : config.measures) {
    reach = std::max(reach, m.distance);
    if (m.kind == MeasureKind::total_concurrence || m.kind == MeasureKind::ckw_residual) {
      reach = std::max(reach, config.partner_range);
    }
    ref_needed |= m.kind == MeasureKind::tangle_deviation;
  }
  Window w{config.x_min - reach, config.x_max + reach};
  if (needs_sites(config.type)) {
    w.lo = std::min({w.lo, config.i, config.j});
    w.hi = std::max({w.hi, config.i, config.j});
  }

  std::unique_ptr<Engine> engine;
  if (config.engine == EngineType::analytic) {
    engine = std::make_unique<AnalyticEngine>(config, w, reach);
  } else {
    engine = std::make_unique<OracleEngine>(config);
  }

  const std::vector<double> ts = config.times();
  std::vector<std::vector<GridRow>> slices(ts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= ts.size()) return;
      try {
        auto s = engine->state(ts[k]);
        std::unique_ptr<Slice> r;
        if (ref_needed) r = engine->reference(ts[k]);
        evaluate(config, *s, r.get(), ts[k], slices[k]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(ts.size());
      }
    }
  };
  const int n = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(ts.size(), 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int q = 0; q < n; ++q) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  GridResult out;
  for (auto& s : slices) {
    for (auto& row : s) {
      if (!std::isfinite(row.value)) fail(ErrorCode::numerical_health, "non-finite value in " + row.measure);
      out.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const GridRow& a, const GridRow& b) {
    if (a.measure != b.measure) return a.measure < b.measure;
    if (a.x != b.x) return a.x < b.x;
    return a.t < b.t;
  });
  return out;
}

std::string format_value(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc()) fail(ErrorCode::numerical_health, "value formatting failed");
  return std::string(buf, p);
}

void write_csv(const GridResult& result, std::ostream& out) {
  out << "measure,x,t,value\n";
  for (const GridRow& r : result.rows) {
    out << r.measure << ',' << r.x << ',' << format_value(r.t) << ',' << format_value(r.value) << '\n';
  }
}

void write_csv(const GridResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io_failure, "cannot open '" + path + "' for writing");
  write_csv(result, out);
  out.flush();
  if (!out) fail(ErrorCode::io_failure, "write to '" + path + "' failed");
}

std::string to_csv(const GridResult& result) {
  std::ostringstream ss;
  write_csv(result, ss);
  return ss.str();
}

}  // namespace xydyn
