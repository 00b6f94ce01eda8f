#include "pinhole/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace pinhole {

namespace {

// Table defaults: Jonsson-style electron two-pinhole configuration.
constexpr double kHbar = 1.05457180e-34;   // J s
constexpr double kMass = 9.10938356e-31;   // kg
constexpr double kX0 = 5e-7;               // m
constexpr double kZ0 = 0.0;                // m
constexpr double kWidth = 7e-8;            // m
constexpr double kKx = 1.295698717e6;      // 1/m
constexpr double kKy = 1.122938132e12;     // 1/m
constexpr double kKz = 0.0;                // 1/m

double take(ParamOverrides& m, const std::string& key, double fallback) {
  auto it = m.find(key);
  if (it == m.end()) return fallback;
  double v = it->second;
  m.erase(it);
  return v;
}

}  // namespace

void validate_scenario(const Scenario& s) {
  const auto& c = s.constants;
  if (!(c.hbar > 0.0) || !(c.m > 0.0) || !(c.alpha > 0.0))
    throw std::invalid_argument("physical constants must be strictly positive");
  if (std::abs(c.alpha - c.hbar / c.m) > 1e-12 * c.alpha)
    throw std::invalid_argument("alpha must equal hbar/m");
  for (const PacketParams* p : {&s.packet_neg, &s.packet_pos}) {
    if (!(p->dx0 > 0.0))
      throw std::invalid_argument("packet width dx0 must be positive");
    if (!(p->amp >= 0.0 && p->amp <= 1.0))
      throw std::invalid_argument("amplitude weight must lie in [0, 1]");
    if (!(p->x0 >= 0.0))
      throw std::invalid_argument("x0 is a center offset magnitude, must be >= 0");
    if (!std::isfinite(p->kx) || !std::isfinite(p->ky) || !std::isfinite(p->kz))
      throw std::invalid_argument("wavenumbers must be finite");
  }
  if (std::abs(s.packet_neg.amp + s.packet_pos.amp - 1.0) > 1e-9)
    throw std::invalid_argument("amplitude weights must sum to 1");
  // The y motion is solved in closed form, which needs a common plane wave.
  if (s.packet_neg.ky != s.packet_pos.ky)
    throw std::invalid_argument("packets must share the same ky");
}

Scenario make_scenario(ScenarioKind kind, const ParamOverrides& overrides) {
  ParamOverrides ov = overrides;

  double amp_neg = 0.5, amp_pos = 0.5;
  double dx0_neg = kWidth, dx0_pos = kWidth;
  switch (kind) {
    case ScenarioKind::ewea:
    case ScenarioKind::custom:
      break;
    case ScenarioKind::ewua: {
      // b = pi/3: amplitudes cos^2(b) = 1/4 and sin^2(b) = 3/4.
      amp_neg = 0.25;
      amp_pos = 0.75;
      break;
    }
    case ScenarioKind::uwea:
      dx0_pos = 2.0 * kWidth;
      break;
  }

  PhysicalConstants constants;
  constants.hbar = take(ov, "hbar", kHbar);
  constants.m = take(ov, "m", kMass);
  constants.alpha = constants.hbar / constants.m;

  const double x0 = take(ov, "x0", kX0);
  const double z0 = take(ov, "z0", kZ0);
  const double kx = take(ov, "kx", kKx);
  const double ky = take(ov, "ky", kKy);
  const double kz = take(ov, "kz", kKz);
  const double chi = take(ov, "chi", 0.0);

  Scenario s;
  s.kind = kind;
  s.constants = constants;
  s.packet_neg = PacketParams{x0, z0, take(ov, "dx0_neg", dx0_neg),
                              kx, ky, kz, take(ov, "amp_neg", amp_neg),
                              0.0, PacketSide::negative};
  s.packet_pos = PacketParams{x0, z0, take(ov, "dx0_pos", dx0_pos),
                              kx, ky, kz, take(ov, "amp_pos", amp_pos),
                              chi, PacketSide::positive};

  if (!ov.empty())
    throw std::invalid_argument("unknown scenario override key: " +
                                ov.begin()->first);
  validate_scenario(s);
  return s;
}

PacketState packet_state_at(const Scenario& s, PacketSide side, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("packet_state_at requires t >= 0");
  const PacketParams& p = s.packet(side);
  const double alpha = s.constants.alpha;
  const double at = alpha * t;
  const double dx0_sq = p.dx0 * p.dx0;

  PacketState st;
  st.t = t;
  st.dx_t_sq = dx0_sq + (at * at) / dx0_sq;
  st.dx1_t_sq = dx0_sq * dx0_sq + at * at;
  st.beta = 2.0 * M_PI / std::sqrt(st.dx1_t_sq);
  st.theta = 0.5 * std::atan(-at / dx0_sq);
  st.vx = alpha * p.kx;
  st.vz = alpha * p.kz;
  st.omega_x = alpha * p.kx * p.kx / 2.0;
  st.omega_z = alpha * p.kz * p.kz / 2.0;
  return st;
}

ScenarioKind scenario_kind_from_name(const std::string& name) {
  if (name == "ewea") return ScenarioKind::ewea;
  if (name == "ewua") return ScenarioKind::ewua;
  if (name == "uwea") return ScenarioKind::uwea;
  if (name == "custom") return ScenarioKind::custom;
  throw std::invalid_argument("unknown scenario name: " + name);
}

std::string scenario_kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::ewea: return "ewea";
    case ScenarioKind::ewua: return "ewua";
    case ScenarioKind::uwea: return "uwea";
    case ScenarioKind::custom: return "custom";
  }
  return "custom";
}

}  // namespace pinhole
