#pragma once

#include <map>
#include <string>

#include "pinhole/types.hpp"

namespace pinhole {

struct PhysicalConstants {
  double hbar;   // J s
  double m;      // kg
  double alpha;  // hbar/m, m^2/s
};

enum class PacketSide { negative, positive };
enum class ScenarioKind { ewea, ewua, uwea, custom };

/// One pinhole packet. x0/z0 are the center offset magnitudes; `side`
/// selects the sign conventions (the negative-side packet is centered at
/// (-x0, -z0) and carries plane-wave phase +kx(x+x0), the positive-side
/// packet mirrors both signs). The packet is isotropic in (x, z): its
/// initial z-width equals dx0.
struct PacketParams {
  double x0;    // m
  double z0;    // m
  double dx0;   // m, initial width (> 0)
  double kx;    // 1/m
  double ky;    // 1/m
  double kz;    // 1/m
  double amp;   // dimensionless weight in [0, 1]
  double chi;   // rad, constant phase shift
  PacketSide side;
};

struct Scenario {
  PhysicalConstants constants;
  PacketParams packet_neg;
  PacketParams packet_pos;
  ScenarioKind kind;

  const PacketParams& packet(PacketSide s) const {
    return s == PacketSide::negative ? packet_neg : packet_pos;
  }
};

/// Time-dependent derived quantities of one packet.
struct PacketState {
  double t;          // s
  double dx_t_sq;    // spread squared: dx0^2 + (alpha t)^2 / dx0^2  (m^2)
  double dx1_t_sq;   // phase spread:   dx0^4 + (alpha t)^2          (m^4)
  double beta;       // normalization magnitude (4 pi^2 / dx1_t_sq)^(1/2)
  double theta;      // normalization phase, 0.5 atan(-alpha t / dx0^2), principal branch
  double vx;         // packet velocity alpha kx (m/s)
  double vz;         // packet velocity alpha kz (m/s)
  double omega_x;    // alpha kx^2 / 2 (1/s)
  double omega_z;    // alpha kz^2 / 2 (1/s)
};

/// Named parameter overrides accepted by make_scenario (and by the config
/// parser): x0, z0, dx0_neg, dx0_pos, kx, ky, kz, chi, amp_neg, amp_pos,
/// hbar, m. Unknown keys are rejected.
using ParamOverrides = std::map<std::string, double>;

Scenario make_scenario(ScenarioKind kind, const ParamOverrides& overrides = {});

/// Validates an assembled scenario; throws std::invalid_argument on
/// nonpositive widths, weights outside [0,1], weight pairs not summing
/// to 1, or mismatched ky between the packets.
void validate_scenario(const Scenario& s);

PacketState packet_state_at(const Scenario& s, PacketSide side, double t);

ScenarioKind scenario_kind_from_name(const std::string& name);
std::string scenario_kind_name(ScenarioKind kind);

}  // namespace pinhole
