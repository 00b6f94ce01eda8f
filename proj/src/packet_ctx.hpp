#pragma once

// Internal per-time packet geometry shared by the complex-jet evaluator and
// the closed-form field evaluator. Both modules must agree bit-for-bit on
// the packet definition (centers, spreads, normalization, phase assembly);
// they differ in how they compute derivatives and observables from it.

#include <cmath>

#include "pinhole/scenario.hpp"

namespace pinhole::detail {

struct PacketCtx {
  double sgn;            // +1 negative side, -1 positive side
  double amp;            // weight
  double beta;           // normalization magnitude
  double two_theta;      // normalization phase
  double cx, cz;         // envelope center at time t
  double inv_dxt2;       // 1 / dx_t^2
  double half_inv_dxt2;  // 1 / (2 dx_t^2)
  double chirp;          // alpha t / (2 dx1_t^2)
  double dphi2;          // alpha t / dx1_t^2  (second phase derivative)
  double kx, ky, kz;
  double const_phase;    // kx x0 + kz z0 - (wx+wz) t + chi + 2 theta
  double omega;          // wx + wz
  double chi;
  double kx_x0, kz_z0;   // plane-wave constants, kept for exact s12 pairing
};

inline PacketCtx make_packet_ctx(const Scenario& s, PacketSide side, double t) {
  const PacketParams& p = s.packet(side);
  const PacketState st = packet_state_at(s, side, t);
  PacketCtx c;
  c.sgn = (side == PacketSide::negative) ? 1.0 : -1.0;
  c.amp = p.amp;
  c.beta = st.beta;
  c.two_theta = 2.0 * st.theta;
  // Negative side: envelope argument x + x0 - vx t, i.e. center -x0 + vx t.
  c.cx = c.sgn * (-p.x0 + st.vx * t);
  c.cz = c.sgn * (-p.z0 + st.vz * t);
  c.inv_dxt2 = 1.0 / st.dx_t_sq;
  c.half_inv_dxt2 = 0.5 * c.inv_dxt2;
  const double at = s.constants.alpha * t;
  c.chirp = at / (2.0 * st.dx1_t_sq);
  c.dphi2 = at / st.dx1_t_sq;
  c.kx = p.kx;
  c.ky = p.ky;
  c.kz = p.kz;
  c.omega = st.omega_x + st.omega_z;
  c.chi = p.chi;
  c.kx_x0 = p.kx * p.x0;
  c.kz_z0 = p.kz * p.z0;
  c.const_phase = c.kx_x0 + c.kz_z0 - c.omega * t + c.chi + c.two_theta;
  return c;
}

struct FieldCtx {
  PacketCtx p1, p2;  // negative / positive side
  double hbar, m, alpha;
  double t;
};

inline FieldCtx make_field_ctx(const Scenario& s, double t) {
  return FieldCtx{make_packet_ctx(s, PacketSide::negative, t),
                  make_packet_ctx(s, PacketSide::positive, t),
                  s.constants.hbar, s.constants.m, s.constants.alpha, t};
}

/// Gaussian envelope amplitude R_i at (x, z), including beta and weight.
inline double envelope(const PacketCtx& c, double x, double z) {
  const double X = x - c.cx;
  const double Z = z - c.cz;
  return c.amp * c.beta *
         std::exp(-(X * X + Z * Z) * c.half_inv_dxt2);
}

/// Full phase S_i / hbar at (x, y, z). Assembled in a fixed term order so
/// the jet evaluator and the closed-form evaluator agree bitwise.
inline double phase(const PacketCtx& c, double x, double y, double z) {
  const double X = x - c.cx;
  const double Z = z - c.cz;
  return c.chirp * (X * X) + c.chirp * (Z * Z) + c.sgn * c.kx * x +
         c.sgn * c.kz * z + c.ky * y + c.const_phase;
}

/// Phase difference (S_1 - S_2)/hbar built from per-term differences, so the
/// large common terms (ky y, omega t) cancel exactly instead of being
/// subtracted as near-equal large numbers.
inline double phase_difference(const FieldCtx& f, double x, double y, double z) {
  const double X1 = x - f.p1.cx, Z1 = z - f.p1.cz;
  const double X2 = x - f.p2.cx, Z2 = z - f.p2.cz;
  double s = f.p1.chirp * (X1 * X1) - f.p2.chirp * (X2 * X2);
  s += f.p1.chirp * (Z1 * Z1) - f.p2.chirp * (Z2 * Z2);
  s += (f.p1.kx + f.p2.kx) * x + (f.p1.kx_x0 - f.p2.kx_x0);
  s += (f.p1.kz + f.p2.kz) * z + (f.p1.kz_z0 - f.p2.kz_z0);
  s += (f.p1.ky - f.p2.ky) * y;
  s -= (f.p1.omega - f.p2.omega) * f.t;
  s += f.p1.chi - f.p2.chi;
  s += f.p1.two_theta - f.p2.two_theta;
  return s;
}

}  // namespace pinhole::detail
