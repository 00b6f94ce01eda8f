#include "pinhole/psi.hpp"

#include <cmath>

#include "packet_ctx.hpp"

namespace pinhole {

namespace {

PsiJet packet_jet(const detail::PacketCtx& c, const SpacetimePoint& p) {
  const double X = p.x - c.cx;
  const double Z = p.z - c.cz;

  const double mag = c.amp * c.beta *
                     std::exp(-(X * X + Z * Z) * c.half_inv_dxt2);
  const double phi = detail::phase(c, p.x, p.y, p.z);
  const Complex value = std::polar(mag, phi);

  // Log-derivatives of the Gaussian-chirp-plane-wave product.
  const Complex wx(-X * c.inv_dxt2, c.dphi2 * X + c.sgn * c.kx);
  const Complex wz(-Z * c.inv_dxt2, c.dphi2 * Z + c.sgn * c.kz);
  const Complex wy(0.0, c.ky);
  const Complex wxx(-c.inv_dxt2, c.dphi2);
  const Complex wzz(-c.inv_dxt2, c.dphi2);

  PsiJet jet;
  jet.value = value;
  jet.grad = Eigen::Vector3cd(value * wx, value * wy, value * wz);
  jet.lap_diag = Eigen::Vector3cd(value * (wx * wx + wxx),
                                  value * (wy * wy),
                                  value * (wz * wz + wzz));
  jet.plane_wave_y = true;
  return jet;
}

void check_floor(const PsiJet& jet, double node_floor) {
  if (node_floor > 0.0 && std::norm(jet.value) < node_floor)
    throw degenerate_node_error("psi jet below node mask threshold");
}

}  // namespace

PsiJet eval_packet(const Scenario& s, PacketSide side, const SpacetimePoint& p) {
  if (!(p.t >= 0.0)) throw std::invalid_argument("eval_packet requires t >= 0");
  return packet_jet(detail::make_packet_ctx(s, side, p.t), p);
}

PsiJet eval_superposition(const Scenario& s, const SpacetimePoint& p) {
  const PsiJet a = eval_packet(s, PacketSide::negative, p);
  const PsiJet b = eval_packet(s, PacketSide::positive, p);
  PsiJet sum;
  sum.value = a.value + b.value;
  sum.grad = a.grad + b.grad;
  sum.lap_diag = a.lap_diag + b.lap_diag;
  sum.plane_wave_y = s.packet_neg.ky == s.packet_pos.ky;
  return sum;
}

Eigen::Vector3d oracle_phase_gradient(const PsiJet& jet, double hbar,
                                      double node_floor) {
  check_floor(jet, node_floor);
  Eigen::Vector3d g;
  for (int i = 0; i < 3; ++i) g[i] = hbar * std::imag(jet.grad[i] / jet.value);
  return g;
}

double oracle_quantum_potential(const PsiJet& jet, const PhysicalConstants& c,
                                double node_floor) {
  check_floor(jet, node_floor);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (i == 1 && jet.plane_wave_y) continue;  // Q_y = 0 identically
    const Complex l1 = jet.grad[i] / jet.value;
    const Complex l2 = jet.lap_diag[i] / jet.value;
    const double im1 = std::imag(l1);
    sum += std::real(l2) + im1 * im1;
  }
  return -(c.hbar * c.hbar / (2.0 * c.m)) * sum;
}

}  // namespace pinhole
