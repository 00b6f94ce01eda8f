#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pinhole/scenario.hpp"
#include "pinhole/types.hpp"

namespace pinhole {

using Complex = std::complex<double>;

/// Value and analytic first/second spatial derivatives of psi at one point.
/// grad = (d/dx, d/dy, d/dz), lap_diag = (d2/dx2, d2/dy2, d2/dz2).
/// plane_wave_y records that the y dependence is exactly a common plane
/// wave e^{i ky y}; when set, the y contribution to the quantum potential
/// vanishes identically and is not evaluated numerically.
struct PsiJet {
  Complex value{0.0, 0.0};
  Eigen::Vector3cd grad = Eigen::Vector3cd::Zero();
  Eigen::Vector3cd lap_diag = Eigen::Vector3cd::Zero();
  bool plane_wave_y = true;
};

PsiJet eval_packet(const Scenario& s, PacketSide side, const SpacetimePoint& p);
PsiJet eval_superposition(const Scenario& s, const SpacetimePoint& p);

/// grad S = hbar Im(grad psi / psi), i.e. the momentum field (kg m/s).
/// Throws degenerate_node_error when |value|^2 < node_floor (node_floor = 0
/// disables the check).
Eigen::Vector3d oracle_phase_gradient(const PsiJet& jet, double hbar,
                                      double node_floor = 0.0);

/// Q = -(hbar^2/2m) [Re(lap psi / psi) + |Im(grad psi / psi)|^2], in J.
double oracle_quantum_potential(const PsiJet& jet, const PhysicalConstants& c,
                                double node_floor = 0.0);

}  // namespace pinhole
