#pragma once

#include <stdexcept>
#include <string>

namespace pinhole {

/// A point in the model's space-time, SI units (m, s).
struct SpacetimePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;
};

/// Thrown by operations that divide by |psi|^2 when the evaluation point
/// falls below the node mask threshold (guidance velocity and quantum
/// potential are undefined at wavefunction nodes).
struct degenerate_node_error : std::runtime_error {
  explicit degenerate_node_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown by visibility extraction when a profile has no interior local
/// minimum next to its global maximum.
struct no_fringe_error : std::runtime_error {
  explicit no_fringe_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown by rejection sampling when the acceptance rate collapses,
/// which signals a misconfigured sampling domain.
struct sampler_stall_error : std::runtime_error {
  explicit sampler_stall_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Configuration parse/validation failure, carrying the 1-based line number
/// (0 when the error is not tied to a specific line).
struct config_error : std::runtime_error {
  config_error(int line_, const std::string& what)
      : std::runtime_error(what), line(line_) {}
  int line;
};

}  // namespace pinhole
