#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bras/doppler.hpp"
#include "bras/propagate.hpp"

namespace bras {

enum class Abscissa { delta, field };

/// Rule binding the probe detuning to the field magnitude in field scans.
enum class ProbeLock { free_value, minus_b, plus_b };

/// Rule binding the pump detuning to the field magnitude.
enum class PumpLock { free_value, twice_b, minus_b };

/// Uniform grid start..stop inclusive with count points; count >= 2 and
/// start < stop.
struct ScanRange {
  double start = -20.0;
  double stop = 20.0;
  int count = 2001;
};

/// Full description of one scan: which scheme, which axis is scanned, how
/// the probe and pump detunings track the field, medium rates, geometry and
/// optional Doppler averaging (Lambda scheme only). metadata carries ordered
/// key=value provenance notes that end up in the CSV header.
struct ScanSpec {
  Scheme system = Scheme::lambda;
  Abscissa abscissa = Abscissa::delta;
  ScanRange range{};
  double field_b = 5.0;      ///< |B| used when scanning the detuning
  double probe_delta = 0.0;  ///< probe detuning for free-value field scans
  ProbeLock probe_lock = ProbeLock::free_value;
  PumpLock pump_lock = PumpLock::free_value;
  Drive drive{};
  LambdaMedium lambda_medium{};
  LadderMedium ladder_medium{};
  PropagationGeometry geometry{};
  std::optional<VelocityProfile> doppler{};
  std::vector<std::pair<std::string, std::string>> metadata{};
};

struct ScanRow {
  double abscissa = 0.0;
  double im_chi_plus_fwd = 0.0;
  double im_chi_minus_fwd = 0.0;
  double im_chi_plus_rev = 0.0;
  double im_chi_minus_rev = 0.0;
  double t_forward = 1.0;
  double t_reversed = 1.0;
  double ratio = 1.0;
  bool reversed_clamped = false;
};

struct ScanTable {
  std::vector<std::pair<std::string, std::string>> metadata{};
  std::vector<ScanRow> rows{};
};

/// Evaluate the full row at every grid point. Rows may be computed in
/// parallel (BRAS_THREADS caps the thread count, 0 or unset means auto) but
/// the result is deterministic and ordered by abscissa regardless of the
/// execution order.
ScanTable run_scan(const ScanSpec& spec);

/// Probe detunings at which the reversed-field dressed sigma+ response of
/// the Lambda scheme is resonant when the pump tracks twice the field:
/// 3 B -+ sqrt(4 B^2 + Omega^2). field_magnitude must be positive.
std::pair<double, double> resonance_positions(double field_magnitude,
                                              double omega);

/// Drive strength Omega = 2 sqrt(3) B that parks the lower reversed-field
/// resonance exactly on the transparency point delta = -B, making the medium
/// opaque for the reversed orientation.
double opacity_drive(double field_magnitude);

/// Two-photon transparency point of the Lambda scheme,
/// delta = delta_pump - 3 B (zero dephasing between |f> and |g> assumed).
double eit_window(double delta_pump, double field_magnitude);

/// Built-in scenario presets, keyed fig2a, fig2b, fig3, fig4, fig5, fig7a,
/// fig7b, fig8, fig9, fig10. Throws std::invalid_argument for an unknown
/// name.
ScanSpec figure_preset(const std::string& name);

std::vector<std::string> figure_preset_names();

/// Append the standard parameter echo (scheme, axis, locks, drive, medium
/// rates, gauss conversion, optical depth and its provenance) to
/// spec.metadata. Presets and the CLI both route through this so CSV
/// headers stay uniform.
void append_parameter_metadata(ScanSpec& spec,
                               const std::string& od_provenance);

}  // namespace bras
