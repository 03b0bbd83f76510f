#pragma once

#include <cstdint>

#include "bras/suscept.hpp"

namespace bras {

enum class Scheme { lambda, ladder };

/// Propagation geometry reduced to the dimensionless optical depth
/// OD = 4 pi k L alpha0. It can be set directly or derived from the medium
/// via OD = (3 / 2 pi) N lambda^2 L; od_source records which one happened so
/// a derived value never overrides an explicit one silently.
struct PropagationGeometry {
  double optical_depth = 0.0;
  enum class OdSource { explicit_value, derived_from_medium } od_source =
      OdSource::explicit_value;

  static PropagationGeometry from_optical_depth(double od);
  static PropagationGeometry from_medium(double number_density_cm3,
                                         double wavelength_cm,
                                         double length_cm);
};

/// sigma+ / sigma- field amplitudes, arbitrary intensity units.
struct FieldAmplitudes {
  std::complex<double> e_plus{};
  std::complex<double> e_minus{};
};

/// Unpolarized transmittivities for the two field orientations and their
/// ratio t_forward / t_reversed. t_reversed is clamped at 1e-300 in the
/// ratio to avoid division blowup deep inside an opacity window;
/// reversed_clamped flags when that happened.
struct TransmissionPair {
  double t_forward = 1.0;
  double t_reversed = 1.0;
  double ratio = 1.0;
  bool reversed_clamped = false;
};

/// Transport both circular components through the medium: each amplitude is
/// multiplied by exp(i OD chi / 2), with chi in alpha0 units.
FieldAmplitudes propagate_polarized(const FieldAmplitudes& amps,
                                    const SusceptibilityPair& chi,
                                    const PropagationGeometry& geometry);

/// Unpolarized transmittivity
///   T = 0.5 [ exp(-OD Im chi+) + exp(-OD Im chi-) ].
double unpolarized_transmittivity(const SusceptibilityPair& chi,
                                  const PropagationGeometry& geometry);

/// OD = (3 / 2 pi) N lambda^2 L. N may be zero (empty medium); wavelength
/// and length must be positive.
double optical_depth_from_medium(double number_density_cm3,
                                 double wavelength_cm, double length_cm);

/// Evaluate the dressed susceptibilities at +B and -B with identical laser
/// parameters and return both transmittivities and their ratio.
/// field_magnitude must be positive.
TransmissionPair transmission_pair(double delta, double field_magnitude,
                                   const Drive& drive,
                                   const LambdaMedium& medium,
                                   const PropagationGeometry& geometry);
TransmissionPair transmission_pair(double delta, double field_magnitude,
                                   const Drive& drive,
                                   const LadderMedium& medium,
                                   const PropagationGeometry& geometry);

/// Transmission pair from susceptibilities that were already evaluated at
/// the two field orientations (used by scans, including Doppler-averaged
/// ones).
TransmissionPair transmission_from_susceptibilities(
    const SusceptibilityPair& forward, const SusceptibilityPair& reversed,
    const PropagationGeometry& geometry);

/// Monte-Carlo estimate of the unpolarized transmittivity: the relative
/// phase between the x and y field components is drawn uniformly on
/// [0, 2 pi) with equal intensities, each draw is transported with
/// propagate_polarized, and the mean output/input intensity is returned.
/// Deterministic for a fixed seed.
double monte_carlo_unpolarized(const SusceptibilityPair& chi,
                               const PropagationGeometry& geometry,
                               std::int64_t n_samples, std::uint64_t seed);

}  // namespace bras
