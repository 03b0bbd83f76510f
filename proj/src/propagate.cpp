#include "bras/propagate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bras {

namespace {

constexpr double kRatioFloor = 1e-300;

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

void validate_geometry(const PropagationGeometry& g) {
  require_finite(g.optical_depth, "optical_depth");
  if (g.optical_depth < 0.0) {
    throw std::invalid_argument("optical_depth must be >= 0");
  }
}

}  // namespace

TransmissionPair transmission_from_susceptibilities(
    const SusceptibilityPair& forward, const SusceptibilityPair& reversed,
    const PropagationGeometry& geometry) {
  TransmissionPair out;
  out.t_forward = unpolarized_transmittivity(forward, geometry);
  out.t_reversed = unpolarized_transmittivity(reversed, geometry);
  out.reversed_clamped = out.t_reversed < kRatioFloor;
  out.ratio = out.t_forward / std::max(out.t_reversed, kRatioFloor);
  return out;
}

PropagationGeometry PropagationGeometry::from_optical_depth(double od) {
  require_finite(od, "optical_depth");
  if (od < 0.0) throw std::invalid_argument("optical_depth must be >= 0");
  return {od, OdSource::explicit_value};
}

PropagationGeometry PropagationGeometry::from_medium(double number_density_cm3,
                                                     double wavelength_cm,
                                                     double length_cm) {
  return {optical_depth_from_medium(number_density_cm3, wavelength_cm,
                                    length_cm),
          OdSource::derived_from_medium};
}

double optical_depth_from_medium(double number_density_cm3,
                                 double wavelength_cm, double length_cm) {
  require_finite(number_density_cm3, "number_density");
  require_finite(wavelength_cm, "wavelength");
  require_finite(length_cm, "length");
  if (number_density_cm3 < 0.0) {
    throw std::invalid_argument("number_density must be >= 0");
  }
  if (wavelength_cm <= 0.0 || length_cm <= 0.0) {
    throw std::invalid_argument("wavelength and length must be > 0");
  }
  return 1.5 / std::numbers::pi * number_density_cm3 * wavelength_cm *
         wavelength_cm * length_cm;
}

FieldAmplitudes propagate_polarized(const FieldAmplitudes& amps,
                                    const SusceptibilityPair& chi,
                                    const PropagationGeometry& geometry) {
  validate_geometry(geometry);
  const std::complex<double> half_od{0.0, 0.5 * geometry.optical_depth};
  return {amps.e_plus * std::exp(half_od * chi.chi_plus),
          amps.e_minus * std::exp(half_od * chi.chi_minus)};
}

double unpolarized_transmittivity(const SusceptibilityPair& chi,
                                  const PropagationGeometry& geometry) {
  validate_geometry(geometry);
  const double od = geometry.optical_depth;
  return 0.5 * (std::exp(-od * chi.chi_plus.imag()) +
                std::exp(-od * chi.chi_minus.imag()));
}

TransmissionPair transmission_pair(double delta, double field_magnitude,
                                   const Drive& drive,
                                   const LambdaMedium& medium,
                                   const PropagationGeometry& geometry) {
  if (!(field_magnitude > 0.0) || !std::isfinite(field_magnitude)) {
    throw std::invalid_argument("field_magnitude must be > 0");
  }
  return transmission_from_susceptibilities(
      chi_lambda_dressed(delta, {.b = field_magnitude}, drive, medium),
      chi_lambda_dressed(delta, {.b = -field_magnitude}, drive, medium),
      geometry);
}

TransmissionPair transmission_pair(double delta, double field_magnitude,
                                   const Drive& drive,
                                   const LadderMedium& medium,
                                   const PropagationGeometry& geometry) {
  if (!(field_magnitude > 0.0) || !std::isfinite(field_magnitude)) {
    throw std::invalid_argument("field_magnitude must be > 0");
  }
  return transmission_from_susceptibilities(
      chi_ladder_dressed(delta, {.b = field_magnitude}, drive, medium),
      chi_ladder_dressed(delta, {.b = -field_magnitude}, drive, medium),
      geometry);
}

double monte_carlo_unpolarized(const SusceptibilityPair& chi,
                               const PropagationGeometry& geometry,
                               std::int64_t n_samples, std::uint64_t seed) {
  validate_geometry(geometry);
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");

  // mt19937_64 output is fully specified, so results are reproducible
  // across platforms; the top 53 bits map to a uniform phase in [0, 2 pi).
  std::mt19937_64 rng(seed);
  const double amp = std::numbers::sqrt2 / 2.0;  // sqrt(I/2) with I = 1

  double sum = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double phase = 2.0 * std::numbers::pi * u;
    const std::complex<double> ex{amp, 0.0};
    const std::complex<double> ey = std::polar(amp, phase);
    const std::complex<double> i_unit{0.0, 1.0};
    const FieldAmplitudes in{(ex - i_unit * ey) / std::numbers::sqrt2,
                             (ex + i_unit * ey) / std::numbers::sqrt2};
    const FieldAmplitudes out = propagate_polarized(in, chi, geometry);
    sum += std::norm(out.e_plus) + std::norm(out.e_minus);
  }
  return sum / static_cast<double>(n_samples);
}

}  // namespace bras
