#include "bras/doppler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bras/quadrature.hpp"

namespace bras {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

void validate_profile(const VelocityProfile& profile) {
  require_finite(profile.width, "profile width");
  if (profile.width <= 0.0) {
    throw std::invalid_argument("profile width must be > 0");
  }
}

// Dressed sigma+ response with an explicit one-photon width. The two-photon
// factor is computed once from the unshifted detunings: with copropagating
// probe and pump the Doppler shift drops out of delta - delta_pump exactly,
// which keeps the transparency point velocity independent.
std::complex<double> dressed_plus(double one_photon_detuning,
                                  double two_photon_detuning,
                                  double one_photon_width, double gamma_fg,
                                  double omega) {
  const std::complex<double> line =
      kImag * one_photon_detuning - one_photon_width;
  if (omega == 0.0) {
    if (line == 0.0) {
      throw std::domain_error(
          "singular susceptibility denominator: zero dephasing at "
          "simultaneous one- and two-photon resonance");
    }
    return -kImag / line;
  }
  const std::complex<double> two_photon =
      kImag * two_photon_detuning - gamma_fg;
  const std::complex<double> den = line * two_photon + omega * omega;
  if (den == 0.0) {
    throw std::domain_error(
        "singular susceptibility denominator: zero dephasing at "
        "simultaneous one- and two-photon resonance");
  }
  return -kImag * two_photon / den;
}

std::complex<double> lorentz_line(double detuning, double width) {
  const std::complex<double> den = kImag * detuning - width;
  if (den == 0.0) {
    throw std::domain_error(
        "singular susceptibility denominator: zero width on resonance");
  }
  return -kImag / den;
}

}  // namespace

double profile_weight(const VelocityProfile& profile, double kv) {
  validate_profile(profile);
  require_finite(kv, "kv");
  const double w = profile.width;
  if (profile.kind == ProfileKind::maxwell) {
    return std::exp(-kv * kv / (2.0 * w * w)) /
           std::sqrt(2.0 * std::numbers::pi * w * w);
  }
  return (w / std::numbers::pi) / (kv * kv + w * w);
}

double lorentz_width_from_maxwell(double omega_d) {
  require_finite(omega_d, "omega_d");
  if (omega_d <= 0.0) throw std::invalid_argument("omega_d must be > 0");
  return 2.0 * omega_d * std::numbers::ln2;
}

SusceptibilityPair shifted_chi_lambda(double delta, const SignedField& field,
                                      const Drive& drive,
                                      const LambdaMedium& medium, double kv) {
  require_finite(kv, "kv");
  // Validate the unshifted inputs through the static evaluation.
  chi_lambda_dressed(delta, field, drive, medium);
  const double b = field.b;
  return {dressed_plus(delta + kv + b, delta - drive.delta_pump + 3.0 * b,
                       medium.gamma_epg, medium.gamma_fg, drive.omega),
          lorentz_line(delta + kv - b, medium.gamma_emg)};
}

SusceptibilityPair doppler_average_numeric(double delta,
                                           const SignedField& field,
                                           const Drive& drive,
                                           const LambdaMedium& medium,
                                           const VelocityProfile& profile,
                                           double tol) {
  validate_profile(profile);
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  chi_lambda_dressed(delta, field, drive, medium);

  const double w = profile.width;
  const double b = field.b;
  const double two_photon = delta - drive.delta_pump + 3.0 * b;

  const auto average = [&](auto&& component) {
    if (profile.kind == ProfileKind::lorentz) {
      // kv = w tan(theta) maps the weight to a flat 1/pi density on
      // (-pi/2, pi/2); no truncation of the heavy tails is needed.
      const auto integrand = [&](double theta) {
        return component(w * std::tan(theta)) / std::numbers::pi;
      };
      return integrate_adaptive(integrand, -std::numbers::pi / 2.0,
                                std::numbers::pi / 2.0, tol, 1e-14)
          .value;
    }
    // Gaussian tails beyond 10 widths carry ~1e-23 of the mass.
    const auto integrand = [&](double kv) {
      return component(kv) * profile_weight(profile, kv);
    };
    return integrate_adaptive(integrand, -10.0 * w, 10.0 * w, tol, 1e-14)
        .value;
  };

  SusceptibilityPair out;
  out.chi_plus = average([&](double kv) {
    return dressed_plus(delta + kv + b, two_photon, medium.gamma_epg,
                        medium.gamma_fg, drive.omega);
  });
  out.chi_minus = average(
      [&](double kv) { return lorentz_line(delta + kv - b, medium.gamma_emg); });
  return out;
}

SusceptibilityPair closed_form_lorentz_average(double delta,
                                               const SignedField& field,
                                               const Drive& drive,
                                               const LambdaMedium& medium,
                                               double lorentz_width) {
  require_finite(lorentz_width, "lorentz_width");
  if (lorentz_width < 0.0) {
    throw std::invalid_argument("lorentz_width must be >= 0");
  }
  chi_lambda_dressed(delta, field, drive, medium);
  const double b = field.b;
  return {dressed_plus(delta + b, delta - drive.delta_pump + 3.0 * b,
                       medium.gamma_epg + lorentz_width, medium.gamma_fg,
                       drive.omega),
          lorentz_line(delta - b, medium.gamma_emg + lorentz_width)};
}

}  // namespace bras
