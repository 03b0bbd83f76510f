#include "bras/suscept.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bras {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

void require_rate(double value, const char* name) {
  require_finite(value, name);
  if (value < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be >= 0");
  }
}

void validate_common(double delta, const SignedField& field) {
  require_finite(delta, "delta");
  require_finite(field.b, "field.b");
}

void validate_medium(const LambdaMedium& m) {
  require_rate(m.gamma_epg, "gamma_epg");
  require_rate(m.gamma_emg, "gamma_emg");
  require_rate(m.gamma_fg, "gamma_fg");
}

void validate_drive(const Drive& d) {
  require_finite(d.delta_pump, "delta_pump");
  require_rate(d.omega, "omega");
}

[[noreturn]] void throw_singular() {
  throw std::domain_error(
      "singular susceptibility denominator: zero dephasing at simultaneous "
      "one- and two-photon resonance");
}

std::complex<double> bare_line(double detuning_from_line, double width) {
  const std::complex<double> den = kImag * detuning_from_line - width;
  if (den == 0.0) throw_singular();
  return -kImag / den;
}

}  // namespace

SusceptibilityPair chi_lambda_bare(double delta, const SignedField& field,
                                   const LambdaMedium& medium) {
  validate_common(delta, field);
  validate_medium(medium);
  const double b = field.b;
  return {bare_line(delta + b, medium.gamma_epg),
          bare_line(delta - b, medium.gamma_emg)};
}

SusceptibilityPair chi_lambda_dressed(double delta, const SignedField& field,
                                      const Drive& drive,
                                      const LambdaMedium& medium) {
  validate_common(delta, field);
  validate_medium(medium);
  validate_drive(drive);
  const double b = field.b;
  const std::complex<double> chi_minus = bare_line(delta - b, medium.gamma_emg);
  if (drive.omega == 0.0) {
    // With the control off the two-photon factor cancels exactly.
    return {bare_line(delta + b, medium.gamma_epg), chi_minus};
  }
  const std::complex<double> two_photon =
      kImag * (delta - drive.delta_pump + 3.0 * b) - medium.gamma_fg;
  const std::complex<double> one_photon =
      kImag * (delta + b) - medium.gamma_epg;
  const std::complex<double> den =
      one_photon * two_photon + drive.omega * drive.omega;
  if (den == 0.0) throw_singular();
  return {-kImag * two_photon / den, chi_minus};
}

SusceptibilityPair chi_ladder_bare(double delta, const SignedField& field) {
  validate_common(delta, field);
  const double b = field.b;
  return {bare_line(delta - b, 1.0), bare_line(delta + b, 1.0)};
}

SusceptibilityPair chi_ladder_dressed(double delta, const SignedField& field,
                                      const Drive& drive,
                                      const LadderMedium& medium) {
  validate_common(delta, field);
  validate_drive(drive);
  require_finite(medium.gamma_upper, "gamma_upper");
  if (medium.gamma_upper <= 0.0) {
    throw std::invalid_argument("gamma_upper must be > 0");
  }
  const double b = field.b;
  const std::complex<double> chi_minus = bare_line(delta + b, 1.0);
  if (drive.omega == 0.0) {
    return {bare_line(delta - b, 1.0), chi_minus};
  }
  // The upper level has m_j = 0, so the two-photon term carries no Zeeman
  // shift.
  const std::complex<double> two_photon =
      kImag * (drive.delta_pump + delta) - medium.gamma_upper;
  const std::complex<double> one_photon = kImag * (delta - b) - 1.0;
  const std::complex<double> den =
      one_photon * two_photon + drive.omega * drive.omega;
  if (den == 0.0) throw_singular();
  return {-kImag * two_photon / den, chi_minus};
}

double gamma_upper_from_wavelengths(double lambda_eg, double lambda_fe) {
  require_finite(lambda_eg, "lambda_eg");
  require_finite(lambda_fe, "lambda_fe");
  if (lambda_eg <= 0.0 || lambda_fe <= 0.0) {
    throw std::invalid_argument("wavelengths must be > 0");
  }
  const double ratio = lambda_eg / lambda_fe;
  return 0.5 * ratio * ratio * ratio;
}

}  // namespace bras
