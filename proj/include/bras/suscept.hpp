#pragma once

#include <complex>
#include <optional>

// Unit conventions used throughout the library:
//  - every rate, detuning and Zeeman splitting is dimensionless, expressed in
//    units of gamma, the half width of the sigma- optical coherence
//  - susceptibilities are dimensionless, in units of the line-center
//    absorption scale alpha0 = N |d|^2 / (hbar gamma)
// Physical magnitudes (gauss, cm^-3, ...) enter only through the optical
// depth and the optional gauss_per_gamma bookkeeping field.

namespace bras {

/// Coherence decay and dephasing rates of the Lambda medium, gamma units.
struct LambdaMedium {
  double gamma_epg = 4.0 / 3.0;  ///< |e+> <-> |g> coherence decay
  double gamma_emg = 1.0;        ///< |e-> <-> |g> coherence decay
  double gamma_fg = 0.0;         ///< |f> <-> |g> collisional dephasing
};

/// Upper-level coherence decay of the ladder medium, gamma units.
struct LadderMedium {
  double gamma_upper = 0.45;
};

/// Control (pump) field: half Rabi frequency and pump detuning, gamma units.
struct Drive {
  double omega = 0.0;       ///< half Rabi frequency, must be >= 0
  double delta_pump = 0.0;  ///< pump detuning
};

/// Longitudinal magnetic field expressed through the Zeeman splitting it
/// produces. b > 0 points along the propagation direction, b < 0 against it;
/// reversing the field is the substitution b -> -b with all laser
/// frequencies held fixed. gauss_per_gamma is conversion metadata only and
/// never enters a computation.
struct SignedField {
  double b = 0.0;
  std::optional<double> gauss_per_gamma{};
};

/// sigma+ / sigma- probe susceptibilities at one parameter point, alpha0 units.
struct SusceptibilityPair {
  std::complex<double> chi_plus{};
  std::complex<double> chi_minus{};
};

/// Probe susceptibilities of the undriven Lambda medium. The sigma- component
/// is resonant at delta = b, the sigma+ component at delta = -b.
SusceptibilityPair chi_lambda_bare(double delta, const SignedField& field,
                                   const LambdaMedium& medium = {});

/// Probe susceptibilities of the Lambda medium with the control field applied
/// on the |e+> <-> |f> transition. Only chi_plus is modified; for
/// gamma_fg = 0 it vanishes identically at the two-photon resonance
/// delta = delta_pump - 3 b (the transparency window). Throws
/// std::domain_error if the dressed denominator vanishes exactly, which
/// requires zero dephasing at simultaneous one- and two-photon resonance.
SusceptibilityPair chi_lambda_dressed(double delta, const SignedField& field,
                                      const Drive& drive,
                                      const LambdaMedium& medium = {});

/// Probe susceptibilities of the undriven ladder medium (both lines have unit
/// half width). The sigma+ component is resonant at delta = b.
SusceptibilityPair chi_ladder_bare(double delta, const SignedField& field);

/// Ladder medium with the control field coupling |e+> to the upper level
/// |f>. The two-photon term carries no Zeeman shift because |f> has m_j = 0,
/// so the transparency dip is not total.
SusceptibilityPair chi_ladder_dressed(double delta, const SignedField& field,
                                      const Drive& drive,
                                      const LadderMedium& medium = {});

/// Upper-level width from the two transition wavelengths,
/// 0.5 (lambda_eg / lambda_fe)^3 in gamma units. Both wavelengths must be
/// positive; any common length unit works since only the ratio enters.
double gamma_upper_from_wavelengths(double lambda_eg, double lambda_fe);

}  // namespace bras
