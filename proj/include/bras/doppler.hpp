#pragma once

#include "bras/suscept.hpp"

namespace bras {

enum class ProfileKind { maxwell, lorentz };

/// Velocity profile expressed through the Doppler shift k v_z in gamma
/// units. For maxwell, width is the standard deviation k omega_D; for
/// lorentz it is the half width k omega_D~. Both profiles are normalized to
/// unit integral over k v_z.
struct VelocityProfile {
  ProfileKind kind = ProfileKind::lorentz;
  double width = 1.0;
};

/// Profile density at Doppler shift kv. width must be positive.
double profile_weight(const VelocityProfile& profile, double kv);

/// Lorentzian width from the Maxwell-Boltzmann width: 2 omega_d ln 2.
double lorentz_width_from_maxwell(double omega_d);

/// Dressed Lambda susceptibilities seen by the velocity class with Doppler
/// shift kv: probe and pump detunings both shift by +kv (copropagating
/// beams with nearly equal wave numbers), so the two-photon combination is
/// velocity independent.
SusceptibilityPair shifted_chi_lambda(double delta, const SignedField& field,
                                      const Drive& drive,
                                      const LambdaMedium& medium, double kv);

/// Velocity average of the dressed Lambda susceptibilities by adaptive
/// quadrature of shifted_chi_lambda against the profile weight. The
/// Lorentzian profile is integrated over the full real line through the
/// substitution kv = width * tan(theta), which turns the weight into a flat
/// density on (-pi/2, pi/2) and removes any truncation error; the Gaussian
/// profile is truncated at +-10 widths where its tail mass is negligible.
/// Throws QuadratureError if the tolerance cannot be met.
SusceptibilityPair doppler_average_numeric(double delta,
                                           const SignedField& field,
                                           const Drive& drive,
                                           const LambdaMedium& medium,
                                           const VelocityProfile& profile,
                                           double tol = 1e-8);

/// Closed-form Lorentzian velocity average of the dressed Lambda
/// susceptibilities. Contour integration of the profile against the
/// shifted susceptibility broadens each one-photon width by lorentz_width
/// while the two-photon term is untouched, which is exact for nonnegative
/// dephasings. At lorentz_width = 0 this is identical to
/// chi_lambda_dressed.
SusceptibilityPair closed_form_lorentz_average(double delta,
                                               const SignedField& field,
                                               const Drive& drive,
                                               const LambdaMedium& medium,
                                               double lorentz_width);

}  // namespace bras
