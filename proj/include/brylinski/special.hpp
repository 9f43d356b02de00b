#pragma once

#include <complex>

namespace brylinski {

using cplx = std::complex<double>;

/// Gamma function on the complex plane (Lanczos, g = 7); infinite at non-positive integers.
cplx gamma(cplx z);

/// 1 / Gamma(z); entire, exactly zero at non-positive integers.
cplx rgamma(cplx z);

/// Riemann zeta on the complex plane minus z = 1 (Euler-Maclaurin plus the reflection formula).
cplx zeta(cplx z);

/// Beta function of the unit-scaled circle in closed form,
/// R^(s+2) 2^(s+2) pi^(3/2) Gamma((s+1)/2) / Gamma(s/2 + 1), meromorphic in s.
cplx circle_beta_closed_form(double radius, cplx s);

} // namespace brylinski
