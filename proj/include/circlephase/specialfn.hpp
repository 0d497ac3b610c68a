#ifndef CIRCLEPHASE_SPECIALFN_HPP
#define CIRCLEPHASE_SPECIALFN_HPP

#include "circlephase/config.hpp"
#include "circlephase/state.hpp"

namespace circlephase {

/// Complex width/displacement parameter A = A_R + i A_I of the line Gaussian.
struct GaussianParams {
    cdouble a{0.0, 0.0};

    double a_re() const noexcept { return a.real(); }
    double a_im() const noexcept { return a.imag(); }
};

/// Theta series  theta3(u; tau) = sum_n exp(i pi tau n^2 + i 2 n u),
/// Im(tau) > 0. Terms are added in symmetric (n, -n) pairs in ascending |n|,
/// so the u -> -u symmetry holds to the last bit. Summation stops when the
/// last pair is below tol relative to the partial sum (floored at 1); more
/// than 500 pairs is treated as non-convergence and throws.
cdouble theta3(cdouble u, cdouble tau, double tol = 1e-14);

/// Line Gaussian S(y; A) = pi^{-1/4} exp(-y^2/2 + sqrt(2) A y - A A_R).
cdouble gaussian_position(const GaussianParams& params, double y);

/// Fourier transform of the line Gaussian under the e^{-ipy} convention:
///   S~(p) = sqrt(2) pi^{1/4} exp(-p^2/2 - i sqrt(2) A p + (A^2 - |A|^2)/2).
/// The constant (A^2 - |A|^2)/2 = i A A_I is what the integral actually
/// produces; it matters only as a global factor but keeps momentum-space and
/// position-space constructions phase-consistent for complex A.
cdouble gaussian_momentum(const GaussianParams& params, double p);

/// Circle state obtained by periodizing the line Gaussian with flux winding
/// phases: coefficients c_N proportional to S~(p_N), normalized with a
/// positive real constant. Throws when every coefficient underflows to zero.
MomentumState zak_state(const CircleConfig& config, const GaussianParams& params);

/// Normalization constant of the closed-form wavefunction below, defined by
/// Simpson quadrature of the unnormalized |R|^2 over one period using the
/// config's quad_panels. Cached per (radius, sigma, quad_panels, A); safe for
/// concurrent readers.
double theta_normalization(const CircleConfig& config,
                           const GaussianParams& params);

/// Closed form of the periodized Gaussian on the circle:
///   R(x) = Nc * pi^{-1/4} exp(-x^2/2 + sqrt(2) A x - A A_R)
///             * theta3(-pi sigma + i pi r (x - sqrt(2) A); i 2 pi r^2),
/// with Nc = theta_normalization(...). Equals the winding sum
/// sum_w S(x + 2 pi r w) exp(-i 2 pi sigma w) up to the same constant.
cdouble theta_position(const CircleConfig& config, const GaussianParams& params,
                       double x);

}  // namespace circlephase

#endif
