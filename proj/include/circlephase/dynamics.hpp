#ifndef CIRCLEPHASE_DYNAMICS_HPP
#define CIRCLEPHASE_DYNAMICS_HPP

#include "circlephase/specialfn.hpp"
#include "circlephase/state.hpp"

namespace circlephase {

/// Free evolution parameters under H = p^2. `sign` selects the phase
/// convention exp(i sign t p_N^2); +1 is the default, -1 gives the
/// textbook exp(-i t H) direction (the two are related by time reversal).
struct EvolutionParams {
    double t = 0.0;
    int sign = +1;
};

/// c_N -> exp(i sign t p_N^2) c_N. Norm is preserved exactly.
MomentumState evolve_free(const MomentumState& state,
                          const EvolutionParams& params);

/// Closed form of the evolved periodized Gaussian:
/// c_N proportional to exp(-(1/2 - i t) p_N^2 - i sqrt(2) A p_N), normalized
/// with the same constant chain as zak_state. Must equal
/// evolve_free(zak_state(...), {t, +1}) elementwise.
MomentumState evolved_zak_coefficients(const CircleConfig& config,
                                       const GaussianParams& params, double t);

}  // namespace circlephase

#endif
