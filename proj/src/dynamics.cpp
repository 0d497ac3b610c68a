#include "circlephase/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace circlephase {

MomentumState evolve_free(const MomentumState& state,
                          const EvolutionParams& params) {
    if (params.sign != 1 && params.sign != -1)
        throw std::invalid_argument("evolve_free: sign must be +1 or -1");
    const CircleConfig& cfg = state.config();
    MomentumState out = state;
    for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
        const double p = cfg.momentum(n);
        out.coeffs()(n + cfg.n_max()) *=
            std::polar(1.0, params.sign * params.t * p * p);
    }
    return out;
}

MomentumState evolved_zak_coefficients(const CircleConfig& config,
                                       const GaussianParams& params, double t) {
    const cdouble a = params.a;
    const cdouble constant = 0.5 * (a * a - std::norm(a));
    MomentumState state(config);
    for (int n = -config.n_max(); n <= config.n_max(); ++n) {
        const double p = config.momentum(n);
        // -(1/2 - i t) p^2 - i sqrt(2) A p + constant
        state.set_coeff(n, std::exp(cdouble(-0.5 * p * p, t * p * p) -
                                    cdouble(0.0, std::sqrt(2.0)) * a * p +
                                    constant));
    }
    if (!(state.norm_squared() > 0.0) || !std::isfinite(state.norm_squared()))
        throw std::runtime_error(
            "evolved_zak_coefficients: all coefficients underflowed to zero");
    return normalize(state);
}

}  // namespace circlephase
