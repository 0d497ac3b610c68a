#include "circlephase/specialfn.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "circlephase/quadrature.hpp"

namespace circlephase {

namespace {

constexpr int kThetaPairCap = 500;
const double kQuarticRootPi = std::pow(pi, 0.25);

/// Unnormalized closed form: pi^{-1/4} e^{-x^2/2 + sqrt2 A x - A A_R}
/// * theta3(-pi sigma + i pi r (x - sqrt2 A); i 2 pi r^2).
cdouble theta_position_unnormalized(const CircleConfig& cfg,
                                    const GaussianParams& g, double x) {
    const cdouble a = g.a;
    const double r = cfg.radius();
    const cdouble envelope =
        std::exp(cdouble(-0.5 * x * x, 0.0) + std::sqrt(2.0) * a * x - a * a.real()) /
        kQuarticRootPi;
    const cdouble u = cdouble(-pi * cfg.sigma(), 0.0) +
                      cdouble(0.0, pi * r) * (cdouble(x, 0.0) - std::sqrt(2.0) * a);
    const cdouble tau(0.0, 2.0 * pi * r * r);
    return envelope * theta3(u, tau);
}

struct NormCache {
    std::mutex mutex;
    std::map<std::tuple<double, double, int, double, double>, double> values;
};

NormCache& norm_cache() {
    static NormCache cache;
    return cache;
}

}  // namespace

cdouble theta3(cdouble u, cdouble tau, double tol) {
    if (!(tau.imag() > 0.0))
        throw std::invalid_argument("theta3: requires Im(tau) > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("theta3: tol must be positive");
    const cdouble i_pi_tau = cdouble(0.0, 1.0) * pi * tau;
    cdouble sum(1.0, 0.0);  // n = 0 term
    for (int n = 1; n <= kThetaPairCap; ++n) {
        const cdouble gauss = std::exp(i_pi_tau * double(n) * double(n));
        const cdouble twist = cdouble(0.0, 2.0 * n) * u;
        const cdouble pair = gauss * (std::exp(twist) + std::exp(-twist));
        sum += pair;
        if (std::abs(pair) < tol * std::max(1.0, std::abs(sum))) return sum;
    }
    throw std::runtime_error("theta3: series did not meet tolerance within 500 pairs");
}

cdouble gaussian_position(const GaussianParams& params, double y) {
    const cdouble a = params.a;
    return std::exp(cdouble(-0.5 * y * y, 0.0) + std::sqrt(2.0) * a * y -
                    a * a.real()) /
           kQuarticRootPi;
}

cdouble gaussian_momentum(const GaussianParams& params, double p) {
    const cdouble a = params.a;
    const cdouble constant = 0.5 * (a * a - std::norm(a));  // = i A A_I
    return std::sqrt(2.0) * kQuarticRootPi *
           std::exp(cdouble(-0.5 * p * p, 0.0) -
                    cdouble(0.0, std::sqrt(2.0)) * a * p + constant);
}

MomentumState zak_state(const CircleConfig& config, const GaussianParams& params) {
    MomentumState state(config);
    for (int n = -config.n_max(); n <= config.n_max(); ++n)
        state.set_coeff(n, gaussian_momentum(params, config.momentum(n)));
    if (!(state.norm_squared() > 0.0) || !std::isfinite(state.norm_squared()))
        throw std::runtime_error("zak_state: all coefficients underflowed to zero");
    return normalize(state);
}

double theta_normalization(const CircleConfig& config,
                           const GaussianParams& params) {
    const auto key = std::make_tuple(config.radius(), config.sigma(),
                                     config.quad_panels(), params.a.real(),
                                     params.a.imag());
    {
        std::lock_guard<std::mutex> lock(norm_cache().mutex);
        auto it = norm_cache().values.find(key);
        if (it != norm_cache().values.end()) return it->second;
    }
    const double mean_sq =
        simpson(
            [&](double x) {
                return std::norm(theta_position_unnormalized(config, params, x));
            },
            0.0, config.circumference(), config.quad_panels()) /
        config.circumference();
    if (!(mean_sq > 0.0) || !std::isfinite(mean_sq))
        throw std::runtime_error("theta_normalization: degenerate wavefunction");
    const double norm = 1.0 / std::sqrt(mean_sq);
    std::lock_guard<std::mutex> lock(norm_cache().mutex);
    return norm_cache().values.emplace(key, norm).first->second;
}

cdouble theta_position(const CircleConfig& config, const GaussianParams& params,
                       double x) {
    return theta_normalization(config, params) *
           theta_position_unnormalized(config, params, x);
}

}  // namespace circlephase
