#include "circlephase/state.hpp"

#include <cmath>
#include <stdexcept>

#include "circlephase/quadrature.hpp"

namespace circlephase {

MomentumState::MomentumState(CircleConfig config)
    : config_(config), coeffs_(Eigen::VectorXcd::Zero(config.dim())) {}

MomentumState::MomentumState(CircleConfig config, Eigen::VectorXcd coeffs)
    : config_(config), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != config_.dim())
        throw std::invalid_argument("MomentumState: coefficient vector has wrong size");
}

MomentumState MomentumState::basis_vector(const CircleConfig& config, int n) {
    MomentumState s(config);
    s.set_coeff(n, 1.0);
    return s;
}

MomentumState normalize(const MomentumState& state) {
    const double n2 = state.norm_squared();
    if (n2 <= 0.0 || !std::isfinite(n2))
        throw std::invalid_argument("normalize: zero or non-finite state vector");
    return MomentumState(state.config(), state.coeffs() / std::sqrt(n2));
}

cdouble inner_product(const MomentumState& a, const MomentumState& b) {
    require_compatible(a.config(), b.config());
    return a.coeffs().dot(b.coeffs());  // Eigen's dot conjugates the left factor
}

cdouble position_wavefunction(const MomentumState& state, double x) {
    const CircleConfig& cfg = state.config();
    cdouble acc(0.0, 0.0);
    for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n)
        acc += state.coeffs()(n + cfg.n_max()) * std::polar(1.0, cfg.momentum(n) * x);
    return acc;
}

cdouble project_to_momentum(const CircleConfig& config,
                            const std::function<cdouble(double)>& f, int n,
                            int panels) {
    const double p = config.momentum(n);
    const cdouble integral = simpson(
        [&](double x) { return std::polar(1.0, -p * x) * f(x); }, 0.0,
        config.circumference(), panels);
    return integral / config.circumference();
}

}  // namespace circlephase
