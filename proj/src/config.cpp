#include "circlephase/config.hpp"

#include <cmath>
#include <stdexcept>

namespace circlephase {

CircleConfig::CircleConfig(double radius, double sigma, int n_max, int quad_panels)
    : radius_(radius), sigma_(sigma), n_max_(n_max), quad_panels_(quad_panels) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("CircleConfig: radius must be positive and finite");
    if (!std::isfinite(sigma))
        throw std::invalid_argument("CircleConfig: sigma must be finite");
    if (n_max < 1)
        throw std::invalid_argument("CircleConfig: n_max must be >= 1");
    if (quad_panels < 2 || quad_panels % 2 != 0)
        throw std::invalid_argument("CircleConfig: quad_panels must be even and >= 2");
}

int CircleConfig::index_of(int n) const {
    if (!in_basis(n))
        throw std::out_of_range("CircleConfig: momentum label outside the truncated basis");
    return n + n_max_;
}

bool CircleConfig::compatible_with(const CircleConfig& other) const noexcept {
    return radius_ == other.radius_ && sigma_ == other.sigma_ &&
           n_max_ == other.n_max_;
}

void require_compatible(const CircleConfig& a, const CircleConfig& b) {
    if (!a.compatible_with(b))
        throw std::invalid_argument(
            "incompatible configs: radius, sigma and n_max must match exactly");
}

double momentum_value(const CircleConfig& config, int n) noexcept {
    return config.momentum(n);
}

long long winding_number(const CircleConfig& config, double x) noexcept {
    return static_cast<long long>(std::floor(x / config.circumference()));
}

cdouble delta_sinc(double x) noexcept {
    // Integers are exact: Kronecker delta, no roundoff from sin(pi*x).
    if (x == std::round(x)) return cdouble(x == 0.0 ? 1.0 : 0.0, 0.0);
    const double s = std::sin(pi * x) / (pi * x);
    return std::polar(s, -pi * x);
}

}  // namespace circlephase
