#ifndef CIRCLEPHASE_CONFIG_HPP
#define CIRCLEPHASE_CONFIG_HPP

#include <complex>

namespace circlephase {

using cdouble = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Global simulation frame for a charged particle on a ring: radius, the
/// dimensionless flux sigma (shifts every allowed momentum to (N+sigma)/r),
/// the basis truncation |N| <= n_max and a default quadrature resolution.
///
/// Coefficient/matrix layout everywhere in this library: momentum label
/// N in [-n_max, n_max] maps to array offset N + n_max.
class CircleConfig {
public:
    CircleConfig(double radius, double sigma, int n_max, int quad_panels = 2048);

    double radius() const noexcept { return radius_; }
    double sigma() const noexcept { return sigma_; }
    int n_max() const noexcept { return n_max_; }
    int quad_panels() const noexcept { return quad_panels_; }

    /// Basis dimension D = 2*n_max + 1.
    int dim() const noexcept { return 2 * n_max_ + 1; }
    /// One period of the position coordinate, 2*pi*r.
    double circumference() const noexcept { return 2.0 * pi * radius_; }

    /// Momentum eigenvalue p_N = (N + sigma) / r; defined for any integer N.
    double momentum(int n) const noexcept { return (n + sigma_) / radius_; }

    bool in_basis(int n) const noexcept { return n >= -n_max_ && n <= n_max_; }
    /// Array offset of label N; throws std::out_of_range outside the basis.
    int index_of(int n) const;
    int label_of(int index) const noexcept { return index - n_max_; }

    /// Bit-for-bit equality of radius, sigma and n_max. States and operators
    /// built on incompatible configs must never be mixed silently.
    bool compatible_with(const CircleConfig& other) const noexcept;

private:
    double radius_;
    double sigma_;
    int n_max_;
    int quad_panels_;
};

/// Throws std::invalid_argument when the two configs are not compatible.
void require_compatible(const CircleConfig& a, const CircleConfig& b);

/// p_n = (n + sigma)/r. n may lie outside the truncated basis.
double momentum_value(const CircleConfig& config, int n) noexcept;

/// Winding number floor(x / 2*pi*r): 0 on [0, 2*pi*r), -1 just below 0, ...
long long winding_number(const CircleConfig& config, double x) noexcept;

/// Phase-carrying sinc kernel
///
///   delta_sinc(x) = exp(-i*pi*x) * sin(pi*x)/(pi*x),  delta_sinc(0) = 1,
///
/// equal to (1/2pi) * integral_0^{2pi} exp(-i*beta*x) d beta. On integers it
/// is exactly the Kronecker delta, which the implementation returns without
/// going through sin(). It is the weight appearing in the odd-K displacement
/// resolution identities.
cdouble delta_sinc(double x) noexcept;

}  // namespace circlephase

#endif
