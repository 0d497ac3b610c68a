#include "circlephase/phasespace.hpp"

#include <cmath>
#include <stdexcept>

#include "circlephase/quadrature.hpp"

namespace circlephase {

namespace {
constexpr double kImaginaryNoiseTol = 1e-8;
}

PhaseGrid::PhaseGrid(CircleConfig config, GridAxis outer, GridAxis inner,
                     bool complex_values)
    : config_(config),
      outer_(std::move(outer)),
      inner_(std::move(inner)),
      complex_values_(complex_values),
      values_(outer_.values.size() * inner_.values.size(), cdouble(0.0, 0.0)) {}

cdouble PhaseGrid::at(std::size_t i, std::size_t j) const {
    if (i >= outer_size() || j >= inner_size())
        throw std::out_of_range("PhaseGrid: index outside the grid");
    return values_[i * inner_size() + j];
}

void PhaseGrid::set(std::size_t i, std::size_t j, cdouble value) {
    if (i >= outer_size() || j >= inner_size())
        throw std::out_of_range("PhaseGrid: index outside the grid");
    values_[i * inner_size() + j] = value;
}

cdouble weyl_function(const DensityOperator& rho, double alpha, int k,
                      bool* degenerate) {
    const CircleConfig& cfg = rho.config();
    if (std::abs(k) > 2 * cfg.n_max()) {
        if (degenerate) *degenerate = true;
        return cdouble(0.0, 0.0);
    }
    if (degenerate) *degenerate = false;
    const double r = cfg.radius();
    cdouble acc(0.0, 0.0);
    for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
        if (!cfg.in_basis(n + k)) continue;
        acc += rho.element(n, n + k) *
               std::polar(1.0, -alpha * (0.5 * k / r + cfg.momentum(n)));
    }
    return acc;
}

double wigner_function(const DensityOperator& rho, double x, int n) {
    const CircleConfig& cfg = rho.config();
    if (!cfg.in_basis(n))
        throw std::invalid_argument("wigner_function: |n| exceeds n_max");
    const int reach = cfg.n_max() - std::abs(n);
    cdouble acc(0.0, 0.0);
    for (int k = -reach; k <= reach; ++k)
        acc += rho.element(n + k, n - k) *
               std::polar(1.0, 2.0 * x * k / cfg.radius());
    if (std::abs(acc.imag()) > kImaginaryNoiseTol)
        throw std::runtime_error(
            "wigner_function: imaginary residue exceeds 1e-8; density matrix "
            "is not Hermitian enough");
    return acc.real();
}

PhaseGrid wigner_grid(const DensityOperator& rho, const std::vector<double>& xs,
                      int n_lo, int n_hi) {
    const CircleConfig& cfg = rho.config();
    if (n_lo > n_hi || !cfg.in_basis(n_lo) || !cfg.in_basis(n_hi))
        throw std::invalid_argument("wigner_grid: momentum range outside the basis");
    GridAxis outer{"x", xs};
    GridAxis inner{"n", {}};
    for (int n = n_lo; n <= n_hi; ++n) inner.values.push_back(double(n));
    PhaseGrid grid(cfg, std::move(outer), std::move(inner), false);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int n = n_lo; n <= n_hi; ++n)
            grid.set(i, std::size_t(n - n_lo), wigner_function(rho, xs[i], n));
    return grid;
}

PhaseGrid weyl_grid(const DensityOperator& rho, const std::vector<double>& alphas,
                    int k_lo, int k_hi) {
    const CircleConfig& cfg = rho.config();
    if (k_lo > k_hi)
        throw std::invalid_argument("weyl_grid: empty momentum-increment range");
    GridAxis outer{"alpha", alphas};
    GridAxis inner{"k", {}};
    for (int k = k_lo; k <= k_hi; ++k) inner.values.push_back(double(k));
    PhaseGrid grid(cfg, std::move(outer), std::move(inner), true);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (int k = k_lo; k <= k_hi; ++k)
            grid.set(i, std::size_t(k - k_lo), weyl_function(rho, alphas[i], k));
    return grid;
}

double wigner_marginal_momentum(const DensityOperator& rho, int n, int panels) {
    const CircleConfig& cfg = rho.config();
    const double integral = simpson(
        [&](double x) { return wigner_function(rho, x, n); }, 0.0,
        cfg.circumference(), panels);
    return integral / cfg.circumference();
}

double wigner_marginal_position(const DensityOperator& rho, double x) {
    double acc = 0.0;
    for (int n = -rho.config().n_max(); n <= rho.config().n_max(); ++n)
        acc += wigner_function(rho, x, n);
    return acc;
}

namespace {

/// Wigner rows over the refined midpoint lattice j = M + M' in
/// [-2n_max, 2n_max]. Even j is W(x, p_{j/2}); odd j is the same momentum sum
/// centered between two basis labels. Both together carry the full density
/// matrix, which is what the overlap formula needs.
void midpoint_rows(const DensityOperator& rho,
                   const std::vector<cdouble>& diff_phase,
                   std::vector<double>& rows) {
    const CircleConfig& cfg = rho.config();
    const int nmax = cfg.n_max();
    std::fill(rows.begin(), rows.end(), 0.0);
    for (int m = -nmax; m <= nmax; ++m) {
        for (int mp = -nmax; mp <= nmax; ++mp) {
            const cdouble term =
                rho.element(m, mp) * diff_phase[std::size_t(m - mp + 2 * nmax)];
            rows[std::size_t(m + mp + 2 * nmax)] += term.real();
        }
    }
}

}  // namespace

double trace_product(const DensityOperator& rho1, const DensityOperator& rho2,
                     int panels) {
    require_compatible(rho1.config(), rho2.config());
    const CircleConfig& cfg = rho1.config();
    const int nmax = cfg.n_max();
    const std::size_t rows = std::size_t(4 * nmax + 1);
    std::vector<double> w1(rows), w2(rows);
    std::vector<cdouble> diff_phase(rows);
    const double integral = simpson(
        [&](double x) {
            for (int d = -2 * nmax; d <= 2 * nmax; ++d)
                diff_phase[std::size_t(d + 2 * nmax)] =
                    std::polar(1.0, x * d / cfg.radius());
            midpoint_rows(rho1, diff_phase, w1);
            midpoint_rows(rho2, diff_phase, w2);
            double node = 0.0;
            for (std::size_t j = 0; j < rows; ++j) node += w1[j] * w2[j];
            return node;
        },
        0.0, cfg.circumference(), panels);
    return integral / cfg.circumference();
}

double wigner_from_weyl(const DensityOperator& rho, double x, int n, int panels) {
    const CircleConfig& cfg = rho.config();
    if (!cfg.in_basis(n))
        throw std::invalid_argument("wigner_from_weyl: |n| exceeds n_max");
    const double r = cfg.radius();
    const double pn = cfg.momentum(n);
    const cdouble integral = simpson(
        [&](double alpha) {
            cdouble acc(0.0, 0.0);
            for (int k = -2 * cfg.n_max(); k <= 2 * cfg.n_max(); k += 2)
                acc += weyl_function(rho, alpha, k) * std::polar(1.0, -k * x / r);
            return acc * std::polar(1.0, alpha * pn);
        },
        0.0, cfg.circumference(), panels);
    const cdouble value = integral / cfg.circumference();
    if (std::abs(value.imag()) > kImaginaryNoiseTol)
        throw std::runtime_error(
            "wigner_from_weyl: reconstruction has a non-real residue");
    return value.real();
}

SigmaShiftResult sigma_shift_check(
    const std::function<MomentumState(double)>& make_state, double base_sigma,
    double x, int n) {
    const MomentumState low = make_state(base_sigma);
    const MomentumState high = make_state(base_sigma + 1.0);
    const DensityOperator rho_low = density_from_pure(low);
    const DensityOperator rho_high = density_from_pure(high);

    SigmaShiftResult result;
    result.wigner_raised_flux = wigner_function(rho_high, x, n);
    result.wigner_raised_index = wigner_function(rho_low, x, n + 1);

    const struct {
        double alpha;
        int k;
    } probes[] = {{0.0, 0}, {0.3, 1}, {0.7, -2}, {1.5, 0}, {2.2, 3}};
    double dev = 0.0;
    for (const auto& probe : probes)
        dev = std::max(dev, std::abs(weyl_function(rho_low, probe.alpha, probe.k) -
                                     weyl_function(rho_high, probe.alpha, probe.k)));
    result.weyl_max_deviation = dev;
    return result;
}

}  // namespace circlephase
