#include "circlephase/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "circlephase/quadrature.hpp"

namespace circlephase {

namespace {

/// Band phase of D(alpha,k) at column N: exp(-i alpha k/(2r)) exp(-i alpha p_N).
cdouble displacement_phase(const CircleConfig& cfg, double alpha, int k, int n) {
    return std::polar(1.0, -alpha * (0.5 * k / cfg.radius() + cfg.momentum(n)));
}

void require_representable(const CircleConfig& cfg, int k) {
    if (std::abs(k) > 2 * cfg.n_max())
        throw std::invalid_argument(
            "displacement: |k| > 2*n_max is identically zero on the truncated basis");
}

}  // namespace

OperatorMatrix displacement_matrix(const CircleConfig& config,
                                   const PhaseDisplacement& d) {
    require_representable(config, d.k);
    const int nmax = config.n_max();
    BandedForm band{d.k, Eigen::VectorXcd::Zero(config.dim())};
    for (int n = -nmax; n <= nmax; ++n)
        if (config.in_basis(n + d.k))
            band.phases(n + nmax) = displacement_phase(config, d.alpha, d.k, n);
    return OperatorMatrix::from_band(config, std::move(band));
}

DisplacedState apply_displacement(const MomentumState& state,
                                  const PhaseDisplacement& d) {
    const CircleConfig& cfg = state.config();
    require_representable(cfg, d.k);
    const int nmax = cfg.n_max();
    MomentumState shifted(cfg);
    double dropped = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
        const cdouble c = state.coeffs()(n + nmax);
        if (cfg.in_basis(n + d.k))
            shifted.coeffs()(n + d.k + nmax) =
                displacement_phase(cfg, d.alpha, d.k, n) * c;
        else
            dropped += std::norm(c);
    }
    return DisplacedState{std::move(shifted), dropped};
}

DisplacementComposition compose_displacements(const PhaseDisplacement& d1,
                                              const PhaseDisplacement& d2,
                                              const CircleConfig& config) {
    const cdouble phase = std::polar(
        1.0, (d1.k * d2.alpha - d2.k * d1.alpha) / (2.0 * config.radius()));
    return DisplacementComposition{
        PhaseDisplacement{d1.alpha + d2.alpha, d1.k + d2.k}, phase};
}

OperatorMatrix parity_matrix(const CircleConfig& config) {
    const int nmax = config.n_max();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(config.dim(), config.dim());
    for (int n = -nmax; n <= nmax; ++n) mat(-n + nmax, n + nmax) = 1.0;
    return OperatorMatrix(config, std::move(mat));
}

OperatorMatrix displaced_parity_matrix(const CircleConfig& config,
                                       const PhaseDisplacement& d) {
    // D(a,k) U0 D(a,k)^dagger evaluated along its single anti-band. The three
    // factors fix the summation indices completely: column N is reached only
    // through the chain N -> N-k -> k-N -> 2k-N, so
    //   (D U0 D^+)(2k-N, N) = phase(k-N) * conj(phase(N-k))
    // with phase(n) the D band phase at column n. Whenever N and 2k-N are in
    // the basis the intermediate N-k is too, so no interior truncation occurs.
    const int nmax = config.n_max();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(config.dim(), config.dim());
    for (int n = -nmax; n <= nmax; ++n) {
        const int m = 2 * d.k - n;
        if (!config.in_basis(m)) continue;
        u(m + nmax, n + nmax) = displacement_phase(config, d.alpha, d.k, m - d.k) *
                                std::conj(displacement_phase(config, d.alpha, d.k,
                                                             n - d.k));
    }
    return OperatorMatrix(config, std::move(u));
}

OperatorMatrix rank_one_position(const CircleConfig& config, double x, double y) {
    const int d = config.dim();
    Eigen::VectorXcd ket(d), bra(d);
    for (int i = 0; i < d; ++i) {
        const double p = config.momentum(config.label_of(i));
        ket(i) = std::polar(1.0, -p * x);
        bra(i) = std::polar(1.0, p * y);
    }
    return OperatorMatrix(config, ket * bra.transpose());
}

OperatorMatrix sum_displacements_over_k(const CircleConfig& config, double alpha,
                                        ParityFilter filter) {
    const int kmax = 2 * config.n_max();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(config.dim(), config.dim());
    for (int k = -kmax; k <= kmax; ++k) {
        if (filter == ParityFilter::Even && k % 2 != 0) continue;
        if (filter == ParityFilter::Odd && k % 2 == 0) continue;
        acc += displacement_matrix(config, {alpha, k}).matrix();
    }
    return OperatorMatrix(config, std::move(acc));
}

OperatorMatrix integrate_displacement_over_alpha(const CircleConfig& config,
                                                 int k, bool flux_factor,
                                                 const AlphaInterval& interval,
                                                 int panels) {
    require_representable(config, k);
    const int nmax = config.n_max();
    const double s = flux_factor ? config.sigma() : 0.0;
    // Simpson on the band: column N integrates
    // exp(-i alpha (k/2 + N + sigma)/r) * [flux ? exp(i alpha sigma/r)]
    //   = exp(-i alpha (k/2 + N + (1-flux) sigma)/r).
    BandedForm band{k, Eigen::VectorXcd::Zero(config.dim())};
    for (int n = -nmax; n <= nmax; ++n) {
        if (!config.in_basis(n + k)) continue;
        const double freq = (0.5 * k + n + config.sigma() - s) / config.radius();
        band.phases(n + nmax) =
            simpson([&](double a) { return std::polar(1.0, -freq * a); },
                    interval.lo, interval.hi, panels) /
            config.circumference();
    }
    return OperatorMatrix::from_band(config, std::move(band));
}

OperatorMatrix integrate_displaced_parity_over_alpha(const CircleConfig& config,
                                                     int k, int panels) {
    const Eigen::MatrixXcd acc =
        simpson(
            [&](double a) -> Eigen::MatrixXcd {
                return displaced_parity_matrix(config, {a, k}).matrix();
            },
            0.0, config.circumference(), panels) /
        config.circumference();
    return OperatorMatrix(config, acc);
}

OperatorMatrix sum_displaced_parity_over_k(const CircleConfig& config,
                                           double alpha) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(config.dim(), config.dim());
    for (int k = -config.n_max(); k <= config.n_max(); ++k)
        acc += displaced_parity_matrix(config, {alpha, k}).matrix();
    return OperatorMatrix(config, std::move(acc));
}

OperatorMatrix fourier_relation_d_to_u(const CircleConfig& config,
                                       const PhaseDisplacement& d, int panels) {
    const int nmax = config.n_max();
    const double r = config.radius();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(config.dim(), config.dim());
    for (int m = -2 * nmax; m <= 2 * nmax; m += 2) {
        // (1/2pi r) int_0^{2pi r} D(beta,m) e^{i beta sigma/r}
        //           e^{i (k beta - m alpha)/r} d beta, on the band of D(.,m).
        const cdouble outer = std::polar(1.0, -m * d.alpha / r);
        for (int n = -nmax; n <= nmax; ++n) {
            if (!config.in_basis(n + m)) continue;
            const double freq = (0.5 * m + n - d.k) / r;
            const cdouble w =
                simpson([&](double b) { return std::polar(1.0, -freq * b); }, 0.0,
                        config.circumference(), panels) /
                config.circumference();
            acc(n + m + nmax, n + nmax) += outer * w;
        }
    }
    return OperatorMatrix(config, std::move(acc));
}

}  // namespace circlephase
