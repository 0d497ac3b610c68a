#include "circlephase/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "circlephase/density.hpp"
#include "circlephase/dynamics.hpp"
#include "circlephase/operators.hpp"
#include "circlephase/phasespace.hpp"
#include "circlephase/quadrature.hpp"
#include "circlephase/specialfn.hpp"
#include "circlephase/state.hpp"

namespace circlephase {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// Half-period integrands (odd-k alpha integrals and their sigma-shifted
/// relatives) are not trigonometric polynomials over [0, 2pi r], so composite
/// Simpson is not spectrally exact for them; 32768 panels keep those
/// closed-form checks well below their 1e-9 tolerances up to n_max = 32.
int half_period_panels(int panels) { return std::max(panels, 32768); }

/// Raw complex momentum sum behind the Wigner function, kept separate from
/// the library path so the reality check sees the imaginary part before it
/// is discarded.
cdouble wigner_complex_sum(const DensityOperator& rho, double x, int n) {
    const CircleConfig& cfg = rho.config();
    const int reach = cfg.n_max() - std::abs(n);
    cdouble acc(0.0, 0.0);
    for (int k = -reach; k <= reach; ++k)
        acc += rho.element(n + k, n - k) *
               std::polar(1.0, 2.0 * x * k / cfg.radius());
    return acc;
}

Eigen::MatrixXcd delta_band(const CircleConfig& cfg, int k, double shift,
                            bool conjugate_argument) {
    const int nmax = cfg.n_max();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
    for (int n = -nmax; n <= nmax; ++n) {
        if (!cfg.in_basis(n + k)) continue;
        const double arg = 0.5 * k + n + shift;
        mat(n + k + nmax, n + nmax) =
            delta_sinc(conjugate_argument ? -arg : arg);
    }
    return mat;
}

Eigen::MatrixXcd single_dyad(const CircleConfig& cfg, int row_label,
                             int col_label) {
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
    mat(cfg.index_of(row_label), cfg.index_of(col_label)) = 1.0;
    return mat;
}

struct Suite {
    VerifyReport report;

    void check(std::string name, double tol, double dev) {
        report.checks.push_back(
            IdentityCheck{std::move(name), tol, dev, dev <= tol});
    }
};

void displacement_checks(Suite& s, const CircleConfig& cfg, int panels) {
    const double r = cfg.radius();
    const double sigma = cfg.sigma();
    const double alpha = 0.7;
    const double period = cfg.circumference();
    const int hp = half_period_panels(panels);

    const Eigen::MatrixXcd all =
        sum_displacements_over_k(cfg, alpha, ParityFilter::All).matrix();
    const Eigen::MatrixXcd even =
        sum_displacements_over_k(cfg, alpha, ParityFilter::Even).matrix();
    const Eigen::MatrixXcd odd =
        sum_displacements_over_k(cfg, alpha, ParityFilter::Odd).matrix();
    const Eigen::MatrixXcd dyad =
        rank_one_position(cfg, 0.5 * alpha, -0.5 * alpha).matrix();
    const Eigen::MatrixXcd dyad_shift =
        rank_one_position(cfg, 0.5 * alpha + pi * r, -0.5 * alpha + pi * r)
            .matrix();

    s.check("D summed over K equals the position dyad", 1e-12,
            max_abs(all - dyad));
    s.check("even-K sum is the diametric half-sum", 1e-12,
            max_abs(even - 0.5 * (dyad + dyad_shift)));
    s.check("odd-K sum is the diametric half-difference", 1e-12,
            max_abs(odd - 0.5 * (dyad - dyad_shift)));
    s.check("even and odd sums recombine to the full sum", 1e-13,
            max_abs(even + odd - all));

    // alpha-integrals against their verified closed forms
    const Eigen::MatrixXcd flux_even =
        integrate_displacement_over_alpha(cfg, 2, true, {0.0, period}, panels)
            .matrix();
    s.check("flux integral, even k: single dyad |p_1><p_-1|", 1e-9,
            max_abs(flux_even - single_dyad(cfg, 1, -1)));

    const Eigen::MatrixXcd flux_odd =
        integrate_displacement_over_alpha(cfg, 1, true, {0.0, period}, hp)
            .matrix();
    s.check("flux integral, odd k: sinc-delta band", 1e-9,
            max_abs(flux_odd - delta_band(cfg, 1, 0.0, false)));

    const Eigen::MatrixXcd noflux =
        integrate_displacement_over_alpha(cfg, 1, false, {0.0, period}, hp)
            .matrix();
    s.check("integral without flux factor: sigma-shifted sinc-delta band", 1e-9,
            max_abs(noflux - delta_band(cfg, 1, sigma, false)));

    const Eigen::MatrixXcd shifted_even =
        integrate_displacement_over_alpha(cfg, 2, true, {period, 2.0 * period},
                                          panels)
            .matrix();
    s.check("shifted interval keeps even k", 1e-9,
            max_abs(shifted_even - single_dyad(cfg, 1, -1)));

    const Eigen::MatrixXcd shifted_odd =
        integrate_displacement_over_alpha(cfg, 1, true, {period, 2.0 * period},
                                          hp)
            .matrix();
    s.check("shifted interval negates odd k", 1e-9,
            max_abs(shifted_odd + delta_band(cfg, 1, 0.0, false)));

    const Eigen::MatrixXcd doubled =
        integrate_displacement_over_alpha(cfg, 1, true, {0.0, 2.0 * period},
                                          panels)
            .matrix();
    s.check("odd k vanishes over the doubled interval", 1e-9, max_abs(doubled));

    // full K sum of flux integrals: parity plus the odd sinc-delta bands
    Eigen::MatrixXcd ksum =
        Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
    Eigen::MatrixXcd expected = parity_matrix(cfg).matrix();
    for (int k = -2 * cfg.n_max(); k <= 2 * cfg.n_max(); ++k) {
        ksum += integrate_displacement_over_alpha(cfg, k, true, {0.0, period},
                                                  (k % 2 == 0) ? panels : hp)
                    .matrix();
        if (k % 2 != 0) expected += delta_band(cfg, k, 0.0, false);
    }
    s.check("all-K integral sum: parity plus odd sinc-delta bands", 1e-8,
            max_abs(ksum - expected));

    Eigen::MatrixXcd even_ksum = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
    for (int k = -2 * cfg.n_max(); k <= 2 * cfg.n_max(); k += 2)
        even_ksum +=
            integrate_displacement_over_alpha(cfg, k, true, {0.0, period}, panels)
                .matrix();
    s.check("even-K integral sum reproduces the parity operator", 1e-9,
            max_abs(even_ksum - parity_matrix(cfg).matrix()));

    // unitarity on columns untouched by truncation
    {
        const int k = 3;
        const Eigen::MatrixXcd d = displacement_matrix(cfg, {0.37, k}).matrix();
        const Eigen::MatrixXcd dd = d.adjoint() * d;
        double dev = 0.0;
        for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
            if (!cfg.in_basis(n + k)) continue;
            Eigen::VectorXcd col = dd.col(n + cfg.n_max());
            col(n + cfg.n_max()) -= 1.0;
            dev = std::max(dev, col.cwiseAbs().maxCoeff());
        }
        s.check("displacement is unitary away from the truncation edge", 1e-12,
                dev);
    }

    // quasi-periodicity in alpha for several windings
    {
        const int k = 3;
        const double a0 = 0.41;
        double dev = 0.0;
        for (int w : {1, 2, -1}) {
            const Eigen::MatrixXcd lhs =
                displacement_matrix(cfg, {a0 + period * w, k}).matrix();
            const cdouble factor = ((k * w) % 2 == 0 ? 1.0 : -1.0) *
                                   std::polar(1.0, -2.0 * pi * sigma * w);
            const Eigen::MatrixXcd rhs =
                factor * displacement_matrix(cfg, {a0, k}).matrix();
            dev = std::max(dev, max_abs(lhs - rhs));
        }
        s.check("quasi-periodicity in alpha for windings 1, 2, -1", 1e-12, dev);
    }

    // periodicity of the flux-dressed displacement
    {
        const int k = 3;
        const double a0 = 0.41;
        const cdouble lhs_factor = std::polar(1.0, (a0 + period) * sigma / r);
        const cdouble rhs_factor =
            (k % 2 == 0 ? 1.0 : -1.0) * std::polar(1.0, a0 * sigma / r);
        const Eigen::MatrixXcd lhs =
            lhs_factor * displacement_matrix(cfg, {a0 + period, k}).matrix();
        const Eigen::MatrixXcd rhs =
            rhs_factor * displacement_matrix(cfg, {a0, k}).matrix();
        s.check("flux-dressed displacement has period 2 pi r (odd k negated)",
                1e-12, max_abs(lhs - rhs));
    }

    // composition law on interior columns
    {
        const PhaseDisplacement d1{0.7, 1}, d2{0.3, 2};
        const auto comp = compose_displacements(d1, d2, cfg);
        const Eigen::MatrixXcd lhs = displacement_matrix(cfg, d1).matrix() *
                                     displacement_matrix(cfg, d2).matrix();
        const Eigen::MatrixXcd rhs =
            comp.phase * displacement_matrix(cfg, comp.combined).matrix();
        double dev = 0.0;
        for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
            if (!cfg.in_basis(n + d2.k) || !cfg.in_basis(n + d1.k + d2.k))
                continue;
            dev = std::max(
                dev, (lhs.col(n + cfg.n_max()) - rhs.col(n + cfg.n_max()))
                         .cwiseAbs()
                         .maxCoeff());
        }
        s.check("composition law with derived phase on interior columns", 1e-12,
                dev);
    }
}

void parity_checks(Suite& s, const CircleConfig& cfg, int panels) {
    const double r = cfg.radius();
    const Eigen::MatrixXcd u0 = parity_matrix(cfg).matrix();
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(cfg.dim(), cfg.dim());

    s.check("parity is Hermitian", 0.0, max_abs(u0 - u0.adjoint()));
    s.check("parity squares to the identity", 0.0, max_abs(u0 * u0 - id));

    const PhaseDisplacement d{0.37, 2};
    const Eigen::MatrixXcd u = displaced_parity_matrix(cfg, d).matrix();

    // closed-form action: element (2k-N, N) = exp(i 2 alpha (N-k)/r)
    {
        Eigen::MatrixXcd closed = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
        for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
            const int m = 2 * d.k - n;
            if (!cfg.in_basis(m)) continue;
            closed(m + cfg.n_max(), n + cfg.n_max()) =
                std::polar(1.0, 2.0 * d.alpha * (n - d.k) / r);
        }
        s.check("displaced parity matches its closed-form action", 1e-12,
                max_abs(u - closed));
    }

    s.check("displaced parity has period pi r", 1e-12,
            max_abs(displaced_parity_matrix(cfg, {d.alpha + pi * r, d.k})
                        .matrix() -
                    u));

    {
        const Eigen::MatrixXcd uu = u * u;
        double dev = 0.0;
        const int interior = cfg.n_max() - 2 * std::abs(d.k);
        for (int n = -interior; n <= interior; ++n)
            for (int m = -interior; m <= interior; ++m) {
                const cdouble want = (m == n) ? 1.0 : 0.0;
                dev = std::max(
                    dev, std::abs(uu(m + cfg.n_max(), n + cfg.n_max()) - want));
            }
        s.check("displaced parity is involutive on interior indices", 1e-12,
                dev);
    }

    for (int k : {0, 2}) {
        const Eigen::MatrixXcd proj =
            integrate_displaced_parity_over_alpha(cfg, k, panels).matrix();
        s.check("alpha integral of displaced parity projects onto p_" +
                    std::to_string(k),
                1e-9, max_abs(proj - single_dyad(cfg, k, k)));
    }

    {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
        for (int k = -cfg.n_max(); k <= cfg.n_max(); ++k)
            acc += integrate_displaced_parity_over_alpha(cfg, k, panels).matrix();
        s.check("projector integrals resolve the identity", 1e-9,
                max_abs(acc - id));
    }

    {
        const double alpha = 0.4;
        const Eigen::MatrixXcd lhs =
            sum_displaced_parity_over_k(cfg, alpha).matrix();
        const Eigen::MatrixXcd rhs =
            0.5 * (rank_one_position(cfg, alpha, alpha).matrix() +
                   rank_one_position(cfg, alpha + pi * r, alpha + pi * r)
                       .matrix());
        s.check("displaced-parity sum equals the diametric projector half-sum",
                1e-10, max_abs(lhs - rhs));
        s.check("displaced-parity sum is Hermitian", 1e-12,
                max_abs(lhs - lhs.adjoint()));
        s.check("displaced-parity sum is pi r periodic", 1e-12,
                max_abs(sum_displaced_parity_over_k(cfg, alpha + pi * r)
                            .matrix() -
                        lhs));
    }

    for (const PhaseDisplacement& d2 :
         {PhaseDisplacement{0.0, 0}, PhaseDisplacement{0.3, 1},
          PhaseDisplacement{1.1, -2}}) {
        const Eigen::MatrixXcd rebuilt =
            fourier_relation_d_to_u(cfg, d2, panels).matrix();
        s.check("Fourier relation rebuilds U(" + std::to_string(d2.alpha) +
                    ", " + std::to_string(d2.k) + ")",
                1e-8,
                max_abs(rebuilt - displaced_parity_matrix(cfg, d2).matrix()));
    }
}

void phasespace_checks(Suite& s, const CircleConfig& cfg,
                       const GaussianParams& gauss, int panels) {
    const double r = cfg.radius();
    const double sigma = cfg.sigma();
    const double period = cfg.circumference();
    const int hp = half_period_panels(panels);

    const MomentumState state = zak_state(cfg, gauss);
    const DensityOperator rho = density_from_pure(state);

    s.check("Weyl value at the origin is 1", 1e-12,
            std::abs(weyl_function(rho, 0.0, 0) - 1.0));

    {
        double dev = 0.0;
        for (double alpha : {0.3, 1.7, 4.9})
            for (int k = -3; k <= 3; ++k)
                dev = std::max(dev,
                               std::abs(weyl_function(rho, alpha, k) -
                                        std::conj(weyl_function(rho, -alpha, -k))));
        s.check("Weyl conjugation symmetry", 1e-12, dev);
    }

    {
        double bound = 0.0, qp = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double alpha = period * i / 64.0;
            for (int k = -4; k <= 4; ++k) {
                const cdouble w = weyl_function(rho, alpha, k);
                bound = std::max(bound, std::abs(w) - 1.0);
                const cdouble factor = (k % 2 == 0 ? 1.0 : -1.0) *
                                       std::polar(1.0, -2.0 * pi * sigma);
                qp = std::max(qp, std::abs(weyl_function(rho, alpha + period, k) -
                                           factor * w));
            }
        }
        s.check("Weyl magnitude never exceeds 1", 1e-12, bound);
        s.check("Weyl quasi-periodicity factor (-1)^K exp(-i 2 pi sigma)", 1e-10,
                qp);
    }

    {
        double imax = 0.0, per = 0.0, tr = 0.0;
        for (int i = 0; i < 32; ++i) {
            const double x = period * i / 32.0;
            for (int n = -4; n <= 4; ++n) {
                imax = std::max(imax,
                                std::abs(wigner_complex_sum(rho, x, n).imag()));
                per = std::max(per, std::abs(wigner_function(rho, x + pi * r, n) -
                                             wigner_function(rho, x, n)));
            }
        }
        for (const auto& [x, n] :
             {std::pair{0.3, 0}, {1.1, 1}, {2.0, -2}}) {
            const Eigen::MatrixXcd u =
                displaced_parity_matrix(cfg, {x, n}).matrix();
            tr = std::max(tr, std::abs((rho.matrix() * u).trace().real() -
                                       wigner_function(rho, x, n)));
        }
        s.check("Wigner imaginary residue stays below 1e-10", 1e-10, imax);
        s.check("Wigner is periodic in x with period pi r", 1e-12, per);
        s.check("Wigner equals the displaced-parity trace", 1e-10, tr);
    }

    {
        double dev = 0.0;
        for (double alpha : {0.45, 1.3}) {
            cdouble lhs(0.0, 0.0);
            for (int k = -2 * cfg.n_max(); k <= 2 * cfg.n_max(); ++k)
                lhs += weyl_function(rho, alpha, k);
            const cdouble rhs =
                (rho.matrix() *
                 rank_one_position(cfg, 0.5 * alpha, -0.5 * alpha).matrix())
                    .trace();
            dev = std::max(dev, std::abs(lhs - rhs));
        }
        s.check("Weyl sum over K gives the off-diagonal position element", 1e-9,
                dev);
    }

    {
        // flux-weighted alpha integrals of the Weyl function
        const auto weyl_flux_integral = [&](int k, double lo, double hi,
                                            int pp) {
            return simpson(
                       [&](double a) {
                           return weyl_function(rho, a, k) *
                                  std::polar(1.0, a * sigma / r);
                       },
                       lo, hi, pp) /
                   period;
        };
        const cdouble even = weyl_flux_integral(2, 0.0, period, panels);
        s.check("Weyl flux integral, even K: matrix element <p_-1|rho|p_1>",
                1e-8, std::abs(even - rho.element(-1, 1)));

        cdouble expect(0.0, 0.0);
        for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n)
            if (cfg.in_basis(n + 1))
                expect += delta_sinc(0.5 + n) * rho.element(n, n + 1);
        const cdouble odd = weyl_flux_integral(1, 0.0, period, hp);
        s.check("Weyl flux integral, odd K: sinc-delta weighted coherences",
                1e-8, std::abs(odd - expect));
        const cdouble odd_shift =
            weyl_flux_integral(1, period, 2.0 * period, hp);
        s.check("Weyl flux integral over the next period flips odd K", 1e-8,
                std::abs(odd_shift + expect));
    }

    {
        double dev = 0.0, total = 0.0;
        for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
            const double marg = wigner_marginal_momentum(rho, n, panels);
            total += marg;
            dev = std::max(dev, std::abs(marg - rho.element(n, n).real()));
        }
        s.check("x-integral of Wigner returns the momentum distribution", 1e-8,
                dev);
        s.check("momentum marginals sum to 1", 1e-8, std::abs(total - 1.0));
    }

    {
        double dev = 0.0;
        for (double x : {0.0, 0.5, 1.0}) {
            const double lhs = wigner_marginal_position(rho, x);
            const double rhs =
                0.5 * (std::norm(position_wavefunction(state, x)) +
                       std::norm(position_wavefunction(state, x + pi * r)));
            dev = std::max(dev, std::abs(lhs - rhs));
        }
        s.check("momentum sum of Wigner gives the diametric density half-sum",
                1e-8, dev);

        const double weight =
            simpson([&](double x) { return wigner_marginal_position(rho, x); },
                    0.0, period, panels) /
            period;
        s.check("total phase-space weight is 1", 1e-8, std::abs(weight - 1.0));
    }

    {
        const MomentumState other =
            zak_state(cfg, GaussianParams{gauss.a + cdouble(0.0, 1.0)});
        const DensityOperator rho2 = density_from_pure(other);
        const DensityOperator e1 =
            density_from_pure(MomentumState::basis_vector(cfg, 1));
        const DensityOperator e2 =
            density_from_pure(MomentumState::basis_vector(cfg, 2));
        double dev = 0.0;
        const auto pair_dev = [&](const DensityOperator& a,
                                  const DensityOperator& b) {
            const double want = (a.matrix() * b.matrix()).trace().real();
            return std::abs(trace_product(a, b, panels) - want);
        };
        dev = std::max(dev, pair_dev(rho, rho));
        dev = std::max(dev, pair_dev(rho, rho2));
        dev = std::max(dev, pair_dev(e1, e2));
        s.check("phase-space overlap formula reproduces Tr(rho1 rho2)", 1e-7,
                dev);
    }

    {
        double dev = 0.0;
        for (const auto& [x, n] : {std::pair{0.3, 0},
                                   {1.1, 1},
                                   {2.0, -2},
                                   {0.7, 3},
                                   {4.0, 0}})
            dev = std::max(dev, std::abs(wigner_from_weyl(rho, x, n, panels) -
                                         wigner_function(rho, x, n)));
        s.check("Wigner rebuilt from the Weyl function", 1e-7, dev);
    }

    {
        const auto builder = [&](double flux) {
            return zak_state(CircleConfig(r, flux, cfg.n_max(),
                                          cfg.quad_panels()),
                             gauss);
        };
        const SigmaShiftResult shift = sigma_shift_check(builder, sigma, 0.5, 0);
        s.check("raising sigma by 1 relabels the Wigner momentum index", 1e-8,
                std::abs(shift.wigner_raised_flux - shift.wigner_raised_index));
        s.check("raising sigma by 1 leaves the Weyl function unchanged", 1e-8,
                shift.weyl_max_deviation);
    }

    {
        const double alpha = 0.83;
        const cdouble lhs = weyl_function(rho, alpha, 0);
        const cdouble rhs =
            simpson(
                [&](double x) {
                    return std::conj(position_wavefunction(state, x + alpha)) *
                           position_wavefunction(state, x);
                },
                0.0, period, panels) /
            period;
        s.check("Weyl K=0 row is the position autocorrelation", 1e-8,
                std::abs(lhs - rhs));
    }
}

void dynamics_checks(Suite& s, const CircleConfig& cfg,
                     const GaussianParams& gauss, int panels) {
    const MomentumState initial = zak_state(cfg, gauss);

    {
        const MomentumState via_phase = evolve_free(initial, {1.0, +1});
        const MomentumState closed = evolved_zak_coefficients(cfg, gauss, 1.0);
        s.check("evolution agrees with the closed-form coefficients", 1e-12,
                (via_phase.coeffs() - closed.coeffs()).cwiseAbs().maxCoeff());
    }

    {
        double dev = 0.0;
        for (double t : {0.1, 1.0, 10.0})
            dev = std::max(dev, std::abs(evolve_free(initial, {t, +1})
                                             .norm_squared() -
                                         1.0));
        s.check("evolution preserves the norm", 1e-15, dev);
    }

    {
        const MomentumState two_steps =
            evolve_free(evolve_free(initial, {0.3, +1}), {0.9, +1});
        const MomentumState one_step = evolve_free(initial, {1.2, +1});
        s.check("evolution composes additively in time", 1e-12,
                (two_steps.coeffs() - one_step.coeffs()).cwiseAbs().maxCoeff());
    }

    {
        const DensityOperator rho0 = density_from_pure(initial);
        const DensityOperator rho1 =
            density_from_pure(evolve_free(initial, {1.0, +1}));
        double dev = 0.0;
        for (int n : {0, 1})
            dev = std::max(dev,
                           std::abs(wigner_marginal_momentum(rho0, n, panels) -
                                    wigner_marginal_momentum(rho1, n, panels)));
        s.check("momentum marginal is invariant under free evolution", 1e-8,
                dev);
    }
}

void theta_checks(Suite& s, const CircleConfig& cfg,
                  const GaussianParams& gauss, int panels) {
    const double period = cfg.circumference();
    const MomentumState state = zak_state(cfg, gauss);

    {
        double dev = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double x = period * i / 64.0;
            dev = std::max(dev, std::abs(position_wavefunction(state, x) -
                                         theta_position(cfg, gauss, x)));
        }
        s.check("momentum route matches the Theta closed form", 1e-8, dev);
    }

    {
        double dev = 0.0;
        const int reach = std::min(8, cfg.n_max());
        for (int n = -reach; n <= reach; ++n) {
            const cdouble projected = project_to_momentum(
                cfg, [&](double x) { return theta_position(cfg, gauss, x); }, n,
                panels);
            dev = std::max(dev, std::abs(projected - state.coeff(n)));
        }
        s.check("projection of the closed form returns the coefficients", 1e-8,
                dev);
    }

    {
        const double x = 0.3;
        const cdouble lhs = theta_position(cfg, gauss, x + period);
        const cdouble rhs = theta_position(cfg, gauss, x) *
                            std::polar(1.0, 2.0 * pi * cfg.sigma());
        s.check("closed form is quasi-periodic with the flux factor", 1e-10,
                std::abs(lhs - rhs));
    }
}

void discrepancy_probes(Suite& s, const CircleConfig& cfg,
                        const GaussianParams& gauss, int panels) {
    const double r = cfg.radius();
    const double period = cfg.circumference();
    const int hp = half_period_panels(panels);

    {
        // (a) composition phase: real exponent as printed vs derived i.
        const PhaseDisplacement d1{0.7, 1}, d2{0.3, 2};
        const Eigen::MatrixXcd lhs = displacement_matrix(cfg, d1).matrix() *
                                     displacement_matrix(cfg, d2).matrix();
        const Eigen::MatrixXcd sum =
            displacement_matrix(cfg, {d1.alpha + d2.alpha, d1.k + d2.k})
                .matrix();
        const double exponent =
            (d1.k * d2.alpha - d2.k * d1.alpha) / (2.0 * r);
        const auto interior_dev = [&](const Eigen::MatrixXcd& rhs) {
            double dev = 0.0;
            for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n) {
                if (!cfg.in_basis(n + d2.k) || !cfg.in_basis(n + d1.k + d2.k))
                    continue;
                dev = std::max(
                    dev, (lhs.col(n + cfg.n_max()) - rhs.col(n + cfg.n_max()))
                             .cwiseAbs()
                             .maxCoeff());
            }
            return dev;
        };
        s.report.discrepancies.push_back(DiscrepancyFinding{
            "composition phase",
            "exp((K b - M a)/2r), no imaginary unit",
            "exp(i (K b - M a)/2r)",
            interior_dev(std::exp(exponent) * sum),
            interior_dev(std::polar(1.0, exponent) * sum)});
    }

    {
        // (b) even-K flux integral: printed dyad is transposed.
        const Eigen::MatrixXcd quad =
            integrate_displacement_over_alpha(cfg, 2, true, {0.0, period},
                                              panels)
                .matrix();
        s.report.discrepancies.push_back(DiscrepancyFinding{
            "even-K flux-integral dyad orientation",
            "|p_-M><p_M|  (element (-1, 1) for K = 2)",
            "|p_M><p_-M|  (element (1, -1) for K = 2)",
            max_abs(quad - single_dyad(cfg, -1, 1)),
            max_abs(quad - single_dyad(cfg, 1, -1))});
    }

    {
        // (c) displaced-parity flux factor exponent.
        const PhaseDisplacement d{0.37, 2};
        const Eigen::MatrixXcd u = displaced_parity_matrix(cfg, d).matrix();
        const Eigen::MatrixXcd base =
            displacement_matrix(cfg, {2.0 * d.alpha, 2 * d.k}).matrix() *
            parity_matrix(cfg).matrix();
        const double phase = d.alpha * cfg.sigma() / r;
        s.report.discrepancies.push_back(DiscrepancyFinding{
            "displaced-parity flux factor",
            "exp(i a sigma/r) D(2a,2K) U0",
            "exp(i 2 a sigma/r) D(2a,2K) U0",
            max_abs(u - std::polar(1.0, phase) * base),
            max_abs(u - std::polar(1.0, 2.0 * phase) * base)});
    }

    {
        // (d) odd-K sinc-delta weight argument.
        const Eigen::MatrixXcd quad =
            integrate_displacement_over_alpha(cfg, 1, true, {0.0, period}, hp)
                .matrix();
        s.report.discrepancies.push_back(DiscrepancyFinding{
            "odd-K sinc-delta weight argument",
            "Delta(-K/2 - N)",
            "Delta(+K/2 + N)",
            max_abs(quad - delta_band(cfg, 1, 0.0, true)),
            max_abs(quad - delta_band(cfg, 1, 0.0, false))});
    }

    {
        // (e) overlap formula: integer midpoints only vs completed lattice.
        const DensityOperator rho1 = density_from_pure(zak_state(cfg, gauss));
        const DensityOperator rho2 = density_from_pure(
            zak_state(cfg, GaussianParams{gauss.a + cdouble(0.0, 1.0)}));
        const double want = (rho1.matrix() * rho2.matrix()).trace().real();
        double integer_only = 0.0;
        for (int m = -cfg.n_max(); m <= cfg.n_max(); ++m)
            for (int mp = -cfg.n_max(); mp <= cfg.n_max(); ++mp)
                if ((m - mp) % 2 == 0)
                    integer_only +=
                        (rho1.element(m, mp) * rho2.element(mp, m)).real();
        s.report.discrepancies.push_back(DiscrepancyFinding{
            "overlap formula momentum midpoints",
            "integer midpoints only",
            "integer plus half-odd midpoints",
            std::abs(integer_only - want),
            std::abs(trace_product(rho1, rho2, panels) - want)});
    }

    {
        // (f) Gaussian transform constant at complex A.
        const GaussianParams g{cdouble(1.0, 1.0)};
        const double p = 0.7;
        const cdouble ft = simpson(
            [&](double x) {
                return gaussian_position(g, x) * std::polar(1.0, -p * x);
            },
            -12.0, 12.0, 4096);
        const cdouble core =
            std::sqrt(2.0) * std::pow(pi, 0.25) *
            std::exp(cdouble(-0.5 * p * p, 0.0) -
                     cdouble(0.0, std::sqrt(2.0)) * g.a * p);
        const cdouble printed = core * std::exp(g.a * g.a_im());
        const cdouble derived = core * std::exp(cdouble(0.0, 1.0) * g.a * g.a_im());
        s.report.discrepancies.push_back(DiscrepancyFinding{
            "Gaussian transform exponent constant",
            "+A A_I", "+i A A_I", std::abs(printed - ft),
            std::abs(derived - ft)});
    }
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double VerifyReport::max_deviation() const {
    double dev = 0.0;
    for (const auto& c : checks) dev = std::max(dev, c.deviation);
    return dev;
}

VerifyReport run_identity_suite(const VerifyOptions& options) {
    const CircleConfig cfg(options.radius, options.sigma, options.n_max,
                           options.panels);
    const GaussianParams gauss{options.a};
    Suite suite;
    suite.report.options = options;

    displacement_checks(suite, cfg, options.panels);
    parity_checks(suite, cfg, options.panels);
    phasespace_checks(suite, cfg, gauss, options.panels);
    dynamics_checks(suite, cfg, gauss, options.panels);
    theta_checks(suite, cfg, gauss, options.panels);
    discrepancy_probes(suite, cfg, gauss, options.panels);
    return suite.report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "identity suite: r=%g sigma=%g n_max=%d panels=%d A=%g%+gi\n",
                  report.options.radius, report.options.sigma,
                  report.options.n_max, report.options.panels,
                  report.options.a.real(), report.options.a.imag());
    out << line;
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof line, "  [%s] %-62s dev %9.3e  tol %9.3e\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.deviation,
                      c.tolerance);
        out << line;
    }
    out << "closed-form discrepancies (printed vs derived, against the same "
           "oracle):\n";
    for (const auto& d : report.discrepancies) {
        const bool derived_wins = d.derived_deviation < d.printed_deviation;
        out << "  " << d.name << "\n";
        std::snprintf(line, sizeof line, "      printed: %-38s dev %9.3e%s\n",
                      d.printed_form.c_str(), d.printed_deviation,
                      derived_wins ? "" : "   <- matches oracle");
        out << line;
        std::snprintf(line, sizeof line, "      derived: %-38s dev %9.3e%s\n",
                      d.derived_form.c_str(), d.derived_deviation,
                      derived_wins ? "   <- matches oracle" : "");
        out << line;
    }
    std::size_t failed = 0;
    for (const auto& c : report.checks)
        if (!c.pass) ++failed;
    if (failed == 0)
        out << "result: ALL PASS (" << report.checks.size() << " checks)\n";
    else
        out << "result: " << failed << " of " << report.checks.size()
            << " checks FAILED\n";
}

}  // namespace circlephase
