#include <doctest.h>

#include <cmath>
#include <complex>

#include "circlephase/operators.hpp"
#include "circlephase/specialfn.hpp"
#include "oracles.hpp"

using namespace circlephase;

namespace {

Eigen::MatrixXcd delta_band(const CircleConfig& cfg, int k, double shift) {
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
    for (int n = -cfg.n_max(); n <= cfg.n_max(); ++n)
        if (cfg.in_basis(n + k))
            mat(cfg.index_of(n + k), cfg.index_of(n)) =
                delta_sinc(0.5 * k + n + shift);
    return mat;
}

}  // namespace

TEST_CASE("displacement matrix") {
    const CircleConfig cfg(1.0, 0.1, 8);
    SUBCASE("zero displacement is the identity") {
        CHECK(oracles::max_abs(displacement_matrix(cfg, {0.0, 0}).matrix() -
                               Eigen::MatrixXcd::Identity(cfg.dim(),
                                                          cfg.dim())) == 0.0);
    }
    SUBCASE("pure position displacement is diagonal with momentum phases") {
        const double alpha = 0.7;
        const OperatorMatrix d = displacement_matrix(cfg, {alpha, 0});
        for (int n = -8; n <= 8; ++n)
            CHECK(std::abs(d.element(n, n) -
                           std::polar(1.0, -alpha * cfg.momentum(n))) < 1e-15);
    }
    SUBCASE("winding quasi-periodicity in alpha") {
        const int k = 1;
        const double alpha = 0.4;
        const Eigen::MatrixXcd lhs =
            displacement_matrix(cfg, {alpha + cfg.circumference(), k}).matrix();
        const cdouble factor =
            -std::polar(1.0, -2.0 * pi * cfg.sigma());  // (-1)^K, K odd
        const Eigen::MatrixXcd rhs =
            factor * displacement_matrix(cfg, {alpha, k}).matrix();
        CHECK(oracles::max_abs(lhs - rhs) < 1e-12);
    }
    SUBCASE("out-of-range momentum shift is rejected") {
        CHECK_THROWS_AS(displacement_matrix(cfg, {0.0, 17}),
                        std::invalid_argument);
        CHECK_NOTHROW(displacement_matrix(cfg, {0.0, 16}));
    }
    SUBCASE("band and dense forms agree") {
        const OperatorMatrix d = displacement_matrix(cfg, {0.3, -2});
        REQUIRE(d.band().has_value());
        CHECK(d.band()->offset == -2);
        const OperatorMatrix redone = OperatorMatrix::from_band(cfg, *d.band());
        CHECK(oracles::max_abs(d.matrix() - redone.matrix()) == 0.0);
    }
}

TEST_CASE("apply_displacement") {
    const CircleConfig cfg(1.0, 0.0, 32);
    const MomentumState zak = zak_state(cfg, {cdouble(0, 0)});
    SUBCASE("k = 0 only rotates phases") {
        const DisplacedState out = apply_displacement(zak, {1.3, 0});
        CHECK(out.dropped_mass == 0.0);
        for (int n = -32; n <= 32; ++n)
            CHECK(std::abs(std::abs(out.state.coeff(n)) -
                           std::abs(zak.coeff(n))) < 1e-15);
    }
    SUBCASE("norm accounting under truncation") {
        const DisplacedState out = apply_displacement(zak, {0.0, 5});
        CHECK(std::abs(out.state.norm_squared() - (1.0 - out.dropped_mass)) <
              1e-12);
        CHECK(out.dropped_mass < 1e-6);  // Gaussian tail
    }
    SUBCASE("momentum kick moves the coefficient peak") {
        const DisplacedState out = apply_displacement(zak, {0.0, 1});
        int peak = -32;
        double best = 0.0;
        for (int n = -32; n <= 32; ++n)
            if (std::abs(out.state.coeff(n)) > best) {
                best = std::abs(out.state.coeff(n));
                peak = n;
            }
        CHECK(peak == 1);
    }
    SUBCASE("matches the banded matrix action") {
        const PhaseDisplacement d{0.9, 2};
        const DisplacedState out = apply_displacement(zak, d);
        const Eigen::VectorXcd via_matrix =
            displacement_matrix(cfg, d).matrix() * zak.coeffs();
        CHECK((out.state.coeffs() - via_matrix).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("compose_displacements") {
    const CircleConfig cfg(1.0, 0.1, 8);
    SUBCASE("inverse composition gives the identity with unit phase") {
        const auto comp =
            compose_displacements({0.7, 3}, {-0.7, -3}, cfg);
        CHECK(comp.combined.alpha == 0.0);
        CHECK(comp.combined.k == 0);
        CHECK(std::abs(comp.phase - cdouble(1.0, 0.0)) < 1e-15);
        // and the adjoint really is D(-alpha,-k)
        const Eigen::MatrixXcd dag =
            displacement_matrix(cfg, {0.7, 3}).matrix().adjoint();
        const Eigen::MatrixXcd inv =
            displacement_matrix(cfg, {-0.7, -3}).matrix();
        CHECK(oracles::max_abs(dag - inv) < 1e-15);
    }
    SUBCASE("pure position displacements commute additively") {
        const auto comp = compose_displacements({0.4, 0}, {1.1, 0}, cfg);
        CHECK(comp.combined.alpha == doctest::Approx(1.5));
        CHECK(comp.phase == cdouble(1.0, 0.0));
    }
    SUBCASE("worked phase and matrix identity on interior columns") {
        const PhaseDisplacement d1{0.7, 1}, d2{0.3, 2};
        const auto comp = compose_displacements(d1, d2, cfg);
        CHECK(std::abs(comp.phase -
                       cdouble(0.8525245220595057, -0.5226872289306592)) <
              1e-15);  // exp(-0.55 i)
        const Eigen::MatrixXcd lhs = displacement_matrix(cfg, d1).matrix() *
                                     displacement_matrix(cfg, d2).matrix();
        const Eigen::MatrixXcd rhs =
            comp.phase * displacement_matrix(cfg, comp.combined).matrix();
        double dev = 0.0;
        for (int n = -8; n <= 8; ++n) {
            if (!cfg.in_basis(n + d2.k) || !cfg.in_basis(n + d1.k + d2.k))
                continue;
            dev = std::max(dev, (lhs.col(cfg.index_of(n)) -
                                 rhs.col(cfg.index_of(n)))
                                    .cwiseAbs()
                                    .maxCoeff());
        }
        CHECK(dev < 1e-12);
    }
}

TEST_CASE("parity matrix") {
    const CircleConfig cfg(1.0, 0.1, 6);
    const Eigen::MatrixXcd u0 = parity_matrix(cfg).matrix();
    CHECK(oracles::max_abs(u0 * u0 - Eigen::MatrixXcd::Identity(
                                         cfg.dim(), cfg.dim())) == 0.0);
    CHECK(oracles::max_abs(u0 - u0.adjoint()) == 0.0);
    Eigen::VectorXcd e3 = Eigen::VectorXcd::Zero(cfg.dim());
    e3(cfg.index_of(3)) = 1.0;
    const Eigen::VectorXcd flipped = u0 * e3;
    CHECK(flipped(cfg.index_of(-3)) == cdouble(1.0, 0.0));
    CHECK(flipped.cwiseAbs().sum() == 1.0);
}

TEST_CASE("displaced parity") {
    const CircleConfig cfg(1.0, 0.1, 8);
    SUBCASE("zero displacement returns the parity operator") {
        CHECK(oracles::max_abs(displaced_parity_matrix(cfg, {0.0, 0}).matrix() -
                               parity_matrix(cfg).matrix()) == 0.0);
    }
    SUBCASE("structured product equals the dense triple product") {
        for (const PhaseDisplacement d :
             {PhaseDisplacement{0.37, 2}, {1.9, -3}, {0.0, 8}}) {
            const Eigen::MatrixXcd dm = displacement_matrix(cfg, d).matrix();
            const Eigen::MatrixXcd dense =
                dm * parity_matrix(cfg).matrix() * dm.adjoint();
            CHECK(oracles::max_abs(displaced_parity_matrix(cfg, d).matrix() -
                                   dense) < 1e-15);
        }
    }
    SUBCASE("periodic in alpha with period pi r") {
        const PhaseDisplacement d{0.61, 1};
        CHECK(oracles::max_abs(
                  displaced_parity_matrix(cfg, {d.alpha + pi, d.k}).matrix() -
                  displaced_parity_matrix(cfg, d).matrix()) < 1e-12);
    }
    SUBCASE("involution on interior indices") {
        const PhaseDisplacement d{0.61, 1};
        const Eigen::MatrixXcd uu =
            displaced_parity_matrix(cfg, d).matrix() *
            displaced_parity_matrix(cfg, d).matrix();
        double dev = 0.0;
        for (int m = -6; m <= 6; ++m)
            for (int n = -6; n <= 6; ++n)
                dev = std::max(dev, std::abs(uu(cfg.index_of(m),
                                                cfg.index_of(n)) -
                                             cdouble(m == n ? 1.0 : 0.0, 0.0)));
        CHECK(dev < 1e-12);
    }
}

TEST_CASE("rank-one position dyad") {
    const CircleConfig cfg(1.0, 0.0, 5);
    SUBCASE("all-ones matrix at the origin without flux") {
        const OperatorMatrix op = rank_one_position(cfg, 0.0, 0.0);
        for (int m = -5; m <= 5; ++m)
            for (int n = -5; n <= 5; ++n)
                CHECK(op.element(m, n) == cdouble(1.0, 0.0));
    }
    SUBCASE("Hermitian exactly when the two points coincide") {
        const CircleConfig fcfg(1.0, 0.3, 5);
        const Eigen::MatrixXcd same = rank_one_position(fcfg, 0.7, 0.7).matrix();
        CHECK(oracles::max_abs(same - same.adjoint()) < 1e-15);
        const Eigen::MatrixXcd diff = rank_one_position(fcfg, 0.7, 0.1).matrix();
        CHECK(oracles::max_abs(diff - diff.adjoint()) > 1e-2);
    }
    SUBCASE("trace is the geometric phase sum") {
        const CircleConfig fcfg(1.0, 0.3, 5);
        const double x = 0.9, y = 0.2;
        cdouble expect(0.0, 0.0);
        for (int n = -5; n <= 5; ++n)
            expect += std::polar(1.0, fcfg.momentum(n) * (y - x));
        // geometric series: e^{i sigma d} sin((2n+1)d/2)/sin(d/2), d=(y-x)/r
        const double d = (y - x) / fcfg.radius();
        const cdouble closed = std::polar(1.0, fcfg.sigma() * d) *
                               (std::sin(5.5 * d) / std::sin(0.5 * d));
        CHECK(std::abs(rank_one_position(fcfg, x, y).matrix().trace() -
                       expect) < 1e-13);
        CHECK(std::abs(expect - closed) < 1e-12);
    }
}

TEST_CASE("displacement sums over k") {
    const CircleConfig cfg(1.0, 0.1, 8);
    const double alpha = 0.7;
    const Eigen::MatrixXcd all =
        sum_displacements_over_k(cfg, alpha, ParityFilter::All).matrix();
    const Eigen::MatrixXcd even =
        sum_displacements_over_k(cfg, alpha, ParityFilter::Even).matrix();
    const Eigen::MatrixXcd odd =
        sum_displacements_over_k(cfg, alpha, ParityFilter::Odd).matrix();
    const Eigen::MatrixXcd dyad =
        rank_one_position(cfg, 0.5 * alpha, -0.5 * alpha).matrix();
    const Eigen::MatrixXcd dyad_shift =
        rank_one_position(cfg, 0.5 * alpha + pi, -0.5 * alpha + pi).matrix();

    CHECK(oracles::max_abs(all - dyad) < 1e-12);
    CHECK(oracles::max_abs(even - 0.5 * (dyad + dyad_shift)) < 1e-12);
    CHECK(oracles::max_abs(odd - 0.5 * (dyad - dyad_shift)) < 1e-12);
    CHECK(oracles::max_abs(even + odd - all) < 1e-13);
}

TEST_CASE("alpha integrals of the displacement") {
    const CircleConfig cfg(1.0, 0.1, 8);
    const double period = cfg.circumference();
    SUBCASE("even k with flux factor collapses to a single dyad") {
        const Eigen::MatrixXcd got =
            integrate_displacement_over_alpha(cfg, 2, true, {0.0, period}, 2048)
                .matrix();
        Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
        want(cfg.index_of(1), cfg.index_of(-1)) = 1.0;
        CHECK(oracles::max_abs(got - want) < 1e-9);
    }
    SUBCASE("odd k over the doubled interval vanishes") {
        const Eigen::MatrixXcd got =
            integrate_displacement_over_alpha(cfg, 1, true, {0.0, 2.0 * period},
                                              2048)
                .matrix();
        CHECK(oracles::max_abs(got) < 1e-9);
    }
    SUBCASE("no flux factor shifts the sinc-delta argument by sigma") {
        const Eigen::MatrixXcd got =
            integrate_displacement_over_alpha(cfg, 1, false, {0.0, period},
                                              16384)
                .matrix();
        CHECK(oracles::max_abs(got - delta_band(cfg, 1, cfg.sigma())) < 1e-9);
    }
    SUBCASE("odd k with flux factor carries sinc-delta weights") {
        const Eigen::MatrixXcd got =
            integrate_displacement_over_alpha(cfg, 1, true, {0.0, period},
                                              16384)
                .matrix();
        CHECK(oracles::max_abs(got - delta_band(cfg, 1, 0.0)) < 1e-9);
    }
    SUBCASE("odd panel counts are rejected") {
        CHECK_THROWS_AS(integrate_displacement_over_alpha(
                            cfg, 1, true, {0.0, period}, 1001),
                        std::invalid_argument);
    }
}

TEST_CASE("alpha integral of the displaced parity") {
    const CircleConfig cfg(1.0, 0.1, 8);
    SUBCASE("projects onto single momentum states, independent of sigma") {
        for (int k : {0, 2}) {
            const Eigen::MatrixXcd got =
                integrate_displaced_parity_over_alpha(cfg, k, 1024).matrix();
            Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
            want(cfg.index_of(k), cfg.index_of(k)) = 1.0;
            CHECK(oracles::max_abs(got - want) < 1e-9);
        }
    }
    SUBCASE("projector integrals resolve the identity") {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
        for (int k = -8; k <= 8; ++k)
            acc += integrate_displaced_parity_over_alpha(cfg, k, 1024).matrix();
        CHECK(oracles::max_abs(acc - Eigen::MatrixXcd::Identity(
                                         cfg.dim(), cfg.dim())) < 1e-9);
    }
    SUBCASE("odd panel counts are rejected") {
        CHECK_THROWS_AS(integrate_displaced_parity_over_alpha(cfg, 0, 7),
                        std::invalid_argument);
    }
}

TEST_CASE("displaced parity summed over k") {
    const CircleConfig cfg(1.0, 0.1, 8);
    const double alpha = 0.4;
    const Eigen::MatrixXcd got =
        sum_displaced_parity_over_k(cfg, alpha).matrix();
    const Eigen::MatrixXcd want =
        0.5 * (rank_one_position(cfg, alpha, alpha).matrix() +
               rank_one_position(cfg, alpha + pi, alpha + pi).matrix());
    double interior_dev = 0.0;
    for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n)
            interior_dev = std::max(
                interior_dev, std::abs(got(cfg.index_of(m), cfg.index_of(n)) -
                                       want(cfg.index_of(m), cfg.index_of(n))));
    CHECK(interior_dev < 1e-10);
    CHECK(oracles::max_abs(got - got.adjoint()) < 1e-12);
    CHECK(oracles::max_abs(sum_displaced_parity_over_k(cfg, alpha + pi).matrix() -
                           got) < 1e-12);
}

TEST_CASE("Fourier relation from displacements to displaced parity") {
    const CircleConfig cfg(1.0, 0.1, 8);
    for (const PhaseDisplacement d :
         {PhaseDisplacement{0.3, 1}, {0.0, 0}, {0.3 + 2.0 * pi, 1}}) {
        const Eigen::MatrixXcd got =
            fourier_relation_d_to_u(cfg, d, 2048).matrix();
        const Eigen::MatrixXcd want = displaced_parity_matrix(cfg, d).matrix();
        CHECK(oracles::max_abs(got - want) < 1e-8);
    }
}
