#include <doctest.h>

#include <cmath>
#include <complex>

#include "circlephase/dynamics.hpp"
#include "circlephase/phasespace.hpp"
#include "oracles.hpp"

using namespace circlephase;

TEST_CASE("evolve_free") {
    const CircleConfig cfg(1.0, 0.1, 32);
    const MomentumState zak = zak_state(cfg, {cdouble(1.0, 0.0)});
    SUBCASE("t = 0 is the identity") {
        const MomentumState out = evolve_free(zak, {0.0, +1});
        CHECK((out.coeffs() - zak.coeffs()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("magnitudes are invariant") {
        const MomentumState out = evolve_free(zak, {2.7, +1});
        for (int n = -32; n <= 32; ++n)
            CHECK(std::abs(std::abs(out.coeff(n)) - std::abs(zak.coeff(n))) <
                  1e-15);
    }
    SUBCASE("worked phase at N = 1") {
        const MomentumState e1 = MomentumState::basis_vector(cfg, 1);
        const MomentumState out = evolve_free(e1, {1.0, +1});
        // p_1^2 = 1.21
        CHECK(std::abs(out.coeff(1) -
                       cdouble(0.3530194012193304, 0.9356160015533859)) <
              1e-15);
    }
    SUBCASE("sign convention flips the phase") {
        const MomentumState e1 = MomentumState::basis_vector(cfg, 1);
        const MomentumState fwd = evolve_free(e1, {1.0, +1});
        const MomentumState bwd = evolve_free(e1, {1.0, -1});
        CHECK(std::abs(fwd.coeff(1) - std::conj(bwd.coeff(1))) < 1e-15);
        CHECK_THROWS_AS(evolve_free(e1, {1.0, 0}), std::invalid_argument);
    }
    SUBCASE("norm preservation and composition") {
        for (double t : {0.1, 1.0, 10.0})
            CHECK(std::abs(evolve_free(zak, {t, +1}).norm_squared() - 1.0) <
                  1e-15);
        const MomentumState two =
            evolve_free(evolve_free(zak, {0.3, +1}), {0.9, +1});
        const MomentumState one = evolve_free(zak, {1.2, +1});
        CHECK((two.coeffs() - one.coeffs()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("evolved closed-form coefficients") {
    const CircleConfig cfg(1.0, 0.1, 32);
    const GaussianParams g{cdouble(1.0, 0.0)};
    SUBCASE("t = 0 reduces to the initial state") {
        const MomentumState closed = evolved_zak_coefficients(cfg, g, 0.0);
        const MomentumState zak = zak_state(cfg, g);
        CHECK((closed.coeffs() - zak.coeffs()).cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("agrees with the phase-multiplication route at t = 1") {
        const MomentumState closed = evolved_zak_coefficients(cfg, g, 1.0);
        const MomentumState phased = evolve_free(zak_state(cfg, g), {1.0, +1});
        CHECK((closed.coeffs() - phased.coeffs()).cwiseAbs().maxCoeff() <
              1e-12);
    }
    SUBCASE("evolved grid stays well-formed") {
        const DensityOperator rho =
            density_from_pure(evolved_zak_coefficients(cfg, g, 1.0));
        std::vector<double> xs;
        for (int i = 0; i < 32; ++i) xs.push_back(cfg.circumference() * i / 32.0);
        const PhaseGrid grid = wigner_grid(rho, xs, -5, 5);
        for (std::size_t i = 0; i < grid.outer_size(); ++i)
            for (std::size_t j = 0; j < grid.inner_size(); ++j)
                CHECK(std::isfinite(grid.at(i, j).real()));
    }
}

TEST_CASE("momentum marginal is time-invariant") {
    const CircleConfig cfg(1.0, 0.1, 32);
    const MomentumState zak = zak_state(cfg, {cdouble(1.0, 0.0)});
    const DensityOperator rho0 = density_from_pure(zak);
    const DensityOperator rho1 = density_from_pure(evolve_free(zak, {1.0, +1}));
    for (int n : {-1, 0, 1, 4})
        CHECK(std::abs(wigner_marginal_momentum(rho0, n, 2048) -
                       wigner_marginal_momentum(rho1, n, 2048)) < 1e-8);
}
