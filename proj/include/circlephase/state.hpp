#ifndef CIRCLEPHASE_STATE_HPP
#define CIRCLEPHASE_STATE_HPP

#include <Eigen/Dense>
#include <functional>

#include "circlephase/config.hpp"

namespace circlephase {

/// Pure state in the truncated momentum basis: complex coefficients
/// c_N = <p_N|R> for N in [-n_max, n_max]. The position wavefunction it
/// represents is R(x) = sum_N c_N exp(i p_N x), quasi-periodic with factor
/// exp(i 2 pi sigma) per winding.
class MomentumState {
public:
    explicit MomentumState(CircleConfig config);
    MomentumState(CircleConfig config, Eigen::VectorXcd coeffs);

    static MomentumState basis_vector(const CircleConfig& config, int n);

    const CircleConfig& config() const noexcept { return config_; }
    const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
    Eigen::VectorXcd& coeffs() noexcept { return coeffs_; }

    cdouble coeff(int n) const { return coeffs_(config_.index_of(n)); }
    void set_coeff(int n, cdouble value) { coeffs_(config_.index_of(n)) = value; }

    double norm_squared() const noexcept { return coeffs_.squaredNorm(); }

private:
    CircleConfig config_;
    Eigen::VectorXcd coeffs_;
};

/// Rescales to sum |c_N|^2 = 1 without touching the phase. Throws on a zero
/// vector.
MomentumState normalize(const MomentumState& state);

/// <a|b> = sum_N conj(a_N) b_N. Configs must be compatible.
cdouble inner_product(const MomentumState& a, const MomentumState& b);

/// R(x) = sum_N c_N exp(i p_N x).
cdouble position_wavefunction(const MomentumState& state, double x);

/// Momentum coefficient of a position-domain function:
/// (1/2pi r) * integral_0^{2pi r} exp(-i p_n x) f(x) dx, composite Simpson.
cdouble project_to_momentum(const CircleConfig& config,
                            const std::function<cdouble(double)>& f, int n,
                            int panels);

}  // namespace circlephase

#endif
