#ifndef CIRCLEPHASE_DENSITY_HPP
#define CIRCLEPHASE_DENSITY_HPP

#include <Eigen/Dense>

#include "circlephase/config.hpp"
#include "circlephase/state.hpp"

namespace circlephase {

/// Density operator on the truncated momentum basis,
/// rho_{MN} = <p_M|rho|p_N>. Construction enforces Hermiticity (1e-12
/// elementwise) and unit trace (1e-12).
class DensityOperator {
public:
    DensityOperator(CircleConfig config, Eigen::MatrixXcd mat);

    const CircleConfig& config() const noexcept { return config_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return mat_; }

    cdouble element(int m, int n) const {
        return mat_(config_.index_of(m), config_.index_of(n));
    }

private:
    CircleConfig config_;
    Eigen::MatrixXcd mat_;
};

/// rho = |R><R| for a normalized state (norm deviation beyond 1e-9 is an
/// error): rho_{MN} = c_M conj(c_N).
DensityOperator density_from_pure(const MomentumState& state);

}  // namespace circlephase

#endif
