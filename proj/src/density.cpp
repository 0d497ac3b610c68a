#include "circlephase/density.hpp"

#include <cmath>
#include <stdexcept>

namespace circlephase {

namespace {
constexpr double kHermiticityTol = 1e-12;
constexpr double kTraceTol = 1e-12;
}  // namespace

DensityOperator::DensityOperator(CircleConfig config, Eigen::MatrixXcd mat)
    : config_(config), mat_(std::move(mat)) {
    const int d = config_.dim();
    if (mat_.rows() != d || mat_.cols() != d)
        throw std::invalid_argument("DensityOperator: matrix has wrong dimensions");
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTol)
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    if (std::abs(mat_.trace() - cdouble(1.0, 0.0)) > kTraceTol)
        throw std::invalid_argument("DensityOperator: trace must equal 1");
}

DensityOperator density_from_pure(const MomentumState& state) {
    const double n2 = state.norm_squared();
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("density_from_pure: state is not normalized");
    Eigen::MatrixXcd mat = state.coeffs() * state.coeffs().adjoint();
    // Renormalize the rounding residue so the unit-trace invariant is exact.
    mat /= mat.trace().real();
    return DensityOperator(state.config(), std::move(mat));
}

}  // namespace circlephase
