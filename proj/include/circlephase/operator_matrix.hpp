#ifndef CIRCLEPHASE_OPERATOR_MATRIX_HPP
#define CIRCLEPHASE_OPERATOR_MATRIX_HPP

#include <Eigen/Dense>
#include <optional>

#include "circlephase/config.hpp"

namespace circlephase {

/// Single-diagonal representation: element (N + offset, N) = phases[N + n_max]
/// for every N with both N and N + offset in the basis, all other elements
/// zero. Entries of `phases` whose N falls off the band are ignored (kept 0).
struct BandedForm {
    int offset = 0;
    Eigen::VectorXcd phases;
};

/// General complex operator on the truncated momentum basis. Displacements
/// keep an exact banded form next to the dense matrix; densifying the band
/// reproduces the dense matrix bit for bit because the dense matrix is built
/// from the band.
class OperatorMatrix {
public:
    OperatorMatrix(CircleConfig config, Eigen::MatrixXcd mat);

    static OperatorMatrix from_band(CircleConfig config, BandedForm band);
    static OperatorMatrix zero(const CircleConfig& config);
    static OperatorMatrix identity(const CircleConfig& config);

    const CircleConfig& config() const noexcept { return config_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return mat_; }
    const std::optional<BandedForm>& band() const noexcept { return band_; }

    cdouble element(int m, int n) const {
        return mat_(config_.index_of(m), config_.index_of(n));
    }

private:
    CircleConfig config_;
    Eigen::MatrixXcd mat_;
    std::optional<BandedForm> band_;
};

/// Matrix of the position operator on the truncated basis:
/// (M,N) = (1/2pi r) * integral_0^{2pi r} x exp(i x (N-M)/r) dx,
/// in closed form pi*r on the diagonal and i*r/(M-N) off it.
OperatorMatrix position_operator_matrix(const CircleConfig& config);

/// Diagonal matrix of momentum eigenvalues p_N.
OperatorMatrix momentum_operator_matrix(const CircleConfig& config);

}  // namespace circlephase

#endif
