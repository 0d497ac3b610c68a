#include "circlephase/operator_matrix.hpp"

#include <stdexcept>

namespace circlephase {

OperatorMatrix::OperatorMatrix(CircleConfig config, Eigen::MatrixXcd mat)
    : config_(config), mat_(std::move(mat)) {
    const int d = config_.dim();
    if (mat_.rows() != d || mat_.cols() != d)
        throw std::invalid_argument("OperatorMatrix: matrix has wrong dimensions");
}

OperatorMatrix OperatorMatrix::from_band(CircleConfig config, BandedForm band) {
    const int d = config.dim();
    if (band.phases.size() != d)
        throw std::invalid_argument("OperatorMatrix: band phase vector has wrong size");
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(d, d);
    const int nmax = config.n_max();
    for (int n = -nmax; n <= nmax; ++n) {
        const int m = n + band.offset;
        if (m >= -nmax && m <= nmax)
            mat(m + nmax, n + nmax) = band.phases(n + nmax);
    }
    OperatorMatrix op(config, std::move(mat));
    op.band_ = std::move(band);
    return op;
}

OperatorMatrix OperatorMatrix::zero(const CircleConfig& config) {
    return OperatorMatrix(config, Eigen::MatrixXcd::Zero(config.dim(), config.dim()));
}

OperatorMatrix OperatorMatrix::identity(const CircleConfig& config) {
    return OperatorMatrix(config,
                          Eigen::MatrixXcd::Identity(config.dim(), config.dim()));
}

OperatorMatrix position_operator_matrix(const CircleConfig& config) {
    const int d = config.dim();
    const double r = config.radius();
    Eigen::MatrixXcd mat(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int m = config.label_of(i);
            const int n = config.label_of(j);
            // (1/2pi r) int_0^{2pi r} x exp(i x (n-m)/r) dx
            mat(i, j) = (m == n) ? cdouble(pi * r, 0.0)
                                 : cdouble(0.0, r / double(m - n));
        }
    }
    return OperatorMatrix(config, std::move(mat));
}

OperatorMatrix momentum_operator_matrix(const CircleConfig& config) {
    const int d = config.dim();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i)
        mat(i, i) = config.momentum(config.label_of(i));
    return OperatorMatrix(config, std::move(mat));
}

}  // namespace circlephase
