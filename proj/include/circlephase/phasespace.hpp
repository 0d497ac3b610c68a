#ifndef CIRCLEPHASE_PHASESPACE_HPP
#define CIRCLEPHASE_PHASESPACE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "circlephase/density.hpp"
#include "circlephase/operators.hpp"

namespace circlephase {

/// Point of the circle-times-integers phase space: position x and momentum
/// index n (physical momentum (n + sigma)/r).
struct WignerPoint {
    double x = 0.0;
    int n = 0;
};

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

/// Rectangular grid of Wigner (real) or Weyl (complex) samples with explicit
/// axis metadata and a parameter provenance record. Values are stored
/// outer-major: index = i_outer * inner_size + i_inner.
class PhaseGrid {
public:
    PhaseGrid(CircleConfig config, GridAxis outer, GridAxis inner,
              bool complex_values);

    const CircleConfig& config() const noexcept { return config_; }
    const GridAxis& outer() const noexcept { return outer_; }
    const GridAxis& inner() const noexcept { return inner_; }
    bool complex_values() const noexcept { return complex_values_; }

    std::size_t outer_size() const noexcept { return outer_.values.size(); }
    std::size_t inner_size() const noexcept { return inner_.values.size(); }

    cdouble at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, cdouble value);

    const std::vector<cdouble>& values() const noexcept { return values_; }

    /// Parameters that produced the grid (no timestamps, nothing volatile).
    std::map<std::string, double>& provenance() noexcept { return provenance_; }
    const std::map<std::string, double>& provenance() const noexcept {
        return provenance_;
    }

private:
    CircleConfig config_;
    GridAxis outer_;
    GridAxis inner_;
    bool complex_values_;
    std::vector<cdouble> values_;
    std::map<std::string, double> provenance_;
};

/// Weyl function W~(alpha,K) = Tr[rho D(alpha,K)], evaluated as the exact
/// truncated momentum sum. |k| > 2*n_max is degenerate: the value is 0 and
/// *degenerate (when given) is set.
cdouble weyl_function(const DensityOperator& rho, double alpha, int k,
                      bool* degenerate = nullptr);

/// Wigner function W(x, p_n) = Tr[rho U(x,n)] via the momentum sum
/// sum_K <p_{n+K}|rho|p_{n-K}> exp(2 i x K / r). The imaginary part must
/// vanish by Hermiticity; it is checked (|Im| > 1e-8 throws) and discarded.
double wigner_function(const DensityOperator& rho, double x, int n);

/// Grid of Wigner values, x outer and n inner, both in the given order.
PhaseGrid wigner_grid(const DensityOperator& rho, const std::vector<double>& xs,
                      int n_lo, int n_hi);

/// Grid of complex Weyl values, alpha outer and k inner.
PhaseGrid weyl_grid(const DensityOperator& rho, const std::vector<double>& alphas,
                    int k_lo, int k_hi);

/// (1/2pi r) * integral over one period of W(x, p_n) dx = <p_n|rho|p_n>,
/// composite Simpson.
double wigner_marginal_momentum(const DensityOperator& rho, int n, int panels);

/// sum_n W(x, p_n) over the truncated basis
/// = (<x|rho|x> + <x + pi r|rho|x + pi r>)/2.
double wigner_marginal_position(const DensityOperator& rho, double x);

/// Phase-space overlap formula for Tr(rho1 rho2): Simpson in x of the product
/// of Wigner rows summed over momentum midpoints. The midpoint sum runs over
/// integer and half-odd-integer midpoints (label j = M + M' in
/// [-2n_max, 2n_max]); the integer midpoints alone see only even-index-
/// difference coherences and do not reproduce the trace.
double trace_product(const DensityOperator& rho1, const DensityOperator& rho2,
                     int panels);

/// Reconstructs W(x, p_n) from the Weyl function through the inverse
/// two-dimensional Fourier transform (even-K sum plus alpha integral).
double wigner_from_weyl(const DensityOperator& rho, double x, int n, int panels);

struct SigmaShiftResult {
    /// W at flux sigma+1, index n.
    double wigner_raised_flux = 0.0;
    /// W at flux sigma, index n+1. Equal to the above for the same physical
    /// state.
    double wigner_raised_index = 0.0;
    /// max |W~_sigma - W~_{sigma+1}| over the sampled (alpha, K) probes.
    double weyl_max_deviation = 0.0;
};

/// Builds the same physical state at flux sigma and sigma+1 via `make_state`
/// and evaluates the flux-relabelling covariance
/// W_{sigma+1}(x, p_n) = W_sigma(x, p_{n+1}) plus the Weyl invariance
/// W~_sigma = W~_{sigma+1} at a fixed probe set.
SigmaShiftResult sigma_shift_check(
    const std::function<MomentumState(double)>& make_state, double base_sigma,
    double x, int n);

}  // namespace circlephase

#endif
