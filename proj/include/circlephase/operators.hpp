#ifndef CIRCLEPHASE_OPERATORS_HPP
#define CIRCLEPHASE_OPERATORS_HPP

#include "circlephase/operator_matrix.hpp"
#include "circlephase/state.hpp"

namespace circlephase {

/// Label of a phase-space displacement: position shift alpha (length) and
/// momentum index shift k (physical increment k/r, independent of the flux).
struct PhaseDisplacement {
    double alpha = 0.0;
    int k = 0;
};

/// Displacement operator on the momentum basis,
///   D(alpha,k)|p_N> = exp(-i alpha k/(2r)) exp(-i alpha p_N) |p_{N+k}>,
/// returned in banded form (offset k). |k| > 2*n_max would be identically
/// zero on the truncated basis and is rejected.
OperatorMatrix displacement_matrix(const CircleConfig& config,
                                   const PhaseDisplacement& d);

struct DisplacedState {
    MomentumState state;
    /// Probability mass shifted past the truncation edge and lost. Unitarity
    /// holds up to exactly this amount; callers decide whether to warn.
    double dropped_mass = 0.0;
};

/// Applies D(alpha,k) directly to the coefficient vector in O(D).
DisplacedState apply_displacement(const MomentumState& state,
                                  const PhaseDisplacement& d);

struct DisplacementComposition {
    PhaseDisplacement combined;
    cdouble phase;
};

/// D(a1,k1) D(a2,k2) = phase * D(a1+a2, k1+k2) with
/// phase = exp(i (k1*a2 - k2*a1)/(2r)). Exact away from truncation edges.
DisplacementComposition compose_displacements(const PhaseDisplacement& d1,
                                              const PhaseDisplacement& d2,
                                              const CircleConfig& config);

/// Parity about the flux-shifted momentum origin: U0 = sum |p_{-N}><p_N|,
/// an exact antidiagonal permutation with U0 = U0^dagger and U0^2 = 1.
OperatorMatrix parity_matrix(const CircleConfig& config);

/// Displaced parity U(alpha,k) = D(alpha,k) U0 D(alpha,k)^dagger, built
/// generatively from the three factors. Its action works out to
/// U(alpha,k)|p_N> = exp(i 2 alpha (N-k)/r) |p_{2k-N}>, periodic in alpha
/// with period pi*r.
OperatorMatrix displaced_parity_matrix(const CircleConfig& config,
                                       const PhaseDisplacement& d);

/// Truncated dyad |x><y|: element (M,N) = exp(-i p_M x) exp(i p_N y).
OperatorMatrix rank_one_position(const CircleConfig& config, double x, double y);

enum class ParityFilter { All, Even, Odd };

/// Sum of D(alpha,K) over every representable K (|K| <= 2*n_max), optionally
/// restricted to even or odd K. The all-K sum equals the dyad
/// |alpha/2><-alpha/2| exactly on the truncated basis; the even/odd halves
/// are the half-sum / half-difference of that dyad and its pi*r-translate.
OperatorMatrix sum_displacements_over_k(const CircleConfig& config, double alpha,
                                        ParityFilter filter);

struct AlphaInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// (1/2pi r) * integral over [lo,hi] of D(alpha,k), optionally times the flux
/// factor exp(i alpha sigma / r), by composite Simpson on the band. Verified
/// closed forms on [0, 2pi r]: with flux factor, element
/// (N+k, N) = delta_sinc(k/2 + N); without it, delta_sinc(k/2 + N + sigma).
/// On [2pi r, 4pi r] even k is unchanged and odd k flips sign.
OperatorMatrix integrate_displacement_over_alpha(const CircleConfig& config,
                                                 int k, bool flux_factor,
                                                 const AlphaInterval& interval,
                                                 int panels);

/// (1/2pi r) * integral_0^{2pi r} U(alpha,k) d alpha, composite Simpson.
/// Equals the projector |p_k><p_k|; summed over all |k| <= n_max the
/// projectors resolve the identity.
OperatorMatrix integrate_displaced_parity_over_alpha(const CircleConfig& config,
                                                     int k, int panels);

/// Sum of U(alpha,k) over |k| <= n_max; equals
/// (|alpha><alpha| + |alpha+pi r><alpha+pi r|)/2 on the truncated basis.
OperatorMatrix sum_displaced_parity_over_k(const CircleConfig& config,
                                           double alpha);

/// Two-dimensional Fourier transform taking displacements to displaced
/// parities:
///   sum_{M even} (1/2pi r) * integral_0^{2pi r} D(beta,M) exp(i beta sigma/r)
///                 exp(i (k*beta - M*alpha)/r) d beta  =  U(alpha,k).
OperatorMatrix fourier_relation_d_to_u(const CircleConfig& config,
                                       const PhaseDisplacement& d, int panels);

}  // namespace circlephase

#endif
