#ifndef CIRCLEPHASE_QUADRATURE_HPP
#define CIRCLEPHASE_QUADRATURE_HPP

#include <stdexcept>
#include <type_traits>

namespace circlephase {

/// Composite Simpson rule on [lo, hi] with an even number of panels.
/// Works for any value type supporting + and scaling by double (double,
/// std::complex<double>, Eigen matrices). Deterministic left-to-right
/// accumulation; the accumulator is materialized as the plain value type so
/// expression-template results cannot dangle.
template <class F>
auto simpson(F&& f, double lo, double hi, int panels) {
    if (panels < 2 || panels % 2 != 0)
        throw std::invalid_argument("simpson: panel count must be even and >= 2");
    using R = std::decay_t<decltype(f(lo))>;
    const double h = (hi - lo) / panels;
    R acc = f(lo);
    acc += f(hi);
    for (int j = 1; j < panels; ++j) {
        const double w = (j % 2 == 1) ? 4.0 : 2.0;
        R term = f(lo + j * h);
        acc += term * w;
    }
    R result = acc * (h / 3.0);
    return result;
}

}  // namespace circlephase

#endif
