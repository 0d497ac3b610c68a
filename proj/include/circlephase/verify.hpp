#ifndef CIRCLEPHASE_VERIFY_HPP
#define CIRCLEPHASE_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "circlephase/config.hpp"

namespace circlephase {

struct VerifyOptions {
    double radius = 1.0;
    double sigma = 0.1;
    int n_max = 32;
    int panels = 2048;
    cdouble a{1.0, 0.0};
};

struct IdentityCheck {
    std::string name;
    double tolerance = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

/// Comparison of a closed form as printed against the form derived from the
/// generative definitions, both measured against the same quadrature or
/// dense-product oracle.
struct DiscrepancyFinding {
    std::string name;
    std::string printed_form;
    std::string derived_form;
    double printed_deviation = 0.0;
    double derived_deviation = 0.0;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<IdentityCheck> checks;
    std::vector<DiscrepancyFinding> discrepancies;

    bool all_pass() const;
    double max_deviation() const;
};

/// Runs every closed-form identity of the displacement/parity algebra, the
/// Wigner/Weyl layer and the free dynamics against quadrature and
/// dense-product oracles, plus the discrepancy probes that decide between
/// printed and derived closed-form variants.
VerifyReport run_identity_suite(const VerifyOptions& options);

/// Pass/fail table plus the discrepancy section, plain text.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace circlephase

#endif
