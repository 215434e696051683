#ifndef DPB_CHECK_REPORT_HPP
#define DPB_CHECK_REPORT_HPP

#include <optional>
#include <string>

namespace dpb {

struct Counterexample {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

// Outcome of one identity sweep. passed == !counterexample.has_value().
struct CheckReport {
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::string scope;

    static CheckReport pass(std::string scope_) {
        CheckReport r;
        r.scope = std::move(scope_);
        return r;
    }

    static CheckReport fail(std::string scope_, Counterexample ce) {
        CheckReport r;
        r.passed = false;
        r.counterexample = std::move(ce);
        r.scope = std::move(scope_);
        return r;
    }
};

} // namespace dpb

#endif
