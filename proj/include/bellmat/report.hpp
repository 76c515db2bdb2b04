#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bellmat/linalg.hpp"

namespace bellmat {

/// Outcome of one identity check. `passed` holds iff the residual operator
/// (or scalar set) is empty; `witness` then carries the first offending
/// entry. Timing is kept out of serialized reports unless explicitly asked
/// for, so report bytes stay deterministic.
struct VerificationReport {
    std::string check;
    std::string params;
    bool passed = false;
    std::optional<EntryWitness> witness;
    std::string detail;
    double millis = 0.0;

    static VerificationReport pass(std::string check, std::string params = "",
                                   std::string detail = "") {
        return {std::move(check), std::move(params), true, std::nullopt,
                std::move(detail), 0.0};
    }
    static VerificationReport fail(std::string check,
                                   std::optional<EntryWitness> w,
                                   std::string params = "",
                                   std::string detail = "") {
        return {std::move(check), std::move(params), false, std::move(w),
                std::move(detail), 0.0};
    }

    std::string str() const;
};

/// Report from comparing two operators; passes iff identical.
VerificationReport compare_operators(std::string check, const Operator& lhs,
                                     const Operator& rhs,
                                     std::string params = "");

/// True iff every report in the list passed.
bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace bellmat
