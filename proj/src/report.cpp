#include "bellmat/report.hpp"

#include <sstream>

namespace bellmat {

std::string VerificationReport::str() const {
    std::ostringstream os;
    os << (passed ? "PASS" : "FAIL") << "  " << check;
    if (!params.empty()) os << "  [" << params << "]";
    if (!detail.empty()) os << "  " << detail;
    if (witness) os << "  witness: " << witness->str();
    return os.str();
}

VerificationReport compare_operators(std::string check, const Operator& lhs,
                                     const Operator& rhs, std::string params) {
    auto w = Operator::first_difference(lhs, rhs);
    if (!w) return VerificationReport::pass(std::move(check), std::move(params));
    return VerificationReport::fail(std::move(check), *w, std::move(params));
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

} // namespace bellmat
