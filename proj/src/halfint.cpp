#include "bellmat/halfint.hpp"

#include <charconv>

namespace bellmat {

std::optional<HalfInt> HalfInt::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    int num = 0;
    std::string_view num_part = s.substr(0, slash);
    auto [p, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    if (ec != std::errc{} || p != num_part.data() + num_part.size()) return std::nullopt;
    if (slash == std::string_view::npos) return HalfInt::whole(num);
    std::string_view den_part = s.substr(slash + 1);
    int den = 0;
    auto [p2, ec2] = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
    if (ec2 != std::errc{} || p2 != den_part.data() + den_part.size()) return std::nullopt;
    if (den == 2) return HalfInt(num);
    if (den == 1) return HalfInt::whole(num);
    return std::nullopt;
}

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

} // namespace bellmat
