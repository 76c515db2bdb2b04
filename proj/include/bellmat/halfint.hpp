#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace bellmat {

/// Exact half-integer, stored as twice its value so that 3/2 is {3} and -1/2
/// is {-1}. Spin labels and J values throughout the library are HalfInts.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

    /// Parses "3/2", "-1/2", "2", "-3". Only halves and integers.
    static std::optional<HalfInt> parse(std::string_view s);

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool is_half_odd() const { return twice % 2 != 0; }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }

    /// Step function restricted to nonzero labels: +1 for mu > 0, -1 for mu < 0.
    constexpr int epsilon() const { return twice >= 0 ? 1 : -1; }

    double value() const { return twice / 2.0; }

    /// "3/2", "-1/2", "2".
    std::string str() const;

    friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

} // namespace bellmat
