#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bellmat/halfint.hpp"

namespace bellmat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Identifier of a formal phase symbol u_l = exp(i*phi_l/2). Only positive
/// half-odd labels l are stored (twice-value, odd > 0); u_{-l} is represented
/// as u_l^{-1}, which bakes phi_{-l} = -phi_l into the ring itself.
using SymbolId = int;

/// Angle values phi_l for numeric evaluation, keyed by SymbolId.
using PhaseAssignment = std::map<SymbolId, double>;

/// Laurent monomial in the phase symbols: symbol -> exponent, no zeros stored.
struct UMonomial {
    std::map<SymbolId, int> exp;

    UMonomial() = default;
    UMonomial(std::initializer_list<std::pair<const SymbolId, int>> e);

    bool is_empty() const { return exp.empty(); }
    UMonomial operator*(const UMonomial& o) const;
    UMonomial inverse() const;
    std::string str() const;

    friend auto operator<=>(const UMonomial&, const UMonomial&) = default;
};

/// Canonical term key: zeta8 power reduced to 0..3 (the sign from
/// zeta8^4 = -1 lives in the rational coefficient) plus a phase monomial.
struct TermKey {
    int zeta8 = 0;
    UMonomial mono;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Exact scalar of the matrix-entry field: a finite Q-linear combination of
/// zeta8^r * (Laurent monomial in the u_l), with zeta8 = exp(i*pi/4). The
/// basis {1, zeta8, zeta8^2, zeta8^3} is a Q-basis of Q(zeta8), so equality
/// of canonical term maps is exact equality of values. Values are immutable
/// after construction and safe to share across threads.
class PhaseScalar {
public:
    PhaseScalar() = default; // zero

    static PhaseScalar zero() { return {}; }
    static PhaseScalar one() { return integer(1); }
    static PhaseScalar integer(long n);
    static PhaseScalar rational(const Rational& r);
    static PhaseScalar rational(long num, long den);
    /// zeta8^power for any integer power (canonicalized).
    static PhaseScalar zeta8(int power);
    /// i = zeta8^2.
    static PhaseScalar i_unit() { return zeta8(2); }
    /// sqrt(2) = zeta8 - zeta8^3.
    static PhaseScalar sqrt2();
    /// 1/sqrt(2) = (zeta8 - zeta8^3)/2.
    static PhaseScalar inv_sqrt2();
    /// u_l^exponent; l is the positive half-odd label (HalfInt), exponent any int.
    static PhaseScalar phase_symbol(HalfInt l, int exponent = 1);
    static PhaseScalar term(const Rational& coeff, int zeta8_power, UMonomial mono);

    /// Builds a canonical scalar from an arbitrary raw term list.
    static PhaseScalar
    from_terms(const std::vector<std::tuple<Rational, int, UMonomial>>& raw);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Exactly one stored term (a unit times a rational).
    bool is_single_term() const { return terms_.size() == 1; }
    /// True when the scalar lies in Q (no zeta8, no symbols).
    std::optional<Rational> as_rational() const;

    const std::map<TermKey, Rational>& terms() const { return terms_; }
    std::set<SymbolId> symbols() const;

    PhaseScalar operator+(const PhaseScalar& o) const;
    PhaseScalar operator-(const PhaseScalar& o) const;
    PhaseScalar operator-() const;
    PhaseScalar operator*(const PhaseScalar& o) const;
    PhaseScalar& operator+=(const PhaseScalar& o);
    PhaseScalar& operator-=(const PhaseScalar& o);
    PhaseScalar& operator*=(const PhaseScalar& o);

    bool operator==(const PhaseScalar&) const = default;

    /// Complex conjugation: zeta8 -> zeta8^-1, u_l -> u_l^-1.
    PhaseScalar conj() const;

    /// Integer power; negative exponents require a single-term scalar.
    PhaseScalar pow(long e) const;

    /// Multiplicative inverse of a single-term scalar.
    /// Throws std::domain_error otherwise.
    PhaseScalar inverse() const;

    /// Replaces u_l by the given value (single-term invertible scalar).
    PhaseScalar substitute(SymbolId l, const PhaseScalar& value) const;

    /// Galois map zeta8 -> zeta8^k, k odd; requires a symbol-free scalar.
    PhaseScalar galois(int k) const;

    /// Field inverse in Q(zeta8) for symbol-free scalars (via the norm).
    /// Throws std::domain_error on zero or when symbols are present.
    PhaseScalar field_inverse() const;

    /// Substitutes u_l = exp(i*phi_l/2), zeta8 = exp(i*pi/4).
    /// Throws std::invalid_argument naming any unassigned symbol.
    std::complex<double> evaluate(const PhaseAssignment& phi = {}) const;

    std::string str() const;

    /// Hidden friend so a Rational on the left only participates in overload
    /// resolution when a PhaseScalar is actually involved.
    friend PhaseScalar operator*(const Rational& r, const PhaseScalar& s) {
        return PhaseScalar::rational(r) * s;
    }

private:
    void insert_raw(const Rational& coeff, int zeta8_power, UMonomial mono);

    std::map<TermKey, Rational> terms_;
};

} // namespace bellmat
