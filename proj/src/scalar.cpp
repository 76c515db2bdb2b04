#include "bellmat/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bellmat {

UMonomial::UMonomial(std::initializer_list<std::pair<const SymbolId, int>> e)
    : exp(e) {
    std::erase_if(exp, [](const auto& kv) { return kv.second == 0; });
}

UMonomial UMonomial::operator*(const UMonomial& o) const {
    UMonomial out = *this;
    for (const auto& [id, e] : o.exp) {
        int& slot = out.exp[id];
        slot += e;
        if (slot == 0) out.exp.erase(id);
    }
    return out;
}

UMonomial UMonomial::inverse() const {
    UMonomial out;
    for (const auto& [id, e] : exp) out.exp.emplace(id, -e);
    return out;
}

std::string UMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : exp) {
        if (!first) os << "*";
        first = false;
        os << "u(" << HalfInt::from_twice(id).str() << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

void PhaseScalar::insert_raw(const Rational& coeff, int zeta8_power,
                             UMonomial mono) {
    if (coeff == 0) return;
    // zeta8^8 = 1 and zeta8^4 = -1: fold the power into 0..3 and a sign.
    int r = zeta8_power % 8;
    if (r < 0) r += 8;
    Rational c = coeff;
    if (r >= 4) {
        r -= 4;
        c = -c;
    }
    TermKey key{r, std::move(mono)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PhaseScalar PhaseScalar::integer(long n) { return rational(Rational(n)); }

PhaseScalar PhaseScalar::rational(const Rational& r) {
    PhaseScalar s;
    s.insert_raw(r, 0, {});
    return s;
}

PhaseScalar PhaseScalar::rational(long num, long den) {
    return rational(Rational(num, den));
}

PhaseScalar PhaseScalar::zeta8(int power) {
    PhaseScalar s;
    s.insert_raw(1, power, {});
    return s;
}

PhaseScalar PhaseScalar::sqrt2() {
    PhaseScalar s;
    s.insert_raw(1, 1, {});
    s.insert_raw(-1, 3, {});
    return s;
}

PhaseScalar PhaseScalar::inv_sqrt2() {
    PhaseScalar s;
    s.insert_raw(Rational(1, 2), 1, {});
    s.insert_raw(Rational(-1, 2), 3, {});
    return s;
}

PhaseScalar PhaseScalar::phase_symbol(HalfInt l, int exponent) {
    if (l.twice <= 0 || l.is_integer())
        throw std::invalid_argument(
            "phase_symbol label must be a positive half-odd integer, got " +
            l.str());
    PhaseScalar s;
    UMonomial m;
    if (exponent != 0) m.exp.emplace(l.twice, exponent);
    s.insert_raw(1, 0, std::move(m));
    return s;
}

PhaseScalar PhaseScalar::term(const Rational& coeff, int zeta8_power,
                              UMonomial mono) {
    PhaseScalar s;
    s.insert_raw(coeff, zeta8_power, std::move(mono));
    return s;
}

PhaseScalar PhaseScalar::from_terms(
    const std::vector<std::tuple<Rational, int, UMonomial>>& raw) {
    PhaseScalar s;
    for (const auto& [c, r, m] : raw) s.insert_raw(c, r, m);
    return s;
}

bool PhaseScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == TermKey{} &&
           terms_.begin()->second == 1;
}

std::optional<Rational> PhaseScalar::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == TermKey{})
        return terms_.begin()->second;
    return std::nullopt;
}

std::set<SymbolId> PhaseScalar::symbols() const {
    std::set<SymbolId> out;
    for (const auto& [key, c] : terms_)
        for (const auto& [id, e] : key.mono.exp) out.insert(id);
    return out;
}

PhaseScalar PhaseScalar::operator+(const PhaseScalar& o) const {
    PhaseScalar out = *this;
    out += o;
    return out;
}

PhaseScalar PhaseScalar::operator-(const PhaseScalar& o) const {
    PhaseScalar out = *this;
    out -= o;
    return out;
}

PhaseScalar PhaseScalar::operator-() const {
    PhaseScalar out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

PhaseScalar& PhaseScalar::operator+=(const PhaseScalar& o) {
    for (const auto& [key, c] : o.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PhaseScalar& PhaseScalar::operator-=(const PhaseScalar& o) {
    return *this += -o;
}

PhaseScalar PhaseScalar::operator*(const PhaseScalar& o) const {
    PhaseScalar out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.insert_raw(ca * cb, ka.zeta8 + kb.zeta8, ka.mono * kb.mono);
    return out;
}

PhaseScalar& PhaseScalar::operator*=(const PhaseScalar& o) {
    *this = *this * o;
    return *this;
}

PhaseScalar PhaseScalar::conj() const {
    PhaseScalar out;
    for (const auto& [key, c] : terms_)
        out.insert_raw(c, -key.zeta8, key.mono.inverse());
    return out;
}

PhaseScalar PhaseScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PhaseScalar out = one();
    PhaseScalar base = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) out *= base;
        base *= base;
    }
    return out;
}

PhaseScalar PhaseScalar::inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error(
            "inverse() needs a single-term scalar; use field_inverse() "
            "for sums");
    const auto& [key, c] = *terms_.begin();
    PhaseScalar out;
    out.insert_raw(Rational(1) / c, -key.zeta8, key.mono.inverse());
    return out;
}

PhaseScalar PhaseScalar::substitute(SymbolId l, const PhaseScalar& value) const {
    PhaseScalar out;
    for (const auto& [key, c] : terms_) {
        auto it = key.mono.exp.find(l);
        if (it == key.mono.exp.end()) {
            out.insert_raw(c, key.zeta8, key.mono);
            continue;
        }
        UMonomial rest = key.mono;
        rest.exp.erase(l);
        out += term(c, key.zeta8, std::move(rest)) * value.pow(it->second);
    }
    return out;
}

PhaseScalar PhaseScalar::galois(int k) const {
    if (k % 2 == 0) throw std::invalid_argument("galois exponent must be odd");
    PhaseScalar out;
    for (const auto& [key, c] : terms_) {
        if (!key.mono.is_empty())
            throw std::domain_error("galois() requires a symbol-free scalar");
        out.insert_raw(c, key.zeta8 * k, {});
    }
    return out;
}

PhaseScalar PhaseScalar::field_inverse() const {
    if (is_zero()) throw std::domain_error("field_inverse of zero");
    // In Q(zeta8) the product of all Galois conjugates is the rational norm,
    // so 1/a = sigma3(a)*sigma5(a)*sigma7(a) / N(a).
    PhaseScalar cof = galois(3) * galois(5) * galois(7);
    auto norm = (*this * cof).as_rational();
    if (!norm || *norm == 0)
        throw std::domain_error("field_inverse: norm is not a nonzero rational");
    return (Rational(1) / *norm) * cof;
}

std::complex<double> PhaseScalar::evaluate(const PhaseAssignment& phi) const {
    constexpr double pi = std::numbers::pi;
    std::complex<double> acc = 0.0;
    for (const auto& [key, c] : terms_) {
        double arg = pi / 4.0 * key.zeta8;
        for (const auto& [id, e] : key.mono.exp) {
            auto it = phi.find(id);
            if (it == phi.end())
                throw std::invalid_argument(
                    "evaluate: no angle assigned to symbol u(" +
                    HalfInt::from_twice(id).str() + ")");
            arg += 0.5 * it->second * e;
        }
        acc += c.convert_to<double>() * std::polar(1.0, arg);
    }
    return acc;
}

std::string PhaseScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream unit;
        if (key.zeta8 == 1)
            unit << "z8";
        else if (key.zeta8 != 0)
            unit << "z8^" << key.zeta8;
        std::string mono = key.mono.str();
        if (!mono.empty()) {
            if (unit.tellp() > 0) unit << "*";
            unit << mono;
        }
        std::string u = unit.str();
        if (u.empty()) {
            os << c;
        } else if (c == 1) {
            os << u;
        } else if (c == -1) {
            os << "-" << u;
        } else {
            std::ostringstream cs;
            cs << c;
            std::string cstr = cs.str();
            if (cstr.find('/') != std::string::npos || cstr.front() == '-')
                os << "(" << cstr << ")*" << u;
            else
                os << cstr << "*" << u;
        }
    }
    return os.str();
}

} // namespace bellmat
