#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "bellmat/scalar.hpp"

using namespace bellmat;

namespace {

constexpr double kTol = 1e-12;

bool close(std::complex<double> a, std::complex<double> b, double tol = kTol) {
    return std::abs(a - b) <= tol;
}

// Deterministic sample of scalars exercising every constructor.
std::vector<PhaseScalar> sample_scalars() {
    HalfInt h(1), t(3);
    return {
        PhaseScalar::zero(),
        PhaseScalar::one(),
        PhaseScalar::integer(-3),
        PhaseScalar::rational(5, 7),
        PhaseScalar::zeta8(1),
        PhaseScalar::zeta8(5),
        PhaseScalar::i_unit(),
        PhaseScalar::sqrt2(),
        PhaseScalar::inv_sqrt2(),
        PhaseScalar::phase_symbol(h),
        PhaseScalar::phase_symbol(h, -2),
        PhaseScalar::phase_symbol(t) * PhaseScalar::zeta8(3),
        PhaseScalar::sqrt2() + PhaseScalar::phase_symbol(h) * PhaseScalar::phase_symbol(t, -1),
        PhaseScalar::rational(-1, 2) * (PhaseScalar::one() + PhaseScalar::i_unit()),
    };
}

PhaseAssignment angles() { return {{1, 0.37}, {3, -1.91}}; }

} // namespace

TEST_CASE("zeta8 canonicalization") {
    // zeta8^4 = -1 folds into the coefficient.
    CHECK(PhaseScalar::zeta8(4) == -PhaseScalar::one());
    CHECK(PhaseScalar::zeta8(8) == PhaseScalar::one());
    CHECK(PhaseScalar::zeta8(-1) == -PhaseScalar::zeta8(3));
    CHECK(PhaseScalar::zeta8(1) * PhaseScalar::zeta8(3) == -PhaseScalar::one());
    CHECK(PhaseScalar::i_unit() * PhaseScalar::i_unit() == -PhaseScalar::one());
}

TEST_CASE("sqrt2 identities") {
    auto s = PhaseScalar::sqrt2();
    auto inv = PhaseScalar::inv_sqrt2();
    CHECK(s * s == PhaseScalar::integer(2));
    CHECK(inv * inv == PhaseScalar::rational(1, 2));
    CHECK(s * inv == PhaseScalar::one());
    // sqrt2 is real: equal to its own conjugate.
    CHECK(s.conj() == s);
}

TEST_CASE("conjugation") {
    CHECK(PhaseScalar::zeta8(1).conj() == -PhaseScalar::zeta8(3));
    CHECK(PhaseScalar::i_unit().conj() == -PhaseScalar::i_unit());
    HalfInt h(1);
    auto u = PhaseScalar::phase_symbol(h);
    CHECK(u.conj() == PhaseScalar::phase_symbol(h, -1));
    CHECK(u * u.conj() == PhaseScalar::one());
    for (const auto& a : sample_scalars()) {
        CHECK(a.conj().conj() == a);
        // |a|^2 = a * conj(a) must be conjugation-invariant.
        auto norm = a * a.conj();
        CHECK(norm.conj() == norm);
    }
}

TEST_CASE("q factors multiply to one across negation") {
    // q_{lm} * q_{-l,-m} = 1 with u_{-l} stored as u_l^{-1}.
    HalfInt l(1), m(3);
    auto q = PhaseScalar::phase_symbol(l) * PhaseScalar::phase_symbol(m);
    auto qneg = PhaseScalar::phase_symbol(l, -1) * PhaseScalar::phase_symbol(m, -1);
    CHECK(q * qneg == PhaseScalar::one());
}

TEST_CASE("ring axioms on sample") {
    auto xs = sample_scalars();
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b == -(b - a));
        }
    for (size_t i = 0; i + 2 < xs.size(); i += 3) {
        const auto &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    auto phi = angles();
    auto xs = sample_scalars();
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(close((a + b).evaluate(phi), a.evaluate(phi) + b.evaluate(phi)));
            CHECK(close((a * b).evaluate(phi), a.evaluate(phi) * b.evaluate(phi)));
        }
    for (const auto& a : xs)
        CHECK(close(a.conj().evaluate(phi), std::conj(a.evaluate(phi))));
}

TEST_CASE("evaluate numeric anchors") {
    constexpr double pi = std::numbers::pi;
    CHECK(close(PhaseScalar::zeta8(1).evaluate(), std::polar(1.0, pi / 4)));
    CHECK(close(PhaseScalar::sqrt2().evaluate(), {std::sqrt(2.0), 0.0}));
    CHECK(close(PhaseScalar::inv_sqrt2().evaluate(), {1.0 / std::sqrt(2.0), 0.0}));
    PhaseAssignment phi{{1, 0.8}};
    // u_{1/2} = exp(i*phi/2)
    CHECK(close(PhaseScalar::phase_symbol(HalfInt(1)).evaluate(phi),
                std::polar(1.0, 0.4)));
    CHECK_THROWS_AS(PhaseScalar::phase_symbol(HalfInt(1)).evaluate({}),
                    std::invalid_argument);
}

TEST_CASE("single-term inverse") {
    auto a = PhaseScalar::rational(3, 4) * PhaseScalar::zeta8(3) *
             PhaseScalar::phase_symbol(HalfInt(1), 2);
    CHECK(a * a.inverse() == PhaseScalar::one());
    CHECK_THROWS_AS(PhaseScalar::sqrt2().inverse(), std::domain_error);
    CHECK_THROWS_AS(PhaseScalar::zero().inverse(), std::domain_error);
}

TEST_CASE("pow") {
    auto u = PhaseScalar::phase_symbol(HalfInt(1));
    CHECK(u.pow(0) == PhaseScalar::one());
    CHECK(u.pow(3) == PhaseScalar::phase_symbol(HalfInt(1), 3));
    CHECK(u.pow(-2) == PhaseScalar::phase_symbol(HalfInt(1), -2));
    CHECK(PhaseScalar::zeta8(1).pow(8) == PhaseScalar::one());
    auto s = PhaseScalar::sqrt2();
    CHECK(s.pow(4) == PhaseScalar::integer(4));
}

TEST_CASE("substitute replaces a symbol by a unit") {
    HalfInt l(1), m(3);
    auto a = PhaseScalar::phase_symbol(l, 2) * PhaseScalar::phase_symbol(m, -1) +
             PhaseScalar::sqrt2();
    // u_{1/2} -> zeta8 turns u^2 into i.
    auto b = a.substitute(l.twice, PhaseScalar::zeta8(1));
    auto expect = PhaseScalar::i_unit() * PhaseScalar::phase_symbol(m, -1) +
                  PhaseScalar::sqrt2();
    CHECK(b == expect);
    CHECK(b.symbols() == std::set<SymbolId>{m.twice});
}

TEST_CASE("galois and field inverse") {
    auto a = PhaseScalar::one() + PhaseScalar::zeta8(1); // nonzero, non-unit
    auto inv = a.field_inverse();
    CHECK(a * inv == PhaseScalar::one());
    // Galois maps are ring maps fixing Q.
    auto b = PhaseScalar::rational(2, 3) - PhaseScalar::zeta8(2);
    for (int k : {3, 5, 7}) {
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
    CHECK(a.galois(7) == a.conj());
    CHECK(PhaseScalar::sqrt2().field_inverse() == PhaseScalar::inv_sqrt2());
    CHECK_THROWS_AS(PhaseScalar::zero().field_inverse(), std::domain_error);
    CHECK_THROWS_AS(PhaseScalar::phase_symbol(HalfInt(1)).field_inverse(),
                    std::domain_error);
}

TEST_CASE("field inverse on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    int tried = 0;
    while (tried < 25) {
        PhaseScalar a;
        for (int r = 0; r < 4; ++r)
            a += PhaseScalar::rational(coef(rng), 1 + std::abs(coef(rng))) *
                 PhaseScalar::zeta8(r);
        if (a.is_zero()) continue;
        ++tried;
        CHECK(a * a.field_inverse() == PhaseScalar::one());
    }
}

TEST_CASE("as_rational and predicates") {
    CHECK(PhaseScalar::zero().as_rational() == Rational(0));
    CHECK(PhaseScalar::rational(5, 10).as_rational() == Rational(1, 2));
    CHECK(!PhaseScalar::zeta8(1).as_rational());
    CHECK(PhaseScalar::one().is_one());
    CHECK((PhaseScalar::sqrt2() * PhaseScalar::inv_sqrt2()).is_one());
}

TEST_CASE("str smoke") {
    CHECK(PhaseScalar::zero().str() == "0");
    CHECK(PhaseScalar::one().str() == "1");
    auto s = PhaseScalar::inv_sqrt2();
    CHECK(s.str().find("z8") != std::string::npos);
    auto u = PhaseScalar::phase_symbol(HalfInt(3), -2);
    CHECK(u.str().find("u(3/2)^-2") != std::string::npos);
}

TEST_CASE("halfint parse and print") {
    CHECK(HalfInt::parse("3/2")->twice == 3);
    CHECK(HalfInt::parse("-1/2")->twice == -1);
    CHECK(HalfInt::parse("2")->twice == 4);
    CHECK(!HalfInt::parse("3/4"));
    CHECK(!HalfInt::parse("x"));
    CHECK(HalfInt(3).str() == "3/2");
    CHECK(HalfInt(-4).str() == "-2");
    CHECK(HalfInt(1).epsilon() == 1);
    CHECK(HalfInt(-1).epsilon() == -1);
}
