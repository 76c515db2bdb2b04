#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellmat/bell.hpp"

using namespace bellmat;

namespace {

const PhaseScalar kOne = PhaseScalar::one();
const PhaseScalar kI = PhaseScalar::i_unit();

// The known 4x4 Bell matrix, frozen entry-for-entry.
Operator known_b4() {
    Operator b(4, 4);
    auto is = PhaseScalar::inv_sqrt2();
    b.set(0, 0, is);
    b.set(0, 3, is);
    b.set(1, 1, is);
    b.set(1, 2, is);
    b.set(2, 1, -is);
    b.set(2, 2, is);
    b.set(3, 0, -is);
    b.set(3, 3, is);
    return b;
}

// The known 8x8 Bell matrix: identity/sqrt2 plus signed anti-diagonal.
Operator known_b8() {
    Operator b(8, 8);
    auto is = PhaseScalar::inv_sqrt2();
    for (long r = 0; r < 8; ++r) {
        b.set(r, r, is);
        b.set(r, 7 - r, r < 4 ? is : -is);
    }
    return b;
}

} // namespace

TEST_CASE("plain Bell matrices reproduce the known 4x4 and 8x8 forms") {
    CHECK(build_B_plain(2) == known_b4());
    CHECK(build_B_plain(3) == known_b8());
}

TEST_CASE("plain M equals the Pauli tensor construction") {
    for (int n = 2; n <= 6; ++n) CHECK(build_M_plain(n) == build_M_pauli(n));
}

TEST_CASE("label map") {
    HalfInt up(1), dn(-1);
    CHECK(label_map({up, up}).k == 1);
    CHECK(label_map({up, dn}).k == 2);
    CHECK(label_map({dn, up}).k == 3);
    CHECK(label_map({dn, dn}).k == 4);
    auto r = label_map({dn, dn, dn});
    CHECK(r.k == 8);
    CHECK(r.mu == HalfInt(-7));
    // negating all labels mirrors k and negates mu
    for (long k = 1; k <= 16; ++k) {
        auto word = label_map_inverse(k, 4);
        CHECK(label_map(word).k == k);
        std::vector<HalfInt> neg;
        for (auto m : word) neg.push_back(-m);
        CHECK(label_map(neg).k == 16 - k + 1);
        CHECK(label_map(neg).mu == -label_map(word).mu);
    }
}

TEST_CASE("q-table reproduces the displayed half-spin values") {
    auto t = QTable::symbolic(HalfInt(1)); // J = 1/2
    HalfInt h(1);
    auto u = PhaseScalar::phase_symbol(h);
    CHECK(t.q(h, h) == u * u);
    CHECK(t.q(h, -h) == kOne);
    CHECK(t.q(-h, h) == kOne);
    CHECK(t.q(-h, -h) == (u * u).inverse());
}

TEST_CASE("q-table reproduces the displayed spin-3/2 values") {
    auto t = QTable::symbolic(HalfInt(3)); // J = 3/2, phases phi_{3/2}, phi_{1/2}
    HalfInt a(3), b(1);
    auto u1 = PhaseScalar::phase_symbol(a); // e^{i phi_1 / 2}
    auto u2 = PhaseScalar::phase_symbol(b);
    CHECK(t.q(a, a) == u1 * u1);
    CHECK(t.q(a, b) == u1 * u2);
    CHECK(t.q(a, -b) == u1 * u2.inverse());
    CHECK(t.q(a, -a) == kOne);
    CHECK(t.q(b, a) == u1 * u2);
    CHECK(t.q(b, b) == u2 * u2);
    CHECK(t.q(b, -b) == kOne);
    CHECK(t.q(b, -a) == u2 * u1.inverse());
}

TEST_CASE("q constraints pass for symbolic tables") {
    for (int tj : {1, 3, 5}) {
        auto rep = check_q_constraints(QTable::symbolic(HalfInt(tj)));
        CHECK(rep.passed);
    }
    auto rep = check_q_constraints(QTable::zeta8_powers(HalfInt(3), {3, 5}));
    CHECK(rep.passed);
}

TEST_CASE("deformed M and B invariants") {
    for (int tj : {1, 3}) {
        auto q = QTable::symbolic(HalfInt(tj));
        auto m = build_M_jj(q);
        long dim = m.rows();
        CHECK(dim == (tj + 1) * (tj + 1));
        CHECK(m * m == -Operator::identity(dim));
        CHECK(m.dagger() == -m);
        auto b = build_B_jj(q);
        CHECK(b * b.dagger() == Operator::identity(dim));
        CHECK(PhaseScalar::inv_sqrt2() * (Operator::identity(dim) + m) == b);
        // every row and column holds exactly one nonzero of M
        CHECK(m.nnz() == dim);
    }
}

TEST_CASE("deformed 4x4 matrix matches the displayed single-q form") {
    auto t = QTable::symbolic(HalfInt(1));
    auto b = build_B_jj(t);
    auto q = PhaseScalar::phase_symbol(HalfInt(1), 2);
    auto is = PhaseScalar::inv_sqrt2();
    Operator expect(4, 4);
    expect.set(0, 0, is);
    expect.set(0, 3, is * q);
    expect.set(1, 1, is);
    expect.set(1, 2, is);
    expect.set(2, 1, -is);
    expect.set(2, 2, is);
    expect.set(3, 0, -is * q.inverse());
    expect.set(3, 3, is);
    CHECK(b == expect);
    // all phases zero reduces to the plain matrix
    CHECK(build_B_jj(QTable::trivial(HalfInt(1))) == build_B_plain(2));
    CHECK(build_B_jj(QTable::trivial(HalfInt(3))) == build_B_plain(4));
}

TEST_CASE("mixed-type request is rejected") {
    auto q = QTable::symbolic(HalfInt(1));
    CHECK_THROWS_AS(BellFamily::generalized(HalfInt(1), HalfInt(3), q),
                    UnsupportedKindError);
    CHECK_NOTHROW(BellFamily::generalized(HalfInt(1), HalfInt(1), q));
}

TEST_CASE("epsilon variant flips the bottom-half rows") {
    auto b = build_B_plain(2);
    auto v = build_epsilon_variant(b);
    CHECK(v.at(0, 0) == b.at(0, 0));
    CHECK(v.at(1, 2) == b.at(1, 2));
    CHECK(v.at(2, 1) == -b.at(2, 1));
    CHECK(v.at(3, 0) == -b.at(3, 0));
    CHECK(!(v == b));
}

TEST_CASE("GHZ states: explicit low-N columns") {
    auto two = ghz_generate(2);
    auto is = PhaseScalar::inv_sqrt2();
    StateVector bell1(4);
    bell1.set(0, is);
    bell1.set(3, -is);
    CHECK(two[0] == bell1);

    auto three = ghz_generate(3);
    StateVector g4(8);
    g4.set(3, is);
    g4.set(4, -is);
    CHECK(three[3] == g4);
}

TEST_CASE("GHZ states: structure, orthonormality, maximal entanglement") {
    for (int n = 2; n <= 4; ++n) {
        auto states = ghz_generate(n);
        long dim = 1L << n;
        REQUIRE(static_cast<long>(states.size()) == dim);
        auto is = PhaseScalar::inv_sqrt2();
        for (long k = 0; k < dim; ++k) {
            // (|Phi_k> -+ |Phi_mirror>)/sqrt2 with - for the top half
            StateVector expect(dim);
            expect.set(k, is);
            expect.add(dim - 1 - k, k < dim / 2 ? -is : is);
            CHECK(states[k] == expect);
            for (long l = 0; l < dim; ++l) {
                auto ip = inner(states[k], states[l]);
                if (k == l)
                    CHECK(ip == kOne);
                else
                    CHECK(ip.is_zero());
            }
        }
        auto half_id = Operator::identity(2).scaled(PhaseScalar::rational(1, 2));
        for (const auto& s : states)
            for (int site = 0; site < n; ++site)
                CHECK(reduced_density(s, 2, n, site) == half_id);
    }
}

TEST_CASE("family cache consistency") {
    auto f = BellFamily::plain(3);
    CHECK(f.B == build_B_plain(3));
    CHECK(f.dim() == 8);
    CHECK_THROWS_AS(f.local_dim(), UnsupportedKindError);
    auto g = BellFamily::jj(QTable::symbolic(HalfInt(3)));
    CHECK(g.local_dim() == 4);
    CHECK(g.dim() == 16);
    CHECK(BellFamily::plain(2).local_dim() == 2);
}

TEST_CASE("i sits where the encoding says") {
    // sanity anchor: i = zeta8^2 and the eigenvalue units
    CHECK(kI * kI == -kOne);
    CHECK(PhaseScalar::zeta8(1) * PhaseScalar::zeta8(-1) == kOne);
}
