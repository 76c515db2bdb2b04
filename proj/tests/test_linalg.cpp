#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bellmat/linalg.hpp"

using namespace bellmat;

namespace {

Operator sigma_x() {
    Operator s(2, 2);
    s.set(0, 1, PhaseScalar::one());
    s.set(1, 0, PhaseScalar::one());
    return s;
}

Operator i_sigma_y() {
    Operator s(2, 2);
    s.set(0, 1, PhaseScalar::one());
    s.set(1, 0, -PhaseScalar::one());
    return s;
}

Operator random_op(long rows, long cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> zp(0, 3);
    Operator out(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
            if (coef(rng) > 0)
                out.set(r, c,
                        PhaseScalar::rational(coef(rng), 1 + std::abs(coef(rng))) *
                            PhaseScalar::zeta8(zp(rng)));
    return out;
}

} // namespace

TEST_CASE("index space label maps") {
    auto sp = IndexSpace::spin(HalfInt(3)); // J = 3/2, dim 4
    CHECK(sp.local_dim() == 4);
    CHECK(sp.index_of(HalfInt(3)) == 0);
    CHECK(sp.index_of(HalfInt(-3)) == 3);
    CHECK(sp.label_of(1) == HalfInt(1));
    CHECK(sp.mirror(0) == 3);
    CHECK_THROWS_AS(sp.index_of(HalfInt(5)), std::out_of_range);
    CHECK_THROWS_AS(sp.index_of(HalfInt::whole(1)), std::out_of_range);

    auto comp = IndexSpace::composite(3);
    CHECK(comp.dim() == 8);
    // composite label 7/2 sits first, -7/2 last
    CHECK(comp.index_of(HalfInt(7)) == 0);
    CHECK(comp.index_of(HalfInt(-7)) == 7);
    CHECK(comp.index_of(HalfInt(1)) == 3);

    auto pair = IndexSpace::spin(HalfInt(1), 2);
    CHECK(pair.dim() == 4);
    CHECK(pair.flat({HalfInt(1), HalfInt(-1)}) == 1);
    CHECK(pair.labels(2) == std::vector<HalfInt>{HalfInt(-1), HalfInt(1)});
    for (long k = 0; k < pair.dim(); ++k) CHECK(pair.flat(pair.labels(k)) == k);
}

TEST_CASE("kron oracle: i*sigma_y tensor sigma_x") {
    auto k = i_sigma_y().kron(sigma_x());
    Operator expect(4, 4);
    expect.set(0, 3, PhaseScalar::one());
    expect.set(1, 2, PhaseScalar::one());
    expect.set(2, 1, -PhaseScalar::one());
    expect.set(3, 0, -PhaseScalar::one());
    CHECK(k == expect);
}

TEST_CASE("matmul matches dense evaluation") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 4; ++rep) {
        auto a = random_op(5, 4, rng);
        auto b = random_op(4, 6, rng);
        Eigen::MatrixXcd prod = (a * b).evaluate();
        Eigen::MatrixXcd dense = a.evaluate() * b.evaluate();
        CHECK((prod - dense).cwiseAbs().maxCoeff() < 1e-12);
        Eigen::MatrixXcd sum = a.evaluate() + a.evaluate();
        CHECK(((a + a).evaluate() - sum).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("sparse evaluation agrees with dense") {
    std::mt19937 rng(5);
    auto a = random_op(6, 6, rng);
    Eigen::MatrixXcd d = a.evaluate();
    Eigen::MatrixXcd s = a.evaluate_sparse();
    CHECK((d - s).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("dagger laws") {
    std::mt19937 rng(3);
    auto a = random_op(3, 3, rng);
    auto b = random_op(3, 3, rng);
    CHECK((a * b).dagger() == b.dagger() * a.dagger());
    CHECK(a.dagger().dagger() == a);
    CHECK(a.kron(b).dagger() == a.dagger().kron(b.dagger()));
}

TEST_CASE("permutation operator") {
    auto p = Operator::permutation(3);
    CHECK(p * p == Operator::identity(9));
    // P|a,b> = |b,a>
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b) {
            auto v = p * StateVector::basis(9, a * 3 + b);
            CHECK(v == StateVector::basis(9, b * 3 + a));
        }
    CHECK(p.dagger() == p);
}

TEST_CASE("lift places operators on the right factors") {
    std::mt19937 rng(17);
    auto a = random_op(4, 4, rng); // 2-local on qubits
    auto b = random_op(4, 4, rng);
    // far apart on 4 factors: [A_1, B_3] = 0
    auto a1 = lift(a, 2, 2, 4, 0);
    auto b3 = lift(b, 2, 2, 4, 2);
    CHECK(a1 * b3 == b3 * a1);
    // adjacent lifts generally do not commute
    auto a2 = lift(a, 2, 2, 4, 1);
    CHECK(a1 * a2 == a1 * a2); // sanity on shapes
    CHECK(lift(a, 2, 2, 2, 0) == a);
    CHECK_THROWS_AS(lift(a, 2, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("first_difference finds the smallest witness") {
    Operator a(3, 3), b(3, 3);
    a.set(1, 2, PhaseScalar::one());
    b.set(1, 2, PhaseScalar::one());
    CHECK(!Operator::first_difference(a, b));
    b.set(2, 0, PhaseScalar::i_unit());
    b.set(1, 2, PhaseScalar::sqrt2());
    auto w = Operator::first_difference(a, b);
    REQUIRE(w.has_value());
    CHECK(w->row == 1);
    CHECK(w->col == 2);
    CHECK(w->lhs == "1");
    a = Operator(3, 3);
    b = Operator(3, 3);
    a.set(0, 1, PhaseScalar::one());
    auto w2 = Operator::first_difference(a, b);
    REQUIRE(w2.has_value());
    CHECK(w2->rhs == "0");
}

TEST_CASE("state vector algebra and inner product") {
    auto v = StateVector::basis(4, 0).scaled(PhaseScalar::inv_sqrt2()) +
             StateVector::basis(4, 3).scaled(PhaseScalar::inv_sqrt2());
    CHECK(inner(v, v) == PhaseScalar::one());
    auto w = StateVector::basis(4, 0).scaled(PhaseScalar::inv_sqrt2()) -
             StateVector::basis(4, 3).scaled(PhaseScalar::inv_sqrt2());
    CHECK(inner(v, w).is_zero());
    // conjugate symmetry
    auto u = StateVector::basis(4, 1).scaled(PhaseScalar::zeta8(1));
    CHECK(inner(u, v) == inner(v, u).conj());
}

TEST_CASE("reduced density of a Bell pair is maximally mixed") {
    auto v = StateVector::basis(4, 0).scaled(PhaseScalar::inv_sqrt2()) +
             StateVector::basis(4, 3).scaled(PhaseScalar::inv_sqrt2());
    auto half = PhaseScalar::rational(1, 2);
    for (int site : {0, 1}) {
        auto rho = reduced_density(v, 2, 2, site);
        CHECK(rho == Operator::identity(2).scaled(half));
    }
}

TEST_CASE("operator application agrees with dense") {
    std::mt19937 rng(23);
    auto a = random_op(5, 5, rng);
    StateVector v(5);
    v.set(0, PhaseScalar::sqrt2());
    v.set(3, PhaseScalar::zeta8(3));
    Eigen::VectorXcd lhs = (a * v).evaluate();
    Eigen::VectorXcd rhs = a.evaluate() * v.evaluate();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}
