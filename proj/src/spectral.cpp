#include "bellmat/spectral.hpp"

#include <sstream>
#include <stdexcept>

namespace bellmat {

namespace {

PhaseScalar trace_of(const Operator& a) {
    PhaseScalar t = PhaseScalar::zero();
    for (const auto& [r, row] : a.data()) {
        auto it = row.find(r);
        if (it != row.end()) t += it->second;
    }
    return t;
}

} // namespace

PhaseScalar lambda_plus() { return PhaseScalar::zeta8(7); }
PhaseScalar lambda_minus() { return PhaseScalar::zeta8(1); }

VerificationReport characteristic_check(const Operator& b, std::string params) {
    Operator id = Operator::identity(b.rows());
    Operator lhs = b * b - PhaseScalar::sqrt2() * b + id;
    if (auto w = Operator::first_difference(lhs, Operator(b.rows(), b.cols())))
        return VerificationReport::fail("characteristic", *w, params,
                                        "B^2 - sqrt(2) B + I != 0");
    return VerificationReport::pass("characteristic", params,
                                    "B^2 - sqrt(2) B + I = 0");
}

ProjectorPair projectors(const Operator& m) {
    Operator id = Operator::identity(m.rows());
    if (!(m * m + id).is_zero())
        throw std::invalid_argument("projectors: input does not square to -I");
    PhaseScalar half = PhaseScalar::rational(1, 2);
    Operator im = PhaseScalar::i_unit() * m;
    return ProjectorPair{(id + im).scaled(half), (id - im).scaled(half)};
}

VerificationReport check_projector_invariants(const ProjectorPair& p,
                                              std::string params) {
    Operator id = Operator::identity(p.p_plus.rows());
    if (auto w = Operator::first_difference(p.p_plus + p.p_minus, id))
        return VerificationReport::fail("projector-invariants", *w, params,
                                        "P+ + P- != I");
    if (auto w = Operator::first_difference(p.p_plus * p.p_plus, p.p_plus))
        return VerificationReport::fail("projector-invariants", *w, params,
                                        "P+ not idempotent");
    if (auto w = Operator::first_difference(p.p_minus * p.p_minus, p.p_minus))
        return VerificationReport::fail("projector-invariants", *w, params,
                                        "P- not idempotent");
    Operator zero(p.p_plus.rows(), p.p_plus.cols());
    if (auto w = Operator::first_difference(p.p_plus * p.p_minus, zero))
        return VerificationReport::fail("projector-invariants", *w, params,
                                        "P+ P- != 0");
    PhaseScalar half_dim = PhaseScalar::rational(p.p_plus.rows(), 2);
    if (!(trace_of(p.p_plus) - half_dim).is_zero() ||
        !(trace_of(p.p_minus) - half_dim).is_zero())
        return VerificationReport::fail("projector-invariants", std::nullopt,
                                        params, "projector trace != dim/2");
    return VerificationReport::pass(
        "projector-invariants", params,
        "completeness, idempotence, orthogonality, trace");
}

Operator reconstruct_b(const ProjectorPair& p) {
    return lambda_plus() * p.p_plus + lambda_minus() * p.p_minus;
}

Operator reconstruct_b_inverse(const ProjectorPair& p) {
    return lambda_minus() * p.p_plus + lambda_plus() * p.p_minus;
}

ParametricOperator projector_rx(const ProjectorPair& p) {
    return ParametricOperator::linear(reconstruct_b(p),
                                      reconstruct_b_inverse(p));
}

std::map<int, int> canonical_f(HalfInt j) {
    std::map<int, int> f;
    for (int t = j.twice; t >= 1; t -= 2) {
        f[t] = -1;
        f[-t] = -1;
    }
    return f;
}

Diagonalizer build_diagonalizer(const QTable& q, const std::map<int, int>& f) {
    for (HalfInt l : q.labels()) {
        auto it = f.find(l.twice);
        if (it == f.end())
            throw std::invalid_argument("build_diagonalizer: f missing label " +
                                        l.str());
        if (it->second != 1 && it->second != -1)
            throw std::invalid_argument(
                "build_diagonalizer: f must be valued in {-1, +1}");
        auto mirror = f.find(-l.twice);
        if (mirror != f.end() && mirror->second != it->second)
            throw std::invalid_argument(
                "build_diagonalizer: f(i) != f(-i) at label " + l.str());
    }
    IndexSpace space = IndexSpace::spin(q.j(), 2);
    Operator n(space.dim(), space.dim());
    for (HalfInt i : q.labels())
        for (HalfInt j2 : q.labels()) {
            long row = space.flat({i, j2});
            long col = space.flat({-i, -j2});
            PhaseScalar sign = PhaseScalar::integer(f.at(i.twice));
            n.set(row, col, sign * q.q(i, j2));
        }
    Operator id = Operator::identity(space.dim());
    Operator d = (id + PhaseScalar::i_unit() * n).scaled(PhaseScalar::inv_sqrt2());
    return Diagonalizer{f, n, d};
}

Diagonalizer build_diagonalizer(const QTable& q) {
    return build_diagonalizer(q, canonical_f(q.j()));
}

Diagonalizer diagonalizer_from_n(const Operator& m, const Operator& n) {
    Operator id = Operator::identity(n.rows());
    if (!(n.dagger() == n))
        throw std::invalid_argument("diagonalizer_from_n: N is not Hermitian");
    if (!(n * n == id))
        throw std::invalid_argument("diagonalizer_from_n: N^2 != I");
    if (!(n * m + m * n).is_zero())
        throw std::invalid_argument(
            "diagonalizer_from_n: N does not anticommute with M");
    Operator d = (id + PhaseScalar::i_unit() * n).scaled(PhaseScalar::inv_sqrt2());
    return Diagonalizer{{}, n, d};
}

Operator conjugate_by_d(const Diagonalizer& dg, const Operator& b) {
    return dg.d_matrix * b * dg.d_matrix.dagger();
}

VerificationReport check_diagonalization(const Diagonalizer& dg,
                                         const Operator& b,
                                         bool expect_canonical_order,
                                         std::string params) {
    Operator diag = conjugate_by_d(dg, b);
    const PhaseScalar plus = PhaseScalar::zeta8(1);
    const PhaseScalar minus = PhaseScalar::zeta8(7);
    long count_plus = 0, count_minus = 0;
    std::vector<bool> is_plus(diag.rows(), false);
    for (const auto& [r, row] : diag.data())
        for (const auto& [c, v] : row) {
            if (r != c)
                return VerificationReport::fail(
                    "diagonalization", EntryWitness{r, c, v.str(), "0"}, params,
                    "off-diagonal entry");
            if ((v - plus).is_zero()) {
                ++count_plus;
                is_plus[r] = true;
            } else if ((v - minus).is_zero()) {
                ++count_minus;
            } else {
                return VerificationReport::fail(
                    "diagonalization", EntryWitness{r, c, v.str(), "zeta8^+-1"},
                    params, "diagonal entry off the spectrum");
            }
        }
    if (count_plus != diag.rows() / 2 || count_minus != diag.rows() / 2)
        return VerificationReport::fail("diagonalization", std::nullopt, params,
                                        "eigenvalue multiplicities are not "
                                        "dim/2 each");
    if (expect_canonical_order)
        for (long r = 0; r < diag.rows() / 2; ++r)
            if (!is_plus[r])
                return VerificationReport::fail(
                    "diagonalization",
                    EntryWitness{r, r, "zeta8^-1", "zeta8"}, params,
                    "canonical ordering violated");
    std::ostringstream detail;
    detail << "diag = (1+i)/sqrt(2) x" << count_plus << ", (1-i)/sqrt(2) x"
           << count_minus;
    return VerificationReport::pass("diagonalization", params, detail.str());
}

std::vector<VerificationReport> spectral_suite(const QTable& q) {
    const std::string params = "J=" + q.j().str();
    BellFamily fam = BellFamily::jj(q);
    std::vector<VerificationReport> out;
    out.push_back(characteristic_check(fam.B, params));

    ProjectorPair p = projectors(fam.M);
    out.push_back(check_projector_invariants(p, params));

    out.push_back(
        compare_operators("spectral-reconstruction", reconstruct_b(p), fam.B,
                          params));
    Operator id = Operator::identity(fam.dim());
    Operator binv = (id - fam.M).scaled(PhaseScalar::inv_sqrt2());
    out.push_back(compare_operators("inverse-reconstruction",
                                    reconstruct_b_inverse(p), binv, params));

    ParametricOperator via_proj = projector_rx(p);
    ParametricOperator via_baxter =
        yang_baxterize(fam.B, lambda_plus(), lambda_minus());
    if (auto w = ParametricOperator::first_difference(via_proj, via_baxter))
        out.push_back(VerificationReport::fail("projector-baxterization",
                                               w->entry, params));
    else
        out.push_back(VerificationReport::pass(
            "projector-baxterization", params,
            "projector form equals B + x B^{-1}"));

    Diagonalizer dg = build_diagonalizer(q);
    out.push_back(check_diagonalization(dg, fam.B, true, params));
    return out;
}

} // namespace bellmat
