#include "bellmat/yangbaxter.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bellmat {

namespace {

std::string mono_str(ParametricOperator::Mono m) {
    std::ostringstream os;
    os << "x^" << m.first << " y^" << m.second;
    return os.str();
}

PhaseScalar scalar_inverse(const PhaseScalar& s) {
    return s.is_single_term() ? s.inverse() : s.field_inverse();
}

// std::pow(complex(0,0), 0) is NaN, so exponentiate by hand.
std::complex<double> ipow(std::complex<double> z, int n) {
    std::complex<double> out{1.0, 0.0};
    for (int k = 0; k < n; ++k) out *= z;
    return out;
}

long isqrt_exact(long n) {
    long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) throw std::invalid_argument("operator is not on V (x) V");
    return r;
}

Eigen::MatrixXcd numeric_lift(const Eigen::MatrixXcd& local, long local_dim,
                              int local_factors, int n_factors, int pos) {
    long left = 1, right = 1;
    for (int k = 0; k < pos; ++k) left *= local_dim;
    for (int k = pos + local_factors; k < n_factors; ++k) right *= local_dim;
    Eigen::MatrixXcd out =
        Eigen::MatrixXcd::Zero(left * local.rows() * right,
                               left * local.cols() * right);
    for (long a = 0; a < left; ++a)
        for (long r = 0; r < local.rows(); ++r)
            for (long c = 0; c < local.cols(); ++c) {
                if (local(r, c) == std::complex<double>(0.0, 0.0)) continue;
                for (long b = 0; b < right; ++b)
                    out((a * local.rows() + r) * right + b,
                        (a * local.cols() + c) * right + b) = local(r, c);
            }
    return out;
}

} // namespace

ParametricOperator ParametricOperator::constant(Operator a) {
    ParametricOperator p(a.rows(), a.cols());
    p.add_term({0, 0}, a);
    return p;
}

ParametricOperator ParametricOperator::linear(Operator a0, Operator a1,
                                              int var) {
    if (a0.rows() != a1.rows() || a0.cols() != a1.cols())
        throw std::invalid_argument("linear: shape mismatch");
    ParametricOperator p(a0.rows(), a0.cols());
    p.add_term({0, 0}, a0);
    p.add_term(var == 0 ? Mono{1, 0} : Mono{0, 1}, a1);
    return p;
}

const Operator& ParametricOperator::coeff(Mono m) const {
    static const Operator kEmpty(0, 0);
    auto it = coeffs_.find(m);
    if (it != coeffs_.end()) return it->second;
    return kEmpty;
}

void ParametricOperator::add_term(Mono m, const Operator& op) {
    if (op.rows() != rows_ || op.cols() != cols_)
        throw std::invalid_argument("add_term: shape mismatch");
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
        if (!op.is_zero()) coeffs_.emplace(m, op);
        return;
    }
    it->second = it->second + op;
    if (it->second.is_zero()) coeffs_.erase(it);
}

ParametricOperator ParametricOperator::operator+(
    const ParametricOperator& o) const {
    ParametricOperator out(rows_, cols_);
    out.coeffs_ = coeffs_;
    for (const auto& [m, op] : o.coeffs_) out.add_term(m, op);
    return out;
}

ParametricOperator ParametricOperator::operator-(
    const ParametricOperator& o) const {
    ParametricOperator out(rows_, cols_);
    out.coeffs_ = coeffs_;
    for (const auto& [m, op] : o.coeffs_) out.add_term(m, -op);
    return out;
}

ParametricOperator ParametricOperator::operator*(
    const ParametricOperator& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("parametric product shape");
    ParametricOperator out(rows_, o.cols_);
    for (const auto& [ma, a] : coeffs_)
        for (const auto& [mb, b] : o.coeffs_)
            out.add_term({ma.first + mb.first, ma.second + mb.second}, a * b);
    return out;
}

bool ParametricOperator::operator==(const ParametricOperator& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && coeffs_ == o.coeffs_;
}

ParametricOperator ParametricOperator::subst_xy() const {
    ParametricOperator out(rows_, cols_);
    for (const auto& [m, op] : coeffs_)
        out.add_term({m.first, m.first + m.second}, op);
    return out;
}

ParametricOperator ParametricOperator::subst_y() const {
    ParametricOperator out(rows_, cols_);
    for (const auto& [m, op] : coeffs_)
        out.add_term({0, m.first + m.second}, op);
    return out;
}

ParametricOperator ParametricOperator::subst_x_plus_y() const {
    ParametricOperator out(rows_, cols_);
    for (const auto& [m, op] : coeffs_) {
        if (m.second != 0)
            throw std::invalid_argument("subst_x_plus_y: univariate input only");
        Rational binom = 1;
        for (int k = 0; k <= m.first; ++k) {
            out.add_term({m.first - k, k},
                         op.scaled(PhaseScalar::rational(binom)));
            binom = binom * Rational(m.first - k) / Rational(k + 1);
        }
    }
    return out;
}

ParametricOperator ParametricOperator::dagger_coeffwise() const {
    ParametricOperator out(cols_, rows_);
    for (const auto& [m, op] : coeffs_) out.add_term(m, op.dagger());
    return out;
}

ParametricOperator ParametricOperator::lifted(long local_dim, int n_factors,
                                              int pos) const {
    ParametricOperator out(0, 0);
    bool first = true;
    for (const auto& [m, op] : coeffs_) {
        Operator l = lift(op, local_dim, 2, n_factors, pos);
        if (first) {
            out = ParametricOperator(l.rows(), l.cols());
            first = false;
        }
        out.add_term(m, l);
    }
    return out;
}

Eigen::MatrixXcd ParametricOperator::evaluate(std::complex<double> x,
                                              std::complex<double> y,
                                              const PhaseAssignment& phi) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows_, cols_);
    for (const auto& [m, op] : coeffs_) {
        std::complex<double> w = ipow(x, m.first) * ipow(y, m.second);
        out += w * op.evaluate(phi);
    }
    return out;
}

std::optional<ParametricOperator::Witness> ParametricOperator::first_difference(
    const ParametricOperator& a, const ParametricOperator& b) {
    std::optional<Witness> best;
    auto consider = [&](Mono m, const Operator& oa, const Operator& ob) {
        auto w = Operator::first_difference(oa, ob);
        if (!w) return;
        if (!best || std::tie(w->row, w->col, m) <
                         std::tie(best->entry.row, best->entry.col, best->mono))
            best = Witness{m, *w};
    };
    Operator zero(a.rows_, a.cols_);
    auto get = [&](const ParametricOperator& p, Mono m) -> const Operator& {
        auto it = p.coeffs_.find(m);
        return it == p.coeffs_.end() ? zero : it->second;
    };
    for (const auto& [m, op] : a.coeffs_) consider(m, op, get(b, m));
    for (const auto& [m, op] : b.coeffs_)
        if (!a.coeffs_.count(m)) consider(m, zero, op);
    return best;
}

VerificationReport check_braid(const Operator& g, std::string params) {
    long d = isqrt_exact(g.rows());
    if (g.cols() != g.rows()) throw std::invalid_argument("braid: square input");
    Operator g1 = lift(g, d, 2, 3, 0);
    Operator g2 = lift(g, d, 2, 3, 1);
    Operator lhs = g1 * g2 * g1;
    Operator rhs = g2 * g1 * g2;
    if (auto w = Operator::first_difference(lhs, rhs))
        return VerificationReport::fail("braid", *w, params,
                                        "adjacent relation fails");
    Operator f1 = lift(g, d, 2, 4, 0);
    Operator f3 = lift(g, d, 2, 4, 2);
    if (auto w = Operator::first_difference(f1 * f3, f3 * f1))
        return VerificationReport::fail("braid", *w, params,
                                        "far commutation fails");
    return VerificationReport::pass("braid", params,
                                    "adjacent and far relations hold");
}

VerificationReport check_M_algebra(const QTable& q) {
    const std::string params = "J=" + q.j().str();
    Operator m = build_M_jj(q);
    long d = q.j().twice + 1;
    Operator sq = m * m;
    Operator neg_id = -Operator::identity(m.rows());
    if (auto w = Operator::first_difference(sq, neg_id))
        return VerificationReport::fail("m-algebra", *w, params,
                                        "square is not -I");
    Operator m1 = lift(m, d, 2, 3, 0);
    Operator m2 = lift(m, d, 2, 3, 1);
    if (auto w = Operator::first_difference(m1 * m2, -(m2 * m1)))
        return VerificationReport::fail("m-algebra", *w, params,
                                        "adjacent anticommutation fails");
    Operator f1 = lift(m, d, 2, 4, 0);
    Operator f3 = lift(m, d, 2, 4, 2);
    if (auto w = Operator::first_difference(f1 * f3, f3 * f1))
        return VerificationReport::fail("m-algebra", *w, params,
                                        "far commutation fails");
    for (HalfInt i : q.labels())
        for (HalfInt j : q.labels()) {
            PhaseScalar lhs = q.q(i, j) * q.q(-i, -j);
            if (!lhs.is_one())
                return VerificationReport::fail(
                    "m-algebra",
                    EntryWitness{0, 0, lhs.str(), "1"}, params,
                    "q(i,j)q(-i,-j)=1 fails at i=" + i.str() + " j=" + j.str());
            for (HalfInt k : q.labels()) {
                PhaseScalar a = q.q(i, j) * q.q(-i, j);
                PhaseScalar b = q.q(j, k) * q.q(j, -k);
                if (!(a - b).is_zero())
                    return VerificationReport::fail(
                        "m-algebra", EntryWitness{0, 0, a.str(), b.str()},
                        params,
                        "side condition q(i,j)q(-i,j)=q(j,k)q(j,-k) fails");
            }
        }
    return VerificationReport::pass(
        "m-algebra", params,
        "square, adjacent, far relations and q side conditions hold");
}

ParametricOperator yang_baxterize(const Operator& g, const PhaseScalar& l1,
                                  const PhaseScalar& l2) {
    Operator id = Operator::identity(g.rows());
    Operator chk = (g - l1 * id) * (g - l2 * id);
    if (!chk.is_zero())
        throw std::invalid_argument(
            "yang_baxterize: (g - l1)(g - l2) != 0, wrong eigenvalues");
    PhaseScalar prod = l1 * l2;
    PhaseScalar prod_inv = scalar_inverse(prod);
    Operator ginv = (prod_inv * ((l1 + l2) * id - g));
    return ParametricOperator::linear(g, prod * ginv);
}

std::pair<ParametricOperator, ParametricOperator>
qybe_sides(const ParametricOperator& r) {
    for (const auto& [m, op] : r.coeffs())
        if (m.second != 0)
            throw std::invalid_argument("qybe_sides: input must be univariate");
    long d = isqrt_exact(r.rows());
    ParametricOperator r1 = r.lifted(d, 3, 0);
    ParametricOperator r2 = r.lifted(d, 3, 1);
    ParametricOperator lhs = r1 * r2.subst_xy() * r1.subst_y();
    ParametricOperator rhs = r2.subst_y() * r1.subst_xy() * r2;
    return {lhs, rhs};
}

VerificationReport check_qybe(const ParametricOperator& r, std::string params) {
    auto [lhs, rhs] = qybe_sides(r);
    if (auto w = ParametricOperator::first_difference(lhs, rhs))
        return VerificationReport::fail("qybe", w->entry, params,
                                        "differs at monomial " +
                                            mono_str(w->mono));
    return VerificationReport::pass("qybe", params,
                                    "all monomial coefficients agree");
}

std::pair<ParametricOperator, ParametricOperator>
additive_ybe_sides(const ParametricOperator& r) {
    for (const auto& [m, op] : r.coeffs())
        if (m.second != 0)
            throw std::invalid_argument(
                "additive_ybe_sides: input must be univariate");
    long d = isqrt_exact(r.rows());
    ParametricOperator r1 = r.lifted(d, 3, 0);
    ParametricOperator r2 = r.lifted(d, 3, 1);
    ParametricOperator lhs = r1 * r2.subst_x_plus_y() * r1.subst_y();
    ParametricOperator rhs = r2.subst_y() * r1.subst_x_plus_y() * r2;
    return {lhs, rhs};
}

VerificationReport check_additive_ybe(const ParametricOperator& r,
                                      std::string params) {
    auto [lhs, rhs] = additive_ybe_sides(r);
    if (auto w = ParametricOperator::first_difference(lhs, rhs))
        return VerificationReport::fail("additive-ybe", w->entry, params,
                                        "differs at monomial " +
                                            mono_str(w->mono));
    return VerificationReport::pass("additive-ybe", params,
                                    "all monomial coefficients agree");
}

VerificationReport check_qybe_numeric(const ParametricOperator& r,
                                      const QTable& q, int samples,
                                      std::uint64_t seed, double tol) {
    long d = isqrt_exact(r.rows());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    const std::string params = "J=" + q.j().str();
    for (int s = 0; s < samples; ++s) {
        PhaseAssignment phi = q.assignment();
        for (SymbolId id : {1, 3, 5, 7, 9, 11, 13, 15}) {
            if (id > q.j().twice) break;
            phi[id] = angle(rng);
        }
        double x = unit(rng), y = unit(rng);
        Eigen::MatrixXcd rx = r.evaluate(x, 0.0, phi);
        Eigen::MatrixXcd rxy = r.evaluate(x * y, 0.0, phi);
        Eigen::MatrixXcd ry = r.evaluate(y, 0.0, phi);
        Eigen::MatrixXcd r1x = numeric_lift(rx, d, 2, 3, 0);
        Eigen::MatrixXcd r1xy = numeric_lift(rxy, d, 2, 3, 0);
        Eigen::MatrixXcd r1y = numeric_lift(ry, d, 2, 3, 0);
        Eigen::MatrixXcd r2x = numeric_lift(rx, d, 2, 3, 1);
        Eigen::MatrixXcd r2xy = numeric_lift(rxy, d, 2, 3, 1);
        Eigen::MatrixXcd r2y = numeric_lift(ry, d, 2, 3, 1);
        Eigen::MatrixXcd lhs = r1x * r2xy * r1y;
        Eigen::MatrixXcd rhs = r2y * r1xy * r2x;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    std::ostringstream detail;
    detail << "max residual " << worst << " over " << samples << " samples";
    if (worst < tol)
        return VerificationReport::pass("qybe-numeric", params, detail.str());
    return VerificationReport::fail("qybe-numeric", std::nullopt, params,
                                    detail.str());
}

VerificationReport check_unitarity_family(const ParametricOperator& r,
                                          std::string params) {
    ParametricOperator prod = r * r.dagger_coeffwise();
    ParametricOperator expected(r.rows(), r.rows());
    expected.add_term({0, 0}, Operator::identity(r.rows()));
    expected.add_term({2, 0}, Operator::identity(r.rows()));
    if (auto w = ParametricOperator::first_difference(prod, expected))
        return VerificationReport::fail("unitarity-family", w->entry, params,
                                        "differs at monomial " +
                                            mono_str(w->mono));
    return VerificationReport::pass("unitarity-family", params,
                                    "R(x) R(x)^dag = (1+x^2) I");
}

std::pair<ParametricOperator, ParametricOperator>
modified_ybe_sides(const Operator& m) {
    long d = isqrt_exact(m.rows());
    Operator m1 = lift(m, d, 2, 3, 0);
    Operator m2 = lift(m, d, 2, 3, 1);
    Operator id = Operator::identity(m1.rows());

    auto linear_at = [&](const Operator& mm, int var) {
        return ParametricOperator::linear(id, mm, var);
    };
    auto middle = [&](const Operator& mm) {
        ParametricOperator mid(id.rows(), id.cols());
        mid.add_term({0, 0}, id);
        mid.add_term({1, 1}, id);
        mid.add_term({1, 0}, mm);
        mid.add_term({0, 1}, mm);
        return mid;
    };
    ParametricOperator lhs = linear_at(m1, 0) * middle(m2) * linear_at(m1, 1);
    ParametricOperator rhs = linear_at(m2, 1) * middle(m1) * linear_at(m2, 0);
    return {lhs, rhs};
}

VerificationReport check_modified_ybe(const QTable& q) {
    const std::string params = "J=" + q.j().str();
    auto [lhs, rhs] = modified_ybe_sides(build_M_jj(q));
    if (auto w = ParametricOperator::first_difference(lhs, rhs))
        return VerificationReport::fail("modified-ybe", w->entry, params,
                                        "differs at monomial " +
                                            mono_str(w->mono));
    return VerificationReport::pass("modified-ybe", params,
                                    "all monomial coefficients agree");
}

Rational reparameterize(const Rational& x) {
    if (x == Rational(-1)) throw std::invalid_argument("reparameterize: x = -1");
    return (Rational(1) - x) / (Rational(1) + x);
}

VerificationReport check_reparameterization(const Rational& x,
                                            const Rational& y) {
    std::ostringstream ps;
    ps << "x=" << x << " y=" << y;
    if (x * y == Rational(-1))
        throw std::invalid_argument("check_reparameterization: xy = -1");
    Rational u = reparameterize(x);
    Rational v = reparameterize(y);
    Rational lhs = reparameterize(x * y);
    if (Rational(1) + u * v == Rational(0))
        throw std::invalid_argument("check_reparameterization: 1 + uv = 0");
    Rational rhs = (u + v) / (Rational(1) + u * v);
    if (lhs == rhs) {
        std::ostringstream detail;
        detail << "u(xy) = " << lhs << " = (u+v)/(1+uv)";
        return VerificationReport::pass("reparameterization", ps.str(),
                                        detail.str());
    }
    std::ostringstream detail;
    detail << "u(xy) = " << lhs << " but (u+v)/(1+uv) = " << rhs;
    return VerificationReport::fail("reparameterization", std::nullopt,
                                    ps.str(), detail.str());
}

VerificationReport trig_check(const QTable& q, double theta1, double theta2,
                              bool hyperbolic, double tol) {
    std::ostringstream ps;
    ps << "J=" << q.j().str() << " theta1=" << theta1 << " theta2=" << theta2
       << (hyperbolic ? " tanh" : " tan");
    auto slope = [&](double t) -> std::complex<double> {
        if (hyperbolic) return {std::tanh(t), 0.0};
        if (std::abs(std::cos(t)) < 1e-6)
            throw std::invalid_argument("trig_check: tan pole");
        return {0.0, -std::tan(t)};
    };
    Eigen::MatrixXcd m = build_M_jj(q).evaluate(q.assignment());
    long d = q.j().twice + 1;
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    auto rmat = [&](double t, int pos) {
        Eigen::MatrixXcd local = id + slope(t) * m;
        return numeric_lift(local, d, 2, 3, pos);
    };
    Eigen::MatrixXcd lhs =
        rmat(theta1, 0) * rmat(theta1 + theta2, 1) * rmat(theta2, 0);
    Eigen::MatrixXcd rhs =
        rmat(theta2, 1) * rmat(theta1 + theta2, 0) * rmat(theta1, 1);
    double resid = (lhs - rhs).cwiseAbs().maxCoeff();
    std::ostringstream detail;
    detail << "residual " << resid;
    if (resid < tol)
        return VerificationReport::pass("angle-ybe", ps.str(), detail.str());
    return VerificationReport::fail("angle-ybe", std::nullopt, ps.str(),
                                    detail.str());
}

std::pair<VerificationReport, VerificationReport>
check_virtual(const QTable& q) {
    const std::string params = "J=" + q.j().str();
    long d = q.j().twice + 1;
    Operator m = build_M_jj(q);
    Operator perm = Operator::permutation(d);
    Operator p1 = lift(perm, d, 2, 3, 0);
    Operator p2 = lift(perm, d, 2, 3, 1);
    Operator m1 = lift(m, d, 2, 3, 0);
    Operator m2 = lift(m, d, 2, 3, 1);

    VerificationReport displayed = [&] {
        Operator lhs = p1 * m2 * p1;
        Operator rhs = p2 * m1 * p1;
        if (auto w = Operator::first_difference(lhs, rhs))
            return VerificationReport::fail("virtual-displayed", *w, params,
                                            "P1 M2 P1 != P2 M1 P1");
        return VerificationReport::pass("virtual-displayed", params,
                                        "P1 M2 P1 = P2 M1 P1");
    }();
    VerificationReport standard = [&] {
        Operator lhs = p1 * p2 * m1 * p2 * p1;
        if (auto w = Operator::first_difference(lhs, m2))
            return VerificationReport::fail("virtual-standard", *w, params,
                                            "P1 P2 M1 P2 P1 != M2");
        return VerificationReport::pass("virtual-standard", params,
                                        "P1 P2 M1 P2 P1 = M2");
    }();
    return {displayed, standard};
}

} // namespace bellmat
