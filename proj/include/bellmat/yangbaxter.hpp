#pragma once

#include <cstdint>
#include <utility>

#include "bellmat/bell.hpp"
#include "bellmat/linalg.hpp"
#include "bellmat/report.hpp"

namespace bellmat {

/// Matrix-valued polynomial in two commuting spectral variables. Monomial
/// (a, b) stands for x^a y^b (or u^a v^b); univariate operators simply never
/// populate b. Used to verify parametric identities per monomial, exactly.
class ParametricOperator {
public:
    using Mono = std::pair<int, int>;

    ParametricOperator() = default;
    ParametricOperator(long rows, long cols) : rows_(rows), cols_(cols) {}

    static ParametricOperator constant(Operator a);
    /// a0 + x*a1 (var 0) or a0 + y*a1 (var 1).
    static ParametricOperator linear(Operator a0, Operator a1, int var = 0);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const std::map<Mono, Operator>& coeffs() const { return coeffs_; }
    const Operator& coeff(Mono m) const;

    void add_term(Mono m, const Operator& op);

    ParametricOperator operator+(const ParametricOperator& o) const;
    ParametricOperator operator-(const ParametricOperator& o) const;
    ParametricOperator operator*(const ParametricOperator& o) const;
    bool operator==(const ParametricOperator& o) const;

    /// Substitute x -> x*y (monomial (a,b) -> (a, a+b)); the middle QYBE slot.
    ParametricOperator subst_xy() const;
    /// Substitute x -> y.
    ParametricOperator subst_y() const;
    /// Substitute x -> x + y via binomial expansion; requires univariate
    /// input. The middle slot of the additive identity.
    ParametricOperator subst_x_plus_y() const;
    /// Coefficient-wise dagger; equals the dagger of the value for real
    /// variables.
    ParametricOperator dagger_coeffwise() const;
    /// Lift every coefficient to n factors at the given position (0-based).
    ParametricOperator lifted(long local_dim, int n_factors, int pos) const;

    Eigen::MatrixXcd evaluate(std::complex<double> x, std::complex<double> y,
                              const PhaseAssignment& phi = {}) const;

    struct Witness {
        Mono mono;
        EntryWitness entry;
    };
    /// Smallest differing (row, col, monomial), in that lexicographic order.
    static std::optional<Witness> first_difference(const ParametricOperator& a,
                                                   const ParametricOperator& b);

private:
    long rows_ = 0, cols_ = 0;
    std::map<Mono, Operator> coeffs_;
};

/// Braid relation g1 g2 g1 = g2 g1 g2 on three factors plus far commutation
/// g1 g3 = g3 g1 on four; g must act on V (x) V.
VerificationReport check_braid(const Operator& g, std::string params = "");

/// The full almost-complex-structure algebra: square -I, adjacent
/// anticommutation, far commutation, and both q-side-conditions.
VerificationReport check_M_algebra(const QTable& q);

/// R(x) = g + x l1 l2 g^{-1} after verifying (g - l1)(g - l2) = 0.
ParametricOperator yang_baxterize(const Operator& g, const PhaseScalar& l1,
                                  const PhaseScalar& l2);

/// Left and right sides of the parametric Yang-Baxter identity
/// R_1(x) R_2(xy) R_1(y) = R_2(y) R_1(xy) R_2(x) on V^3.
std::pair<ParametricOperator, ParametricOperator>
qybe_sides(const ParametricOperator& r);

VerificationReport check_qybe(const ParametricOperator& r,
                              std::string params = "");

/// Additive-parameter sides R_1(u) R_2(u+v) R_1(v) = R_2(v) R_1(u+v) R_2(u);
/// this is the identity the rational solution I + uP satisfies (it does not
/// satisfy the multiplicative form).
std::pair<ParametricOperator, ParametricOperator>
additive_ybe_sides(const ParametricOperator& r);

VerificationReport check_additive_ybe(const ParametricOperator& r,
                                      std::string params = "");

/// Independent numeric oracle: dense products at `samples` random real
/// (x, y) pairs and random angles; passes when every residual < tol.
VerificationReport check_qybe_numeric(const ParametricOperator& r,
                                      const QTable& q, int samples,
                                      std::uint64_t seed, double tol = 1e-12);

/// Unitarity of the parametric family as a polynomial identity:
/// R(x) R(x)^dag = (1 + x^2) I for real x.
VerificationReport check_unitarity_family(const ParametricOperator& r,
                                          std::string params = "");

/// Denominator-cleared sides of the additive identity
/// R_1(u) [(1+uv)I + (u+v)M_2] R_1(v) = R_2(v) [(1+uv)I + (u+v)M_1] R_2(u)
/// with R(u) = I + uM.
std::pair<ParametricOperator, ParametricOperator>
modified_ybe_sides(const Operator& m);

VerificationReport check_modified_ybe(const QTable& q);

/// u = (1-x)/(1+x); throws on x = -1.
Rational reparameterize(const Rational& x);
/// Exact rational check that (1-xy)/(1+xy) = (u+v)/(1+uv).
VerificationReport check_reparameterization(const Rational& x,
                                            const Rational& y);

/// Numeric check of the angle-parameterized identity with
/// R(T) = I - i tan(T) M (or I + tanh(T) M when hyperbolic).
VerificationReport trig_check(const QTable& q, double theta1, double theta2,
                              bool hyperbolic = false, double tol = 1e-10);

/// Virtual-braid checks on V^3: returns {as-displayed form
/// P1 M2 P1 = P2 M1 P1, standard mixed form P1 P2 M1 P2 P1 = M2}.
std::pair<VerificationReport, VerificationReport>
check_virtual(const QTable& q);

} // namespace bellmat
