#include "bellmat/bell.hpp"

#include <cmath>
#include <sstream>

namespace bellmat {

namespace {

void require_half_odd_j(HalfInt j) {
    if (j.twice <= 0 || j.is_integer())
        throw std::invalid_argument("J must be a positive half-odd integer, got " +
                                    j.str());
}

} // namespace

QTable QTable::symbolic(HalfInt j) {
    require_half_odd_j(j);
    QTable t;
    t.j_ = j;
    t.symbolic_ = true;
    for (int l = j.twice; l >= 1; l -= 2)
        t.u_.emplace(l, PhaseScalar::phase_symbol(HalfInt(l)));
    return t;
}

QTable QTable::zeta8_powers(HalfInt j, const std::vector<int>& powers) {
    require_half_odd_j(j);
    if (static_cast<int>(powers.size()) != (j.twice + 1) / 2)
        throw std::invalid_argument("need one zeta8 power per positive label");
    QTable t;
    t.j_ = j;
    size_t idx = 0;
    for (int l = j.twice; l >= 1; l -= 2)
        t.u_.emplace(l, PhaseScalar::zeta8(powers[idx++]));
    return t;
}

QTable QTable::angles(HalfInt j, const std::vector<double>& phi) {
    QTable t = symbolic(j);
    if (static_cast<int>(phi.size()) != (j.twice + 1) / 2)
        throw std::invalid_argument("need one angle per positive label");
    size_t idx = 0;
    for (int l = j.twice; l >= 1; l -= 2) t.phi_.emplace(l, phi[idx++]);
    return t;
}

QTable QTable::trivial(HalfInt j) {
    require_half_odd_j(j);
    QTable t;
    t.j_ = j;
    for (int l = j.twice; l >= 1; l -= 2) t.u_.emplace(l, PhaseScalar::one());
    return t;
}

PhaseScalar QTable::u(HalfInt l) const {
    auto it = u_.find(std::abs(l.twice));
    if (l.twice == 0 || l.is_integer() || it == u_.end())
        throw std::out_of_range("no phase for label " + l.str());
    return l.twice > 0 ? it->second : it->second.inverse();
}

PhaseScalar QTable::q(HalfInt l, HalfInt m) const { return u(l) * u(m); }

std::vector<HalfInt> QTable::labels() const {
    std::vector<HalfInt> out;
    for (int t = j_.twice; t >= -j_.twice; t -= 2) out.push_back(HalfInt(t));
    return out;
}

std::vector<HalfInt> QTable::positive_labels() const {
    std::vector<HalfInt> out;
    for (int t = j_.twice; t >= 1; t -= 2) out.push_back(HalfInt(t));
    return out;
}

BellFamily BellFamily::plain(int n_qubits) {
    if (n_qubits < 2)
        throw std::invalid_argument("plain Bell family needs N >= 2");
    BellFamily f;
    f.kind = Kind::plain;
    f.n_qubits = n_qubits;
    f.M = build_M_plain(n_qubits);
    f.B = build_B_plain(n_qubits);
    return f;
}

BellFamily BellFamily::jj(const QTable& q) {
    BellFamily f;
    f.kind = Kind::jj;
    f.qtable = q;
    f.M = build_M_jj(q);
    f.B = build_B_jj(q);
    return f;
}

BellFamily BellFamily::generalized(HalfInt j1, HalfInt j2, const QTable& q) {
    if (j1 != j2)
        throw UnsupportedKindError("generalized Bell matrix with J1=" +
                                   j1.str() + " != J2=" + j2.str() +
                                   " is not constructed here");
    return jj(q);
}

long BellFamily::local_dim() const {
    if (kind == Kind::jj) return qtable.j().twice + 1;
    if (n_qubits % 2 != 0)
        throw UnsupportedKindError(
            "plain family with odd N has no V(x)V factorization");
    return 1L << (n_qubits / 2);
}

std::string BellFamily::params_str() const {
    std::ostringstream os;
    if (kind == Kind::plain)
        os << "plain N=" << n_qubits;
    else
        os << "J=" << qtable.j().str()
           << (qtable.is_symbolic()
                   ? (qtable.assignment().empty() ? " phases=sym"
                                                  : " phases=angles")
                   : " phases=exact");
    return os.str();
}

LabelMapResult label_map(const std::vector<HalfInt>& m) {
    int n = static_cast<int>(m.size());
    long twice_mu = 0;
    for (int i = 0; i < n; ++i) {
        if (m[i].abs() != HalfInt(1))
            throw std::invalid_argument("label_map entries must be +-1/2");
        twice_mu += (1L << (n - 1 - i)) * m[i].twice;
    }
    // k = 2^{N-1} + 1/2 - mu, written with integer arithmetic on 2*mu.
    long k = (1L << (n - 1)) + (1 - twice_mu) / 2;
    return {k, HalfInt(static_cast<int>(twice_mu))};
}

std::vector<HalfInt> label_map_inverse(long k, int n_qubits) {
    long dim = 1L << n_qubits;
    if (k < 1 || k > dim) throw std::out_of_range("k outside 1..2^N");
    auto space = IndexSpace::spin(HalfInt(1), n_qubits);
    return space.labels(k - 1);
}

Operator build_M_plain(int n_qubits) {
    long dim = 1L << n_qubits;
    Operator m(dim, dim);
    for (long r = 0; r < dim; ++r)
        m.set(r, dim - 1 - r,
              r < dim / 2 ? PhaseScalar::one() : -PhaseScalar::one());
    return m;
}

Operator build_B_plain(int n_qubits) {
    long dim = 1L << n_qubits;
    return PhaseScalar::inv_sqrt2() *
           (Operator::identity(dim) + build_M_plain(n_qubits));
}

Operator build_M_pauli(int n_qubits) {
    Operator i_sigma_y(2, 2);
    i_sigma_y.set(0, 1, PhaseScalar::one());
    i_sigma_y.set(1, 0, -PhaseScalar::one());
    Operator sigma_x(2, 2);
    sigma_x.set(0, 1, PhaseScalar::one());
    sigma_x.set(1, 0, PhaseScalar::one());
    Operator out = i_sigma_y;
    for (int k = 1; k < n_qubits; ++k) out = out.kron(sigma_x);
    return out;
}

Operator build_M_jj(const QTable& q) {
    auto space = IndexSpace::spin(q.j(), 2);
    long dim = space.dim();
    Operator m(dim, dim);
    for (const HalfInt i : q.labels()) {
        for (const HalfInt j : q.labels()) {
            long row = space.flat({i, j});
            long col = space.flat({-i, -j});
            PhaseScalar v = q.q(i, j);
            if (i.epsilon() < 0) v = -v;
            m.set(row, col, std::move(v));
        }
    }
    return m;
}

Operator build_B_jj(const QTable& q) {
    Operator m = build_M_jj(q);
    return PhaseScalar::inv_sqrt2() * (Operator::identity(m.rows()) + m);
}

Operator build_epsilon_variant(const Operator& B) {
    long dim = B.rows();
    Operator out(dim, dim);
    for (const auto& [r, row] : B.data())
        for (const auto& [c, v] : row)
            out.set(r, c, r < dim / 2 ? v : -v);
    return out;
}

std::vector<StateVector> ghz_generate(int n_qubits) {
    if (n_qubits < 2) throw std::invalid_argument("GHZ generation needs N >= 2");
    Operator b = build_B_plain(n_qubits);
    long dim = b.rows();
    std::vector<StateVector> out;
    out.reserve(dim);
    for (long k = 0; k < dim; ++k)
        out.push_back(b * StateVector::basis(dim, k));
    return out;
}

VerificationReport check_q_constraints(const QTable& q) {
    const auto labels = q.labels();
    const PhaseScalar one = PhaseScalar::one();
    auto fail = [&](HalfInt a, HalfInt b, const std::string& relation,
                    const PhaseScalar& lhs, const PhaseScalar& rhs) {
        EntryWitness w{0, 0, lhs.str(), rhs.str()};
        return VerificationReport::fail(
            "q-constraints", w, "J=" + q.j().str(),
            relation + " at (" + a.str() + "," + b.str() + ")");
    };
    for (const HalfInt i : labels) {
        for (const HalfInt j : labels) {
            if (!(q.q(i, j) * q.q(-i, -j) == one))
                return fail(i, j, "q_ij q_-i-j = 1", q.q(i, j) * q.q(-i, -j),
                            one);
            if (!(q.q(i, j).conj() * q.q(i, j) == one))
                return fail(i, j, "conj(q) q = 1",
                            q.q(i, j).conj() * q.q(i, j), one);
            if (!(q.q(i, j) == q.q(j, i)))
                return fail(i, j, "q_ij = q_ji", q.q(i, j), q.q(j, i));
            for (const HalfInt k : labels) {
                // three-term conditions of the braid proof
                if (!(q.q(j, k) == q.q(i, j) * q.q(-j, k) * q.q(-i, j)))
                    return fail(j, k, "q_jk = q_ij q_-jk q_-ij", q.q(j, k),
                                q.q(i, j) * q.q(-j, k) * q.q(-i, j));
                if (!(q.q(i, j) == q.q(j, k) * q.q(i, -j) * q.q(j, -k)))
                    return fail(i, j, "q_ij = q_jk q_i-j q_j-k", q.q(i, j),
                                q.q(j, k) * q.q(i, -j) * q.q(j, -k));
                // side condition of the M-algebra
                if (!(q.q(i, j) * q.q(-i, j) == q.q(j, k) * q.q(j, -k)))
                    return fail(i, j, "q_ij q_-ij = q_jk q_j-k",
                                q.q(i, j) * q.q(-i, j),
                                q.q(j, k) * q.q(j, -k));
            }
        }
    }
    return VerificationReport::pass("q-constraints", "J=" + q.j().str(),
                                    "all index tuples checked");
}

} // namespace bellmat
