#pragma once

#include <stdexcept>
#include <vector>

#include "bellmat/linalg.hpp"
#include "bellmat/report.hpp"
#include "bellmat/scalar.hpp"

namespace bellmat {

/// Requested matrix family exists in the literature but is outside what this
/// library constructs (e.g. the mixed J1 != J2 type).
class UnsupportedKindError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deformation parameters q(l,m) = u_l * u_m built from one unit phase u_l
/// per positive label l = J, J-1, ..., 1/2, with u_{-l} = u_l^{-1}. An
/// optional angle assignment supports numeric evaluation of symbolic tables.
class QTable {
public:
    QTable() = default;

    /// u_l kept as formal symbols; every identity stays exact.
    static QTable symbolic(HalfInt j);
    /// u_l = zeta8^{powers[k]}, ordered l = J down to 1/2; stays in Q(zeta8).
    static QTable zeta8_powers(HalfInt j, const std::vector<int>& powers);
    /// Symbolic table carrying angles phi_l (ordered J down to 1/2) for
    /// numeric evaluation.
    static QTable angles(HalfInt j, const std::vector<double>& phi);
    /// All u_l = 1 (the undeformed case).
    static QTable trivial(HalfInt j);

    HalfInt j() const { return j_; }
    bool is_symbolic() const { return symbolic_; }
    const PhaseAssignment& assignment() const { return phi_; }

    /// u_l for any nonzero half-odd |l| <= J.
    PhaseScalar u(HalfInt l) const;
    /// q(l,m) = u_l * u_m.
    PhaseScalar q(HalfInt l, HalfInt m) const;

    /// All labels J, J-1, ..., -J (half-odd, no zero).
    std::vector<HalfInt> labels() const;
    /// Positive labels J down to 1/2.
    std::vector<HalfInt> positive_labels() const;

private:
    HalfInt j_{1};
    bool symbolic_ = false;
    std::map<int, PhaseScalar> u_; // key: twice the positive label
    PhaseAssignment phi_;
};

/// One Bell family: either the plain 2^N matrix generating N-object GHZ
/// states, or the deformed JJ type acting on spin-J (x) spin-J. M and B are
/// built once and cached; B = (I + M)/sqrt(2) always.
struct BellFamily {
    enum class Kind { plain, jj };

    Kind kind = Kind::plain;
    int n_qubits = 0; ///< plain only
    QTable qtable;    ///< jj only
    Operator M;
    Operator B;

    static BellFamily plain(int n_qubits);
    static BellFamily jj(const QTable& q);
    /// Mixed-type request; throws UnsupportedKindError when j1 != j2.
    static BellFamily generalized(HalfInt j1, HalfInt j2, const QTable& q);

    long dim() const { return M.rows(); }
    /// Local dimension d with M acting on V (x) V, d^2 = dim. For plain
    /// families this requires even N.
    long local_dim() const;
    std::string params_str() const;
};

/// k[m_1..m_N] = 2^{N-1} + 1/2 - sum 2^{N-i} m_i (1-based), with the
/// composite label mu = sum 2^{N-i} m_i.
struct LabelMapResult {
    long k;
    HalfInt mu;
};
LabelMapResult label_map(const std::vector<HalfInt>& m);
/// Inverse: the qubit word (entries +-1/2) of basis index k inside 2^N.
std::vector<HalfInt> label_map_inverse(long k, int n_qubits);

/// Plain almost-complex structure on N qubits: anti-diagonal, +1 on the top
/// half and -1 on the bottom half.
Operator build_M_plain(int n_qubits);
Operator build_B_plain(int n_qubits);
/// Same matrix assembled as i*sigma_y (x) sigma_x^{(N-1)}; independent
/// construction used as an oracle against build_M_plain.
Operator build_M_pauli(int n_qubits);

/// Deformed structures on spin-J (x) spin-J: row (i,j) holds eps(i)q_{ij} at
/// column (-i,-j).
Operator build_M_jj(const QTable& q);
Operator build_B_jj(const QTable& q);

/// The variant with entries eps(i)B_{ij,kl}; kept as a negative control (it
/// is not a braid representation).
Operator build_epsilon_variant(const Operator& B);

/// All 2^N GHZ states, entry k (0-based) = B|Phi_{k+1}>.
std::vector<StateVector> ghz_generate(int n_qubits);

/// Exact verification of every constraint the deformation table must obey:
/// q_{ij}q_{-i-j} = 1, unitarity conj(q)q = 1, symmetry, the three-term
/// products, and q_{ij}q_{-ij} = q_{jk}q_{j-k}, over all index tuples.
VerificationReport check_q_constraints(const QTable& q);

} // namespace bellmat
