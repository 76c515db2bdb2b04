#pragma once

#include <map>
#include <vector>

#include "bellmat/bell.hpp"
#include "bellmat/report.hpp"
#include "bellmat/yangbaxter.hpp"

namespace bellmat {

/// The two eigenvalues of every Bell-family matrix: e^{-i pi/4} and e^{i pi/4}.
PhaseScalar lambda_plus();
PhaseScalar lambda_minus();

/// Spectral projectors P+- = (I +- iM)/2 of B onto lambda+-.
struct ProjectorPair {
    Operator p_plus;
    Operator p_minus;
};

/// B^2 - sqrt(2) B + I = 0, equivalently (B - lambda+)(B - lambda-) = 0.
VerificationReport characteristic_check(const Operator& b,
                                        std::string params = "");

/// Throws std::invalid_argument unless m^2 = -I.
ProjectorPair projectors(const Operator& m);

/// P+ + P- = I, idempotence, orthogonality, exact trace dim/2 each.
VerificationReport check_projector_invariants(const ProjectorPair& p,
                                              std::string params = "");

Operator reconstruct_b(const ProjectorPair& p);
Operator reconstruct_b_inverse(const ProjectorPair& p);

/// (lambda+ + lambda- x) P+ + (lambda- + lambda+ x) P-; equals B + x B^{-1}.
ParametricOperator projector_rx(const ProjectorPair& p);

/// Diagonalizing frame: D = (I + iN)/sqrt(2) with N Hermitian, N^2 = I and
/// NM = -MN, so that D B D^dag = (I + i NM)/sqrt(2) is diagonal.
struct Diagonalizer {
    /// Sign choice keyed by twice-label; empty when N was given explicitly.
    std::map<int, int> f;
    Operator n_matrix;
    Operator d_matrix;
};

/// The sign choice used throughout: f(i) = epsilon(-i) for i > 0, extended
/// evenly, which is -1 on every label.
std::map<int, int> canonical_f(HalfInt j);

/// N from the sign pattern: entry f(i) q(i,j) at row (i,j), column (-i,-j).
/// f must be even in the label and valued in {-1, +1}.
Diagonalizer build_diagonalizer(const QTable& q, const std::map<int, int>& f);
Diagonalizer build_diagonalizer(const QTable& q);

/// Explicit frame; validates N^dag = N, N^2 = I, NM = -MN and throws
/// std::invalid_argument otherwise.
Diagonalizer diagonalizer_from_n(const Operator& m, const Operator& n);

/// D b D^dag.
Operator conjugate_by_d(const Diagonalizer& dg, const Operator& b);

/// Passes iff D b D^dag is diagonal with entries in {zeta8, zeta8^-1} split
/// half and half; with expect_canonical_order also requires the first dim/2
/// entries to equal zeta8 = (1+i)/sqrt(2).
VerificationReport check_diagonalization(const Diagonalizer& dg,
                                         const Operator& b,
                                         bool expect_canonical_order,
                                         std::string params = "");

/// Characteristic equation, projector identities, reconstruction, projector
/// Yang-Baxterization and canonical diagonalization for one Bell family.
std::vector<VerificationReport> spectral_suite(const QTable& q);

} // namespace bellmat
