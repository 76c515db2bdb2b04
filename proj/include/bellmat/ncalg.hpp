#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bellmat/bell.hpp"
#include "bellmat/report.hpp"

namespace bellmat {

/// Generator families of the noncommutative algebras extracted from the
/// deformed almost-complex structure.
enum class GenFamily { T, Ttilde, Lplus, Lminus, Xcoord, XiForm };

std::string family_str(GenFamily f);

/// One noncommutative generator. T, Ttilde and L generators carry a
/// (row, column) label pair; the coordinate generators x and xi carry a
/// single label in `i` with `j` fixed at zero.
struct GenSymbol {
    GenFamily family = GenFamily::T;
    HalfInt i{};
    HalfInt j{};

    static GenSymbol t(HalfInt i, HalfInt j) { return {GenFamily::T, i, j}; }
    static GenSymbol ttilde(HalfInt i, HalfInt j) {
        return {GenFamily::Ttilde, i, j};
    }
    static GenSymbol lplus(HalfInt i, HalfInt j) {
        return {GenFamily::Lplus, i, j};
    }
    static GenSymbol lminus(HalfInt i, HalfInt j) {
        return {GenFamily::Lminus, i, j};
    }
    static GenSymbol x(HalfInt i) { return {GenFamily::Xcoord, i, HalfInt(0)}; }
    static GenSymbol xi(HalfInt i) { return {GenFamily::XiForm, i, HalfInt(0)}; }

    bool has_column() const {
        return family != GenFamily::Xcoord && family != GenFamily::XiForm;
    }
    std::string str() const;

    friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

/// Generator order: family first, then labels descending, matching the
/// row-major layout of the matrices the generators came from.
bool gen_less(const GenSymbol& a, const GenSymbol& b);

struct GenLess {
    bool operator()(const GenSymbol& a, const GenSymbol& b) const {
        return gen_less(a, b);
    }
};

/// A word is a product of generators; the empty word is the unit.
using Word = std::vector<GenSymbol>;

/// Words are ordered by length first, then letter by letter.
bool word_less(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return word_less(a, b);
    }
};

std::string word_str(const Word& w);

/// Polynomial in noncommuting generators with PhaseScalar coefficients.
/// Terms with zero coefficient are erased on the fly, so the term map is
/// a canonical form and operator== decides exact equality.
class NCPoly {
  public:
    using TermMap = std::map<Word, PhaseScalar, WordLess>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly mono(const GenSymbol& g,
                       const PhaseScalar& c = PhaseScalar::one());
    static NCPoly mono(Word w, const PhaseScalar& c = PhaseScalar::one());

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Word w, const PhaseScalar& c);

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    /// Noncommutative product; words concatenate.
    NCPoly operator*(const NCPoly& o) const;
    NCPoly scaled(const PhaseScalar& c) const;

    bool operator==(const NCPoly&) const = default;

    /// Replaces each occurrence of a mapped generator by the given
    /// polynomial and expands. Unmapped generators stay themselves.
    NCPoly substituted(const std::map<GenSymbol, NCPoly, GenLess>& map) const;

    /// Substitutes unit phases u_l = zeta8^{powers[l]} in every coefficient.
    /// Symbols absent from the map are left alone.
    NCPoly instantiated(const std::map<SymbolId, int>& powers) const;

    /// Union of the symbol ids appearing in the coefficients.
    std::set<SymbolId> symbols() const;

    std::string str() const;

  private:
    TermMap terms_;
};

/// If a == s * b for a single scalar s, returns s; otherwise nullopt.
/// Coefficients must be invertible (units or symbol-free).
std::optional<PhaseScalar> proportionality(const NCPoly& a, const NCPoly& b);

/// A list of homogeneous quadratic relations, each read as "poly = 0".
struct RelationSet {
    std::string name;
    std::vector<NCPoly> relations;

    long size() const { return static_cast<long>(relations.size()); }
    /// Union of generator families over all words.
    std::set<GenFamily> families() const;
    /// Union of phase symbol ids over all coefficients.
    std::set<SymbolId> symbols() const;
};

/// Entry of M(T (x) T) - (T (x) T)M at row (r1,r2), column (c1,c2) under
/// the entrywise Kronecker convention (A (x) B)_{ij,kl} = A_{ik} B_{jl}:
///   eps(r1) q_{r1 r2} T_{-r1,c1} T_{-r2,c2}
///     - eps(-c1) q_{-c1,-c2} T_{r1,-c1} T_{r2,-c2}.
NCPoly rtt_entry(const QTable& q, HalfInt r1, HalfInt r2, HalfInt c1,
                 HalfInt c2);

/// Two-term pattern the entry above reduces to after regrouping the
/// indices as (i1,i2,j1,j2) = (r1,c1,r2,c2):
///   T_{i1,-i2} T_{j1,-j2}
///     + eps(i1) eps(i2) q_{i1 j1} q_{i2 j2} T_{-i1,i2} T_{-j1,j2}.
NCPoly mtt_pattern(const QTable& q, HalfInt i1, HalfInt i2, HalfInt j1,
                   HalfInt j2);

/// All entries of M(T (x) T) - (T (x) T)M, identically zero ones dropped.
RelationSet extract_rtt(const QTable& q);

/// Confirms every extracted relation is a unit multiple of the regrouped
/// two-term pattern, with the unit eps(i2) q_{-i2,-j2}.
VerificationReport check_mtt_pattern(const QTable& q);

/// Rewrites the relation set at q == 1 in the mixed generators
///   Ttilde_{kl} = eps(k) T_{kl} + T_{-k,-l}
/// by substituting the inverse T_{kl} = (eps(k) Ttilde_{kl} +
/// Ttilde_{-k,-l}) / 2 into extract_rtt. Throws std::invalid_argument
/// unless every q_{lm} equals one.
RelationSet ttilde_relations(const QTable& q);

/// Same-sign entry of M(L (x) L) - (L (x) L)M for L+ or L-.
NCPoly rll_pm_entry(const QTable& q, bool plus, HalfInt r1, HalfInt r2,
                    HalfInt c1, HalfInt c2);

/// Mixed entry of L+ (x) L- - L- (x) L+ + M(L+ (x) L-) - (L- (x) L+)M.
NCPoly rll_mixed_entry(const QTable& q, HalfInt r1, HalfInt r2, HalfInt c1,
                       HalfInt c2);

/// The L+/L+, L-/L- and mixed families together. With include_quotient
/// the commutation family L+_{ij} L-_{kl} = L-_{ij} L+_{kl} is appended.
RelationSet extract_rll(const QTable& q, bool include_quotient = false);

/// Coordinate and one-form relations of the associated noncommutative
/// geometry at deformation parameter mu:
///   x_i x_j   = i eps(i) q_{ij} x_{-i} x_{-j}
///   xi_i xi_j = -i eps(i) q_{ij} xi_{-i} xi_{-j}
///   x_i xi_j  = (mu/2 - 1) xi_i x_j + (mu/2) i eps(i) q_{ij} xi_{-i} x_{-j}
RelationSet ncgeo_relations(const QTable& q, const Rational& mu);

/// Substitutes g -> unit * g in every relation.
RelationSet rescale_generator(const RelationSet& rs, const GenSymbol& g,
                              const PhaseScalar& unit);

/// Rank of the coefficient matrix over Q(zeta8) after instantiating the
/// unit phases at the given zeta8 powers (symbols absent from the map
/// default to power zero).
long span_rank(const RelationSet& rs, const std::map<SymbolId, int>& powers = {});

/// True iff p lies in the linear span of the set under every probe
/// instantiation used by span_equal.
bool span_contains(const RelationSet& rs, const NCPoly& p);

/// Decides whether two relation sets span the same space of quadratics.
/// Exact reduced row echelon forms over Q(zeta8) are compared at several
/// zeta8-power instantiations of the unit phases, then numeric ranks at
/// random angles guard the symbolic reduction. Throws
/// std::invalid_argument when the sets draw on different generator
/// families.
VerificationReport span_equal(const RelationSet& a, const RelationSet& b);

} // namespace bellmat
