#include "bellmat/ncalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace bellmat {

namespace {

// Picks the cheap unit inverse when possible, the Galois norm otherwise.
PhaseScalar scalar_inv(const PhaseScalar& s) {
    if (s.is_single_term()) return s.inverse();
    return s.field_inverse();
}

PhaseScalar eps_scalar(HalfInt l) { return PhaseScalar::integer(l.epsilon()); }

} // namespace

std::string family_str(GenFamily f) {
    switch (f) {
    case GenFamily::T: return "T";
    case GenFamily::Ttilde: return "Tt";
    case GenFamily::Lplus: return "L+";
    case GenFamily::Lminus: return "L-";
    case GenFamily::Xcoord: return "x";
    case GenFamily::XiForm: return "xi";
    }
    return "?";
}

std::string GenSymbol::str() const {
    std::string out = family_str(family) + "(" + i.str();
    if (has_column()) out += "," + j.str();
    out += ")";
    return out;
}

bool gen_less(const GenSymbol& a, const GenSymbol& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.i != b.i) return b.i < a.i;
    return b.j < a.j;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) continue;
        return gen_less(a[k], b[k]);
    }
    return false;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out += " ";
        out += w[k].str();
    }
    return out;
}

NCPoly NCPoly::mono(const GenSymbol& g, const PhaseScalar& c) {
    return mono(Word{g}, c);
}

NCPoly NCPoly::mono(Word w, const PhaseScalar& c) {
    NCPoly p;
    p.add_term(std::move(w), c);
    return p;
}

void NCPoly::add_term(Word w, const PhaseScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly out;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(std::move(w), ca * cb);
        }
    }
    return out;
}

NCPoly NCPoly::scaled(const PhaseScalar& c) const {
    NCPoly out;
    if (c.is_zero()) return out;
    for (const auto& [w, s] : terms_) out.add_term(w, s * c);
    return out;
}

NCPoly NCPoly::substituted(const std::map<GenSymbol, NCPoly, GenLess>& map) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
        NCPoly prod = NCPoly::mono(Word{}, c);
        for (const GenSymbol& g : w) {
            auto it = map.find(g);
            prod = it == map.end() ? prod * NCPoly::mono(g) : prod * it->second;
        }
        out = out + prod;
    }
    return out;
}

NCPoly NCPoly::instantiated(const std::map<SymbolId, int>& powers) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
        PhaseScalar s = c;
        for (const auto& [id, p] : powers)
            s = s.substitute(id, PhaseScalar::zeta8(p));
        out.add_term(w, s);
    }
    return out;
}

std::set<SymbolId> NCPoly::symbols() const {
    std::set<SymbolId> out;
    for (const auto& [w, c] : terms_) out.merge(c.symbols());
    return out;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ") " + word_str(w);
    }
    return out;
}

std::optional<PhaseScalar> proportionality(const NCPoly& a, const NCPoly& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero()
                   ? std::optional<PhaseScalar>(PhaseScalar::one())
                   : std::nullopt;
    if (a.terms().size() != b.terms().size()) return std::nullopt;
    std::optional<PhaseScalar> ratio;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return std::nullopt;
        PhaseScalar r = ia->second * scalar_inv(ib->second);
        if (!ratio)
            ratio = r;
        else if (!(*ratio == r))
            return std::nullopt;
    }
    return ratio;
}

std::set<GenFamily> RelationSet::families() const {
    std::set<GenFamily> out;
    for (const NCPoly& p : relations)
        for (const auto& [w, c] : p.terms())
            for (const GenSymbol& g : w) out.insert(g.family);
    return out;
}

std::set<SymbolId> RelationSet::symbols() const {
    std::set<SymbolId> out;
    for (const NCPoly& p : relations) out.merge(p.symbols());
    return out;
}

namespace {

// Entry of M(G (x) G') - (G' (x) G)M at row (r1,r2), column (c1,c2) where
// G, G' pick generator families fa, fb left of M and fc, fd right of it.
// Covers the TT and same-sign LL routes (fa=fb=fc=fd) and the off-diagonal
// part of the mixed route.
NCPoly conjugation_entry(const QTable& q, GenFamily fa, GenFamily fb,
                         GenFamily fc, GenFamily fd, HalfInt r1, HalfInt r2,
                         HalfInt c1, HalfInt c2) {
    NCPoly out;
    out.add_term({GenSymbol{fa, -r1, c1}, GenSymbol{fb, -r2, c2}},
                 eps_scalar(r1) * q.q(r1, r2));
    out.add_term({GenSymbol{fc, r1, -c1}, GenSymbol{fd, r2, -c2}},
                 -(eps_scalar(-c1) * q.q(-c1, -c2)));
    return out;
}

} // namespace

NCPoly rtt_entry(const QTable& q, HalfInt r1, HalfInt r2, HalfInt c1,
                 HalfInt c2) {
    return conjugation_entry(q, GenFamily::T, GenFamily::T, GenFamily::T,
                             GenFamily::T, r1, r2, c1, c2);
}

NCPoly mtt_pattern(const QTable& q, HalfInt i1, HalfInt i2, HalfInt j1,
                   HalfInt j2) {
    NCPoly out;
    out.add_term({GenSymbol::t(i1, -i2), GenSymbol::t(j1, -j2)},
                 PhaseScalar::one());
    out.add_term({GenSymbol::t(-i1, i2), GenSymbol::t(-j1, j2)},
                 eps_scalar(i1) * eps_scalar(i2) * q.q(i1, j1) * q.q(i2, j2));
    return out;
}

RelationSet extract_rtt(const QTable& q) {
    RelationSet rs;
    rs.name = "rtt J=" + q.j().str();
    const auto labels = q.labels();
    for (HalfInt r1 : labels)
        for (HalfInt r2 : labels)
            for (HalfInt c1 : labels)
                for (HalfInt c2 : labels) {
                    NCPoly p = rtt_entry(q, r1, r2, c1, c2);
                    if (!p.is_zero()) rs.relations.push_back(std::move(p));
                }
    return rs;
}

VerificationReport check_mtt_pattern(const QTable& q) {
    const std::string params = "J=" + q.j().str();
    const auto labels = q.labels();
    long count = 0;
    for (HalfInt r1 : labels)
        for (HalfInt r2 : labels)
            for (HalfInt c1 : labels)
                for (HalfInt c2 : labels) {
                    NCPoly entry = rtt_entry(q, r1, r2, c1, c2);
                    // Regrouped pattern indices (i1,i2,j1,j2) = (r1,c1,r2,c2).
                    NCPoly pattern = mtt_pattern(q, r1, c1, r2, c2);
                    PhaseScalar unit = eps_scalar(c1) * q.q(-c1, -c2);
                    if (entry == pattern.scaled(unit)) {
                        ++count;
                        continue;
                    }
                    EntryWitness w;
                    w.row = count;
                    w.col = 0;
                    w.lhs = entry.str();
                    w.rhs = pattern.scaled(unit).str();
                    std::ostringstream os;
                    os << "entry (" << r1.str() << "," << r2.str() << "),("
                       << c1.str() << "," << c2.str() << ")";
                    return VerificationReport::fail("mtt-pattern", w, params,
                                                    os.str());
                }
    return VerificationReport::pass("mtt-pattern", params,
                                    std::to_string(count) +
                                        " entries match the two-term pattern");
}

RelationSet ttilde_relations(const QTable& q) {
    const auto labels = q.labels();
    for (HalfInt l : labels)
        for (HalfInt m : labels)
            if (!q.q(l, m).is_one())
                throw std::invalid_argument(
                    "ttilde_relations needs q == 1, got q(" + l.str() + "," +
                    m.str() + ") = " + q.q(l, m).str());

    // T_{kl} = (eps(k) Ttilde_{kl} + Ttilde_{-k,-l}) / 2, inverse of the
    // mixing Ttilde_{kl} = eps(k) T_{kl} + T_{-k,-l}.
    std::map<GenSymbol, NCPoly, GenLess> inverse;
    const PhaseScalar half = PhaseScalar::rational(1, 2);
    for (HalfInt k : labels)
        for (HalfInt l : labels) {
            NCPoly p = NCPoly::mono(GenSymbol::ttilde(k, l),
                                    eps_scalar(k) * half) +
                       NCPoly::mono(GenSymbol::ttilde(-k, -l), half);
            inverse.emplace(GenSymbol::t(k, l), std::move(p));
        }

    RelationSet rs;
    rs.name = "ttilde J=" + q.j().str();
    const PhaseScalar two = PhaseScalar::integer(2);
    for (const NCPoly& p : extract_rtt(q).relations) {
        NCPoly sub = p.substituted(inverse).scaled(two);
        if (!sub.is_zero()) rs.relations.push_back(std::move(sub));
    }
    return rs;
}

NCPoly rll_pm_entry(const QTable& q, bool plus, HalfInt r1, HalfInt r2,
                    HalfInt c1, HalfInt c2) {
    GenFamily f = plus ? GenFamily::Lplus : GenFamily::Lminus;
    return conjugation_entry(q, f, f, f, f, r1, r2, c1, c2);
}

NCPoly rll_mixed_entry(const QTable& q, HalfInt r1, HalfInt r2, HalfInt c1,
                       HalfInt c2) {
    NCPoly out;
    out.add_term({GenSymbol::lplus(r1, c1), GenSymbol::lminus(r2, c2)},
                 PhaseScalar::one());
    out.add_term({GenSymbol::lminus(r1, c1), GenSymbol::lplus(r2, c2)},
                 -PhaseScalar::one());
    out.add_term({GenSymbol::lplus(-r1, c1), GenSymbol::lminus(-r2, c2)},
                 eps_scalar(r1) * q.q(r1, r2));
    out.add_term({GenSymbol::lminus(r1, -c1), GenSymbol::lplus(r2, -c2)},
                 -(eps_scalar(-c1) * q.q(-c1, -c2)));
    return out;
}

RelationSet extract_rll(const QTable& q, bool include_quotient) {
    RelationSet rs;
    rs.name = "rll J=" + q.j().str();
    const auto labels = q.labels();
    for (int sign = 0; sign < 2; ++sign)
        for (HalfInt r1 : labels)
            for (HalfInt r2 : labels)
                for (HalfInt c1 : labels)
                    for (HalfInt c2 : labels) {
                        NCPoly p =
                            rll_pm_entry(q, sign == 0, r1, r2, c1, c2);
                        if (!p.is_zero()) rs.relations.push_back(std::move(p));
                    }
    for (HalfInt r1 : labels)
        for (HalfInt r2 : labels)
            for (HalfInt c1 : labels)
                for (HalfInt c2 : labels) {
                    NCPoly p = rll_mixed_entry(q, r1, r2, c1, c2);
                    if (!p.is_zero()) rs.relations.push_back(std::move(p));
                }
    if (include_quotient) {
        for (HalfInt r1 : labels)
            for (HalfInt r2 : labels)
                for (HalfInt c1 : labels)
                    for (HalfInt c2 : labels) {
                        NCPoly p;
                        p.add_term({GenSymbol::lplus(r1, c1),
                                    GenSymbol::lminus(r2, c2)},
                                   PhaseScalar::one());
                        p.add_term({GenSymbol::lminus(r1, c1),
                                    GenSymbol::lplus(r2, c2)},
                                   -PhaseScalar::one());
                        rs.relations.push_back(std::move(p));
                    }
        rs.name += " quotient";
    }
    return rs;
}

RelationSet ncgeo_relations(const QTable& q, const Rational& mu) {
    RelationSet rs;
    std::ostringstream name;
    name << "ncgeo J=" << q.j().str() << " mu=" << mu;
    rs.name = name.str();
    const auto labels = q.labels();
    const PhaseScalar i_unit = PhaseScalar::i_unit();
    const PhaseScalar mid = PhaseScalar::rational(mu / 2 - 1);
    const PhaseScalar halfmu = PhaseScalar::rational(mu / 2);
    for (HalfInt i : labels)
        for (HalfInt j : labels) {
            PhaseScalar phase = i_unit * eps_scalar(i) * q.q(i, j);
            NCPoly xx;
            xx.add_term({GenSymbol::x(i), GenSymbol::x(j)}, PhaseScalar::one());
            xx.add_term({GenSymbol::x(-i), GenSymbol::x(-j)}, -phase);
            rs.relations.push_back(std::move(xx));
        }
    for (HalfInt i : labels)
        for (HalfInt j : labels) {
            PhaseScalar phase = i_unit * eps_scalar(i) * q.q(i, j);
            NCPoly ff;
            ff.add_term({GenSymbol::xi(i), GenSymbol::xi(j)},
                        PhaseScalar::one());
            ff.add_term({GenSymbol::xi(-i), GenSymbol::xi(-j)}, phase);
            rs.relations.push_back(std::move(ff));
        }
    for (HalfInt i : labels)
        for (HalfInt j : labels) {
            PhaseScalar phase = i_unit * eps_scalar(i) * q.q(i, j);
            NCPoly xf;
            xf.add_term({GenSymbol::x(i), GenSymbol::xi(j)},
                        PhaseScalar::one());
            xf.add_term({GenSymbol::xi(i), GenSymbol::x(j)}, -mid);
            xf.add_term({GenSymbol::xi(-i), GenSymbol::x(-j)},
                        -(halfmu * phase));
            rs.relations.push_back(std::move(xf));
        }
    return rs;
}

RelationSet rescale_generator(const RelationSet& rs, const GenSymbol& g,
                              const PhaseScalar& unit) {
    std::map<GenSymbol, NCPoly, GenLess> map;
    map.emplace(g, NCPoly::mono(g, unit));
    RelationSet out;
    out.name = rs.name + " rescaled " + g.str();
    for (const NCPoly& p : rs.relations) {
        NCPoly sub = p.substituted(map);
        if (!sub.is_zero()) out.relations.push_back(std::move(sub));
    }
    return out;
}

namespace {

using ScalarRow = std::vector<PhaseScalar>;

// Column basis shared by both sides of a span comparison.
std::map<Word, long, WordLess> column_index(const RelationSet& a,
                                            const RelationSet& b) {
    std::map<Word, long, WordLess> idx;
    auto visit = [&idx](const RelationSet& rs) {
        for (const NCPoly& p : rs.relations)
            for (const auto& [w, c] : p.terms()) idx.emplace(w, 0);
    };
    visit(a);
    visit(b);
    long k = 0;
    for (auto& [w, i] : idx) i = k++;
    return idx;
}

std::vector<ScalarRow> coefficient_rows(const RelationSet& rs,
                                        const std::map<Word, long, WordLess>& idx,
                                        const std::map<SymbolId, int>& powers) {
    std::vector<ScalarRow> rows;
    rows.reserve(rs.relations.size());
    for (const NCPoly& p : rs.relations) {
        ScalarRow row(idx.size(), PhaseScalar::zero());
        const NCPoly pinned = p.instantiated(powers);
        for (const auto& [w, c] : pinned.terms()) row[idx.at(w)] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

// Reduced row echelon form over Q(zeta8); zero rows are dropped, so the
// result is a canonical basis of the row span.
std::vector<ScalarRow> rref(std::vector<ScalarRow> rows) {
    if (rows.empty()) return rows;
    const long cols = static_cast<long>(rows[0].size());
    long pivot = 0;
    for (long c = 0; c < cols && pivot < static_cast<long>(rows.size()); ++c) {
        long pr = -1;
        for (long r = pivot; r < static_cast<long>(rows.size()); ++r)
            if (!rows[r][c].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[pivot], rows[pr]);
        const PhaseScalar inv = scalar_inv(rows[pivot][c]);
        for (long c2 = c; c2 < cols; ++c2)
            rows[pivot][c2] = rows[pivot][c2] * inv;
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == pivot || rows[r][c].is_zero()) continue;
            const PhaseScalar f = rows[r][c];
            for (long c2 = c; c2 < cols; ++c2)
                rows[r][c2] = rows[r][c2] - f * rows[pivot][c2];
        }
        ++pivot;
    }
    rows.resize(pivot);
    return rows;
}

// Exact probes: q = 1, all phases equal, and two staggered power patterns.
std::vector<std::map<SymbolId, int>> probe_powers(const std::set<SymbolId>& syms) {
    std::vector<std::map<SymbolId, int>> probes;
    if (syms.empty()) {
        probes.push_back({});
        return probes;
    }
    auto build = [&syms](int base, int step) {
        std::map<SymbolId, int> m;
        int k = 0;
        for (SymbolId s : syms) m[s] = (base + step * k++) % 8;
        return m;
    };
    probes.push_back(build(0, 0));
    probes.push_back(build(1, 0));
    probes.push_back(build(1, 2));
    probes.push_back(build(3, 5));
    return probes;
}

std::string probe_str(const std::map<SymbolId, int>& powers) {
    if (powers.empty()) return "symbol-free";
    std::string out;
    for (const auto& [id, p] : powers) {
        if (!out.empty()) out += ", ";
        out += "u_" + HalfInt::from_twice(id).str() + "=zeta8^" +
               std::to_string(p);
    }
    return out;
}

Eigen::MatrixXcd numeric_rows(const RelationSet& rs,
                              const std::map<Word, long, WordLess>& idx,
                              const PhaseAssignment& phi) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(
        static_cast<long>(rs.relations.size()), static_cast<long>(idx.size()));
    for (long r = 0; r < static_cast<long>(rs.relations.size()); ++r)
        for (const auto& [w, c] : rs.relations[r].terms())
            m(r, idx.at(w)) = c.evaluate(phi);
    return m;
}

long numeric_rank(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
    qr.setThreshold(1e-9);
    return qr.rank();
}

} // namespace

long span_rank(const RelationSet& rs, const std::map<SymbolId, int>& powers) {
    std::map<SymbolId, int> full = powers;
    for (SymbolId s : rs.symbols()) full.emplace(s, 0);
    RelationSet empty;
    auto idx = column_index(rs, empty);
    return static_cast<long>(rref(coefficient_rows(rs, idx, full)).size());
}

bool span_contains(const RelationSet& rs, const NCPoly& p) {
    RelationSet probe;
    probe.relations.push_back(p);
    auto idx = column_index(rs, probe);
    std::set<SymbolId> syms = rs.symbols();
    syms.merge(p.symbols());
    for (const auto& powers : probe_powers(syms)) {
        auto ext = coefficient_rows(rs, idx, powers);
        const long base = static_cast<long>(rref(ext).size());
        auto extra = coefficient_rows(probe, idx, powers);
        ext.insert(ext.end(), extra.begin(), extra.end());
        if (static_cast<long>(rref(std::move(ext)).size()) != base)
            return false;
    }
    return true;
}

VerificationReport span_equal(const RelationSet& a, const RelationSet& b) {
    const std::string params = a.name + " vs " + b.name;
    if (!a.relations.empty() && !b.relations.empty() &&
        a.families() != b.families())
        throw std::invalid_argument(
            "span_equal: relation sets draw on different generator families");

    const auto idx = column_index(a, b);
    std::set<SymbolId> syms = a.symbols();
    syms.merge(b.symbols());

    const auto probes = probe_powers(syms);
    long rank = 0;
    for (const auto& powers : probes) {
        auto ra = rref(coefficient_rows(a, idx, powers));
        auto rb = rref(coefficient_rows(b, idx, powers));
        if (ra == rb) {
            rank = static_cast<long>(ra.size());
            continue;
        }
        EntryWitness w;
        w.lhs = "rank " + std::to_string(ra.size());
        w.rhs = "rank " + std::to_string(rb.size());
        const long n = static_cast<long>(std::min(ra.size(), rb.size()));
        for (long r = 0; r < n; ++r) {
            if (ra[r] == rb[r]) continue;
            for (long c = 0; c < static_cast<long>(idx.size()); ++c)
                if (!(ra[r][c] == rb[r][c])) {
                    w.row = r;
                    w.col = c;
                    w.lhs = ra[r][c].str();
                    w.rhs = rb[r][c].str();
                    break;
                }
            break;
        }
        return VerificationReport::fail("span-equal", w, params,
                                        "echelon forms differ at " +
                                            probe_str(powers));
    }

    // Random angles guard against coincidences at the special phase values.
    std::mt19937_64 rng(0x5eed2026ULL);
    std::uniform_real_distribution<double> dist(0.0, 6.283185307179586);
    for (int trial = 0; trial < 3; ++trial) {
        PhaseAssignment phi;
        for (SymbolId s : syms) phi[s] = dist(rng);
        Eigen::MatrixXcd ma = numeric_rows(a, idx, phi);
        Eigen::MatrixXcd mb = numeric_rows(b, idx, phi);
        Eigen::MatrixXcd stacked(ma.rows() + mb.rows(), ma.cols());
        stacked << ma, mb;
        const long rka = numeric_rank(ma);
        const long rkb = numeric_rank(mb);
        const long rks = numeric_rank(stacked);
        if (rka == rkb && rkb == rks) continue;
        EntryWitness w;
        w.row = trial;
        w.lhs = "ranks " + std::to_string(rka) + "/" + std::to_string(rkb);
        w.rhs = "stacked " + std::to_string(rks);
        return VerificationReport::fail("span-equal", w, params,
                                        "numeric rank mismatch");
    }

    return VerificationReport::pass(
        "span-equal", params,
        "rank " + std::to_string(rank) + " agrees over " +
            std::to_string(probes.size()) + " exact probes, 3 numeric samples");
}

} // namespace bellmat
