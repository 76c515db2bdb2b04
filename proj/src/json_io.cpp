#include "bellmat/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <tuple>

namespace bellmat {

namespace {

bool fits_int64(const BigInt& n) {
    return n >= std::numeric_limits<std::int64_t>::min() &&
           n <= std::numeric_limits<std::int64_t>::max();
}

Json bigint_to_json(const BigInt& n) {
    if (fits_int64(n)) return Json(n.convert_to<std::int64_t>());
    return Json(n.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("integer field must be a number or a string");
}

Json rational_to_json(const Rational& r) {
    return Json::array({bigint_to_json(numerator(r)),
                        bigint_to_json(denominator(r))});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("coeff must be a [numerator, denominator] pair");
    BigInt den = bigint_from_json(j.at(1));
    if (den == 0) throw std::invalid_argument("coeff denominator is zero");
    return Rational(bigint_from_json(j.at(0)), den);
}

HalfInt parse_label(const std::string& s) {
    std::optional<HalfInt> l = HalfInt::parse(s);
    if (!l) throw std::invalid_argument("bad half-integer label: " + s);
    return *l;
}

Json umono_to_json(const UMonomial& m) {
    Json j = Json::object();
    for (const auto& [sym, e] : m.exp)
        j[HalfInt::from_twice(sym).str()] = e;
    return j;
}

UMonomial umono_from_json(const Json& j) {
    UMonomial m;
    for (const auto& [key, val] : j.items()) {
        HalfInt l = parse_label(key);
        if (l.twice <= 0 || l.twice % 2 == 0)
            throw std::invalid_argument("umono label must be a positive half-odd: " + key);
        int e = val.get<int>();
        if (e != 0) m.exp[l.twice] = e;
    }
    return m;
}

long positive_index(const Json& j, const char* field, long dim) {
    long k = j.at(field).get<long>();
    if (k < 1 || k > dim)
        throw std::invalid_argument(std::string(field) + " out of range");
    return k;
}

std::vector<long> factors_from_json(const Json& j, long dim) {
    std::vector<long> factors = j.at("factors").get<std::vector<long>>();
    long prod = 1;
    for (long f : factors) prod *= f;
    if (prod != dim)
        throw std::invalid_argument("factors do not multiply to dim");
    return factors;
}

Json matrix_header(long dim, const std::vector<long>& factors) {
    long prod = 1;
    for (long f : factors) prod *= f;
    if (prod != dim)
        throw std::invalid_argument("factors do not multiply to dim");
    Json j;
    j["dim"] = dim;
    j["factors"] = factors;
    j["entries"] = Json::array();
    return j;
}

} // namespace

Json scalar_to_json(const PhaseScalar& s) {
    Json j = Json::array();
    for (const auto& [key, coeff] : s.terms()) {
        Json term;
        term["coeff"] = rational_to_json(coeff);
        term["zeta8"] = key.zeta8;
        term["umono"] = umono_to_json(key.mono);
        j.push_back(std::move(term));
    }
    return j;
}

PhaseScalar scalar_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("scalar must be a term list");
    std::vector<std::tuple<Rational, int, UMonomial>> raw;
    raw.reserve(j.size());
    for (const Json& term : j)
        raw.emplace_back(rational_from_json(term.at("coeff")),
                         term.at("zeta8").get<int>(),
                         umono_from_json(term.value("umono", Json::object())));
    return PhaseScalar::from_terms(raw);
}

Json operator_to_json(const Operator& op, const std::vector<long>& factors) {
    if (op.rows() != op.cols())
        throw std::invalid_argument("matrix serialization requires a square operator");
    Json j = matrix_header(op.rows(), factors);
    for (const auto& [r, row] : op.data())
        for (const auto& [c, v] : row) {
            Json e;
            e["row"] = r + 1;
            e["col"] = c + 1;
            e["scalar"] = scalar_to_json(v);
            j["entries"].push_back(std::move(e));
        }
    return j;
}

OperatorPayload operator_from_json(const Json& j) {
    long dim = j.at("dim").get<long>();
    if (dim <= 0) throw std::invalid_argument("dim must be positive");
    OperatorPayload p{Operator(dim, dim), factors_from_json(j, dim)};
    for (const Json& e : j.at("entries")) {
        long r = positive_index(e, "row", dim);
        long c = positive_index(e, "col", dim);
        p.op.add(r - 1, c - 1, scalar_from_json(e.at("scalar")));
    }
    return p;
}

Json operator_to_numeric_json(const Operator& op, const std::vector<long>& factors,
                              const PhaseAssignment& phi) {
    if (op.rows() != op.cols())
        throw std::invalid_argument("matrix serialization requires a square operator");
    Json j = matrix_header(op.rows(), factors);
    for (const auto& [r, row] : op.data())
        for (const auto& [c, v] : row) {
            std::complex<double> z = v.evaluate(phi);
            Json e;
            e["row"] = r + 1;
            e["col"] = c + 1;
            e["scalar"] = Json{{"re", z.real()}, {"im", z.imag()}};
            j["entries"].push_back(std::move(e));
        }
    return j;
}

Eigen::MatrixXcd numeric_operator_from_json(const Json& j) {
    long dim = j.at("dim").get<long>();
    if (dim <= 0) throw std::invalid_argument("dim must be positive");
    factors_from_json(j, dim);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Json& e : j.at("entries")) {
        long r = positive_index(e, "row", dim);
        long c = positive_index(e, "col", dim);
        const Json& s = e.at("scalar");
        m(r - 1, c - 1) += std::complex<double>(s.at("re").get<double>(),
                                                s.at("im").get<double>());
    }
    return m;
}

Json state_to_json(const StateVector& v, const std::vector<long>& factors) {
    Json j = matrix_header(v.dim(), factors);
    for (const auto& [k, a] : v.amplitudes()) {
        Json e;
        e["row"] = k + 1;
        e["scalar"] = scalar_to_json(a);
        j["entries"].push_back(std::move(e));
    }
    return j;
}

StateVector state_from_json(const Json& j) {
    long dim = j.at("dim").get<long>();
    if (dim <= 0) throw std::invalid_argument("dim must be positive");
    factors_from_json(j, dim);
    StateVector v(dim);
    for (const Json& e : j.at("entries")) {
        long r = positive_index(e, "row", dim);
        v.add(r - 1, scalar_from_json(e.at("scalar")));
    }
    return v;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["check"] = r.check;
    j["params"] = r.params;
    j["passed"] = r.passed;
    if (r.witness) {
        j["witness"] = Json{{"row", r.witness->row},
                            {"col", r.witness->col},
                            {"lhs", r.witness->lhs},
                            {"rhs", r.witness->rhs}};
    } else {
        j["witness"] = nullptr;
    }
    j["detail"] = r.detail;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    const Json& w = j.at("witness");
    if (!w.is_null()) {
        r.witness = EntryWitness{w.at("row").get<long>(), w.at("col").get<long>(),
                                 w.at("lhs").get<std::string>(),
                                 w.at("rhs").get<std::string>()};
    }
    r.detail = j.at("detail").get<std::string>();
    return r;
}

std::string report_json_line(const VerificationReport& r) {
    return report_to_json(r).dump();
}

Json generator_to_json(const GenSymbol& g) {
    Json j;
    j["family"] = family_str(g.family);
    j["i"] = g.i.str();
    if (g.has_column()) j["j"] = g.j.str();
    return j;
}

namespace {

GenFamily family_from_str(const std::string& s) {
    if (s == "T") return GenFamily::T;
    if (s == "Tt") return GenFamily::Ttilde;
    if (s == "L+") return GenFamily::Lplus;
    if (s == "L-") return GenFamily::Lminus;
    if (s == "x") return GenFamily::Xcoord;
    if (s == "xi") return GenFamily::XiForm;
    throw std::invalid_argument("unknown generator family: " + s);
}

} // namespace

GenSymbol generator_from_json(const Json& j) {
    GenFamily fam = family_from_str(j.at("family").get<std::string>());
    HalfInt i = parse_label(j.at("i").get<std::string>());
    switch (fam) {
    case GenFamily::T: return GenSymbol::t(i, parse_label(j.at("j").get<std::string>()));
    case GenFamily::Ttilde:
        return GenSymbol::ttilde(i, parse_label(j.at("j").get<std::string>()));
    case GenFamily::Lplus:
        return GenSymbol::lplus(i, parse_label(j.at("j").get<std::string>()));
    case GenFamily::Lminus:
        return GenSymbol::lminus(i, parse_label(j.at("j").get<std::string>()));
    case GenFamily::Xcoord: return GenSymbol::x(i);
    case GenFamily::XiForm: return GenSymbol::xi(i);
    }
    throw std::invalid_argument("unknown generator family");
}

Json relation_to_json(const NCPoly& p) {
    Json words = Json::array();
    Json coeffs = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json word = Json::array();
        for (const GenSymbol& g : w) word.push_back(generator_to_json(g));
        words.push_back(std::move(word));
        coeffs.push_back(scalar_to_json(c));
    }
    return Json{{"words", std::move(words)}, {"coeffs", std::move(coeffs)}};
}

NCPoly relation_from_json(const Json& j) {
    const Json& words = j.at("words");
    const Json& coeffs = j.at("coeffs");
    if (words.size() != coeffs.size())
        throw std::invalid_argument("words and coeffs must pair up");
    NCPoly p;
    for (std::size_t k = 0; k < words.size(); ++k) {
        Word w;
        for (const Json& g : words.at(k)) w.push_back(generator_from_json(g));
        p.add_term(w, scalar_from_json(coeffs.at(k)));
    }
    return p;
}

Json relation_set_to_json(const RelationSet& rs) {
    Json rels = Json::array();
    for (const NCPoly& p : rs.relations) rels.push_back(relation_to_json(p));
    return Json{{"name", rs.name}, {"relations", std::move(rels)}};
}

RelationSet relation_set_from_json(const Json& j) {
    RelationSet rs;
    rs.name = j.at("name").get<std::string>();
    for (const Json& r : j.at("relations"))
        rs.relations.push_back(relation_from_json(r));
    return rs;
}

} // namespace bellmat
