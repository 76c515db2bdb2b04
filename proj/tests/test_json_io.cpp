#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "bellmat/bell.hpp"
#include "bellmat/json_io.hpp"
#include "bellmat/ncalg.hpp"
#include "bellmat/yangbaxter.hpp"

using namespace bellmat;

namespace {

const HalfInt H(1);
const HalfInt NH(-1);

PhaseScalar roundtrip(const PhaseScalar& s) {
    return scalar_from_json(scalar_to_json(s));
}

} // namespace

TEST_CASE("scalar serialization round trips canonical values") {
    std::vector<PhaseScalar> samples = {
        PhaseScalar::zero(),
        PhaseScalar::one(),
        PhaseScalar::rational(-3, 2),
        PhaseScalar::inv_sqrt2(),
        PhaseScalar::zeta8(5),
        PhaseScalar::phase_symbol(H, -2) * PhaseScalar::zeta8(3) *
                PhaseScalar::rational(5, 4) +
            PhaseScalar::integer(2),
        PhaseScalar::phase_symbol(HalfInt(3)) * PhaseScalar::phase_symbol(H),
    };
    for (const PhaseScalar& s : samples) {
        CAPTURE(s.str());
        CHECK(roundtrip(s) == s);
        for (const Json& term : scalar_to_json(s)) {
            CHECK(term.at("coeff").is_array());
            CHECK(term.at("coeff").size() == 2);
            int z = term.at("zeta8").get<int>();
            CHECK(z >= 0);
            CHECK(z <= 3);
        }
    }
    CHECK(scalar_to_json(PhaseScalar::zero()).empty());
    CHECK(scalar_to_json(PhaseScalar::inv_sqrt2()).size() == 2);
}

TEST_CASE("scalar parsing re-normalizes raw term lists") {
    Json half = {{"coeff", {1, 2}}, {"zeta8", 0}, {"umono", Json::object()}};
    CHECK(scalar_from_json(Json::array({half, half})) == PhaseScalar::one());

    Json wrapped = {{"coeff", {1, 1}}, {"zeta8", 6}, {"umono", Json::object()}};
    PhaseScalar z6 = scalar_from_json(Json::array({wrapped}));
    CHECK(z6 == PhaseScalar::zeta8(6));
    Json canon = scalar_to_json(z6);
    REQUIRE(canon.size() == 1);
    CHECK(canon[0].at("zeta8") == 2);
    CHECK(canon[0].at("coeff") == Json::array({-1, 1}));

    Json plus = {{"coeff", {1, 1}}, {"zeta8", 0}, {"umono", Json::object()}};
    Json minus = {{"coeff", {-1, 1}}, {"zeta8", 0}, {"umono", Json::object()}};
    CHECK(scalar_from_json(Json::array({plus, minus})).is_zero());

    Json zero_exp = {{"coeff", {2, 3}}, {"zeta8", 1}, {"umono", {{"1/2", 0}}}};
    CHECK(scalar_from_json(Json::array({zero_exp})) ==
          PhaseScalar::rational(2, 3) * PhaseScalar::zeta8(1));

    Json as_strings = {{"coeff", {"1", "2"}}, {"zeta8", 0}, {"umono", Json::object()}};
    CHECK(scalar_from_json(Json::array({as_strings})) == PhaseScalar::rational(1, 2));

    Json no_umono = {{"coeff", {4, 1}}, {"zeta8", 0}};
    CHECK(scalar_from_json(Json::array({no_umono})) == PhaseScalar::integer(4));
}

TEST_CASE("scalar parsing rejects malformed input") {
    CHECK_THROWS_AS(scalar_from_json(Json::object()), std::invalid_argument);
    Json bad_pair = {{"coeff", {1}}, {"zeta8", 0}, {"umono", Json::object()}};
    CHECK_THROWS_AS(scalar_from_json(Json::array({bad_pair})), std::invalid_argument);
    Json zero_den = {{"coeff", {1, 0}}, {"zeta8", 0}, {"umono", Json::object()}};
    CHECK_THROWS_AS(scalar_from_json(Json::array({zero_den})), std::invalid_argument);
    Json bad_label = {{"coeff", {1, 1}}, {"zeta8", 0}, {"umono", {{"1", 2}}}};
    CHECK_THROWS_AS(scalar_from_json(Json::array({bad_label})), std::invalid_argument);
    Json neg_label = {{"coeff", {1, 1}}, {"zeta8", 0}, {"umono", {{"-1/2", 2}}}};
    CHECK_THROWS_AS(scalar_from_json(Json::array({neg_label})), std::invalid_argument);
}

TEST_CASE("wide rationals survive via string fallback") {
    Rational wide(BigInt(1) << 80, 3);
    PhaseScalar s = PhaseScalar::rational(wide);
    Json j = scalar_to_json(s);
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("coeff").at(0).is_string());
    CHECK(j[0].at("coeff").at(1).is_number_integer());
    CHECK(roundtrip(s) == s);
}

TEST_CASE("matrix serialization uses one-based positions and round trips") {
    Operator B = build_B_jj(QTable::symbolic(H));
    Json j = operator_to_json(B, {2, 2});
    CHECK(j.at("dim") == 4);
    CHECK(j.at("factors") == Json::array({2, 2}));
    CHECK(j.at("entries").size() == B.nnz());

    const Json& first = j.at("entries").at(0);
    CHECK(first.at("row") == 1);
    CHECK(first.at("col") == 1);
    CHECK(scalar_from_json(first.at("scalar")) == B.at(0, 0));

    OperatorPayload back = operator_from_json(j);
    CHECK(back.op == B);
    CHECK(back.factors == std::vector<long>({2, 2}));
}

TEST_CASE("matrix parsing accumulates duplicates and validates shape") {
    Json j;
    j["dim"] = 2;
    j["factors"] = {2};
    j["entries"] = Json::array();
    Json half = Json::array({Json{{"coeff", {1, 2}}, {"zeta8", 0}}});
    j["entries"].push_back({{"row", 1}, {"col", 2}, {"scalar", half}});
    j["entries"].push_back({{"row", 1}, {"col", 2}, {"scalar", half}});
    Operator op = operator_from_json(j).op;
    CHECK(op.at(0, 1) == PhaseScalar::one());
    CHECK(op.nnz() == 1);

    Json bad = j;
    bad["factors"] = {3};
    CHECK_THROWS_AS(operator_from_json(bad), std::invalid_argument);

    Json oob = j;
    oob["entries"][0]["row"] = 3;
    CHECK_THROWS_AS(operator_from_json(oob), std::invalid_argument);

    Json zero_row = j;
    zero_row["entries"][0]["row"] = 0;
    CHECK_THROWS_AS(operator_from_json(zero_row), std::invalid_argument);

    CHECK_THROWS_AS(operator_to_json(Operator::zero(2, 3), {2}),
                    std::invalid_argument);
}

TEST_CASE("numeric matrix serialization matches exact evaluation") {
    QTable q = QTable::angles(HalfInt(3), {0.3, 1.1});
    Operator B = build_B_jj(q);
    Json j = operator_to_numeric_json(B, {4, 4}, q.assignment());
    CHECK(j.at("dim") == 16);
    for (const Json& e : j.at("entries")) {
        CHECK(e.at("scalar").contains("re"));
        CHECK(e.at("scalar").contains("im"));
    }
    Eigen::MatrixXcd back = numeric_operator_from_json(j);
    Eigen::MatrixXcd direct = B.evaluate(q.assignment());
    CHECK((back - direct).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state serialization round trips GHZ output") {
    std::vector<StateVector> ghz = ghz_generate(3);
    Json j = state_to_json(ghz[0], {2, 2, 2});
    CHECK(j.at("dim") == 8);
    CHECK(j.at("entries").size() == 2);
    CHECK(j.at("entries").at(0).at("row") == 1);
    CHECK_FALSE(j.at("entries").at(0).contains("col"));
    StateVector back = state_from_json(j);
    CHECK(back == ghz[0]);
    CHECK(back.dim() == 8);
}

TEST_CASE("report serialization keeps witness structure") {
    VerificationReport ok = VerificationReport::pass("braid", "j=1/2", "exact");
    Json jp = report_to_json(ok);
    CHECK(jp.at("passed") == true);
    CHECK(jp.at("witness").is_null());
    VerificationReport ok2 = report_from_json(jp);
    CHECK(ok2.check == "braid");
    CHECK(ok2.params == "j=1/2");
    CHECK(ok2.passed);
    CHECK_FALSE(ok2.witness.has_value());
    CHECK(ok2.detail == "exact");

    VerificationReport bad = VerificationReport::fail(
        "braid", EntryWitness{3, 7, "1/2", "-1/2"}, "variant=epsilon", "mismatch");
    Json jf = report_to_json(bad);
    CHECK(jf.at("witness").at("row") == 3);
    CHECK(jf.at("witness").at("lhs") == "1/2");
    VerificationReport bad2 = report_from_json(jf);
    REQUIRE(bad2.witness.has_value());
    CHECK(bad2.witness->col == 7);
    CHECK(bad2.witness->rhs == "-1/2");
    CHECK_FALSE(bad2.passed);

    std::string line = report_json_line(ok);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(report_from_json(Json::parse(line)).check == "braid");
}

TEST_CASE("generator serialization covers every family") {
    std::vector<GenSymbol> gens = {
        GenSymbol::t(H, NH),       GenSymbol::ttilde(NH, H),
        GenSymbol::lplus(H, H),    GenSymbol::lminus(NH, NH),
        GenSymbol::x(HalfInt(3)),  GenSymbol::xi(HalfInt(-3)),
    };
    for (const GenSymbol& g : gens) {
        CAPTURE(g.str());
        Json j = generator_to_json(g);
        CHECK(generator_from_json(j) == g);
        CHECK(j.contains("j") == g.has_column());
    }
    CHECK(generator_to_json(GenSymbol::x(H)).at("family") == "x");
    Json bad = {{"family", "Q"}, {"i", "1/2"}};
    CHECK_THROWS_AS(generator_from_json(bad), std::invalid_argument);
}

TEST_CASE("relation sets round trip") {
    for (const RelationSet& rs :
         {extract_rtt(QTable::symbolic(H)),
          ncgeo_relations(QTable::symbolic(H), Rational(5, 3)),
          extract_rll(QTable::zeta8_powers(H, {3}))}) {
        CAPTURE(rs.name);
        Json j = relation_set_to_json(rs);
        RelationSet back = relation_set_from_json(j);
        CHECK(back.name == rs.name);
        REQUIRE(back.relations.size() == rs.relations.size());
        for (std::size_t k = 0; k < rs.relations.size(); ++k)
            CHECK(back.relations[k] == rs.relations[k]);
    }

    NCPoly p = NCPoly::mono(GenSymbol::t(H, H)) * NCPoly::mono(GenSymbol::t(H, NH)) -
               NCPoly::mono(GenSymbol::t(NH, NH)).scaled(PhaseScalar::zeta8(3));
    Json j = relation_to_json(p);
    CHECK(j.at("words").size() == 2);
    CHECK(j.at("words").size() == j.at("coeffs").size());
    CHECK(relation_from_json(j) == p);

    Json uneven = j;
    uneven["coeffs"].erase(0);
    CHECK_THROWS_AS(relation_from_json(uneven), std::invalid_argument);
}
