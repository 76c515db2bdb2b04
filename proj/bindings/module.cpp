#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bellmat/bell.hpp"
#include "bellmat/evolution.hpp"
#include "bellmat/json_io.hpp"
#include "bellmat/ncalg.hpp"
#include "bellmat/spectral.hpp"
#include "bellmat/yangbaxter.hpp"

namespace py = pybind11;
using namespace bellmat;

namespace {

HalfInt halfint_from_str(const std::string& s) {
    std::optional<HalfInt> h = HalfInt::parse(s);
    if (!h) throw py::value_error("not a half-integer: " + s);
    return *h;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Bell-matrix toolkit: construction, braid/Yang-Baxter "
              "verification, GHZ generation, evolution, relation extraction";

    py::class_<HalfInt>(m, "HalfInt")
        .def(py::init(&halfint_from_str), py::arg("text"))
        .def(py::init([](int twice) { return HalfInt(twice); }), py::arg("twice"))
        .def_readonly("twice", &HalfInt::twice)
        .def("epsilon", &HalfInt::epsilon)
        .def("__str__", &HalfInt::str)
        .def("__repr__", [](const HalfInt& h) { return "HalfInt(" + h.str() + ")"; })
        .def(py::self == py::self)
        .def("__neg__", [](const HalfInt& h) { return HalfInt(-h.twice); })
        .def("__float__", [](const HalfInt& h) { return h.twice / 2.0; });

    py::class_<PhaseScalar>(m, "PhaseScalar")
        .def_static("zero", &PhaseScalar::zero)
        .def_static("one", &PhaseScalar::one)
        .def_static("integer", &PhaseScalar::integer)
        .def_static("rational",
                    [](long n, long d) { return PhaseScalar::rational(n, d); },
                    py::arg("num"), py::arg("den") = 1)
        .def_static("zeta8", &PhaseScalar::zeta8, py::arg("power") = 1)
        .def_static("inv_sqrt2", &PhaseScalar::inv_sqrt2)
        .def_static("sqrt2", &PhaseScalar::sqrt2)
        .def_static("phase_symbol", &PhaseScalar::phase_symbol, py::arg("label"),
                    py::arg("exponent") = 1)
        .def("is_zero", &PhaseScalar::is_zero)
        .def("is_one", &PhaseScalar::is_one)
        .def("conj", &PhaseScalar::conj)
        .def("evaluate", &PhaseScalar::evaluate, py::arg("phases") = PhaseAssignment{})
        .def("__add__", &PhaseScalar::operator+)
        .def("__sub__",
             [](const PhaseScalar& a, const PhaseScalar& b) { return a - b; })
        .def("__mul__", &PhaseScalar::operator*)
        .def("__neg__", [](const PhaseScalar& a) { return -a; })
        .def(py::self == py::self)
        .def("__str__", &PhaseScalar::str)
        .def("__repr__", &PhaseScalar::str);

    py::class_<QTable>(m, "QTable")
        .def_static("symbolic", &QTable::symbolic, py::arg("j"))
        .def_static("trivial", &QTable::trivial, py::arg("j"))
        .def_static("zeta8_powers", &QTable::zeta8_powers, py::arg("j"),
                    py::arg("powers"))
        .def_static("angles", &QTable::angles, py::arg("j"), py::arg("phi"))
        .def_property_readonly("j", &QTable::j)
        .def("is_symbolic", &QTable::is_symbolic)
        .def("assignment", &QTable::assignment)
        .def("u", &QTable::u, py::arg("l"))
        .def("q", &QTable::q, py::arg("l"), py::arg("m"))
        .def("labels", &QTable::labels);

    py::class_<EntryWitness>(m, "EntryWitness")
        .def_readonly("row", &EntryWitness::row)
        .def_readonly("col", &EntryWitness::col)
        .def_readonly("lhs", &EntryWitness::lhs)
        .def_readonly("rhs", &EntryWitness::rhs)
        .def("__repr__", &EntryWitness::str);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check", &VerificationReport::check)
        .def_readonly("params", &VerificationReport::params)
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("witness", &VerificationReport::witness)
        .def_readonly("detail", &VerificationReport::detail)
        .def("__bool__", [](const VerificationReport& r) { return r.passed; })
        .def("__repr__", &VerificationReport::str);

    py::class_<Operator>(m, "Operator")
        .def_static("identity", &Operator::identity)
        .def_property_readonly("rows", &Operator::rows)
        .def_property_readonly("cols", &Operator::cols)
        .def("nnz", &Operator::nnz)
        .def("at", &Operator::at, py::arg("row"), py::arg("col"))
        .def("dagger", &Operator::dagger)
        .def("kron", &Operator::kron)
        .def("scaled", &Operator::scaled)
        .def("__add__", &Operator::operator+)
        .def("__sub__", [](const Operator& a, const Operator& b) { return a - b; })
        .def("__mul__", [](const Operator& a, const Operator& b) { return a * b; })
        .def("__mul__", [](const Operator& a, const StateVector& v) { return a * v; })
        .def(py::self == py::self)
        .def("evaluate",
             [](const Operator& op, const PhaseAssignment& phi) {
                 return op.evaluate(phi);
             },
             py::arg("phases") = PhaseAssignment{})
        .def("__str__", &Operator::str)
        .def("__repr__", [](const Operator& op) {
            return "<Operator " + std::to_string(op.rows()) + "x" +
                   std::to_string(op.cols()) + ", nnz " +
                   std::to_string(op.nnz()) + ">";
        });

    py::class_<StateVector>(m, "StateVector")
        .def_static("basis", &StateVector::basis, py::arg("dim"), py::arg("k"))
        .def_property_readonly("dim", &StateVector::dim)
        .def("at", &StateVector::at, py::arg("k"))
        .def("__add__", &StateVector::operator+)
        .def("__sub__",
             [](const StateVector& a, const StateVector& b) { return a - b; })
        .def("scaled", &StateVector::scaled)
        .def(py::self == py::self)
        .def("evaluate",
             [](const StateVector& v, const PhaseAssignment& phi) {
                 return v.evaluate(phi);
             },
             py::arg("phases") = PhaseAssignment{})
        .def("__str__", &StateVector::str)
        .def("__repr__", &StateVector::str);

    m.def("inner", &inner, py::arg("a"), py::arg("b"),
          "exact <a|b>, conjugating the left argument");
    m.def("reduced_density", &reduced_density, py::arg("psi"), py::arg("local_dim"),
          py::arg("factors"), py::arg("site"));

    m.def("build_M_plain", &build_M_plain, py::arg("n_qubits"));
    m.def("build_B_plain", &build_B_plain, py::arg("n_qubits"));
    m.def("build_M_jj", &build_M_jj, py::arg("q"));
    m.def("build_B_jj", &build_B_jj, py::arg("q"));
    m.def("build_epsilon_variant", &build_epsilon_variant, py::arg("b"));
    m.def("ghz_generate", &ghz_generate, py::arg("n_qubits"));

    m.def("check_braid", &check_braid, py::arg("g"), py::arg("params") = "");
    m.def("check_M_algebra", &check_M_algebra, py::arg("q"));
    m.def("check_q_constraints", &check_q_constraints, py::arg("q"));
    m.def("check_modified_ybe", &check_modified_ybe, py::arg("q"));
    m.def("check_virtual", &check_virtual, py::arg("q"),
          "returns (as-displayed form, standard form) reports");
    m.def("spectral_suite", &spectral_suite, py::arg("q"));
    m.def(
        "check_qybe",
        [](const Operator& b, const std::string& params) {
            return check_qybe(yang_baxterize(b, lambda_plus(), lambda_minus()),
                              params);
        },
        py::arg("b"), py::arg("params") = "",
        "exact spectral-parameter Yang-Baxter check of R(x) = B + x B^{-1}");
    m.def(
        "check_qybe_numeric",
        [](const Operator& b, const QTable& q, int samples, std::uint64_t seed,
           double tol) {
            return check_qybe_numeric(
                yang_baxterize(b, lambda_plus(), lambda_minus()), q, samples, seed,
                tol);
        },
        py::arg("b"), py::arg("q"), py::arg("samples") = 5, py::arg("seed") = 2026,
        py::arg("tol") = 1e-12);
    m.def("trig_check", &trig_check, py::arg("q"), py::arg("theta1"),
          py::arg("theta2"), py::arg("hyperbolic") = false, py::arg("tol") = 1e-10);

    py::class_<Diagonalizer>(m, "Diagonalizer")
        .def_readonly("f", &Diagonalizer::f)
        .def_readonly("n_matrix", &Diagonalizer::n_matrix)
        .def_readonly("d_matrix", &Diagonalizer::d_matrix);
    m.def("build_diagonalizer",
          [](const QTable& q) { return build_diagonalizer(q); }, py::arg("q"));
    m.def("conjugate_by_d", &conjugate_by_d, py::arg("dg"), py::arg("b"));

    py::class_<EvolutionSpec>(m, "EvolutionSpec")
        .def_static("for_plain", &EvolutionSpec::for_plain, py::arg("n_qubits"))
        .def_static("for_jj", &EvolutionSpec::for_jj, py::arg("q"))
        .def_property_readonly("dim", &EvolutionSpec::dim)
        .def_property_readonly("m", &EvolutionSpec::m);
    m.def("b_of_x", &b_of_x, py::arg("spec"), py::arg("x"));
    m.def("b_of_theta", &b_of_theta, py::arg("spec"), py::arg("theta"));
    m.def("u_of_theta", &u_of_theta, py::arg("spec"), py::arg("theta"));
    m.def("hamiltonian_theta", &hamiltonian_theta, py::arg("spec"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("thetas", &Trajectory::thetas)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("step", &Trajectory::step);
    m.def("evolve", &evolve, py::arg("spec"), py::arg("phi0"), py::arg("theta0"),
          py::arg("theta1"), py::arg("steps"));
    m.def("schrodinger_residual", &schrodinger_residual, py::arg("spec"),
          py::arg("trajectory"));
    m.def("max_norm_drift", &max_norm_drift, py::arg("trajectory"));

    py::class_<NCPoly>(m, "NCPoly")
        .def(py::self == py::self)
        .def("__str__", &NCPoly::str)
        .def("__repr__", &NCPoly::str);

    py::class_<RelationSet>(m, "RelationSet")
        .def_readonly("name", &RelationSet::name)
        .def_readonly("relations", &RelationSet::relations)
        .def("__len__", &RelationSet::size);

    m.def("extract_rtt", &extract_rtt, py::arg("q"));
    m.def("extract_rll", &extract_rll, py::arg("q"),
          py::arg("include_quotient") = false);
    m.def(
        "ncgeo_relations",
        [](const QTable& q, const std::string& mu) {
            return ncgeo_relations(q, Rational(mu));
        },
        py::arg("q"), py::arg("mu") = "2");
    m.def("ttilde_relations", &ttilde_relations, py::arg("q"));
    m.def("span_rank",
          [](const RelationSet& rs) { return span_rank(rs); }, py::arg("rs"));
    m.def("span_equal", &span_equal, py::arg("a"), py::arg("b"));

    m.def(
        "operator_json",
        [](const Operator& op, const std::vector<long>& factors) {
            return operator_to_json(op, factors).dump();
        },
        py::arg("op"), py::arg("factors"));
    m.def("operator_from_json_str", [](const std::string& text) {
        return operator_from_json(Json::parse(text)).op;
    });
    m.def(
        "state_json",
        [](const StateVector& v, const std::vector<long>& factors) {
            return state_to_json(v, factors).dump();
        },
        py::arg("state"), py::arg("factors"));
    m.def("state_from_json_str",
          [](const std::string& text) { return state_from_json(Json::parse(text)); });
    m.def("relation_set_json",
          [](const RelationSet& rs) { return relation_set_to_json(rs).dump(); });
    m.def("relation_set_from_json_str", [](const std::string& text) {
        return relation_set_from_json(Json::parse(text));
    });
    m.def("report_json", [](const VerificationReport& r) { return report_json_line(r); });
}
