#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bellmat/bell.hpp"
#include "bellmat/evolution.hpp"
#include "bellmat/json_io.hpp"
#include "bellmat/ncalg.hpp"
#include "bellmat/spectral.hpp"
#include "bellmat/yangbaxter.hpp"

namespace {

using namespace bellmat;

constexpr std::uint64_t kDefaultSeed = 2026;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

HalfInt parse_j(const std::string& s) {
    std::optional<HalfInt> j = HalfInt::parse(s);
    if (!j || j->twice <= 0 || j->twice % 2 == 0)
        throw std::invalid_argument("--j must be a positive half-odd fraction like 1/2 or 3/2");
    return *j;
}

/// Phase grammar: "sym" keeps formal symbols, "1" is the undeformed table,
/// "z3,z5" pins u_l to zeta8 powers (ordered J down to 1/2), and a plain
/// comma list of reals is read as angles phi_l.
QTable parse_qtable(HalfInt j, const std::string& phases, bool allow_angles) {
    if (phases == "sym") return QTable::symbolic(j);
    if (phases == "1" || phases == "triv") return QTable::trivial(j);
    std::vector<std::string> items = split(phases, ',');
    std::size_t need = std::size_t(j.twice + 1) / 2;
    if (items.empty() || items.size() != need) {
        std::ostringstream os;
        os << "expected " << need << " phase entries for J=" << j.str();
        throw std::invalid_argument(os.str());
    }
    bool zeta = true;
    for (const std::string& it : items)
        if (it.empty() || it[0] != 'z') zeta = false;
    if (zeta) {
        std::vector<int> powers;
        for (const std::string& it : items) powers.push_back(std::stoi(it.substr(1)));
        return QTable::zeta8_powers(j, powers);
    }
    if (!allow_angles)
        throw std::invalid_argument("this subcommand needs exact phases: sym, 1, or z<k>,...");
    std::vector<double> phi;
    for (const std::string& it : items) phi.push_back(std::stod(it));
    return QTable::angles(j, phi);
}

/// Family selector shared by emit-bell and verify. --n asks for the plain
/// 2^N matrix; for V (x) V checks N must be even and the equivalent
/// undeformed spin table (2J + 1 = 2^{N/2}) stands in for q.
struct FamilySel {
    std::string j;
    int n = 0;
    std::string phases = "sym";
};

QTable table_for(const FamilySel& sel) {
    if (!sel.j.empty()) return parse_qtable(parse_j(sel.j), sel.phases, true);
    if (sel.n > 0) {
        if (sel.n % 2 != 0)
            throw std::invalid_argument("--n must be even for checks on V (x) V");
        long local = 1L << (sel.n / 2);
        return QTable::trivial(HalfInt::from_twice(int(local) - 1));
    }
    throw std::invalid_argument("need --j <J> or --n <N>");
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    Json j;
    f >> j;
    return j;
}

template <typename Fn> int with_sink(const std::string& path, Fn&& fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    return fn(f);
}

void emit_json_doc(const Json& j, std::ostream& os) { os << j.dump(2) << "\n"; }

/// The as-displayed virtual relation is reported but recorded as
/// informational; it does not drive the exit code.
bool informational(const VerificationReport& r) {
    return r.check == "virtual-displayed";
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 const std::string& format, std::ostream& os) {
    bool ok = true;
    for (const VerificationReport& r : reports) {
        if (format == "json")
            os << report_json_line(r) << "\n";
        else
            os << r.str() << "\n";
        if (!r.passed && !informational(r)) ok = false;
    }
    return ok ? 0 : 1;
}

std::string grid_str(const Operator& op) {
    std::vector<std::vector<std::string>> cells(op.rows());
    std::vector<std::size_t> width(op.cols(), 1);
    for (long r = 0; r < op.rows(); ++r) {
        cells[r].resize(op.cols());
        for (long c = 0; c < op.cols(); ++c) {
            const PhaseScalar& v = op.at(r, c);
            cells[r][c] = v.is_zero() ? "." : v.str();
            width[c] = std::max(width[c], cells[r][c].size());
        }
    }
    std::ostringstream os;
    for (long r = 0; r < op.rows(); ++r) {
        for (long c = 0; c < op.cols(); ++c) {
            os << (c ? "  " : "");
            os << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
        }
        os << "\n";
    }
    return os.str();
}

std::vector<long> family_factors(const BellFamily& fam) {
    if (fam.kind == BellFamily::Kind::plain)
        return std::vector<long>(fam.n_qubits, 2);
    return {fam.local_dim(), fam.local_dim()};
}

struct EmitBellArgs {
    std::string kind = "plain";
    FamilySel sel;
    std::string j1, j2;
    std::string which = "B";
    bool numeric = false;
    std::string format = "text";
    std::string out;
};

int cmd_emit_bell(const EmitBellArgs& a) {
    BellFamily fam;
    if (a.kind == "plain") {
        if (a.sel.n <= 0) throw std::invalid_argument("--kind plain needs --n <N>");
        fam = BellFamily::plain(a.sel.n);
    } else if (a.kind == "jj") {
        if (a.sel.j.empty()) throw std::invalid_argument("--kind jj needs --j <J>");
        fam = BellFamily::jj(parse_qtable(parse_j(a.sel.j), a.sel.phases, true));
    } else {
        if (a.j1.empty() || a.j2.empty())
            throw std::invalid_argument("--kind generalized needs --j1 and --j2");
        fam = BellFamily::generalized(parse_j(a.j1), parse_j(a.j2),
                                      parse_qtable(parse_j(a.j1), a.sel.phases, true));
    }
    const Operator& op = (a.which == "M") ? fam.M : fam.B;
    return with_sink(a.out, [&](std::ostream& os) {
        if (a.format == "json") {
            if (a.numeric)
                emit_json_doc(operator_to_numeric_json(op, family_factors(fam),
                                                       fam.qtable.assignment()),
                              os);
            else
                emit_json_doc(operator_to_json(op, family_factors(fam)), os);
            return 0;
        }
        os << a.which << "  " << fam.params_str() << "  dim " << fam.dim() << "\n";
        if (a.which == "B") {
            os << "(1/sqrt2) *\n" << grid_str(op.scaled(PhaseScalar::sqrt2()));
        } else {
            os << grid_str(op);
        }
        return 0;
    });
}

struct EmitGhzArgs {
    int n = 0;
    int k = 0;
    std::string format = "text";
    std::string out;
};

int cmd_emit_ghz(const EmitGhzArgs& a) {
    if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
    std::vector<StateVector> states = ghz_generate(a.n);
    if (a.k < 0 || a.k > long(states.size()))
        throw std::invalid_argument("--k must lie in 1..2^N (0 = all)");
    std::vector<long> factors(a.n, 2);
    return with_sink(a.out, [&](std::ostream& os) {
        if (a.format == "json") {
            if (a.k > 0) {
                emit_json_doc(state_to_json(states[a.k - 1], factors), os);
            } else {
                Json all = Json::array();
                for (const StateVector& s : states)
                    all.push_back(state_to_json(s, factors));
                emit_json_doc(all, os);
            }
            return 0;
        }
        long lo = a.k > 0 ? a.k : 1;
        long hi = a.k > 0 ? a.k : long(states.size());
        for (long k = lo; k <= hi; ++k)
            os << "GHZ " << k << ": " << states[k - 1].str() << "\n";
        return 0;
    });
}

struct EmitDiagArgs {
    std::string j;
    std::string phases = "sym";
    std::string format = "text";
    std::string out;
};

int cmd_emit_diag(const EmitDiagArgs& a) {
    if (a.j.empty()) throw std::invalid_argument("emit-diag needs --j <J>");
    QTable q = parse_qtable(parse_j(a.j), a.phases, true);
    Diagonalizer dg = build_diagonalizer(q);
    Operator b = build_B_jj(q);
    Operator diag = conjugate_by_d(dg, b);
    long d = q.j().twice + 1;
    std::vector<long> factors = {d, d};
    return with_sink(a.out, [&](std::ostream& os) {
        if (a.format == "json") {
            Json doc;
            doc["n"] = operator_to_json(dg.n_matrix, factors);
            doc["d"] = operator_to_json(dg.d_matrix, factors);
            doc["diagonal"] = operator_to_json(diag, factors);
            emit_json_doc(doc, os);
            return 0;
        }
        os << "N  J=" << q.j().str() << "\n" << grid_str(dg.n_matrix);
        os << "D = (I + iN)/sqrt2, rendered as (1/sqrt2) *\n"
           << grid_str(dg.d_matrix.scaled(PhaseScalar::sqrt2()));
        os << "D B D^dag\n" << grid_str(diag);
        return 0;
    });
}

struct VerifyArgs {
    std::string kind;
    FamilySel sel;
    std::string variant = "bell";
    std::uint64_t seed = kDefaultSeed;
    int samples = 5;
    int trig_samples = 3;
    double tol = 1e-12;
    double trig_tol = 1e-10;
    std::string format = "text";
    std::string out;
};

int cmd_verify(const VerifyArgs& a) {
    QTable q = table_for(a.sel);
    BellFamily fam = a.sel.j.empty() ? BellFamily::plain(a.sel.n) : BellFamily::jj(q);
    const std::string params = fam.params_str();
    const bool all = a.kind == "all";
    std::vector<VerificationReport> reports;

    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> theta(0.05, 0.65);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    if (all) reports.push_back(check_q_constraints(q));
    if (all || a.kind == "braid") {
        Operator g = fam.B;
        std::string p = params;
        if (a.variant == "epsilon-bell") {
            g = build_epsilon_variant(fam.B);
            p += " variant=epsilon-bell";
        }
        reports.push_back(check_braid(g, p));
    }
    if (all || a.kind == "malg") reports.push_back(check_M_algebra(q));
    if (all || a.kind == "qybe") {
        ParametricOperator r = yang_baxterize(fam.B, lambda_plus(), lambda_minus());
        reports.push_back(check_qybe(r, params));
        reports.push_back(check_unitarity_family(r, params));
        reports.push_back(check_qybe_numeric(r, q, a.samples, a.seed, a.tol));
    }
    if (all || a.kind == "mybe") {
        reports.push_back(check_modified_ybe(q));
        reports.push_back(check_reparameterization(Rational(1, 3), Rational(2, 5)));
        QTable nq = q;
        if (q.is_symbolic() && q.assignment().empty()) {
            std::vector<double> phi;
            for (std::size_t k = 0; k < std::size_t(q.j().twice + 1) / 2; ++k)
                phi.push_back(angle(rng));
            nq = QTable::angles(q.j(), phi);
        }
        for (int s = 0; s < a.trig_samples; ++s)
            reports.push_back(trig_check(nq, theta(rng), theta(rng), false, a.trig_tol));
    }
    if (all || a.kind == "virtual") {
        auto [displayed, standard] = check_virtual(q);
        reports.push_back(standard);
        reports.push_back(displayed);
    }
    if (all || a.kind == "spectral") {
        std::vector<VerificationReport> suite = spectral_suite(q);
        reports.insert(reports.end(), suite.begin(), suite.end());
    }
    if (all && fam.kind == BellFamily::Kind::plain) {
        std::vector<StateVector> states = ghz_generate(fam.n_qubits);
        std::optional<EntryWitness> w;
        for (std::size_t x = 0; x < states.size() && !w; ++x)
            for (std::size_t y = 0; y < states.size() && !w; ++y) {
                PhaseScalar ip = inner(states[x], states[y]);
                PhaseScalar expect = x == y ? PhaseScalar::one() : PhaseScalar::zero();
                if (ip != expect)
                    w = EntryWitness{long(x), long(y), ip.str(), expect.str()};
            }
        reports.push_back(w ? VerificationReport::fail("ghz-orthonormal", *w, params)
                            : VerificationReport::pass("ghz-orthonormal", params,
                                                       "exact Gram identity"));
    }

    return with_sink(a.out, [&](std::ostream& os) {
        return emit_reports(reports, a.format, os);
    });
}

struct EvolveArgs {
    FamilySel sel;
    double theta0 = 0.0;
    double theta1 = 0.7853981633974483;
    int steps = 100;
    std::string state = "k=1";
    std::string out;
};

int cmd_evolve(const EvolveArgs& a) {
    EvolutionSpec spec;
    if (!a.sel.j.empty()) {
        QTable q = parse_qtable(parse_j(a.sel.j), a.sel.phases, true);
        if (q.is_symbolic() && q.assignment().empty())
            throw std::invalid_argument("evolve needs numeric phases: 1 or an angle list");
        spec = EvolutionSpec::for_jj(q);
    } else if (a.sel.n > 0) {
        spec = EvolutionSpec::for_plain(a.sel.n);
    } else {
        throw std::invalid_argument("need --j <J> or --n <N>");
    }
    if (a.steps < 1) throw std::invalid_argument("--steps must be >= 1");
    if (a.state.rfind("k=", 0) != 0)
        throw std::invalid_argument("--state must be k=<index>, 1-based");
    long k = std::stol(a.state.substr(2));
    if (k < 1 || k > spec.dim())
        throw std::invalid_argument("--state index out of range");
    Eigen::VectorXcd phi0 = Eigen::VectorXcd::Zero(spec.dim());
    phi0(k - 1) = 1.0;
    Trajectory t = evolve(spec, phi0, a.theta0, a.theta1, a.steps);
    return with_sink(a.out, [&](std::ostream& os) {
        write_csv(t, os);
        return 0;
    });
}

struct RelationsArgs {
    std::string kind;
    std::string j;
    std::string q = "sym";
    std::string mu = "2";
    bool quotient = false;
    std::string left, right;
    std::string format = "json";
    std::string out;
};

int cmd_relations(const RelationsArgs& a) {
    if (a.kind == "compare") {
        if (a.left.empty() || a.right.empty())
            throw std::invalid_argument("relations compare needs --left and --right");
        RelationSet lhs = relation_set_from_json(read_json_file(a.left));
        RelationSet rhs = relation_set_from_json(read_json_file(a.right));
        VerificationReport r = span_equal(lhs, rhs);
        return with_sink(a.out, [&](std::ostream& os) {
            return emit_reports({r}, a.format, os);
        });
    }
    if (a.j.empty()) throw std::invalid_argument("relations needs --j <J>");
    QTable q = parse_qtable(parse_j(a.j), a.q, false);
    RelationSet rs;
    if (a.kind == "rtt") rs = extract_rtt(q);
    else if (a.kind == "rll") rs = extract_rll(q, a.quotient);
    else if (a.kind == "ncgeo") rs = ncgeo_relations(q, Rational(a.mu));
    else rs = ttilde_relations(q);
    return with_sink(a.out, [&](std::ostream& os) {
        if (a.format == "json") {
            emit_json_doc(relation_set_to_json(rs), os);
        } else {
            os << rs.name << "  (" << rs.size() << " relations)\n";
            for (const NCPoly& p : rs.relations) os << p.str() << " = 0\n";
        }
        return 0;
    });
}

void add_format(CLI::App* cmd, std::string& fmt, std::string& out,
                const std::vector<std::string>& allowed) {
    cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember(allowed));
    cmd->add_option("--out", out, "write output to this path instead of stdout");
}

void add_family(CLI::App* cmd, FamilySel& sel) {
    cmd->add_option("--j", sel.j, "spin J as a fraction, e.g. 1/2 or 3/2");
    cmd->add_option("--n", sel.n, "qubit count for the plain family");
    cmd->add_option("--phases", sel.phases,
                    "sym | 1 | z<k>,... (zeta8 powers) | angle list phi_J,...,phi_1/2");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Bell-type braid matrices: construction, "
                 "identity verification, evolution, relation extraction"};
    app.require_subcommand(1);
    int rc = 0;

    EmitBellArgs eb;
    CLI::App* emit_bell = app.add_subcommand("emit-bell", "print a Bell-family matrix");
    emit_bell->add_option("--kind", eb.kind, "plain | jj | generalized")
        ->check(CLI::IsMember({"plain", "jj", "generalized"}));
    add_family(emit_bell, eb.sel);
    emit_bell->add_option("--j1", eb.j1, "left spin for --kind generalized");
    emit_bell->add_option("--j2", eb.j2, "right spin for --kind generalized");
    emit_bell->add_option("--which", eb.which, "B (default) or M")
        ->check(CLI::IsMember({"B", "M"}));
    emit_bell->add_flag("--numeric", eb.numeric, "JSON entries as re/im doubles");
    add_format(emit_bell, eb.format, eb.out, {"json", "text"});
    emit_bell->callback([&] { rc = cmd_emit_bell(eb); });

    EmitGhzArgs eg;
    CLI::App* emit_ghz = app.add_subcommand("emit-ghz", "print generated GHZ states");
    emit_ghz->add_option("--n", eg.n, "number of qubits")->required();
    emit_ghz->add_option("--k", eg.k, "state number 1..2^N; 0 = all");
    add_format(emit_ghz, eg.format, eg.out, {"json", "text"});
    emit_ghz->callback([&] { rc = cmd_emit_ghz(eg); });

    EmitDiagArgs ed;
    CLI::App* emit_diag =
        app.add_subcommand("emit-diag", "print the diagonalizing frame N, D and D B D^dag");
    emit_diag->add_option("--j", ed.j, "spin J as a fraction")->required();
    emit_diag->add_option("--phases", ed.phases, "sym | 1 | z<k>,... | angle list");
    add_format(emit_diag, ed.format, ed.out, {"json", "text"});
    emit_diag->callback([&] { rc = cmd_emit_diag(ed); });

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run identity checks, one report line each");
    verify->add_option("kind", va.kind, "braid|malg|qybe|mybe|virtual|spectral|all")
        ->required()
        ->check(CLI::IsMember({"braid", "malg", "qybe", "mybe", "virtual", "spectral", "all"}));
    add_family(verify, va.sel);
    verify->add_option("--variant", va.variant, "bell (default) or epsilon-bell")
        ->check(CLI::IsMember({"bell", "epsilon-bell"}));
    verify->add_option("--seed", va.seed, "seed for numeric oracles (env BELLMAT_SEED wins)");
    verify->add_option("--samples", va.samples, "random points for the numeric qybe oracle");
    verify->add_option("--trig-samples", va.trig_samples, "random angle pairs for the tan form");
    verify->add_option("--tol", va.tol, "numeric qybe tolerance");
    verify->add_option("--trig-tol", va.trig_tol, "tan-form tolerance");
    add_format(verify, va.format, va.out, {"json", "text"});
    verify->callback([&] {
        if (const char* env = std::getenv("BELLMAT_SEED"))
            va.seed = std::strtoull(env, nullptr, 10);
        rc = cmd_verify(va);
    });

    EvolveArgs ev;
    CLI::App* evolve = app.add_subcommand(
        "evolve", "sample psi(theta) = B(theta) phi0 and write CSV");
    add_family(evolve, ev.sel);
    evolve->add_option("--theta0", ev.theta0, "start angle");
    evolve->add_option("--theta1", ev.theta1, "end angle");
    evolve->add_option("--steps", ev.steps, "grid intervals");
    evolve->add_option("--state", ev.state, "initial basis state, k=<index> 1-based");
    evolve->add_option("--out", ev.out, "CSV path (default stdout)");
    evolve->callback([&] { rc = cmd_evolve(ev); });

    RelationsArgs ra;
    CLI::App* relations =
        app.add_subcommand("relations", "extract quadratic relation sets or compare spans");
    relations->add_option("kind", ra.kind, "rtt|rll|ncgeo|ttilde|compare")
        ->required()
        ->check(CLI::IsMember({"rtt", "rll", "ncgeo", "ttilde", "compare"}));
    relations->add_option("--j", ra.j, "spin J as a fraction");
    relations->add_option("--q", ra.q, "sym | 1 | z<k>,... (zeta8 powers)");
    relations->add_option("--mu", ra.mu, "mixed-relation parameter, a rational like 2 or 5/3");
    relations->add_flag("--quotient", ra.quotient, "include the quotient commutator family");
    relations->add_option("--left", ra.left, "relation-set JSON file");
    relations->add_option("--right", ra.right, "relation-set JSON file");
    add_format(relations, ra.format, ra.out, {"json", "text"});
    relations->callback([&] { rc = cmd_relations(ra); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UnsupportedKindError& e) {
        std::cerr << "unsupported kind: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
