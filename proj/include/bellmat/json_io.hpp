#pragma once

#include <vector>

#include "bellmat/linalg.hpp"
#include "bellmat/ncalg.hpp"
#include "bellmat/report.hpp"

#include "json.hpp"

namespace bellmat {

using Json = nlohmann::json;

/// A scalar is a list of terms {"coeff": [num, den], "zeta8": 0..3,
/// "umono": {"l": exponent, ...}} with labels written as fractions.
/// Parsing re-normalizes, so denormalized input collapses to canonical
/// form. Rationals too wide for int64 are carried as decimal strings.
Json scalar_to_json(const PhaseScalar& s);
PhaseScalar scalar_from_json(const Json& j);

/// Matrices: {"dim": d, "factors": [...], "entries": [{"row": r,
/// "col": c, "scalar": ...}]} with 1-based positions. The factor list
/// records the tensor decomposition of the space and must multiply to d.
struct OperatorPayload {
    Operator op;
    std::vector<long> factors;
};

Json operator_to_json(const Operator& op, const std::vector<long>& factors);
OperatorPayload operator_from_json(const Json& j);

/// Numeric variant with "scalar" replaced by {"re": x, "im": y}.
Json operator_to_numeric_json(const Operator& op,
                              const std::vector<long>& factors,
                              const PhaseAssignment& phi = {});
Eigen::MatrixXcd numeric_operator_from_json(const Json& j);

/// Column vectors reuse the matrix layout without the "col" field.
Json state_to_json(const StateVector& v, const std::vector<long>& factors);
StateVector state_from_json(const Json& j);

/// One check outcome per JSON object; emitted one object per line.
Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
std::string report_json_line(const VerificationReport& r);

/// Generators: {"family": "T", "i": "1/2", "j": "-1/2"}; coordinate
/// generators omit "j". Relations pair the word list with the
/// coefficient list index by index.
Json generator_to_json(const GenSymbol& g);
GenSymbol generator_from_json(const Json& j);

Json relation_to_json(const NCPoly& p);
NCPoly relation_from_json(const Json& j);

Json relation_set_to_json(const RelationSet& rs);
RelationSet relation_set_from_json(const Json& j);

} // namespace bellmat
