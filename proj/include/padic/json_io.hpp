#pragma once

#include <nlohmann/json_fwd.hpp>

#include "padic/analysis.hpp"
#include "padic/census.hpp"

namespace padic {

using Json = nlohmann::json;

// Field: {"kind": "Fp"|"Qp", "p": int, "precision": int (Qp only)}
Json field_to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const Json& j);

// Matrix: {"field": ..., "rows": [["scalar", ...], ...]} using the
// scalar string grammar (decimal residues for F_p, "p^v * u" for Q_p,
// rationals "a/b" accepted on input).
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Vector: {"field": ..., "entries": ["scalar", ...]}
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// Witness: {"m_t": matrix, "m_t_star": matrix}
Json witness_to_json(const MagicWitness& w);
MagicWitness witness_from_json(const Json& j);

// Sequence: {"field": ..., "dim": d, "support": {"<index>": ["scalar", ...]}}
Json sequence_to_json(const FinSuppSequence& s);
FinSuppSequence sequence_from_json(const Json& j);

Json magic_report_to_json(const MagicReport& r);
Json axiom_report_to_json(const AxiomReport& r);
Json vn_result_to_json(const VnResult& r);
Json ergodic_result_to_json(const ErgodicResult& r);
Json stabilization_report_to_json(const StabilizationReport& r);

} // namespace padic
