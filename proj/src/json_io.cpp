#include "padic/json_io.hpp"

#include <nlohmann/json.hpp>

namespace padic {
namespace {

const Json& member(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string(what) + ": missing key \"" + key + "\"");
    return *it;
}

} // namespace

Json field_to_json(const FieldDescriptor& field) {
    Json j;
    j["kind"] = field.kind() == FieldKind::prime_field ? "Fp" : "Qp";
    j["p"] = field.p();
    if (field.kind() == FieldKind::padic_field) j["precision"] = field.precision();
    return j;
}

FieldDescriptor field_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("field: expected an object");
    std::string kind = member(j, "kind", "field").get<std::string>();
    std::int64_t p = member(j, "p", "field").get<std::int64_t>();
    if (kind == "Fp") return FieldDescriptor::prime_field(p);
    if (kind == "Qp") {
        std::int32_t precision = j.contains("precision")
                                     ? j["precision"].get<std::int32_t>()
                                     : 20;
        return FieldDescriptor::padic_field(p, precision);
    }
    throw parse_error("field: unknown kind \"" + kind + "\"");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(m.field())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    FieldDescriptor field = field_from_json(member(j, "field", "matrix"));
    const Json& rows = member(j, "rows", "matrix");
    if (!rows.is_array() || rows.empty()) throw parse_error("matrix: rows must be a nonempty array");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(r) * c);
    for (const Json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != c)
            throw parse_error("matrix: ragged rows");
        for (const Json& cell : row)
            entries.push_back(parse_scalar(cell.get<std::string>(), field));
    }
    return Matrix(field, r, c, std::move(entries));
}

Json vector_to_json(const Vector& v) {
    Json entries = Json::array();
    for (int i = 0; i < v.dim(); ++i) entries.push_back(to_string(v[i]));
    return Json{{"field", field_to_json(v.field())}, {"entries", std::move(entries)}};
}

Vector vector_from_json(const Json& j) {
    FieldDescriptor field = field_from_json(member(j, "field", "vector"));
    const Json& entries = member(j, "entries", "vector");
    if (!entries.is_array() || entries.empty())
        throw parse_error("vector: entries must be a nonempty array");
    std::vector<Scalar> out;
    out.reserve(entries.size());
    for (const Json& cell : entries) out.push_back(parse_scalar(cell.get<std::string>(), field));
    return Vector(field, std::move(out));
}

Json witness_to_json(const MagicWitness& w) {
    return Json{{"m_t", matrix_to_json(w.m_t)}, {"m_t_star", matrix_to_json(w.m_t_star)}};
}

MagicWitness witness_from_json(const Json& j) {
    return MagicWitness{matrix_from_json(member(j, "m_t", "witness")),
                        matrix_from_json(member(j, "m_t_star", "witness"))};
}

Json sequence_to_json(const FinSuppSequence& s) {
    Json support = Json::object();
    for (const auto& [n, v] : s.support()) {
        Json entries = Json::array();
        for (int i = 0; i < v.dim(); ++i) entries.push_back(to_string(v[i]));
        support[std::to_string(n)] = std::move(entries);
    }
    return Json{{"field", field_to_json(s.field())},
                {"dim", s.dim()},
                {"support", std::move(support)}};
}

FinSuppSequence sequence_from_json(const Json& j) {
    FieldDescriptor field = field_from_json(member(j, "field", "sequence"));
    int dim = member(j, "dim", "sequence").get<int>();
    FinSuppSequence s(field, dim);
    const Json& support = member(j, "support", "sequence");
    if (!support.is_object()) throw parse_error("sequence: support must be an object");
    for (const auto& [key, entries] : support.items()) {
        std::int64_t index = 0;
        try {
            index = std::stoll(key);
        } catch (const std::exception&) {
            throw parse_error("sequence: bad support index \"" + key + "\"");
        }
        if (!entries.is_array() || static_cast<int>(entries.size()) != dim)
            throw parse_error("sequence: component at " + key + " has wrong dimension");
        std::vector<Scalar> v;
        v.reserve(entries.size());
        for (const Json& cell : entries) v.push_back(parse_scalar(cell.get<std::string>(), field));
        s.set(index, Vector(field, std::move(v)));
    }
    return s;
}

Json magic_report_to_json(const MagicReport& r) {
    Json identities = Json::object();
    Json first_failure;
    for (const IdentityCheck& c : r.checks) {
        identities[c.name] = c.pass;
        if (!c.pass && first_failure.is_null())
            first_failure = Json{{"identity", c.name}, {"row", c.row}, {"col", c.col},
                                 {"lhs", c.lhs},       {"rhs", c.rhs}};
    }
    Json out{{"magic", r.magic}, {"identities", std::move(identities)}};
    if (!first_failure.is_null()) out["first_failure"] = std::move(first_failure);
    return out;
}

Json axiom_report_to_json(const AxiomReport& r) {
    Json checks = Json::array();
    for (const AxiomCheck& c : r.checks) {
        Json item{{"axiom", c.axiom}, {"pass", c.pass}};
        if (!c.pass) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return Json{{"all_pass", r.all_pass()}, {"axioms", std::move(checks)}};
}

Json vn_result_to_json(const VnResult& r) {
    return Json{{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"holds", r.holds}};
}

Json ergodic_result_to_json(const ErgodicResult& r) {
    Json lhs = Json::array(), rhs = Json::array();
    for (int i = 0; i < r.lhs.dim(); ++i) lhs.push_back(to_string(r.lhs[i]));
    for (int i = 0; i < r.rhs.dim(); ++i) rhs.push_back(to_string(r.rhs[i]));
    return Json{{"lhs_vector", std::move(lhs)}, {"rhs_vector", std::move(rhs)},
                {"equal", r.equal}};
}

Json stabilization_report_to_json(const StabilizationReport& r) {
    Json rows = Json::array();
    for (const StabilizationRow& row : r.rows)
        rows.push_back(Json{{"n", row.n}, {"delta_norm", to_string(row.delta_norm)}});
    return Json{{"rows", std::move(rows)},
                {"nonincreasing_to_zero", r.nonincreasing_to_zero}};
}

} // namespace padic
