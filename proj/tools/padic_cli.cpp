// Command-line entry point for the p-adic magic-contraction toolkit.
//
// Exit codes: 0 = success / property holds, 1 = property does not hold
// (a legitimate answer, e.g. "not a magic contraction"), 2 = usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "padic/analysis.hpp"
#include "padic/census.hpp"
#include "padic/json_io.hpp"
#include "padic/random.hpp"

namespace {

using padic::Json;

struct GlobalFlags {
    std::string field_kind; // "Fp" | "Qp" | ""
    std::int64_t p = 0;
    std::int32_t precision = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw padic::parse_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw padic::parse_error(path + ": " + e.what());
    }
}

// Cross-check the global field flags against a descriptor from a file.
void check_flags(const GlobalFlags& g, const padic::FieldDescriptor& field) {
    if (g.p != 0 && g.p != field.p())
        throw padic::parse_error("--p disagrees with the input file's field");
    if (!g.field_kind.empty()) {
        bool fp = g.field_kind == "Fp";
        if (fp != (field.kind() == padic::FieldKind::prime_field))
            throw padic::parse_error("--field disagrees with the input file's field");
    }
    if (g.precision != 0 && field.kind() == padic::FieldKind::padic_field &&
        g.precision != field.precision())
        throw padic::parse_error("--precision disagrees with the input file's field");
}

padic::FieldDescriptor field_from_flags(const GlobalFlags& g) {
    if (g.p == 0) throw padic::parse_error("--p is required for this command");
    if (g.field_kind == "Qp")
        return padic::FieldDescriptor::padic_field(g.p, g.precision > 0 ? g.precision : 20);
    return padic::FieldDescriptor::prime_field(g.p);
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("MAGIC_BUDGET");
    if (!env) return fallback;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw padic::parse_error("MAGIC_BUDGET must be an integer");
    }
}

void emit(const Json& j, const GlobalFlags& g) {
    if (g.format == "plain") {
        for (const auto& [key, value] : j.items())
            std::cout << key << ": " << value.dump() << "\n";
        return;
    }
    if (g.format != "json")
        throw padic::parse_error("--format " + g.format + " is not available here");
    std::cout << j.dump(2) << "\n";
}

int cmd_verify(const GlobalFlags& g, const std::string& input, const std::string& witness_path) {
    padic::Matrix t = padic::matrix_from_json(load_json(input));
    check_flags(g, t.field());
    if (!witness_path.empty()) {
        padic::MagicWitness w = padic::witness_from_json(load_json(witness_path));
        padic::MagicReport report = padic::verify_magic(t, w);
        emit(padic::magic_report_to_json(report), g);
        return report.magic ? 0 : 1;
    }
    // Search mode: existence decides the verdict.
    if (t.field().kind() == padic::FieldKind::padic_field) {
        if (t.rows() != 1 || t.cols() != 1)
            throw padic::unsupported("search over Q_p is available for 1x1 matrices only");
        std::optional<padic::Scalar> root = padic::is_magic_1x1(t.at(0, 0));
        Json out{{"magic", root.has_value()}};
        if (root) out["witness_1x1"] = padic::to_string(*root);
        emit(out, g);
        return root ? 0 : 1;
    }
    padic::SearchOptions opts{budget_from_env(10'000'000), true};
    std::vector<padic::MagicWitness> found = padic::search_witnesses(t, opts);
    Json out{{"magic", !found.empty()}};
    if (!found.empty()) out["witness"] = padic::witness_to_json(found.front());
    emit(out, g);
    return found.empty() ? 1 : 0;
}

int cmd_search(const GlobalFlags& g, const std::string& input, bool first_only) {
    padic::Matrix t = padic::matrix_from_json(load_json(input));
    check_flags(g, t.field());
    padic::SearchOptions opts{budget_from_env(10'000'000), first_only};
    std::vector<padic::MagicWitness> found = padic::search_witnesses(t, opts);
    Json list = Json::array();
    for (const padic::MagicWitness& w : found) list.push_back(padic::witness_to_json(w));
    emit(Json{{"count", found.size()}, {"witnesses", std::move(list)}}, g);
    return found.empty() ? 1 : 0;
}

int cmd_dilate(const GlobalFlags& g, const std::string& kind, int n_steps, int window,
               const std::string& input, const std::string& witness_path,
               const std::string& sequence_path) {
    padic::Matrix t = padic::matrix_from_json(load_json(input));
    check_flags(g, t.field());
    padic::MagicWitness w = padic::witness_from_json(load_json(witness_path));

    if (kind == "halmos") {
        emit(padic::matrix_to_json(padic::halmos(t, w)), g);
        return 0;
    }
    if (kind == "egervary") {
        emit(padic::matrix_to_json(padic::egervary(t, w, n_steps)), g);
        return 0;
    }
    if (kind != "sznagy") throw padic::parse_error("--kind must be halmos, egervary or sznagy");

    padic::SzNagyOperator op(t, w);
    Json out;
    if (!sequence_path.empty()) {
        Json sj = load_json(sequence_path);
        if (!sj.contains("field")) sj["field"] = padic::field_to_json(t.field());
        if (!sj.contains("dim")) sj["dim"] = t.rows();
        padic::FinSuppSequence x = padic::sequence_from_json(sj);
        Json steps = Json::array();
        steps.push_back(padic::sequence_to_json(x));
        for (int i = 0; i < n_steps; ++i) {
            x = padic::sznagy_apply(op, x);
            steps.push_back(padic::sequence_to_json(x));
        }
        out["steps"] = std::move(steps);
    }
    int code = 0;
    if (window > 0) {
        padic::WindowReport report = padic::verify_unitary_window(op, window, g.seed);
        out["window_check"] = Json{{"pass", report.pass}, {"detail", report.detail}};
        code = report.pass ? 0 : 1;
    }
    if (out.is_null()) throw padic::parse_error("sznagy needs --sequence and/or --window");
    emit(out, g);
    return code;
}

int cmd_vn(const GlobalFlags& g, const std::string& poly, const std::string& input,
           const std::string& witness_path, int n_steps) {
    padic::Matrix t = padic::matrix_from_json(load_json(input));
    check_flags(g, t.field());
    padic::MagicWitness w = padic::witness_from_json(load_json(witness_path));

    std::vector<padic::Scalar> coeffs;
    std::stringstream ss(poly);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(padic::parse_scalar(item, t.field()));
    padic::Polynomial f(t.field(), std::move(coeffs));

    padic::VnResult r = padic::vn_check(f, t, w, n_steps);
    emit(padic::vn_result_to_json(r), g);
    return r.holds ? 0 : 1;
}

int cmd_ergodic(const GlobalFlags& g, const std::string& input, const std::string& witness_path,
                int n_steps, const std::string& vector_path) {
    padic::Matrix t = padic::matrix_from_json(load_json(input));
    check_flags(g, t.field());
    padic::MagicWitness w = padic::witness_from_json(load_json(witness_path));
    padic::Vector v = padic::vector_from_json(load_json(vector_path));
    padic::ErgodicResult r = padic::ergodic_compression_check(t, w, n_steps, v);
    emit(padic::ergodic_result_to_json(r), g);
    return r.equal ? 0 : 1;
}

int cmd_census(const GlobalFlags& g, int n, bool count_only, bool full_witness_count,
               int partitions, const std::string& out_path) {
    if (g.p == 0) throw padic::parse_error("census needs --p");
    padic::CensusOptions opts;
    opts.budget = budget_from_env(opts.budget);
    opts.full_witness_count = full_witness_count;
    opts.partitions = partitions;
    padic::CensusResult result = padic::count_magic(n, g.p, opts);

    Json summary{{"total_matrices", result.total_matrices.str()},
                 {"magic_count", result.magic_count}};
    if (count_only) {
        emit(summary, g);
        return 0;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw padic::parse_error("cannot write " + out_path);
        padic::write_census_csv(out, result, n, g.p);
        emit(summary, g);
        return 0;
    }
    if (g.format == "csv") {
        padic::write_census_csv(std::cout, result, n, g.p);
        return 0;
    }
    std::ostringstream csv;
    padic::write_census_csv(csv, result, n, g.p);
    summary["csv"] = csv.str();
    emit(summary, g);
    return 0;
}

int cmd_axioms(const GlobalFlags& g, int dim, int samples) {
    padic::FieldDescriptor field = field_from_flags(g);
    padic::Rng rng(g.seed);
    std::vector<padic::Vector> xs;
    xs.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) xs.push_back(rng.vector(field, dim));
    padic::AxiomReport report = padic::check_axioms(field, xs);
    emit(padic::axiom_report_to_json(report), g);
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic magic contractions, dilations and censuses"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--field", g.field_kind, "Fp or Qp")->check(CLI::IsMember({"Fp", "Qp"}));
    app.add_option("--p", g.p, "prime of the scalar field");
    app.add_option("--precision", g.precision, "Q_p significant-digit cap");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--format", g.format, "json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    std::string input, witness, sequence, vector_path, poly, kind, out_path;
    int n_steps = 1, window = 0, dim = 2, samples = 16, census_n = 1, partitions = 1;
    bool first_only = false, count_only = false, full_witness_count = false;

    CLI::App* verify = app.add_subcommand("verify", "check or decide the magic identities");
    verify->add_option("--input", input, "matrix JSON")->required();
    verify->add_option("--witness", witness, "witness JSON (omit to search)");

    CLI::App* search = app.add_subcommand("search", "enumerate witness pairs over F_p");
    search->add_option("--input", input, "matrix JSON")->required();
    search->add_flag("--first", first_only, "stop at the first witness");

    CLI::App* dilate = app.add_subcommand("dilate", "construct a unitary dilation");
    dilate->add_option("--kind", kind, "halmos, egervary or sznagy")->required();
    dilate->add_option("--N", n_steps, "dilation order / application count");
    dilate->add_option("--window", window, "unitarity window for sznagy");
    dilate->add_option("--input", input, "matrix JSON")->required();
    dilate->add_option("--witness", witness, "witness JSON")->required();
    dilate->add_option("--sequence", sequence, "input sequence JSON for sznagy");

    CLI::App* vn = app.add_subcommand("vn", "von Neumann inequality check");
    vn->add_option("--poly", poly, "coefficients a0,a1,...,aN")->required();
    vn->add_option("--input", input, "matrix JSON")->required();
    vn->add_option("--witness", witness, "witness JSON")->required();
    vn->add_option("--N", n_steps, "dilation order")->required();

    CLI::App* ergodic = app.add_subcommand("ergodic", "Cesaro compression identity");
    ergodic->add_option("--input", input, "matrix JSON")->required();
    ergodic->add_option("--witness", witness, "witness JSON")->required();
    ergodic->add_option("--N", n_steps, "Cesaro order")->required();
    ergodic->add_option("--vector", vector_path, "vector JSON")->required();

    CLI::App* census = app.add_subcommand("census", "enumerate magic contractions in M_n(F_p)");
    census->add_option("--n", census_n, "matrix dimension")->required();
    census->add_flag("--count-only", count_only, "summary counts only");
    census->add_flag("--full-witness-count", full_witness_count, "exact witness counts");
    census->add_option("--partitions", partitions, "worker partitions (deterministic merge)");
    census->add_option("--out", out_path, "CSV output path");

    CLI::App* axioms = app.add_subcommand("axioms", "inner-product axiom report on random samples");
    axioms->add_option("--dim", dim, "vector dimension");
    axioms->add_option("--samples", samples, "number of random samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(g, input, witness);
        if (search->parsed()) return cmd_search(g, input, first_only);
        if (dilate->parsed()) return cmd_dilate(g, kind, n_steps, window, input, witness, sequence);
        if (vn->parsed()) return cmd_vn(g, poly, input, witness, n_steps);
        if (ergodic->parsed()) return cmd_ergodic(g, input, witness, n_steps, vector_path);
        if (census->parsed())
            return cmd_census(g, census_n, count_only, full_witness_count, partitions, out_path);
        if (axioms->parsed()) return cmd_axioms(g, dim, samples);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
