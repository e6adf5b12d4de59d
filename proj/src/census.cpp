#include "padic/census.hpp"

#include <future>
#include <ostream>

namespace padic {
namespace {

Matrix matrix_from_index(const FieldDescriptor& field, int n, Int index) {
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = static_cast<std::int64_t>(index % field.p());
        index /= field.p();
    }
    std::vector<Scalar> entries;
    entries.reserve(digits.size());
    for (std::int64_t d : digits) entries.push_back(Scalar::from_residue(field, d));
    return Matrix(field, n, n, std::move(entries));
}

struct Chunk {
    std::vector<CensusRow> rows;
    std::uint64_t magic = 0;
};

Chunk scan_range(const FieldDescriptor& field, int n, Int lo, Int hi,
                 const SearchOptions& search) {
    Chunk out;
    for (Int k = lo; k < hi; ++k) {
        CensusRow row{matrix_from_index(field, n, k), 0, std::nullopt};
        std::vector<MagicWitness> found = search_witnesses(row.t, search);
        if (!found.empty()) {
            row.witness_count = found.size();
            row.sample = found.front();
            ++out.magic;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string join_entries(const Matrix& m) {
    std::string out;
    for (std::size_t k = 0; k < m.entries().size(); ++k) {
        if (k) out += ';';
        out += to_string(m.entries()[k]);
    }
    return out;
}

} // namespace

CensusResult count_magic(int n, std::int64_t p, const CensusOptions& opts) {
    if (n < 1) throw precondition_error("census needs n >= 1");
    FieldDescriptor field = FieldDescriptor::prime_field(p);
    Int total = boost::multiprecision::pow(Int(p), static_cast<unsigned>(n * n));
    Int work = total * boost::multiprecision::pow(Int(p), static_cast<unsigned>(n * (n + 1) / 2));
    if (work > opts.budget)
        throw budget_exceeded("census would touch " + work.str() + " candidates (budget " +
                              std::to_string(opts.budget) + ")");

    SearchOptions search{opts.budget, !opts.full_witness_count};
    int parts = std::max(1, opts.partitions);

    std::vector<std::future<Chunk>> futures;
    Int chunk = total / parts, rem = total % parts, lo = 0;
    for (int i = 0; i < parts; ++i) {
        Int hi = lo + chunk + (i < rem ? 1 : 0);
        futures.push_back(std::async(std::launch::async, scan_range, field, n, lo, hi, search));
        lo = hi;
    }

    CensusResult result;
    result.total_matrices = total;
    for (auto& f : futures) {
        Chunk c = f.get();
        result.magic_count += c.magic;
        for (CensusRow& r : c.rows) result.rows.push_back(std::move(r));
    }
    return result;
}

std::int64_t scalar_census(std::int64_t p) {
    if (p == 2) throw unsupported("scalar_census needs p odd; use count_magic(1, 2)");
    FieldDescriptor field = FieldDescriptor::prime_field(p);
    std::int64_t count = 0;
    for (std::int64_t t = 0; t < p; ++t) {
        Scalar s = Scalar::from_residue(field, t);
        if (is_square(sub(Scalar::one(field), mul(s, s)))) ++count;
    }
    return count;
}

std::vector<ParametricRow> parametric_family(std::int64_t p) {
    FieldDescriptor field = FieldDescriptor::prime_field(p);
    Matrix t = Matrix::zero(field, 2, 2);
    Scalar top = Scalar::from_residue(field, p - 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.set(i, j, top);

    std::vector<ParametricRow> rows;
    for (std::int64_t a = 0; a < p; ++a) {
        for (std::int64_t b = 0; b < p; ++b) {
            if ((a * a + b * b) % p != (p - 1) % p) continue;
            if ((2 * a * b) % p != (p - 2 + p) % p) continue;
            Matrix m = Matrix::zero(field, 2, 2);
            m.set(0, 0, Scalar::from_residue(field, a));
            m.set(1, 1, Scalar::from_residue(field, a));
            m.set(0, 1, Scalar::from_residue(field, b));
            m.set(1, 0, Scalar::from_residue(field, b));
            ParametricRow row{a, b, t, MagicWitness{m, m}};
            if (!verify_magic(row.t, row.witness).magic)
                throw error("parametric family row fails verification");
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_census_csv(std::ostream& os, const CensusResult& result, int n, std::int64_t p) {
    os << "p,n,matrix_entries,witness_count,sample_m_t,sample_m_t_star\n";
    for (const CensusRow& row : result.rows) {
        if (row.witness_count == 0) continue;
        os << p << ',' << n << ',' << join_entries(row.t) << ',' << row.witness_count << ','
           << join_entries(row.sample->m_t) << ',' << join_entries(row.sample->m_t_star) << '\n';
    }
}

} // namespace padic
