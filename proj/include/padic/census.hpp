#pragma once

#include <iosfwd>
#include <optional>

#include "padic/magic.hpp"

namespace padic {

struct CensusRow {
    Matrix t;
    std::uint64_t witness_count = 0; // lower bound 1 in early-exit mode
    std::optional<MagicWitness> sample;
};

struct CensusOptions {
    std::uint64_t budget = 10'000'000;
    bool full_witness_count = false; // default counts existence only
    int partitions = 1;              // deterministic ordered merge
};

struct CensusResult {
    Int total_matrices = 0;
    std::uint64_t magic_count = 0;
    std::vector<CensusRow> rows; // one per scanned T, lexicographic
};

/// Exhaustive scan of M_n(F_p), each matrix run through witness search.
/// The budget guards p^(n^2) * p^(n(n+1)/2); exceeding it is a hard
/// error, never silent truncation.
CensusResult count_magic(int n, std::int64_t p, const CensusOptions& opts = {});

/// Count of t in F_p with 1 - t^2 a square, via the Euler criterion and
/// no matrix search.  Contract: equals count_magic(1, p).magic_count.
std::int64_t scalar_census(std::int64_t p);

struct ParametricRow {
    std::int64_t a = 0, b = 0;
    Matrix t;
    MagicWitness witness;
};

/// All (a, b) with a^2 + b^2 = p-1 and 2ab = p-2 in F_p, packaged with
/// the all-(p-1) 2x2 matrix and witness [[a, b], [b, a]]; every row
/// passes verify_magic.
std::vector<ParametricRow> parametric_family(std::int64_t p);

/// CSV schema, one row per magic T:
/// p,n,matrix_entries(semicolon-joined row-major),witness_count,sample_m_t,sample_m_t_star
void write_census_csv(std::ostream& os, const CensusResult& result, int n, std::int64_t p);

} // namespace padic
