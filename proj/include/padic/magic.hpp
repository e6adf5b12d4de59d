#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/linalg.hpp"

namespace padic {

/// A pair of self-adjoint matrices certifying the magic-contraction
/// identities for some T of shape m x n: m_t is n x n, m_t_star is m x m.
struct MagicWitness {
    Matrix m_t;
    Matrix m_t_star;
};

/// I - T*T, exact.
Matrix defect(const Matrix& t);
/// I - TT*, exact.
Matrix codefect(const Matrix& t);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    int row = -1, col = -1;  // first failing entry when !pass
    std::string lhs, rhs;
};

struct MagicReport {
    bool magic = false;
    std::vector<IdentityCheck> checks;
};

/// Checks the five defining identities exactly: self-adjointness of both
/// witnesses, m_t^2 = I - T*T, m_t_star^2 = I - TT*, and T m_t = m_t_star T.
MagicReport verify_magic(const Matrix& t, const MagicWitness& w);

struct SearchOptions {
    std::uint64_t budget = 10'000'000; // max enumerated symmetric candidates
    bool early_exit = false;           // stop at the first valid pair
};

/// Exhaustive deterministic enumeration of all witness pairs over F_p,
/// lexicographic in the upper-triangular entries: first the square roots
/// of the defect, then of the codefect, then the intertwining filter.
/// An empty result means T is not a magic contraction.
std::vector<MagicWitness> search_witnesses(const Matrix& t, const SearchOptions& opts = {});

/// Scalar fast path: t is a magic contraction iff 1 - t^2 is a square
/// (the intertwining identity is automatic).  Returns a root as witness.
std::optional<Scalar> is_magic_1x1(const Scalar& t);

/// Fixed-point transfer: given a verified witness and Tx = x, asserts
/// T*x = x.  Precondition violations are reported distinctly from a
/// failing assertion (which would indicate an implementation bug).
bool check_fixed_point_transfer(const Matrix& t, const MagicWitness& w, const Vector& x);

} // namespace padic
