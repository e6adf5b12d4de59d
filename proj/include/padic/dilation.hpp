#pragma once

#include <cstdint>
#include <map>

#include "padic/magic.hpp"

namespace padic {

/// Assembles a grid of uniform d x d blocks into one matrix.
Matrix assemble_blocks(const std::vector<std::vector<Matrix>>& blocks);

/// The 2x2-block unitary [[T, M_T*], [M_T, -T*]].  Requires a verified
/// witness; its adjoint [[T*, M_T], [M_T*, -T]] is its inverse.
Matrix halmos(const Matrix& t, const MagicWitness& w);

/// The (N+1)x(N+1)-block unitary whose compressions reproduce T^k for
/// k = 1..N: block-row 0 is [T, 0, ..., 0, M_T*], block-row 1 is
/// [M_T, 0, ..., 0, -T*], and block-row i carries the identity in block
/// column i-1 for i >= 2.  N = 1 coincides with the Halmos dilation.
Matrix egervary(const Matrix& t, const MagicWitness& w, int n_steps);

/// Top-left d x d block of U^k: the coordinate form of P_X U^k |_X with
/// X embedded as block 0.
Matrix compress(const Matrix& u, int base_dim, int power, Cancel policy = Cancel::error);

/// Finitely supported Z-indexed family of vectors; the computational
/// stand-in for the bi-infinite direct sum (finite support satisfies the
/// decay condition exactly).  Zero vectors are trimmed from the support.
class FinSuppSequence {
public:
    FinSuppSequence(const FieldDescriptor& field, int dim);
    static FinSuppSequence embed(const Vector& v, std::int64_t index = 0);

    const FieldDescriptor& field() const { return field_; }
    int dim() const { return dim_; }
    const std::map<std::int64_t, Vector>& support() const { return support_; }
    /// Component at index n; absent indices are the zero vector.
    Vector at(std::int64_t n) const;
    void set(std::int64_t n, Vector v);
    bool is_zero() const { return support_.empty(); }
    Rat sup_norm() const;

    friend bool operator==(const FinSuppSequence& a, const FinSuppSequence& b);
    friend bool operator!=(const FinSuppSequence& a, const FinSuppSequence& b) {
        return !(a == b);
    }

private:
    FieldDescriptor field_;
    int dim_;
    std::map<std::int64_t, Vector> support_;
};

FinSuppSequence seq_add(const FinSuppSequence& a, const FinSuppSequence& b,
                        Cancel policy = Cancel::error);
FinSuppSequence seq_scale(const Scalar& c, const FinSuppSequence& a);
Scalar seq_inner_product(const FinSuppSequence& a, const FinSuppSequence& b,
                         Cancel policy = Cancel::error);

/// The bi-infinite shift-style dilation acting lazily on finitely
/// supported sequences; T sits at matrix position (0,0).
class SzNagyOperator {
public:
    SzNagyOperator(Matrix t, MagicWitness w);
    /// Skips witness validation; for negative controls and diagnostics.
    static SzNagyOperator make_unchecked(Matrix t, MagicWitness w);

    const Matrix& t() const { return t_; }
    const MagicWitness& witness() const { return w_; }
    const FieldDescriptor& field() const { return t_.field(); }
    int dim() const { return t_.rows(); }

private:
    SzNagyOperator(Matrix t, MagicWitness w, bool checked);
    Matrix t_;
    MagicWitness w_;
};

/// y_0 = T x_0 + M_T* x_1, y_{-1} = M_T x_0 - T* x_1, y_n = x_{n+1}
/// elsewhere.  Support grows by at most one index.
FinSuppSequence sznagy_apply(const SzNagyOperator& op, const FinSuppSequence& x,
                             Cancel policy = Cancel::error);

/// The adjoint: y_0 = M_T x_{-1} + T* x_0, y_1 = -T x_{-1} + M_T* x_0,
/// y_n = x_{n-1} elsewhere.
FinSuppSequence sznagy_apply_adjoint(const SzNagyOperator& op, const FinSuppSequence& x,
                                     Cancel policy = Cancel::error);

/// Embeds v at index 0, applies U power times, reads back index 0.
/// Contract: equals T^power v.
Vector sznagy_compress(const SzNagyOperator& op, int power, const Vector& v);

struct WindowReport {
    bool pass = true;
    std::string detail; // located failure when !pass
};

/// Exact window check of unitarity: UV = VU = identity on every basis
/// sequence with |index| <= window, and <Ua, b> = <a, Vb> on seeded
/// random pairs supported in the window.
WindowReport verify_unitary_window(const SzNagyOperator& op, int window,
                                   std::uint64_t seed = 0x5eed, int random_pairs = 16);

} // namespace padic
