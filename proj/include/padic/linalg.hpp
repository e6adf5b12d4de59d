#pragma once

#include <initializer_list>
#include <vector>

#include "padic/fields.hpp"

namespace padic {

class Vector {
public:
    Vector(const FieldDescriptor& field, std::vector<Scalar> entries);
    static Vector zero(const FieldDescriptor& field, int dim);
    static Vector basis(const FieldDescriptor& field, int dim, int index);
    static Vector from_ints(const FieldDescriptor& field, const std::vector<std::int64_t>& v);

    const FieldDescriptor& field() const { return field_; }
    int dim() const { return static_cast<int>(entries_.size()); }
    const Scalar& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    friend bool operator==(const Vector& a, const Vector& b);
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

private:
    FieldDescriptor field_;
    std::vector<Scalar> entries_;
};

/// Dense row-major matrix over one descriptor.  All target sizes are
/// desk-scale; enumeration dominates cost, not linear algebra.
class Matrix {
public:
    Matrix(const FieldDescriptor& field, int rows, int cols, std::vector<Scalar> entries);
    static Matrix zero(const FieldDescriptor& field, int rows, int cols);
    static Matrix identity(const FieldDescriptor& field, int n);
    static Matrix from_ints(const FieldDescriptor& field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const FieldDescriptor& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Scalar& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    void set(int i, int j, Scalar v);
    const std::vector<Scalar>& entries() const { return entries_; }
    bool is_square() const { return rows_ == cols_; }

    /// Entrywise equality at the minimum tracked precision; false on
    /// shape mismatch, throws on descriptor mismatch.
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldDescriptor field_;
    int rows_, cols_;
    std::vector<Scalar> entries_;
};

Scalar inner_product(const Vector& x, const Vector& y, Cancel policy = Cancel::error);
Rat sup_norm(const Vector& x);

/// Operator norm for the sup norm on K^d: the maximum entry norm.  The
/// ultrametric estimate gives <=, and standard basis vectors attain it.
Rat op_norm(const Matrix& a);

/// The adjoint for the symmetric bilinear coordinate form: the transpose
/// (the involution on scalars is the identity).
Matrix adjoint(const Matrix& a);

Matrix mat_add(const Matrix& a, const Matrix& b, Cancel policy = Cancel::error);
Matrix mat_sub(const Matrix& a, const Matrix& b, Cancel policy = Cancel::error);
Matrix mat_mul(const Matrix& a, const Matrix& b, Cancel policy = Cancel::error);
Matrix mat_pow(const Matrix& a, int k, Cancel policy = Cancel::error);
Matrix mat_neg(const Matrix& a);
Matrix scalar_mul(const Scalar& c, const Matrix& a);

Vector apply(const Matrix& a, const Vector& x, Cancel policy = Cancel::error);
Vector vec_add(const Vector& x, const Vector& y, Cancel policy = Cancel::error);
Vector vec_sub(const Vector& x, const Vector& y, Cancel policy = Cancel::error);
Vector vec_neg(const Vector& x);
Vector vec_scale(const Scalar& c, const Vector& x);

// Operator predicates.  Exact equality checks of the defining identities;
// over Q_p the product sums treat full cancellation as zero, so the
// verdict is "at tracked precision".
bool is_self_adjoint(const Matrix& a);
bool is_unitary(const Matrix& a);
bool is_isometry(const Matrix& a);
bool is_projection(const Matrix& a);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string detail; // counterexample location when failing
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

/// Checks the inner-product axioms on the given samples: nondegeneracy
/// via the Gram matrix of the standard basis, symmetry and linearity on
/// sampled pairs/triples, and the norm bound |<x,y>| <= |x||y| on all
/// sample pairs.
AxiomReport check_axioms(const FieldDescriptor& field, const std::vector<Vector>& samples);

} // namespace padic
