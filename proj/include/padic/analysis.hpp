#pragma once

#include "padic/dilation.hpp"

namespace padic {

/// Polynomial over one field, coefficients indexed by degree and
/// canonically trimmed (the zero polynomial keeps a single zero).
class Polynomial {
public:
    Polynomial(const FieldDescriptor& field, std::vector<Scalar> coefficients);
    static Polynomial from_ints(const FieldDescriptor& field,
                                const std::vector<std::int64_t>& coefficients);

    const FieldDescriptor& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar& coefficient(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

private:
    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

/// Horner evaluation of f(A), exact.
Matrix eval_on_matrix(const Polynomial& f, const Matrix& a, Cancel policy = Cancel::error);

struct VnResult {
    Rat lhs;  // |f(T)|
    Rat rhs;  // |f(U)| for the Egervary N-dilation U
    bool holds = false;
};

/// |f(T)| <= |f(U)| with U the Egervary N-dilation built from w; exact
/// rational comparison.  A false result fails the theorem and the suite.
VnResult vn_check(const Polynomial& f, const Matrix& t, const MagicWitness& w, int n_steps);

/// (1/(N+1)) * sum_{n=1..N} T^n, exact.  Over F_p the weight must be
/// invertible: p dividing N+1 is an error, not a silent degradation.
Matrix cesaro_average(const Matrix& t, int n_steps);

struct ErgodicResult {
    Vector lhs;  // cesaro_average(T, N) v
    Vector rhs;  // index-0 component of the compressed dilation average
    bool equal = false;
};

/// Exact identity between the Cesaro average of T applied to v and the
/// index-0 compression of the Cesaro average of the Sz.-Nagy dilation.
ErgodicResult ergodic_compression_check(const Matrix& t, const MagicWitness& w, int n_steps,
                                        const Vector& v);

struct StabilizationRow {
    int n;
    Rat delta_norm;  // |A_{n+1} v - A_n v|
};

struct StabilizationReport {
    std::vector<StabilizationRow> rows;
    bool nonincreasing_to_zero = false;
};

/// Diagnostic table of successive Cesaro differences over Q_p; no
/// convergence claim is made.  Differences below the tracked precision
/// report as zero.
StabilizationReport cesaro_stabilization(const Matrix& t, const Vector& v, int n_max);

} // namespace padic
