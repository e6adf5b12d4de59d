#include "padic/analysis.hpp"

namespace padic {

Polynomial::Polynomial(const FieldDescriptor& field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) coeffs_.push_back(Scalar::zero(field_));
    for (const Scalar& c : coeffs_)
        if (c.field() != field_) throw descriptor_mismatch("coefficient field mismatch");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_ints(const FieldDescriptor& field,
                                 const std::vector<std::int64_t>& coefficients) {
    std::vector<Scalar> c;
    c.reserve(coefficients.size());
    for (std::int64_t n : coefficients) c.push_back(Scalar::from_integer(n, field));
    return Polynomial(field, std::move(c));
}

Matrix eval_on_matrix(const Polynomial& f, const Matrix& a, Cancel policy) {
    if (!a.is_square()) throw shape_error("eval_on_matrix needs a square matrix");
    if (f.field() != a.field()) throw descriptor_mismatch("polynomial field mismatch");
    Matrix id = Matrix::identity(a.field(), a.rows());
    Matrix acc = scalar_mul(f.coefficient(f.degree()), id);
    for (int k = f.degree() - 1; k >= 0; --k)
        acc = mat_add(mat_mul(acc, a, policy), scalar_mul(f.coefficient(k), id), policy);
    return acc;
}

VnResult vn_check(const Polynomial& f, const Matrix& t, const MagicWitness& w, int n_steps) {
    if (f.degree() > n_steps)
        throw precondition_error("polynomial degree exceeds the dilation order N");
    Matrix u = egervary(t, w, n_steps); // validates the witness
    VnResult r;
    r.lhs = op_norm(eval_on_matrix(f, t));
    r.rhs = op_norm(eval_on_matrix(f, u));
    r.holds = r.lhs <= r.rhs;
    return r;
}

namespace {

Scalar cesaro_weight(const FieldDescriptor& field, int n_steps) {
    if (field.kind() == FieldKind::prime_field &&
        static_cast<std::int64_t>(n_steps + 1) % field.p() == 0)
        throw division_by_zero("Cesaro weight not invertible: p divides N+1");
    return Scalar::from_rational(1, n_steps + 1, field);
}

} // namespace

Matrix cesaro_average(const Matrix& t, int n_steps) {
    if (!t.is_square()) throw shape_error("cesaro_average needs a square matrix");
    if (n_steps < 1) throw precondition_error("cesaro_average needs N >= 1");
    Scalar weight = cesaro_weight(t.field(), n_steps);
    Matrix power = t;
    Matrix sum = t;
    for (int n = 2; n <= n_steps; ++n) {
        power = mat_mul(power, t);
        sum = mat_add(sum, power);
    }
    return scalar_mul(weight, sum);
}

ErgodicResult ergodic_compression_check(const Matrix& t, const MagicWitness& w, int n_steps,
                                        const Vector& v) {
    Scalar weight = cesaro_weight(t.field(), n_steps);
    Vector lhs = apply(cesaro_average(t, n_steps), v);

    SzNagyOperator op(t, w); // validates the witness
    FinSuppSequence cur = FinSuppSequence::embed(v, 0);
    FinSuppSequence acc(t.field(), t.rows());
    for (int n = 1; n <= n_steps; ++n) {
        cur = sznagy_apply(op, cur);
        acc = seq_add(acc, cur);
    }
    Vector rhs = vec_scale(weight, acc.at(0));
    return ErgodicResult{lhs, rhs, lhs == rhs};
}

StabilizationReport cesaro_stabilization(const Matrix& t, const Vector& v, int n_max) {
    if (t.field().kind() != FieldKind::padic_field)
        throw unsupported("cesaro_stabilization is a Q_p diagnostic");
    if (t.cols() != v.dim()) throw shape_error("vector dimension mismatch");
    StabilizationReport report;
    if (n_max < 1) return report;
    Vector prev = apply(cesaro_average(t, 1), v);
    bool nonincreasing = true;
    Rat last(0);
    for (int n = 1; n <= n_max; ++n) {
        Vector next = apply(cesaro_average(t, n + 1), v);
        Rat delta = sup_norm(vec_sub(next, prev, Cancel::zero));
        if (!report.rows.empty() && delta > report.rows.back().delta_norm)
            nonincreasing = false;
        report.rows.push_back(StabilizationRow{n, delta});
        last = delta;
        prev = next;
    }
    report.nonincreasing_to_zero = nonincreasing && last == 0;
    return report;
}

} // namespace padic
