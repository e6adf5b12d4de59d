#include "padic/magic.hpp"

#include <utility>

namespace padic {
namespace {

// Odometer over the upper-triangular entries of a symmetric n x n matrix
// over F_p, lexicographic with the last entry least significant.
class SymmetricScan {
public:
    SymmetricScan(const FieldDescriptor& field, int n)
        : field_(field), n_(n), digits_(static_cast<std::size_t>(n) * (n + 1) / 2, 0) {}

    Matrix current() const {
        Matrix m = Matrix::zero(field_, n_, n_);
        std::size_t k = 0;
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j, ++k) {
                Scalar v = Scalar::from_residue(field_, digits_[k]);
                m.set(i, j, v);
                if (i != j) m.set(j, i, v);
            }
        }
        return m;
    }

    bool advance() {
        for (std::size_t k = digits_.size(); k-- > 0;) {
            if (++digits_[k] < field_.p()) return true;
            digits_[k] = 0;
        }
        return false;
    }

private:
    FieldDescriptor field_;
    int n_;
    std::vector<std::int64_t> digits_;
};

std::vector<Matrix> symmetric_square_roots(const Matrix& target) {
    std::vector<Matrix> roots;
    SymmetricScan scan(target.field(), target.rows());
    do {
        Matrix m = scan.current();
        if (mat_mul(m, m) == target) roots.push_back(std::move(m));
    } while (scan.advance());
    return roots;
}

IdentityCheck compare_matrices(std::string name, const Matrix& lhs, const Matrix& rhs) {
    IdentityCheck c{std::move(name), true, -1, -1, "", ""};
    for (int i = 0; i < lhs.rows() && c.pass; ++i) {
        for (int j = 0; j < lhs.cols() && c.pass; ++j) {
            if (lhs.at(i, j) != rhs.at(i, j)) {
                c.pass = false;
                c.row = i;
                c.col = j;
                c.lhs = to_string(lhs.at(i, j));
                c.rhs = to_string(rhs.at(i, j));
            }
        }
    }
    return c;
}

Int checked_pow(std::int64_t base, int exp) {
    return boost::multiprecision::pow(Int(base), static_cast<unsigned>(exp));
}

} // namespace

Matrix defect(const Matrix& t) {
    Matrix tst = mat_mul(adjoint(t), t, Cancel::zero);
    return mat_sub(Matrix::identity(t.field(), t.cols()), tst, Cancel::zero);
}

Matrix codefect(const Matrix& t) {
    Matrix tts = mat_mul(t, adjoint(t), Cancel::zero);
    return mat_sub(Matrix::identity(t.field(), t.rows()), tts, Cancel::zero);
}

MagicReport verify_magic(const Matrix& t, const MagicWitness& w) {
    if (w.m_t.rows() != t.cols() || !w.m_t.is_square())
        throw shape_error("m_t must be square of T's column dimension");
    if (w.m_t_star.rows() != t.rows() || !w.m_t_star.is_square())
        throw shape_error("m_t_star must be square of T's row dimension");
    if (t.field() != w.m_t.field() || t.field() != w.m_t_star.field())
        throw descriptor_mismatch("witness field differs from T");

    MagicReport report;
    report.checks.push_back(compare_matrices("m_t self-adjoint", w.m_t, adjoint(w.m_t)));
    report.checks.push_back(
        compare_matrices("m_t_star self-adjoint", w.m_t_star, adjoint(w.m_t_star)));
    report.checks.push_back(compare_matrices("m_t^2 = I - T*T",
                                             mat_mul(w.m_t, w.m_t, Cancel::zero), defect(t)));
    report.checks.push_back(compare_matrices(
        "m_t_star^2 = I - TT*", mat_mul(w.m_t_star, w.m_t_star, Cancel::zero), codefect(t)));
    report.checks.push_back(compare_matrices("T m_t = m_t_star T",
                                             mat_mul(t, w.m_t, Cancel::zero),
                                             mat_mul(w.m_t_star, t, Cancel::zero)));
    report.magic = true;
    for (const IdentityCheck& c : report.checks) report.magic = report.magic && c.pass;
    return report;
}

std::vector<MagicWitness> search_witnesses(const Matrix& t, const SearchOptions& opts) {
    if (t.field().kind() != FieldKind::prime_field)
        throw unsupported("witness search is defined over prime fields only");
    int n = t.cols(), m = t.rows();
    Int candidates = checked_pow(t.field().p(), n * (n + 1) / 2) +
                     checked_pow(t.field().p(), m * (m + 1) / 2);
    if (candidates > opts.budget)
        throw budget_exceeded("witness search would enumerate " + candidates.str() +
                              " candidates (budget " + std::to_string(opts.budget) + ")");

    std::vector<Matrix> roots_t = symmetric_square_roots(defect(t));
    if (roots_t.empty()) return {};
    std::vector<Matrix> roots_ts = symmetric_square_roots(codefect(t));

    std::vector<MagicWitness> out;
    for (const Matrix& mt : roots_t) {
        Matrix lhs = mat_mul(t, mt);
        for (const Matrix& mts : roots_ts) {
            if (lhs == mat_mul(mts, t)) {
                out.push_back(MagicWitness{mt, mts});
                if (opts.early_exit) return out;
            }
        }
    }
    return out;
}

std::optional<Scalar> is_magic_1x1(const Scalar& t) {
    Scalar d = sub(Scalar::one(t.field()), mul(t, t), Cancel::zero);
    std::vector<Scalar> roots = sqrt_all(d);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

bool check_fixed_point_transfer(const Matrix& t, const MagicWitness& w, const Vector& x) {
    if (!t.is_square()) throw shape_error("fixed points need a square T");
    if (!verify_magic(t, w).magic)
        throw precondition_error("witness fails verify_magic");
    if (apply(t, x, Cancel::zero) != x)
        throw precondition_error("x is not a fixed point of T");
    return apply(adjoint(t), x, Cancel::zero) == x;
}

} // namespace padic
