#include "padic/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace padic {
namespace {

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a != b) throw descriptor_mismatch("operands from different fields");
}

std::string coord(int i, int j) {
    std::ostringstream os;
    os << '(' << i << ',' << j << ')';
    return os.str();
}

} // namespace

Vector::Vector(const FieldDescriptor& field, std::vector<Scalar> entries)
    : field_(field), entries_(std::move(entries)) {
    if (entries_.empty()) throw shape_error("vector needs at least one entry");
    for (const Scalar& e : entries_) require_same_field(field_, e.field());
}

Vector Vector::zero(const FieldDescriptor& field, int dim) {
    return Vector(field, std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar::zero(field)));
}

Vector Vector::basis(const FieldDescriptor& field, int dim, int index) {
    if (index < 0 || index >= dim) throw shape_error("basis index out of range");
    std::vector<Scalar> e(static_cast<std::size_t>(dim), Scalar::zero(field));
    e[static_cast<std::size_t>(index)] = Scalar::one(field);
    return Vector(field, std::move(e));
}

Vector Vector::from_ints(const FieldDescriptor& field, const std::vector<std::int64_t>& v) {
    std::vector<Scalar> e;
    e.reserve(v.size());
    for (std::int64_t n : v) e.push_back(Scalar::from_integer(n, field));
    return Vector(field, std::move(e));
}

bool operator==(const Vector& a, const Vector& b) {
    require_same_field(a.field(), b.field());
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Matrix::Matrix(const FieldDescriptor& field, int rows, int cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw shape_error("matrix dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw shape_error("entry count does not match shape");
    for (const Scalar& e : entries_) require_same_field(field_, e.field());
}

Matrix Matrix::zero(const FieldDescriptor& field, int rows, int cols) {
    return Matrix(field, rows, cols,
                  std::vector<Scalar>(static_cast<std::size_t>(rows) * cols, Scalar::zero(field)));
}

Matrix Matrix::identity(const FieldDescriptor& field, int n) {
    Matrix m = zero(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::from_ints(const FieldDescriptor& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<Scalar> e;
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw shape_error("ragged rows");
        for (std::int64_t n : row) e.push_back(Scalar::from_integer(n, field));
    }
    return Matrix(field, r, c, std::move(e));
}

void Matrix::set(int i, int j, Scalar v) {
    require_same_field(field_, v.field());
    entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(v);
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k] != b.entries_[k]) return false;
    return true;
}

Scalar inner_product(const Vector& x, const Vector& y, Cancel policy) {
    require_same_field(x.field(), y.field());
    if (x.dim() != y.dim()) throw shape_error("inner product of unequal lengths");
    Scalar acc = Scalar::zero(x.field());
    for (int i = 0; i < x.dim(); ++i)
        acc = add(acc, mul(x[i], y[i]), policy);
    return acc;
}

Rat sup_norm(const Vector& x) {
    Rat best(0);
    for (int i = 0; i < x.dim(); ++i) best = std::max(best, x[i].norm());
    return best;
}

Rat op_norm(const Matrix& a) {
    Rat best(0);
    for (const Scalar& e : a.entries()) best = std::max(best, e.norm());
    return best;
}

Matrix adjoint(const Matrix& a) {
    std::vector<Scalar> e;
    e.reserve(a.entries().size());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) e.push_back(a.at(i, j));
    return Matrix(a.field(), a.cols(), a.rows(), std::move(e));
}

Matrix mat_add(const Matrix& a, const Matrix& b, Cancel policy) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw shape_error("mat_add shape mismatch");
    std::vector<Scalar> e;
    e.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        e.push_back(add(a.entries()[k], b.entries()[k], policy));
    return Matrix(a.field(), a.rows(), a.cols(), std::move(e));
}

Matrix mat_sub(const Matrix& a, const Matrix& b, Cancel policy) {
    return mat_add(a, mat_neg(b), policy);
}

Matrix mat_mul(const Matrix& a, const Matrix& b, Cancel policy) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw shape_error("mat_mul shape mismatch");
    Matrix out = Matrix::zero(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            Scalar acc = Scalar::zero(a.field());
            for (int k = 0; k < a.cols(); ++k)
                acc = add(acc, mul(a.at(i, k), b.at(k, j)), policy);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix mat_pow(const Matrix& a, int k, Cancel policy) {
    if (!a.is_square()) throw shape_error("mat_pow needs a square matrix");
    if (k < 0) throw shape_error("mat_pow needs a non-negative exponent");
    Matrix acc = Matrix::identity(a.field(), a.rows());
    for (int i = 0; i < k; ++i) acc = mat_mul(acc, a, policy);
    return acc;
}

Matrix mat_neg(const Matrix& a) {
    std::vector<Scalar> e;
    e.reserve(a.entries().size());
    for (const Scalar& s : a.entries()) e.push_back(neg(s));
    return Matrix(a.field(), a.rows(), a.cols(), std::move(e));
}

Matrix scalar_mul(const Scalar& c, const Matrix& a) {
    require_same_field(c.field(), a.field());
    std::vector<Scalar> e;
    e.reserve(a.entries().size());
    for (const Scalar& s : a.entries()) e.push_back(mul(c, s));
    return Matrix(a.field(), a.rows(), a.cols(), std::move(e));
}

Vector apply(const Matrix& a, const Vector& x, Cancel policy) {
    require_same_field(a.field(), x.field());
    if (a.cols() != x.dim()) throw shape_error("apply shape mismatch");
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        Scalar acc = Scalar::zero(a.field());
        for (int j = 0; j < a.cols(); ++j)
            acc = add(acc, mul(a.at(i, j), x[j]), policy);
        e.push_back(std::move(acc));
    }
    return Vector(a.field(), std::move(e));
}

Vector vec_add(const Vector& x, const Vector& y, Cancel policy) {
    require_same_field(x.field(), y.field());
    if (x.dim() != y.dim()) throw shape_error("vec_add shape mismatch");
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) e.push_back(add(x[i], y[i], policy));
    return Vector(x.field(), std::move(e));
}

Vector vec_sub(const Vector& x, const Vector& y, Cancel policy) {
    return vec_add(x, vec_neg(y), policy);
}

Vector vec_neg(const Vector& x) {
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) e.push_back(neg(x[i]));
    return Vector(x.field(), std::move(e));
}

Vector vec_scale(const Scalar& c, const Vector& x) {
    require_same_field(c.field(), x.field());
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) e.push_back(mul(c, x[i]));
    return Vector(x.field(), std::move(e));
}

bool is_self_adjoint(const Matrix& a) {
    if (!a.is_square()) throw shape_error("is_self_adjoint needs a square matrix");
    return a == adjoint(a);
}

bool is_unitary(const Matrix& a) {
    if (!a.is_square()) throw shape_error("is_unitary needs a square matrix");
    Matrix id = Matrix::identity(a.field(), a.rows());
    Matrix adj = adjoint(a);
    return mat_mul(a, adj, Cancel::zero) == id && mat_mul(adj, a, Cancel::zero) == id;
}

bool is_isometry(const Matrix& a) {
    Matrix id = Matrix::identity(a.field(), a.cols());
    return mat_mul(adjoint(a), a, Cancel::zero) == id;
}

bool is_projection(const Matrix& a) {
    if (!a.is_square()) throw shape_error("is_projection needs a square matrix");
    return mat_mul(a, a, Cancel::zero) == a && is_self_adjoint(a);
}

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

AxiomReport check_axioms(const FieldDescriptor& field, const std::vector<Vector>& samples) {
    if (samples.empty()) throw precondition_error("check_axioms needs at least one sample");
    int dim = samples.front().dim();
    for (const Vector& v : samples) {
        require_same_field(field, v.field());
        if (v.dim() != dim) throw shape_error("samples of mixed dimension");
    }

    AxiomReport report;

    // (i) nondegeneracy: the Gram matrix of the standard basis is the identity.
    {
        AxiomCheck c{"nondegeneracy", true, ""};
        for (int i = 0; i < dim && c.pass; ++i) {
            for (int j = 0; j < dim && c.pass; ++j) {
                Scalar g = inner_product(Vector::basis(field, dim, i),
                                         Vector::basis(field, dim, j), Cancel::zero);
                Scalar want = i == j ? Scalar::one(field) : Scalar::zero(field);
                if (g != want) {
                    c.pass = false;
                    c.detail = "Gram entry " + coord(i, j);
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (ii) symmetry on all sample pairs.
    {
        AxiomCheck c{"symmetry", true, ""};
        for (std::size_t i = 0; i < samples.size() && c.pass; ++i) {
            for (std::size_t j = i; j < samples.size() && c.pass; ++j) {
                if (inner_product(samples[i], samples[j], Cancel::zero) !=
                    inner_product(samples[j], samples[i], Cancel::zero)) {
                    c.pass = false;
                    c.detail = "samples " + coord(static_cast<int>(i), static_cast<int>(j));
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (iii) linearity <ax+y, z> = a<x,z> + <y,z> on cyclic triples; the
    // scalars a are drawn from a fixed small set plus sample entries.
    {
        AxiomCheck c{"linearity", true, ""};
        std::vector<Scalar> alphas = {Scalar::zero(field), Scalar::one(field),
                                      neg(Scalar::one(field))};
        for (int i = 0; i < samples.front().dim() && static_cast<int>(alphas.size()) < 6; ++i)
            alphas.push_back(samples.front()[i]);
        std::size_t n = samples.size();
        for (std::size_t i = 0; i < n && c.pass; ++i) {
            const Vector& x = samples[i];
            const Vector& y = samples[(i + 1) % n];
            const Vector& z = samples[(i + 2) % n];
            for (const Scalar& alpha : alphas) {
                Scalar lhs = inner_product(vec_add(vec_scale(alpha, x), y, Cancel::zero), z,
                                           Cancel::zero);
                Scalar rhs = add(mul(alpha, inner_product(x, z, Cancel::zero)),
                                 inner_product(y, z, Cancel::zero), Cancel::zero);
                if (lhs != rhs) {
                    c.pass = false;
                    c.detail = "triple starting at sample " + std::to_string(i);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (iv) |<x,y>| <= |x| |y| on all sample pairs.
    {
        AxiomCheck c{"norm-bound", true, ""};
        for (std::size_t i = 0; i < samples.size() && c.pass; ++i) {
            for (std::size_t j = i; j < samples.size() && c.pass; ++j) {
                Scalar ip = inner_product(samples[i], samples[j], Cancel::zero);
                if (ip.norm() > sup_norm(samples[i]) * sup_norm(samples[j])) {
                    c.pass = false;
                    c.detail = "samples " + coord(static_cast<int>(i), static_cast<int>(j));
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

} // namespace padic
