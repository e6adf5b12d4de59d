#include "padic/dilation.hpp"

#include <sstream>
#include <utility>

#include "padic/random.hpp"

namespace padic {
namespace {

void require_valid_witness(const Matrix& t, const MagicWitness& w) {
    if (!t.is_square()) throw shape_error("dilation needs a square T");
    if (!verify_magic(t, w).magic)
        throw precondition_error("witness fails verify_magic");
}

} // namespace

Matrix assemble_blocks(const std::vector<std::vector<Matrix>>& blocks) {
    if (blocks.empty() || blocks.front().empty())
        throw shape_error("empty block grid");
    const Matrix& first = blocks.front().front();
    int d = first.rows();
    if (d != first.cols()) throw shape_error("blocks must be square");
    std::size_t block_cols = blocks.front().size();
    for (const auto& row : blocks) {
        if (row.size() != block_cols) throw shape_error("ragged block grid");
        for (const Matrix& b : row)
            if (b.rows() != d || b.cols() != d || b.field() != first.field())
                throw shape_error("blocks must share shape and field");
    }
    int rows = static_cast<int>(blocks.size()) * d;
    int cols = static_cast<int>(block_cols) * d;
    Matrix out = Matrix::zero(first.field(), rows, cols);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (std::size_t bj = 0; bj < block_cols; ++bj)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    out.set(static_cast<int>(bi) * d + i, static_cast<int>(bj) * d + j,
                            blocks[bi][bj].at(i, j));
    return out;
}

Matrix halmos(const Matrix& t, const MagicWitness& w) {
    require_valid_witness(t, w);
    return assemble_blocks({{t, w.m_t_star}, {w.m_t, mat_neg(adjoint(t))}});
}

Matrix egervary(const Matrix& t, const MagicWitness& w, int n_steps) {
    if (n_steps < 1) throw precondition_error("egervary needs N >= 1");
    require_valid_witness(t, w);
    int d = t.rows();
    Matrix z = Matrix::zero(t.field(), d, d);
    Matrix id = Matrix::identity(t.field(), d);
    std::vector<std::vector<Matrix>> grid(
        static_cast<std::size_t>(n_steps) + 1,
        std::vector<Matrix>(static_cast<std::size_t>(n_steps) + 1, z));
    grid[0][0] = t;
    grid[0][static_cast<std::size_t>(n_steps)] = w.m_t_star;
    grid[1][0] = w.m_t;
    grid[1][static_cast<std::size_t>(n_steps)] = mat_neg(adjoint(t));
    for (int i = 2; i <= n_steps; ++i)
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) - 1] = id;
    return assemble_blocks(grid);
}

Matrix compress(const Matrix& u, int base_dim, int power, Cancel policy) {
    if (!u.is_square() || base_dim < 1 || u.rows() % base_dim != 0)
        throw shape_error("compress needs a square U whose dimension is a multiple of d");
    Matrix uk = mat_pow(u, power, policy);
    Matrix out = Matrix::zero(u.field(), base_dim, base_dim);
    for (int i = 0; i < base_dim; ++i)
        for (int j = 0; j < base_dim; ++j) out.set(i, j, uk.at(i, j));
    return out;
}

FinSuppSequence::FinSuppSequence(const FieldDescriptor& field, int dim)
    : field_(field), dim_(dim) {
    if (dim < 1) throw shape_error("sequence dimension must be positive");
}

FinSuppSequence FinSuppSequence::embed(const Vector& v, std::int64_t index) {
    FinSuppSequence s(v.field(), v.dim());
    s.set(index, v);
    return s;
}

Vector FinSuppSequence::at(std::int64_t n) const {
    auto it = support_.find(n);
    return it != support_.end() ? it->second : Vector::zero(field_, dim_);
}

void FinSuppSequence::set(std::int64_t n, Vector v) {
    if (v.field() != field_) throw descriptor_mismatch("sequence component field mismatch");
    if (v.dim() != dim_) throw shape_error("sequence component dimension mismatch");
    bool zero = true;
    for (int i = 0; i < v.dim() && zero; ++i) zero = v[i].is_zero();
    if (zero)
        support_.erase(n);
    else
        support_.insert_or_assign(n, std::move(v));
}

Rat FinSuppSequence::sup_norm() const {
    Rat best(0);
    for (const auto& [n, v] : support_) best = std::max(best, padic::sup_norm(v));
    return best;
}

bool operator==(const FinSuppSequence& a, const FinSuppSequence& b) {
    if (a.field() != b.field()) throw descriptor_mismatch("sequence field mismatch");
    if (a.dim() != b.dim()) return false;
    for (const auto& [n, v] : a.support_)
        if (b.at(n) != v) return false;
    for (const auto& [n, v] : b.support_)
        if (a.at(n) != v) return false;
    return true;
}

FinSuppSequence seq_add(const FinSuppSequence& a, const FinSuppSequence& b, Cancel policy) {
    if (a.field() != b.field()) throw descriptor_mismatch("sequence field mismatch");
    if (a.dim() != b.dim()) throw shape_error("sequence dimension mismatch");
    FinSuppSequence out(a.field(), a.dim());
    for (const auto& [n, v] : a.support()) out.set(n, v);
    for (const auto& [n, v] : b.support()) out.set(n, vec_add(out.at(n), v, policy));
    return out;
}

FinSuppSequence seq_scale(const Scalar& c, const FinSuppSequence& a) {
    FinSuppSequence out(a.field(), a.dim());
    for (const auto& [n, v] : a.support()) out.set(n, vec_scale(c, v));
    return out;
}

Scalar seq_inner_product(const FinSuppSequence& a, const FinSuppSequence& b, Cancel policy) {
    if (a.field() != b.field()) throw descriptor_mismatch("sequence field mismatch");
    if (a.dim() != b.dim()) throw shape_error("sequence dimension mismatch");
    Scalar acc = Scalar::zero(a.field());
    for (const auto& [n, v] : a.support()) {
        auto it = b.support().find(n);
        if (it != b.support().end())
            acc = add(acc, inner_product(v, it->second, policy), policy);
    }
    return acc;
}

SzNagyOperator::SzNagyOperator(Matrix t, MagicWitness w)
    : SzNagyOperator(std::move(t), std::move(w), true) {}

SzNagyOperator::SzNagyOperator(Matrix t, MagicWitness w, bool checked)
    : t_(std::move(t)), w_(std::move(w)) {
    if (!t_.is_square()) throw shape_error("Sz.-Nagy operator needs a square T");
    if (checked) require_valid_witness(t_, w_);
}

SzNagyOperator SzNagyOperator::make_unchecked(Matrix t, MagicWitness w) {
    return SzNagyOperator(std::move(t), std::move(w), false);
}

FinSuppSequence sznagy_apply(const SzNagyOperator& op, const FinSuppSequence& x, Cancel policy) {
    if (x.field() != op.field()) throw descriptor_mismatch("sequence field mismatch");
    if (x.dim() != op.dim()) throw shape_error("sequence dimension mismatch");
    FinSuppSequence y(x.field(), x.dim());
    for (const auto& [n, v] : x.support())
        if (n != 0 && n != 1) y.set(n - 1, v);
    Vector x0 = x.at(0), x1 = x.at(1);
    y.set(0, vec_add(apply(op.t(), x0, policy), apply(op.witness().m_t_star, x1, policy),
                     policy));
    y.set(-1, vec_sub(apply(op.witness().m_t, x0, policy),
                      apply(adjoint(op.t()), x1, policy), policy));
    return y;
}

FinSuppSequence sznagy_apply_adjoint(const SzNagyOperator& op, const FinSuppSequence& x,
                                     Cancel policy) {
    if (x.field() != op.field()) throw descriptor_mismatch("sequence field mismatch");
    if (x.dim() != op.dim()) throw shape_error("sequence dimension mismatch");
    FinSuppSequence y(x.field(), x.dim());
    for (const auto& [n, v] : x.support())
        if (n != -1 && n != 0) y.set(n + 1, v);
    Vector xm1 = x.at(-1), x0 = x.at(0);
    y.set(0, vec_add(apply(op.witness().m_t, xm1, policy),
                     apply(adjoint(op.t()), x0, policy), policy));
    y.set(1, vec_add(vec_neg(apply(op.t(), xm1, policy)),
                     apply(op.witness().m_t_star, x0, policy), policy));
    return y;
}

Vector sznagy_compress(const SzNagyOperator& op, int power, const Vector& v) {
    if (power < 0) throw precondition_error("power must be non-negative");
    FinSuppSequence x = FinSuppSequence::embed(v, 0);
    for (int i = 0; i < power; ++i) x = sznagy_apply(op, x);
    return x.at(0);
}

WindowReport verify_unitary_window(const SzNagyOperator& op, int window, std::uint64_t seed,
                                   int random_pairs) {
    WindowReport report;
    for (std::int64_t k = -window; k <= window; ++k) {
        for (int j = 0; j < op.dim(); ++j) {
            FinSuppSequence e =
                FinSuppSequence::embed(Vector::basis(op.field(), op.dim(), j), k);
            if (sznagy_apply_adjoint(op, sznagy_apply(op, e, Cancel::zero), Cancel::zero) != e) {
                std::ostringstream os;
                os << "UV != identity on basis sequence k=" << k << " j=" << j;
                return WindowReport{false, os.str()};
            }
            if (sznagy_apply(op, sznagy_apply_adjoint(op, e, Cancel::zero), Cancel::zero) != e) {
                std::ostringstream os;
                os << "VU != identity on basis sequence k=" << k << " j=" << j;
                return WindowReport{false, os.str()};
            }
        }
    }

    Rng rng(seed);
    for (int trial = 0; trial < random_pairs; ++trial) {
        FinSuppSequence a(op.field(), op.dim());
        FinSuppSequence b(op.field(), op.dim());
        for (int c = 0; c < 4; ++c) {
            std::int64_t idx =
                static_cast<std::int64_t>(rng.below(2 * static_cast<std::uint64_t>(window) + 1)) -
                window;
            a.set(idx, rng.vector(op.field(), op.dim()));
            idx = static_cast<std::int64_t>(rng.below(2 * static_cast<std::uint64_t>(window) + 1)) -
                  window;
            b.set(idx, rng.vector(op.field(), op.dim()));
        }
        Scalar lhs = seq_inner_product(sznagy_apply(op, a, Cancel::zero), b, Cancel::zero);
        Scalar rhs = seq_inner_product(a, sznagy_apply_adjoint(op, b, Cancel::zero), Cancel::zero);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "<Ua,b> != <a,Vb> on random pair " << trial;
            return WindowReport{false, os.str()};
        }
    }
    return report;
}

} // namespace padic
