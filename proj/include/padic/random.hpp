#pragma once

#include <cstdint>
#include <random>

#include "padic/linalg.hpp"

namespace padic {

/// Deterministic generator for property suites and the CLI --seed flag.
/// mt19937_64 output is pinned by the standard, so identical seeds give
/// identical fixtures on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    Scalar scalar(const FieldDescriptor& field) {
        if (field.kind() == FieldKind::prime_field)
            return Scalar::from_residue(field, static_cast<std::int64_t>(below(
                                                   static_cast<std::uint64_t>(field.p()))));
        if (below(8) == 0) return Scalar::zero(field);
        std::int64_t v = static_cast<std::int64_t>(below(5)) - 2;
        Int unit = 1 + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(field.p() - 1)));
        for (std::int32_t d = 1; d < field.precision(); ++d)
            unit += pow(Int(field.p()), static_cast<unsigned>(d)) *
                    static_cast<std::int64_t>(below(static_cast<std::uint64_t>(field.p())));
        return Scalar::from_unit(field, v, unit, field.precision());
    }

    Vector vector(const FieldDescriptor& field, int dim) {
        std::vector<Scalar> e;
        e.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) e.push_back(scalar(field));
        return Vector(field, std::move(e));
    }

    Matrix matrix(const FieldDescriptor& field, int rows, int cols) {
        std::vector<Scalar> e;
        e.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 0; i < rows * cols; ++i) e.push_back(scalar(field));
        return Matrix(field, rows, cols, std::move(e));
    }

    Matrix symmetric_matrix(const FieldDescriptor& field, int n) {
        Matrix m = Matrix::zero(field, n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                Scalar v = scalar(field);
                m.set(i, j, v);
                if (i != j) m.set(j, i, v);
            }
        }
        return m;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace padic
