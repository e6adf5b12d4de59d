#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "padic/error.hpp"

namespace padic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Policy for Q_p additions whose tracked digits cancel completely.
/// The strict default reports the loss; identity checkers opt into zero.
enum class Cancel { error, zero };

enum class FieldKind { prime_field, padic_field };

/// Selects the scalar universe: a finite prime field F_p carrying the
/// trivial valuation, or Q_p at a capped number of significant base-p
/// digits.  Immutable; p is checked for primality at construction.
class FieldDescriptor {
public:
    static FieldDescriptor prime_field(std::int64_t p);
    static FieldDescriptor padic_field(std::int64_t p, std::int32_t precision = 20);

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    /// Significant-digit cap; meaningful for padic_field only.
    std::int32_t precision() const { return precision_; }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_ &&
               (a.kind_ == FieldKind::prime_field || a.precision_ == b.precision_);
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) {
        return !(a == b);
    }

private:
    FieldDescriptor(FieldKind kind, std::int64_t p, std::int32_t precision)
        : kind_(kind), p_(p), precision_(precision) {}

    FieldKind kind_;
    std::int64_t p_;
    std::int32_t precision_;
};

/// One field element.
///
/// F_p elements are residues in [0, p).  Q_p elements are either exact
/// zero or p^v * unit with the unit coprime to p and tracked to a known
/// number of significant base-p digits (<= the descriptor cap).  Relative
/// precision survives multiplication and inversion unchanged; additions
/// may shorten it when leading digits cancel.
class Scalar {
public:
    static Scalar zero(const FieldDescriptor& field);
    static Scalar one(const FieldDescriptor& field);
    static Scalar from_integer(const Int& n, const FieldDescriptor& field);
    static Scalar from_rational(const Int& num, const Int& den, const FieldDescriptor& field);
    /// Raw Q_p constructor: p^valuation * unit at the given tracked precision.
    static Scalar from_unit(const FieldDescriptor& field, std::int64_t valuation,
                            Int unit, std::int32_t precision);
    /// Raw F_p constructor from a (possibly unreduced) residue.
    static Scalar from_residue(const FieldDescriptor& field, std::int64_t residue);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;

    /// F_p payload.
    std::int64_t residue() const;
    /// Q_p payload; callable on nonzero scalars only.
    std::int64_t valuation() const;
    const Int& unit() const;
    /// Tracked significant digits of a nonzero Q_p scalar.
    std::int32_t precision() const;

    /// |x| as an exact rational: trivial valuation on F_p, p^(-v) on Q_p.
    Rat norm() const;

    /// Equality at the minimum of the two tracked precisions.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    explicit Scalar(const FieldDescriptor& field) : field_(field) {}

    FieldDescriptor field_;
    std::int64_t residue_ = 0; // prime_field payload
    bool nonzero_ = false;     // padic_field: exact-zero flag (inverted)
    std::int64_t val_ = 0;
    Int unit_;
    std::int32_t prec_ = 0;

    friend Scalar add(const Scalar&, const Scalar&, Cancel);
    friend Scalar mul(const Scalar&, const Scalar&);
    friend Scalar neg(const Scalar&);
    friend Scalar inv(const Scalar&);
};

Scalar add(const Scalar& a, const Scalar& b, Cancel policy = Cancel::error);
Scalar sub(const Scalar& a, const Scalar& b, Cancel policy = Cancel::error);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }

bool is_square(const Scalar& a);

/// All square roots of a, deterministically ordered (smallest canonical
/// representative first).  Empty when a is not a square.  Q_p roots are
/// Hensel lifts at the full tracked precision of a; requires p odd there.
std::vector<Scalar> sqrt_all(const Scalar& a);

/// Serialized form: F_p residue as decimal; Q_p as "p^v * u" or "0".
std::string to_string(const Scalar& a);

/// Accepts the serialized form plus plain integers and rationals "a/b".
Scalar parse_scalar(std::string_view text, const FieldDescriptor& field);

std::string to_string(const Rat& r);

} // namespace padic
