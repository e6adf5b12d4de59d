#include "padic/fields.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace padic {
namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

// Residues live in [0, p) with p < 2^31, so products fit in int64.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return (a * b) % p;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = mod_reduce(a, p), r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    if (old_r != 1) throw division_by_zero("element has no inverse mod p");
    return mod_reduce(old_s, p);
}

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

bool euler_is_square(std::int64_t a, std::int64_t p) {
    if (a == 0) return true;
    if (p == 2) return true;
    return pow_mod(a, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks; requires p odd prime and a a nonzero quadratic residue.
std::int64_t sqrt_mod_p(std::int64_t a, std::int64_t p) {
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }

    std::int64_t z = 2;
    while (euler_is_square(z, p)) ++z;

    int m = s;
    std::int64_t c = pow_mod(z, q, p);
    std::int64_t t = pow_mod(a, q, p);
    std::int64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        int i = 0;
        std::int64_t tt = t;
        while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
        std::int64_t b = pow_mod(c, std::int64_t{1} << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

Int pow_int(std::int64_t p, std::int32_t k) {
    return boost::multiprecision::pow(Int(p), static_cast<unsigned>(k));
}

Int mod_inv_int(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    Int old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    if (old_r != 1) throw division_by_zero("element has no inverse mod p^k");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

// Newton lift of a unit square root from mod p to mod p^k (p odd).
Int hensel_sqrt_unit(const Int& u, std::int64_t p, std::int32_t k) {
    Int r = sqrt_mod_p(static_cast<std::int64_t>(u % p), p);
    std::int32_t have = 1;
    while (have < k) {
        have = std::min(2 * have, k);
        Int mod = pow_int(p, have);
        r = (r + u * mod_inv_int(r, mod)) % mod * mod_inv_int(2, mod) % mod;
    }
    return r;
}

// v_p(n) and the cofactor, n != 0.  The sign stays in the cofactor.
std::pair<std::int64_t, Int> split_valuation(Int n, std::int64_t p) {
    std::int64_t v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return {v, n};
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw descriptor_mismatch("scalars from different fields");
}

bool valid_digits(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31)) throw precondition_error("p exceeds the 2^31 primality cap");
    if (!is_prime_i64(p)) throw precondition_error("p is not prime");
    return FieldDescriptor(FieldKind::prime_field, p, 0);
}

FieldDescriptor FieldDescriptor::padic_field(std::int64_t p, std::int32_t precision) {
    if (p >= (std::int64_t{1} << 31)) throw precondition_error("p exceeds the 2^31 primality cap");
    if (!is_prime_i64(p)) throw precondition_error("p is not prime");
    if (precision < 1) throw precondition_error("precision must be positive");
    return FieldDescriptor(FieldKind::padic_field, p, precision);
}

Scalar Scalar::zero(const FieldDescriptor& field) {
    return Scalar(field);
}

Scalar Scalar::one(const FieldDescriptor& field) {
    return from_integer(1, field);
}

Scalar Scalar::from_integer(const Int& n, const FieldDescriptor& field) {
    Scalar out(field);
    if (field.kind() == FieldKind::prime_field) {
        out.residue_ = static_cast<std::int64_t>(((n % field.p()) + field.p()) % field.p());
        return out;
    }
    if (n == 0) return out;
    auto [v, cof] = split_valuation(n, field.p());
    Int mod = pow_int(field.p(), field.precision());
    cof %= mod;
    if (cof < 0) cof += mod;
    out.nonzero_ = true;
    out.val_ = v;
    out.unit_ = cof;
    out.prec_ = field.precision();
    return out;
}

Scalar Scalar::from_rational(const Int& num, const Int& den, const FieldDescriptor& field) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Int n = num, d = den;
    Int g = boost::multiprecision::gcd(n, d);
    if (g != 0) { n /= g; d /= g; }
    if (field.kind() == FieldKind::prime_field) {
        if (d % field.p() == 0)
            throw division_by_zero("denominator divisible by p in F_p");
        Scalar out(field);
        std::int64_t rn = static_cast<std::int64_t>(((n % field.p()) + field.p()) % field.p());
        std::int64_t rd = static_cast<std::int64_t>(((d % field.p()) + field.p()) % field.p());
        out.residue_ = mul_mod(rn, inv_mod(rd, field.p()), field.p());
        return out;
    }
    if (n == 0) return zero(field);
    auto [vn, un] = split_valuation(n, field.p());
    auto [vd, ud] = split_valuation(d, field.p());
    Int mod = pow_int(field.p(), field.precision());
    Int unit = un % mod;
    if (unit < 0) unit += mod;
    unit = unit * mod_inv_int(ud, mod) % mod;
    Scalar out(field);
    out.nonzero_ = true;
    out.val_ = vn - vd;
    out.unit_ = unit;
    out.prec_ = field.precision();
    return out;
}

Scalar Scalar::from_unit(const FieldDescriptor& field, std::int64_t valuation,
                         Int unit, std::int32_t precision) {
    if (field.kind() != FieldKind::padic_field)
        throw precondition_error("from_unit requires a p-adic descriptor");
    if (precision < 1 || precision > field.precision())
        throw precondition_error("tracked precision outside [1, cap]");
    if (unit % field.p() == 0)
        throw precondition_error("unit divisible by p");
    Int mod = pow_int(field.p(), precision);
    unit %= mod;
    if (unit < 0) unit += mod;
    Scalar out(field);
    out.nonzero_ = true;
    out.val_ = valuation;
    out.unit_ = std::move(unit);
    out.prec_ = precision;
    return out;
}

Scalar Scalar::from_residue(const FieldDescriptor& field, std::int64_t residue) {
    if (field.kind() != FieldKind::prime_field)
        throw precondition_error("from_residue requires a prime-field descriptor");
    Scalar out(field);
    out.residue_ = mod_reduce(residue, field.p());
    return out;
}

bool Scalar::is_zero() const {
    return field_.kind() == FieldKind::prime_field ? residue_ == 0 : !nonzero_;
}

std::int64_t Scalar::residue() const {
    if (field_.kind() != FieldKind::prime_field)
        throw error("residue() on a p-adic scalar");
    return residue_;
}

std::int64_t Scalar::valuation() const {
    if (field_.kind() != FieldKind::padic_field || !nonzero_)
        throw error("valuation() needs a nonzero p-adic scalar");
    return val_;
}

const Int& Scalar::unit() const {
    if (field_.kind() != FieldKind::padic_field || !nonzero_)
        throw error("unit() needs a nonzero p-adic scalar");
    return unit_;
}

std::int32_t Scalar::precision() const {
    if (field_.kind() != FieldKind::padic_field || !nonzero_)
        throw error("precision() needs a nonzero p-adic scalar");
    return prec_;
}

Rat Scalar::norm() const {
    if (is_zero()) return Rat(0);
    if (field_.kind() == FieldKind::prime_field) return Rat(1);
    if (val_ >= 0) return Rat(Int(1), pow_int(field_.p(), static_cast<std::int32_t>(val_)));
    return Rat(pow_int(field_.p(), static_cast<std::int32_t>(-val_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field().kind() == FieldKind::prime_field)
        return a.residue() == b.residue();
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.valuation() != b.valuation()) return false;
    std::int32_t prec = std::min(a.precision(), b.precision());
    Int mod = pow_int(a.field().p(), prec);
    return a.unit() % mod == b.unit() % mod;
}

Scalar add(const Scalar& a, const Scalar& b, Cancel policy) {
    require_same_field(a, b);
    const FieldDescriptor& f = a.field();
    if (f.kind() == FieldKind::prime_field)
        return Scalar::from_residue(f, a.residue_ + b.residue_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    // The sum is known up to the smaller absolute precision p^A.
    std::int64_t abs_a = a.val_ + a.prec_;
    std::int64_t abs_b = b.val_ + b.prec_;
    std::int64_t abs_out = std::min(abs_a, abs_b);
    std::int64_t v0 = std::min(a.val_, b.val_);
    std::int32_t digits = static_cast<std::int32_t>(abs_out - v0);
    Int mod = pow_int(f.p(), digits);
    Int w = (a.unit_ * pow_int(f.p(), static_cast<std::int32_t>(a.val_ - v0)) +
             b.unit_ * pow_int(f.p(), static_cast<std::int32_t>(b.val_ - v0))) % mod;
    if (w == 0) {
        if (policy == Cancel::zero) return Scalar::zero(f);
        throw zero_at_precision("sum cancelled all tracked digits");
    }
    auto [t, cof] = split_valuation(w, f.p());
    return Scalar::from_unit(f, v0 + t, cof, static_cast<std::int32_t>(digits - t));
}

Scalar sub(const Scalar& a, const Scalar& b, Cancel policy) {
    return add(a, neg(b), policy);
}

Scalar mul(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    const FieldDescriptor& f = a.field();
    if (f.kind() == FieldKind::prime_field)
        return Scalar::from_residue(f, mul_mod(a.residue_, b.residue_, f.p()));
    if (a.is_zero() || b.is_zero()) return Scalar::zero(f);
    std::int32_t prec = std::min(a.prec_, b.prec_);
    Int mod = pow_int(f.p(), prec);
    return Scalar::from_unit(f, a.val_ + b.val_, a.unit_ * b.unit_ % mod, prec);
}

Scalar neg(const Scalar& a) {
    const FieldDescriptor& f = a.field();
    if (f.kind() == FieldKind::prime_field)
        return Scalar::from_residue(f, f.p() - a.residue_);
    if (a.is_zero()) return a;
    Int mod = pow_int(f.p(), a.prec_);
    return Scalar::from_unit(f, a.val_, mod - a.unit_, a.prec_);
}

Scalar inv(const Scalar& a) {
    if (a.is_zero()) throw division_by_zero("inverse of zero");
    const FieldDescriptor& f = a.field();
    if (f.kind() == FieldKind::prime_field)
        return Scalar::from_residue(f, inv_mod(a.residue_, f.p()));
    Int mod = pow_int(f.p(), a.prec_);
    return Scalar::from_unit(f, -a.val_, mod_inv_int(a.unit_, mod), a.prec_);
}

bool is_square(const Scalar& a) {
    const FieldDescriptor& f = a.field();
    if (f.kind() == FieldKind::prime_field)
        return euler_is_square(a.residue(), f.p());
    if (a.is_zero()) return true;
    if (f.p() == 2) throw unsupported("square roots in Q_2 are unsupported");
    if (a.valuation() % 2 != 0) return false;
    return euler_is_square(static_cast<std::int64_t>(a.unit() % f.p()), f.p());
}

std::vector<Scalar> sqrt_all(const Scalar& a) {
    const FieldDescriptor& f = a.field();
    if (f.kind() == FieldKind::prime_field) {
        if (a.residue() == 0) return {Scalar::zero(f)};
        if (f.p() == 2) return {Scalar::one(f)};
        if (!euler_is_square(a.residue(), f.p())) return {};
        std::int64_t r = sqrt_mod_p(a.residue(), f.p());
        std::int64_t lo = std::min(r, f.p() - r), hi = std::max(r, f.p() - r);
        return {Scalar::from_residue(f, lo), Scalar::from_residue(f, hi)};
    }
    if (f.p() == 2) throw unsupported("square roots in Q_2 are unsupported");
    if (a.is_zero()) return {Scalar::zero(f)};
    if (a.valuation() % 2 != 0) return {};
    if (!euler_is_square(static_cast<std::int64_t>(a.unit() % f.p()), f.p())) return {};
    Int r = hensel_sqrt_unit(a.unit(), f.p(), a.precision());
    Int other = pow_int(f.p(), a.precision()) - r;
    Int lo = std::min(r, other), hi = std::max(r, other);
    std::int64_t half_v = a.valuation() / 2;
    return {Scalar::from_unit(f, half_v, lo, a.precision()),
            Scalar::from_unit(f, half_v, hi, a.precision())};
}

std::string to_string(const Scalar& a) {
    if (a.field().kind() == FieldKind::prime_field)
        return std::to_string(a.residue());
    if (a.is_zero()) return "0";
    std::ostringstream os;
    os << a.field().p() << '^' << a.valuation() << " * " << a.unit();
    return os.str();
}

Scalar parse_scalar(std::string_view text, const FieldDescriptor& field) {
    std::string_view s = trim(text);
    if (s.empty()) throw parse_error("empty scalar");

    if (auto caret = s.find('^'); caret != std::string_view::npos) {
        if (field.kind() != FieldKind::padic_field)
            throw parse_error("p^v * u form needs a p-adic descriptor");
        auto star = s.find('*', caret);
        if (star == std::string_view::npos)
            throw parse_error("malformed p-adic scalar: " + std::string(s));
        std::string_view base = trim(s.substr(0, caret));
        std::string_view vpart = trim(s.substr(caret + 1, star - caret - 1));
        std::string_view upart = trim(s.substr(star + 1));
        if (!valid_digits(base) || !valid_digits(vpart) || !valid_digits(upart))
            throw parse_error("malformed p-adic scalar: " + std::string(s));
        if (Int(std::string(base)) != field.p())
            throw parse_error("scalar base does not match the field");
        std::int64_t v = std::stoll(std::string(vpart));
        try {
            return Scalar::from_unit(field, v, Int(std::string(upart)), field.precision());
        } catch (const precondition_error& e) {
            throw parse_error(e.what());
        }
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        if (!valid_digits(num) || !valid_digits(den))
            throw parse_error("malformed rational: " + std::string(s));
        return Scalar::from_rational(Int(std::string(num)), Int(std::string(den)), field);
    }

    if (!valid_digits(s)) throw parse_error("malformed scalar: " + std::string(s));
    return Scalar::from_integer(Int(std::string(s)), field);
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace padic
