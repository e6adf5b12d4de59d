#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "padic/fields.hpp"

using namespace padic;
using testutil::exhaustive_roots;
using testutil::fp;
using testutil::qp;

namespace {

Scalar si(std::int64_t n, const FieldDescriptor& f) { return Scalar::from_integer(n, f); }

} // namespace

TEST_CASE("descriptor construction validates p") {
    CHECK_THROWS_AS(FieldDescriptor::prime_field(4), precondition_error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(1), precondition_error);
    CHECK_THROWS_AS(FieldDescriptor::padic_field(9), precondition_error);
    CHECK_THROWS_AS(FieldDescriptor::padic_field(3, 0), precondition_error);
    CHECK(fp(2).p() == 2);
    CHECK(qp(3, 4).precision() == 4);
}

TEST_CASE("prime field arithmetic") {
    auto f3 = fp(3), f5 = fp(5);
    CHECK(add(si(2, f3), si(2, f3)) == si(1, f3));
    CHECK(inv(si(2, f5)) == si(3, f5));
    CHECK(neg(si(1, f3)) == si(2, f3));
    CHECK(mul(si(4, f5), si(4, f5)) == si(1, f5));
    CHECK_THROWS_AS(inv(Scalar::zero(f5)), division_by_zero);
    CHECK_THROWS_AS(add(si(1, f3), si(1, f5)), descriptor_mismatch);
}

TEST_CASE("Q_p addition tracks valuations and zero") {
    auto q3 = qp(3, 4);
    Scalar three = si(3, q3);
    CHECK(three.valuation() == 1);
    CHECK(three.unit() == 1);

    Scalar sum = add(three, Scalar::zero(q3));
    CHECK(sum == three);

    // Full cancellation errors by default and is zero on request.
    CHECK_THROWS_AS(add(si(1, q3), si(-1, q3)), zero_at_precision);
    CHECK(add(si(1, q3), si(-1, q3), Cancel::zero).is_zero());

    // Partial cancellation shortens the tracked precision.
    Scalar a = si(1, q3);
    Scalar b = si(2, q3); // 1 + 2 = 3: one leading digit cancels
    Scalar c = add(a, b);
    CHECK(c.valuation() == 1);
    CHECK(c.precision() == 3);
}

TEST_CASE("Q_p multiplicative structure") {
    auto q3 = qp(3, 4);
    Scalar nine = mul(si(3, q3), si(3, q3));
    CHECK(nine.valuation() == 2);
    CHECK(nine.unit() == 1);
    Scalar third = inv(si(3, q3));
    CHECK(third.valuation() == -1);
    CHECK(mul(third, si(3, q3)) == Scalar::one(q3));
}

TEST_CASE("norms are exact rationals") {
    CHECK(si(2, fp(5)).norm() == Rat(1));
    CHECK(Scalar::zero(fp(5)).norm() == Rat(0));
    CHECK(si(9, qp(3)).norm() == Rat(1, 9));
    CHECK(Scalar::zero(qp(3)).norm() == Rat(0));
    CHECK(inv(si(9, qp(3))).norm() == Rat(9));
}

TEST_CASE("from_rational embeds exactly") {
    CHECK(Scalar::from_rational(1, 4, fp(5)) == si(4, fp(5)));
    Scalar third = Scalar::from_rational(1, 3, qp(3));
    CHECK(third.valuation() == -1);
    CHECK(third.unit() == 1);
    CHECK_THROWS_AS(Scalar::from_rational(1, 3, fp(3)), division_by_zero);
    CHECK_THROWS_AS(Scalar::from_rational(1, 0, fp(3)), division_by_zero);
    // A removable p in the denominator is not a failure.
    CHECK(Scalar::from_rational(6, 3, fp(3)) == si(2, fp(3)));
}

TEST_CASE("Q_p round trip recovers rationals") {
    for (std::int64_t p : {3, 5, 7}) {
        auto f = qp(p, 20);
        Rng rng(42 + static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 200; ++trial) {
            std::int64_t n = static_cast<std::int64_t>(rng.below(2001)) - 1000;
            std::int64_t d = static_cast<std::int64_t>(rng.below(1000)) + 1;
            Scalar x = Scalar::from_rational(n, d, f);
            CHECK(mul(x, si(d, f)) == si(n, f));
        }
    }
}

TEST_CASE("square detection: spec fixtures") {
    CHECK_FALSE(is_square(si(2, fp(5))));
    CHECK(is_square(Scalar::zero(fp(5))));
    CHECK(is_square(si(1, fp(2))));

    auto roots = sqrt_all(si(1, fp(3)));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == si(1, fp(3)));
    CHECK(roots[1] == si(2, fp(3)));
}

TEST_CASE("Hensel lifting: -8 is a square in Q_3") {
    auto q3 = qp(3, 3);
    Scalar m8 = si(-8, q3);
    REQUIRE(is_square(m8));
    auto roots = sqrt_all(m8);
    REQUIRE(roots.size() == 2);
    // Oracle: brute force over residues mod 27.
    std::vector<Int> expected;
    for (Int r = 0; r < 27; ++r)
        if ((r * r - 19) % 27 == 0) expected.push_back(r);
    REQUIRE(expected.size() == 2);
    CHECK(roots[0].unit() == expected[0]); // 10
    CHECK(roots[1].unit() == expected[1]); // 17
    for (const Scalar& r : roots) CHECK(mul(r, r) == m8);

    // At precision 8 the lead digits still match mod 27.
    auto q3w = qp(3, 8);
    auto wide = sqrt_all(si(-8, q3w));
    REQUIRE(wide.size() == 2);
    CHECK(wide[0].unit() % 27 == 10);
    CHECK(mul(wide[0], wide[0]) == si(-8, q3w));
}

TEST_CASE("square root edge cases") {
    CHECK(sqrt_all(Scalar::zero(fp(7))).size() == 1);
    CHECK(sqrt_all(Scalar::zero(qp(3))).size() == 1);
    CHECK(sqrt_all(si(3, fp(5))).empty());
    CHECK(sqrt_all(si(3, qp(3))).empty()); // odd valuation
    CHECK_THROWS_AS(sqrt_all(si(1, qp(2))), unsupported);
    CHECK_THROWS_AS(is_square(si(1, qp(2))), unsupported);
    CHECK(sqrt_all(si(1, fp(2))).size() == 1); // F_2 stays supported
}

TEST_CASE("Euler criterion agrees with exhaustive search up to 97") {
    for (std::int64_t p = 3; p <= 97; p += 2) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        auto f = fp(p);
        for (std::int64_t a = 0; a < p; ++a) {
            auto expected = exhaustive_roots(a, p);
            Scalar s = si(a, f);
            CHECK(is_square(s) == !expected.empty());
            auto got = sqrt_all(s);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i)
                CHECK(got[i].residue() == expected[i]);
        }
    }
}

TEST_CASE("ultrametric inequality and norm multiplicativity") {
    std::vector<FieldDescriptor> fields = {fp(2), fp(5), fp(97), qp(3, 6), qp(7, 4)};
    for (const auto& f : fields) {
        Rng rng(2024);
        for (int trial = 0; trial < 400; ++trial) {
            Scalar a = rng.scalar(f), b = rng.scalar(f);
            Scalar s = add(a, b, Cancel::zero);
            CHECK(s.norm() <= std::max(a.norm(), b.norm()));
            if (a.norm() != b.norm()) CHECK(s.norm() == std::max(a.norm(), b.norm()));
            CHECK(mul(a, b).norm() == a.norm() * b.norm());
        }
    }
}

TEST_CASE("roots square back to their argument") {
    std::vector<FieldDescriptor> fields = {fp(5), fp(31), qp(3, 6), qp(11, 4)};
    for (const auto& f : fields) {
        Rng rng(7);
        int seen = 0;
        for (int trial = 0; trial < 200 && seen < 40; ++trial) {
            Scalar a = rng.scalar(f);
            if (!is_square(a)) continue;
            ++seen;
            auto roots = sqrt_all(a);
            if (a.is_zero()) {
                REQUIRE(roots.size() == 1);
            } else {
                REQUIRE(roots.size() == 2);
                CHECK(roots[0] != roots[1]);
            }
            for (const Scalar& r : roots) CHECK(mul(r, r) == a);
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("scalar serialization round trips") {
    auto f5 = fp(5);
    CHECK(to_string(si(4, f5)) == "4");
    CHECK(parse_scalar("4", f5) == si(4, f5));
    CHECK(parse_scalar("1/4", f5) == si(4, f5));
    CHECK(parse_scalar("-1", f5) == si(4, f5));

    auto q3 = qp(3, 4);
    Scalar x = si(18, q3); // 2 * 3^2
    CHECK(to_string(x) == "3^2 * 2");
    CHECK(parse_scalar(to_string(x), q3) == x);
    CHECK(to_string(Scalar::zero(q3)) == "0");
    CHECK(parse_scalar("0", q3).is_zero());
    CHECK(parse_scalar("1/3", q3) == Scalar::from_rational(1, 3, q3));

    CHECK_THROWS_AS(parse_scalar("2^1 * 1", q3), parse_error); // wrong base
    CHECK_THROWS_AS(parse_scalar("3^1 * 6", q3), parse_error); // unit not coprime
    CHECK_THROWS_AS(parse_scalar("", f5), parse_error);
    CHECK_THROWS_AS(parse_scalar("x", f5), parse_error);
    CHECK_THROWS_AS(parse_scalar("3^1 * 1", f5), parse_error);
}

TEST_CASE("equality compares at the minimum tracked precision") {
    auto q3 = qp(3, 6);
    Scalar full = Scalar::from_unit(q3, 0, 1 + 3 + 9 + 27, 6);
    Scalar short_prec = Scalar::from_unit(q3, 0, 1 + 3 + 9 + 27 + 81, 3);
    CHECK(full == short_prec); // agree mod 3^3
    Scalar other = Scalar::from_unit(q3, 0, 2, 6);
    CHECK(full != other);
    CHECK(Scalar::zero(q3) != full);
}
