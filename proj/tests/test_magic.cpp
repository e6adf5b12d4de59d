#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "padic/dilation.hpp"
#include "padic/magic.hpp"

using namespace padic;
using testutil::fp;
using testutil::qp;

namespace {

MagicWitness same(const Matrix& m) { return MagicWitness{m, m}; }

} // namespace

TEST_CASE("defect fixtures") {
    auto f3 = fp(3);
    Matrix j3 = Matrix::from_ints(f3, {{2, 2}, {2, 2}});
    Matrix expected = Matrix::from_ints(f3, {{2, 1}, {1, 2}});
    CHECK(defect(j3) == expected);
    CHECK(codefect(j3) == expected);

    auto f2 = fp(2);
    Matrix j2 = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
    CHECK(defect(j2) == Matrix::identity(f2, 2));

    Matrix u = Matrix::from_ints(f2, {{0, 1}, {1, 0}});
    REQUIRE(is_unitary(u));
    CHECK(defect(u) == Matrix::zero(f2, 2, 2));
}

TEST_CASE("verify_magic on the worked fixtures") {
    auto f3 = fp(3);
    Matrix j3 = Matrix::from_ints(f3, {{2, 2}, {2, 2}});
    Matrix m3 = Matrix::from_ints(f3, {{2, 1}, {1, 2}});
    MagicReport r = verify_magic(j3, same(m3));
    CHECK(r.magic);
    CHECK(mat_mul(j3, m3) == Matrix::zero(f3, 2, 2)); // T M_T vanishes here

    auto f2 = fp(2);
    Matrix j2 = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
    CHECK(verify_magic(j2, same(Matrix::from_ints(f2, {{0, 1}, {1, 0}}))).magic);
    CHECK(verify_magic(j2, same(Matrix::identity(f2, 2))).magic);

    Matrix id5 = Matrix::identity(fp(5), 3);
    CHECK(verify_magic(id5, same(Matrix::zero(fp(5), 3, 3))).magic);
}

TEST_CASE("verify_magic reports the first failing identity") {
    auto f3 = fp(3);
    Matrix j3 = Matrix::from_ints(f3, {{2, 2}, {2, 2}});
    Matrix bad = Matrix::from_ints(f3, {{1, 0}, {0, 1}});
    MagicReport r = verify_magic(j3, same(bad));
    CHECK_FALSE(r.magic);
    bool located = false;
    for (const IdentityCheck& c : r.checks)
        if (!c.pass && c.row >= 0 && !c.lhs.empty()) located = true;
    CHECK(located);

    Matrix skew = Matrix::from_ints(f3, {{0, 1}, {2, 0}});
    MagicReport r2 = verify_magic(j3, same(skew));
    CHECK_FALSE(r2.checks[0].pass); // self-adjointness is checked, not assumed

    CHECK_THROWS_AS(verify_magic(j3, same(Matrix::identity(f3, 3))), shape_error);
}

TEST_CASE("witness search on scalar fixtures") {
    auto f5 = fp(5);
    Matrix two = Matrix::from_ints(f5, {{2}});
    CHECK(search_witnesses(two).empty());

    auto f3 = fp(3);
    Matrix zero1 = Matrix::from_ints(f3, {{0}});
    auto found = search_witnesses(zero1);
    REQUIRE(found.size() == 4); // {1,2} x {1,2}, intertwining is vacuous
    for (const auto& w : found) {
        CHECK(verify_magic(zero1, w).magic);
        CHECK_FALSE(w.m_t.at(0, 0).is_zero());
    }
    // Lexicographic: (1,1), (1,2), (2,1), (2,2).
    CHECK(found[0].m_t.at(0, 0).residue() == 1);
    CHECK(found[0].m_t_star.at(0, 0).residue() == 1);
    CHECK(found[3].m_t.at(0, 0).residue() == 2);
}

TEST_CASE("witness search finds both Z_2 options") {
    auto f2 = fp(2);
    Matrix j2 = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
    auto found = search_witnesses(j2);
    Matrix swap = Matrix::from_ints(f2, {{0, 1}, {1, 0}});
    Matrix id = Matrix::identity(f2, 2);
    bool has_swap_pair = false, has_id_pair = false;
    for (const auto& w : found) {
        CHECK(verify_magic(j2, w).magic);
        if (w.m_t == swap && w.m_t_star == swap) has_swap_pair = true;
        if (w.m_t == id && w.m_t_star == id) has_id_pair = true;
    }
    CHECK(has_swap_pair);
    CHECK(has_id_pair);
    CHECK(found.size() == 4); // the two roots pair freely with J_2

    SearchOptions first_only{10'000'000, true};
    auto first = search_witnesses(j2, first_only);
    REQUIRE(first.size() == 1);
    CHECK(first.front().m_t == found.front().m_t);
}

TEST_CASE("witness search is deterministic and budget-guarded") {
    auto f3 = fp(3);
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix t = rng.matrix(f3, 2, 2);
        auto a = search_witnesses(t);
        auto b = search_witnesses(t);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].m_t == b[i].m_t);
            CHECK(a[i].m_t_star == b[i].m_t_star);
        }
    }

    SearchOptions tiny{10, false};
    CHECK_THROWS_AS(search_witnesses(Matrix::identity(f3, 2), tiny), budget_exceeded);
    CHECK_THROWS_AS(search_witnesses(Matrix::identity(qp(3), 2)), unsupported);
}

TEST_CASE("rectangular witnesses") {
    auto f2 = fp(2);
    Matrix t = Matrix::from_ints(f2, {{1, 0}}); // 1x2
    auto found = search_witnesses(t);
    for (const auto& w : found) {
        CHECK(w.m_t.rows() == 2);
        CHECK(w.m_t_star.rows() == 1);
        CHECK(verify_magic(t, w).magic);
    }
    CHECK_FALSE(found.empty());
}

TEST_CASE("scalar fast path matches brute force for p <= 31") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        auto f = fp(p);
        for (std::int64_t t = 0; t < p; ++t) {
            Matrix m = Matrix::zero(f, 1, 1);
            m.set(0, 0, Scalar::from_residue(f, t));
            bool brute = !search_witnesses(m).empty();
            auto fast = is_magic_1x1(Scalar::from_residue(f, t));
            CHECK(brute == fast.has_value());
            if (fast) {
                Matrix w = Matrix::zero(f, 1, 1);
                w.set(0, 0, *fast);
                CHECK(verify_magic(m, MagicWitness{w, w}).magic);
            }
        }
    }
}

TEST_CASE("scalar fast path fixtures") {
    CHECK_FALSE(is_magic_1x1(Scalar::from_integer(2, fp(5))));

    auto q3 = qp(3, 3);
    auto w = is_magic_1x1(Scalar::from_integer(3, q3));
    REQUIRE(w.has_value());
    CHECK(w->unit() % 27 == 10);

    auto one = is_magic_1x1(Scalar::one(fp(7)));
    REQUIRE(one.has_value());
    CHECK(one->is_zero());
    auto one_q = is_magic_1x1(Scalar::one(qp(5, 4)));
    REQUIRE(one_q.has_value());
    CHECK(one_q->is_zero());
}

TEST_CASE("sign symmetry of witnesses") {
    std::vector<FieldDescriptor> fields = {fp(3), fp(5)};
    for (const auto& f : fields) {
        Rng rng(31);
        int seen = 0;
        for (int trial = 0; trial < 40 && seen < 8; ++trial) {
            Matrix t = rng.matrix(f, 2, 2);
            auto found = search_witnesses(t);
            if (found.empty()) continue;
            ++seen;
            for (const auto& w : found) {
                MagicWitness flipped{mat_neg(w.m_t), mat_neg(w.m_t_star)};
                CHECK(verify_magic(t, flipped).magic);
            }
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("intertwining adjoint identity is implied") {
    // From T M_T = M_T* T and self-adjointness: M_T T* = T* M_T*.
    auto f5 = fp(5);
    Rng rng(37);
    int seen = 0;
    for (int trial = 0; trial < 60 && seen < 12; ++trial) {
        Matrix t = rng.matrix(f5, 2, 2);
        auto found = search_witnesses(t, SearchOptions{10'000'000, true});
        if (found.empty()) continue;
        ++seen;
        const MagicWitness& w = found.front();
        CHECK(mat_mul(w.m_t, adjoint(t)) == mat_mul(adjoint(t), w.m_t_star));
    }
    CHECK(seen > 0);
}

TEST_CASE("fixed point transfer") {
    auto f3 = fp(3);
    Matrix id = Matrix::identity(f3, 2);
    MagicWitness w_id = same(Matrix::zero(f3, 2, 2));
    Vector x = Vector::from_ints(f3, {1, 2});
    CHECK(check_fixed_point_transfer(id, w_id, x));

    auto f2 = fp(2);
    Matrix j2 = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
    MagicWitness w2 = same(Matrix::from_ints(f2, {{0, 1}, {1, 0}}));
    CHECK(check_fixed_point_transfer(j2, w2, Vector::zero(f2, 2)));

    // Precondition violations are distinct errors.
    CHECK_THROWS_AS(check_fixed_point_transfer(j2, w2, Vector::from_ints(f2, {1, 0})),
                    precondition_error);
    MagicWitness bad = same(Matrix::zero(f2, 2, 2)); // 0^2 != defect(J_2) = I
    CHECK_THROWS_AS(check_fixed_point_transfer(j2, bad, Vector::zero(f2, 2)),
                    precondition_error);
}

TEST_CASE("fixed point transfer across the full F_3 2x2 census") {
    auto f3 = fp(3);
    SearchOptions first_only{10'000'000, true};
    int fixed_points_checked = 0;
    // All 81 matrices; eigenvectors of eigenvalue 1 found by exhaustive scan.
    for (int idx = 0; idx < 81; ++idx) {
        int digits[4], k = idx;
        for (int d = 3; d >= 0; --d) { digits[d] = k % 3; k /= 3; }
        Matrix t = Matrix::from_ints(f3, {{digits[0], digits[1]}, {digits[2], digits[3]}});
        auto found = search_witnesses(t, first_only);
        if (found.empty()) continue;
        for (int vx = 0; vx < 3; ++vx) {
            for (int vy = 0; vy < 3; ++vy) {
                Vector v = Vector::from_ints(f3, {vx, vy});
                if (apply(t, v) != v) continue;
                CHECK(check_fixed_point_transfer(t, found.front(), v));
                ++fixed_points_checked;
            }
        }
    }
    CHECK(fixed_points_checked > 0);
}

TEST_CASE("halmos unitarity is equivalent to the witness identities") {
    // Both directions over F_2/F_3/F_5 with symmetric candidate pairs,
    // valid and invalid.
    int discrepancies = 0, valid_seen = 0, invalid_seen = 0;
    for (std::int64_t p : {2, 3, 5}) {
        auto f = fp(p);
        Rng rng(600 + static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng.below(2));
            Matrix t = rng.matrix(f, n, n);
            MagicWitness w{rng.symmetric_matrix(f, n), rng.symmetric_matrix(f, n)};
            Matrix u = assemble_blocks({{t, w.m_t_star}, {w.m_t, mat_neg(adjoint(t))}});
            bool magic = verify_magic(t, w).magic;
            (magic ? valid_seen : invalid_seen)++;
            if (magic != is_unitary(u)) ++discrepancies;
        }
    }
    CHECK(discrepancies == 0);
    CHECK(valid_seen > 0);
    CHECK(invalid_seen > 0);
}
