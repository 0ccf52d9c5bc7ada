#include <doctest.h>

#include "helpers.hpp"
#include "spc2/block_arith.hpp"
#include "spc2/matrix_reps.hpp"

using namespace spc2;
using testutil::nilp_block;
using testutil::unip_block;

namespace {

JordanType make(std::initializer_list<std::pair<long, long>> parts) {
    JordanType t;
    for (auto [s, m] : parts) t.add(s, m);
    return t;
}

}  // namespace

TEST_CASE("2-adic valuation") {
    CHECK(nu2(1) == 0);
    CHECK(nu2(2) == 1);
    CHECK(nu2(12) == 2);
    CHECK(nu2(96) == 5);
    CHECK_THROWS_AS(nu2(0), NonPositive);
}

TEST_CASE("minimal alternating binary expansion") {
    auto e = consecutive_ones(1);
    REQUIRE(e.exponents.size() == 1);
    CHECK(e.exponents[0] == 0);

    e = consecutive_ones(3);  // 4 - 1
    REQUIRE(e.exponents.size() == 2);
    CHECK(e.exponents[0] == 2);
    CHECK(e.exponents[1] == 0);
    CHECK(e.value() == 3);

    e = consecutive_ones(11);  // 16 - 8 + 4 - 1
    CHECK(e.value() == 11);
    CHECK(e.exponents == std::vector<int>{4, 3, 2, 0});

    for (long n = 1; n <= 300; ++n) CHECK(consecutive_ones(n).value() == n);
}

TEST_CASE("unipotent tensor products of single blocks") {
    CHECK(tensor_unip(1, 5) == make({{5, 1}}));
    CHECK(tensor_unip(3, 3) == make({{4, 2}, {1, 1}}));
    CHECK(tensor_unip(2, 3) == make({{4, 1}, {2, 1}}));
    CHECK(tensor_unip(4, 4) == make({{4, 4}}));
    for (long m = 1; m <= 10; ++m)
        for (long n = 1; n <= 10; ++n) {
            CHECK(tensor_unip(m, n) == tensor_unip(n, m));
            CHECK(tensor_nilp(m, n) == tensor_nilp(n, m));
        }
}

TEST_CASE("unipotent tensor matches the Kronecker oracle") {
    for (long m = 1; m <= 12; ++m)
        for (long n = m; n <= 12; ++n) {
            JordanType got = tensor_unip(m, n);
            JordanType oracle = jordan_type_unipotent(kronecker(unip_block(m), unip_block(n)));
            CHECK_MESSAGE(got == oracle, "m=", m, " n=", n);
        }
}

TEST_CASE("nilpotent tensor matches the Kronecker-sum oracle") {
    for (long m = 1; m <= 12; ++m)
        for (long n = m; n <= 12; ++n) {
            JordanType got = tensor_nilp(m, n);
            Gf2Matrix a = kronecker(nilp_block(m), Gf2Matrix::identity(n)) +
                          kronecker(Gf2Matrix::identity(m), nilp_block(n));
            CHECK_MESSAGE(got == jordan_type_nilpotent(a), "m=", m, " n=", n);
        }
}

TEST_CASE("symmetric and exterior squares of single blocks") {
    CHECK(sym2_unip(1) == make({{1, 1}}));
    CHECK(ext2_unip(1).empty());
    CHECK(sym2_unip(2) == make({{2, 1}, {1, 1}}));
    CHECK(ext2_unip(2) == make({{1, 1}}));
    CHECK(sym2_unip(3) == make({{4, 1}, {2, 1}}));
    CHECK(ext2_unip(3) == make({{3, 1}}));

    CHECK(sym2_nilp(3) == make({{4, 1}, {1, 2}}));
    CHECK(ext2_nilp(3) == make({{3, 1}}));
    CHECK(square_tensor_nilp(3) == make({{4, 2}, {1, 1}}));
}

TEST_CASE("squares match the induced-action oracles") {
    for (long n = 1; n <= 12; ++n) {
        CHECK(sym2_unip(n) == jordan_type_unipotent(sym2_action(unip_block(n), Kind::unipotent)));
        CHECK(sym2_nilp(n) == jordan_type_nilpotent(sym2_action(nilp_block(n), Kind::nilpotent)));
        if (n >= 2) {
            CHECK(ext2_unip(n) ==
                  jordan_type_unipotent(ext2_action(unip_block(n), Kind::unipotent)));
            CHECK(ext2_nilp(n) ==
                  jordan_type_nilpotent(ext2_action(nilp_block(n), Kind::nilpotent)));
        }
    }
}

TEST_CASE("dimension identities") {
    for (long n = 1; n <= 40; ++n) {
        CHECK(sym2(n, Kind::unipotent).dim() == n * (n + 1) / 2);
        CHECK(ext2(n, Kind::unipotent).dim() == n * (n - 1) / 2);
        CHECK(sym2(n, Kind::nilpotent).dim() == n * (n + 1) / 2);
        CHECK(ext2(n, Kind::nilpotent).dim() == n * (n - 1) / 2);
        CHECK(tensor(n, n + 3, Kind::unipotent).dim() == n * (n + 3));
        CHECK(tensor(n, n + 3, Kind::nilpotent).dim() == n * (n + 3));
    }
}

TEST_CASE("distribution over direct sums") {
    JordanType v = make({{3, 1}, {2, 2}});
    for (Kind kind : {Kind::unipotent, Kind::nilpotent}) {
        JordanType s = sym2_of_type(v, kind);
        CHECK(s.dim() == 7 * 8 / 2);
        JordanType e = ext2_of_type(v, kind);
        CHECK(e.dim() == 7 * 6 / 2);
        JordanType t = tensor_of_types(v, v, kind);
        CHECK(t.dim() == 49);
        // S^2(V) + /\^2(V) = V (x) V as dimensions
        CHECK(s.dim() + e.dim() == t.dim());
    }
}

TEST_CASE("fixed points count the Jordan blocks") {
    CHECK(fixed_point_count(make({{4, 2}, {1, 3}})) == 5);
    for (long n = 1; n <= 64; ++n) {
        CHECK(fixed_point_count(ext2_unip(n)) == n / 2);
        CHECK(fixed_point_count(sym2_unip(n)) == n / 2 + 1);
    }
}
