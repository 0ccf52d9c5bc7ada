#include <doctest.h>

#include "helpers.hpp"
#include "spc2/gf2.hpp"

using namespace spc2;
using testutil::nilp_block;
using testutil::unip_block;

TEST_CASE("vector get/set/flip and xor") {
    Gf2Vector v(130);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(129, true);
    CHECK(v.get(0));
    CHECK(v.get(129));
    CHECK_FALSE(v.get(64));
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 129);
    Gf2Vector w(130);
    w.set(129, true);
    v ^= w;
    CHECK(v.is_zero());
    CHECK(v.first_set() == 130);
}

TEST_CASE("matrix product, sum, apply") {
    Gf2Matrix a = nilp_block(4);
    Gf2Matrix a2 = a * a;
    CHECK(a2.get(0, 2));
    CHECK(a2.get(1, 3));
    CHECK_FALSE(a2.get(0, 1));
    CHECK((a + a).is_zero());
    CHECK(Gf2Matrix::identity(4) * a == a);

    Gf2Vector e3(4);
    e3.set(3, true);
    Gf2Vector img = a.apply(e3);
    CHECK(img.get(2));
    CHECK(img.first_set() == 2);

    // Row-vector action is the transpose action: e_3 * N = 0, e_2 * N = e_3.
    Gf2Vector last(4);
    last.set(3, true);
    CHECK(a.apply_row(last).is_zero());
    Gf2Vector r = a.apply_row(img);
    CHECK(r.get(3));
}

TEST_CASE("rank and kernel") {
    CHECK(rank(Gf2Matrix::identity(7)) == 7);
    CHECK(rank(Gf2Matrix(5, 5)) == 0);
    Gf2Matrix n = nilp_block(6);
    CHECK(rank(n) == 5);
    Subspace k = kernel(n);
    CHECK(k.dim() == 1);
    Gf2Vector e0(6);
    e0.set(0, true);
    CHECK(k.contains(e0));

    // rank + nullity = number of columns, also for a rectangular matrix
    Gf2Matrix m(2, 5);
    m.set(0, 1, true);
    m.set(0, 3, true);
    m.set(1, 3, true);
    CHECK(rank(m) == 2);
    CHECK(kernel(m).dim() == 3);
}

TEST_CASE("jordan type of nilpotent and unipotent matrices") {
    JordanType t = jordan_type_nilpotent(nilp_block(5));
    CHECK(t.multiplicity(5) == 1);
    CHECK(t.num_blocks() == 1);

    // Block diagonal 3 + 1.
    Gf2Matrix m(4, 4);
    m.set(0, 1, true);
    m.set(1, 2, true);
    JordanType t2 = jordan_type_nilpotent(m);
    CHECK(t2.multiplicity(3) == 1);
    CHECK(t2.multiplicity(1) == 1);
    CHECK(t2.dim() == 4);

    JordanType u = jordan_type_unipotent(unip_block(8));
    CHECK(u.multiplicity(8) == 1);

    CHECK(jordan_type_nilpotent(Gf2Matrix(3, 3)).multiplicity(1) == 3);
    CHECK(jordan_type_unipotent(Gf2Matrix::identity(3)).multiplicity(1) == 3);

    CHECK_THROWS_AS(jordan_type_nilpotent(Gf2Matrix::identity(2)), NotNilpotent);
    CHECK_THROWS_AS(jordan_type_unipotent(nilp_block(2)), NotUnipotent);
    CHECK_THROWS_AS(jordan_type_nilpotent(Gf2Matrix(2, 3)), NotSquare);
}

TEST_CASE("subspace echelon form is canonical") {
    Gf2Matrix g1(2, 4), g2(2, 4);
    g1.set(0, 0, true);
    g1.set(0, 2, true);
    g1.set(1, 1, true);
    // Same span, different generators.
    g2.set(0, 0, true);
    g2.set(0, 1, true);
    g2.set(0, 2, true);
    g2.set(1, 1, true);
    Subspace s1 = Subspace::span_of_rows(g1);
    Subspace s2 = Subspace::span_of_rows(g2);
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(s2));

    Subspace grow(4);
    CHECK(grow.dim() == 0);
    grow.insert(g1.row(0));
    grow.insert(g1.row(0));  // duplicates do not grow the span
    CHECK(grow.dim() == 1);
    CHECK(Subspace::full(4).contains(s1));
}

TEST_CASE("restriction to an invariant subspace") {
    Gf2Matrix n = nilp_block(5);
    // Image of N^2 is spanned by e_0, e_1, e_2 and is invariant.
    Gf2Matrix gens(3, 5);
    for (std::size_t i = 0; i < 3; ++i) gens.set(i, i, true);
    Subspace w = Subspace::span_of_rows(gens);
    Gf2Matrix r = restrict_to(n, w);
    CHECK(jordan_type_nilpotent(r).multiplicity(3) == 1);

    // span{e_1} is not invariant (N e_1 = e_0).
    Gf2Matrix bad(1, 5);
    bad.set(0, 1, true);
    CHECK_THROWS_AS(restrict_to(n, Subspace::span_of_rows(bad)), NotInvariant);
    CHECK_THROWS_AS(quotient_by(n, Subspace::span_of_rows(bad)), NotInvariant);
}

TEST_CASE("quotient by an invariant subspace") {
    Gf2Matrix n = nilp_block(6);
    Gf2Matrix gens(2, 6);
    gens.set(0, 0, true);
    gens.set(1, 1, true);
    Subspace w = Subspace::span_of_rows(gens);
    Gf2Matrix q = quotient_by(n, w);
    CHECK(q.rows() == 4);
    CHECK(jordan_type_nilpotent(q).multiplicity(4) == 1);
}

TEST_CASE("kernel power containment") {
    Gf2Matrix n = nilp_block(4);
    Gf2Matrix gens(2, 4);
    gens.set(0, 0, true);
    gens.set(1, 1, true);
    Subspace w = Subspace::span_of_rows(gens);
    CHECK(kernel_power_contained(n, 0, w));  // Ker I = 0
    CHECK(kernel_power_contained(n, 1, w));
    CHECK(kernel_power_contained(n, 2, w));
    CHECK_FALSE(kernel_power_contained(n, 3, w));
    CHECK_THROWS_AS(kernel_power_contained(Gf2Matrix::identity(3), 1, Subspace::full(3)),
                    NotNilpotent);
}
