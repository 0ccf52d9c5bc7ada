#include <doctest.h>

#include <set>

#include "spc2/matrix_reps.hpp"

using namespace spc2;

namespace {

UnipClass uc(const std::string& s) { return std::get<UnipClass>(parse_decomp(s, Kind::unipotent)); }
NilpClass nc(const std::string& s) { return std::get<NilpClass>(parse_decomp(s, Kind::nilpotent)); }

}  // namespace

TEST_CASE("block layout pairs mirror indices") {
    auto layout = block_layout({4, 2});
    REQUIRE(layout.size() == 2);
    // Every local pair (i, d-1-i) sits on a global mirror pair (g, n-1-g).
    std::size_t n = 6;
    for (const auto& idx : layout)
        for (std::size_t i = 0; i < idx.size(); ++i)
            CHECK(idx[i] + idx[idx.size() - 1 - i] == n - 1);
}

TEST_CASE("representatives preserve the form and the natural jordan type") {
    for (long ell = 1; ell <= 6; ++ell) {
        for (const auto& c : enumerate_unip(ell)) {
            BilinearSpace s = build_unip(c);
            CHECK(s.dim() == std::size_t(2 * ell));
            CHECK(s.form_compatible());
            CHECK(jordan_type_unipotent(s.op) == jordan_type_V(c));
        }
        for (const auto& c : enumerate_nilp(ell)) {
            BilinearSpace s = build_nilp(c);
            CHECK(s.form_compatible());
            CHECK(jordan_type_nilpotent(s.op) == jordan_type_V(c));
        }
    }
}

TEST_CASE("index function on small representatives") {
    // Regular nilpotent in rank 1: e has one block of size 2 and chi(2) = 1.
    BilinearSpace v2 = build_nilp(nc("V(2)"));
    CHECK(index_function(v2, 2) == 1);
    // W(1): e = 0, every chi is 0.
    BilinearSpace w1 = build_nilp(nc("W(1)"));
    CHECK(index_function(w1, 1) == 0);

    BilinearSpace v4 = build_nilp(nc("V(4)"));
    CHECK(index_function(v4, 4) == 2);
    BilinearSpace w2 = build_nilp(nc("W(2)"));
    CHECK(index_function(w2, 2) == 0);
}

TEST_CASE("classification symbols separate the small orbits") {
    for (long ell = 1; ell <= 6; ++ell) {
        auto orbits = enumerate_nilp(ell);
        std::set<HesselinkSymbol> seen;
        for (const auto& c : orbits) {
            HesselinkSymbol sym = hesselink_symbol(build_nilp(c));
            CHECK(sym.satisfies_constraints());
            seen.insert(sym);
        }
        CHECK(seen.size() == orbits.size());

        auto classes = enumerate_unip(ell);
        std::set<HesselinkSymbol> useen;
        for (const auto& c : classes) useen.insert(hesselink_symbol(build_unip(c)));
        CHECK(useen.size() == classes.size());
    }
}

TEST_CASE("equivalent labels give the same orbit") {
    // V(2)^3 and W(2) + V(2) name the same isometry class; compare the
    // uncanonicalized module structures directly.
    UnipClass a;
    a.v[1] = 3;
    UnipClass b;
    b.w[2] = 1;
    b.v[1] = 1;
    CHECK(same_orbit(build_unip(a), build_unip(b)));

    NilpClass x;
    x.w[2] = 1;
    x.v[1] = 1;
    NilpClass y;
    y.v[1] = 3;
    CHECK(same_orbit(build_nilp(x), build_nilp(y)));

    // W(3) + V(2) deforms onto the indexed summand orbit.
    NilpClass p;
    p.w[3] = 1;
    p.v[1] = 1;
    NilpClass q;
    q.wk[{1, 3}] = 1;
    q.v[1] = 1;
    CHECK(same_orbit(build_nilp(p), build_nilp(q)));
    // ...but W(3) and W_1(3) alone are different orbits.
    CHECK_FALSE(same_orbit(build_nilp(nc("W(3)")), build_nilp(nc("W_1(3)"))));

    CHECK_THROWS_AS(same_orbit(build_unip(uc("V(2)")), build_nilp(nc("V(2)"))), KindMismatch);
    CHECK_THROWS_AS(same_orbit(build_unip(uc("V(2)")), build_unip(uc("V(4)"))), DimMismatch);
}

TEST_CASE("the quadratic criterion detects the all-W shape") {
    for (long ell = 1; ell <= 5; ++ell)
        for (const auto& c : enumerate_nilp(ell))
            CHECK(singular_quadratic(build_nilp(c)) == c.all_w());
}

TEST_CASE("squared elements have vanishing index everywhere") {
    for (long ell = 1; ell <= 5; ++ell)
        for (const auto& c : enumerate_nilp(ell)) {
            BilinearSpace sq = square_element(build_nilp(c));
            for (const auto& entry : hesselink_symbol(sq).entries) CHECK(entry.chi == 0);
        }
    CHECK_THROWS_AS(square_element(build_unip(uc("V(2)"))), KindMismatch);
}

TEST_CASE("closed-form summand indices match the computed index function") {
    for (long d = 1; d <= 6; ++d) {
        NilpClass c;
        c.v[d] = 1;
        BilinearSpace s = build_nilp(c);
        for (long m = 1; m <= 2 * d + 2; ++m) CHECK(index_function(s, m) == chi_V(d, m));
    }
    for (long l = 3; l <= 7; ++l)
        for (long k = 1; 2 * k < l; ++k) {
            NilpClass c;
            c.wk[{k, l}] = 1;
            BilinearSpace s = build_nilp(c);
            for (long m = 1; m <= l + 2; ++m) CHECK(index_function(s, m) == chi_Wk(k, l, m));
        }
    // W(l) has identically vanishing index.
    for (long l = 1; l <= 6; ++l) {
        NilpClass c;
        c.w[l] = 1;
        BilinearSpace s = build_nilp(c);
        for (long m = 1; m <= l + 2; ++m) CHECK(index_function(s, m) == 0);
    }
    // The index of an orthogonal sum is the maximum over the summands.
    BilinearSpace mixed = build_nilp(nc("W(3) + V(4)"));
    CHECK(index_function(mixed, 3) == 1);
    CHECK(index_function(mixed, 4) == 2);
}

TEST_CASE("kronecker product shape") {
    Gf2Matrix a = Gf2Matrix::identity(2);
    a.set(0, 1, true);
    Gf2Matrix k = kronecker(a, Gf2Matrix::identity(3));
    CHECK(k.rows() == 6);
    CHECK(k.get(0, 3));
    CHECK(k.get(1, 4));
    CHECK_FALSE(k.get(0, 4));
}

TEST_CASE("induced square actions have the right shape") {
    // On S^2 the image of a square under an isometry is again a square.
    Gf2Matrix u(2, 2);
    u.set(0, 0, true);
    u.set(1, 1, true);
    u.set(0, 1, true);  // u: x2 -> x1 + x2
    Gf2Matrix s = sym2_action(u, Kind::unipotent);
    // Column of x2^2 = index (1,1): image (x1+x2)^2 = x1^2 + x2^2.
    std::size_t col = sym2_index(2, 1, 1);
    CHECK(s.get(sym2_index(2, 0, 0), col));
    CHECK(s.get(sym2_index(2, 1, 1), col));
    CHECK_FALSE(s.get(sym2_index(2, 0, 1), col));

    // Derivation: D(x1 x2) = x1^2 when D x2 = x1, D x1 = 0.
    Gf2Matrix e(2, 2);
    e.set(0, 1, true);
    Gf2Matrix d = sym2_action(e, Kind::nilpotent);
    CHECK(d.get(sym2_index(2, 0, 0), sym2_index(2, 0, 1)));
    CHECK(d.get(sym2_index(2, 0, 1), sym2_index(2, 1, 1)) == false);  // D(x2^2) = 0

    // phi is invariant: its kernel is a submodule of S^2.
    BilinearSpace v4 = build_unip(uc("V(4)"));
    Subspace w = sym2_phi_kernel(v4.gram);
    CHECK(w.dim() == 9);
    CHECK_NOTHROW(restrict_to(sym2_action(v4.op, Kind::unipotent), w));
}
