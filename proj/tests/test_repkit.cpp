#include <doctest.h>

#include <random>

#include "regorb/errors.hpp"
#include "regorb/polyfp.hpp"
#include "regorb/repkit.hpp"
#include "regorb/spechtmod.hpp"

using namespace regorb;

namespace {

FpMatrix random_matrix(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % p;
    return m;
}

FpMatrix random_invertible(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
    for (;;) {
        FpMatrix m = random_matrix(n, p, rng);
        if (rank(m) == n) return m;
    }
}

}  // namespace

TEST_CASE("charpoly satisfies Cayley-Hamilton") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u})
        for (std::size_t n = 1; n <= 9; ++n) {
            FpMatrix a = random_matrix(n, p, rng);
            Poly f = charpoly(a);
            CHECK(degree(f) == static_cast<int>(n));
            CHECK(f.back() == 1);
            CHECK(poly_eval(f, a).is_zero());
            // Trace is minus the subleading coefficient.
            CHECK((f[n - 1] + a.trace()) % p == 0);
        }
}

TEST_CASE("distinct degree parts multiply back to the squarefree kernel") {
    Field F(3);
    // (x+1)(x^2+1)(x^2+x+2): factors of degree 1, 2, 2.
    Poly f = poly_mul(poly_mul({1, 1}, {1, 0, 1}, F), {2, 1, 1}, F);
    auto parts = distinct_degree_parts(f, 4, F);
    CHECK(parts[0] == Poly{1, 1});
    CHECK(parts[1] == poly_mul({1, 0, 1}, {2, 1, 1}, F));
    CHECK(degree(parts[2]) == 0);
}

TEST_CASE("sign twist is an involution and flips odd traces") {
    for (std::uint32_t p : {3u, 5u}) {
        Representation v = build_dmu(Partition{3, 1, 1}, p);
        Representation w = tensor_sign(v);
        Representation ww = tensor_sign(w);
        for (std::size_t i = 0; i < v.generators.size(); ++i) {
            CHECK(ww.generators[i] == v.generators[i]);
            CHECK((w.generators[i].trace() + v.generators[i].trace()) % p == 0);
        }
    }
}

TEST_CASE("restriction to the alternating group") {
    Representation v = build_fdpm(6, 5);
    Representation r = restrict_to_an(v);
    CHECK(v.order() == 720);
    CHECK(r.order() == 360);
    CHECK(r.generators.size() == 4);
    for (int n = 5; n <= 9; ++n)
        for (std::uint32_t p : {2u, 3u}) {
            Representation a = restrict_to_an(build_fdpm(n, p));
            CHECK_MESSAGE(split_or_irreducible(a).irreducible, "n=", n, " p=", p);
        }
}

TEST_CASE("MeatAxe splits and certifies small modules") {
    Representation d42 = build_dmu(Partition{4, 2}, 2);
    CHECK(d42.dim == 4);
    CHECK(split_or_irreducible(d42).irreducible);
    CHECK(split_or_irreducible(restrict_to_an(d42)).irreducible);

    // The permutation module on 5 points has the all-ones line.
    Representation fd = build_fdpm(5, 3);
    Representation sum = direct_sum(fd, fd);
    SplitReport s = split_or_irreducible(sum);
    CHECK_FALSE(s.irreducible);
    CHECK(is_invariant(sum.generators, s.invariant_subspace));
    CHECK(irreducible_constituent(sum).dim == 4);
}

TEST_CASE("D(5,3,1) over F2 splits into two halves on A9") {
    Representation v = build_dmu(Partition{5, 3, 1}, 2);
    CHECK(v.dim == 40);
    CHECK(split_or_irreducible(v).irreducible);
    Representation r = restrict_to_an(v);
    SplitReport s = split_or_irreducible(r);
    REQUIRE_FALSE(s.irreducible);
    Representation piece = irreducible_constituent(r);
    CHECK(piece.dim == 20);
    CHECK(endo_field_degree(piece) == 1);
    CHECK(endo_field_degree(v) == 1);
}

TEST_CASE("endomorphism field degree") {
    std::mt19937_64 rng(3);
    Representation v = build_fdpm(6, 5);
    CHECK(endo_field_degree(v) == 1);
    FpMatrix b = random_invertible(v.dim * 2, 5, rng);
    Representation two = change_basis(direct_sum(v, v), b);
    // End(V+V) is 2x2 matrices over F_p: dimension 4.
    CHECK(endo_field_degree(two) == 4);
    // An element of order 3 in GL2(F2) generates F4.
    Representation c;
    c.p = 2;
    c.dim = 2;
    c.generators = {FpMatrix::from_rows({{0, 1}, {1, 1}}, 2, 2)};
    c.group = GroupDescriptor::external("C3", 3, 1);
    CHECK(split_or_irreducible(c).irreducible);
    CHECK(endo_field_degree(c) == 2);
}

TEST_CASE("scalar extension group orders") {
    Representation s5 = build_fdpm(5, 5);
    Representation e = scalar_extension(s5, 2);
    CHECK(e.order() == 240);
    Representation sl = builtin_rep("SL2(5)");
    CHECK(sl.order() == 120);
    CHECK(closure_order(sl, 1000) == 120);
    CHECK(faithfulness_check(sl));
    for (std::uint32_t a : {1u, 2u, 4u}) {
        Representation x = scalar_extension(sl, a);
        CHECK(closure_order(x, 10000) == x.order());
    }
    CHECK(scalar_extension(sl, 4).order() == 240);
    CHECK_THROWS(scalar_extension(sl, 3));
}

TEST_CASE("rep files round trip") {
    Representation v = scalar_extension(build_dmu(Partition{3, 2}, 3), 2);
    std::string text = format_rep(v);
    Representation w = parse_rep(text);
    CHECK(w.p == v.p);
    CHECK(w.dim == v.dim);
    CHECK(w.generators == v.generators);
    CHECK(w.order() == v.order());
    CHECK(format_rep(w) == text);

    Representation sl = builtin_rep("SL2(5)");
    CHECK(parse_rep(format_rep(sl)).generators == sl.generators);

    CHECK_THROWS_AS(parse_rep(text.substr(0, text.size() / 2)), ParseError);
    CHECK_THROWS_AS(parse_rep(text.substr(0, text.size() - 1)), ParseError);
    std::string bad = text;
    bad.replace(bad.find("p 3"), 3, "p 4");
    CHECK_THROWS_AS(parse_rep(bad), ParseError);
    try {
        parse_rep("regorb-rep 1\np 3 dim 1 gens 1\ngroup X order 2 center 1\ngen 1\n0\n");
        FAIL("singular generator accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
    }
}

TEST_CASE("cover relations") {
    // Permutation matrices satisfy the split relations with z = 1.
    Representation v = build_fdpm(7, 5);
    FpMatrix I = FpMatrix::identity(v.dim, 5);
    CHECK(validate_cover_relations(v.generators, I, CoverVariant::Plus, 7));
    CHECK_FALSE(validate_cover_relations(v.generators, I.scaled(4), CoverVariant::Plus, 7));

    Representation spin = load_rep(REGORB_TEST_DATA "/2S8minus_F3.rep");
    CHECK(spin.dim == 8);
    CHECK(validate_cover_relations(spin, CoverVariant::Minus, 8));
    CHECK_FALSE(validate_cover_relations(spin, CoverVariant::Plus, 8));
    CHECK(faithfulness_check(spin));
    CHECK(spin.order() == 80640);
}
