#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "regorb/graphcert.hpp"
#include "regorb/orbitengine.hpp"
#include "regorb/repkit.hpp"

using namespace regorb;

namespace {

bool brute_trivial(const SimpleGraph& g) {
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    while (std::next_permutation(p.begin(), p.end())) {
        bool ok = true;
        for (int i = 0; i < g.n && ok; ++i)
            for (int j = 0; j < g.n && ok; ++j) ok = g.adj[i][j] == g.adj[p[i]][p[j]];
        if (ok) return false;
    }
    return true;
}

bool brute_four(const SimpleGraph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                for (int d = 0; d < g.n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.adj[a][b] && !g.adj[b][c] && !g.adj[c][d] && !g.adj[d][a]) return true;
                }
    return false;
}

SimpleGraph random_graph(int n, double prob, std::mt19937_64& rng) {
    SimpleGraph g(n);
    std::bernoulli_distribution e(prob);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (e(rng)) g.add(i, j);
    return g;
}

SimpleGraph complete_union(int a, int b) {
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) g.add(i, j);
    for (int i = a; i < a + b; ++i)
        for (int j = i + 1; j < a + b; ++j) g.add(i, j);
    return g;
}

}  // namespace

TEST_CASE("underlying graphs") {
    WeightedEdgeVector s{Shape::TwoRow, 6, 3, {}};
    s.add_edge(0, 1, 2);
    SimpleGraph g = underlying_graph(s);
    CHECK(g.edge_count() == 1);
    CHECK(g.adj[0][1]);
    WeightedEdgeVector c{Shape::TwoRow, 6, 3, {}};
    c.add_edge(0, 1, 1);
    c.add_edge(1, 2, 2);
    c.add_edge(2, 3, 1);
    c.add_edge(3, 0, 2);
    CHECK(underlying_graph(c).edge_count() == 4);
    CHECK(underlying_graph(c).max_valency() == 2);
    WeightedEdgeVector h{Shape::Hook, 5, 3, {}};
    h.add_edge(0, 1, 1);
    h.add_edge(1, 2, 1);
    h.add_edge(2, 0, 1);
    CHECK(h.antisymmetric());
    CHECK(h.w.size() == 6);
    CHECK(underlying_graph(h).edge_count() == 3);
}

TEST_CASE("automorphism search matches brute force") {
    SimpleGraph k2(2);
    k2.add(0, 1);
    CHECK_FALSE(automorphism_trivial(k2));
    std::mt19937_64 rng(11);
    int trivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 7;
        SimpleGraph g = random_graph(n, 0.45, rng);
        bool t = automorphism_trivial(g);
        CHECK(t == brute_trivial(g));
        trivial += t;
    }
    CHECK(trivial > 0);
}

TEST_CASE("four point configurations") {
    SimpleGraph k48(12);
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 12; ++j) k48.add(i, j);
    CHECK_FALSE(four_point_witness(k48));
    CHECK_FALSE(four_point_witness(complete_union(6, 6)));
    CHECK_FALSE(four_point_witness(complete_union(5, 7)));
    SimpleGraph path(12);
    for (int i = 0; i + 1 < 12; ++i) path.add(i, i + 1);
    auto w = four_point_witness(path);
    REQUIRE(w);
    auto [a, b, c, d] = *w;
    CHECK(path.adj[a][b]);
    CHECK_FALSE(path.adj[b][c]);
    CHECK_FALSE(path.adj[c][d]);
    CHECK_FALSE(path.adj[d][a]);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        SimpleGraph g = random_graph(4 + trial % 7, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
        CHECK(four_point_witness(g).has_value() == brute_four(g));
    }
}

TEST_CASE("regular candidates") {
    WeightedEdgeVector s = build_regular_candidate(13, Shape::TwoRow, 2);
    SimpleGraph g = underlying_graph(s);
    CHECK(g.edge_count() == 16);
    CHECK(g.max_valency() == 4);
    CHECK(automorphism_trivial(g));
    WeightedEdgeVector t = build_regular_candidate(12, Shape::TwoRow, 3);
    CHECK(underlying_graph(t).edge_count() == 14);
    CHECK(underlying_graph(t).max_valency() == 3);
    CHECK(build_regular_candidate(13, Shape::Hook, 5).antisymmetric());
    CHECK_THROWS(build_regular_candidate(11, Shape::TwoRow, 3));
    CHECK_THROWS(build_regular_candidate(12, Shape::TwoRow, 2));
}

TEST_CASE("certificates") {
    CHECK(certify_regular(build_regular_candidate(13, Shape::TwoRow, 2), 13, 2, Shape::TwoRow).certified);
    CHECK(certify_regular(build_regular_candidate(12, Shape::Hook, 3), 12, 3, Shape::Hook).certified);
    CHECK(certify_regular(build_regular_candidate(14, Shape::Hook, 5), 14, 5, Shape::Hook, 2000).certified);
    // The hook partition is not 2-regular.
    GraphCertificate h2 = certify_regular(build_regular_candidate(13, Shape::Hook, 2), 13, 2, Shape::Hook);
    CHECK_FALSE(h2.certified);
    CHECK_FALSE(h2.p_regular);
    WeightedEdgeVector c{Shape::TwoRow, 13, 3, {}};
    c.add_edge(0, 1, 1);
    c.add_edge(1, 2, 2);
    c.add_edge(2, 3, 1);
    c.add_edge(3, 0, 2);
    GraphCertificate r = certify_regular(c, 13, 3, Shape::TwoRow);
    CHECK(r.in_specht);
    CHECK_FALSE(r.automorphism_trivial);
    CHECK_FALSE(r.certified);
    WeightedEdgeVector e{Shape::TwoRow, 13, 3, {}};
    e.add_edge(0, 1, 1);
    CHECK_FALSE(certify_regular(e, 13, 3, Shape::TwoRow).in_specht);
}

TEST_CASE("exhaustive obligation matches stabilizers in D^mu") {
    std::mt19937_64 rng(21);
    for (Shape shape : {Shape::TwoRow, Shape::Hook}) {
        const int n = 8;
        const std::uint32_t p = 5;
        const Partition mu = shape_partition(shape, n);
        PerpTester pt(shape, n, p);
        FpMatrix proj = dmu_projection(mu, p);
        Representation d = build_dmu(mu, p);
        Representation plain = scalar_extension(d, 4);
        Representation twisted = scalar_extension(tensor_sign(d), 4);
        int regular = 0, irregular = 0;
        for (int trial = 0; trial < 4; ++trial) {
            WeightedEdgeVector s{shape, n, p, {}};
            const int cycles = 1 + 3 * (trial % 2);
            for (int k = 0; k < cycles; ++k) {
                std::vector<int> v(n);
                std::iota(v.begin(), v.end(), 0);
                std::shuffle(v.begin(), v.end(), rng);
                const std::uint32_t lam = 1 + rng() % (p - 1);
                // Alternating 4-cycle, or a directed 3-cycle for the hook.
                if (shape == Shape::TwoRow)
                    for (int e = 0; e < 4; ++e) s.add_edge(v[e], v[(e + 1) % 4], e % 2 ? p - lam : lam);
                else
                    for (int e = 0; e < 3; ++e) s.add_edge(v[e], v[(e + 1) % 3], lam);
            }
            FpVector x = s.to_tabloids(pt.index());
            REQUIRE(pt.in_specht(x));
            FpVector y = vec_mul(x, proj);
            for (bool tw : {false, true}) {
                const bool reg = stabilizer_order(tw ? twisted : plain, y) == 1;
                CHECK((exhaustive_obligation_failures(s, pt, tw) == 0) == reg);
                (reg ? regular : irregular)++;
            }
        }
        CHECK(irregular > 0);
        CHECK(regular > 0);
        MESSAGE(shape_name(shape), ": regular ", regular, ", not regular ", irregular);
    }
}
