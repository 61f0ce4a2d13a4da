#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regorb/gfplin.hpp"
#include "regorb/spechtmod.hpp"

namespace regorb {

// (n-2,2): undirected edges {i,j} <-> tabloids with second row {i,j}.
// (n-2,1,1): directed edges (i,j) <-> tabloids with rows {i}, {j}.
enum class Shape { TwoRow, Hook };
Partition shape_partition(Shape s, int n);
std::string shape_name(Shape s);

struct WeightedEdgeVector {
    Shape shape = Shape::TwoRow;
    int n = 0;
    std::uint32_t p = 2;
    // TwoRow keys have i < j; Hook stores both (i,j) and (j,i). Vertices 0..n-1, no zero weights.
    std::map<std::pair<int, int>, std::uint32_t> w;

    // Adds weight*{i,j}, or weight*((i,j) - (j,i)) for Hook.
    void add_edge(int i, int j, std::uint32_t weight);
    bool antisymmetric() const;
    FpVector to_tabloids(const TabloidIndex& idx) const;
};

struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;
    explicit SimpleGraph(int vertices = 0) : n(vertices), adj(vertices, std::vector<bool>(vertices, false)) {}
    void add(int i, int j) { adj[i][j] = adj[j][i] = true; }
    std::size_t edge_count() const;
    int max_valency() const;
};

SimpleGraph underlying_graph(const WeightedEdgeVector& s);

// True iff only the identity preserves the edge set. nodes receives the search size.
bool automorphism_trivial(const SimpleGraph& g, std::uint64_t* nodes = nullptr, std::uint64_t max_nodes = 50000000);

// {v1,v2} an edge, {v2,v3}, {v3,v4}, {v4,v1} not edges, all distinct.
std::optional<std::array<int, 4>> four_point_witness(const SimpleGraph& g);

// The explicit candidate for n >= 12 (p odd when n = 12).
WeightedEdgeVector build_regular_candidate(int n, Shape shape, std::uint32_t p);

// Checks u notin S^{mu perp} quickly: random row combinations first, then all polytabloids.
class PerpTester {
public:
    PerpTester(Shape shape, int n, std::uint32_t p, std::uint64_t seed = 1);
    const TabloidIndex& index() const { return idx_; }
    const FpMatrix& polytabloids() const { return e_; }
    bool in_specht(const FpVector& x) const;
    // u given sparsely as (tabloid, weight); true iff u lies in S^{mu perp}.
    bool in_perp(const std::vector<std::pair<std::size_t, std::uint32_t>>& u) const;

private:
    Partition mu_;
    TabloidIndex idx_;
    FpMatrix e_, et_, probe_;  // probe_ = random combinations of polytabloids, transposed
    std::uint32_t p_;
};

struct GraphCertificate {
    bool certified = false;
    bool p_regular = false;
    bool n_ok = false;
    bool antisymmetric = true;
    bool in_specht = false;
    bool automorphism_trivial = false;
    int max_valency = 0;
    std::size_t edges = 0;
    std::size_t edge_limit = 0;
    std::uint64_t search_nodes = 0;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    std::string reason;
};

// Mechanical check of the hypotheses of the regular-vector criterion, plus an
// optional seeded sample of the obligation s - lambda s g notin S^{mu perp}.
GraphCertificate certify_regular(const WeightedEdgeVector& s, int n, std::uint32_t p, Shape shape,
                                 std::uint64_t samples = 0, std::uint64_t seed = 1);

// Number of (g, lambda) != (1, 1) in S_n x F_p^* with s - lambda s g in S^{mu perp}
// (g = 1 included); zero iff the image of s in D^mu is regular. Exhaustive over S_n.
// twisted uses lambda sgn(g) for the associate module.
std::uint64_t exhaustive_obligation_failures(const WeightedEdgeVector& s, const PerpTester& t, bool twisted = false);

}  // namespace regorb
