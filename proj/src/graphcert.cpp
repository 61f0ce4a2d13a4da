#include "regorb/graphcert.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "regorb/errors.hpp"

namespace regorb {

Partition shape_partition(Shape s, int n) {
    return s == Shape::TwoRow ? Partition{n - 2, 2} : Partition{n - 2, 1, 1};
}

std::string shape_name(Shape s) { return s == Shape::TwoRow ? "two-row" : "hook"; }

void WeightedEdgeVector::add_edge(int i, int j, std::uint32_t weight) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("bad edge");
    auto bump = [&](std::pair<int, int> k, std::uint32_t x) {
        std::uint32_t v = (w[k] + x) % p;
        if (v == 0) w.erase(k);
        else w[k] = v;
    };
    weight %= p;
    if (shape == Shape::TwoRow) {
        bump({std::min(i, j), std::max(i, j)}, weight);
    } else {
        bump({i, j}, weight);
        bump({j, i}, (p - weight) % p);
    }
}

bool WeightedEdgeVector::antisymmetric() const {
    if (shape == Shape::TwoRow) return true;
    for (const auto& [k, x] : w) {
        auto it = w.find({k.second, k.first});
        if (it == w.end() || (it->second + x) % p != 0) return false;
    }
    return true;
}

FpVector WeightedEdgeVector::to_tabloids(const TabloidIndex& idx) const {
    FpVector x(idx.size(), 0);
    for (const auto& [k, v] : w) {
        std::vector<std::uint8_t> label(n, 0);
        if (shape == Shape::TwoRow) {
            label[k.first] = label[k.second] = 1;
        } else {
            label[k.first] = 1;
            label[k.second] = 2;
        }
        x[idx.index_of(label)] = v;
    }
    return x;
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e += adj[i][j];
    return e;
}

int SimpleGraph::max_valency() const {
    int m = 0;
    for (int i = 0; i < n; ++i) m = std::max(m, static_cast<int>(std::count(adj[i].begin(), adj[i].end(), true)));
    return m;
}

SimpleGraph underlying_graph(const WeightedEdgeVector& s) {
    SimpleGraph g(s.n);
    for (const auto& [k, v] : s.w) g.add(k.first, k.second);
    return g;
}

namespace {

// Colour refinement starting from valencies.
std::vector<int> refine(const SimpleGraph& g) {
    const int n = g.n;
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = static_cast<int>(std::count(g.adj[i].begin(), g.adj[i].end(), true));
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> s{col[i]};
            std::vector<int> nb;
            for (int j = 0; j < n; ++j)
                if (g.adj[i][j]) nb.push_back(col[j]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[i] = {s, i};
        }
        std::vector<std::vector<int>> keys;
        for (auto& s : sig) keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[i].first) - keys.begin());
        std::vector<int> a = col, b = next;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        const auto ca = std::unique(a.begin(), a.end()) - a.begin();
        const auto cb = std::unique(b.begin(), b.end()) - b.begin();
        col = next;
        if (ca == cb) return col;
    }
}

}  // namespace

bool automorphism_trivial(const SimpleGraph& g, std::uint64_t* nodes, std::uint64_t max_nodes) {
    const int n = g.n;
    if (n > 64) throw BudgetExceeded("automorphism search limited to 64 vertices");
    std::uint64_t count = 0;
    if (nodes) *nodes = 0;
    if (n <= 1) return true;
    const std::vector<int> col = refine(g);
    // Most constrained vertices first.
    std::vector<int> size(n, 0);
    for (int c : col) ++size[c];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return size[col[a]] < size[col[b]]; });
    if (size[col[order.back()]] == 1) return true;  // discrete colouring

    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    bool found = false;
    auto rec = [&](auto&& self, int k, bool moved) -> void {
        if (found) return;
        if (++count > max_nodes) throw BudgetExceeded("automorphism search exceeded node budget");
        if (k == n) {
            if (moved) found = true;
            return;
        }
        const int v = order[k];
        for (int w = 0; w < n && !found; ++w) {
            if (used[w] || col[w] != col[v]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                const int u = order[j];
                ok = g.adj[u][v] == g.adj[img[u]][w];
            }
            if (!ok) continue;
            img[v] = w;
            used[w] = true;
            self(self, k + 1, moved || w != v);
            used[w] = false;
            img[v] = -1;
        }
    };
    rec(rec, 0, false);
    if (nodes) *nodes = count;
    return !found;
}

std::optional<std::array<int, 4>> four_point_witness(const SimpleGraph& g) {
    const int n = g.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!g.adj[a][b]) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || g.adj[b][c]) continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c || g.adj[c][d] || g.adj[d][a]) continue;
                    return std::array<int, 4>{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

WeightedEdgeVector build_regular_candidate(int n, Shape shape, std::uint32_t p) {
    if (n < 12) throw std::invalid_argument("candidate construction needs n >= 12");
    if (n == 12 && p == 2) throw std::invalid_argument("n = 12 over F_2 is not covered by the construction");
    WeightedEdgeVector s;
    s.shape = shape;
    s.n = n;
    s.p = p;
    // Alternating cycle through the listed vertices (1-based), scaled by lam.
    // For the hook shape each edge becomes a directed edge along the cycle.
    auto cycle = [&](const std::vector<int>& vs, std::uint32_t lam) {
        for (std::size_t k = 0; k < vs.size(); ++k) {
            const int a = vs[k] - 1, b = vs[(k + 1) % vs.size()] - 1;
            const std::uint32_t sign = shape == Shape::Hook || k % 2 == 0 ? lam : (p - lam) % p;
            s.add_edge(a, b, sign);
        }
    };
    if (n >= 13) {
        const int m = 2 * (n / 2);
        cycle({1, 2, 4, 5}, 1);
        cycle({2, 3, 4, 6}, 1);
        std::vector<int> c3;
        for (int v = 5; v <= m; ++v) c3.push_back(v);
        cycle(c3, 1);
    } else {
        cycle({1, 2, 3, 4}, 1);
        cycle({3, 4, 5, 6, 7, 8}, 1);
        cycle({7, 8, 9, 10, 11, 12}, 1);
    }
    return s;
}

PerpTester::PerpTester(Shape shape, int n, std::uint32_t p, std::uint64_t seed)
    : mu_(shape_partition(shape, n)), idx_(mu_), p_(p) {
    e_ = specht_basis(mu_, p, idx_).polytabloid_matrix;
    et_ = e_.transpose();
    std::mt19937_64 rng(seed);
    const std::size_t k = 6;
    FpMatrix c(k, e_.rows(), p);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < e_.rows(); ++j) c(i, j) = rng() % p;
    probe_ = (c * e_).transpose();
}

bool PerpTester::in_specht(const FpVector& x) const {
    SpanBuilder sb(e_.cols(), p_);
    for (std::size_t i = 0; i < e_.rows(); ++i) sb.add(e_.row_vector(i));
    return sb.contains(x);
}

bool PerpTester::in_perp(const std::vector<std::pair<std::size_t, std::uint32_t>>& u) const {
    for (std::size_t c = 0; c < probe_.cols(); ++c) {
        std::uint64_t acc = 0;
        for (const auto& [t, x] : u) acc += std::uint64_t{x} * probe_(t, c);
        if (acc % p_) return false;
    }
    for (std::size_t r = 0; r < et_.cols(); ++r) {
        std::uint64_t acc = 0;
        for (const auto& [t, x] : u) acc += std::uint64_t{x} * et_(t, r);
        if (acc % p_) return false;
    }
    return true;
}

namespace {

std::vector<std::pair<std::size_t, std::uint32_t>> sparse(const FpVector& x) {
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) out.emplace_back(i, x[i]);
    return out;
}

// s - c * (s g) in sparse form.
std::vector<std::pair<std::size_t, std::uint32_t>> obligation_vector(
    const std::vector<std::pair<std::size_t, std::uint32_t>>& s, const TabloidIndex& idx, const Permutation& g,
    std::uint32_t c, std::uint32_t p) {
    std::map<std::size_t, std::uint32_t> u;
    for (const auto& [t, x] : s) u[t] = (u[t] + x) % p;
    for (const auto& [t, x] : s) {
        std::size_t y = idx.act(t, g);
        u[y] = (u[y] + static_cast<std::uint32_t>((std::uint64_t{p - x} * c) % p)) % p;
    }
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (const auto& [t, x] : u)
        if (x) out.emplace_back(t, x);
    return out;
}

}  // namespace

GraphCertificate certify_regular(const WeightedEdgeVector& s, int n, std::uint32_t p, Shape shape,
                                 std::uint64_t samples, std::uint64_t seed) {
    GraphCertificate c;
    const Partition mu = shape_partition(shape, n);
    c.p_regular = p_regular(mu, p);
    c.n_ok = n >= 12 && s.n == n && s.p == p && s.shape == shape;
    c.antisymmetric = s.antisymmetric();
    SimpleGraph gr = underlying_graph(s);
    c.edges = gr.edge_count();
    c.max_valency = gr.max_valency();
    c.edge_limit = n == 12 ? 14 : static_cast<std::size_t>(n + 4);
    if (!c.p_regular) {
        c.reason = mu.str() + " is not " + std::to_string(p) + "-regular";
        return c;
    }
    if (!c.n_ok) {
        c.reason = "needs n >= 12 and a matching vector";
        return c;
    }
    PerpTester pt(shape, n, p, seed);
    const FpVector x = s.to_tabloids(pt.index());
    c.in_specht = c.antisymmetric && pt.in_specht(x);
    c.automorphism_trivial = automorphism_trivial(gr, &c.search_nodes);
    c.certified = c.in_specht && c.automorphism_trivial && c.max_valency <= 4 && c.edges <= c.edge_limit;
    if (!c.in_specht) c.reason = "vector is not in the Specht module";
    else if (!c.automorphism_trivial) c.reason = "underlying graph has a nontrivial automorphism";
    else if (c.max_valency > 4) c.reason = "valency above 4";
    else if (c.edges > c.edge_limit) c.reason = "too many edges";
    if (samples) {
        std::mt19937_64 rng(seed);
        const auto sx = sparse(x);
        std::vector<int> perm(n);
        while (c.samples < samples) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Permutation g(perm);
            if (g.is_identity()) continue;
            const std::uint32_t lam = p == 2 ? 1 : 1 + rng() % (p - 1);
            ++c.samples;
            if (pt.in_perp(obligation_vector(sx, pt.index(), g, lam, p))) ++c.violations;
        }
        if (c.violations) {
            c.certified = false;
            c.reason = "sampled obligation violated";
        }
    }
    return c;
}

std::uint64_t exhaustive_obligation_failures(const WeightedEdgeVector& s, const PerpTester& t, bool twisted) {
    const int n = s.n;
    const std::uint32_t p = s.p;
    const auto sx = sparse(s.to_tabloids(t.index()));
    std::uint64_t bad = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Permutation g(perm);
        const bool odd = !g.is_even();
        for (std::uint32_t lam = 1; lam < p; ++lam) {
            if (g.is_identity() && lam == 1) continue;
            const std::uint32_t c = twisted && odd ? (p - lam) % p : lam;
            if (t.in_perp(obligation_vector(sx, t.index(), g, c, p))) ++bad;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return bad;
}

}  // namespace regorb
