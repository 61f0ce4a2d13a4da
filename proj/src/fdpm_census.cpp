#include "regorb/fdpm_census.hpp"

#include <stdexcept>

#include "regorb/errors.hpp"
#include "regorb/gfplin.hpp"
#include "regorb/vecspace.hpp"

namespace regorb {

namespace {

std::vector<std::uint32_t> scalars(const FdpmGroup& g) {
    if ((g.p - 1) % g.a != 0) throw std::invalid_argument("scalar order must divide p-1");
    Field F(g.p);
    const std::uint32_t lam = F.pow(F.primitive_root(), (g.p - 1) / g.a);
    std::vector<std::uint32_t> out{1};
    for (std::uint32_t x = lam; x != 1; x = F.mul(x, lam)) out.push_back(x);
    return out;
}

}  // namespace

BigInt FdpmGroup::order() const {
    BigInt h = factorial(n);
    if (alternating) h /= 2;
    return h * a;
}

BigInt fdpm_stabilizer_order(const FdpmGroup& g, const std::vector<std::uint32_t>& tuple) {
    const std::uint32_t p = g.p;
    if (static_cast<int>(tuple.size()) != g.n) throw std::invalid_argument("tuple length differs from n");
    Field F(p);
    std::vector<int> m(p, 0);
    std::uint64_t sum = 0;
    for (auto x : tuple) {
        ++m[x % p];
        sum += x % p;
    }
    if (sum % p) throw std::invalid_argument("tuple does not sum to zero");
    bool repeated = false;
    for (int c : m) repeated |= c >= 2;
    BigInt blocks = 1;
    for (int c : m) blocks *= factorial(c);
    const bool quotient = g.n % p == 0;
    const bool twist = g.twisted && !g.alternating;
    BigInt total = 0;
    for (auto lam : scalars(g))
        for (int eps : {1, -1}) {
            if (eps == -1 && !twist) continue;
            const std::uint32_t linv = F.inv(lam);
            const std::uint32_t kappa = twist && eps == -1 ? F.neg(linv) : linv;
            for (std::uint32_t c = 0; c < (quotient ? p : 1); ++c) {
                // sigma must carry the block of value x onto the block of phi(x).
                auto phi = [&](std::uint32_t x) { return F.mul(kappa, F.add(x, c)); };
                bool ok = true;
                for (std::uint32_t x = 0; x < p && ok; ++x) ok = m[x] == m[phi(x)];
                if (!ok) continue;
                if (!twist && !g.alternating) {
                    total += blocks;
                    continue;
                }
                // sigma must be even for A_n, and have sign eps for the twisted module.
                const bool want_even = eps == 1;
                if (repeated) {
                    total += blocks / 2;
                    continue;
                }
                // All values distinct: sigma is phi on the value set.
                std::vector<bool> seen(p, false);
                int transpositions = 0;
                for (std::uint32_t x = 0; x < p; ++x) {
                    if (!m[x] || seen[x]) continue;
                    int len = 0;
                    for (std::uint32_t y = x; !seen[y]; y = phi(y)) {
                        seen[y] = true;
                        ++len;
                    }
                    transpositions += len - 1;
                }
                if ((transpositions % 2 == 0) == want_even) total += 1;
            }
        }
    return total;
}

FdpmCensus fdpm_census(const FdpmGroup& g) {
    FdpmCensus res;
    const std::uint32_t p = g.p;
    std::vector<int> m(p, 0);
    std::vector<std::uint32_t> tuple;
    bool have_min = false;
    // Choose multiplicities of values 0..p-1 in turn.
    auto rec = [&](auto&& self, std::uint32_t x, int left, std::uint64_t sum) -> void {
        if (x + 1 == p) {
            m[x] = left;
            if ((sum + static_cast<std::uint64_t>(x) * left) % p != 0) return;
            int distinct = 0;
            for (int c : m) distinct += c > 0;
            if (distinct < 2) return;  // constant tuples are the zero vector (or not zero-sum)
            tuple.clear();
            for (std::uint32_t y = 0; y < p; ++y) tuple.insert(tuple.end(), m[y], y);
            ++res.multisets;
            BigInt s = fdpm_stabilizer_order(g, tuple);
            if (!have_min || s < res.min_stabilizer) res.min_stabilizer = s, have_min = true;
            if (s == 1 && !res.regular_exists) {
                res.regular_exists = true;
                res.first_regular = tuple;
            }
            return;
        }
        for (int c = 0; c <= left; ++c) {
            m[x] = c;
            self(self, x + 1, left - c, sum + static_cast<std::uint64_t>(x) * c);
        }
    };
    rec(rec, 0, g.n, 0);
    return res;
}

std::uint64_t fdpm_orbit_size(const FdpmGroup& g, const std::vector<std::uint32_t>& tuple, std::uint64_t max_orbit) {
    const int n = g.n;
    const std::uint32_t p = g.p;
    const bool quotient = n % p == 0;
    const bool twist = g.twisted && !g.alternating;
    auto norm = [&](std::vector<std::uint32_t>& t) {
        if (!quotient) return;
        const std::uint32_t c = t[n - 1];
        for (auto& x : t) x = (x + p - c) % p;
    };
    auto enc = [&](const std::vector<std::uint32_t>& t) {
        std::uint64_t x = 0;
        for (auto e : t) x = x * p + e;
        return x;
    };
    auto dec = [&](std::uint64_t x) {
        std::vector<std::uint32_t> t(n);
        for (int i = n; i-- > 0;) {
            t[i] = x % p;
            x /= p;
        }
        return t;
    };
    std::vector<Permutation> gens = g.alternating ? an_generators(n) : coxeter_generators(n);
    auto scal = scalars(g);
    const std::uint32_t lam = scal.size() > 1 ? scal[1] : 1;
    std::vector<std::uint32_t> start = tuple;
    norm(start);
    U64Set seen;
    std::vector<std::uint64_t> frontier{enc(start)};
    seen.insert(frontier[0]);
    std::vector<std::uint32_t> y(n);
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto code : frontier) {
            const auto t = dec(code);
            auto push = [&]() {
                norm(y);
                std::uint64_t c = enc(y);
                if (seen.insert(c)) {
                    if (seen.size() > max_orbit) throw BudgetExceeded("orbit exceeds max_orbit");
                    next.push_back(c);
                }
            };
            for (const auto& s : gens) {
                const bool negate = twist && !s.is_even();
                for (int i = 0; i < n; ++i) {
                    std::uint32_t v = t[s(i)];
                    y[i] = negate ? (p - v) % p : v;
                }
                push();
            }
            if (lam != 1) {
                for (int i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>(std::uint64_t{t[i]} * lam % p);
                push();
            }
        }
        frontier.swap(next);
    }
    return seen.size();
}

}  // namespace regorb
