#include "regorb/orbitengine.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "regorb/errors.hpp"
#include "regorb/repkit.hpp"
#include "regorb/vecspace.hpp"

namespace regorb {

namespace {

std::uint64_t mult_order(std::uint32_t x, std::uint32_t p) {
    std::uint64_t k = 1;
    std::uint64_t y = x % p;
    while (y != 1) {
        y = y * x % p;
        ++k;
    }
    return k;
}

bool is_small_prime(std::uint64_t x) { return x > 1 && is_prime(x); }

std::vector<std::uint32_t> scalar_group(const Representation& v) {
    std::vector<std::uint32_t> a{1};
    const std::uint32_t lam = v.scalar_lambda();
    for (std::uint64_t x = lam; x != 1; x = x * lam % v.p) a.push_back(static_cast<std::uint32_t>(x));
    return a;
}

std::uint64_t matrix_order(const FpMatrix& m, std::uint64_t cap) {
    FpMatrix x = m;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (x.is_identity()) return k;
        x = x * m;
    }
    return 0;
}

std::vector<FpMatrix> h_generators(const Representation& v) {
    return {v.generators.begin(), v.generators.begin() + v.h_generator_count()};
}

std::string subspace_key(const FpMatrix& m) {
    const auto& d = m.data();
    return std::string(reinterpret_cast<const char*>(d.data()), d.size() * sizeof(std::uint32_t));
}

std::uint64_t space_bits(const Budget& b) { return b.huge ? std::max<std::uint64_t>(b.max_vspace, 1ULL << 32) : b.max_vspace; }

}  // namespace

std::vector<PrimeClass> prime_order_classes(const Representation& v, const Budget& b) {
    std::vector<PrimeClass> out;
    const auto A = scalar_group(v);
    if (v.group.kind == GroupKind::External) {
        Representation all = v;
        for (const auto& g : enumerate_group(all, b.max_closure)) {
            std::uint64_t o = matrix_order(g, 100000);
            if (!is_small_prime(o)) continue;
            PrimeClass c;
            c.matrix = g;
            c.class_size = 1;
            c.order = o;
            c.conjugates_listed = true;
            if (g == FpMatrix::scalar(v.dim, v.p, g(0, 0))) c.lambda = g(0, 0);
            c.tag = "element";
            out.push_back(std::move(c));
        }
        return out;
    }
    for (const auto& cr : prime_order_class_reps(v.group.n, v.group.kind)) {
        FpMatrix m = evaluate_permutation(v, cr.rep);
        for (auto lam : A) {
            if (lam != 1 && mult_order(lam, v.p) != cr.element_order) continue;
            PrimeClass c;
            c.matrix = m.scaled(lam);
            c.class_size = cr.size_in_group;
            c.order = cr.element_order;
            c.lambda = lam;
            c.tag = cr.rep.str() + (lam == 1 ? "" : "*" + std::to_string(lam));
            auto ct = cycle_type(cr.rep);
            c.transposition = ct.size() >= 1 && ct[0] == 2 && (ct.size() == 1 || ct[1] == 1);
            out.push_back(std::move(c));
        }
    }
    for (auto lam : A) {
        std::uint64_t o = mult_order(lam, v.p);
        if (!is_small_prime(o)) continue;
        PrimeClass c;
        c.matrix = FpMatrix::scalar(v.dim, v.p, lam);
        c.class_size = 1;
        c.order = o;
        c.lambda = lam;
        c.tag = "scalar " + std::to_string(lam);
        out.push_back(std::move(c));
    }
    return out;
}

FpMatrix fixed_space(const FpMatrix& g) {
    return left_kernel(g - FpMatrix::identity(g.rows(), g.p()));
}

std::size_t commutator_dim(const FpMatrix& g) { return g.rows() - fixed_space(g).rows(); }

BigInt strong_bound_sum(const Representation& v, const std::vector<PrimeClass>& classes) {
    BigInt s = 0;
    for (const auto& c : classes) {
        BigInt pw = 1;
        for (std::size_t i = 0, k = fixed_space(c.matrix).rows(); i < k; ++i) pw *= v.p;
        s += c.class_size * pw;
    }
    return s;
}

CoverageResult coverage_certify_no_regular(const Representation& v, const Budget& b) {
    VectorCodec codec(v.dim, v.p);
    if (!codec.fits() || codec.size() > space_bits(b)) throw BudgetExceeded("vector space exceeds coverage budget");
    const std::uint64_t total = codec.size();
    AtomicBitmap bits(total);
    auto classes = prime_order_classes(v, b);
    std::vector<std::pair<bool, FpMatrix>> fixed;  // (conjugates already listed, fixed space)
    for (const auto& c : classes) {
        FpMatrix f = fixed_space(c.matrix);
        if (f.rows() > 0) fixed.emplace_back(c.conjugates_listed, std::move(f));
    }
    std::vector<std::size_t> order(fixed.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return fixed[x].second.rows() > fixed[y].second.rows(); });

    const auto gens = h_generators(v);
    std::uint64_t covered = 0;
    CoverageResult res;
    for (auto idx : order) {
        const FpMatrix& f0 = fixed[idx].second;
        std::vector<FpMatrix> spaces{f0};
        if (!fixed[idx].first) {
            std::unordered_set<std::string> seen{subspace_key(f0)};
            for (std::size_t i = 0; i < spaces.size(); ++i)
                for (const auto& g : gens) {
                    FpMatrix u = rref(spaces[i] * g).r;
                    if (seen.insert(subspace_key(u)).second) spaces.push_back(std::move(u));
                }
        }
        const unsigned nt = std::max(1u, std::min<unsigned>(b.threads, static_cast<unsigned>(spaces.size())));
        std::vector<std::uint64_t> fresh(nt, 0);
        auto work = [&](unsigned t) {
            std::uint64_t cnt = 0;
            for (std::size_t i = t; i < spaces.size(); i += nt)
                for_each_in_span(spaces[i], codec, [&](std::uint64_t x) {
                    if (x != 0 && bits.set(x)) ++cnt;
                });
            fresh[t] = cnt;
        };
        if (nt == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        for (auto c : fresh) covered += c;
        if (covered == total - 1) break;
    }
    res.covered = covered;
    res.full = covered == total - 1;
    if (!res.full) {
        std::uint64_t x = bits.first_clear(1);
        res.least_uncovered = codec.decode(x);
    }
    return res;
}

namespace {

template <class Visit>
std::uint64_t bfs_orbit(const std::vector<EncodedAction>& acts, std::uint64_t start, std::uint64_t cap, Visit&& mark) {
    std::vector<std::uint64_t> frontier{start};
    mark(start);
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto x : frontier)
            for (const auto& a : acts) {
                std::uint64_t y = a(x);
                if (mark(y)) {
                    if (++count > cap) throw BudgetExceeded("orbit exceeds max_orbit");
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    return count;
}

}  // namespace

BigInt orbit_size(const Representation& v, const FpVector& w, const Budget& b) {
    VectorCodec codec(v.dim, v.p);
    if (!codec.fits()) throw BudgetExceeded("vector space too large to encode");
    std::vector<EncodedAction> acts;
    for (const auto& g : v.generators) acts.emplace_back(g, codec);
    const std::uint64_t start = codec.encode(w);
    if (codec.size() <= space_bits(b)) {
        AtomicBitmap seen(codec.size());
        return bfs_orbit(acts, start, b.max_orbit, [&](std::uint64_t x) { return seen.set(x); });
    }
    U64Set seen;
    return bfs_orbit(acts, start, b.max_orbit, [&](std::uint64_t x) { return seen.insert(x); });
}

BigInt stabilizer_order(const Representation& v, const FpVector& w, const Budget& b) {
    BigInt g = v.order();
    BigInt o = orbit_size(v, w, b);
    if (g % o != 0) throw std::logic_error("orbit size does not divide the group order");
    return g / o;
}

std::vector<std::uint64_t> orbit_partition(const Representation& v, const Budget& b) {
    VectorCodec codec(v.dim, v.p);
    if (!codec.fits() || codec.size() > space_bits(b)) throw BudgetExceeded("vector space exceeds budget");
    std::vector<EncodedAction> acts;
    for (const auto& g : v.generators) acts.emplace_back(g, codec);
    AtomicBitmap seen(codec.size());
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t x = 0; x < codec.size(); x = seen.first_clear(x))
        sizes.push_back(bfs_orbit(acts, x, UINT64_MAX, [&](std::uint64_t y) { return seen.set(y); }));
    return sizes;
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Regular: return "Regular";
        case Outcome::NoRegular: return "NoRegular";
        default: return "Undecided";
    }
}

Verdict verdict(const Representation& v, const Budget& b) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict r;
    r.seed = b.seed;
    r.group_order = v.order();
    r.space_size = v.space_size();
    auto done = [&]() {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
    if (r.space_size < r.group_order) {
        r.outcome = Outcome::NoRegular;
        r.certificate = "pigeonhole";
        return done();
    }
    const bool can_orbit = r.group_order <= b.max_orbit;
    auto verify = [&](const FpVector& w) {
        if (!can_orbit) return false;
        try {
            r.witness_orbit = orbit_size(v, w, b);
        } catch (const BudgetExceeded&) {
            return false;
        }
        r.witness_verified = r.witness_orbit == r.group_order;
        return r.witness_verified;
    };
    auto classes = prime_order_classes(v, b);
    r.strong_bound = strong_bound_sum(v, classes);
    const bool bound_proves = r.strong_bound < r.space_size;
    VectorCodec codec(v.dim, v.p);
    const bool can_cover = codec.fits() && codec.size() <= space_bits(b);
    if (can_cover) {
        CoverageResult c = coverage_certify_no_regular(v, b);
        r.covered = c.covered;
        if (c.full) {
            if (bound_proves) throw std::logic_error("coverage contradicts the counting bound");
            r.outcome = Outcome::NoRegular;
            r.certificate = "coverage";
            return done();
        }
        // A vector outside every prime-order fixed space has trivial stabilizer.
        r.outcome = Outcome::Regular;
        r.certificate = bound_proves ? "strong-bound" : "coverage";
        r.witness = c.least_uncovered;
        verify(*r.witness);
        if (can_orbit && !r.witness_verified) throw std::logic_error("uncovered vector is not regular");
        return done();
    }
    std::mt19937_64 rng(b.seed);
    auto sample = [&]() {
        FpVector w(v.dim);
        for (auto& x : w) x = rng() % v.p;
        return w;
    };
    if (bound_proves) {
        r.outcome = Outcome::Regular;
        r.certificate = "strong-bound";
        if (can_orbit)
            for (int i = 0; i < b.witness_samples; ++i) {
                FpVector w = sample();
                if (verify(w)) {
                    r.witness = w;
                    break;
                }
            }
        if (!r.witness) r.note = "regular orbit exists by the counting bound; no witness measured";
        return done();
    }
    if (can_orbit)
        for (int i = 0; i < b.witness_samples; ++i) {
            FpVector w = sample();
            if (verify(w)) {
                r.outcome = Outcome::Regular;
                r.certificate = "search";
                r.witness = w;
                return done();
            }
        }
    r.outcome = Outcome::Undecided;
    r.certificate = "none";
    r.note = "strong bound " + r.strong_bound.str() + " >= |V| " + r.space_size.str() +
             "; space beyond coverage budget; no witness in " + std::to_string(b.witness_samples) + " samples";
    return done();
}

}  // namespace regorb
