#include "regorb/basesize.hpp"

#include <stdexcept>

#include "regorb/errors.hpp"
#include "regorb/repkit.hpp"
#include "regorb/vecspace.hpp"

namespace regorb {

namespace {

struct Search {
    const VectorCodec& codec;
    std::vector<EncodedAction> act;  // one per group element
    std::vector<EncodedAction> gens;

    std::vector<std::uint32_t> stabilizer(const std::vector<std::uint32_t>& k, std::uint64_t x) const {
        std::vector<std::uint32_t> out;
        for (auto e : k)
            if (act[e](x) == x) out.push_back(e);
        return out;
    }

    // Orbit representatives of K (given as elements, or by generators when whole).
    template <class F>
    void for_each_orbit(const std::vector<std::uint32_t>& k, bool whole, F&& f) const {
        AtomicBitmap seen(codec.size());
        for (std::uint64_t x = 0; x < codec.size(); x = seen.first_clear(x + 1)) {
            std::uint64_t size = 0;
            if (whole) {
                std::vector<std::uint64_t> stack{x};
                seen.set(x);
                while (!stack.empty()) {
                    std::uint64_t y = stack.back();
                    stack.pop_back();
                    ++size;
                    for (const auto& g : gens) {
                        std::uint64_t z = g(y);
                        if (seen.set(z)) stack.push_back(z);
                    }
                }
            } else {
                seen.set(x);
                size = 1;
                for (auto e : k)
                    if (seen.set(act[e](x))) ++size;
            }
            if (f(x, size)) return;
        }
    }

    // Exhaustive: is there a tuple of `left` more vectors trivializing K?
    bool extend(const std::vector<std::uint32_t>& k, bool whole, int left, std::vector<std::uint64_t>& out) const {
        if (k.size() == 1) return true;
        if (left == 0) return false;
        bool ok = false;
        for_each_orbit(k, whole, [&](std::uint64_t x, std::uint64_t size) {
            if (size == 1) return false;
            if (left == 1) {
                if (size == k.size()) {
                    out.push_back(x);
                    ok = true;
                }
                return ok;
            }
            if (extend(stabilizer(k, x), false, left - 1, out)) {
                out.push_back(x);
                ok = true;
            }
            return ok;
        });
        return ok;
    }
};

}  // namespace

BaseSizeResult min_trivializing_tuple(const Representation& v, int t_max, const Budget& b) {
    VectorCodec codec(v.dim, v.p);
    if (!codec.fits() || codec.size() > b.max_vspace) throw BudgetExceeded("vector space exceeds budget");
    Search s{codec, {}, {}};
    for (const auto& g : v.generators) s.gens.emplace_back(g, codec);
    for (const auto& g : enumerate_group(v, b.max_closure)) s.act.emplace_back(g, codec);
    BaseSizeResult r;
    r.group_elements = s.act.size();
    if (BigInt(r.group_elements) != v.order()) throw std::logic_error("enumerated group order differs from metadata");
    std::vector<std::uint32_t> all(s.act.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;

    // Greedy: each new vector with the largest orbit under the current stabilizer.
    std::vector<std::uint32_t> k = all;
    std::vector<std::uint64_t> greedy;
    bool whole = true;
    while (k.size() > 1) {
        std::uint64_t best = 0, best_size = 0;
        s.for_each_orbit(k, whole, [&](std::uint64_t x, std::uint64_t size) {
            if (size > best_size) best = x, best_size = size;
            return size == k.size();
        });
        if (best_size == 1) throw std::invalid_argument("group does not act faithfully");
        greedy.push_back(best);
        k = s.stabilizer(k, best);
        whole = false;
    }
    r.greedy_t = static_cast<int>(greedy.size());
    r.t = r.greedy_t;
    for (auto x : greedy) r.tuple.push_back(codec.decode(x));
    // Exhaust every smaller length.
    for (int t = 1; t < r.greedy_t && t <= t_max; ++t) {
        if (codec.size() < v.order() && t == 1) continue;  // pigeonhole
        std::vector<std::uint64_t> out;
        if (s.extend(all, true, t, out)) {
            r.t = t;
            r.tuple.clear();
            for (auto it = out.rbegin(); it != out.rend(); ++it) r.tuple.push_back(codec.decode(*it));
            break;
        }
    }
    r.exact = true;
    if (r.t > t_max) throw BudgetExceeded("no trivializing tuple within t_max");
    return r;
}

}  // namespace regorb
