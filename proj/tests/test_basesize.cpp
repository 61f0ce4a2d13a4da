#include <doctest.h>

#include "regorb/basesize.hpp"
#include "regorb/errors.hpp"
#include "regorb/repkit.hpp"
#include "regorb/spechtmod.hpp"
#include "regorb/vecspace.hpp"

using namespace regorb;

namespace {

// Least t such that some t-tuple has trivial joint stabilizer, by trying all tuples.
int brute_min_t(const Representation& v) {
    VectorCodec codec(v.dim, v.p);
    auto elems = enumerate_group(v, 100000);
    std::vector<EncodedAction> act;
    for (const auto& g : elems) act.emplace_back(g, codec);
    for (int t = 1; t <= static_cast<int>(v.dim); ++t) {
        std::vector<std::uint64_t> tup(t, 0);
        for (;;) {
            std::size_t fixers = 0;
            for (const auto& a : act) {
                bool fix = true;
                for (auto x : tup) fix = fix && a(x) == x;
                fixers += fix;
            }
            if (fixers == 1) return t;
            int i = 0;
            while (i < t && ++tup[i] == codec.size()) tup[i++] = 0;
            if (i == t) break;
        }
    }
    return -1;
}

}  // namespace

TEST_CASE("base sizes agree with brute force on small modules") {
    for (auto [mu, p] : std::vector<std::pair<Partition, std::uint32_t>>{
             {Partition{3, 2}, 2}, {Partition{4, 1}, 2}, {Partition{4, 1}, 3}, {Partition{3, 1, 1}, 3}}) {
        Representation v = build_dmu(mu, p);
        if (v.space_size() > 1000) continue;
        BaseSizeResult r = min_trivializing_tuple(v, 8);
        CHECK_MESSAGE(r.t == brute_min_t(v), mu.str(), " p=", p);
        CHECK(r.greedy_t >= r.t);
        CHECK(static_cast<int>(r.tuple.size()) == r.t);
        Representation a = restrict_to_an(v);
        if (split_or_irreducible(a).irreducible) CHECK(min_trivializing_tuple(a, 8).t == brute_min_t(a));
    }
}

TEST_CASE("regular orbit gives t = 1") {
    Representation v = restrict_to_an(build_fdpm(6, 5));
    BaseSizeResult r = min_trivializing_tuple(v, 4);
    CHECK(r.t == 1);
    CHECK(r.affine_base_size() == 2);
    CHECK(stabilizer_order(v, r.tuple[0]) == 1);
}

TEST_CASE("witness tuples have trivial joint stabilizer") {
    Representation v = build_dmu(Partition{4, 2}, 2);
    BaseSizeResult r = min_trivializing_tuple(v, 6);
    VectorCodec codec(v.dim, v.p);
    std::size_t fixers = 0;
    for (const auto& g : enumerate_group(v, 1000)) {
        bool fix = true;
        for (const auto& x : r.tuple) fix = fix && vec_mul(x, g) == x;
        fixers += fix;
    }
    CHECK(fixers == 1);
    CHECK_THROWS_AS(min_trivializing_tuple(v, r.t - 1), BudgetExceeded);
}
