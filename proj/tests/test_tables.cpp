#include <doctest.h>

#include "regorb/repkit.hpp"
#include "regorb/tables.hpp"

using namespace regorb;

TEST_CASE("embedded rows are well formed") {
    const auto& t = expected_tables();
    CHECK(t.version == 1);
    CHECK(t.rows.size() == 14);
    for (const auto& r : t.rows) {
        CHECK(r.mu.n() == r.n);
        CHECK(p_regular(r.mu, r.p));
        for (const auto& [h, as] : r.no_regular)
            for (auto a : as) CHECK((r.p - 1) % a == 0);
    }
    CHECK(listed_no_regular(5, 3, Partition{3, 1, 1}, GroupKind::An, 2));
    CHECK_FALSE(listed_no_regular(5, 3, Partition{3, 1, 1}, GroupKind::An, 1));
    CHECK_FALSE(listed_no_regular(6, 5, Partition{3, 3}, GroupKind::An, 1));
    CHECK(listed_no_regular(6, 5, Partition{2, 2, 2}, GroupKind::Sn, 1));
    CHECK_FALSE(listed_module(7, 2, Partition{5, 2}, GroupKind::An));
    CHECK(listed_module(9, 2, Partition{5, 3, 1}, GroupKind::An));
}

TEST_CASE("associates in the data agree with trace matching") {
    for (const auto& r : expected_tables().rows) {
        if (r.p == 2 || !r.assoc) continue;
        CHECK(associate_partition(r.mu, r.p) == *r.assoc);
    }
}

TEST_CASE("dims table examples") {
    auto find = [](const std::vector<DimRow>& rows, const Partition& mu) {
        for (const auto& r : rows)
            if (r.mu == mu) return r.dim;
        return std::size_t(0);
    };
    CHECK(find(dims_table(5, 2), Partition{3, 2}) == 4);
    auto t65 = dims_table(6, 5);
    CHECK(find(t65, Partition{3, 3}) == 5);
    CHECK(find(t65, Partition{2, 2, 2}) == 5);
    CHECK(find(dims_table(5, 3), Partition{3, 1, 1}) == 6);
    for (const auto& r : t65) CHECK(r.rn == 6 - std::max(r.mu.largest(), r.assoc.largest()));
}

TEST_CASE("sign twist of D^mu behaves like D^m(mu)") {
    for (int n : {5, 6})
        for (std::uint32_t p : {3u, 5u}) {
            if (static_cast<int>(p) > n) continue;
            for (const auto& mu : p_regular_partitions(n, p)) {
                Representation v = build_dmu(mu, p);
                if (v.dim <= 1) continue;
                Representation w = build_dmu(associate_partition(mu, p), p);
                Verdict a = verdict(tensor_sign(v)), b = verdict(w);
                CHECK(a.outcome == b.outcome);
            }
        }
}

TEST_CASE("verify-tables replay up to n = 6 has no mismatches") {
    VerifyOptions o;
    o.max_n = 6;
    auto r = verify_tables(o);
    CHECK(r.fail == 0);
    CHECK(r.pass > 100);
    std::size_t external = 0;
    for (const auto& l : r.lines)
        if (l.status == "skipped") {
            CHECK(l.detail == "requires external generators");
            ++external;
        }
    CHECK(external == 7);
}

TEST_CASE("verify-tables is deterministic") {
    VerifyOptions o;
    o.max_n = 5;
    auto a = verify_tables(o), b = verify_tables(o);
    REQUIRE(a.lines.size() == b.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        CHECK(a.lines[i].id == b.lines[i].id);
        CHECK(a.lines[i].status == b.lines[i].status);
        CHECK(a.lines[i].detail == b.lines[i].detail);
    }
}
