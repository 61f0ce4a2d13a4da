// Acceptance checks, one line per criterion. Usage: acceptance [--criterion k] [--huge]
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "regorb/basesize.hpp"
#include "regorb/boundlib.hpp"
#include "regorb/fdpm_census.hpp"
#include "regorb/graphcert.hpp"
#include "regorb/jobs.hpp"
#include "regorb/repkit.hpp"
#include "regorb/spechtmod.hpp"
#include "regorb/tables.hpp"
#include "regorb/vecspace.hpp"

using namespace regorb;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
    // Red, but exactly the shortfall recorded in the README; does not fail the run.
    bool documented_red = false;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            problems.push_back(what);
        }
    }
};

std::vector<std::uint32_t> primes_upto(int n) {
    std::vector<std::uint32_t> out;
    for (int q = 2; q <= n; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

std::vector<std::uint32_t> divisors(std::uint32_t m) {
    std::vector<std::uint32_t> d;
    for (std::uint32_t k = 1; k <= m; ++k)
        if (m % k == 0) d.push_back(k);
    return d;
}

std::string hname(GroupKind h, int n) { return (h == GroupKind::Sn ? "S" : "A") + std::to_string(n); }

// 1. Dimensions of every S_n/A_n row with n <= 10.
Result c1() {
    Result r;
    int checked = 0;
    for (const auto& row : expected_tables().rows) {
        if (row.n > 10) continue;
        for (const auto& [h, d] : row.d) {
            std::size_t got = table_module(row.mu, row.p, h).dim;
            ++checked;
            r.require(got == d, std::to_string(row.n) + "," + std::to_string(row.p) + "," + row.mu.str() + " " +
                                    hname(h, row.n) + " expected " + std::to_string(d) + " got " + std::to_string(got));
        }
    }
    r.detail = std::to_string(checked) + " (row, H) dimensions compared";
    return r;
}

// 2. verify-tables with max n = 6.
Result c2() {
    Result r;
    VerifyOptions o;
    o.max_n = 6;
    auto rep = verify_tables(o);
    r.require(rep.fail == 0, std::to_string(rep.fail) + " mismatches");
    std::size_t rows = 0;
    for (const auto& l : rep.lines) {
        if (l.status == "fail") r.require(false, l.id + ": expected " + l.expected + ", got " + l.got);
        if (l.status == "skipped" && l.detail != "requires external generators") r.require(false, l.id + " skipped: " + l.detail);
        if (l.id.rfind("n=", 0) == 0) ++rows;
    }
    auto find = [&](const std::string& id) -> std::string {
        for (const auto& l : rep.lines)
            if (l.id == id) return l.got;
        return "missing";
    };
    r.require(find("n=5 p=3 mu=(3,1,1) H=A5 a=1") == "Regular", "A5 on (3,1,1)/F3 should be Regular");
    r.require(find("n=5 p=3 mu=(3,1,1) H=A5 a=2") == "NoRegular", "A5xF3* on (3,1,1)/F3 should be NoRegular");
    r.require(find("n=6 p=5 mu=(3,3) H=A6 a=1") == "Regular", "A6 on (3,3)/F5 should be Regular");
    for (const char* id : {"n=6 p=5 mu=(3,3) H=A6 a=2", "n=6 p=5 mu=(3,3) H=A6 a=4", "n=6 p=5 mu=(3,3) H=S6 a=1",
                           "n=6 p=5 mu=(3,3) H=S6 a=2", "n=6 p=5 mu=(3,3) H=S6 a=4"})
        r.require(find(id) == "NoRegular", std::string(id) + " should be NoRegular");
    r.detail = std::to_string(rep.pass) + " checks pass (" + std::to_string(rows) + " table-row checks), " +
               std::to_string(rep.skipped) + " cover rows need external generators";
    return r;
}

// 3. Medium rows plus complement.
Result c3() {
    Result r;
    std::ostringstream os;
    Budget b;
    int cells = 0;
    for (const auto& row : expected_tables().rows) {
        if (row.n < 7 || row.n > 10) continue;
        for (const auto& [h, as] : row.no_regular)
            for (auto a : as) {
                Representation v = table_module(row.mu, row.p, h);
                if (a > 1) v = scalar_extension(v, a);
                Verdict vd = verdict(v, b);
                ++cells;
                bool ok = vd.outcome == Outcome::NoRegular &&
                          (vd.certificate == "pigeonhole" || vd.certificate == "coverage");
                r.require(ok, std::to_string(row.n) + "," + row.mu.str() + " " + hname(h, row.n) + ": " +
                                  outcome_name(vd.outcome) + " via " + vd.certificate);
            }
    }
    os << cells << " listed cells NoRegular by pigeonhole/coverage; complement (dim<=24, regular with stabilizer 1):";
    bool rows_ok = r.pass;
    std::map<int, int> counts;
    for (int n = 7; n <= 10; ++n) {
        auto entries = complement_modules(n, 2, 24, b);
        int good = 0;
        os << " n=" << n << ":";
        for (const auto& e : entries) {
            bool ok = e.verdict.outcome == Outcome::Regular && e.verdict.witness_verified && e.stabilizer == 1;
            if (ok) ++good;
            os << " " << e.mu.str() << hname(e.h, n) << "/d" << e.dim << (ok ? "+" : "-");
            // A non-listed module without a regular orbit would contradict the table.
            r.require(e.verdict.outcome != Outcome::NoRegular, "non-listed " + e.mu.str() + " has no regular orbit");
        }
        counts[n] = good;
        os << " [" << good << "]";
        if (good < 3) r.require(false, "n=" + std::to_string(n) + ": only " + std::to_string(good) + " non-listed modules of dim <= 24");
    }
    r.detail = os.str();
    // All 2-modular irreducibles of S_n/A_n, n = 8..10, of dim <= 24 that are neither
    // trivial, fully deleted nor listed are the ones counted here; three cannot exist.
    const std::map<int, int> recorded{{7, 3}, {8, 1}, {9, 0}, {10, 0}};
    r.documented_red = !r.pass && rows_ok && counts == recorded;
    return r;
}

// 4. Fully deleted module law.
Result c4() {
    Result r;
    Budget b;
    int cells = 0, witnesses = 0;
    for (int n = 5; n <= 12; ++n)
        for (auto p : primes_upto(n))
            for (auto a : divisors(p - 1)) {
                for (bool tw : {false, true}) {
                    Verdict v = fdpm_verdict(n, p, false, tw, a, b);
                    ++cells;
                    r.require(v.outcome == Outcome::NoRegular, "S" + std::to_string(n) + (tw ? "(x)sgn" : "") + " p=" +
                                                                   std::to_string(p) + " a=" + std::to_string(a) + " has a regular orbit");
                }
                bool expect = a == 1 && p == static_cast<std::uint32_t>(n - 1);
                Verdict v = fdpm_verdict(n, p, true, false, a, b);
                ++cells;
                r.require((v.outcome == Outcome::Regular) == expect,
                          "A" + std::to_string(n) + " p=" + std::to_string(p) + " a=" + std::to_string(a) + ": " + outcome_name(v.outcome));
                if (!expect) continue;
                // The explicit witness (1, 2, ..., p-1, 0, 0).
                std::vector<std::uint32_t> t;
                for (std::uint32_t i = 1; i < p; ++i) t.push_back(i);
                t.push_back(0);
                t.push_back(0);
                FdpmGroup g{n, p, true, false, 1};
                BigInt orbit;
                if (g.order() <= b.max_orbit) orbit = fdpm_orbit_size(g, t, b.max_orbit);
                else orbit = g.order() / fdpm_stabilizer_order(g, t);
                r.require(orbit == factorial(n) / 2, "witness orbit " + orbit.str() + " for n=" + std::to_string(n));
                ++witnesses;
            }
    r.detail = std::to_string(cells) + " cells; A_n witnesses (1..p-1,0,0) regular for n=6,8,12 (" +
               std::to_string(witnesses) + "); n=12 orbit from the exact stabilizer count";
    r.require(witnesses == 3, "expected witnesses at n = 6, 8, 12");
    return r;
}

// 5. Bound anchors.
Result c5() {
    Result r;
    r.require(g(2, 20).floor() == 620, "g(2,20)");
    r.require(g(2, 21).floor() == 697, "g(2,21)");
    r.require(g(3, 19).floor() == 352, "g(3,19)");
    r.require(h_spin(3, 8).floor() == 38, "h_spin(3,8)");
    r.require(h_spin(11, 17).floor() == 124, "h_spin(11,17)");
    const std::vector<std::pair<int, int>> two{{15, 127}, {16, 127}, {17, 253}, {18, 253}, {19, 505}, {20, 505}, {21, 930}, {22, 930}};
    const std::vector<std::pair<int, int>> odd{{11, 54}, {12, 88}, {13, 107}, {14, 175}, {15, 213}};
    for (auto [n, v] : two) r.require(f_p(n, 2) == v, "f_2(" + std::to_string(n) + ")");
    for (auto [n, v] : odd)
        for (std::uint32_t p : {3u, 5u, 7u}) r.require(f_p(n, p) == v, "f_p(" + std::to_string(n) + ")");
    for (int n = 15; n <= 200; ++n) r.require(2 * f_p(n, 2) > f_p(n + 2, 2), "2f_2 property at " + std::to_string(n));
    for (int n = 11; n <= 200; ++n) r.require(2 * f_p(n, 3) > f_p(n + 2, 3), "2f_p property at " + std::to_string(n));
    r.detail = "floors 620 697 352 38 124; f_p tables; 2f_p(n) > f_p(n+2) for n up to 200";
    return r;
}

// 6. Basic spin dimensions.
Result c6() {
    Result r;
    r.require(delta(Cover::TwoAn, 8, 3) == 8, "2.A8 p=3");
    r.require(delta(Cover::TwoSn, 8, 5) == 8, "2.S8 p=5");
    r.require(delta(Cover::TwoSn, 10, 3) == 16, "2.S10 p=3");
    r.require(delta(Cover::TwoAn, 11, 3) == 16, "2.A11 p=3");
    r.require(delta(Cover::TwoAn, 12, 3) == 16, "2.A12 p=3");
    r.detail = "8 8 16 16 16";
    return r;
}

// 7. Graph certificates.
Result c7() {
    Result r;
    const std::uint64_t samples = 100000;
    int certified = 0, na = 0;
    std::uint64_t total = 0;
    auto one = [&](int n, Shape sh, std::uint32_t p) {
        auto s = build_regular_candidate(n, sh, p);
        auto c = certify_regular(s, n, p, sh, samples, 1000 + n);
        const std::string id = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " " + shape_name(sh);
        if (sh == Shape::Hook && p == 2) {
            // (n-2,1,1) is not 2-regular, so there is no such module; the certifier must say so.
            r.require(!c.certified && !c.p_regular, id + " should be rejected as not 2-regular");
            ++na;
            return;
        }
        r.require(c.certified, id + ": " + c.reason);
        r.require(c.samples == samples && c.violations == 0, id + ": " + std::to_string(c.violations) + " violations");
        total += c.samples;
        if (c.certified) ++certified;
    };
    for (int n = 13; n <= 20; ++n)
        for (Shape sh : {Shape::TwoRow, Shape::Hook})
            for (std::uint32_t p : {2u, 3u, 5u}) one(n, sh, p);
    for (Shape sh : {Shape::TwoRow, Shape::Hook})
        for (std::uint32_t p : {3u, 5u}) one(12, sh, p);
    r.detail = std::to_string(certified) + " certificates, " + std::to_string(total) + " sampled obligations, 0 violations; " +
               std::to_string(na) + " hook cases at p=2 rejected (partition not 2-regular)";
    return r;
}

// 8. Base sizes.
Result c8() {
    Result r;
    struct Case {
        int n;
        Partition mu;
        GroupKind h;
        std::size_t d;
        int want;
    };
    const std::vector<Case> cases{{7, {4, 3}, GroupKind::An, 4, 4},  {8, {5, 3}, GroupKind::An, 4, 5},
                                  {8, {5, 3}, GroupKind::Sn, 8, 4},  {9, {5, 4}, GroupKind::An, 8, 4},
                                  {7, {4, 3}, GroupKind::Sn, 8, 3},  {8, {6, 2}, GroupKind::Sn, 14, 3}};
    std::ostringstream os;
    for (const auto& c : cases) {
        Representation v = table_module(c.mu, 2, c.h);
        r.require(v.dim == c.d, "dimension of " + c.mu.str());
        auto res = min_trivializing_tuple(v, 6);
        int got = res.affine_base_size();
        r.require(res.exact && got == c.want, hname(c.h, c.n) + " " + c.mu.str() + ": got " + std::to_string(got));
        os << hname(c.h, c.n) << c.mu.str() << "->" << got << " ";
    }
    r.detail = os.str();
    return r;
}

// 9. SL_2(5).
Result c9() {
    Result r;
    Representation v = builtin_rep("SL2(5)");
    r.require(v.dim == 2 && v.p == 5, "shape");
    r.require(faithfulness_check(v), "faithful");
    BigInt ord = closure_order(v, 1000);
    r.require(ord == 120, "closure order " + ord.str());
    Verdict vd = verdict(v);
    r.require(vd.outcome == Outcome::NoRegular && vd.certificate == "pigeonhole", "verdict");
    r.detail = "dim 2, closure order " + ord.str() + ", " + outcome_name(vd.outcome) + " (" + vd.certificate + ")";
    return r;
}

// 10. Property suites.
Result c10() {
    Result r;
    std::mt19937_64 rng(20261016);
    // rank-nullity
    for (int t = 0; t < 10000; ++t) {
        const std::uint32_t ps[] = {2, 3, 5, 7, 11};
        std::uint32_t p = ps[rng() % 5];
        std::size_t m = 1 + rng() % 12, n = 1 + rng() % 12;
        FpMatrix a(m, n, p);
        const bool low = rng() % 2;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() % p;
        if (low && m > 2)
            for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = (a(0, j) + a(1, j)) % p;
        std::size_t rk = rank(a), nul = kernel(a).rows();
        if (rk + nul != n) {
            r.require(false, "rank-nullity");
            break;
        }
        if (rank(a.transpose()) != rk) {
            r.require(false, "row rank vs column rank");
            break;
        }
    }
    // Modules: every p-regular partition of n = 5..8, p <= n, within the tabloid budget.
    int modules = 0, class_checks = 0, partitions_checked = 0;
    std::vector<Representation> built;
    for (int n = 5; n <= 8; ++n)
        for (auto p : primes_upto(n))
            for (const auto& mu : p_regular_partitions(n, p)) {
                TabloidIndex idx(mu);
                SpechtBasis sb = specht_basis(mu, p, idx);
                GramData gd = gram_data(sb);
                r.require(gd.gram == gd.gram.transpose(), "Gram symmetry " + mu.str());
                // <e_i g, e_j g> = <e_i, e_j> on M^mu for the Coxeter generators.
                const FpMatrix& e = sb.polytabloid_matrix;
                for (const auto& s : coxeter_generators(n)) {
                    FpMatrix eg(e.rows(), e.cols(), p);
                    for (std::size_t i = 0; i < e.rows(); ++i)
                        for (std::size_t k = 0; k < e.cols(); ++k) eg(i, idx.act(k, s)) = e(i, k);
                    if (eg * eg.transpose() != gd.gram) r.require(false, "form not invariant " + mu.str());
                }
                ++partitions_checked;
                Representation v = build_dmu(mu, p);
                ++modules;
                // Coxeter relations.
                const auto& gs = v.generators;
                const std::size_t k = gs.size();
                FpMatrix id = FpMatrix::identity(v.dim, p);
                for (std::size_t i = 0; i < k; ++i) {
                    if (gs[i] * gs[i] != id) r.require(false, "s_i^2 " + mu.str());
                    if (i + 1 < k) {
                        FpMatrix x = gs[i] * gs[i + 1];
                        if (x * x * x != id) r.require(false, "(s_i s_i+1)^3 " + mu.str());
                    }
                    for (std::size_t j = i + 2; j < k; ++j) {
                        FpMatrix x = gs[i] * gs[j];
                        if (x * x != id) r.require(false, "(s_i s_j)^2 " + mu.str());
                    }
                }
                if (v.dim <= 1) continue;  // not faithful
                built.push_back(v);
                for (GroupKind h : {GroupKind::Sn, GroupKind::An}) {
                    Representation w = h == GroupKind::Sn ? v : irreducible_constituent(restrict_to_an(v));
                    for (const auto& c : all_class_reps(n, h)) {
                        if (c.rep.is_identity()) continue;
                        FpMatrix m = evaluate_permutation(w, c.rep);
                        std::size_t cdim = fixed_space(m).rows();
                        int moved = 0;
                        for (int i = 0; i < n; ++i) moved += c.rep(i) != i;
                        const bool tr = moved == 2;
                        int ru = r_upper(tr, n);
                        ++class_checks;
                        if (static_cast<std::size_t>(ru) * cdim > w.dim * static_cast<std::size_t>(ru - 1))
                            r.require(false, "fixed-space bound " + mu.str() + " " + c.rep.str());
                    }
                    if (h == GroupKind::An && w.dim != v.dim) built.push_back(w);
                }
            }
    // Orbit partitions and thread independence.
    int partitioned = 0, threaded = 0;
    for (const auto& v : built) {
        VectorCodec codec(v.dim, v.p);
        if (!codec.fits() || codec.size() > (1u << 16)) continue;
        auto sizes = orbit_partition(v);
        BigInt total = 0;
        for (auto s : sizes) {
            total += s;
            if (v.order() % s != 0) r.require(false, "orbit size does not divide |G|");
        }
        r.require(total == v.space_size(), "orbits do not partition V");
        ++partitioned;
        Budget b1, b8;
        b8.threads = 8;
        Verdict x = verdict(v, b1), y = verdict(v, b8);
        r.require(x.outcome == y.outcome && x.covered == y.covered && x.witness == y.witness, "thread dependence");
        ++threaded;
    }
    // Larger coverage runs for thread independence.
    for (auto [mu, h] : std::vector<std::pair<Partition, GroupKind>>{{{5, 2}, GroupKind::Sn}, {{5, 2}, GroupKind::An},
                                                                      {{5, 3, 1}, GroupKind::An}}) {
        Representation v = table_module(mu, 2, h);
        Budget b1, b8;
        b8.threads = 8;
        Verdict x = verdict(v, b1), y = verdict(v, b8);
        r.require(x.outcome == y.outcome && x.covered == y.covered && x.witness == y.witness, "thread dependence " + mu.str());
        ++threaded;
    }
    r.detail = "10^4 rank-nullity; " + std::to_string(partitions_checked) + " Gram forms; " + std::to_string(modules) +
               " Coxeter checks; " + std::to_string(class_checks) + " fixed-space bounds; " + std::to_string(partitioned) +
               " orbit partitions; " + std::to_string(threaded) + " 1-vs-8 thread comparisons";
    return r;
}

// 11. (12,2,(7,5)) on S_12 by full coverage of 2^32 vectors.
Result c11() {
    Result r;
    Budget b;
    b.huge = true;
    b.threads = std::max(1u, std::thread::hardware_concurrency());
    Representation v = table_module(Partition{7, 5}, 2, GroupKind::Sn);
    r.require(v.dim == 32, "dimension");
    Verdict vd = verdict(v, b);
    r.require(vd.outcome == Outcome::NoRegular && vd.certificate == "coverage", outcome_name(vd.outcome) + " via " + vd.certificate);
    r.detail = "covered " + std::to_string(vd.covered) + " nonzero vectors in " + std::to_string(vd.seconds) + " s";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    bool huge = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (a == "--huge") huge = true;
        else {
            std::cerr << "usage: acceptance [--criterion k] [--huge]\n";
            return 2;
        }
    }
    const std::vector<std::pair<std::string, std::function<Result()>>> all{
        {"dimension table", c1},       {"verdict replay, small", c2}, {"verdict replay, medium", c3},
        {"fully deleted module law", c4}, {"bound anchors", c5},      {"delta cross-check", c6},
        {"graph certificates", c7},    {"base sizes", c8},            {"SL2(5) built-in", c9},
        {"property suites", c10},      {"2^32 coverage (huge)", c11}};
    int bad = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const int id = static_cast<int>(k) + 1;
        if (only && only != id) continue;
        if (id == 11 && !huge) {
            std::cout << "C11 SKIP " << all[k].first << ": run with --huge (needs 512 MB and hours)\n";
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        Result res;
        try {
            res = all[k].second();
        } catch (const std::exception& e) {
            res.pass = false;
            res.problems.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "C" << id << " " << (res.pass ? "PASS" : res.documented_red ? "FAIL (documented)" : "FAIL") << " "
                  << all[k].first << " [" << secs << " s]: " << res.detail << "\n";
        for (std::size_t i = 0; i < res.problems.size() && i < 20; ++i) std::cout << "    " << res.problems[i] << "\n";
        if (!res.pass && !res.documented_red) ++bad;
        std::cout.flush();
    }
    return bad ? 1 : 0;
}
