#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "regorb/basesize.hpp"
#include "regorb/boundlib.hpp"
#include "regorb/errors.hpp"
#include "regorb/graphcert.hpp"
#include "regorb/jobs.hpp"
#include "regorb/repkit.hpp"
#include "regorb/tables.hpp"

using namespace regorb;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3, kParse = 4 };

struct Flags {
    int n = 0;
    std::uint32_t p = 0;
    std::vector<std::string> mu;
    std::string module = "dmu";
    std::string group = "sn";
    std::vector<std::uint32_t> scalars{1};
    bool sign = false;
    std::uint64_t seed = 1;
    std::string cache;
    bool huge = false;
    unsigned jobs = 1;
    bool as_json = false;
    int max_n = 6;
    std::string shape = "two-row";
    std::uint64_t samples = 100000;
    int t_max = 6;
    std::string config;
    unsigned threads = 0;
    std::uint64_t max_vspace = 0, max_orbit = 0;
};

struct Resolved {
    Budget budget;
    std::string cache_path;
};

Resolved resolve(const Flags& f, const CLI::App& app) {
    Config c = load_config(f.config);
    Resolved r;
    r.budget.max_vspace = c.max_vspace;
    r.budget.max_orbit = c.max_orbit;
    r.budget.seed = c.seed;
    r.budget.threads = c.threads;
    r.cache_path = c.cache_path;
    if (app.count("--seed")) r.budget.seed = f.seed;
    if (app.count("--threads")) r.budget.threads = f.threads;
    if (app.count("--max-vspace")) r.budget.max_vspace = f.max_vspace;
    if (app.count("--max-orbit")) r.budget.max_orbit = f.max_orbit;
    if (app.count("--cache")) r.cache_path = f.cache;
    r.budget.huge = f.huge;
    return r;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<JobSpec> make_jobs(const Flags& f, const Budget& b) {
    JobSpec base;
    base.n = f.n;
    base.p = f.p;
    base.sign = f.sign;
    base.budget = b;
    if (f.module == "dmu") base.source = ModuleSource::Dmu;
    else if (f.module == "fdpm") base.source = ModuleSource::Fdpm;
    else if (f.module.rfind("ext:", 0) == 0) {
        base.source = ModuleSource::External;
        base.path = f.module.substr(4);
    } else throw std::invalid_argument("--module must be dmu, fdpm or ext:PATH");
    if (f.group == "sn") base.group = GroupChoice::Sn;
    else if (f.group == "an") base.group = GroupChoice::An;
    else if (f.group == "ext") base.group = GroupChoice::External;
    else throw std::invalid_argument("--group must be sn, an or ext");
    if (base.source == ModuleSource::External) {
        // n and p come from the file.
        Representation v = load_rep(base.path);
        base.n = v.group.n;
        base.p = v.p;
    } else {
        need(f.n > 0 && f.p > 0, "--n and --p are required");
    }
    std::vector<Partition> mus;
    if (base.source == ModuleSource::Dmu) {
        need(!f.mu.empty(), "--mu is required for --module dmu");
        for (const auto& m : f.mu) mus.push_back(Partition::parse(m));
    } else {
        mus.push_back(Partition());
    }
    std::vector<JobSpec> out;
    for (const auto& m : mus)
        for (auto a : f.scalars) {
            JobSpec j = base;
            j.mu = m;
            j.a = a;
            validate(j);
            out.push_back(j);
        }
    return out;
}

std::string witness_str(const json& w) {
    if (w.is_null()) return "-";
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i].get<std::uint32_t>());
    return s + ")";
}

int cmd_dims(const Flags& f) {
    need(f.n >= 1 && f.p >= 2, "--n and --p are required");
    auto rows = dims_table(f.n, f.p);
    if (f.as_json) {
        json out = json::array();
        for (const auto& r : rows) {
            json o{{"mu", r.mu.str()}, {"skipped", r.skipped}};
            if (!r.skipped) {
                o["dim"] = r.dim;
                o["rn"] = r.rn;
                o["assoc"] = r.assoc.str();
            }
            out.push_back(o);
        }
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "n=" << f.n << " p=" << f.p << "\n";
    std::cout << "mu\tdim\tR_n\tm(mu)\n";
    for (const auto& r : rows) {
        if (r.skipped) std::cout << r.mu.str() << "\t-\t-\t-\t(beyond tabloid budget)\n";
        else std::cout << r.mu.str() << "\t" << r.dim << "\t" << r.rn << "\t" << r.assoc.str() << "\n";
    }
    return kOk;
}

int cmd_verdict(const Flags& f, const Resolved& res) {
    auto jobs = make_jobs(f, res.budget);
    std::unique_ptr<VerdictCache> cache;
    if (!res.cache_path.empty()) cache = std::make_unique<VerdictCache>(res.cache_path);
    auto results = run_jobs(jobs, cache.get(), f.jobs);
    int code = kOk;
    for (const auto& r : results) {
        const auto& v = r.record.at("verdict");
        if (v.at("outcome") == "Undecided") code = kBudget;
        if (f.as_json) {
            std::cout << r.line << "\n";
            continue;
        }
        const auto& j = r.record.at("job");
        std::cout << "n=" << j.at("n") << " p=" << j.at("p") << " module=" << j.at("module").get<std::string>();
        if (j.contains("mu")) std::cout << j.at("mu").get<std::string>();
        std::cout << " group=" << j.at("group").get<std::string>() << (j.at("sign").get<bool>() ? " (x)sgn" : "")
                  << " a=" << j.at("scalars") << (r.cached ? " [cached]" : "") << "\n";
        std::cout << "  " << v.at("outcome").get<std::string>() << " via " << v.at("certificate").get<std::string>()
                  << "  |G|=" << v.at("group_order").get<std::string>() << " |V|=" << v.at("space_size").get<std::string>()
                  << "\n";
        if (!v.at("witness").is_null())
            std::cout << "  witness " << witness_str(v.at("witness")) << " orbit " << v.at("witness_orbit").get<std::string>()
                      << (v.at("witness_verified").get<bool>() ? " (verified)" : "") << "\n";
        if (v.contains("note")) std::cout << "  note: " << v.at("note").get<std::string>() << "\n";
    }
    return code;
}

json bound_json(const LogBound& b) {
    json terms = json::array();
    for (const auto& t : b.terms) terms.push_back({{"num", t.num.str()}, {"den", t.den.str()}, {"arg", t.arg.str()}});
    return {{"q", b.q}, {"value", b.value().str(30)}, {"floor", b.floor().str()}, {"terms", terms}};
}

int cmd_bounds(const Flags& f) {
    need(f.n >= 1 && f.p >= 2, "--n and --p are required");
    BoundReport r = bound_report(f.n, f.p, f.group);
    json o{{"n", r.n}, {"p", r.p}, {"group", r.group}, {"order", r.order.str()}, {"center", r.center.str()}, {"kappa", r.kappa}};
    auto put = [&](const char* k, const std::optional<LogBound>& b) {
        if (b) o[k] = bound_json(*b);
    };
    put("eq1", r.eq1);
    put("eq2", r.eq2);
    put("g", r.eq2_q);
    put("eq3", r.eq3);
    put("h_assoc", r.h_assoc);
    put("h_spin", r.h_spin);
    if (r.f) o["f"] = r.f->str();
    if (r.f_p) o["f_p"] = r.f_p->str();
    if (r.delta) o["delta"] = r.delta->str();
    if (f.as_json) {
        std::cout << o.dump(2) << "\n";
        return kOk;
    }
    std::cout << "n=" << r.n << " p=" << r.p << " group=" << r.group << " |G|=" << r.order << " |Z|=" << r.center << "\n";
    for (const char* k : {"eq1", "eq2", "g", "eq3", "h_assoc", "h_spin"})
        if (o.contains(k)) std::cout << "  " << k << " = " << o[k]["value"].get<std::string>() << "  floor " << o[k]["floor"].get<std::string>() << "\n";
    for (const char* k : {"f", "f_p", "delta"})
        if (o.contains(k)) std::cout << "  " << k << " = " << o[k].get<std::string>() << "\n";
    std::cout << "  kappa = " << r.kappa << "\n";
    return kOk;
}

int cmd_graph_cert(const Flags& f, const Resolved& res) {
    need(f.n >= 12, "graph certificates need n >= 12");
    need(!(f.n == 12 && f.p == 2), "n = 12 needs p odd");
    Shape sh;
    if (f.shape == "two-row") sh = Shape::TwoRow;
    else if (f.shape == "hook") sh = Shape::Hook;
    else throw std::invalid_argument("--shape must be two-row or hook");
    auto s = build_regular_candidate(f.n, sh, f.p);
    auto c = certify_regular(s, f.n, f.p, sh, f.samples, res.budget.seed);
    json edges = json::array();
    for (const auto& [e, w] : s.w) edges.push_back({e.first + 1, e.second + 1, w});
    json o{{"n", f.n},
           {"p", f.p},
           {"shape", shape_name(sh)},
           {"certified", c.certified},
           {"p_regular", c.p_regular},
           {"n_ok", c.n_ok},
           {"antisymmetric", c.antisymmetric},
           {"in_specht", c.in_specht},
           {"automorphism_trivial", c.automorphism_trivial},
           {"max_valency", c.max_valency},
           {"edges", c.edges},
           {"edge_limit", c.edge_limit},
           {"search_nodes", c.search_nodes},
           {"samples", c.samples},
           {"violations", c.violations},
           {"seed", res.budget.seed},
           {"reason", c.reason},
           {"weighted_edges", edges}};
    if (f.as_json) std::cout << o.dump(2) << "\n";
    else {
        std::cout << "n=" << f.n << " p=" << f.p << " shape=" << shape_name(sh) << ": "
                  << (c.certified ? "certified" : "NOT certified") << "\n";
        std::cout << "  edges " << c.edges << " (limit " << c.edge_limit << "), max valency " << c.max_valency
                  << ", automorphism search nodes " << c.search_nodes << "\n";
        std::cout << "  obligation samples " << c.samples << ", violations " << c.violations << "\n";
        if (!c.reason.empty()) std::cout << "  " << c.reason << "\n";
    }
    return c.certified ? kOk : kMismatch;
}

int cmd_base_size(const Flags& f, const Resolved& res) {
    auto jobs = make_jobs(f, res.budget);
    need(jobs.size() == 1, "base-size takes a single module");
    Representation v = build_module(jobs[0]);
    auto r = min_trivializing_tuple(v, f.t_max, res.budget);
    json tuple = json::array();
    for (const auto& w : r.tuple) tuple.push_back(w);
    json o{{"t", r.t},
           {"affine_base_size", r.affine_base_size()},
           {"greedy_t", r.greedy_t},
           {"exact", r.exact},
           {"group_elements", r.group_elements},
           {"dim", v.dim},
           {"tuple", tuple}};
    if (f.as_json) std::cout << o.dump(2) << "\n";
    else {
        std::cout << "module dim " << v.dim << ", |G| = " << r.group_elements << "\n";
        std::cout << "  minimal trivializing tuple length " << r.t << " (greedy " << r.greedy_t << ")"
                  << (r.exact ? "" : " [upper bound]") << "\n";
        std::cout << "  affine base size " << r.affine_base_size() << "\n";
        for (const auto& w : tuple) std::cout << "  " << witness_str(w) << "\n";
    }
    return kOk;
}

int cmd_verify(const Flags& f, const Resolved& res) {
    VerifyOptions o;
    o.max_n = f.max_n;
    o.budget = res.budget;
    auto print = [&](const CheckLine& l) {
        if (f.as_json) {
            std::cout << json{{"id", l.id}, {"status", l.status}, {"expected", l.expected}, {"got", l.got},
                              {"detail", l.detail}, {"seconds", l.seconds}}
                             .dump()
                      << "\n";
        } else {
            std::cout << (l.status == "pass" ? "PASS " : l.status == "fail" ? "FAIL " : "SKIP ") << l.id << ": expected "
                      << l.expected << ", got " << l.got;
            if (!l.detail.empty()) std::cout << " [" << l.detail << "]";
            std::cout << "\n";
        }
        std::cout.flush();
    };
    auto r = verify_tables(o, print);
    if (!f.as_json) std::cout << "summary: " << r.pass << " pass, " << r.fail << " fail, " << r.skipped << " skipped\n";
    else std::cout << json{{"summary", {{"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped}}}}.dump() << "\n";
    return r.fail ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular orbits of symmetric and alternating groups on modular irreducibles"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--n", f.n, "degree n");
    app.add_option("--p", f.p, "prime p");
    app.add_option("--mu", f.mu, "partition such as 3,2 (repeatable)");
    app.add_option("--module", f.module, "dmu | fdpm | ext:PATH");
    app.add_option("--group", f.group, "sn | an | ext (bounds: sn | an | 2sn | 2an)");
    app.add_option("--scalars", f.scalars, "scalar subgroup order(s) a dividing p-1")->delimiter(',');
    app.add_flag("--sign", f.sign, "tensor with the sign module");
    app.add_option("--seed", f.seed, "random seed");
    app.add_option("--cache", f.cache, "JSON-lines verdict cache");
    app.add_flag("--huge", f.huge, "allow the 2^32 coverage bitmap");
    app.add_option("--jobs", f.jobs, "parallel jobs");
    app.add_flag("--json", f.as_json, "machine-readable output");
    app.add_option("--max-n", f.max_n, "verify-tables: largest n");
    app.add_option("--shape", f.shape, "graph-cert: two-row | hook");
    app.add_option("--samples", f.samples, "graph-cert: sampled proof obligations");
    app.add_option("--t-max", f.t_max, "base-size: largest tuple length searched");
    app.add_option("--config", f.config, "config file (else $REGORB_CONFIG, else ./regorb.json)");
    app.add_option("--threads", f.threads, "coverage worker threads");
    app.add_option("--max-vspace", f.max_vspace, "largest |V| for bitmap coverage");
    app.add_option("--max-orbit", f.max_orbit, "largest orbit enumerated");

    auto* dims = app.add_subcommand("dims", "dimensions of D^mu for p-regular mu");
    auto* verd = app.add_subcommand("verdict", "regular orbit verdict for a module");
    auto* bnds = app.add_subcommand("bounds", "fixed-point bounds with exact floors");
    auto* gc = app.add_subcommand("graph-cert", "certificate for the explicit regular vector");
    auto* bs = app.add_subcommand("base-size", "minimal trivializing tuple and affine base size");
    auto* vt = app.add_subcommand("verify-tables", "replay the embedded exception tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        if (*dims) return cmd_dims(f);
        if (*bnds) return cmd_bounds(f);
        Resolved res = resolve(f, app);
        if (*verd) return cmd_verdict(f, res);
        if (*gc) return cmd_graph_cert(f, res);
        if (*bs) return cmd_base_size(f, res);
        if (*vt) return cmd_verify(f, res);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Undecided& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
