#include "regorb/jobs.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "regorb/errors.hpp"
#include "regorb/fdpm_census.hpp"
#include "regorb/repkit.hpp"

namespace regorb {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << x;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* source_name(ModuleSource s) {
    switch (s) {
        case ModuleSource::Dmu: return "dmu";
        case ModuleSource::Fdpm: return "fdpm";
        default: return "ext";
    }
}

const char* group_name(GroupChoice g) {
    switch (g) {
        case GroupChoice::Sn: return "sn";
        case GroupChoice::An: return "an";
        default: return "ext";
    }
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void validate(const JobSpec& j) {
    if (!is_prime(j.p)) throw std::invalid_argument("p must be prime");
    if (j.a == 0 || (j.p - 1) % j.a != 0) throw std::invalid_argument("scalar order a must divide p-1");
    if (j.source == ModuleSource::External) {
        if (j.path.empty()) throw std::invalid_argument("external module needs a path");
        return;
    }
    if (j.group == GroupChoice::External) throw std::invalid_argument("group ext needs an external module");
    if (j.n < 5) throw std::invalid_argument("n must be at least 5");
    if (j.source == ModuleSource::Dmu) {
        if (j.mu.n() != j.n) throw std::invalid_argument("partition " + j.mu.str() + " is not a partition of n");
        if (!p_regular(j.mu, j.p)) throw std::invalid_argument("partition " + j.mu.str() + " is not p-regular");
    }
}

nlohmann::json job_json(const JobSpec& j) {
    nlohmann::json o;
    o["n"] = j.n;
    o["p"] = j.p;
    o["module"] = source_name(j.source);
    if (j.source == ModuleSource::Dmu) o["mu"] = j.mu.str();
    if (j.source == ModuleSource::External) {
        o["path"] = j.path;
        o["content_hash"] = hex64(fnv1a(read_file(j.path)));
    }
    o["group"] = group_name(j.group);
    o["sign"] = j.sign;
    o["scalars"] = j.a;
    o["budget"] = {{"max_vspace", j.budget.max_vspace},
                   {"max_orbit", j.budget.max_orbit},
                   {"max_closure", j.budget.max_closure},
                   {"witness_samples", j.budget.witness_samples},
                   {"huge", j.budget.huge}};
    o["seed"] = j.budget.seed;
    return o;
}

JobSpec job_from_json(const nlohmann::json& o) {
    JobSpec j;
    j.n = o.at("n").get<int>();
    j.p = o.at("p").get<std::uint32_t>();
    const std::string m = o.at("module").get<std::string>();
    j.source = m == "dmu" ? ModuleSource::Dmu : m == "fdpm" ? ModuleSource::Fdpm : ModuleSource::External;
    if (o.contains("mu")) j.mu = Partition::parse(o["mu"].get<std::string>());
    if (o.contains("path")) j.path = o["path"].get<std::string>();
    const std::string g = o.at("group").get<std::string>();
    j.group = g == "sn" ? GroupChoice::Sn : g == "an" ? GroupChoice::An : GroupChoice::External;
    j.sign = o.at("sign").get<bool>();
    j.a = o.at("scalars").get<std::uint32_t>();
    const auto& b = o.at("budget");
    j.budget.max_vspace = b.at("max_vspace").get<std::uint64_t>();
    j.budget.max_orbit = b.at("max_orbit").get<std::uint64_t>();
    j.budget.max_closure = b.at("max_closure").get<std::uint64_t>();
    j.budget.witness_samples = b.at("witness_samples").get<int>();
    j.budget.huge = b.at("huge").get<bool>();
    j.budget.seed = o.at("seed").get<std::uint64_t>();
    return j;
}

std::string job_hash(const JobSpec& j) { return hex64(fnv1a(job_json(j).dump())); }

Representation build_module(const JobSpec& j) {
    validate(j);
    Representation v;
    switch (j.source) {
        case ModuleSource::Dmu: v = build_dmu(j.mu, j.p); break;
        case ModuleSource::Fdpm: v = build_fdpm(j.n, j.p); break;
        case ModuleSource::External: {
            v = load_rep(j.path);
            if (j.group == GroupChoice::Sn && v.group.kind != GroupKind::Sn)
                throw std::invalid_argument("module file does not describe an S_n module");
            if (j.group == GroupChoice::An && v.group.kind == GroupKind::External)
                throw std::invalid_argument("module file does not describe an S_n or A_n module");
            break;
        }
    }
    if (j.sign) {
        if (v.group.kind != GroupKind::Sn) throw std::invalid_argument("sign twist needs an S_n module");
        v = tensor_sign(v);
    }
    if (j.group == GroupChoice::An && v.group.kind == GroupKind::Sn) {
        v = restrict_to_an(v);
        v = irreducible_constituent(v);
    }
    if (j.a > 1) v = scalar_extension(v, j.a);
    return v;
}

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json o;
    o["outcome"] = outcome_name(v.outcome);
    o["certificate"] = v.certificate;
    if (v.witness) o["witness"] = *v.witness;
    else o["witness"] = nullptr;
    o["witness_orbit"] = v.witness_orbit.str();
    o["witness_verified"] = v.witness_verified;
    o["group_order"] = v.group_order.str();
    o["space_size"] = v.space_size.str();
    o["strong_bound"] = v.strong_bound.str();
    o["covered"] = v.covered;
    o["seed"] = v.seed;
    o["seconds"] = v.seconds;
    if (!v.note.empty()) o["note"] = v.note;
    return o;
}

Verdict fdpm_verdict(int n, std::uint32_t p, bool alternating, bool twisted, std::uint32_t a, const Budget& b) {
    const auto t0 = std::chrono::steady_clock::now();
    FdpmGroup g{n, p, alternating, twisted, a};
    Verdict r;
    r.seed = b.seed;
    r.group_order = g.order();
    const int d = (n % p == 0) ? n - 2 : n - 1;
    r.space_size = boost::multiprecision::pow(BigInt(p), d);
    r.certificate = "census";
    FdpmCensus c = fdpm_census(g);
    if (!c.regular_exists) {
        r.outcome = Outcome::NoRegular;
        r.note = "every nonzero vector has stabilizer order >= " + c.min_stabilizer.str();
    } else {
        r.outcome = Outcome::Regular;
        const auto& t = *c.first_regular;
        r.witness = fdpm_coordinates(t, p);
        if (r.group_order <= b.max_orbit) {
            r.witness_orbit = fdpm_orbit_size(g, t, b.max_orbit);
            r.witness_verified = r.witness_orbit == r.group_order;
        } else {
            BigInt st = fdpm_stabilizer_order(g, t);
            r.witness_orbit = r.group_order / st;
            r.witness_verified = st == 1;
            r.note = "orbit size from the exact stabilizer count; |G| exceeds max_orbit";
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto o = nlohmann::json::parse(line);
            lines_[o.at("job_hash").get<std::string>()] = line;
        } catch (const std::exception&) {
            // A torn last line from an interrupted writer; ignore it.
        }
    }
}

std::optional<std::string> VerdictCache::lookup(const std::string& hash) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = lines_.find(hash);
    if (it == lines_.end()) return std::nullopt;
    return it->second;
}

void VerdictCache::append(const std::string& hash, const std::string& line) {
    std::lock_guard<std::mutex> lk(mu_);
    if (lines_.count(hash)) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to cache " + path_);
    out << line << '\n';
    out.flush();
    lines_[hash] = line;
}

JobResult run_job(const JobSpec& j, VerdictCache* cache) {
    validate(j);
    const std::string h = job_hash(j);
    JobResult res;
    if (cache) {
        if (auto hit = cache->lookup(h)) {
            res.line = *hit;
            res.record = nlohmann::json::parse(*hit);
            res.cached = true;
            return res;
        }
    }
    Verdict v;
    if (j.source == ModuleSource::Fdpm && j.n <= 16) {
        v = fdpm_verdict(j.n, j.p, j.group == GroupChoice::An, j.sign && j.group == GroupChoice::Sn, j.a, j.budget);
    } else {
        v = verdict(build_module(j), j.budget);
    }
    nlohmann::json rec;
    rec["job"] = job_json(j);
    rec["job_hash"] = h;
    rec["verdict"] = verdict_json(v);
    rec["tool_version"] = kToolVersion;
    rec["basis"] = "row vectors, v -> v*rho(g); witness in the basis of the constructed module";
    rec["timestamp"] = utc_now();
    res.record = rec;
    res.line = rec.dump();
    if (cache) cache->append(h, res.line);
    return res;
}

std::vector<JobResult> run_jobs(const std::vector<JobSpec>& jobs, VerdictCache* cache, unsigned workers) {
    std::vector<JobResult> out(jobs.size());
    std::vector<std::exception_ptr> errs(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                out[i] = run_job(jobs[i], cache);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

Config load_config(const std::string& explicit_path) {
    Config c;
    std::string path = explicit_path;
    if (path.empty())
        if (const char* env = std::getenv("REGORB_CONFIG")) path = env;
    if (path.empty() && std::filesystem::exists("regorb.json")) path = "regorb.json";
    if (path.empty()) return c;
    nlohmann::json o;
    try {
        o = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config ") + path + ": " + e.what(), 0);
    }
    if (!o.is_object()) throw ParseError("config " + path + " is not a JSON object", 0);
    for (auto it = o.begin(); it != o.end(); ++it) {
        const std::string& k = it.key();
        if (k == "max_vspace") c.max_vspace = it->get<std::uint64_t>();
        else if (k == "max_orbit") c.max_orbit = it->get<std::uint64_t>();
        else if (k == "seed") c.seed = it->get<std::uint64_t>();
        else if (k == "cache_path") c.cache_path = it->get<std::string>();
        else if (k == "threads") c.threads = it->get<unsigned>();
        else throw ParseError("config " + path + ": unknown key " + k, 0);
    }
    c.source = path;
    return c;
}

}  // namespace regorb
