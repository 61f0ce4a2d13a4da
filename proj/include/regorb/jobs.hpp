#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regorb/orbitengine.hpp"
#include "regorb/representation.hpp"
#include "regorb/spechtmod.hpp"

namespace regorb {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ModuleSource { Dmu, Fdpm, External };
enum class GroupChoice { Sn, An, External };

struct JobSpec {
    int n = 0;
    std::uint32_t p = 2;
    ModuleSource source = ModuleSource::Dmu;
    Partition mu;      // Dmu only
    std::string path;  // External only
    GroupChoice group = GroupChoice::Sn;
    bool sign = false;
    std::uint32_t a = 1;
    Budget budget;
};

// Throws std::invalid_argument on inconsistent parameters.
void validate(const JobSpec& j);

// Budget threads are left out: verdicts do not depend on them.
nlohmann::json job_json(const JobSpec& j);
JobSpec job_from_json(const nlohmann::json& j);
std::string job_hash(const JobSpec& j);

// D^mu or the fully deleted module, optionally twisted by sgn, restricted to an
// irreducible A_n constituent, extended by scalars of order a.
Representation build_module(const JobSpec& j);

nlohmann::json verdict_json(const Verdict& v);

// Census-based verdict for the fully deleted module; exact at any size the
// multiset count allows.
Verdict fdpm_verdict(int n, std::uint32_t p, bool alternating, bool twisted, std::uint32_t a, const Budget& b);

// Append-only JSON-lines store keyed by job hash.
class VerdictCache {
public:
    explicit VerdictCache(std::string path);
    std::optional<std::string> lookup(const std::string& hash) const;
    void append(const std::string& hash, const std::string& line);
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::string, std::string> lines_;
    mutable std::mutex mu_;
};

struct JobResult {
    std::string line;  // serialized VerdictRecord
    nlohmann::json record;
    bool cached = false;
};

JobResult run_job(const JobSpec& j, VerdictCache* cache);
// Independent jobs on `workers` threads; results keep input order.
std::vector<JobResult> run_jobs(const std::vector<JobSpec>& jobs, VerdictCache* cache, unsigned workers);

struct Config {
    std::uint64_t max_vspace = 1ULL << 28;
    std::uint64_t max_orbit = 200000000;
    std::uint64_t seed = 1;
    std::string cache_path;
    unsigned threads = 1;
    std::string source;  // file it came from, empty for defaults
};

// explicit_path, else $REGORB_CONFIG, else ./regorb.json when present.
Config load_config(const std::string& explicit_path = "");

}  // namespace regorb
