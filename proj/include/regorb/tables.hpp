#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regorb/orbitengine.hpp"
#include "regorb/spechtmod.hpp"

namespace regorb {

// One row of the S_n/A_n exception list. Cells (H, a) with a in no_regular[H]
// have no regular orbit; every other a | p-1 is expected Regular.
struct ExpectedRow {
    int n = 0;
    std::uint32_t p = 2;
    Partition mu;
    std::optional<Partition> assoc;
    std::map<GroupKind, std::size_t> d;
    std::map<GroupKind, std::vector<std::uint32_t>> no_regular;
    std::string mode;  // pigeonhole | coverage | huge
};

struct CoverRow {
    int n = 0;
    std::uint32_t p = 2;
    std::string group;
    std::size_t d = 0;
    std::string mode;  // builtin | external
    std::string builtin;
    std::vector<std::uint32_t> scalars;
};

struct ExpectedTables {
    int version = 0;
    std::vector<ExpectedRow> rows;
    std::vector<CoverRow> covers;
};

const ExpectedTables& expected_tables();
ExpectedTables parse_expected_tables(const std::string& json_text);

// True if (n, p, mu, H, a) is listed without a regular orbit.
bool listed_no_regular(int n, std::uint32_t p, const Partition& mu, GroupKind h, std::uint32_t a);
bool listed_module(int n, std::uint32_t p, const Partition& mu, GroupKind h);

struct DimRow {
    Partition mu;
    std::size_t dim = 0;
    int rn = 0;
    Partition assoc;  // equals mu for p = 2
    bool skipped = false;  // tabloid budget
};
std::vector<DimRow> dims_table(int n, std::uint32_t p, const SpechtOptions& opt = {});

// The module of a table cell: D^mu, or an irreducible A_n constituent of it.
Representation table_module(const Partition& mu, std::uint32_t p, GroupKind h);

struct CheckLine {
    std::string id;
    std::string status;  // pass | fail | skipped
    std::string expected, got, detail;
    double seconds = 0;
};

struct VerifyOptions {
    int max_n = 6;
    Budget budget;
    int complement_max_n = 6;  // full complement sweep up to this n
    bool fdpm = true;
};

struct VerifyReport {
    std::vector<CheckLine> lines;
    std::size_t pass = 0, fail = 0, skipped = 0;
};

VerifyReport verify_tables(const VerifyOptions& opt, const std::function<void(const CheckLine&)>& progress = {});

// Non-listed faithful non-fdpm modules of S_n and A_n with dim <= max_dim (a = 1),
// each with its verdict. One entry per (mu, H); conjugate A_n pieces count once.
struct ComplementEntry {
    Partition mu;
    GroupKind h = GroupKind::Sn;
    std::size_t dim = 0;
    Verdict verdict;
    BigInt stabilizer = 0;  // of the witness, 0 when no witness
};
std::vector<ComplementEntry> complement_modules(int n, std::uint32_t p, std::size_t max_dim, const Budget& b);

}  // namespace regorb
