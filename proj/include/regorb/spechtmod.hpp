#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "regorb/gfplin.hpp"
#include "regorb/permsym.hpp"
#include "regorb/representation.hpp"

namespace regorb {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);
    static Partition parse(const std::string& s);  // "3,2" or "(3,2)"

    int n() const;
    int largest() const { return parts.empty() ? 0 : parts.front(); }
    std::string str() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

bool p_regular(const Partition& mu, std::uint32_t p);
std::vector<Partition> partitions_of(int n);
std::vector<Partition> p_regular_partitions(int n, std::uint32_t p);

using Tableau = std::vector<std::vector<int>>;  // rows of entries 0..n-1

BigInt hook_length_count(const Partition& mu);
std::vector<Tableau> standard_tableaux(const Partition& mu);
// Hook formula and enumeration; disagreement throws std::logic_error.
BigInt standard_tableaux_count(const Partition& mu);

BigInt tabloid_count(const Partition& mu);

// Tabloids of shape mu, indexed lexicographically on sorted rows.
class TabloidIndex {
public:
    explicit TabloidIndex(const Partition& mu);
    std::size_t size() const { return labels_.size(); }
    // Row of each point.
    const std::vector<std::uint8_t>& label(std::size_t i) const { return labels_[i]; }
    std::size_t index_of(const std::vector<std::uint8_t>& label) const;
    // Index of the tabloid {t}g.
    std::size_t act(std::size_t i, const Permutation& g) const;
    const Partition& shape() const { return mu_; }

private:
    Partition mu_;
    std::vector<std::vector<std::uint8_t>> labels_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

struct SpechtBasis {
    std::vector<Tableau> standard_tableaux;
    FpMatrix polytabloid_matrix;  // rows = standard polytabloids in tabloid coordinates
};

struct GramData {
    FpMatrix gram;
    FpMatrix radical_basis;
};

struct SpechtOptions {
    std::size_t tabloid_budget = 100000;
};

SpechtBasis specht_basis(const Partition& mu, std::uint32_t p, const TabloidIndex& idx);
GramData gram_data(const SpechtBasis& sb);

Representation build_dmu(const Partition& mu, std::uint32_t p, const SpechtOptions& opt = {});
// Linear map M^mu -> D^mu (tabloid coordinates to the basis of build_dmu); its
// restriction to S^mu is the quotient by the radical.
FpMatrix dmu_projection(const Partition& mu, std::uint32_t p, const SpechtOptions& opt = {});
Representation build_fdpm(int n, std::uint32_t p);

// Coordinates of a zero-sum tuple in the fdpm basis, and a lift back.
FpVector fdpm_coordinates(const std::vector<std::uint32_t>& tuple, std::uint32_t p);
std::vector<std::uint32_t> fdpm_lift(const FpVector& coords, int n, std::uint32_t p);

// Traces of rho on every class representative of the group.
std::vector<std::uint32_t> class_traces(const Representation& v);

Partition associate_partition(const Partition& mu, std::uint32_t p, const SpechtOptions& opt = {});
int rn_class(const Partition& mu, std::uint32_t p, const SpechtOptions& opt = {});

}  // namespace regorb
