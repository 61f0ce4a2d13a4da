#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regorb/permsym.hpp"

namespace regorb {

// G = H x A acting on the fully deleted module through zero-sum tuples in F_p^n
// (modulo the all-ones line when p | n). H is S_n or A_n; `twisted` tensors with sgn.
struct FdpmGroup {
    int n = 5;
    std::uint32_t p = 2;
    bool alternating = false;
    bool twisted = false;
    std::uint32_t a = 1;  // |A|, dividing p-1
    BigInt order() const;
};

// Exact |Stab_G(tuple)| by counting (sigma, lambda) with lambda sgn(sigma) a.sigma = a + c.
BigInt fdpm_stabilizer_order(const FdpmGroup& g, const std::vector<std::uint32_t>& tuple);

struct FdpmCensus {
    std::uint64_t multisets = 0;  // nonzero vectors up to S_n, one tuple each
    bool regular_exists = false;
    std::optional<std::vector<std::uint32_t>> first_regular;  // sorted tuple
    BigInt min_stabilizer = 0;
};
// Every nonzero vector lies in the S_n-orbit of a sorted zero-sum tuple, and S_n
// normalizes G, so stabilizer orders of sorted tuples cover all vectors.
FdpmCensus fdpm_census(const FdpmGroup& g);

// Orbit of a tuple by breadth-first search on tuples; throws BudgetExceeded past max_orbit.
std::uint64_t fdpm_orbit_size(const FdpmGroup& g, const std::vector<std::uint32_t>& tuple, std::uint64_t max_orbit);

}  // namespace regorb
