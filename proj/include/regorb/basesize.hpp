#pragma once

#include <cstdint>
#include <vector>

#include "regorb/gfplin.hpp"
#include "regorb/orbitengine.hpp"
#include "regorb/representation.hpp"

namespace regorb {

struct BaseSizeResult {
    int t = 0;                    // least number of vectors with trivial joint stabilizer
    std::vector<FpVector> tuple;  // a witness tuple of length t
    int greedy_t = 0;             // upper bound from greedy descent
    bool exact = false;           // lower levels exhausted
    std::uint64_t group_elements = 0;
    int affine_base_size() const { return t + 1; }
};

// Enumerates G as matrices (within b.max_closure) and searches orbit
// representatives level by level; throws BudgetExceeded beyond t_max.
BaseSizeResult min_trivializing_tuple(const Representation& v, int t_max, const Budget& b = {});

}  // namespace regorb
