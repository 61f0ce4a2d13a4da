#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regorb/gfplin.hpp"
#include "regorb/permsym.hpp"

namespace regorb {

// Matrix generators acting on row vectors: v -> v * rho(g).
struct Representation {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    // Generators of H, followed by lambda*I when group.scalar_order > 1.
    std::vector<FpMatrix> generators;
    GroupDescriptor group;
    std::string label;
    // Parity of each H generator; empty when no parity map is known.
    std::vector<bool> odd;

    std::size_t h_generator_count() const {
        return group.scalar_order > 1 ? generators.size() - 1 : generators.size();
    }
    // Generator of the scalar subgroup A (1 when trivial).
    std::uint32_t scalar_lambda() const;
    BigInt order() const { return group_order(group, p); }
    BigInt space_size() const;
};

FpMatrix evaluate_word(const Representation& v, const std::vector<int>& word);
// rho(g) for g in S_n (Coxeter generators) or A_n (s_i s_{i+1} generators).
FpMatrix evaluate_permutation(const Representation& v, const Permutation& g);

}  // namespace regorb
