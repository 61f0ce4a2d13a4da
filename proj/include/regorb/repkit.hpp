#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regorb/gfplin.hpp"
#include "regorb/representation.hpp"

namespace regorb {

struct SplitReport {
    bool irreducible = false;
    FpMatrix invariant_subspace;  // canonical basis, set when the module splits
    std::uint64_t seed = 0;
    int attempts = 0;
};

struct MeatAxeOptions {
    std::uint64_t seed = 0x5eed0f7e6a7a1e5dULL;
    int max_attempts = 200;
    // Largest kernel (counted in projective points) scanned exhaustively for Norton's test.
    std::uint64_t max_points = 4096;
};

Representation tensor_sign(const Representation& v);
Representation restrict_to_an(const Representation& v);
// Action on an invariant subspace given by a canonical (reduced echelon) basis.
Representation restrict_to_subspace(const Representation& v, const FpMatrix& basis);
Representation direct_sum(const Representation& a, const Representation& b);
// Same module in the basis given by the rows of an invertible matrix.
Representation change_basis(const Representation& v, const FpMatrix& basis);

// Closure of a vector under the generators; canonical basis.
FpMatrix spin(const std::vector<FpMatrix>& gens, const FpVector& v);
bool is_invariant(const std::vector<FpMatrix>& gens, const FpMatrix& basis);

// Throws Undecided when neither outcome is certified within the budget.
SplitReport split_or_irreducible(const Representation& v, const MeatAxeOptions& opt = {});
// Repeated splitting down to an irreducible submodule.
Representation irreducible_constituent(const Representation& v, const MeatAxeOptions& opt = {});

std::size_t endo_field_degree(const Representation& v, std::uint64_t seed = 1);

Representation scalar_extension(const Representation& v, std::uint32_t a);

void save_rep(const Representation& v, const std::string& path);
std::string format_rep(const Representation& v);
Representation load_rep(const std::string& path);
Representation parse_rep(const std::string& text);
Representation builtin_rep(const std::string& name);  // "SL2(5)"

enum class CoverVariant { Plus, Minus };
bool validate_cover_relations(const std::vector<FpMatrix>& gens, const FpMatrix& z, CoverVariant variant, int n);
bool validate_cover_relations(const Representation& v, CoverVariant variant, int n);
bool faithfulness_check(const Representation& v);

// All matrices of the group generated by v.generators; throws BudgetExceeded past max_elements.
std::vector<FpMatrix> enumerate_group(const Representation& v, std::size_t max_elements);
BigInt closure_order(const Representation& v, std::size_t max_elements);

}  // namespace regorb
