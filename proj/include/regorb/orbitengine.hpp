#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regorb/gfplin.hpp"
#include "regorb/permsym.hpp"
#include "regorb/representation.hpp"

namespace regorb {

struct Budget {
    std::uint64_t max_vspace = 1ULL << 28;
    std::uint64_t max_orbit = 200000000;
    std::uint64_t max_closure = 500000;  // explicit group enumeration for external groups
    unsigned threads = 1;
    std::uint64_t seed = 1;
    int witness_samples = 64;
    bool huge = false;  // lifts max_vspace to 2^32
};

// A class of prime-order elements h*lambda of G = <H, A>.
struct PrimeClass {
    FpMatrix matrix;         // lambda * rho(h)
    BigInt class_size;       // |(h lambda)^G|
    std::uint64_t order = 1;
    std::uint32_t lambda = 1;
    std::string tag;         // cycle type or element index
    bool conjugates_listed = false;  // class_size already counts separate entries
    int transposition = 0;   // 1 if h is a transposition
};

std::vector<PrimeClass> prime_order_classes(const Representation& v, const Budget& b = {});

FpMatrix fixed_space(const FpMatrix& g);
std::size_t commutator_dim(const FpMatrix& g);

// Sum of |g^G| p^dim C_V(g) over prime-order g.
BigInt strong_bound_sum(const Representation& v, const std::vector<PrimeClass>& classes);

struct CoverageResult {
    bool full = false;
    std::uint64_t covered = 0;  // nonzero vectors fixed by some prime-order element
    std::optional<FpVector> least_uncovered;
};
CoverageResult coverage_certify_no_regular(const Representation& v, const Budget& b = {});

BigInt orbit_size(const Representation& v, const FpVector& w, const Budget& b = {});
BigInt stabilizer_order(const Representation& v, const FpVector& w, const Budget& b = {});
// Sizes of all orbits, for |V| within max_vspace.
std::vector<std::uint64_t> orbit_partition(const Representation& v, const Budget& b = {});

enum class Outcome { Regular, NoRegular, Undecided };
std::string outcome_name(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::Undecided;
    std::string certificate;  // pigeonhole | coverage | strong-bound | search | census
    std::optional<FpVector> witness;
    BigInt witness_orbit = 0;  // 0 when not measured
    bool witness_verified = false;
    BigInt group_order = 0;
    BigInt space_size = 0;
    BigInt strong_bound = 0;
    std::uint64_t covered = 0;
    std::uint64_t seed = 0;
    double seconds = 0;
    std::string note;
};

Verdict verdict(const Representation& v, const Budget& b = {});

}  // namespace regorb
