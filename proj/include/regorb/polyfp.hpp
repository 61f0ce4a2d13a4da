#pragma once

#include <cstdint>
#include <vector>

#include "regorb/gfplin.hpp"

namespace regorb {

// Polynomial over F_p, coefficients from the constant term up; no trailing zeros.
using Poly = std::vector<std::uint32_t>;

int degree(const Poly& f);
Poly poly_trim(Poly f);
Poly poly_mul(const Poly& a, const Poly& b, const Field& F);
Poly poly_sub(const Poly& a, const Poly& b, const Field& F);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, const Field& F);
Poly poly_mod(const Poly& a, const Poly& b, const Field& F);
Poly poly_monic(const Poly& a, const Field& F);
Poly poly_gcd(Poly a, Poly b, const Field& F);
// x^e mod m.
Poly poly_xpow_mod(std::uint64_t e, const Poly& m, const Field& F);
// g^p mod m.
Poly poly_pow_mod(const Poly& g, std::uint64_t e, const Poly& m, const Field& F);

Poly charpoly(const FpMatrix& a);
FpMatrix poly_eval(const Poly& f, const FpMatrix& a);

// Distinct-degree split of f: entry k-1 is the product of the distinct monic
// irreducible factors of degree k (1 if none), up to max_degree.
std::vector<Poly> distinct_degree_parts(const Poly& f, int max_degree, const Field& F);

}  // namespace regorb
