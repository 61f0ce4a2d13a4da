#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "regorb/permsym.hpp"

namespace regorb {

using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

// A bound of the form max over terms of (num/den) * log_q(arg), kept exact so
// that floors come from integer comparisons q^(k den) <= arg^num.
struct LogBound {
    struct Term {
        BigInt num, den;  // multiplier num/den
        BigInt arg;
    };
    std::uint64_t q = 2;
    std::vector<Term> terms;
    Real value() const;
    BigInt floor() const;
};

Rational f(int n);
// Piecewise lower-bound function; throws std::domain_error below the valid range.
Rational f_p(int n, std::uint32_t p);

LogBound eq1(std::uint64_t q, int n, const BigInt& order);
LogBound eq2(std::uint64_t q, int n, const BigInt& z);
LogBound eq3(std::uint64_t q, int n, const BigInt& z);
// eq2 with |Z(G)| replaced by q-1.
LogBound g(std::uint64_t q, int n);
LogBound general_bound(std::uint64_t q, const BigInt& order, const BigInt& r_max);
// n log_p(n!(p-1)/2) and (n/2) log_p(n!(p-1)/2).
LogBound h_assoc(std::uint64_t p, int n);
LogBound h_spin(std::uint64_t p, int n);

enum class Cover { TwoSn, TwoAn };
int kappa(std::uint64_t p, int n);
BigInt delta(Cover c, int n, std::uint64_t p);
int r_upper(bool is_transposition, int n);

// Exact integer floor of log_q(x) for rational x >= 1.
BigInt floor_log(std::uint64_t q, const BigInt& x);

struct BoundReport {
    int n = 0;
    std::uint64_t p = 2;
    std::string group;
    BigInt order = 0, center = 1;
    std::optional<LogBound> eq1, eq2, eq2_q, eq3, h_assoc, h_spin;
    std::optional<Rational> f, f_p;
    std::optional<BigInt> delta;
    int kappa = 0;
};
// group: "sn", "an", "2sn", "2an".
BoundReport bound_report(int n, std::uint64_t p, const std::string& group);

}  // namespace regorb
