#include "regorb/boundlib.hpp"

#include <map>
#include <stdexcept>

namespace regorb {

namespace {

BigInt ipow(const BigInt& b, const BigInt& e) {
    BigInt r = 1;
    for (BigInt i = 0; i < e; ++i) r *= b;
    return r;
}

// Largest k with q^(k*den) <= arg^num.
BigInt term_floor(std::uint64_t q, const LogBound::Term& t) {
    if (t.arg < 1) throw std::domain_error("logarithm of a non-positive number");
    const BigInt rhs = ipow(t.arg, t.num);
    const BigInt step = ipow(BigInt(q), t.den);
    BigInt k = 0, acc = step;
    while (acc <= rhs) {
        acc *= step;
        ++k;
    }
    return k;
}

LogBound single(std::uint64_t q, BigInt num, BigInt den, BigInt arg) {
    if (q < 2) throw std::domain_error("log base must be at least 2");
    LogBound b;
    b.q = q;
    b.terms.push_back({std::move(num), std::move(den), std::move(arg)});
    return b;
}

}  // namespace

Real LogBound::value() const {
    Real best = 0;
    bool first = true;
    for (const auto& t : terms) {
        Real v = Real(t.num) / Real(t.den) * log(Real(t.arg)) / log(Real(q));
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

BigInt LogBound::floor() const {
    BigInt best = 0;
    for (const auto& t : terms) best = std::max(best, term_floor(q, t));
    return best;
}

BigInt floor_log(std::uint64_t q, const BigInt& x) { return term_floor(q, {1, 1, x}); }

Rational f(int n) {
    BigInt m = n;
    return Rational(m * m * m - 9 * m * m + 14 * m - 6, 6);
}

Rational f_p(int n, std::uint32_t p) {
    if (p == 2) {
        if (n < 15) throw std::domain_error("f_2(n) needs n >= 15");
        if (n >= 23) return f(n);
        static const std::map<int, int> t{{15, 127}, {16, 127}, {17, 253}, {18, 253},
                                          {19, 505}, {20, 505}, {21, 930}, {22, 930}};
        return t.at(n);
    }
    if (n < 11) throw std::domain_error("f_p(n) for odd p needs n >= 11");
    if (n >= 16) return f(n);
    static const std::map<int, int> t{{11, 54}, {12, 88}, {13, 107}, {14, 175}, {15, 213}};
    return t.at(n);
}

LogBound eq1(std::uint64_t q, int n, const BigInt& order) { return single(q, n - 1, 1, order); }

LogBound eq2(std::uint64_t q, int n, const BigInt& z) {
    if (n < 7) throw std::domain_error("eq2 needs n >= 7");
    LogBound b = single(q, n - 1, 1, BigInt(n) * (n - 1) * z);
    b.terms.push_back({n, 2, 2 * factorial(n) * z});
    return b;
}

LogBound eq3(std::uint64_t q, int n, const BigInt& z) {
    if (n < 7 || z > n) throw std::domain_error("eq3 needs n >= 7 and |Z| <= n");
    return single(q, n, 2, 2 * factorial(n) * z);
}

LogBound g(std::uint64_t q, int n) { return eq2(q, n, BigInt(q - 1)); }

LogBound general_bound(std::uint64_t q, const BigInt& order, const BigInt& r_max) {
    if (order < 2) throw std::domain_error("group order must be at least 2");
    return single(q, r_max, 1, order);
}

LogBound h_assoc(std::uint64_t p, int n) { return single(p, n, 1, factorial(n) * (p - 1) / 2); }

LogBound h_spin(std::uint64_t p, int n) { return single(p, n, 2, factorial(n) * (p - 1) / 2); }

int kappa(std::uint64_t p, int n) { return n % p == 0 ? 1 : 0; }

BigInt delta(Cover c, int n, std::uint64_t p) {
    if (n < 5) throw std::domain_error("delta needs n >= 5");
    const int top = (c == Cover::TwoSn ? n - 1 : n - 2) - kappa(p, n);
    return BigInt(1) << (top / 2);
}

int r_upper(bool is_transposition, int n) {
    if (n < 5) throw std::domain_error("r_upper needs n >= 5");
    return is_transposition || n < 7 ? n - 1 : n / 2;
}

BoundReport bound_report(int n, std::uint64_t p, const std::string& group) {
    BoundReport r;
    r.n = n;
    r.p = p;
    r.group = group;
    r.kappa = kappa(p, n);
    BigInt h = factorial(n);
    if (group == "sn") r.order = h, r.center = 1;
    else if (group == "an") r.order = h / 2, r.center = 1;
    else if (group == "2sn") r.order = 2 * h, r.center = 2;
    else if (group == "2an") r.order = h, r.center = 2;
    else throw std::invalid_argument("unknown group " + group);
    if (r.order >= 2) r.eq1 = eq1(p, n, r.order);
    if (n >= 7) {
        r.eq2 = eq2(p, n, r.center);
        r.eq2_q = g(p, n);
        if (r.center <= n) r.eq3 = eq3(p, n, r.center);
    }
    if (n >= 2 && p >= 2) {
        r.h_assoc = h_assoc(p, n);
        r.h_spin = h_spin(p, n);
    }
    r.f = f(n);
    try {
        r.f_p = f_p(n, static_cast<std::uint32_t>(p));
    } catch (const std::domain_error&) {
    }
    if (n >= 5 && (group == "2sn" || group == "2an")) r.delta = delta(group == "2sn" ? Cover::TwoSn : Cover::TwoAn, n, p);
    return r;
}

}  // namespace regorb
