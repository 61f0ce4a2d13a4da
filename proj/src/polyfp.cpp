#include "regorb/polyfp.hpp"

#include <stdexcept>

namespace regorb {

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b, const Field& F) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, const Field& F) {
    Poly bb = poly_trim(b);
    if (bb.empty()) throw std::domain_error("polynomial division by zero");
    Poly r = poly_trim(a);
    if (r.size() < bb.size()) return {{}, r};
    Poly q(r.size() - bb.size() + 1, 0);
    std::uint32_t li = F.inv(bb.back());
    for (int i = degree(r) - degree(bb); i >= 0; --i) {
        std::uint32_t c = F.mul(r[i + bb.size() - 1], li);
        q[i] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) r[i + j] = F.sub(r[i + j], F.mul(c, bb[j]));
    }
    r.resize(bb.size() - 1);
    return {poly_trim(q), poly_trim(r)};
}

Poly poly_mod(const Poly& a, const Poly& b, const Field& F) { return poly_divmod(a, b, F).second; }

Poly poly_monic(const Poly& a, const Field& F) {
    Poly r = poly_trim(a);
    if (r.empty()) return r;
    std::uint32_t li = F.inv(r.back());
    for (auto& c : r) c = F.mul(c, li);
    return r;
}

Poly poly_gcd(Poly a, Poly b, const Field& F) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, F);
}

Poly poly_pow_mod(const Poly& g, std::uint64_t e, const Poly& m, const Field& F) {
    Poly r = poly_mod({1}, m, F), b = poly_mod(g, m, F);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, F), m, F);
        e >>= 1;
        if (e) b = poly_mod(poly_mul(b, b, F), m, F);
    }
    return r;
}

Poly poly_xpow_mod(std::uint64_t e, const Poly& m, const Field& F) { return poly_pow_mod({0, 1}, e, m, F); }

// Reduce to upper Hessenberg form by similarity, then expand the determinant recursively.
Poly charpoly(const FpMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly needs a square matrix");
    Field F(a.p());
    const std::size_t n = a.rows();
    FpMatrix h = a;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        std::uint32_t piv_inv = F.inv(h(m, m - 1));
        for (std::size_t j = m + 1; j < n; ++j) {
            std::uint32_t u = F.mul(h(j, m - 1), piv_inv);
            if (!u) continue;
            for (std::size_t k = 0; k < n; ++k) h(j, k) = F.sub(h(j, k), F.mul(u, h(m, k)));
            for (std::size_t k = 0; k < n; ++k) h(k, m) = F.add(h(k, m), F.mul(u, h(k, j)));
        }
    }
    std::vector<Poly> pm(n + 1);
    pm[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        pm[m] = poly_mul({F.neg(h(m - 1, m - 1)), 1}, pm[m - 1], F);
        std::uint32_t t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = F.mul(t, h(m - i, m - i - 1));
            std::uint32_t c = F.mul(t, h(m - i - 1, m - 1));
            if (!c) continue;
            Poly s = pm[m - i - 1];
            for (auto& x : s) x = F.mul(x, c);
            pm[m] = poly_sub(pm[m], s, F);
        }
    }
    return pm[n];
}

FpMatrix poly_eval(const Poly& f, const FpMatrix& a) {
    const std::size_t d = a.rows();
    FpMatrix r(d, d, a.p());
    for (int i = degree(f); i >= 0; --i) r = r * a + FpMatrix::scalar(d, a.p(), f[i]);
    return r;
}

std::vector<Poly> distinct_degree_parts(const Poly& f0, int max_degree, const Field& F) {
    std::vector<Poly> out;
    Poly f = poly_monic(f0, F);
    const Poly x{0, 1};
    Poly xq = x;
    for (int k = 1; k <= max_degree; ++k) {
        if (degree(f) < 1) {
            out.push_back({1});
            continue;
        }
        xq = poly_pow_mod(xq, F.p(), f, F);
        Poly g = poly_gcd(poly_sub(xq, x, F), f, F);
        out.push_back(g);
        // Strip every copy of the degree-k factors so later gcds see only higher degrees.
        while (degree(g) > 0) {
            f = poly_divmod(f, g, F).first;
            g = poly_gcd(f, g, F);
        }
        xq = poly_mod(xq, f.empty() ? Poly{1} : f, F);
    }
    return out;
}

}  // namespace regorb
