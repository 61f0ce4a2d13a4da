#include "regorb/permsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "regorb/gfplin.hpp"

namespace regorb {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int x : img) {
        if (x < 0 || x >= static_cast<int>(img.size()) || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    Permutation g;
    g.img.resize(n);
    std::iota(g.img.begin(), g.img.end(), 0);
    return g;
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation g = identity(n);
    std::swap(g.img[i], g.img[j]);
    return g;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation g = identity(n);
    for (auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) g.img[c[k]] = c[(k + 1) % c.size()];
    return Permutation(g.img);
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (o.img.size() != img.size()) throw std::invalid_argument("degree mismatch");
    Permutation r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = o.img[img[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
    return r;
}

Permutation Permutation::conjugate(const Permutation& h) const { return h.inverse() * (*this) * h; }

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img.size(), false);
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(i); !seen[x]; x = img[x]) {
            seen[x] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool Permutation::is_even() const {
    std::size_t t = 0;
    for (auto& c : cycles()) t += c.size() - 1;
    return t % 2 == 0;
}

std::uint64_t Permutation::order() const {
    std::uint64_t o = 1;
    for (auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
    return o;
}

std::string Permutation::str() const {
    std::ostringstream os;
    bool any = false;
    for (auto& c : cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << "(";
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
        os << ")";
    }
    if (!any) os << "()";
    return os.str();
}

CycleType cycle_type(const Permutation& g) {
    CycleType t;
    for (auto& c : g.cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

static void partitions_rec(int n, int maxpart, CycleType& cur, std::vector<CycleType>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<CycleType> all_cycle_types(int n) {
    std::vector<CycleType> out;
    CycleType cur;
    partitions_rec(n, n, cur, out);
    return out;
}

BigInt class_size_sn(int n, const CycleType& t) {
    int s = 0;
    for (int k : t) {
        if (k < 1) throw std::invalid_argument("malformed cycle type");
        s += k;
    }
    if (s != n) throw std::invalid_argument("cycle type does not sum to n");
    std::vector<int> mult(n + 1, 0);
    for (int k : t) ++mult[k];
    BigInt denom = 1;
    for (int k = 1; k <= n; ++k) {
        for (int j = 0; j < mult[k]; ++j) denom *= k;
        denom *= factorial(mult[k]);
    }
    return factorial(n) / denom;
}

Permutation class_representative(int n, const CycleType& t) {
    std::vector<std::vector<int>> cyc;
    int next = 0;
    for (int k : t) {
        std::vector<int> c;
        for (int j = 0; j < k; ++j) c.push_back(next++);
        cyc.push_back(c);
    }
    if (next != n) throw std::invalid_argument("cycle type does not sum to n");
    return Permutation::from_cycles(n, cyc);
}

bool splits_in_an(const CycleType& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] % 2 == 0) return false;
        if (i > 0 && t[i] == t[i - 1]) return false;
    }
    return true;
}

static bool is_even_type(const CycleType& t) {
    int s = 0;
    for (int k : t) s += k - 1;
    return s % 2 == 0;
}

static std::uint64_t type_order(const CycleType& t) {
    std::uint64_t o = 1;
    for (int k : t) o = std::lcm(o, static_cast<std::uint64_t>(k));
    return o;
}

static std::vector<ClassRep> class_reps(int n, GroupKind group, bool prime_only) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (group == GroupKind::External) throw std::invalid_argument("class reps need S_n or A_n");
    std::vector<ClassRep> out;
    for (auto& t : all_cycle_types(n)) {
        std::uint64_t o = type_order(t);
        if (prime_only && !is_prime(o)) continue;
        if (group == GroupKind::An && !is_even_type(t)) continue;
        Permutation rep = class_representative(n, t);
        BigInt sz = class_size_sn(n, t);
        if (group == GroupKind::An && n > 1 && splits_in_an(t) && sz > 1) {
            out.push_back({rep, sz / 2, o});
            out.push_back({rep.conjugate(Permutation::transposition(n, 0, 1)), sz / 2, o});
        } else {
            out.push_back({rep, sz, o});
        }
    }
    return out;
}

std::vector<ClassRep> prime_order_class_reps(int n, GroupKind group) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    return class_reps(n, group, true);
}

std::vector<ClassRep> all_class_reps(int n, GroupKind group) { return class_reps(n, group, false); }

std::vector<Permutation> coxeter_generators(int n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::vector<Permutation> g;
    for (int i = 0; i + 1 < n; ++i) g.push_back(Permutation::transposition(n, i, i + 1));
    return g;
}

std::vector<Permutation> an_generators(int n) {
    if (n < 3) throw std::invalid_argument("A_n generators need n >= 3");
    auto s = coxeter_generators(n);
    std::vector<Permutation> g;
    for (int i = 0; i + 2 < n; ++i) g.push_back(s[i] * s[i + 1]);
    return g;
}

std::vector<int> coxeter_word(const Permutation& g) {
    // Right-multiplying by s_j swaps the values j, j+1 in the image array; each swap
    // that puts j+1 after j removes one inversion of g^-1.
    Permutation cur = g;
    std::vector<int> pos(cur.img.size());
    std::vector<int> rev;
    const int n = cur.degree();
    for (;;) {
        for (int i = 0; i < n; ++i) pos[cur.img[i]] = i;
        int j = 0;
        while (j + 1 < n && pos[j] < pos[j + 1]) ++j;
        if (j + 1 >= n) break;
        std::swap(cur.img[pos[j]], cur.img[pos[j + 1]]);
        rev.push_back(j);
    }
    // cur = g * s_{r0} * s_{r1} ... = 1, so g = ... * s_{r1} * s_{r0}.
    std::reverse(rev.begin(), rev.end());
    return rev;
}

GroupDescriptor GroupDescriptor::symmetric(int n) {
    GroupDescriptor g;
    g.kind = GroupKind::Sn;
    g.n = n;
    g.name = "S" + std::to_string(n);
    g.base_order = factorial(n);
    return g;
}

GroupDescriptor GroupDescriptor::alternating(int n) {
    GroupDescriptor g;
    g.kind = GroupKind::An;
    g.n = n;
    g.name = "A" + std::to_string(n);
    g.base_order = factorial(n) / 2;
    return g;
}

GroupDescriptor GroupDescriptor::external(const std::string& name, const BigInt& order, std::uint64_t center) {
    GroupDescriptor g;
    g.kind = GroupKind::External;
    g.name = name;
    g.base_order = order;
    g.center_order = center;
    return g;
}

std::string GroupDescriptor::display_name() const {
    if (scalar_order == 1) return name;
    return name + "*F" + std::to_string(scalar_order);
}

BigInt group_order(const GroupDescriptor& g, std::uint32_t p) {
    if (g.scalar_order == 0 || (p - 1) % g.scalar_order != 0)
        throw std::invalid_argument("scalar subgroup order must divide p-1");
    if (g.scalar_overlap == 0 || g.scalar_order % g.scalar_overlap != 0 || g.center_order % g.scalar_overlap != 0)
        throw std::invalid_argument("inconsistent scalar overlap");
    if (g.base_order <= 0) throw std::invalid_argument("group order missing");
    return g.base_order * g.scalar_order / g.scalar_overlap;
}

}  // namespace regorb
