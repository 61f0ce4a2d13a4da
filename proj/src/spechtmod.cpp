#include "regorb/spechtmod.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "regorb/errors.hpp"

namespace regorb {

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> v;
    std::string cur;
    for (char c : s + ",") {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            if (!cur.empty()) v.push_back(std::stoi(cur));
            cur.clear();
        } else if (c >= '0' && c <= '9') {
            cur += c;
        } else {
            throw std::invalid_argument("bad partition: " + s);
        }
    }
    if (v.empty()) throw std::invalid_argument("empty partition");
    return Partition(v);
}

int Partition::n() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

bool p_regular(const Partition& mu, std::uint32_t p) {
    std::size_t i = 0;
    while (i < mu.parts.size()) {
        std::size_t j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        if (j - i >= p) return false;
        i = j;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for (auto& t : all_cycle_types(n)) out.emplace_back(t);
    return out;
}

std::vector<Partition> p_regular_partitions(int n, std::uint32_t p) {
    std::vector<Partition> out;
    for (auto& m : partitions_of(n))
        if (p_regular(m, p)) out.push_back(m);
    return out;
}

BigInt hook_length_count(const Partition& mu) {
    const auto& a = mu.parts;
    BigInt prod = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < a[i]; ++j) {
            int arm = a[i] - j - 1, leg = 0;
            for (std::size_t k = i + 1; k < a.size() && a[k] > j; ++k) ++leg;
            prod *= arm + leg + 1;
        }
    return factorial(mu.n()) / prod;
}

static void tableaux_rec(const Partition& mu, Tableau& t, int next, int n, std::vector<Tableau>& out) {
    if (next == n) {
        out.push_back(t);
        return;
    }
    for (std::size_t r = 0; r < mu.parts.size(); ++r) {
        int len = static_cast<int>(t[r].size());
        if (len >= mu.parts[r]) continue;
        if (r > 0 && static_cast<int>(t[r - 1].size()) <= len) continue;
        t[r].push_back(next);
        tableaux_rec(mu, t, next + 1, n, out);
        t[r].pop_back();
    }
}

std::vector<Tableau> standard_tableaux(const Partition& mu) {
    std::vector<Tableau> out;
    Tableau t(mu.parts.size());
    tableaux_rec(mu, t, 0, mu.n(), out);
    return out;
}

BigInt standard_tableaux_count(const Partition& mu) {
    BigInt hook = hook_length_count(mu);
    BigInt enumerated = standard_tableaux(mu).size();
    if (hook != enumerated) throw std::logic_error("hook formula disagrees with enumeration for " + mu.str());
    return hook;
}

BigInt tabloid_count(const Partition& mu) {
    BigInt d = 1;
    for (int x : mu.parts) d *= factorial(x);
    return factorial(mu.n()) / d;
}

static std::string key_of(const std::vector<std::uint8_t>& l) { return std::string(l.begin(), l.end()); }

TabloidIndex::TabloidIndex(const Partition& mu) : mu_(mu) {
    const int n = mu.n();
    std::vector<std::uint8_t> label(n, 0);
    std::vector<bool> used(n, false);
    // Row r takes a lexicographically increasing combination of the unused points.
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == mu.parts.size()) {
            labels_.push_back(label);
            return;
        }
        std::vector<int> avail;
        for (int i = 0; i < n; ++i)
            if (!used[i]) avail.push_back(i);
        const int k = mu.parts[r];
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i;
        const int m = static_cast<int>(avail.size());
        for (;;) {
            for (int i : c) {
                used[avail[i]] = true;
                label[avail[i]] = static_cast<std::uint8_t>(r);
            }
            rec(r + 1);
            for (int i : c) used[avail[i]] = false;
            int i = k - 1;
            while (i >= 0 && c[i] == m - k + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    };
    rec(0);
    for (std::size_t i = 0; i < labels_.size(); ++i) lookup_.emplace(key_of(labels_[i]), i);
}

std::size_t TabloidIndex::index_of(const std::vector<std::uint8_t>& label) const {
    auto it = lookup_.find(key_of(label));
    if (it == lookup_.end()) throw std::out_of_range("not a tabloid of this shape");
    return it->second;
}

std::size_t TabloidIndex::act(std::size_t i, const Permutation& g) const {
    const auto& l = labels_[i];
    std::vector<std::uint8_t> out(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) out[g(static_cast<int>(x))] = l[x];
    return index_of(out);
}

SpechtBasis specht_basis(const Partition& mu, std::uint32_t p, const TabloidIndex& idx) {
    SpechtBasis sb;
    sb.standard_tableaux = standard_tableaux(mu);
    if (BigInt(sb.standard_tableaux.size()) != hook_length_count(mu))
        throw std::logic_error("hook formula disagrees with enumeration for " + mu.str());
    const int n = mu.n();
    const std::size_t T = idx.size();
    sb.polytabloid_matrix = FpMatrix(sb.standard_tableaux.size(), T, p);
    const int ncols = mu.largest();
    for (std::size_t ti = 0; ti < sb.standard_tableaux.size(); ++ti) {
        const Tableau& t = sb.standard_tableaux[ti];
        std::vector<std::vector<int>> cols(ncols);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t c = 0; c < t[r].size(); ++c) cols[c].push_back(t[r][c]);
        std::vector<std::uint8_t> label(n);
        std::uint32_t* out = sb.polytabloid_matrix.row(ti);
        // Signed sum over the column stabiliser: column c in some order fills rows 0..len-1.
        std::function<void(int, bool)> rec = [&](int c, bool odd) {
            if (c == ncols) {
                std::size_t k = idx.index_of(label);
                out[k] = (out[k] + (odd ? p - 1 : 1)) % p;
                return;
            }
            std::vector<int> perm(cols[c].size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            do {
                int inv = 0;
                for (std::size_t a = 0; a < perm.size(); ++a)
                    for (std::size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) ++inv;
                for (std::size_t r = 0; r < perm.size(); ++r) label[cols[c][perm[r]]] = static_cast<std::uint8_t>(r);
                rec(c + 1, odd ^ (inv % 2 == 1));
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        rec(0, false);
    }
    return sb;
}

GramData gram_data(const SpechtBasis& sb) {
    GramData g;
    g.gram = sb.polytabloid_matrix * sb.polytabloid_matrix.transpose();
    g.radical_basis = kernel(g.gram);
    return g;
}

FpMatrix dmu_projection(const Partition& mu, std::uint32_t p, const SpechtOptions& opt) {
    if (!p_regular(mu, p)) throw std::invalid_argument(mu.str() + " is not " + std::to_string(p) + "-regular");
    if (tabloid_count(mu) > opt.tabloid_budget)
        throw BudgetExceeded("tabloid count of " + mu.str() + " exceeds budget");
    TabloidIndex idx(mu);
    SpechtBasis sb = specht_basis(mu, p, idx);
    FpMatrix gram = sb.polytabloid_matrix * sb.polytabloid_matrix.transpose();
    const auto P = rref(gram).pivots;
    auto gpp_inv = inverse(gram.select_rows(P).select_cols(P));
    if (!gpp_inv) throw std::logic_error("principal Gram block is singular");
    return sb.polytabloid_matrix.select_rows(P).transpose() * *gpp_inv;
}

Representation build_dmu(const Partition& mu, std::uint32_t p, const SpechtOptions& opt) {
    Field f(p);
    if (!p_regular(mu, p)) throw std::invalid_argument(mu.str() + " is not " + std::to_string(p) + "-regular");
    if (tabloid_count(mu) > opt.tabloid_budget)
        throw BudgetExceeded("tabloid count of " + mu.str() + " exceeds budget");
    const int n = mu.n();
    TabloidIndex idx(mu);
    SpechtBasis sb = specht_basis(mu, p, idx);
    FpMatrix gram = sb.polytabloid_matrix * sb.polytabloid_matrix.transpose();
    Echelon ech = rref(gram);
    const auto& P = ech.pivots;
    const std::size_t r = P.size();

    Representation v;
    v.p = p;
    v.dim = r;
    v.group = GroupDescriptor::symmetric(n);
    v.label = "D" + mu.str();
    if (r == 0) throw std::logic_error("zero Gram matrix for a p-regular partition");

    FpMatrix EP = sb.polytabloid_matrix.select_rows(P);
    FpMatrix EPt = EP.transpose();
    auto gpp_inv = inverse(gram.select_rows(P).select_cols(P));
    if (!gpp_inv) throw std::logic_error("principal Gram block is singular");

    const std::size_t T = idx.size();
    for (const auto& s : coxeter_generators(n)) {
        std::vector<std::size_t> img(T);
        for (std::size_t k = 0; k < T; ++k) img[k] = idx.act(k, s);
        FpMatrix U(r, T, p);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < T; ++k) U(i, img[k]) = EP(i, k);
        v.generators.push_back((U * EPt) * *gpp_inv);
        v.odd.push_back(true);
    }
    return v;
}

FpVector fdpm_coordinates(const std::vector<std::uint32_t>& tuple, std::uint32_t p) {
    const std::size_t n = tuple.size();
    std::uint64_t s = 0;
    for (auto x : tuple) s += x % p;
    if (s % p != 0) throw std::invalid_argument("tuple does not sum to zero");
    FpVector x(tuple.begin(), tuple.end() - 1);
    for (auto& e : x) e %= p;
    if (n % p != 0) return x;
    // Modulo the all-ones line: subtract the last coordinate.
    FpVector y(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) y[i] = (x[i] + p - x[n - 2]) % p;
    return y;
}

std::vector<std::uint32_t> fdpm_lift(const FpVector& coords, int n, std::uint32_t p) {
    std::vector<std::uint32_t> a(n, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) a[i] = coords[i] % p;
    std::uint64_t s = 0;
    for (auto x : a) s += x;
    a[n - 1] = static_cast<std::uint32_t>((p - s % p) % p);
    return a;
}

Representation build_fdpm(int n, std::uint32_t p) {
    Field f(p);
    if (n < 3) throw std::invalid_argument("fully deleted module needs n >= 3");
    const std::size_t d = (n % p == 0) ? n - 2 : n - 1;
    Representation v;
    v.p = p;
    v.dim = d;
    v.group = GroupDescriptor::symmetric(n);
    v.label = "fdpm";
    for (const auto& s : coxeter_generators(n)) {
        FpMatrix m(d, d, p);
        for (std::size_t i = 0; i < d; ++i) {
            FpVector e(d, 0);
            e[i] = 1;
            auto a = fdpm_lift(e, n, p);
            std::vector<std::uint32_t> b(n);
            for (int k = 0; k < n; ++k) b[s(k)] = a[k];
            auto c = fdpm_coordinates(b, p);
            std::copy(c.begin(), c.end(), m.row(i));
        }
        v.generators.push_back(m);
        v.odd.push_back(true);
    }
    return v;
}

std::vector<std::uint32_t> class_traces(const Representation& v) {
    std::vector<std::uint32_t> t;
    for (const auto& c : all_class_reps(v.group.n, v.group.kind)) t.push_back(evaluate_permutation(v, c.rep).trace());
    return t;
}

namespace {
std::mutex cache_mu;
std::map<std::pair<std::vector<int>, std::uint32_t>, std::pair<std::size_t, std::vector<std::uint32_t>>> trace_cache;

std::pair<std::size_t, std::vector<std::uint32_t>> dims_and_traces(const Partition& mu, std::uint32_t p,
                                                                    const SpechtOptions& opt) {
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = trace_cache.find({mu.parts, p});
        if (it != trace_cache.end()) return it->second;
    }
    Representation v = build_dmu(mu, p, opt);
    auto val = std::make_pair(v.dim, class_traces(v));
    std::lock_guard<std::mutex> lk(cache_mu);
    trace_cache[{mu.parts, p}] = val;
    return val;
}
}  // namespace

Partition associate_partition(const Partition& mu, std::uint32_t p, const SpechtOptions& opt) {
    const int n = mu.n();
    auto [dim, tr] = dims_and_traces(mu, p, opt);
    auto classes = all_class_reps(n, GroupKind::Sn);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!classes[i].rep.is_even()) tr[i] = (p - tr[i]) % p;
    std::vector<Partition> hits;
    bool skipped = false;
    for (const auto& lam : p_regular_partitions(n, p)) {
        if (tabloid_count(lam) > opt.tabloid_budget) {
            skipped = true;
            continue;
        }
        auto [d2, tr2] = dims_and_traces(lam, p, opt);
        if (d2 == dim && tr2 == tr) hits.push_back(lam);
    }
    if (hits.size() == 1) return hits.front();
    if (hits.empty() && skipped) throw BudgetExceeded("associate of " + mu.str() + " lies beyond the tabloid budget");
    throw std::logic_error("trace matching for the associate of " + mu.str() + " is ambiguous");
}

int rn_class(const Partition& mu, std::uint32_t p, const SpechtOptions& opt) {
    Partition m = (p == 2) ? mu : associate_partition(mu, p, opt);
    return mu.n() - std::max(mu.largest(), m.largest());
}

}  // namespace regorb
