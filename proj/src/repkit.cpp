#include "regorb/repkit.hpp"

#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "regorb/errors.hpp"
#include "regorb/polyfp.hpp"

namespace regorb {

Representation tensor_sign(const Representation& v) {
    if (v.odd.size() != v.h_generator_count()) throw std::invalid_argument("no parity map available for the sign twist");
    Representation r = v;
    for (std::size_t i = 0; i < v.odd.size(); ++i)
        if (v.odd[i]) r.generators[i] = v.generators[i].scaled(v.p - 1);
    r.label = v.label + "(x)sgn";
    return r;
}

Representation restrict_to_an(const Representation& v) {
    if (v.group.kind != GroupKind::Sn) throw std::invalid_argument("restriction to A_n needs an S_n module");
    const int n = v.group.n;
    if (n < 3) throw std::invalid_argument("restriction to A_n needs n >= 3");
    Representation r = v;
    r.generators.clear();
    for (int i = 0; i + 2 < n; ++i) r.generators.push_back(v.generators[i] * v.generators[i + 1]);
    if (v.group.scalar_order > 1) r.generators.push_back(v.generators.back());
    r.odd.assign(n - 2, false);
    GroupDescriptor g = GroupDescriptor::alternating(n);
    g.scalar_order = v.group.scalar_order;
    g.scalar_overlap = v.group.scalar_overlap;
    r.group = g;
    r.label = v.label + "|A" + std::to_string(n);
    return r;
}

Representation restrict_to_subspace(const Representation& v, const FpMatrix& basis) {
    Echelon e = rref(basis);
    if (e.r != basis) throw std::invalid_argument("subspace basis must be in reduced echelon form");
    const std::size_t k = basis.rows();
    Representation r = v;
    r.dim = k;
    r.generators.clear();
    for (const auto& g : v.generators) {
        FpMatrix img = basis * g;
        FpMatrix m(k, k, v.p);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = img(i, e.pivots[j]);
        // Coordinates read off pivots are only valid when the image lies in the subspace.
        if (m * basis != img) throw std::invalid_argument("subspace is not invariant");
        r.generators.push_back(m);
    }
    r.label = v.label + "/sub" + std::to_string(k);
    return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.p != b.p || a.generators.size() != b.generators.size()) throw std::invalid_argument("incompatible modules");
    Representation r = a;
    r.dim = a.dim + b.dim;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        FpMatrix m(r.dim, r.dim, a.p);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.generators[g](i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.generators[g](i, j);
        r.generators[g] = m;
    }
    r.label = a.label + "+" + b.label;
    return r;
}

Representation change_basis(const Representation& v, const FpMatrix& basis) {
    auto inv = inverse(basis);
    if (!inv) throw std::invalid_argument("basis change matrix is singular");
    Representation r = v;
    for (auto& g : r.generators) g = basis * g * *inv;
    return r;
}

namespace {

struct SpinResult {
    std::vector<FpVector> vectors;  // raw images, spanning the closure
    std::vector<int> parent, gen;
};

SpinResult spin_words(const std::vector<FpMatrix>& gens, const FpVector& v, std::uint32_t p) {
    SpinResult s;
    SpanBuilder sb(v.size(), p);
    if (!sb.add(v)) return s;
    s.vectors.push_back(v);
    s.parent.push_back(-1);
    s.gen.push_back(-1);
    for (std::size_t i = 0; i < s.vectors.size() && s.vectors.size() < v.size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g) {
            FpVector w = vec_mul(s.vectors[i], gens[g]);
            if (sb.add(w)) {
                s.vectors.push_back(std::move(w));
                s.parent.push_back(static_cast<int>(i));
                s.gen.push_back(static_cast<int>(g));
            }
        }
    return s;
}

std::vector<FpVector> projective_points(const FpMatrix& basis, std::uint64_t limit) {
    const std::size_t k = basis.rows();
    const std::uint32_t p = basis.p();
    std::vector<FpVector> out;
    std::vector<std::uint32_t> c(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k && c[i] == p - 1) c[i++] = 0;
        if (i == k) break;
        ++c[i];
        std::size_t first = 0;
        while (c[first] == 0) ++first;
        if (c[first] != 1) continue;
        FpVector x(basis.cols(), 0);
        for (std::size_t r = 0; r < k; ++r)
            if (c[r])
                for (std::size_t j = 0; j < x.size(); ++j) x[j] = (x[j] + c[r] * basis(r, j)) % p;
        out.push_back(std::move(x));
        if (out.size() > limit) return {};
    }
    return out;
}

std::uint64_t point_count(std::size_t k, std::uint32_t p, std::uint64_t cap) {
    std::uint64_t n = 0, pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
        n += pw;
        if (n > cap) return cap + 1;
        if (pw > cap) return cap + 1;
        pw *= p;
    }
    return n;
}

}  // namespace

FpMatrix spin(const std::vector<FpMatrix>& gens, const FpVector& v) {
    if (gens.empty()) throw std::invalid_argument("spin needs generators");
    auto s = spin_words(gens, v, gens[0].p());
    FpMatrix m = FpMatrix::from_rows(s.vectors, v.size(), gens[0].p());
    return s.vectors.empty() ? m : rref(m).r;
}

bool is_invariant(const std::vector<FpMatrix>& gens, const FpMatrix& basis) {
    if (basis.rows() == 0) return true;
    Echelon e = rref(basis);
    SpanBuilder sb(basis.cols(), basis.p());
    for (std::size_t i = 0; i < e.r.rows(); ++i) sb.add(e.r.row_vector(i));
    for (const auto& g : gens) {
        FpMatrix img = e.r * g;
        for (std::size_t i = 0; i < img.rows(); ++i)
            if (!sb.contains(img.row_vector(i))) return false;
    }
    return true;
}

SplitReport split_or_irreducible(const Representation& v, const MeatAxeOptions& opt) {
    SplitReport rep;
    rep.seed = opt.seed;
    const std::size_t d = v.dim;
    const std::uint32_t p = v.p;
    if (d <= 1) {
        rep.irreducible = true;
        return rep;
    }
    Field F(p);
    std::mt19937_64 rng(opt.seed);
    const auto& gens = v.generators;
    std::vector<FpMatrix> tgens;
    for (const auto& g : gens) tgens.push_back(g.transpose());
    std::vector<FpMatrix> pool = gens;

    auto found = [&](const FpMatrix& sub) {
        if (!is_invariant(gens, sub)) throw std::logic_error("MeatAxe produced a non-invariant subspace");
        rep.irreducible = false;
        rep.invariant_subspace = sub;
        return rep;
    };

    for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
        rep.attempts = attempt;
        // Random word growth plus a random linear combination.
        for (int k = 0; k < 2; ++k) {
            const FpMatrix& a = pool[rng() % pool.size()];
            const FpMatrix& b = pool[rng() % pool.size()];
            pool.push_back(a * b);
        }
        if (pool.size() > gens.size() + 40) pool.erase(pool.begin() + gens.size());
        FpMatrix theta(d, d, p);
        for (int k = 0; k < 3; ++k) theta = theta + pool[rng() % pool.size()].scaled(1 + rng() % (p - 1 ? p - 1 : 1));
        Poly cp = charpoly(theta);
        auto parts = distinct_degree_parts(cp, std::min<int>(static_cast<int>(d), 6), F);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (degree(parts[k]) < 1) continue;
            FpMatrix ft = poly_eval(parts[k], theta);
            FpMatrix N = left_kernel(ft);
            if (N.rows() == 0) continue;
            FpMatrix s = spin(gens, N.row_vector(0));
            if (s.rows() < d) return found(s);
            FpMatrix Nt = kernel(ft);
            FpMatrix st = spin(tgens, Nt.row_vector(0));
            if (st.rows() < d) return found(kernel(st));
            if (point_count(N.rows(), p, opt.max_points) > opt.max_points) continue;
            for (const auto& x : projective_points(N, opt.max_points)) {
                FpMatrix sx = spin(gens, x);
                if (sx.rows() < d) return found(sx);
            }
            for (const auto& y : projective_points(Nt, opt.max_points)) {
                FpMatrix sy = spin(tgens, y);
                if (sy.rows() < d) return found(kernel(sy));
            }
            // No submodule meets ker(theta) and none meets ker(theta^T) in the dual: irreducible.
            rep.irreducible = true;
            return rep;
        }
    }
    throw Undecided("split test undecided within budget for " + v.label);
}

Representation irreducible_constituent(const Representation& v, const MeatAxeOptions& opt) {
    Representation cur = v;
    for (;;) {
        SplitReport r = split_or_irreducible(cur, opt);
        if (r.irreducible) return cur;
        cur = restrict_to_subspace(cur, r.invariant_subspace);
    }
}

std::size_t endo_field_degree(const Representation& v, std::uint64_t seed) {
    const std::size_t d = v.dim;
    const std::uint32_t p = v.p;
    if (d == 0) return 0;
    std::mt19937_64 rng(seed);
    const auto& gens = v.generators;
    for (int attempt = 0; attempt < 32; ++attempt) {
        FpVector x(d);
        for (auto& c : x) c = rng() % p;
        if (attempt == 0) {
            std::fill(x.begin(), x.end(), 0);
            x[0] = 1;
        }
        auto s = spin_words(gens, x, p);
        if (s.vectors.size() < d) continue;
        // An endomorphism is fixed by the image n of x; phi(b_j) = n W_j.
        FpMatrix B = FpMatrix::from_rows(s.vectors, d, p);
        FpMatrix Binv = *inverse(B);
        std::vector<FpMatrix> W(d);
        W[0] = FpMatrix::identity(d, p);
        for (std::size_t j = 1; j < d; ++j) W[j] = W[s.parent[j]] * gens[s.gen[j]];
        SpanBuilder sb(d, p);
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& g : gens) {
                FpVector c = vec_mul(vec_mul(s.vectors[j], g), Binv);
                FpMatrix L = W[j] * g;
                for (std::size_t k = 0; k < d; ++k)
                    if (c[k]) L = L - W[k].scaled(c[k]);
                for (std::size_t col = 0; col < d; ++col) {
                    FpVector r(d);
                    for (std::size_t i = 0; i < d; ++i) r[i] = L(i, col);
                    sb.add(std::move(r));
                }
                if (sb.size() + 1 == d) return 1;
            }
        return d - sb.size();
    }
    // Not cyclic: solve X g = g X directly.
    if (d > 24) throw BudgetExceeded("commutant of a non-cyclic module beyond the direct-solve budget");
    SpanBuilder sb(d * d, p);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                FpVector row(d * d, 0);
                for (std::size_t k = 0; k < d; ++k) {
                    row[i * d + k] = (row[i * d + k] + g(k, j)) % p;
                    row[k * d + j] = (row[k * d + j] + p - g(i, k)) % p;
                }
                sb.add(std::move(row));
            }
    return d * d - sb.size();
}

namespace {

std::uint32_t compute_overlap(const Representation& v, std::uint32_t a) {
    if (a == 1) return 1;
    Field F(v.p);
    if (v.group.center_order <= 1) return 1;
    if (v.group.center_words.empty()) throw std::invalid_argument("center words missing for a nontrivial center");
    // Scalars in the image of the center, closed under products.
    std::vector<std::uint32_t> scal{1};
    for (const auto& w : v.group.center_words) {
        Representation h = v;
        h.generators.resize(v.h_generator_count());
        FpMatrix z = evaluate_word(h, w);
        std::uint32_t lam = z(0, 0);
        if (z != FpMatrix::scalar(v.dim, v.p, lam)) continue;
        std::uint32_t x = lam;
        while (x != 1) {
            scal.push_back(x);
            x = F.mul(x, lam);
        }
    }
    std::sort(scal.begin(), scal.end());
    scal.erase(std::unique(scal.begin(), scal.end()), scal.end());
    std::uint32_t cnt = 0;
    for (auto s : scal)
        if (F.pow(s, a) == 1) ++cnt;
    return cnt;
}

}  // namespace

Representation scalar_extension(const Representation& v, std::uint32_t a) {
    if (a == 0 || (v.p - 1) % a != 0) throw std::invalid_argument("scalar subgroup order must divide p-1");
    if (v.group.scalar_order != 1) throw std::invalid_argument("module is already scalar-extended");
    if (a == 1) return v;
    Field F(v.p);
    std::uint32_t lam = F.pow(F.primitive_root(), (v.p - 1) / a);
    Representation r = v;
    r.generators.push_back(FpMatrix::scalar(v.dim, v.p, lam));
    r.group.scalar_order = a;
    r.group.scalar_overlap = compute_overlap(v, a);
    group_order(r.group, r.p);  // validates metadata
    r.label = v.label + "*F" + std::to_string(a);
    return r;
}

std::string format_rep(const Representation& v) {
    std::ostringstream os;
    os << "regorb-rep 1\n";
    os << "p " << v.p << " dim " << v.dim << " gens " << v.generators.size() << "\n";
    std::string name = v.group.name;
    if (v.group.scalar_order > 1) name += "@a" + std::to_string(v.group.scalar_order);
    os << "group " << name << " order " << v.group.base_order << " center " << v.group.center_order << "\n";
    if (!v.group.center_words.empty()) {
        os << "zword";
        for (int i : v.group.center_words.front()) os << " " << (i + 1);
        os << "\n";
    }
    for (std::size_t g = 0; g < v.generators.size(); ++g) {
        os << "gen " << (g + 1) << "\n";
        const auto& m = v.generators[g];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
            os << "\n";
        }
    }
    return os.str();
}

void save_rep(const Representation& v, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << format_rep(v);
}

Representation parse_rep(const std::string& text) {
    if (text.empty() || text.back() != '\n') throw ParseError("missing trailing newline", 1);
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\t') throw ParseError("tab character", lines.size() + 1);
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    std::size_t ln = 0;
    auto next = [&](const char* what) -> std::vector<std::string> {
        if (ln >= lines.size()) throw ParseError(std::string("unexpected end of file, expected ") + what, ln + 1);
        std::istringstream is(lines[ln++]);
        std::vector<std::string> t;
        std::string w;
        while (is >> w) t.push_back(w);
        return t;
    };
    auto num = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a non-negative integer, got '" + s + "'", ln);
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError("integer out of range: " + s, ln);
        }
    };

    auto t = next("header");
    if (t.size() != 2 || t[0] != "regorb-rep" || t[1] != "1") throw ParseError("bad magic line", ln);
    t = next("field line");
    if (t.size() != 6 || t[0] != "p" || t[2] != "dim" || t[4] != "gens") throw ParseError("bad field line", ln);
    std::uint64_t p = num(t[1]), d = num(t[3]), k = num(t[5]);
    if (p > 65536 || !is_prime(p)) throw ParseError("modulus is not a prime <= 2^16", ln);
    if (d == 0 || d > 4096 || k == 0 || k > 4096) throw ParseError("unreasonable dimension or generator count", ln);
    t = next("group line");
    if (t.size() != 6 || t[0] != "group" || t[2] != "order" || t[4] != "center") throw ParseError("bad group line", ln);
    std::string name = t[1];
    if (t[3].find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad group order", ln);
    BigInt order(t[3]);
    std::uint64_t center = num(t[5]);

    Representation v;
    v.p = static_cast<std::uint32_t>(p);
    v.dim = d;
    std::uint32_t a = 1;
    std::smatch m;
    std::string base = name;
    static const std::regex scal_re(R"((.*)@a([0-9]+))");
    if (std::regex_match(name, m, scal_re)) {
        base = m[1];
        a = static_cast<std::uint32_t>(std::stoul(m[2]));
    }
    static const std::regex sym_re(R"(([SA])([0-9]+))");
    if (std::regex_match(base, m, sym_re)) {
        int n = std::stoi(m[2]);
        v.group = m[1] == "S" ? GroupDescriptor::symmetric(n) : GroupDescriptor::alternating(n);
        if (v.group.base_order != order) throw ParseError("declared order does not match " + base, ln);
        v.group.center_order = center;
        v.odd.assign(m[1] == "S" ? n - 1 : n - 2, m[1] == "S");
    } else {
        v.group = GroupDescriptor::external(base, order, center);
    }
    v.label = base;

    if (ln < lines.size() && lines[ln].rfind("zword", 0) == 0) {
        t = next("zword");
        std::vector<int> w;
        for (std::size_t i = 1; i < t.size(); ++i) {
            auto x = num(t[i]);
            if (x == 0 || x > k) throw ParseError("zword index out of range", ln);
            w.push_back(static_cast<int>(x - 1));
        }
        v.group.center_words.push_back(w);
    }
    for (std::uint64_t g = 0; g < k; ++g) {
        t = next("gen line");
        if (t.size() != 2 || t[0] != "gen" || num(t[1]) != g + 1) throw ParseError("expected 'gen " + std::to_string(g + 1) + "'", ln);
        FpMatrix mat(d, d, v.p);
        for (std::uint64_t i = 0; i < d; ++i) {
            t = next("matrix row");
            if (t.size() != d) throw ParseError("matrix row has wrong length", ln);
            for (std::uint64_t j = 0; j < d; ++j) {
                auto x = num(t[j]);
                if (x >= p) throw ParseError("entry outside [0,p)", ln);
                mat(i, j) = static_cast<std::uint32_t>(x);
            }
        }
        if (rank(mat) != d) throw ParseError("generator " + std::to_string(g + 1) + " is not invertible", ln);
        v.generators.push_back(std::move(mat));
    }
    if (ln != lines.size()) throw ParseError("trailing content", ln + 1);
    if (v.odd.size() != v.h_generator_count() && !v.odd.empty()) v.odd.clear();
    if (a > 1) {
        if (k < 2) throw ParseError("scalar-extended module needs a scalar generator", ln);
        v.group.scalar_order = a;
        const FpMatrix& s = v.generators.back();
        if (s != FpMatrix::scalar(d, v.p, s(0, 0))) throw ParseError("last generator is not scalar", ln);
        if (v.odd.size() != v.h_generator_count()) v.odd.clear();
        v.group.scalar_overlap = compute_overlap(v, a);
    }
    try {
        group_order(v.group, v.p);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), ln);
    }
    return v;
}

Representation load_rep(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_rep(ss.str());
}

Representation builtin_rep(const std::string& name) {
    if (name == "SL2(5)") {
        // S = [[0,1],[-1,0]], T = [[1,1],[0,1]]; S^2 = -I.
        return parse_rep(
            "regorb-rep 1\n"
            "p 5 dim 2 gens 2\n"
            "group SL2(5) order 120 center 2\n"
            "zword 1 1\n"
            "gen 1\n0 1\n4 0\n"
            "gen 2\n1 1\n0 1\n");
    }
    throw std::invalid_argument("unknown builtin module " + name);
}

bool validate_cover_relations(const std::vector<FpMatrix>& gens, const FpMatrix& z, CoverVariant variant, int n) {
    if (static_cast<int>(gens.size()) != n - 1) throw std::invalid_argument("cover presentation needs n-1 generators");
    const std::size_t d = z.rows();
    const FpMatrix I = FpMatrix::identity(d, z.p());
    const FpMatrix& sq = variant == CoverVariant::Plus ? I : z;
    if (z * z != I) return false;
    for (const auto& g : gens)
        if (g * z != z * g) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] * gens[i] != sq) return false;
        if (i + 1 < gens.size() && (gens[i] * gens[i + 1]).pow(3) != sq) return false;
        for (std::size_t j = i + 2; j < gens.size(); ++j) {
            FpMatrix x = gens[i] * gens[j];
            if (x * x != z) return false;
        }
    }
    return true;
}

bool validate_cover_relations(const Representation& v, CoverVariant variant, int n) {
    if (v.group.center_words.empty()) throw std::invalid_argument("no central element declared");
    Representation h = v;
    h.generators.resize(v.h_generator_count());
    FpMatrix z = evaluate_word(h, v.group.center_words.front());
    return validate_cover_relations(h.generators, z, variant, n);
}

bool faithfulness_check(const Representation& v) {
    Representation h = v;
    h.generators.resize(v.h_generator_count());
    h.group.scalar_order = 1;
    h.group.scalar_overlap = 1;
    const auto& g = h.generators;
    switch (v.group.kind) {
        case GroupKind::Sn:
            if (v.group.n >= 5) return v.dim > 1 && !(g[0] * g[1]).is_identity();
            return closure_order(h, 1000) == v.group.base_order;
        case GroupKind::An:
            if (v.group.n >= 5) {
                for (const auto& x : g)
                    if (!x.is_identity()) return true;
                return false;
            }
            return closure_order(h, 1000) == v.group.base_order;
        case GroupKind::External: {
            if (v.group.center_order > 1 && v.group.center_words.empty())
                throw std::invalid_argument("missing center metadata");
            for (const auto& w : v.group.center_words) {
                FpMatrix z = evaluate_word(h, w);
                if (z.is_identity()) return false;
                if (v.group.center_order == 2 && z != FpMatrix::scalar(v.dim, v.p, v.p - 1)) return false;
            }
            return true;
        }
    }
    return false;
}

std::vector<FpMatrix> enumerate_group(const Representation& v, std::size_t max_elements) {
    struct Hash {
        std::size_t operator()(const FpMatrix& m) const {
            std::size_t h = 1469598103934665603ULL;
            for (auto x : m.data()) h = (h ^ x) * 1099511628211ULL;
            return h;
        }
    };
    std::unordered_set<FpMatrix, Hash> seen;
    std::vector<FpMatrix> out{FpMatrix::identity(v.dim, v.p)};
    seen.insert(out.front());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : v.generators) {
            FpMatrix y = out[i] * g;
            if (seen.insert(y).second) {
                out.push_back(std::move(y));
                if (out.size() > max_elements) throw BudgetExceeded("group closure exceeds element budget");
            }
        }
    return out;
}

BigInt closure_order(const Representation& v, std::size_t max_elements) {
    return BigInt(enumerate_group(v, max_elements).size());
}

}  // namespace regorb
