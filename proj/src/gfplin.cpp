#include "regorb/gfplin.hpp"

#include <sstream>
#include <stdexcept>

namespace regorb {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (p > 65536 || !is_prime(p)) throw std::invalid_argument("modulus must be a prime <= 2^16: " + std::to_string(p));
    inv_.assign(p, 0);
    if (p <= 4096) {
        for (std::uint32_t a = 1; a < p; ++a) inv_[a] = pow(a, p - 2);
    }
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (inv_[a]) return inv_[a];
    return pow(a, p_ - 2);
}

std::uint32_t Field::reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::primitive_root() const {
    if (p_ == 2) return 1;
    std::vector<std::uint32_t> fac;
    std::uint32_t m = p_ - 1;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fac.push_back(m);
    for (std::uint32_t g = 2; g < p_; ++g) {
        bool ok = true;
        for (auto q : fac)
            if (pow(g, (p_ - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t d, std::uint32_t p) { return scalar(d, p, 1); }

FpMatrix FpMatrix::scalar(std::size_t d, std::uint32_t p, std::uint32_t lambda) {
    FpMatrix m(d, d, p);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = lambda % p;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows, std::size_t cols, std::uint32_t p) {
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i));
    }
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
    FpMatrix r(rows_, o.cols_, p_);
    std::vector<std::uint64_t> acc(o.cols_);
    // Each product is < 2^32, so 2^31 of them fit before overflow.
    const std::size_t flush = 1u << 30;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const std::uint32_t* a = row(i);
        std::size_t since = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t x = a[k];
            if (!x) continue;
            const std::uint32_t* b = o.row(k);
            for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += x * b[j];
            if (++since == flush) {
                for (auto& v : acc) v %= p_;
                since = 0;
            }
        }
        std::uint32_t* out = r.row(i);
        for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p_);
    }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
    FpMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
    FpMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::scaled(std::uint32_t c) const {
    FpMatrix r(*this);
    for (auto& x : r.a_) x = (x * (c % p_)) % p_;
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    FpMatrix r = identity(rows_, p_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::uint32_t FpMatrix::trace() const {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return static_cast<std::uint32_t>(t % p_);
}

bool FpMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool FpMatrix::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

void FpMatrix::append_row(const FpVector& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

FpMatrix FpMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    FpMatrix r(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i) std::copy(row(idx[i]), row(idx[i]) + cols_, r.row(i));
    return r;
}

FpMatrix FpMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    FpMatrix r(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

FpVector vec_mul(const FpVector& v, const FpMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector length mismatch");
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        std::uint64_t x = v[k];
        if (!x) continue;
        const std::uint32_t* b = m.row(k);
        for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += x * b[j];
    }
    FpVector r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = static_cast<std::uint32_t>(acc[j] % m.p());
    return r;
}

std::uint32_t dot(const FpVector& a, const FpVector& b, std::uint32_t p) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<std::uint32_t>(s % p);
}

Echelon rref_generic(const FpMatrix& m) {
    Field f(m.p());
    FpMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t s = r;
        while (s < R && a(s, c) == 0) ++s;
        if (s == R) continue;
        if (s != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(s, j), a(r, j));
        std::uint32_t iv = f.inv(a(r, c));
        std::uint32_t* pr = a.row(r);
        for (std::size_t j = c; j < C; ++j) pr[j] = f.mul(pr[j], iv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            std::uint32_t x = a(i, c);
            if (!x) continue;
            std::uint32_t nx = f.neg(x);
            std::uint32_t* pi = a.row(i);
            for (std::size_t j = c; j < C; ++j)
                if (pr[j]) pi[j] = (pi[j] + nx * pr[j]) % m.p();
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<std::size_t> keep(r);
    for (std::size_t i = 0; i < r; ++i) keep[i] = i;
    return {a.select_rows(keep), piv};
}

Echelon rref_gf2(const FpMatrix& m) {
    if (m.p() != 2) throw std::invalid_argument("rref_gf2 needs p = 2");
    BitMatrix b = BitMatrix::from(m);
    auto piv = b.reduce();
    FpMatrix full = b.to_fp();
    std::vector<std::size_t> keep(piv.size());
    for (std::size_t i = 0; i < piv.size(); ++i) keep[i] = i;
    return {full.select_rows(keep), piv};
}

Echelon rref(const FpMatrix& m) { return m.p() == 2 ? rref_gf2(m) : rref_generic(m); }

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

FpMatrix kernel(const FpMatrix& m) {
    Echelon e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto c : e.pivots) is_piv[c] = true;
    Field f(m.p());
    FpMatrix basis(0, C, m.p());
    for (std::size_t free = 0; free < C; ++free) {
        if (is_piv[free]) continue;
        FpVector x(C, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.r(i, free));
        basis.append_row(x);
    }
    if (basis.rows() == 0) return basis;
    return rref(basis).r;
}

FpMatrix left_kernel(const FpMatrix& m) { return kernel(m.transpose()); }

FpMatrix row_space(const FpMatrix& m) {
    Echelon e = rref(m);
    if (e.pivots.empty()) return FpMatrix(0, m.cols(), m.p());
    return e.r;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t d = m.rows();
    FpMatrix aug(d, 2 * d, m.p());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = m(i, j);
        aug(i, d + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < d || e.pivots[d - 1] != d - 1) return std::nullopt;
    std::vector<std::size_t> cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = d + j;
    return e.r.select_cols(cols);
}

std::optional<FpVector> solve_in_span(const std::vector<FpVector>& basis, const FpVector& v, std::uint32_t p) {
    const std::size_t k = basis.size(), n = v.size();
    for (auto& b : basis)
        if (b.size() != n) throw std::invalid_argument("solve_in_span: length mismatch");
    // Columns are the basis vectors, last column is v.
    FpMatrix a(n, k + 1, p);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) a(i, j) = basis[j][i] % p;
    for (std::size_t i = 0; i < n; ++i) a(i, k) = v[i] % p;
    Echelon e = rref(a);
    FpVector c(k, 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == k) return std::nullopt;
        c[e.pivots[i]] = e.r(i, k);
    }
    return c;
}

SpanBuilder::SpanBuilder(std::size_t dim, std::uint32_t p) : dim_(dim), f_(p) {}

bool SpanBuilder::reduce(FpVector& v) const {
    const std::uint32_t p = f_.p();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t x = v[piv_[i]];
        if (!x) continue;
        std::uint32_t nx = p - x;
        const FpVector& r = rows_[i];
        for (std::size_t j = piv_[i]; j < dim_; ++j)
            if (r[j]) v[j] = (v[j] + nx * r[j]) % p;
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

bool SpanBuilder::add(FpVector v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: length mismatch");
    if (reduce(v)) return false;
    std::size_t c = 0;
    while (v[c] == 0) ++c;
    std::uint32_t iv = f_.inv(v[c]);
    for (auto& x : v) x = f_.mul(x, iv);
    // Keep earlier rows free of the new pivot so reduce() stays a single pass.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t x = rows_[i][c];
        if (!x) continue;
        std::uint32_t nx = f_.neg(x);
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j]) rows_[i][j] = (rows_[i][j] + nx * v[j]) % f_.p();
    }
    rows_.push_back(std::move(v));
    piv_.push_back(c);
    return true;
}

FpMatrix SpanBuilder::canonical() const {
    FpMatrix m = FpMatrix::from_rows(rows_, dim_, f_.p());
    if (rows_.empty()) return m;
    return rref(m).r;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), w_((cols + 63) / 64), b_(rows * ((cols + 63) / 64), 0) {}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = b_[i * w_ + j / 64];
    std::uint64_t bit = std::uint64_t{1} << (j % 64);
    w = v ? (w | bit) : (w & ~bit);
}

BitMatrix BitMatrix::from(const FpMatrix& m) {
    BitMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) & 1u) b.set(i, j, true);
    return b;
}

FpMatrix BitMatrix::to_fp() const {
    FpMatrix m(rows_, cols_, 2);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = get(i, j) ? 1u : 0u;
    return m;
}

std::vector<std::size_t> BitMatrix::reduce() {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t s = r;
        while (s < rows_ && !get(s, c)) ++s;
        if (s == rows_) continue;
        if (s != r)
            for (std::size_t k = 0; k < w_; ++k) std::swap(b_[s * w_ + k], b_[r * w_ + k]);
        const std::uint64_t* pr = row(r);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || !get(i, c)) continue;
            std::uint64_t* pi = row(i);
            for (std::size_t k = c / 64; k < w_; ++k) pi[k] ^= pr[k];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::string to_string(const FpMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

}  // namespace regorb
