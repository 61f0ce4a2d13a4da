#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace regorb {

bool is_prime(std::uint64_t n);

// Arithmetic in F_p, p <= 2^16. Products of two residues fit in 32 bits.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t reduce(std::int64_t x) const;
    // Generator of the multiplicative group.
    std::uint32_t primitive_root() const;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> inv_;
};

using FpVector = std::vector<std::uint32_t>;

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t d, std::uint32_t p);
    static FpMatrix scalar(std::size_t d, std::uint32_t p, std::uint32_t lambda);
    static FpMatrix from_rows(const std::vector<FpVector>& rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }
    FpVector row_vector(std::size_t i) const { return FpVector(row(i), row(i) + cols_); }
    const std::vector<std::uint32_t>& data() const { return a_; }

    bool operator==(const FpMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t c) const;
    FpMatrix transpose() const;
    FpMatrix pow(std::uint64_t e) const;
    std::uint32_t trace() const;
    bool is_identity() const;
    bool is_zero() const;

    void append_row(const FpVector& v);
    FpMatrix select_rows(const std::vector<std::size_t>& idx) const;
    FpMatrix select_cols(const std::vector<std::size_t>& idx) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> a_;
};

// v * m for a row vector v.
FpVector vec_mul(const FpVector& v, const FpMatrix& m);
std::uint32_t dot(const FpVector& a, const FpVector& b, std::uint32_t p);

struct Echelon {
    FpMatrix r;                       // nonzero rows only, reduced
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form. p = 2 goes through the bit-packed path.
Echelon rref(const FpMatrix& m);
Echelon rref_generic(const FpMatrix& m);
Echelon rref_gf2(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);
// Right null space {x : m x^T = 0}; rows of the result form its reduced echelon basis.
FpMatrix kernel(const FpMatrix& m);
// Left null space {x : x m = 0}.
FpMatrix left_kernel(const FpMatrix& m);
// Canonical basis (reduced echelon) of the row space.
FpMatrix row_space(const FpMatrix& m);
std::optional<FpMatrix> inverse(const FpMatrix& m);

// Coefficients c with sum c_i basis_i = v; absent if v is outside the span.
std::optional<FpVector> solve_in_span(const std::vector<FpVector>& basis, const FpVector& v, std::uint32_t p);

// Incremental echelon basis used for spinning and membership tests.
class SpanBuilder {
public:
    SpanBuilder(std::size_t dim, std::uint32_t p);
    // Reduces v in place against the basis; returns true if v became zero.
    bool reduce(FpVector& v) const;
    // Adds v if independent; returns true on growth.
    bool add(FpVector v);
    bool contains(FpVector v) const { return reduce(v); }
    std::size_t size() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<FpVector>& rows() const { return rows_; }
    FpMatrix canonical() const;

private:
    std::size_t dim_;
    Field f_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> piv_;
};

// Bit-packed GF(2) matrix, rows as 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix from(const FpMatrix& m);
    FpMatrix to_fp() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return w_; }
    bool get(std::size_t i, std::size_t j) const { return (b_[i * w_ + j / 64] >> (j % 64)) & 1u; }
    void set(std::size_t i, std::size_t j, bool v);
    std::uint64_t* row(std::size_t i) { return b_.data() + i * w_; }
    const std::uint64_t* row(std::size_t i) const { return b_.data() + i * w_; }

    // In-place reduced echelon form; returns pivot columns.
    std::vector<std::size_t> reduce();

private:
    std::size_t rows_, cols_, w_;
    std::vector<std::uint64_t> b_;
};

std::string to_string(const FpMatrix& m);

}  // namespace regorb
