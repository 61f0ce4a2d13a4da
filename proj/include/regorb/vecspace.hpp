#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "regorb/gfplin.hpp"

namespace regorb {

// Index of a vector in F_p^d, most significant digit first, so index order is
// lexicographic order on coordinates. Needs p^d < 2^64.
class VectorCodec {
public:
    VectorCodec(std::size_t dim, std::uint32_t p);
    std::size_t dim() const { return d_; }
    std::uint32_t p() const { return p_; }
    // p^d, valid only when fits().
    std::uint64_t size() const { return size_; }
    bool fits() const { return fits_; }
    std::uint64_t encode(const FpVector& v) const;
    FpVector decode(std::uint64_t x) const;

private:
    std::size_t d_;
    std::uint32_t p_;
    std::uint64_t size_ = 0;
    bool fits_ = false;
};

// x -> x * M on encoded vectors; p = 2 uses xor of row masks.
class EncodedAction {
public:
    EncodedAction(const FpMatrix& m, const VectorCodec& codec);
    std::uint64_t operator()(std::uint64_t x) const;

private:
    const VectorCodec* codec_;
    FpMatrix m_;
    std::vector<std::uint64_t> masks_;
};

class AtomicBitmap {
public:
    explicit AtomicBitmap(std::uint64_t bits);
    // Returns true when the bit was previously clear.
    bool set(std::uint64_t i) {
        const std::uint64_t bit = 1ULL << (i & 63);
        return !(w_[i >> 6].fetch_or(bit, std::memory_order_relaxed) & bit);
    }
    bool test(std::uint64_t i) const { return w_[i >> 6].load(std::memory_order_relaxed) >> (i & 63) & 1; }
    std::uint64_t size() const { return bits_; }
    std::uint64_t count() const;
    // First clear bit at index >= from, or size() if none.
    std::uint64_t first_clear(std::uint64_t from = 0) const;

private:
    std::uint64_t bits_;
    std::unique_ptr<std::atomic<std::uint64_t>[]> w_;
};

// Open-addressing set of 64-bit keys; grows by doubling.
class U64Set {
public:
    explicit U64Set(std::size_t expected = 1024);
    // True when x was not present.
    bool insert(std::uint64_t x);
    std::size_t size() const { return n_; }

private:
    void grow();
    std::vector<std::uint64_t> t_;  // key + 1, 0 = empty
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
};

// Calls f(index) for every vector in the row span of an echelon basis.
template <class F>
void for_each_in_span(const FpMatrix& basis, const VectorCodec& codec, F&& f) {
    const std::size_t k = basis.rows(), d = codec.dim();
    const std::uint32_t p = codec.p();
    if (p == 2) {
        std::vector<std::uint64_t> rows(k);
        for (std::size_t r = 0; r < k; ++r) rows[r] = codec.encode(basis.row_vector(r));
        std::uint64_t x = 0;
        f(x);
        const std::uint64_t total = 1ULL << k;
        for (std::uint64_t i = 1; i < total; ++i) {
            x ^= rows[__builtin_ctzll(i)];
            f(x);
        }
        return;
    }
    std::vector<std::uint32_t> coef(k, 0);
    FpVector v(d, 0);
    f(0);
    for (;;) {
        std::size_t r = 0;
        for (; r < k; ++r) {
            for (std::size_t j = 0; j < d; ++j) v[j] = (v[j] + basis(r, j)) % p;
            if (++coef[r] < p) break;
            coef[r] = 0;
        }
        if (r == k) return;
        f(codec.encode(v));
    }
}

}  // namespace regorb
