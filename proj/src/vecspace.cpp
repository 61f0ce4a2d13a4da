#include "regorb/vecspace.hpp"

#include <stdexcept>

namespace regorb {

VectorCodec::VectorCodec(std::size_t dim, std::uint32_t p) : d_(dim), p_(p) {
    unsigned __int128 s = 1;
    fits_ = true;
    for (std::size_t i = 0; i < dim; ++i) {
        s *= p;
        if (s >> 63) {
            fits_ = false;
            break;
        }
    }
    if (fits_) size_ = static_cast<std::uint64_t>(s);
}

std::uint64_t VectorCodec::encode(const FpVector& v) const {
    std::uint64_t x = 0;
    if (p_ == 2) {
        for (std::size_t i = 0; i < d_; ++i) x = x << 1 | v[i];
        return x;
    }
    for (std::size_t i = 0; i < d_; ++i) x = x * p_ + v[i];
    return x;
}

FpVector VectorCodec::decode(std::uint64_t x) const {
    FpVector v(d_);
    for (std::size_t i = d_; i-- > 0;) {
        v[i] = static_cast<std::uint32_t>(x % p_);
        x /= p_;
    }
    return v;
}

EncodedAction::EncodedAction(const FpMatrix& m, const VectorCodec& codec) : codec_(&codec), m_(m) {
    if (!codec.fits()) throw std::invalid_argument("vector space too large to encode");
    if (codec.p() == 2)
        for (std::size_t i = 0; i < m.rows(); ++i) masks_.push_back(codec.encode(m.row_vector(i)));
}

std::uint64_t EncodedAction::operator()(std::uint64_t x) const {
    if (!masks_.empty()) {
        std::uint64_t y = 0;
        const std::size_t d = masks_.size();
        while (x) {
            int b = __builtin_ctzll(x);
            y ^= masks_[d - 1 - b];
            x &= x - 1;
        }
        return y;
    }
    return codec_->encode(vec_mul(codec_->decode(x), m_));
}

AtomicBitmap::AtomicBitmap(std::uint64_t bits) : bits_(bits), w_(new std::atomic<std::uint64_t>[(bits + 63) / 64]) {
    for (std::uint64_t i = 0; i < (bits + 63) / 64; ++i) w_[i].store(0, std::memory_order_relaxed);
}

std::uint64_t AtomicBitmap::count() const {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < (bits_ + 63) / 64; ++i) c += __builtin_popcountll(w_[i].load(std::memory_order_relaxed));
    return c;
}

std::uint64_t AtomicBitmap::first_clear(std::uint64_t from) const {
    for (std::uint64_t i = from; i < bits_;) {
        std::uint64_t w = ~w_[i >> 6].load(std::memory_order_relaxed) >> (i & 63);
        if (w) {
            std::uint64_t r = i + __builtin_ctzll(w);
            return r < bits_ ? r : bits_;
        }
        i = (i | 63) + 1;
    }
    return bits_;
}

namespace {
inline std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}
}  // namespace

U64Set::U64Set(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    t_.assign(cap, 0);
    mask_ = cap - 1;
}

bool U64Set::insert(std::uint64_t x) {
    if ((n_ + 1) * 10 > t_.size() * 7) grow();
    const std::uint64_t key = x + 1;
    for (std::uint64_t i = mix(x) & mask_;; i = (i + 1) & mask_) {
        if (t_[i] == key) return false;
        if (t_[i] == 0) {
            t_[i] = key;
            ++n_;
            return true;
        }
    }
}

void U64Set::grow() {
    std::vector<std::uint64_t> old;
    old.swap(t_);
    t_.assign(old.size() * 2, 0);
    mask_ = t_.size() - 1;
    for (auto k : old)
        if (k)
            for (std::uint64_t i = mix(k - 1) & mask_;; i = (i + 1) & mask_)
                if (t_[i] == 0) {
                    t_[i] = k;
                    break;
                }
}

}  // namespace regorb
