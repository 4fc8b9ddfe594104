#ifndef SYNKIT_BIGINT_HPP
#define SYNKIT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace synkit {

/// Unsigned big integer; just enough arithmetic for the state-bound
/// formula k * m^k * 2^(k * m^k * n).
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(unsigned long long v) {
        while (v > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
    }

    static BigUint pow2(unsigned long long e) {
        BigUint r;
        r.limbs_.assign(static_cast<std::size_t>(e / 32) + 1, 0);
        r.limbs_.back() = 1u << (e % 32);
        return r;
    }

    BigUint& mul_small(unsigned long long f) {
        if (f == 0 || limbs_.empty()) {
            limbs_.clear();
            return *this;
        }
        std::uint64_t lo = f & 0xffffffffu, hi = f >> 32;
        BigUint a = *this, b;
        a.mul_u32(static_cast<std::uint32_t>(lo));
        if (hi > 0) {
            b = *this;
            b.mul_u32(static_cast<std::uint32_t>(hi));
            b.shift_limbs(1);
        }
        *this = a.add(b);
        return *this;
    }

    BigUint add(const BigUint& o) const {
        BigUint r;
        std::uint64_t carry = 0;
        std::size_t n = std::max(limbs_.size(), o.limbs_.size());
        r.limbs_.reserve(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < limbs_.size()) s += limbs_[i];
            if (i < o.limbs_.size()) s += o.limbs_[i];
            r.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        r.normalize();
        return r;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator<(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
        return false;
    }
    bool operator<=(const BigUint& o) const { return *this == o || *this < o; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    unsigned long long to_u64() const {
        unsigned long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string out;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (work.empty())
                out = chunk + out;
            else
                out = std::string(9 - chunk.size(), '0') + chunk + out;
        }
        return out;
    }

  private:
    void mul_u32(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
            l = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        normalize();
    }
    void shift_limbs(std::size_t count) {
        if (limbs_.empty()) return;
        limbs_.insert(limbs_.begin(), count, 0);
    }
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

}  // namespace synkit

#endif  // SYNKIT_BIGINT_HPP
