#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcr {

// Unsigned arbitrary-precision integer. Just enough for exact
// factorial-type products and comparisons against machine words.
class BigNat {
public:
    BigNat() = default;

    BigNat(std::uint64_t v) {
        while (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
    }

    BigNat& operator*=(std::uint64_t f) {
        if (f == 0 || limbs_.empty()) {
            limbs_.clear();
            return *this;
        }
        unsigned __int128 carry = 0;
        for (std::uint32_t& limb : limbs_) {
            unsigned __int128 prod = (unsigned __int128)limb * f + carry;
            limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
            carry = prod >> 32;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
        return *this;
    }

    // <0, 0, >0 like strcmp
    int compare(const BigNat& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        return 0;
    }

    int compare_u64(std::uint64_t v) const { return compare(BigNat(v)); }

    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigNat does not fit in 64 bits");
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

    bool is_zero() const { return limbs_.empty(); }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string out;
        while (!work.empty()) {
            // divide by 1e9, collecting the remainder as the next 9 digits
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

    bool operator==(const BigNat&) const = default;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32, no leading zeros
};

}  // namespace tcr
