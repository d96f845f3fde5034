#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sds {

// Arbitrary-precision non-negative integer, sized for exact power sums
// (values up to roughly 1000^1000). Only the operations those sums need:
// addition, multiplication by a machine word, and comparison.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t value) {
        if (value != 0) limbs_.push_back(value);
    }

    bool is_zero() const { return limbs_.empty(); }

    // true when the value fits a single 64-bit word
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Natural& a, const Natural& b) = default;

    Natural& operator+=(const Natural& rhs) {
        if (this == &rhs) return *this *= 2;
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 sum = carry + limbs_[i];
            if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(sum);
            carry = sum >> 64;
            if (carry == 0 && i + 1 >= rhs.limbs_.size()) break;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }
    friend Natural operator+(Natural a, const Natural& b) { return a += b; }

    Natural& operator*=(std::uint64_t m) {
        if (m == 0) {
            limbs_.clear();
            return *this;
        }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }
    friend Natural operator*(Natural a, std::uint64_t m) { return a *= m; }

    std::string str() const {
        if (limbs_.empty()) return "0";
        constexpr std::uint64_t chunk_base = 10'000'000'000'000'000'000ull;  // 10^19
        std::vector<std::uint64_t> work = limbs_;
        std::string out;
        while (!work.empty()) {
            unsigned __int128 rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | work[i];
                work[i] = static_cast<std::uint64_t>(cur / chunk_base);
                rem = static_cast<std::uint64_t>(cur % chunk_base);
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string digits = std::to_string(static_cast<std::uint64_t>(rem));
            if (work.empty())
                out.insert(0, digits);
            else
                out.insert(0, std::string(19 - digits.size(), '0') + digits);
        }
        return out;
    }

private:
    std::vector<std::uint64_t> limbs_;  // little-endian, no leading zero limb
};

inline std::strong_ordering compare_u64(std::uint64_t a, const Natural& b) {
    if (!b.fits_u64()) return std::strong_ordering::less;
    return a <=> b.low_u64();
}

}  // namespace sds
