#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sds/natural.hpp"

namespace sds {

// Order of the ambient cyclic group Z_v.
class Modulus {
public:
    explicit Modulus(int v) : v_(v) {
        if (v < 2) throw std::invalid_argument("modulus must be at least 2");
    }
    int value() const { return v_; }
    int reduce(long long x) const {
        long long r = x % v_;
        return static_cast<int>(r < 0 ? r + v_ : r);
    }
    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    int v_;
};

// Subset of Z_v with set semantics; elements stored sorted ascending.
class Block {
public:
    Block(Modulus m, std::vector<int> elements) : mod_(m), elems_(std::move(elements)) {
        for (int x : elems_)
            if (x < 0 || x >= mod_.value())
                throw std::invalid_argument("block element out of range");
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    const std::vector<int>& elements() const { return elems_; }
    Modulus modulus() const { return mod_; }
    int v() const { return mod_.value(); }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(int x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    friend bool operator==(const Block& a, const Block& b) {
        return a.mod_ == b.mod_ && a.elems_ == b.elems_;
    }

private:
    Modulus mod_;
    std::vector<int> elems_;
};

// Builds a block from arbitrary integers, reduced into [0, v). In strict
// mode two inputs landing on the same residue are rejected instead of merged.
inline Block make_block(int v, const std::vector<long long>& elements, bool strict = false) {
    Modulus mod(v);
    std::vector<int> reduced;
    reduced.reserve(elements.size());
    for (long long x : elements) reduced.push_back(mod.reduce(x));
    if (strict) {
        std::vector<int> check = reduced;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw std::invalid_argument("duplicate element after reduction");
    }
    return Block(mod, std::move(reduced));
}

inline Block make_block(int v, const std::vector<int>& elements, bool strict = false) {
    return make_block(v, std::vector<long long>(elements.begin(), elements.end()), strict);
}

// Power sum sigma_d(X) = sum of x^d over integer representatives; 0^0 = 1.
inline Natural sigma(const Block& block, int d) {
    Natural total;
    for (int x : block.elements()) {
        Natural p(1);
        for (int i = 0; i < d; ++i) p *= static_cast<std::uint64_t>(x);
        total += p;
    }
    return total;
}

// Exact prefix of the sigma sequence of a block or family.
struct SigmaVector {
    std::vector<Natural> entries;
    int depth() const { return static_cast<int>(entries.size()); }
    friend bool operator==(const SigmaVector&, const SigmaVector&) = default;
};

namespace detail {

// Largest d with count * (v-1)^d < 2^63, i.e. the depth up to which power
// sums over `count` residues of Z_v are exact in unsigned 64-bit words.
inline int u64_exact_sigma_depth(int v, int count) {
    if (count == 0) return v;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 63;
    unsigned __int128 value = static_cast<unsigned>(count);
    const unsigned base = static_cast<unsigned>(v - 1);
    int d = 0;
    while (d < v && value * base < limit) {
        value *= base;
        ++d;
    }
    return d;
}

// Streams sigma_0, sigma_1, ... of a residue multiset, memoising the element
// powers so each further depth costs one multiplication per element. Values
// stay in 64-bit words while provably exact, then switch to Natural.
class SigmaStream {
public:
    SigmaStream(std::vector<int> residues, int v)
        : xs_(std::move(residues)),
          exact_depth_(u64_exact_sigma_depth(v, static_cast<int>(xs_.size()))) {}

    int depth() const { return depth_; }
    Natural value() const { return big_ ? cur_big_ : Natural(cur64_); }

    void advance() {
        ++depth_;
        if (!big_ && depth_ > exact_depth_) switch_to_big();
        if (!big_) {
            if (depth_ == 0) {
                pow64_.assign(xs_.size(), 1);
            } else {
                for (std::size_t i = 0; i < xs_.size(); ++i)
                    pow64_[i] *= static_cast<std::uint64_t>(xs_[i]);
            }
            cur64_ = 0;
            for (std::uint64_t p : pow64_) cur64_ += p;
        } else {
            for (std::size_t i = 0; i < xs_.size(); ++i)
                pow_big_[i] *= static_cast<std::uint64_t>(xs_[i]);
            cur_big_ = Natural();
            for (const Natural& p : pow_big_) cur_big_ += p;
        }
    }

    friend std::strong_ordering compare_current(const SigmaStream& a, const SigmaStream& b) {
        if (!a.big_ && !b.big_) return a.cur64_ <=> b.cur64_;
        if (a.big_ && b.big_) return a.cur_big_ <=> b.cur_big_;
        if (a.big_) {
            auto c = compare_u64(b.cur64_, a.cur_big_);
            return c == std::strong_ordering::less    ? std::strong_ordering::greater
                   : c == std::strong_ordering::greater ? std::strong_ordering::less
                                                        : std::strong_ordering::equal;
        }
        return compare_u64(a.cur64_, b.cur_big_);
    }

    std::strong_ordering compare_current_to(const Natural& n) const {
        if (big_) return cur_big_ <=> n;
        return compare_u64(cur64_, n);
    }

private:
    // Only reachable with depth_ >= 1, so pow64_ holds the previous powers.
    void switch_to_big() {
        big_ = true;
        pow_big_.clear();
        pow_big_.reserve(xs_.size());
        for (std::uint64_t p : pow64_) pow_big_.emplace_back(p);
        pow64_.clear();
    }

    std::vector<int> xs_;
    int exact_depth_ = 0;
    int depth_ = -1;
    bool big_ = false;
    std::vector<std::uint64_t> pow64_;
    std::vector<Natural> pow_big_;
    std::uint64_t cur64_ = 0;
    Natural cur_big_;
};

}  // namespace detail

// Total order on subsets of one Z_v: lexicographic on (sigma_0, ..., sigma_{v-1}).
// Agreement at every depth below v forces set equality, so `equal` means equal.
inline std::strong_ordering compare_blocks(const Block& x, const Block& y) {
    if (!(x.modulus() == y.modulus()))
        throw std::invalid_argument("compare_blocks: modulus mismatch");
    if (x.size() != y.size()) return x.size() <=> y.size();  // sigma_0
    const int v = x.v();
    detail::SigmaStream sx(x.elements(), v), sy(y.elements(), v);
    for (int d = 0; d < v; ++d) {
        sx.advance();
        sy.advance();
        if (auto c = compare_current(sx, sy); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

inline bool block_less(const Block& x, const Block& y) {
    return compare_blocks(x, y) == std::strong_ordering::less;
}

}  // namespace sds
