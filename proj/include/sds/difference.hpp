#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sds/zmod.hpp"

namespace sds {

// Ordered tuple of blocks over one Z_v. Block order is significant:
// the equivalence transformations never permute blocks.
class Family {
public:
    Family(Modulus m, std::vector<Block> blocks) : mod_(m), blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw std::invalid_argument("family needs at least one block");
        for (const Block& b : blocks_)
            if (!(b.modulus() == mod_))
                throw std::invalid_argument("family blocks must share the modulus");
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
    Modulus modulus() const { return mod_; }
    int v() const { return mod_.value(); }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int total_size() const {
        int s = 0;
        for (const Block& b : blocks_) s += b.size();
        return s;
    }

    friend bool operator==(const Family& a, const Family& b) {
        return a.mod_ == b.mod_ && a.blocks_ == b.blocks_;
    }

private:
    Modulus mod_;
    std::vector<Block> blocks_;
};

// N_X (or N_family) as a length-v vector: counts[a] = #{(x,y) : y - x = a}.
struct DifferenceTable {
    Modulus modulus;
    std::vector<int> counts;
};

inline DifferenceTable difference_table(const Block& block) {
    const int v = block.v();
    std::vector<int> counts(static_cast<std::size_t>(v), 0);
    const auto& xs = block.elements();
    for (int x : xs)
        for (int y : xs) {
            int d = y - x;
            if (d < 0) d += v;
            ++counts[static_cast<std::size_t>(d)];
        }
    return {block.modulus(), std::move(counts)};
}

inline DifferenceTable family_table(const Family& family) {
    std::vector<int> counts(static_cast<std::size_t>(family.v()), 0);
    for (const Block& b : family.blocks()) {
        DifferenceTable t = difference_table(b);
        for (std::size_t a = 0; a < counts.size(); ++a) counts[a] += t.counts[a];
    }
    return {family.modulus(), std::move(counts)};
}

// (v; k_1,...,k_m; lambda) with the order n = sum(k_i) - lambda derived.
// Two-block parameter sets are stored with r >= s.
class ParameterSet {
public:
    ParameterSet(int v, std::vector<int> sizes, int lambda)
        : v_(v), sizes_(std::move(sizes)), lambda_(lambda) {
        if (v < 2) throw std::invalid_argument("parameter set: v must be at least 2");
        if (sizes_.empty()) throw std::invalid_argument("parameter set: no block sizes");
        for (int k : sizes_)
            if (k < 0 || k > v) throw std::invalid_argument("parameter set: size out of range");
        if (lambda_ < 0) throw std::invalid_argument("parameter set: negative index");
        std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
    }

    int v() const { return v_; }
    const std::vector<int>& sizes() const { return sizes_; }
    int block_count() const { return static_cast<int>(sizes_.size()); }
    int lambda() const { return lambda_; }
    int order() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0) - lambda_; }

    // two-block accessors
    int r() const { return sizes_.front(); }
    int s() const { return sizes_.back(); }

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

private:
    int v_;
    std::vector<int> sizes_;
    int lambda_;
};

// Outcome of checking the defining constancy condition. On failure the
// witness is the smallest shift a >= 1 whose count differs from counts[1];
// the reference is counts[1] rather than a caller-supplied lambda so that
// candidate families can be checked mid-search without known parameters.
struct VerificationReport {
    bool is_sds = false;
    std::optional<int> lambda;
    std::optional<ParameterSet> parameters;
    std::optional<std::pair<int, int>> witness;  // (shift, observed count)
};

inline VerificationReport verify_sds(const Family& family) {
    DifferenceTable table = family_table(family);
    const int v = family.v();
    const int reference = table.counts[1];
    for (int a = 2; a < v; ++a) {
        if (table.counts[static_cast<std::size_t>(a)] != reference) {
            VerificationReport report;
            report.witness = {a, table.counts[static_cast<std::size_t>(a)]};
            return report;
        }
    }
    VerificationReport report;
    report.is_sds = true;
    report.lambda = reference;
    std::vector<int> sizes;
    sizes.reserve(family.blocks().size());
    for (const Block& b : family.blocks()) sizes.push_back(b.size());
    report.parameters = ParameterSet(v, std::move(sizes), reference);
    return report;
}

// Necessary existence condition for two-block parameter sets:
// r(r-1) + s(s-1) = lambda(v-1).
inline bool is_feasible(const ParameterSet& params) {
    if (params.block_count() != 2)
        throw std::invalid_argument("is_feasible: exactly two block sizes required");
    const long long r = params.r(), s = params.s();
    return r * (r - 1) + s * (s - 1) ==
           static_cast<long long>(params.lambda()) * (params.v() - 1);
}

// All feasible (v;r,s;lambda) with v <= v_max and v >= 2r >= 2s >= 4,
// sorted lexicographically by (v, lambda, n).
inline std::vector<ParameterSet> enumerate_feasible(int v_max) {
    if (v_max < 5) throw std::invalid_argument("enumerate_feasible: v_max must be at least 5");
    std::vector<ParameterSet> out;
    for (int v = 5; v <= v_max; ++v) {
        for (int s = 2; 2 * s <= v; ++s) {
            for (int r = s; 2 * r <= v; ++r) {
                const long long lhs = static_cast<long long>(r) * (r - 1) +
                                      static_cast<long long>(s) * (s - 1);
                if (lhs % (v - 1) != 0) continue;
                out.emplace_back(v, std::vector<int>{r, s}, static_cast<int>(lhs / (v - 1)));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ParameterSet& a, const ParameterSet& b) {
        if (a.v() != b.v()) return a.v() < b.v();
        if (a.lambda() != b.lambda()) return a.lambda() < b.lambda();
        return a.order() < b.order();
    });
    return out;
}

}  // namespace sds
