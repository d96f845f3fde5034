#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sds/canonical.hpp"
#include "sds/difference.hpp"

namespace sds {

// Sequence of +1/-1 terms.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<int> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("sequence must be nonempty");
        for (int t : terms_)
            if (t != 1 && t != -1) throw std::invalid_argument("sequence terms must be +1 or -1");
    }

    const std::vector<int>& terms() const { return terms_; }
    int length() const { return static_cast<int>(terms_.size()); }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<int> terms_;
};

struct SequencePair {
    BinarySequence first;
    BinarySequence second;
};

struct CorrelationProfile {
    std::vector<long long> values;
    friend bool operator==(const CorrelationProfile&, const CorrelationProfile&) = default;
};

// Periodic autocorrelation: value(i) = sum_j a_j a_{(i+j) mod v}.
inline CorrelationProfile pacf(const BinarySequence& seq) {
    const int v = seq.length();
    const auto& a = seq.terms();
    CorrelationProfile out;
    out.values.resize(static_cast<std::size_t>(v), 0);
    for (int i = 0; i < v; ++i) {
        long long sum = 0;
        for (int j = 0; j < v; ++j) {
            int k = i + j;
            if (k >= v) k -= v;
            sum += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)];
        }
        out.values[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

// Non-periodic autocorrelation: value(i) = sum_{j <= v-1-i} a_j a_{i+j}.
inline CorrelationProfile nacf(const BinarySequence& seq) {
    const int v = seq.length();
    const auto& a = seq.terms();
    CorrelationProfile out;
    out.values.resize(static_cast<std::size_t>(v), 0);
    for (int i = 0; i < v; ++i) {
        long long sum = 0;
        for (int j = 0; j + i < v; ++j)
            sum += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i + j)];
        out.values[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

// The blocks record the positions of the -1 terms.
inline SequencePair sds_to_sequences(const Family& family) {
    if (family.block_count() != 2)
        throw std::invalid_argument("sds_to_sequences: exactly two blocks required");
    const int v = family.v();
    auto encode = [&](const Block& b) {
        std::vector<int> terms(static_cast<std::size_t>(v), 1);
        for (int x : b.elements()) terms[static_cast<std::size_t>(x)] = -1;
        return BinarySequence(std::move(terms));
    };
    return SequencePair{encode(family.block(0)), encode(family.block(1))};
}

inline Family sequences_to_sds(const SequencePair& pair) {
    if (pair.first.length() != pair.second.length())
        throw std::invalid_argument("sequences_to_sds: length mismatch");
    const int v = pair.first.length();
    if (v < 2) throw std::invalid_argument("sequences_to_sds: length must be at least 2");
    auto decode = [&](const BinarySequence& s) {
        std::vector<int> elems;
        for (int j = 0; j < v; ++j)
            if (s.terms()[static_cast<std::size_t>(j)] == -1) elems.push_back(j);
        return Block(Modulus(v), std::move(elems));
    };
    return Family(Modulus(v), {decode(pair.first), decode(pair.second)});
}

// Pointwise sum of the two PACFs. For the pair derived from a two-block
// difference family, every nonzero shift equals 2v - 4n.
inline CorrelationProfile pacf_sum(const SequencePair& pair) {
    if (pair.first.length() != pair.second.length())
        throw std::invalid_argument("pacf_sum: length mismatch");
    CorrelationProfile p1 = pacf(pair.first);
    CorrelationProfile p2 = pacf(pair.second);
    for (std::size_t i = 0; i < p1.values.size(); ++i) p1.values[i] += p2.values[i];
    return p1;
}

// Special types of two-block parameter sets.
struct TypeTags {
    bool d_optimal = false;      // v = 2n + 1
    bool periodic_pair = false;  // v = 2n
    bool equal_blocks = false;   // r = s
};

inline TypeTags classify(const ParameterSet& params) {
    if (params.block_count() != 2)
        throw std::invalid_argument("classify: exactly two block sizes required");
    const int n = params.order();
    TypeTags tags;
    tags.d_optimal = params.v() == 2 * n + 1;
    tags.periodic_pair = params.v() == 2 * n;
    tags.equal_blocks = params.r() == params.s();
    return tags;
}

struct BibdParams {
    int v = 0;
    int b = 0;
    int r_rep = 0;
    int k = 0;
    int lambda = 0;
    friend bool operator==(const BibdParams&, const BibdParams&) = default;
};

// Develops an equal-block-size family through all translations, giving a
// balanced incomplete block design (v, 2v, 2k, k, lambda) on Z_v. Point
// replication and pair coverage are counted directly before returning.
inline std::pair<BibdParams, std::vector<Block>> develop_bibd(const Family& family) {
    if (family.block_count() != 2)
        throw std::invalid_argument("develop_bibd: exactly two blocks required");
    VerificationReport rep = verify_sds(family);
    if (!rep.is_sds) throw std::invalid_argument("develop_bibd: not a difference family");
    const int k = family.block(0).size();
    if (k != family.block(1).size())
        throw std::invalid_argument("develop_bibd: blocks must have equal size");
    const int v = family.v();
    const int lambda = *rep.lambda;

    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(2 * v));
    for (const Block& base : family.blocks())
        for (int t = 0; t < v; ++t) blocks.push_back(translate_block(base, t));

    std::vector<int> replication(static_cast<std::size_t>(v), 0);
    std::vector<std::vector<int>> coverage(static_cast<std::size_t>(v),
                                           std::vector<int>(static_cast<std::size_t>(v), 0));
    for (const Block& b : blocks) {
        const auto& xs = b.elements();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ++replication[static_cast<std::size_t>(xs[i])];
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                ++coverage[static_cast<std::size_t>(xs[i])][static_cast<std::size_t>(xs[j])];
        }
    }
    for (int x = 0; x < v; ++x)
        if (replication[static_cast<std::size_t>(x)] != 2 * k)
            throw std::logic_error("develop_bibd: replication count mismatch");
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (coverage[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != lambda)
                throw std::logic_error("develop_bibd: pair coverage mismatch");

    return {BibdParams{v, 2 * v, 2 * k, k, lambda}, std::move(blocks)};
}

// Sequence textual form: one character per term, '+' or '-'.
inline std::string render_sequence(const BinarySequence& seq) {
    std::string out;
    out.reserve(static_cast<std::size_t>(seq.length()));
    for (int t : seq.terms()) out += t == 1 ? '+' : '-';
    return out;
}

inline BinarySequence parse_sequence(std::string_view text) {
    std::vector<int> terms;
    terms.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+')
            terms.push_back(1);
        else if (text[i] == '-')
            terms.push_back(-1);
        else
            throw std::invalid_argument("sequence characters must be '+' or '-'");
    }
    return BinarySequence(std::move(terms));
}

}  // namespace sds
