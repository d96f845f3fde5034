#pragma once

// Test-only brute-force machinery, kept independent of the library's
// optimised paths: breadth-first orbit computation over the elementary
// transformations, and random group words.

#include <deque>
#include <random>
#include <set>
#include <vector>

#include "sds/canonical.hpp"
#include "sds/difference.hpp"

namespace sdstest {

inline std::vector<int> encode(const sds::Family& f) {
    std::vector<int> key;
    key.push_back(f.v());
    for (const sds::Block& b : f.blocks()) key.push_back(b.size());
    for (const sds::Block& b : f.blocks())
        key.insert(key.end(), b.elements().begin(), b.elements().end());
    return key;
}

inline std::vector<sds::ElementaryTransform> neighbour_moves(const sds::Family& f) {
    std::vector<sds::ElementaryTransform> moves;
    const int v = f.v();
    const int m = f.block_count();
    for (int i = 0; i < m; ++i)
        for (int t = 1; t < v; ++t) moves.push_back(sds::TranslateBlock{i, t});
    for (int a : sds::units_of(v))
        if (a != 1) moves.push_back(sds::MultiplyAll{a});
    for (int i = 0; i < m; ++i) moves.push_back(sds::NegateBlock{i});
    for (int i = 0; i < m; ++i) moves.push_back(sds::ComplementBlock{i});
    if (sds::dagger_applies(f)) moves.push_back(sds::DaggerAll{});
    return moves;
}

// Full orbit of a family under the elementary transformations.
inline std::set<std::vector<int>> bfs_orbit(const sds::Family& start) {
    std::set<std::vector<int>> seen;
    std::deque<sds::Family> queue{start};
    seen.insert(encode(start));
    while (!queue.empty()) {
        sds::Family cur = std::move(queue.front());
        queue.pop_front();
        for (const sds::ElementaryTransform& move : neighbour_moves(cur)) {
            sds::Family next = sds::apply_transform(cur, move);
            if (seen.insert(encode(next)).second) queue.push_back(std::move(next));
        }
    }
    return seen;
}

// Applies a random word of elementary transformations.
inline sds::Family random_group_image(const sds::Family& start, std::mt19937_64& rng,
                                      int max_len = 8) {
    sds::Family cur = start;
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    for (int step = 0; step < len; ++step) {
        std::vector<sds::ElementaryTransform> moves = neighbour_moves(cur);
        cur = sds::apply_transform(cur, moves[rng() % moves.size()]);
    }
    return cur;
}

// Direct scan of the full candidate stream; the oracle counterpart of the
// library's factorised minimal-orbit computation.
inline std::pair<sds::SigmaVector, std::set<std::vector<int>>> brute_minimal_set(
    const sds::Family& family) {
    std::optional<sds::Family> best;
    std::set<std::vector<int>> minimizers;
    sds::for_each_orbit_candidate(family, [&](const sds::Family& cand) {
        if (!best) {
            best = cand;
            minimizers.insert(encode(cand));
            return;
        }
        auto c = sds::compare_families(cand, *best);
        if (c == std::weak_ordering::less) {
            best = cand;
            minimizers.clear();
            minimizers.insert(encode(cand));
        } else if (c == std::weak_ordering::equivalent) {
            minimizers.insert(encode(cand));
        }
    });
    return {sds::family_sigma(*best, family.v()), std::move(minimizers)};
}

}  // namespace sdstest
