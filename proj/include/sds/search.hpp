#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sds/difference.hpp"

namespace sds {

// Deterministic, portable randomness: the mt19937_64 output sequence is
// pinned by the standard, and the samplers below avoid the
// implementation-defined std distributions, so identical seeds reproduce
// identical runs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, n)
    int below(int n) {
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t bound = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r = next();
        while (r >= bound) r = next();
        return static_cast<int>(r % span);
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

struct SearchConfig {
    int population_size = 64;
    int max_generations = 250;
    double mutation_rate = 0.3;
    double crossover_rate = 0.9;
    int local_search_budget = 200;
    int restarts = 3;
    std::uint64_t rng_seed = 0;
    int islands = 1;
    double time_limit_seconds = 0.0;  // 0 disables the wall-clock cap
};

struct SearchStats {
    long long generations = 0;
    long long evaluations = 0;
    long long best_fitness = -1;
};

struct Candidate {
    Family family;
    long long fitness = 0;
};

// Squared deviation of the family difference table from the target index:
// sum over nonzero shifts of (N(a) - lambda)^2. Zero exactly on difference
// families with that index.
inline long long fitness(const Family& family, int lambda) {
    DifferenceTable table = family_table(family);
    long long total = 0;
    for (std::size_t a = 1; a < table.counts.size(); ++a) {
        const long long d = table.counts[a] - lambda;
        total += d * d;
    }
    return total;
}

namespace detail {

// Mutable search-side view of a family: membership flags plus the running
// difference table, so a single-element swap is evaluated in O(v) and
// applied in O(k).
struct SearchState {
    int v = 0;
    int lambda = 0;
    std::vector<std::vector<int>> blocks;       // sorted elements per block
    std::vector<std::vector<char>> member;      // membership flags per block
    std::vector<int> table;                     // N_family
    long long fit = 0;
    long long* evaluations = nullptr;

    static SearchState from_blocks(int v, int lambda,
                                   const std::vector<std::vector<int>>& blocks,
                                   long long* evaluations) {
        SearchState st;
        st.v = v;
        st.lambda = lambda;
        st.blocks = blocks;
        st.member.assign(blocks.size(), std::vector<char>(static_cast<std::size_t>(v), 0));
        st.table.assign(static_cast<std::size_t>(v), 0);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (int x : blocks[i]) st.member[i][static_cast<std::size_t>(x)] = 1;
            for (int x : blocks[i])
                for (int y : blocks[i]) {
                    int d = y - x;
                    if (d < 0) d += v;
                    ++st.table[static_cast<std::size_t>(d)];
                }
        }
        st.evaluations = evaluations;
        st.fit = 0;
        for (int a = 1; a < v; ++a) {
            const long long d = st.table[static_cast<std::size_t>(a)] - lambda;
            st.fit += d * d;
        }
        if (st.evaluations) ++*st.evaluations;
        return st;
    }

    Family to_family() const {
        std::vector<Block> bs;
        bs.reserve(blocks.size());
        for (const auto& elems : blocks) bs.emplace_back(Modulus(v), elems);
        return Family(Modulus(v), std::move(bs));
    }

    // fitness change if `out` in block i is replaced by `in`, without mutating
    long long swap_delta(std::size_t i, int out, int in, std::vector<int>& scratch) const {
        scratch.clear();
        long long delta = 0;
        auto touch = [&](int shift, int change) {
            if (shift == 0) return;
            scratch.push_back(shift);
            scratch.push_back(change);
        };
        for (int x : blocks[i]) {
            if (x == out) continue;
            int d1 = x - out;
            if (d1 < 0) d1 += v;
            int d2 = out - x;
            if (d2 < 0) d2 += v;
            touch(d1, -1);
            touch(d2, -1);
            int e1 = x - in;
            if (e1 < 0) e1 += v;
            int e2 = in - x;
            if (e2 < 0) e2 += v;
            touch(e1, +1);
            touch(e2, +1);
        }
        // net change per shift (a shift may be touched several times)
        // small linear pass; shifts list has at most 4(k-1) entries
        for (std::size_t p = 0; p < scratch.size(); p += 2) {
            if (scratch[p] < 0) continue;
            int shift = scratch[p];
            int change = scratch[p + 1];
            for (std::size_t q = p + 2; q < scratch.size(); q += 2) {
                if (scratch[q] == shift) {
                    change += scratch[q + 1];
                    scratch[q] = -1;
                }
            }
            const long long before = table[static_cast<std::size_t>(shift)] - lambda;
            const long long after = before + change;
            delta += after * after - before * before;
        }
        if (evaluations) ++*evaluations;
        return delta;
    }

    void apply_swap(std::size_t i, int out, int in) {
        for (int x : blocks[i]) {
            if (x == out) continue;
            int d1 = x - out;
            if (d1 < 0) d1 += v;
            int d2 = out - x;
            if (d2 < 0) d2 += v;
            --table[static_cast<std::size_t>(d1)];
            --table[static_cast<std::size_t>(d2)];
        }
        auto& elems = blocks[i];
        elems.erase(std::find(elems.begin(), elems.end(), out));
        member[i][static_cast<std::size_t>(out)] = 0;
        for (int x : elems) {
            int e1 = x - in;
            if (e1 < 0) e1 += v;
            int e2 = in - x;
            if (e2 < 0) e2 += v;
            ++table[static_cast<std::size_t>(e1)];
            ++table[static_cast<std::size_t>(e2)];
        }
        elems.insert(std::lower_bound(elems.begin(), elems.end(), in), in);
        member[i][static_cast<std::size_t>(in)] = 1;
        fit = 0;
        for (int a = 1; a < v; ++a) {
            const long long d = table[static_cast<std::size_t>(a)] - lambda;
            fit += d * d;
        }
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        for (const auto& elems : blocks) {
            mix(0xb10c);
            for (int x : elems) mix(static_cast<std::uint64_t>(x) + 1);
        }
        return h;
    }
};

// One pass of best-improvement swaps. Returns when fitness reaches zero, no
// strictly improving swap exists, or the step budget runs out.
inline void local_search_state(SearchState& st, int budget, Rng& rng) {
    std::vector<int> scratch;
    for (int step = 0; step < budget && st.fit > 0; ++step) {
        long long best_delta = 0;
        std::vector<std::tuple<std::size_t, int, int>> best_moves;
        for (std::size_t i = 0; i < st.blocks.size(); ++i) {
            for (int out : st.blocks[i]) {
                for (int in = 0; in < st.v; ++in) {
                    if (st.member[i][static_cast<std::size_t>(in)]) continue;
                    const long long delta = st.swap_delta(i, out, in, scratch);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_moves.clear();
                        best_moves.emplace_back(i, out, in);
                    } else if (delta == best_delta && best_delta < 0) {
                        best_moves.emplace_back(i, out, in);
                    }
                }
            }
        }
        if (best_moves.empty()) break;  // local minimum
        const auto& [bi, bout, bin] =
            best_moves[static_cast<std::size_t>(rng.below(static_cast<int>(best_moves.size())))];
        st.apply_swap(bi, bout, bin);
    }
}

inline std::vector<int> random_block_elems(int v, int k, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + rng.below(v - i);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Best-improvement local search around one candidate; block sizes are
// preserved by every move.
inline Candidate local_search(const Candidate& start, int lambda, int budget, Rng& rng) {
    long long evals = 0;
    std::vector<std::vector<int>> blocks;
    for (const Block& b : start.family.blocks()) blocks.push_back(b.elements());
    detail::SearchState st =
        detail::SearchState::from_blocks(start.family.v(), lambda, blocks, &evals);
    detail::local_search_state(st, budget, rng);
    return Candidate{st.to_family(), st.fit};
}

struct SearchResult {
    std::optional<Family> family;
    SearchStats stats;
};

// Generational memetic search for a difference family with the given
// two-block parameters: tournament selection, per-block uniform set
// crossover repaired to exact sizes, single-swap mutation, and local search
// on every offspring. Islands run in a fixed order with isolated RNG
// streams and ring migration, so results are reproducible from the seed.
inline SearchResult search(const ParameterSet& params, const SearchConfig& config) {
    if (params.block_count() != 2)
        throw std::invalid_argument("search: exactly two block sizes required");
    if (!is_feasible(params)) throw std::invalid_argument("search: infeasible parameters");
    const int v = params.v();
    const int lambda = params.lambda();
    const std::vector<int> sizes{params.r(), params.s()};
    const auto deadline_active = config.time_limit_seconds > 0.0;
    const auto start_time = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (!deadline_active) return false;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_time;
        return elapsed.count() >= config.time_limit_seconds;
    };

    SearchStats stats;
    stats.best_fitness = -1;

    const int islands = std::max(1, config.islands);
    const int pop_size = std::max(2, config.population_size);
    const int migration_epoch = 16;

    for (int run = 0; run <= config.restarts; ++run) {
        std::vector<std::vector<detail::SearchState>> population(
            static_cast<std::size_t>(islands));
        std::vector<Rng> rngs;
        rngs.reserve(static_cast<std::size_t>(islands));
        for (int isl = 0; isl < islands; ++isl)
            rngs.emplace_back(config.rng_seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(
                                                     run * islands + isl + 1));

        auto finish_if_solved = [&](const detail::SearchState& st) -> std::optional<Family> {
            if (st.fit != 0) return std::nullopt;
            Family fam = st.to_family();
            VerificationReport rep = verify_sds(fam);
            if (rep.is_sds && *rep.lambda == lambda) return fam;
            return std::nullopt;
        };

        // seed populations, refining each random individual
        for (int isl = 0; isl < islands; ++isl) {
            Rng& rng = rngs[static_cast<std::size_t>(isl)];
            for (int p = 0; p < pop_size; ++p) {
                std::vector<std::vector<int>> blocks;
                for (int k : sizes) blocks.push_back(detail::random_block_elems(v, k, rng));
                detail::SearchState st =
                    detail::SearchState::from_blocks(v, lambda, blocks, &stats.evaluations);
                detail::local_search_state(st, config.local_search_budget, rng);
                if (stats.best_fitness < 0 || st.fit < stats.best_fitness)
                    stats.best_fitness = st.fit;
                if (auto fam = finish_if_solved(st)) return {std::move(fam), stats};
                population[static_cast<std::size_t>(isl)].push_back(std::move(st));
            }
        }

        for (int gen = 0; gen < config.max_generations; ++gen) {
            if (out_of_time()) return {std::nullopt, stats};
            ++stats.generations;
            for (int isl = 0; isl < islands; ++isl) {
                Rng& rng = rngs[static_cast<std::size_t>(isl)];
                auto& pop = population[static_cast<std::size_t>(isl)];

                auto tournament = [&]() -> const detail::SearchState& {
                    int best = rng.below(pop_size);
                    for (int t = 1; t < 3; ++t) {
                        int c = rng.below(pop_size);
                        if (pop[static_cast<std::size_t>(c)].fit <
                            pop[static_cast<std::size_t>(best)].fit)
                            best = c;
                    }
                    return pop[static_cast<std::size_t>(best)];
                };

                std::vector<detail::SearchState> next;
                next.reserve(static_cast<std::size_t>(pop_size));
                // elitism: carry the current best individual over unchanged
                std::size_t elite = 0;
                for (std::size_t p = 1; p < pop.size(); ++p)
                    if (pop[p].fit < pop[elite].fit) elite = p;
                next.push_back(pop[elite]);

                std::unordered_set<std::uint64_t> seen;
                seen.insert(next.front().hash());

                while (static_cast<int>(next.size()) < pop_size) {
                    const detail::SearchState& pa = tournament();
                    const detail::SearchState& pb = tournament();
                    std::vector<std::vector<int>> child_blocks(sizes.size());
                    if (rng.chance(config.crossover_rate)) {
                        for (std::size_t i = 0; i < sizes.size(); ++i) {
                            const int k = sizes[i];
                            std::vector<char> chosen(static_cast<std::size_t>(v), 0);
                            std::vector<int> pool;
                            for (int x : pa.blocks[i])
                                if (pb.member[i][static_cast<std::size_t>(x)]) {
                                    chosen[static_cast<std::size_t>(x)] = 1;  // in both parents
                                } else {
                                    pool.push_back(x);
                                }
                            for (int x : pb.blocks[i])
                                if (!pa.member[i][static_cast<std::size_t>(x)]) pool.push_back(x);
                            std::vector<int> elems;
                            for (int x = 0; x < v; ++x)
                                if (chosen[static_cast<std::size_t>(x)]) elems.push_back(x);
                            for (int x : pool)
                                if (static_cast<int>(elems.size()) < k && rng.chance(0.5)) {
                                    elems.push_back(x);
                                    chosen[static_cast<std::size_t>(x)] = 1;
                                }
                            // repair to exact size with uniform choices
                            while (static_cast<int>(elems.size()) > k) {
                                int idx = rng.below(static_cast<int>(elems.size()));
                                chosen[static_cast<std::size_t>(elems[static_cast<std::size_t>(
                                    idx)])] = 0;
                                elems.erase(elems.begin() + idx);
                            }
                            while (static_cast<int>(elems.size()) < k) {
                                int x = rng.below(v);
                                if (!chosen[static_cast<std::size_t>(x)]) {
                                    chosen[static_cast<std::size_t>(x)] = 1;
                                    elems.push_back(x);
                                }
                            }
                            std::sort(elems.begin(), elems.end());
                            child_blocks[i] = std::move(elems);
                        }
                    } else {
                        child_blocks = pa.blocks;
                    }

                    detail::SearchState child = detail::SearchState::from_blocks(
                        v, lambda, child_blocks, &stats.evaluations);

                    if (rng.chance(config.mutation_rate)) {
                        std::size_t i = static_cast<std::size_t>(
                            rng.below(static_cast<int>(sizes.size())));
                        if (!child.blocks[i].empty() &&
                            static_cast<int>(child.blocks[i].size()) < v) {
                            int out = child.blocks[i][static_cast<std::size_t>(
                                rng.below(static_cast<int>(child.blocks[i].size())))];
                            int in = rng.below(v);
                            while (child.member[i][static_cast<std::size_t>(in)]) in = rng.below(v);
                            child.apply_swap(i, out, in);
                        }
                    }

                    detail::local_search_state(child, config.local_search_budget, rng);
                    if (stats.best_fitness < 0 || child.fit < stats.best_fitness)
                        stats.best_fitness = child.fit;
                    if (auto fam = finish_if_solved(child)) return {std::move(fam), stats};

                    // population diversity: suppress duplicates, a few tries
                    const std::uint64_t h = child.hash();
                    if (seen.count(h) != 0 && static_cast<int>(next.size()) + 1 < pop_size) {
                        bool replaced = false;
                        for (int attempt = 0; attempt < 4 && !replaced; ++attempt) {
                            std::vector<std::vector<int>> fresh;
                            for (int k : sizes) fresh.push_back(detail::random_block_elems(v, k, rng));
                            detail::SearchState alt = detail::SearchState::from_blocks(
                                v, lambda, fresh, &stats.evaluations);
                            detail::local_search_state(alt, config.local_search_budget, rng);
                            if (stats.best_fitness < 0 || alt.fit < stats.best_fitness)
                                stats.best_fitness = alt.fit;
                            if (auto fam = finish_if_solved(alt)) return {std::move(fam), stats};
                            if (seen.count(alt.hash()) == 0) {
                                child = std::move(alt);
                                replaced = true;
                            }
                        }
                    }
                    seen.insert(child.hash());
                    next.push_back(std::move(child));
                }
                pop = std::move(next);
            }

            // ring migration at fixed epochs: best of the left neighbour
            // replaces the worst individual
            if (islands > 1 && (gen + 1) % migration_epoch == 0) {
                std::vector<detail::SearchState> bests;
                bests.reserve(static_cast<std::size_t>(islands));
                for (auto& pop : population) {
                    std::size_t best = 0;
                    for (std::size_t p = 1; p < pop.size(); ++p)
                        if (pop[p].fit < pop[best].fit) best = p;
                    bests.push_back(pop[best]);
                }
                for (int isl = 0; isl < islands; ++isl) {
                    auto& pop = population[static_cast<std::size_t>(isl)];
                    std::size_t worst = 0;
                    for (std::size_t p = 1; p < pop.size(); ++p)
                        if (pop[p].fit > pop[worst].fit) worst = p;
                    pop[worst] = bests[static_cast<std::size_t>((isl + islands - 1) % islands)];
                }
            }
        }
    }
    return {std::nullopt, stats};
}

}  // namespace sds
