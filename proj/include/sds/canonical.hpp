#pragma once

#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "sds/difference.hpp"
#include "sds/zmod.hpp"

namespace sds {

// ---------------------------------------------------------------------------
// block-level images under the elementary transformations

inline Block translate_block(const Block& b, int t) {
    const int v = b.v();
    t = b.modulus().reduce(t);
    if (t == 0) return b;
    std::vector<int> out;
    out.reserve(b.elements().size());
    for (int x : b.elements()) {
        int y = x + t;
        out.push_back(y >= v ? y - v : y);
    }
    return Block(b.modulus(), std::move(out));
}

inline Block multiply_block(const Block& b, int a) {
    const int v = b.v();
    a = b.modulus().reduce(a);
    std::vector<int> out;
    out.reserve(b.elements().size());
    for (int x : b.elements())
        out.push_back(static_cast<int>((static_cast<long long>(a) * x) % v));
    return Block(b.modulus(), std::move(out));
}

inline Block negate_block(const Block& b) {
    const int v = b.v();
    std::vector<int> out;
    out.reserve(b.elements().size());
    for (int x : b.elements()) out.push_back(x == 0 ? 0 : v - x);
    return Block(b.modulus(), std::move(out));
}

inline Block complement_block(const Block& b) {
    const int v = b.v();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(v) - b.elements().size());
    auto it = b.elements().begin();
    for (int x = 0; x < v; ++x) {
        if (it != b.elements().end() && *it == x)
            ++it;
        else
            out.push_back(x);
    }
    return Block(b.modulus(), std::move(out));
}

// X mapped to its symmetric difference with the odd residues (v even).
inline Block dagger_block(const Block& b) {
    const int v = b.v();
    std::vector<int> out;
    for (int x = 0; x < v; ++x)
        if (b.contains(x) != (x % 2 == 1)) out.push_back(x);
    return Block(b.modulus(), std::move(out));
}

// ---------------------------------------------------------------------------
// elementary transformations

struct TranslateBlock {
    int block_index;
    int amount;
};
struct MultiplyAll {
    int unit;
};
struct NegateBlock {
    int block_index;
};
struct ComplementBlock {
    int block_index;
};
struct DaggerAll {};

using ElementaryTransform =
    std::variant<TranslateBlock, MultiplyAll, NegateBlock, ComplementBlock, DaggerAll>;

inline bool is_unit(int a, int v) { return std::gcd(((a % v) + v) % v, v) == 1; }

inline std::vector<int> units_of(int v) {
    std::vector<int> units;
    for (int a = 1; a < v; ++a)
        if (std::gcd(a, v) == 1) units.push_back(a);
    return units;
}

// The dagger map is only defined on difference families with m*v = 4n.
inline bool dagger_applies(const Family& family) {
    if (family.v() % 2 != 0) return false;
    VerificationReport rep = verify_sds(family);
    if (!rep.is_sds) return false;
    return family.block_count() * family.v() == 4 * rep.parameters->order();
}

inline Family apply_transform(const Family& family, const ElementaryTransform& t) {
    const int m = family.block_count();
    auto checked_index = [&](int i) {
        if (i < 0 || i >= m) throw std::invalid_argument("block index out of range");
        return i;
    };
    std::vector<Block> blocks = family.blocks();
    if (const auto* tr = std::get_if<TranslateBlock>(&t)) {
        int i = checked_index(tr->block_index);
        blocks[static_cast<std::size_t>(i)] =
            translate_block(blocks[static_cast<std::size_t>(i)], tr->amount);
    } else if (const auto* mu = std::get_if<MultiplyAll>(&t)) {
        if (!is_unit(mu->unit, family.v()))
            throw std::invalid_argument("multiplier must be invertible mod v");
        for (Block& b : blocks) b = multiply_block(b, mu->unit);
    } else if (const auto* ng = std::get_if<NegateBlock>(&t)) {
        int i = checked_index(ng->block_index);
        blocks[static_cast<std::size_t>(i)] = negate_block(blocks[static_cast<std::size_t>(i)]);
    } else if (const auto* co = std::get_if<ComplementBlock>(&t)) {
        int i = checked_index(co->block_index);
        blocks[static_cast<std::size_t>(i)] =
            complement_block(blocks[static_cast<std::size_t>(i)]);
    } else {
        if (!dagger_applies(family))
            throw std::invalid_argument("dagger requires an even-order family with m*v = 4n");
        for (Block& b : blocks) b = dagger_block(b);
    }
    return Family(family.modulus(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// fixed-shape group elements: dagger, then global multiplier, then per block
// negation, complementation and translation. Every word in the elementary
// transformations reduces to this shape; the test suite checks that claim
// against breadth-first orbit computation.

struct BlockAction {
    bool negate = false;
    bool complement = false;
    int translate = 0;
};

struct GroupElement {
    bool dagger = false;
    int multiplier = 1;
    std::vector<BlockAction> actions;
};

inline Family apply_group_element(const Family& family, const GroupElement& g) {
    if (static_cast<int>(g.actions.size()) != family.block_count())
        throw std::invalid_argument("group element arity mismatch");
    if (!is_unit(g.multiplier, family.v()))
        throw std::invalid_argument("multiplier must be invertible mod v");
    if (g.dagger && !dagger_applies(family))
        throw std::invalid_argument("dagger requires an even-order family with m*v = 4n");
    std::vector<Block> blocks;
    blocks.reserve(family.blocks().size());
    for (int i = 0; i < family.block_count(); ++i) {
        Block b = family.block(i);
        if (g.dagger) b = dagger_block(b);
        if (g.multiplier != 1) b = multiply_block(b, g.multiplier);
        const BlockAction& act = g.actions[static_cast<std::size_t>(i)];
        if (act.negate) b = negate_block(b);
        if (act.complement) b = complement_block(b);
        if (act.translate != 0) b = translate_block(b, act.translate);
        blocks.push_back(std::move(b));
    }
    return Family(family.modulus(), std::move(blocks));
}

// Visits the image of the family under every group element of the fixed
// shape: a in Z_v*, dagger flag, and per block negation x complementation x
// translation. Duplicates are not suppressed.
template <class Visitor>
void for_each_orbit_candidate(const Family& family, Visitor&& visit) {
    const int v = family.v();
    const int m = family.block_count();
    const bool with_dagger = dagger_applies(family);
    GroupElement g;
    g.actions.resize(static_cast<std::size_t>(m));
    for (int delta = 0; delta <= (with_dagger ? 1 : 0); ++delta) {
        g.dagger = delta == 1;
        for (int a : units_of(v)) {
            g.multiplier = a;
            // odometer over per-block (negate, complement, translate)
            std::vector<int> state(static_cast<std::size_t>(m), 0);
            const int per_block = 4 * v;
            while (true) {
                for (int i = 0; i < m; ++i) {
                    int code = state[static_cast<std::size_t>(i)];
                    g.actions[static_cast<std::size_t>(i)] = {
                        (code & 1) != 0, (code & 2) != 0, code >> 2};
                }
                visit(apply_group_element(family, g));
                int i = 0;
                while (i < m && ++state[static_cast<std::size_t>(i)] == per_block) {
                    state[static_cast<std::size_t>(i)] = 0;
                    ++i;
                }
                if (i == m) break;
            }
        }
    }
}

inline std::vector<Family> orbit_candidates(const Family& family) {
    std::vector<Family> out;
    for_each_orbit_candidate(family, [&](const Family& f) { out.push_back(f); });
    return out;
}

// ---------------------------------------------------------------------------
// sigma order on families

inline SigmaVector family_sigma(const Family& family, int depth) {
    std::vector<int> all;
    for (const Block& b : family.blocks())
        all.insert(all.end(), b.elements().begin(), b.elements().end());
    detail::SigmaStream stream(std::move(all), family.v());
    SigmaVector out;
    out.entries.reserve(static_cast<std::size_t>(depth));
    for (int d = 0; d < depth; ++d) {
        stream.advance();
        out.entries.push_back(stream.value());
    }
    return out;
}

// Lexicographic on (sigma_0(fam), ..., sigma_{v-1}(fam)). A preorder: equal
// sigma prefixes do not force equal families, hence the weak ordering.
inline std::weak_ordering compare_families(const Family& x, const Family& y) {
    if (!(x.modulus() == y.modulus()) || x.block_count() != y.block_count())
        throw std::invalid_argument("compare_families: shape mismatch");
    const int v = x.v();
    std::vector<int> xs, ys;
    for (const Block& b : x.blocks()) xs.insert(xs.end(), b.elements().begin(), b.elements().end());
    for (const Block& b : y.blocks()) ys.insert(ys.end(), b.elements().begin(), b.elements().end());
    detail::SigmaStream sx(std::move(xs), v), sy(std::move(ys), v);
    for (int d = 0; d < v; ++d) {
        sx.advance();
        sy.advance();
        if (auto c = compare_current(sx, sy); c != 0)
            return c < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
    }
    return std::weak_ordering::equivalent;
}

// ---------------------------------------------------------------------------
// normal form

struct NormalFormResult {
    Family representative;
    SigmaVector sigma;
    bool unique_up_to_permutation = false;
    int minimal_set_size = 0;
};

namespace detail {

inline std::vector<int> encode_family(const Family& f) {
    std::vector<int> key;
    key.push_back(f.v());
    for (const Block& b : f.blocks()) key.push_back(b.size());
    for (const Block& b : f.blocks())
        key.insert(key.end(), b.elements().begin(), b.elements().end());
    return key;
}

// sigma-minimal translate; for a nonempty block the minimum contains 0, so
// only translates placing some element at 0 can compete.
inline Block min_translate_block(const Block& b) {
    if (b.empty()) return b;
    std::optional<Block> best;
    for (int x : b.elements()) {
        Block cand = translate_block(b, -x);
        if (!best || compare_blocks(cand, *best) < 0) best = std::move(cand);
    }
    return *best;
}

struct MinimalOrbit {
    SigmaVector sigma;                                // full depth-v sigma of the minimum
    std::map<std::vector<int>, Family> minimizers;    // ordered tuples achieving it
};

// Scans the orbit for sigma-minimal ordered tuples. Translations separate:
// the family sigma vector is the sum of per-block sigma vectors and the
// per-block translations are independent, so within each choice of dagger,
// multiplier, negations and complements the lexicographic minimum is the
// tuple of per-block sigma-minimal translates. This yields exactly one
// candidate per choice and the global scan over all choices is exhaustive.
inline MinimalOrbit minimal_orbit_set(const Family& family) {
    const int v = family.v();
    const int m = family.block_count();
    const bool with_dagger = dagger_applies(family);

    MinimalOrbit result;
    bool have_best = false;

    for (int delta = 0; delta <= (with_dagger ? 1 : 0); ++delta) {
        std::vector<Block> base;
        base.reserve(static_cast<std::size_t>(m));
        for (const Block& b : family.blocks())
            base.push_back(delta ? dagger_block(b) : b);
        for (int a : units_of(v)) {
            // per block and per (negate, complement) choice: minimal translate
            std::vector<std::array<Block, 4>> choice;
            choice.reserve(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                Block mult = multiply_block(base[static_cast<std::size_t>(i)], a);
                Block neg = negate_block(mult);
                choice.push_back({min_translate_block(mult), min_translate_block(neg),
                                  min_translate_block(complement_block(mult)),
                                  min_translate_block(complement_block(neg))});
            }
            std::vector<int> combo(static_cast<std::size_t>(m), 0);
            while (true) {
                std::vector<Block> blocks;
                blocks.reserve(static_cast<std::size_t>(m));
                std::vector<int> all_elems;
                for (int i = 0; i < m; ++i) {
                    const Block& b =
                        choice[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                            combo[static_cast<std::size_t>(i)])];
                    blocks.push_back(b);
                    all_elems.insert(all_elems.end(), b.elements().begin(), b.elements().end());
                }

                detail::SigmaStream stream(std::move(all_elems), v);
                int verdict = 0;  // -1 better, 0 tie, +1 worse
                std::vector<Natural> prefix;
                for (int d = 0; d < v; ++d) {
                    stream.advance();
                    if (have_best) {
                        auto c = stream.compare_current_to(
                            result.sigma.entries[static_cast<std::size_t>(d)]);
                        if (c != 0) {
                            verdict = c < 0 ? -1 : 1;
                            break;
                        }
                    } else {
                        prefix.push_back(stream.value());
                    }
                }
                if (verdict != 1) {
                    Family cand(family.modulus(), std::move(blocks));
                    if (!have_best) {
                        result.sigma.entries = std::move(prefix);
                        have_best = true;
                    } else if (verdict == -1) {
                        result.sigma = family_sigma(cand, v);
                        result.minimizers.clear();
                    }
                    result.minimizers.emplace(encode_family(cand), std::move(cand));
                }

                int i = 0;
                while (i < m && ++combo[static_cast<std::size_t>(i)] == 4) {
                    combo[static_cast<std::size_t>(i)] = 0;
                    ++i;
                }
                if (i == m) break;
            }
        }
    }
    return result;
}

// Preference among sigma-minimal ordered tuples, position by position:
// the larger block first, ties by ascending subset order. The chosen
// representative is always an actual member of the orbit; blocks are never
// reordered out of it.
inline bool tuple_preferred(const Family& a, const Family& b) {
    for (int i = 0; i < a.block_count(); ++i) {
        const Block& x = a.block(i);
        const Block& y = b.block(i);
        if (x.size() != y.size()) return x.size() > y.size();
        if (auto c = compare_blocks(x, y); c != 0) return c < 0;
    }
    return false;
}

}  // namespace detail

inline NormalFormResult normal_form(const Family& family) {
    if (!verify_sds(family).is_sds)
        throw std::invalid_argument("normal_form: not a difference family");
    detail::MinimalOrbit orbit = detail::minimal_orbit_set(family);

    // unique up to permutation <=> all minimizers share one block multiset
    std::optional<std::set<std::vector<int>>> multiset;
    bool unique = true;
    for (const auto& [key, fam] : orbit.minimizers) {
        std::set<std::vector<int>> cur;
        for (const Block& b : fam.blocks()) cur.insert(b.elements());
        if (!multiset)
            multiset = std::move(cur);
        else if (cur != *multiset)
            unique = false;
    }

    std::optional<Family> best;
    for (const auto& [key, fam] : orbit.minimizers)
        if (!best || detail::tuple_preferred(fam, *best)) best = fam;

    return NormalFormResult{*best, std::move(orbit.sigma), unique,
                            static_cast<int>(orbit.minimizers.size())};
}

// True when the family itself achieves the minimal sigma vector of its
// orbit, i.e. it is a normal form up to the block permutation that the
// definition leaves free.
inline bool is_normal_form(const Family& family) {
    if (!verify_sds(family).is_sds) return false;
    detail::MinimalOrbit orbit = detail::minimal_orbit_set(family);
    return orbit.minimizers.count(detail::encode_family(family)) != 0;
}

inline bool are_equivalent(const Family& x, const Family& y) {
    if (x.v() != y.v() || x.block_count() != y.block_count())
        throw std::invalid_argument("are_equivalent: shape mismatch");
    if (!verify_sds(x).is_sds || !verify_sds(y).is_sds)
        throw std::invalid_argument("are_equivalent: not a difference family");
    detail::MinimalOrbit mx = detail::minimal_orbit_set(x);
    detail::MinimalOrbit my = detail::minimal_orbit_set(y);
    for (const auto& [key, fam] : mx.minimizers)
        if (my.minimizers.count(key) != 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// exhaustive class enumeration for two-block parameter sets at small v

namespace detail {

// all size-k subsets of Z_v containing 0 that are sigma-minimal within their
// own orbit under translation and negation
inline std::vector<Block> canonical_first_blocks(int v, int k) {
    std::vector<Block> out;
    if (k == 0) {
        out.push_back(Block(Modulus(v), {}));
        return out;
    }
    std::vector<int> pick(static_cast<std::size_t>(k - 1));
    std::iota(pick.begin(), pick.end(), 1);
    const Modulus mod(v);
    while (true) {
        std::vector<int> elems;
        elems.reserve(static_cast<std::size_t>(k));
        elems.push_back(0);
        elems.insert(elems.end(), pick.begin(), pick.end());
        Block b(mod, std::move(elems));
        Block cand = min_translate_block(b);
        Block cand_neg = min_translate_block(negate_block(b));
        const Block& least = compare_blocks(cand_neg, cand) < 0 ? cand_neg : cand;
        if (b == least) out.push_back(std::move(b));

        // next (k-1)-combination of {1, ..., v-1}
        int i = k - 2;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == v - (k - 1) + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k - 1; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::vector<Block> all_blocks_of_size(int v, int k) {
    std::vector<Block> out;
    const Modulus mod(v);
    if (k == 0) {
        out.push_back(Block(mod, {}));
        return out;
    }
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.push_back(Block(mod, pick));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == v - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

// One normal-form representative per equivalence class that contains a
// family with the given two-block parameters. The first block is pinned to
// its translation/negation-minimal position; the remaining symmetries are
// quotiented out when deduplicating by normal form.
inline std::vector<NormalFormResult> enumerate_classes(const ParameterSet& params) {
    if (params.block_count() != 2)
        throw std::invalid_argument("enumerate_classes: exactly two blocks required");
    if (!is_feasible(params))
        throw std::invalid_argument("enumerate_classes: infeasible parameters");
    const int v = params.v();
    const int r = params.r();
    const int s = params.s();
    const int lambda = params.lambda();

    std::vector<Block> firsts = detail::canonical_first_blocks(v, r);
    std::vector<Block> seconds = detail::all_blocks_of_size(v, s);

    std::vector<std::vector<int>> first_tables, second_tables;
    first_tables.reserve(firsts.size());
    for (const Block& b : firsts) first_tables.push_back(difference_table(b).counts);
    second_tables.reserve(seconds.size());
    for (const Block& b : seconds) second_tables.push_back(difference_table(b).counts);

    std::map<std::vector<int>, NormalFormResult> classes;
    for (std::size_t i = 0; i < firsts.size(); ++i) {
        const std::vector<int>& t1 = first_tables[i];
        for (std::size_t j = 0; j < seconds.size(); ++j) {
            const std::vector<int>& t2 = second_tables[j];
            bool ok = true;
            for (int a = 1; a < v; ++a) {
                if (t1[static_cast<std::size_t>(a)] + t2[static_cast<std::size_t>(a)] != lambda) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Family fam(Modulus(v), {firsts[i], seconds[j]});
            NormalFormResult nf = normal_form(fam);
            classes.emplace(detail::encode_family(nf.representative), std::move(nf));
        }
    }

    std::vector<NormalFormResult> out;
    out.reserve(classes.size());
    for (auto& [key, nf] : classes) out.push_back(std::move(nf));
    return out;
}

}  // namespace sds
