#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "assocsel/digraph.hpp"
#include "assocsel/functions.hpp"
#include "assocsel/universe.hpp"

namespace assocsel {

// Seeded generators for the randomized suites. Everything is Table-backed.
using Rng = std::mt19937_64;

TargetSet random_target_set(const Universe& u, Rng& rng, double density = 0.5);

// Pairs with exactly one member of B select it; every other off-diagonal
// pair gets a uniformly random allowed value. `partial` lets pairs outside
// B be ∅ as well.
MultiMap random_selector(const TargetSet& b, ValueMode mode, bool commutative, bool partial,
                         Rng& rng);

// Within-block behaviour of an ordinal sum.
enum class BlockKind { LeftZero, RightZero, Both };

struct Block {
    std::vector<Word> words;
    BlockKind kind = BlockKind::Both;
};

// Ordinal sum of blocks: a word of a later block beats a word of an earlier
// one; inside a block left-zero gives {x}, right-zero {y}, both {x,y}.
// Associative by construction. Pairs not covered by any block are ∅.
MultiMap ordinal_sum(const Universe& u, const std::vector<Block>& blocks, bool single_valued,
                     std::string name);

// Random total associative function on Σ^{≤N}. When b is given the result
// is a selector for it (members of B sit in the top blocks).
MultiMap random_associative(const Universe& u, ValueMode mode, bool commutative, Rng& rng,
                            const TargetSet* b = nullptr);

// Random function that is total and associative at each length, with
// arbitrary (possibly ∅) values across lengths.
MultiMap random_length_associative(const Universe& u, ValueMode mode, bool commutative, Rng& rng);

// Per-length random total order with members of B on top; across lengths
// members of B win, then the shortlex maximum. Single-valued, commutative,
// associative at each length, and a selector for B.
MultiMap random_order_selector(const TargetSet& b, Rng& rng);

// Vertices are the first n words in shortlex order.
Digraph random_s_tournament(std::size_t n, Rng& rng);

} // namespace assocsel
