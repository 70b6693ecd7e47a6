#include "assocsel/generators.hpp"

#include <algorithm>

namespace assocsel {

TargetSet random_target_set(const Universe& u, Rng& rng, double density) {
    TargetSet b(u);
    std::bernoulli_distribution coin(density);
    for (const Word& w : words_up_to(u.max_len())) {
        if (coin(rng)) b.insert(w);
    }
    return b;
}

MultiMap random_selector(const TargetSet& b, ValueMode mode, bool commutative, bool partial,
                         Rng& rng) {
    const Universe& u = b.universe();
    MultiMap m = MultiMap::empty_table(u, mode == ValueMode::Single, "random-selector");
    auto words = words_up_to(u.max_len());
    std::vector<ValueSet> choices{ValueSet::x(), ValueSet::y()};
    if (mode == ValueMode::Multi) choices.push_back(ValueSet::xy());
    std::vector<ValueSet> outside = choices;
    if (partial) outside.push_back(ValueSet::none());
    for (const Word& x : words) {
        for (const Word& y : words) {
            if (x == y) {
                if (partial && !b.contains(x) && std::bernoulli_distribution(0.25)(rng)) {
                    m.set(x, y, ValueSet::none());
                }
                continue;
            }
            if (commutative && y < x) continue;
            const bool bx = b.contains(x);
            const bool by = b.contains(y);
            ValueSet v;
            if (bx != by) {
                v = bx ? ValueSet::x() : ValueSet::y();
            } else {
                const auto& pool = (bx || !partial) ? choices : outside;
                v = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            }
            m.set(x, y, v);
            if (commutative) m.set(y, x, v.swapped());
        }
    }
    return m;
}

MultiMap ordinal_sum(const Universe& u, const std::vector<Block>& blocks, bool single_valued,
                     std::string name) {
    MultiMap m = MultiMap::empty_table(u, single_valued, std::move(name));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& bi = blocks[i];
        for (const Word& x : bi.words) {
            for (const Word& y : bi.words) {
                if (x == y) continue;
                switch (bi.kind) {
                case BlockKind::LeftZero: m.set(x, y, ValueSet::x()); break;
                case BlockKind::RightZero: m.set(x, y, ValueSet::y()); break;
                case BlockKind::Both: m.set(x, y, ValueSet::xy()); break;
                }
            }
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                for (const Word& y : blocks[j].words) {
                    m.set(x, y, ValueSet::y());
                    m.set(y, x, ValueSet::x());
                }
            }
        }
    }
    return m;
}

namespace {

// Splits words (in random order) into consecutive random-size blocks.
std::vector<Block> random_blocks(std::vector<Word> words, ValueMode mode, bool commutative,
                                 Rng& rng) {
    std::shuffle(words.begin(), words.end(), rng);
    std::vector<Block> blocks;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t size = 1;
        // Commutative single-valued sums are chains.
        if (!(commutative && mode == ValueMode::Single)) {
            size = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        }
        size = std::min(size, words.size() - i);
        Block block;
        block.words.assign(words.begin() + static_cast<long>(i),
                           words.begin() + static_cast<long>(i + size));
        std::vector<BlockKind> kinds;
        if (mode == ValueMode::Multi) kinds.push_back(BlockKind::Both);
        if (!commutative) {
            kinds.push_back(BlockKind::LeftZero);
            kinds.push_back(BlockKind::RightZero);
        }
        if (kinds.empty()) kinds.push_back(BlockKind::Both);  // singletons only
        block.kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
        blocks.push_back(std::move(block));
        i += size;
    }
    return blocks;
}

} // namespace

MultiMap random_associative(const Universe& u, ValueMode mode, bool commutative, Rng& rng,
                            const TargetSet* b) {
    auto words = words_up_to(u.max_len());
    std::vector<Block> blocks;
    if (b) {
        std::vector<Word> in, out;
        for (const Word& w : words) (b->contains(w) ? in : out).push_back(w);
        blocks = random_blocks(out, mode, commutative, rng);
        auto top = random_blocks(in, mode, commutative, rng);
        blocks.insert(blocks.end(), top.begin(), top.end());
    } else {
        blocks = random_blocks(words, mode, commutative, rng);
    }
    return ordinal_sum(u, blocks, mode == ValueMode::Single, "random-associative");
}

MultiMap random_length_associative(const Universe& u, ValueMode mode, bool commutative, Rng& rng) {
    MultiMap m = MultiMap::empty_table(u, mode == ValueMode::Single, "random-length-associative");
    for (unsigned n = 0; n <= u.max_len(); ++n) {
        auto blocks = random_blocks(words_of_length(n), mode, commutative, rng);
        MultiMap part = ordinal_sum(u, blocks, mode == ValueMode::Single, "");
        for (const Word& x : words_of_length(n)) {
            for (const Word& y : words_of_length(n)) m.set(x, y, part.eval(x, y));
        }
    }
    std::vector<ValueSet> choices{ValueSet::none(), ValueSet::x(), ValueSet::y()};
    if (mode == ValueMode::Multi) choices.push_back(ValueSet::xy());
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    auto words = words_up_to(u.max_len());
    for (const Word& x : words) {
        for (const Word& y : words) {
            if (x.length() == y.length() || (commutative && y < x)) continue;
            ValueSet v = choices[pick(rng)];
            m.set(x, y, v);
            if (commutative) m.set(y, x, v.swapped());
        }
    }
    return m;
}

MultiMap random_order_selector(const TargetSet& b, Rng& rng) {
    const Universe& u = b.universe();
    MultiMap m = MultiMap::empty_table(u, true, "random-order-selector");
    auto words = words_up_to(u.max_len());
    std::vector<std::size_t> pos(u.size());
    for (unsigned n = 0; n <= u.max_len(); ++n) {
        std::vector<Word> in, out;
        for (const Word& w : words_of_length(n)) (b.contains(w) ? in : out).push_back(w);
        std::shuffle(in.begin(), in.end(), rng);
        std::shuffle(out.begin(), out.end(), rng);
        out.insert(out.end(), in.begin(), in.end());
        for (std::size_t i = 0; i < out.size(); ++i) pos[out[i].rank()] = i;
    }
    for (const Word& x : words) {
        for (const Word& y : words) {
            if (x == y) continue;
            bool x_wins;
            if (x.length() == y.length()) {
                x_wins = pos[x.rank()] > pos[y.rank()];
            } else if (b.contains(x) != b.contains(y)) {
                x_wins = b.contains(x);
            } else {
                x_wins = y < x;
            }
            m.set(x, y, x_wins ? ValueSet::x() : ValueSet::y());
        }
    }
    return m;
}

Digraph random_s_tournament(std::size_t n, Rng& rng) {
    std::vector<Word> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(Word::from_rank(i));
    Digraph g(vs);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        g.set_edge(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                g.set_edge(i, j);
            } else {
                g.set_edge(j, i);
            }
        }
    }
    return g;
}

} // namespace assocsel
