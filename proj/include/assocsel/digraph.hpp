#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assocsel/functions.hpp"
#include "assocsel/universe.hpp"

namespace assocsel {

// Directed graph on words with a dense adjacency matrix (self-loops
// included). Vertex order is shortlex.
class Digraph {
public:
    Digraph() = default;
    // Vertices are sorted; duplicates are rejected. No edges.
    explicit Digraph(std::vector<Word> vertices);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Word>& vertices() const { return vertices_; }
    const Word& vertex(std::size_t i) const { return vertices_[i]; }
    std::optional<std::size_t> index_of(const Word& w) const;

    bool edge(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }
    void set_edge(std::size_t i, std::size_t j, bool on = true) {
        adj_[i * size() + j] = on ? 1 : 0;
    }
    bool has_edge(const Word& u, const Word& v) const;

    // Induced subgraph on the given vertex indices.
    Digraph subgraph(std::span<const std::size_t> idx) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::vector<Word> vertices_;
    std::vector<std::uint8_t> adj_;
};

// Edge (x, y) iff y ∈ set-f(x, y): edges point at winners.
Digraph induce(const MultiMap& f, std::span<const Word> v);

struct GraphClass {
    bool s_tournament = false;
    bool complete_digraph = false;
    bool strong_clique = false;
};

GraphClass classify(const Digraph& g);
PropertyReport is_transitive(const Digraph& g);

// Strongly connected components as index lists, each sorted, in order of
// their smallest vertex.
std::vector<std::vector<std::size_t>> strong_components(const Digraph& g);

// A directed cycle through at least two distinct vertices, first vertex
// repeated implicitly. When some component is not a strong clique, the
// returned cycle's vertices do not form a strong clique either.
std::optional<std::vector<Word>> long_cycle(const Digraph& g);

enum class End { Source, Target };

std::optional<Word> extremal_node(const Digraph& g, End side);

using CliqueOrder = std::vector<std::vector<Word>>;

// Maximal strong cliques, minimum (source) first. Requires a complete
// digraph with a transitive edge set.
CliqueOrder condensation(const Digraph& g);
std::vector<Word> extremal_clique(const Digraph& g, End side);

// Greedy maximum in-degree cover of an s-tournament: every vertex x has some
// y in the result with (x, y) an edge. Size ≤ ⌊log₂|V|⌋ + 1.
std::vector<Word> dominating_set(const Digraph& g);
bool dominates(const Digraph& g, std::span<const Word> d);
std::size_t domination_bound(std::size_t vertices);

struct EquivalenceReport {
    PropertyReport report;
    std::string family;  // "s-tournament" or "complete-digraph"
    std::array<bool, 4> statements{};
    std::size_t subsets_checked = 0;
};

// Evaluates the four equivalent statements for s-tournaments or for
// complete digraphs independently; passes iff they agree.
EquivalenceReport verify_equivalences(const Digraph& g, std::uint64_t seed = 1);

std::string to_dot(const Digraph& g, const std::string& name = "G");

} // namespace assocsel
