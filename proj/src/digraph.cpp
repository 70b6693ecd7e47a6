#include "assocsel/digraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <random>

#include "assocsel/errors.hpp"

namespace assocsel {

Digraph::Digraph(std::vector<Word> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw PreconditionError("digraph vertex list has duplicates");
    }
    adj_.assign(vertices_.size() * vertices_.size(), 0);
}

std::optional<std::size_t> Digraph::index_of(const Word& w) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
    if (it == vertices_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool Digraph::has_edge(const Word& u, const Word& v) const {
    auto i = index_of(u);
    auto j = index_of(v);
    return i && j && edge(*i, *j);
}

Digraph Digraph::subgraph(std::span<const std::size_t> idx) const {
    std::vector<Word> vs;
    vs.reserve(idx.size());
    for (auto i : idx) vs.push_back(vertices_[i]);
    Digraph out(vs);
    // vs may have been reordered by sorting; map through index_of.
    for (auto i : idx) {
        for (auto j : idx) {
            if (edge(i, j)) out.set_edge(*out.index_of(vertices_[i]), *out.index_of(vertices_[j]));
        }
    }
    return out;
}

Digraph induce(const MultiMap& f, std::span<const Word> v) {
    Digraph g(std::vector<Word>(v.begin(), v.end()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (f.yields(g.vertex(i), g.vertex(j), g.vertex(j))) g.set_edge(i, j);
        }
    }
    return g;
}

GraphClass classify(const Digraph& g) {
    GraphClass c{true, true, true};
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g.edge(i, i)) c = {false, false, false};
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            bool a = g.edge(i, j);
            bool b = g.edge(j, i);
            if (a == b) c.s_tournament = false;
            if (!a && !b) c.complete_digraph = false;
            if (!a || !b) c.strong_clique = false;
        }
    }
    return c;
}

PropertyReport is_transitive(const Digraph& g) {
    PropertyReport rep{"transitive", true, std::nullopt, {}};
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!g.edge(a, b)) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (g.edge(b, c) && !g.edge(a, c)) {
                    rep.pass = false;
                    rep.witness = Witness{{g.vertex(a), g.vertex(b), g.vertex(c)}, {}};
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::vector<std::vector<std::size_t>> strong_components(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    long counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (!g.edge(v, w)) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0) visit(v);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

namespace {

// Shortest path from s to t using only vertices with allowed[v].
std::vector<std::size_t> bfs_path(const Digraph& g, std::size_t s, std::size_t t,
                                  const std::vector<bool>& allowed) {
    std::vector<long> parent(g.size(), -1);
    std::deque<std::size_t> queue{s};
    parent[s] = static_cast<long>(s);
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (v == t) break;
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (allowed[w] && parent[w] < 0 && g.edge(v, w)) {
                parent[w] = static_cast<long>(v);
                queue.push_back(w);
            }
        }
    }
    std::vector<std::size_t> path;
    if (parent[t] < 0) return path;
    for (std::size_t v = t; v != s; v = static_cast<std::size_t>(parent[v])) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_strong_clique(const Digraph& g, std::span<const std::size_t> vs) {
    for (auto i : vs) {
        for (auto j : vs) {
            if (!g.edge(i, j)) return false;
        }
    }
    return true;
}

} // namespace

std::optional<std::vector<Word>> long_cycle(const Digraph& g) {
    std::optional<std::vector<Word>> generic;
    for (const auto& comp : strong_components(g)) {
        if (comp.size() < 2) continue;
        std::vector<bool> allowed(g.size(), false);
        for (auto v : comp) allowed[v] = true;
        for (auto u : comp) {
            for (auto v : comp) {
                if (u == v || g.edge(u, v) || !g.edge(v, u)) continue;
                // u ⇝ v has length ≥ 2, closed by the edge v → u.
                std::vector<Word> cycle;
                for (auto x : bfs_path(g, u, v, allowed)) cycle.push_back(g.vertex(x));
                return cycle;
            }
        }
        if (!generic) {
            std::size_t u = comp[0];
            std::size_t v = comp[1];
            for (auto w : comp) {
                if (w != u && g.edge(u, w)) {
                    v = w;
                    break;
                }
            }
            std::vector<Word> cycle{g.vertex(u)};
            for (auto x : bfs_path(g, v, u, allowed)) {
                if (x != u) cycle.push_back(g.vertex(x));
            }
            generic = std::move(cycle);
        }
    }
    return generic;
}

std::optional<Word> extremal_node(const Digraph& g, End side) {
    for (std::size_t s = 0; s < g.size(); ++s) {
        bool ok = true;
        for (std::size_t u = 0; u < g.size() && ok; ++u) {
            ok = side == End::Source ? g.edge(s, u) : g.edge(u, s);
        }
        if (ok) return g.vertex(s);
    }
    return std::nullopt;
}

CliqueOrder condensation(const Digraph& g) {
    GraphClass c = classify(g);
    if (!c.complete_digraph) {
        throw PreconditionError("condensation needs a complete digraph");
    }
    PropertyReport tr = is_transitive(g);
    if (!tr.pass) {
        throw PreconditionError("condensation needs a transitive edge set: witness " +
                                tr.witness->str());
    }
    auto comps = strong_components(g);
    auto out_degree = [&](std::size_t v) {
        std::size_t d = 0;
        for (std::size_t w = 0; w < g.size(); ++w) d += g.edge(v, w);
        return d;
    };
    std::stable_sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        return out_degree(a[0]) > out_degree(b[0]);
    });
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!is_strong_clique(g, comps[i])) {
            throw InvariantError("component of a transitive complete digraph is not a strong clique");
        }
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            for (auto u : comps[i]) {
                for (auto v : comps[j]) {
                    if (!g.edge(u, v) || g.edge(v, u)) {
                        throw InvariantError("clique order is not strictly forward");
                    }
                }
            }
        }
    }
    CliqueOrder order;
    for (const auto& comp : comps) {
        std::vector<Word> block;
        for (auto v : comp) block.push_back(g.vertex(v));
        order.push_back(std::move(block));
    }
    return order;
}

std::vector<Word> extremal_clique(const Digraph& g, End side) {
    CliqueOrder order = condensation(g);
    if (order.empty()) return {};
    std::vector<Word> block = side == End::Source ? order.front() : order.back();
    std::vector<bool> in(g.size(), false);
    for (const Word& w : block) in[*g.index_of(w)] = true;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (!in[u]) continue;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (in[v]) continue;
            bool out_ok = g.edge(u, v) && !g.edge(v, u);
            bool in_ok = !g.edge(u, v) && g.edge(v, u);
            if (side == End::Source ? !out_ok : !in_ok) {
                throw InvariantError("extremal clique fails its edge-direction property");
            }
        }
    }
    // Maximality: no outside vertex extends the block to a strong clique.
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (in[v]) continue;
        bool extends = true;
        for (std::size_t u = 0; u < g.size() && extends; ++u) {
            if (in[u]) extends = g.edge(u, v) && g.edge(v, u);
        }
        if (extends) throw InvariantError("extremal clique is not maximal");
    }
    return block;
}

std::size_t domination_bound(std::size_t vertices) {
    if (vertices == 0) return 0;
    return static_cast<std::size_t>(std::bit_width(vertices));
}

bool dominates(const Digraph& g, std::span<const Word> d) {
    std::vector<std::size_t> idx;
    for (const Word& w : d) {
        auto i = g.index_of(w);
        if (!i) return false;
        idx.push_back(*i);
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
        bool hit = std::any_of(idx.begin(), idx.end(), [&](std::size_t y) { return g.edge(x, y); });
        if (!hit) return false;
    }
    return true;
}

std::vector<Word> dominating_set(const Digraph& g) {
    if (!classify(g).s_tournament) {
        throw PreconditionError("dominating set needs an s-tournament");
    }
    const std::size_t n = g.size();
    std::vector<bool> remaining(n, true);
    std::size_t left = n;
    std::vector<Word> out;
    while (left > 0) {
        std::size_t best = n;
        std::size_t best_in = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!remaining[v]) continue;
            std::size_t in = 0;
            for (std::size_t x = 0; x < n; ++x) in += remaining[x] && g.edge(x, v);
            if (best == n || in > best_in) {
                best = v;
                best_in = in;
            }
        }
        out.push_back(g.vertex(best));
        for (std::size_t x = 0; x < n; ++x) {
            if (remaining[x] && g.edge(x, best)) {
                remaining[x] = false;
                --left;
            }
        }
    }
    if (!dominates(g, out) || out.size() > domination_bound(n)) {
        throw InvariantError("greedy dominating set violates its guarantee");
    }
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> equivalence_subsets(std::size_t n, std::uint64_t seed) {
    std::vector<std::vector<std::size_t>> subsets;
    if (n <= 12) {
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1U << i)) s.push_back(i);
            }
            subsets.push_back(std::move(s));
        }
        return subsets;
    }
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::size_t> s;
        for (std::size_t i = start; i < n; ++i) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 1000; ++k) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (coin(rng)) s.push_back(i);
        }
        if (s.empty()) s.push_back(pick(rng));
        subsets.push_back(std::move(s));
    }
    return subsets;
}

// Vertices of sub with edges to (Source) or from (Target) all of sub.
std::vector<std::size_t> universal_vertices(const Digraph& g, const std::vector<std::size_t>& sub,
                                            End side) {
    std::vector<std::size_t> out;
    for (auto s : sub) {
        bool ok = std::all_of(sub.begin(), sub.end(), [&](std::size_t u) {
            return side == End::Source ? g.edge(s, u) : g.edge(u, s);
        });
        if (ok) out.push_back(s);
    }
    return out;
}

// Does sub contain a nonempty strong distance-one source (target) clique?
// Any such clique consists exactly of the universal vertices, so it is
// enough to test that set.
bool has_extremal_clique(const Digraph& g, const std::vector<std::size_t>& sub, End side) {
    auto cand = universal_vertices(g, sub, side);
    if (cand.empty() || !is_strong_clique(g, cand)) return false;
    std::vector<bool> in(g.size(), false);
    for (auto c : cand) in[c] = true;
    for (auto u : cand) {
        for (auto v : sub) {
            if (in[v]) continue;
            bool ok = side == End::Source ? (g.edge(u, v) && !g.edge(v, u))
                                          : (!g.edge(u, v) && g.edge(v, u));
            if (!ok) return false;
        }
    }
    for (auto v : sub) {
        if (in[v]) continue;
        bool extends = std::all_of(cand.begin(), cand.end(),
                                   [&](std::size_t u) { return g.edge(u, v) && g.edge(v, u); });
        if (extends) return false;
    }
    return true;
}

} // namespace

EquivalenceReport verify_equivalences(const Digraph& g, std::uint64_t seed) {
    GraphClass c = classify(g);
    EquivalenceReport out;
    if (c.s_tournament) {
        out.family = "s-tournament";
    } else if (c.complete_digraph) {
        out.family = "complete-digraph";
    } else {
        throw PreconditionError("equivalences apply to s-tournaments and complete digraphs only");
    }
    out.statements[0] = is_transitive(g).pass;
    if (c.s_tournament) {
        out.statements[1] = !long_cycle(g).has_value();
    } else {
        out.statements[1] = true;
        for (const auto& comp : strong_components(g)) {
            if (!is_strong_clique(g, comp)) out.statements[1] = false;
        }
    }
    out.statements[2] = true;
    out.statements[3] = true;
    auto subsets = equivalence_subsets(g.size(), seed);
    out.subsets_checked = subsets.size();
    for (const auto& sub : subsets) {
        if (c.s_tournament) {
            if (universal_vertices(g, sub, End::Source).empty()) out.statements[2] = false;
            if (universal_vertices(g, sub, End::Target).empty()) out.statements[3] = false;
        } else {
            if (!has_extremal_clique(g, sub, End::Source)) out.statements[2] = false;
            if (!has_extremal_clique(g, sub, End::Target)) out.statements[3] = false;
        }
    }
    const auto& s = out.statements;
    bool agree = s[0] == s[1] && s[1] == s[2] && s[2] == s[3];
    std::string note;
    for (std::size_t i = 0; i < 4; ++i) {
        note += (i ? " " : "") + std::string("s") + std::to_string(i + 1) + "=" +
                (s[i] ? "true" : "false");
    }
    out.report = PropertyReport{"equivalences(" + out.family + ")", agree, std::nullopt, note};
    return out;
}

std::string to_dot(const Digraph& g, const std::string& name) {
    std::string out = "digraph " + name + " {\n";
    for (const Word& v : g.vertices()) out += "  \"" + v.str() + "\";\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g.edge(i, j)) {
                out += "  \"" + g.vertex(i).str() + "\" -> \"" + g.vertex(j).str() + "\";\n";
            }
        }
    }
    return out + "}\n";
}

} // namespace assocsel
