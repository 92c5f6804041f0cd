#include "gr33/pattern.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace gr33 {

const char* arrow_kind_name(ArrowKind k) {
    switch (k) {
        case ArrowKind::Standard: return "standard";
        case ArrowKind::NonstandardDotted: return "dotted";
        case ArrowKind::NonstandardDashed: return "dashed";
    }
    return "?";
}

int Pattern::find_node(const PDomWeight& w) const {
    const PDomWeight n = normalize(w);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (normalize(nodes[i].weight) == n) return static_cast<int>(i);
    return -1;
}

const Arrow* Pattern::find_arrow(int src, int tgt) const {
    for (const Arrow& a : arrows)
        if (a.src == src && a.tgt == tgt) return &a;
    return nullptr;
}

std::vector<std::pair<std::vector<int>, int>> gale_covers(
    const std::vector<int>& selector, const std::vector<int>& universe) {
    // Both lists descending.  A cover replaces one selected value by its
    // immediate successor (next larger universe element) when that
    // successor is not already selected; the attached integer is the gap.
    std::vector<std::pair<std::vector<int>, int>> out;
    for (int v : selector) {
        auto it = std::find(universe.begin(), universe.end(), v);
        if (it == universe.begin() || it == universe.end()) continue;
        const int succ = *std::prev(it);
        if (std::find(selector.begin(), selector.end(), succ) != selector.end()) continue;
        std::vector<int> next = selector;
        *std::find(next.begin(), next.end(), v) = succ;
        std::sort(next.begin(), next.end(), std::greater<int>());
        out.emplace_back(std::move(next), succ - v);
    }
    return out;
}

namespace {

int node_by_first(const std::vector<Node>& nodes, const Triple& first) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].weight.first == first) return static_cast<int>(i);
    return -1;
}

std::vector<Node> make_nodes(const InfChar& ch) {
    std::vector<Node> nodes;
    for (const PDomWeight& w : p_dominant_weights_of(ch))
        nodes.push_back(Node{w, w.first});
    return nodes;
}

// Standard arrows: Gale covers on the simple values of the first triple,
// emitted per source node in node order.
void add_standard_arrows(Pattern& p) {
    const std::vector<int> universe = p.character.simple_values();
    const std::vector<int> repeated = p.character.repeated_values();
    for (std::size_t s = 0; s < p.nodes.size(); ++s) {
        std::vector<int> sel;
        for (int v : p.nodes[s].weight.first)
            if (p.character.multiplicity(v) == 1) sel.push_back(v);
        for (const auto& cover : gale_covers(sel, universe)) {
            std::vector<int> merged = cover.first;
            merged.insert(merged.end(), repeated.begin(), repeated.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            const Triple first{merged[0], merged[1], merged[2]};
            const int t = node_by_first(p.nodes, first);
            assert(t >= 0);
            p.arrows.push_back(Arrow{static_cast<int>(s), t, ArrowKind::Standard,
                                     hom_order(p.nodes[s].weight, p.nodes[t].weight)});
        }
    }
}

void add_nonstandard(Pattern& p, std::array<int, 3> src_idx, std::array<int, 3> tgt_idx,
                     ArrowKind kind) {
    const auto& v = p.character.values;
    const Triple sf{v[src_idx[0]], v[src_idx[1]], v[src_idx[2]]};
    const Triple tf{v[tgt_idx[0]], v[tgt_idx[1]], v[tgt_idx[2]]};
    const int s = node_by_first(p.nodes, sf);
    const int t = node_by_first(p.nodes, tf);
    assert(s >= 0 && t >= 0);
    p.arrows.push_back(Arrow{s, t, kind, hom_order(p.nodes[s].weight, p.nodes[t].weight)});
}

}  // namespace

Pattern regular_pattern(const InfChar& ch) {
    if (ch.sing != Singularity::Regular)
        throw NotRegular("regular pattern needs a regular character, got " + ch.str());
    Pattern p;
    p.character = ch;
    p.nodes = make_nodes(ch);
    p.cube_diagonal_nontrivial = true;
    add_standard_arrows(p);
    // Sporadic nonstandard maps, written as index sets into the descending
    // character values: the source and target first triples.
    add_nonstandard(p, {3, 4, 5}, {1, 2, 5}, ArrowKind::NonstandardDotted);
    add_nonstandard(p, {2, 3, 4}, {0, 1, 4}, ArrowKind::NonstandardDotted);
    add_nonstandard(p, {2, 3, 5}, {0, 1, 5}, ArrowKind::NonstandardDotted);
    add_nonstandard(p, {1, 4, 5}, {1, 2, 3}, ArrowKind::NonstandardDotted);
    add_nonstandard(p, {0, 3, 4}, {0, 1, 2}, ArrowKind::NonstandardDotted);
    add_nonstandard(p, {0, 4, 5}, {0, 2, 3}, ArrowKind::NonstandardDotted);
    add_nonstandard(p, {2, 4, 5}, {0, 1, 3}, ArrowKind::NonstandardDashed);
    add_nonstandard(p, {3, 4, 5}, {0, 1, 2}, ArrowKind::NonstandardDashed);
    return p;
}

Pattern sing1_pattern(const InfChar& ch) {
    if (ch.sing != Singularity::Sing1)
        throw NotSing1("six-node pattern needs a 1-singular character, got " + ch.str());
    Pattern p;
    p.character = ch;
    p.nodes = make_nodes(ch);
    add_standard_arrows(p);
    // The one nonstandard map joins the lowest node to the highest.
    p.arrows.push_back(Arrow{5, 0, ArrowKind::NonstandardDotted,
                             hom_order(p.nodes[5].weight, p.nodes[0].weight)});
    return p;
}

Pattern sing2_pattern(const InfChar& ch) {
    if (ch.sing != Singularity::Sing2)
        throw NotSing2("two-node pattern needs a 2-singular character, got " + ch.str());
    Pattern p;
    p.character = ch;
    p.nodes = make_nodes(ch);
    add_standard_arrows(p);
    return p;
}

Pattern pattern_of(const InfChar& ch) {
    switch (ch.sing) {
        case Singularity::Regular: return regular_pattern(ch);
        case Singularity::Sing1: return sing1_pattern(ch);
        case Singularity::Sing2: return sing2_pattern(ch);
        case Singularity::Sing3Plus: break;
    }
    Pattern p;
    p.character = ch;
    p.nodes = make_nodes(ch);
    return p;
}

ReducedWeight enright_shelton_reduce(const PDomWeight& w) {
    const InfChar ch = inf_char(w);
    if (ch.sing == Singularity::Regular || ch.sing == Singularity::Sing3Plus)
        throw NotSingular("reduction applies to 1- and 2-singular weights, got " + ch.str());
    // Compare against the normalized character values.
    const PDomWeight n = normalize(w);
    ReducedWeight out;
    for (int v : n.first)
        if (ch.multiplicity(v) == 1) out.first.push_back(v);
    for (int v : n.second)
        if (ch.multiplicity(v) == 1) out.second.push_back(v);
    return out;
}

std::string to_dot(const Pattern& p) {
    std::ostringstream os;
    os << "digraph pattern {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (const Node& n : p.nodes)
        os << "  \"" << to_string(n.weight) << "\";\n";
    for (const Arrow& a : p.arrows) {
        os << "  \"" << to_string(p.nodes[a.src].weight) << "\" -> \""
           << to_string(p.nodes[a.tgt].weight) << "\" [";
        if (a.kind == ArrowKind::NonstandardDotted) os << "style=dotted,";
        else if (a.kind == ArrowKind::NonstandardDashed) os << "style=dashed,";
        os << "label=" << a.order << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace gr33
