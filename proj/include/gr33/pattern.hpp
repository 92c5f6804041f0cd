// Homomorphism patterns between parabolic Verma modules sharing an
// infinitesimal character.
//
// Nodes are the p-dominant weights of the character; arrows are the
// standard maps (covers of the Gale order on the selector sets) plus the
// sporadic nonstandard maps that exist for regular and 1-singular
// characters.  2-singular characters carry a single standard arrow and
// characters with a value of multiplicity >= 3 carry none.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gr33/weights.hpp"

namespace gr33 {

struct NotRegular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSing1 : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSing2 : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSingular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ArrowKind { Standard, NonstandardDotted, NonstandardDashed };

const char* arrow_kind_name(ArrowKind k);

struct Node {
    PDomWeight weight;
    // The values of the character selected into the first triple,
    // descending.  For singular characters repeated values are listed once.
    Triple selector{};
};

struct Arrow {
    int src;
    int tgt;
    ArrowKind kind;
    int order;
};

struct Pattern {
    InfChar character;
    std::vector<Node> nodes;
    std::vector<Arrow> arrows;
    // Whether the composition of the two routes around each small square
    // is a nonzero multiple of the identity rather than zero.
    bool cube_diagonal_nontrivial = false;

    int find_node(const PDomWeight& w) const;           // -1 when absent
    const Arrow* find_arrow(int src, int tgt) const;    // nullptr when absent
};

// Covers of the Gale partial order on subsets of a chain: each result
// replaces one selected value by its successor in the universe, provided
// the successor is not already selected.
std::vector<std::pair<std::vector<int>, int>> gale_covers(
    const std::vector<int>& selector, const std::vector<int>& universe);

Pattern regular_pattern(const InfChar& ch);
Pattern sing1_pattern(const InfChar& ch);
Pattern sing2_pattern(const InfChar& ch);
Pattern pattern_of(const InfChar& ch);

// A weight with the repeated values of a singular character deleted from
// both triples.
struct ReducedWeight {
    std::vector<int> first;
    std::vector<int> second;

    friend auto operator<=>(const ReducedWeight&, const ReducedWeight&) = default;
};

ReducedWeight enright_shelton_reduce(const PDomWeight& w);

std::string to_dot(const Pattern& p);

}  // namespace gr33
