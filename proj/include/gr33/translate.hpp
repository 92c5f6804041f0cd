// Translation arguments: transporting homomorphisms between infinitesimal
// characters by tensoring with a fundamental module and projecting onto a
// character block.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gr33/tensor.hpp"
#include "gr33/weights.hpp"

namespace gr33 {

struct NotAdjacentCharacters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonUniqueFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CompositionFactor {
    PDomWeight weight;
    InfChar character;
    HalfInt phi;
    PieceLabel piece;
};

// The composition factors of base (x) Lambda^k (or its dual), in
// presentation order, with each factor's character precomputed.
std::vector<CompositionFactor> factors(const PDomWeight& base, int k, bool dual);

enum class TranslationKind { Equisingular, OneWay };

struct CheckedCondition {
    std::string name;
    bool passed;
    std::string note;
};

struct TranslationCertificate {
    TranslationKind kind;
    int module_k;
    std::vector<std::pair<std::string, std::vector<CompositionFactor>>> lists;
    std::vector<CheckedCondition> checked;

    bool valid() const;
    const std::vector<CompositionFactor>* list(const std::string& name) const;
};

// Certifies that a nonzero homomorphism F' -> E' exists iff one F -> E
// does, by tensoring with Lambda^k: each primed module must be the unique
// factor of its character in the unprimed module's product, and conversely
// with the dual, and the splitting order must stay at most two.
TranslationCertificate check_equisingular(const PDomWeight& F, const PDomWeight& E,
                                          const PDomWeight& Fp, const PDomWeight& Ep,
                                          int k);

// Certifies the one-directional argument: an arrow E -> F together with the
// two equicharacter factors on each side forces a nonzero E1 -> F1.
TranslationCertificate check_oneway(const PDomWeight& E, const PDomWeight& F,
                                    const PDomWeight& E1, const PDomWeight& E2,
                                    const PDomWeight& F1, const PDomWeight& F2,
                                    int k);

// Moves a p-dominant weight to an adjacent infinitesimal character: the
// target must differ from the source character by raising or lowering one
// value by 1 (via Lambda^1 / Lambda^5) or both copies of a repeated value
// (via Lambda^2 / Lambda^4), and the product must contain exactly one
// factor of the target character.
PDomWeight translate_node(const PDomWeight& w, const InfChar& target);

std::string certificate_text(const TranslationCertificate& c);

}  // namespace gr33
