// Tensor product decompositions of a parabolic Verma module with the
// fundamental representations Lambda^k C^6 and their duals.
//
// The composition series of Lambda^k restricted to the Levi factor
// sl(3) x sl(3) x C splits into pieces Lambda^i (x) Lambda^j with i+j=k;
// tensoring a highest-weight module by each piece is multiplicity-free and
// is computed by the two-sided Pieri rule on strictly decreasing triples.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gr33/weights.hpp"

namespace gr33 {

struct BadK : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lambda^k C^6 for k in 1..5; the dual of Lambda^k is Lambda^(6-k).
struct FundamentalModule {
    int k;

    explicit FundamentalModule(int k_);
    int dual_k() const { return 6 - k; }
};

// One piece Lambda^i (x) Lambda^j of the restriction to the Levi factor.
struct PieceLabel {
    int i;
    int j;

    friend constexpr auto operator<=>(const PieceLabel&, const PieceLabel&) = default;
};

// Pieces of Lambda^k with i+j=k, listed with descending i.
std::vector<PieceLabel> comp_series(int k);

// Every strictly decreasing triple obtained from t by adding 1 to exactly
// j of its entries, in descending lexicographic order.
std::vector<Triple> pieri_sl3(const Triple& t, int j);

struct Summand {
    PDomWeight weight;
    PieceLabel piece;
    HalfInt phi;
};

struct Decomposition {
    PDomWeight base;
    FundamentalModule module;
    bool dual;
    std::vector<Summand> summands;
};

// Composition factors of base (x) Lambda^k, grouped by piece (descending i)
// and in descending lexicographic order within each piece.
Decomposition tensor_with_fundamental(const PDomWeight& base, int k);

// Composition factors of base (x) (Lambda^k)^*.  The dual of Lambda^k is
// Lambda^(6-k) up to a determinant twist, so the summands are returned as
// the raw Lambda^(6-k) factors; any statement about them is invariant
// under the (1,...,1) shift, so compare weights mod shift.
Decomposition tensor_with_dual(const PDomWeight& base, int k);

// The same summands with every weight shifted by c.
std::vector<Summand> shifted_summands(const std::vector<Summand>& s, int c);

// Dimension of the irreducible sl(3) module with strictly decreasing
// shifted highest weight t (Weyl dimension formula).
long long dim_sl3(const Triple& t);

std::string decomposition_text(const Decomposition& d);

}  // namespace gr33
