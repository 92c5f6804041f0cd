#include "gr33/tensor.hpp"

#include <bit>
#include <sstream>

namespace gr33 {

FundamentalModule::FundamentalModule(int k_) : k(k_) {
    if (k < 1 || k > 5) throw BadK("fundamental module index must be in 1..5, got " + std::to_string(k));
}

std::vector<PieceLabel> comp_series(int k) {
    if (k < 1 || k > 5) throw BadK("composition series defined for k in 1..5, got " + std::to_string(k));
    std::vector<PieceLabel> out;
    for (int i = 3; i >= 0; --i) {
        const int j = k - i;
        if (j < 0 || j > 3) continue;
        out.push_back(PieceLabel{i, j});
    }
    return out;
}

std::vector<Triple> pieri_sl3(const Triple& t, int j) {
    if (j < 0 || j > 3) throw BadK("pieri step must add to 0..3 positions, got " + std::to_string(j));
    std::vector<Triple> out;
    // Ascending masks with bit p <-> position p enumerate the results in
    // descending lexicographic order within a fixed popcount.
    for (unsigned mask = 0; mask < 8; ++mask) {
        if (std::popcount(mask) != j) continue;
        Triple r = t;
        for (int p = 0; p < 3; ++p)
            if (mask & (1u << p)) ++r[p];
        if (r[0] > r[1] && r[1] > r[2]) out.push_back(r);
    }
    return out;
}

namespace {

std::vector<Summand> expand(const PDomWeight& base, int effective_k) {
    std::vector<Summand> out;
    for (const PieceLabel piece : comp_series(effective_k)) {
        const auto firsts = pieri_sl3(base.first, piece.i);
        const auto seconds = pieri_sl3(base.second, piece.j);
        for (const Triple& f : firsts)
            for (const Triple& s : seconds) {
                PDomWeight w(f, s);
                out.push_back(Summand{w, piece, phi(w)});
            }
    }
    return out;
}

}  // namespace

Decomposition tensor_with_fundamental(const PDomWeight& base, int k) {
    FundamentalModule mod(k);
    return Decomposition{base, mod, false, expand(base, k)};
}

Decomposition tensor_with_dual(const PDomWeight& base, int k) {
    FundamentalModule mod(k);
    return Decomposition{base, mod, true, expand(base, mod.dual_k())};
}

std::vector<Summand> shifted_summands(const std::vector<Summand>& s, int c) {
    std::vector<Summand> out;
    out.reserve(s.size());
    for (const Summand& x : s)
        out.push_back(Summand{shifted(x.weight, c), x.piece, x.phi});
    return out;
}

long long dim_sl3(const Triple& t) {
    const long long a = t[0] - t[1];
    const long long b = t[1] - t[2];
    const long long c = t[0] - t[2];
    return a * b * c / 2;
}

std::string decomposition_text(const Decomposition& d) {
    std::ostringstream os;
    os << to_string(d.base) << (d.dual ? " (x) dual L" : " (x) L") << d.module.k << "\n";
    for (const Summand& s : d.summands)
        os << to_string(s.weight) << " piece=(" << s.piece.i << "," << s.piece.j << ")"
           << " phi=" << s.phi.str() << "\n";
    return os.str();
}

}  // namespace gr33
