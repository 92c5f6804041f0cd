#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gr33/tensor.hpp"
#include "gr33/weights.hpp"
#include "helpers.hpp"

using namespace gr33;

namespace {

// Gelfand-Tsetlin pattern count for the irreducible sl(3) module whose
// shifted highest weight is the strict triple t: with lambda = t - (2,1,0),
// the number of patterns is sum over lambda2 <= x <= lambda1,
// lambda3 <= y <= lambda2 of (x - y + 1).
long long gt_dimension(const Triple& t) {
    const long long l1 = t[0] - 2;
    const long long l2 = t[1] - 1;
    const long long l3 = t[2];
    long long count = 0;
    for (long long x = l2; x <= l1; ++x)
        for (long long y = l3; y <= l2; ++y) count += x - y + 1;
    return count;
}

// Brute-force two-sided Pieri step: add 1 to exactly j entries in every
// possible way and keep the strictly decreasing results.
std::set<Triple> pieri_oracle(const Triple& t, int j) {
    std::set<Triple> out;
    for (int mask = 0; mask < 8; ++mask) {
        int bits = 0;
        for (int b = 0; b < 3; ++b) bits += (mask >> b) & 1;
        if (bits != j) continue;
        Triple r = t;
        for (int b = 0; b < 3; ++b)
            if ((mask >> b) & 1) ++r[static_cast<std::size_t>(b)];
        if (r[0] > r[1] && r[1] > r[2]) out.insert(r);
    }
    return out;
}

long long weight_dim(const PDomWeight& w) {
    return dim_sl3(w.first) * dim_sl3(w.second);
}

long long binom6(int k) {
    const long long row[7] = {1, 6, 15, 20, 15, 6, 1};
    return row[k];
}

}  // namespace

TEST_CASE("composition series of the fundamental modules") {
    const std::size_t lengths[6] = {0, 2, 3, 4, 3, 2};
    for (int k = 1; k <= 5; ++k) {
        const auto pieces = comp_series(k);
        CHECK(pieces.size() == lengths[k]);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            CHECK(pieces[i].i + pieces[i].j == k);
            CHECK(pieces[i].i >= 0);
            CHECK(pieces[i].i <= 3);
            CHECK(pieces[i].j >= 0);
            CHECK(pieces[i].j <= 3);
            if (i > 0) CHECK(pieces[i - 1].i > pieces[i].i);
        }
    }
    CHECK_THROWS_AS(comp_series(0), BadK);
    CHECK_THROWS_AS(comp_series(6), BadK);
    CHECK_THROWS_AS(FundamentalModule(-1), BadK);
    CHECK(FundamentalModule(2).dual_k() == 4);
}

TEST_CASE("pieri rule on strict triples matches brute force") {
    std::mt19937 rng(7101);
    for (int iter = 0; iter < 400; ++iter) {
        const Triple t = testutil::random_strict_triple(rng, -6, 12);
        for (int j = 0; j <= 3; ++j) {
            const auto got = pieri_sl3(t, j);
            const auto want = pieri_oracle(t, j);
            CHECK(got.size() == want.size());
            CHECK(std::set<Triple>(got.begin(), got.end()) == want);
            CHECK(std::is_sorted(got.begin(), got.end(),
                                 [](const Triple& a, const Triple& b) { return b < a; }));
        }
    }
}

TEST_CASE("sl(3) dimension matches the pattern count") {
    CHECK(dim_sl3(Triple{2, 1, 0}) == 1);
    CHECK(dim_sl3(Triple{3, 1, 0}) == 3);
    CHECK(dim_sl3(Triple{3, 2, 0}) == 3);
    CHECK(dim_sl3(Triple{4, 2, 0}) == 8);
    std::mt19937 rng(7102);
    for (int iter = 0; iter < 400; ++iter) {
        const Triple t = testutil::random_strict_triple(rng, -10, 20);
        CHECK(dim_sl3(t) == gt_dimension(t));
        const Triple s{t[0] + 5, t[1] + 5, t[2] + 5};
        CHECK(dim_sl3(s) == dim_sl3(t));
    }
}

TEST_CASE("decomposition of a known product") {
    const Decomposition d = tensor_with_fundamental(parse_pdom("(310|210)"), 2);
    CHECK(d.module.k == 2);
    CHECK(!d.dual);
    REQUIRE(d.summands.size() == 5);
    const char* expect[5] = {"(420|210)", "(321|210)", "(410|310)", "(320|310)", "(310|320)"};
    const PieceLabel pieces[5] = {{2, 0}, {2, 0}, {1, 1}, {1, 1}, {0, 2}};
    for (int i = 0; i < 5; ++i) {
        CHECK(to_string(d.summands[static_cast<std::size_t>(i)].weight) == expect[i]);
        CHECK(d.summands[static_cast<std::size_t>(i)].piece == pieces[i]);
    }
    const std::string text = decomposition_text(d);
    CHECK(text.find("(310|210) (x) L2") == 0);
    CHECK(text.find("(321|210) piece=(2,0)") != std::string::npos);
}

TEST_CASE("dual products are presented as raw complementary factors") {
    const Decomposition d = tensor_with_dual(parse_pdom("(321|210)"), 2);
    CHECK(d.module.k == 2);
    CHECK(d.dual);
    REQUIRE(d.summands.size() == 3);
    const char* expect[3] = {"(432|310)", "(431|320)", "(421|321)"};
    for (int i = 0; i < 3; ++i)
        CHECK(to_string(d.summands[static_cast<std::size_t>(i)].weight) == expect[i]);

    std::mt19937 rng(7103);
    for (int iter = 0; iter < 100; ++iter) {
        const PDomWeight w = testutil::random_pdom(rng);
        for (int k = 1; k <= 5; ++k) {
            const Decomposition dual = tensor_with_dual(w, k);
            const Decomposition raw = tensor_with_fundamental(w, 6 - k);
            REQUIRE(dual.summands.size() == raw.summands.size());
            for (std::size_t i = 0; i < raw.summands.size(); ++i)
                CHECK(dual.summands[i].weight == raw.summands[i].weight);
        }
    }
}

TEST_CASE("shifted summand presentation") {
    const Decomposition d = tensor_with_dual(parse_pdom("(321|210)"), 2);
    const auto shifted_list = shifted_summands(d.summands, -1);
    REQUIRE(shifted_list.size() == d.summands.size());
    for (std::size_t i = 0; i < shifted_list.size(); ++i) {
        CHECK(shifted_list[i].weight == shifted(d.summands[i].weight, -1));
        CHECK(normalize(shifted_list[i].weight) == normalize(d.summands[i].weight));
    }
}

TEST_CASE("dimension conservation across the decomposition") {
    std::mt19937 rng(7104);
    for (int iter = 0; iter < 1500; ++iter) {
        const PDomWeight w = testutil::random_pdom(rng);
        for (int k = 1; k <= 5; ++k) {
            const Decomposition d = tensor_with_fundamental(w, k);
            long long total = 0;
            for (const Summand& s : d.summands) total += weight_dim(s.weight);
            CHECK(total == weight_dim(w) * binom6(k));
        }
    }
}

TEST_CASE("degree shift per piece and multiplicity freeness") {
    std::mt19937 rng(7105);
    for (int iter = 0; iter < 400; ++iter) {
        const PDomWeight w = testutil::random_pdom(rng);
        for (int k = 1; k <= 5; ++k) {
            const Decomposition d = tensor_with_fundamental(w, k);
            std::set<PDomWeight> seen;
            for (const Summand& s : d.summands) {
                CHECK(s.phi - phi(w) == HalfInt::halves(s.piece.i - s.piece.j));
                CHECK(s.phi == phi(s.weight));
                CHECK(seen.insert(s.weight).second);
            }
            auto piece_start = d.summands.begin();
            while (piece_start != d.summands.end()) {
                auto piece_end = piece_start;
                while (piece_end != d.summands.end() && piece_end->piece == piece_start->piece)
                    ++piece_end;
                CHECK(std::is_sorted(piece_start, piece_end,
                                     [](const Summand& a, const Summand& b) {
                                         return b.weight < a.weight;
                                     }));
                piece_start = piece_end;
            }
        }
    }
}
