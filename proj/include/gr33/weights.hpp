// Weight arithmetic for sl(6) with the parabolic of type (3,3).
//
// Weights are kept in the rho-shifted convention throughout: a weight is
// p-dominant iff both halves are strictly decreasing integer triples, and
// two weights describe the same module iff they differ by a multiple of
// (1,1,1,1,1,1).

#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace gr33 {

// Exact half-integer, stored as twice its value.
struct HalfInt {
    int doubled = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int d) : doubled(d) {}
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }
    static constexpr HalfInt halves(int d) { return HalfInt{d}; }

    constexpr bool integral() const { return doubled % 2 == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.doubled + b.doubled}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.doubled - b.doubled}; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const;
};

using Triple = std::array<int, 3>;
using Dynkin = std::array<int, 5>;

// A raw six-component weight, not necessarily dominant.
struct Weight6 {
    std::array<int, 6> c{};

    friend constexpr auto operator<=>(const Weight6&, const Weight6&) = default;
};

// A p-dominant weight: both triples strictly decreasing.
struct PDomWeight {
    Triple first{};
    Triple second{};

    PDomWeight() = default;
    PDomWeight(Triple f, Triple s);
    explicit PDomWeight(const Weight6& w);

    Weight6 as_weight6() const;
    int component(int i) const;
    int sum_first() const { return first[0] + first[1] + first[2]; }
    int sum_second() const { return second[0] + second[1] + second[2]; }

    friend auto operator<=>(const PDomWeight&, const PDomWeight&) = default;
};

constexpr Weight6 rho() { return Weight6{{5, 4, 3, 2, 1, 0}}; }

// lambda |-> lambda + rho, componentwise.
Weight6 alpha_from_lambda(const Weight6& lambda);

bool is_p_dominant(const Weight6& w);

// Subtract the minimum so the smallest component becomes 0.
Weight6 normalize(const Weight6& w);
PDomWeight normalize(const PDomWeight& w);

// Add c to every component.
Weight6 shifted(const Weight6& w, int c);
PDomWeight shifted(const PDomWeight& w, int c);

enum class Singularity { Regular, Sing1, Sing2, Sing3Plus };

const char* singularity_name(Singularity s);

// Infinitesimal character: the six components sorted descending and
// normalized so the minimum is 0.  Two weights induce equivalent modules
// of the same character iff their InfChar values are equal.
struct InfChar {
    std::array<int, 6> values{};
    Singularity sing = Singularity::Regular;

    static InfChar of(const Weight6& w);
    static InfChar of(const PDomWeight& w);
    static InfChar of_values(std::array<int, 6> vals);

    int multiplicity(int v) const;
    std::vector<int> distinct_values() const;   // descending
    std::vector<int> repeated_values() const;   // descending, multiplicity >= 2
    std::vector<int> simple_values() const;     // descending, multiplicity == 1

    std::string str() const;

    friend auto operator<=>(const InfChar&, const InfChar&) = default;
};

InfChar inf_char(const PDomWeight& w);

// Generalized conformal weight: half the difference of the two triple sums,
// shifted so the weight rho itself sits at 0 relative to nothing in
// particular -- only differences of phi values are meaningful, and they are
// invariant under the (1,...,1) shift.
HalfInt phi(const PDomWeight& w);

struct CharMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Order of a homomorphism source -> target between modules with equal
// infinitesimal character; throws CharMismatch otherwise.
int hom_order(const PDomWeight& source, const PDomWeight& target);

// Conversions between the shifted-weight convention and Dynkin labels over
// the five simple roots.
Weight6 dynkin_to_alpha(const Dynkin& d);
Dynkin alpha_to_dynkin(const Weight6& w);

// All p-dominant weights with the given infinitesimal character, largest
// first triple first.  A value of multiplicity >= 2 must split one copy
// into each triple, so the list is empty when any multiplicity exceeds 2.
std::vector<PDomWeight> p_dominant_weights_of(const InfChar& ch);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

std::string to_string(const PDomWeight& w);
std::string to_string(const Weight6& w);
std::string to_string(const Dynkin& d);

PDomWeight parse_pdom(const std::string& text);
Weight6 parse_weight6(const std::string& text);
InfChar parse_char(const std::string& text);
Dynkin parse_dynkin(const std::string& text);

}  // namespace gr33
