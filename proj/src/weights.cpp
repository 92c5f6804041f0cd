#include "gr33/weights.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gr33 {

std::string HalfInt::str() const {
    if (integral()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

namespace {

bool strictly_decreasing(const Triple& t) {
    return t[0] > t[1] && t[1] > t[2];
}

}  // namespace

PDomWeight::PDomWeight(Triple f, Triple s) : first(f), second(s) {
    if (!strictly_decreasing(first) || !strictly_decreasing(second))
        throw std::invalid_argument("weight is not p-dominant: " + to_string(Weight6{
            {f[0], f[1], f[2], s[0], s[1], s[2]}}));
}

PDomWeight::PDomWeight(const Weight6& w)
    : PDomWeight(Triple{w.c[0], w.c[1], w.c[2]}, Triple{w.c[3], w.c[4], w.c[5]}) {}

Weight6 PDomWeight::as_weight6() const {
    return Weight6{{first[0], first[1], first[2], second[0], second[1], second[2]}};
}

int PDomWeight::component(int i) const {
    return i < 3 ? first[i] : second[i - 3];
}

Weight6 alpha_from_lambda(const Weight6& lambda) {
    Weight6 out;
    for (int i = 0; i < 6; ++i) out.c[i] = lambda.c[i] + rho().c[i];
    return out;
}

bool is_p_dominant(const Weight6& w) {
    return w.c[0] > w.c[1] && w.c[1] > w.c[2] && w.c[3] > w.c[4] && w.c[4] > w.c[5];
}

Weight6 normalize(const Weight6& w) {
    const int m = *std::min_element(w.c.begin(), w.c.end());
    return shifted(w, -m);
}

PDomWeight normalize(const PDomWeight& w) {
    return PDomWeight(normalize(w.as_weight6()));
}

Weight6 shifted(const Weight6& w, int c) {
    Weight6 out;
    for (int i = 0; i < 6; ++i) out.c[i] = w.c[i] + c;
    return out;
}

PDomWeight shifted(const PDomWeight& w, int c) {
    return PDomWeight(shifted(w.as_weight6(), c));
}

const char* singularity_name(Singularity s) {
    switch (s) {
        case Singularity::Regular: return "regular";
        case Singularity::Sing1: return "1-singular";
        case Singularity::Sing2: return "2-singular";
        case Singularity::Sing3Plus: return "3-singular";
    }
    return "?";
}

InfChar InfChar::of(const Weight6& w) {
    return of_values(w.c);
}

InfChar InfChar::of(const PDomWeight& w) {
    return of(w.as_weight6());
}

InfChar InfChar::of_values(std::array<int, 6> vals) {
    std::sort(vals.begin(), vals.end(), std::greater<int>());
    const int m = vals[5];
    for (int& v : vals) v -= m;

    // Count coincident pairs: 0 pairs is regular, 1 pair 1-singular, etc.
    int pairs = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (vals[i] == vals[j]) ++pairs;

    InfChar ch;
    ch.values = vals;
    ch.sing = pairs == 0   ? Singularity::Regular
              : pairs == 1 ? Singularity::Sing1
              : pairs == 2 ? Singularity::Sing2
                           : Singularity::Sing3Plus;
    return ch;
}

int InfChar::multiplicity(int v) const {
    return static_cast<int>(std::count(values.begin(), values.end(), v));
}

std::vector<int> InfChar::distinct_values() const {
    std::vector<int> out;
    for (int v : values)
        if (out.empty() || out.back() != v) out.push_back(v);
    return out;
}

std::vector<int> InfChar::repeated_values() const {
    std::vector<int> out;
    for (int v : distinct_values())
        if (multiplicity(v) >= 2) out.push_back(v);
    return out;
}

std::vector<int> InfChar::simple_values() const {
    std::vector<int> out;
    for (int v : distinct_values())
        if (multiplicity(v) == 1) out.push_back(v);
    return out;
}

std::string InfChar::str() const {
    std::string out = "(";
    for (int i = 0; i < 6; ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    out += ')';
    return out;
}

InfChar inf_char(const PDomWeight& w) {
    return InfChar::of(w);
}

HalfInt phi(const PDomWeight& w) {
    // (sum of first triple - sum of second triple)/2 - 9/2, exactly.
    return HalfInt::halves(w.sum_first() - w.sum_second() - 9);
}

int hom_order(const PDomWeight& source, const PDomWeight& target) {
    if (inf_char(source) != inf_char(target))
        throw CharMismatch("hom_order: infinitesimal characters differ: " +
                           inf_char(source).str() + " vs " + inf_char(target).str());
    const HalfInt d = phi(target) - phi(source);
    assert(d.integral());
    return d.doubled / 2;
}

Weight6 dynkin_to_alpha(const Dynkin& d) {
    // alpha[i] = (5 - i) + sum_{j >= i} mu[j], 0-based, so alpha[5] = 0.
    Weight6 out;
    int tail = 0;
    out.c[5] = 0;
    for (int i = 4; i >= 0; --i) {
        tail += d[i];
        out.c[i] = (5 - i) + tail;
    }
    return out;
}

Dynkin alpha_to_dynkin(const Weight6& w) {
    Dynkin d;
    for (int i = 0; i < 5; ++i) d[i] = w.c[i] - w.c[i + 1] - 1;
    return d;
}

std::vector<PDomWeight> p_dominant_weights_of(const InfChar& ch) {
    // Choose a 3-element sub-multiset for the first triple; the second is
    // its complement.  Repeated values can realize the same weight through
    // several index choices, so sort descending and deduplicate.
    std::vector<PDomWeight> out;
    const auto& v = ch.values;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                Triple f{v[i], v[j], v[k]};
                if (!(f[0] > f[1] && f[1] > f[2])) continue;
                std::array<bool, 6> used{};
                used[i] = used[j] = used[k] = true;
                Triple s{};
                int n = 0;
                for (int m = 0; m < 6; ++m)
                    if (!used[m]) s[n++] = v[m];
                if (!(s[0] > s[1] && s[1] > s[2])) continue;
                out.emplace_back(f, s);
            }
    std::sort(out.begin(), out.end(), [](const PDomWeight& a, const PDomWeight& b) { return b < a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const PDomWeight& w) {
    return to_string(w.as_weight6());
}

std::string to_string(const Weight6& w) {
    const bool compact = std::all_of(w.c.begin(), w.c.end(),
                                     [](int v) { return v >= 0 && v <= 9; });
    std::string out = "(";
    for (int i = 0; i < 6; ++i) {
        if (i == 3) out += '|';
        else if (i && !compact) out += ',';
        out += std::to_string(w.c[i]);
    }
    out += ')';
    return out;
}

std::string to_string(const Dynkin& d) {
    std::string out = "[";
    for (int i = 0; i < 5; ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    out += ']';
    return out;
}

namespace {

// Shared scanner for the small bracketed formats.
struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    explicit Scanner(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int number() {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a number", start);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) throw ParseError("number out of range", start);
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }

    int digit() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a digit", pos);
        return s[pos++] - '0';
    }

    void end() {
        skip_ws();
        if (pos < s.size()) throw ParseError("trailing characters", pos);
    }
};

// Reads n components that are either comma-separated numbers or a run of
// bare digits, stopping before `stop`.
void read_components(Scanner& sc, int* out, int n, char stop) {
    sc.skip_ws();
    // Comma-separated if a comma or sign appears before the stop character.
    bool comma = false;
    for (std::size_t p = sc.pos; p < sc.s.size() && sc.s[p] != stop; ++p) {
        if (sc.s[p] == ',' || sc.s[p] == '-' || sc.s[p] == '+') {
            comma = true;
            break;
        }
    }
    if (comma) {
        for (int i = 0; i < n; ++i) {
            if (i) sc.expect(',');
            out[i] = sc.number();
        }
    } else {
        for (int i = 0; i < n; ++i) out[i] = sc.digit();
    }
}

}  // namespace

PDomWeight parse_pdom(const std::string& text) {
    Scanner sc(text);
    sc.expect('(');
    int c[6];
    read_components(sc, c, 3, '|');
    sc.expect('|');
    read_components(sc, c + 3, 3, ')');
    sc.expect(')');
    sc.end();
    const Weight6 w{{c[0], c[1], c[2], c[3], c[4], c[5]}};
    if (!is_p_dominant(w))
        throw ParseError("weight is not p-dominant: " + to_string(w), 0);
    return PDomWeight(w);
}

Weight6 parse_weight6(const std::string& text) {
    Scanner sc(text);
    sc.expect('(');
    int c[6];
    // Allow an optional '|' divider so p-dominant syntax parses too.
    sc.skip_ws();
    bool divider = text.find('|') != std::string::npos;
    if (divider) {
        read_components(sc, c, 3, '|');
        sc.expect('|');
        read_components(sc, c + 3, 3, ')');
    } else {
        read_components(sc, c, 6, ')');
    }
    sc.expect(')');
    sc.end();
    return Weight6{{c[0], c[1], c[2], c[3], c[4], c[5]}};
}

InfChar parse_char(const std::string& text) {
    const Weight6 w = parse_weight6(text);
    return InfChar::of(w);
}

Dynkin parse_dynkin(const std::string& text) {
    Scanner sc(text);
    sc.expect('[');
    Dynkin d;
    for (int i = 0; i < 5; ++i) {
        if (i) sc.expect(',');
        d[i] = sc.number();
    }
    sc.expect(']');
    sc.end();
    return d;
}

}  // namespace gr33
