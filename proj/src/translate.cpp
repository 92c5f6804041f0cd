#include "gr33/translate.hpp"

#include <algorithm>
#include <sstream>

#include "gr33/pattern.hpp"

namespace gr33 {

std::vector<CompositionFactor> factors(const PDomWeight& base, int k, bool dual) {
    const Decomposition d = dual ? tensor_with_dual(base, k) : tensor_with_fundamental(base, k);
    std::vector<CompositionFactor> out;
    out.reserve(d.summands.size());
    for (const Summand& s : d.summands)
        out.push_back(CompositionFactor{s.weight, InfChar::of(s.weight), s.phi, s.piece});
    return out;
}

bool TranslationCertificate::valid() const {
    return std::all_of(checked.begin(), checked.end(),
                       [](const CheckedCondition& c) { return c.passed; });
}

const std::vector<CompositionFactor>* TranslationCertificate::list(const std::string& name) const {
    for (const auto& [n, l] : lists)
        if (n == name) return &l;
    return nullptr;
}

namespace {

struct CondResult {
    bool passed;
    std::string note;
};

// Exactly one factor of the list has expected's character, and that factor
// equals expected mod the (1,...,1) shift.
CondResult unique_factor(const std::vector<CompositionFactor>& list, const PDomWeight& expected) {
    const InfChar ch = InfChar::of(expected);
    const PDomWeight want = normalize(expected);
    int count = 0;
    PDomWeight found;
    for (const CompositionFactor& f : list)
        if (f.character == ch) {
            ++count;
            found = normalize(f.weight);
        }
    if (count != 1)
        return {false, "found " + std::to_string(count) + " factors of character " + ch.str()};
    if (!(found == want))
        return {false, "unique factor of character " + ch.str() + " is " + to_string(found) +
                           ", not " + to_string(want)};
    return {true, "unique factor " + to_string(want) + " of character " + ch.str()};
}

bool occurs(const std::vector<CompositionFactor>& list, const PDomWeight& w) {
    const PDomWeight n = normalize(w);
    return std::any_of(list.begin(), list.end(), [&](const CompositionFactor& f) {
        return normalize(f.weight) == n;
    });
}

CondResult char_equal(const char* what, const PDomWeight& a, const PDomWeight& b) {
    const InfChar ca = InfChar::of(a);
    const InfChar cb = InfChar::of(b);
    if (ca == cb) return {true, std::string(what) + " share character " + ca.str()};
    return {false, std::string(what) + " have characters " + ca.str() + " and " + cb.str()};
}

CondResult splitting_ok(int k) {
    const std::size_t len = comp_series(k).size();
    if (len <= 3)
        return {true, "series has " + std::to_string(len) + " pieces"};
    return {false, "series has " + std::to_string(len) + " pieces, so the splitting has order 3"};
}

void push(TranslationCertificate& c, const std::string& name, const CondResult& r) {
    c.checked.push_back(CheckedCondition{name, r.passed, r.note});
}

}  // namespace

TranslationCertificate check_equisingular(const PDomWeight& F, const PDomWeight& E,
                                          const PDomWeight& Fp, const PDomWeight& Ep,
                                          int k) {
    TranslationCertificate c;
    c.kind = TranslationKind::Equisingular;
    c.module_k = k;
    auto FxW = factors(F, k, false);
    auto ExW = factors(E, k, false);
    auto FpWd = factors(Fp, k, true);
    auto EpWd = factors(Ep, k, true);

    push(c, "char(F)=char(E)", char_equal("F,E", F, E));
    push(c, "char(F')=char(E')", char_equal("F',E'", Fp, Ep));
    push(c, "F' unique in FxW", unique_factor(FxW, Fp));
    push(c, "E' unique in ExW", unique_factor(ExW, Ep));
    push(c, "F unique in F'xW*", unique_factor(FpWd, F));
    push(c, "E unique in E'xW*", unique_factor(EpWd, E));
    push(c, "splitting order <= 2", splitting_ok(k));

    c.lists.emplace_back("FxW", std::move(FxW));
    c.lists.emplace_back("ExW", std::move(ExW));
    c.lists.emplace_back("FpWd", std::move(FpWd));
    c.lists.emplace_back("EpWd", std::move(EpWd));
    return c;
}

TranslationCertificate check_oneway(const PDomWeight& E, const PDomWeight& F,
                                    const PDomWeight& E1, const PDomWeight& E2,
                                    const PDomWeight& F1, const PDomWeight& F2,
                                    int k) {
    TranslationCertificate c;
    c.kind = TranslationKind::OneWay;
    c.module_k = k;
    auto ExW = factors(E, k, false);
    auto FxW = factors(F, k, false);
    auto F1Wd = factors(F1, k, true);

    // The starting homomorphism must be an arrow of its pattern.
    {
        CondResult r{false, ""};
        const InfChar ce = InfChar::of(E);
        if (ce != InfChar::of(F)) {
            r.note = "E and F have different characters";
        } else {
            const Pattern p = pattern_of(ce);
            const int si = p.find_node(E);
            const int ti = p.find_node(F);
            const Arrow* a = (si >= 0 && ti >= 0) ? p.find_arrow(si, ti) : nullptr;
            if (a) {
                r.passed = true;
                r.note = std::string(arrow_kind_name(a->kind)) + " arrow of order " +
                         std::to_string(a->order) + " in pattern " + ce.str();
            } else {
                r.note = "no arrow " + to_string(E) + " -> " + to_string(F) + " in pattern " + ce.str();
            }
        }
        push(c, "E->F in pattern", r);
    }

    push(c, "E1 in ExW",
         occurs(ExW, E1) ? CondResult{true, to_string(E1) + " occurs"}
                         : CondResult{false, to_string(E1) + " does not occur"});
    push(c, "E2 in ExW",
         occurs(ExW, E2) ? CondResult{true, to_string(E2) + " occurs"}
                         : CondResult{false, to_string(E2) + " does not occur"});
    push(c, "F1 in FxW",
         occurs(FxW, F1) ? CondResult{true, to_string(F1) + " occurs"}
                         : CondResult{false, to_string(F1) + " does not occur"});
    push(c, "F2 in FxW",
         occurs(FxW, F2) ? CondResult{true, to_string(F2) + " occurs"}
                         : CondResult{false, to_string(F2) + " does not occur"});

    const InfChar target = InfChar::of(E1);
    {
        const bool eq = InfChar::of(E2) == target && InfChar::of(F1) == target &&
                        InfChar::of(F2) == target;
        push(c, "equal target character",
             eq ? CondResult{true, "E1,E2,F1,F2 share character " + target.str()}
                : CondResult{false, "E1,E2,F1,F2 do not share one character"});
    }

    {
        // No factor beyond the named pair may carry the target character,
        // on either side.
        const PDomWeight e1 = normalize(E1), e2 = normalize(E2);
        const PDomWeight f1 = normalize(F1), f2 = normalize(F2);
        int extra = 0;
        for (const CompositionFactor& f : ExW) {
            const PDomWeight n = normalize(f.weight);
            if (f.character == target && !(n == e1) && !(n == e2)) ++extra;
        }
        for (const CompositionFactor& f : FxW) {
            const PDomWeight n = normalize(f.weight);
            if (f.character == target && !(n == f1) && !(n == f2)) ++extra;
        }
        push(c, "no extra factors of target character",
             extra == 0 ? CondResult{true, "none"}
                        : CondResult{false, std::to_string(extra) + " extra factors"});
    }

    push(c, "phi(E1)<phi(E2)",
         phi(E1) < phi(E2)
             ? CondResult{true, phi(E1).str() + " < " + phi(E2).str()}
             : CondResult{false, phi(E1).str() + " !< " + phi(E2).str()});
    push(c, "phi(F1)>phi(F2)",
         phi(F1) > phi(F2)
             ? CondResult{true, phi(F1).str() + " > " + phi(F2).str()}
             : CondResult{false, phi(F1).str() + " !> " + phi(F2).str()});

    push(c, "F unique in F1xW*", unique_factor(F1Wd, F));

    {
        CondResult r{false, ""};
        if (InfChar::of(E2) != target || InfChar::of(F1) != target) {
            r.note = "target characters differ, no common pattern";
        } else {
            const Pattern p = pattern_of(target);
            const int si = p.find_node(E2);
            const int ti = p.find_node(F1);
            if (si < 0 || ti < 0) {
                r.note = "node missing from pattern " + target.str();
            } else if (p.find_arrow(si, ti)) {
                r.note = "arrow " + to_string(E2) + " -> " + to_string(F1) + " exists";
            } else {
                r.passed = true;
                r.note = "pattern " + target.str() + " has no arrow " + to_string(normalize(E2)) +
                         " -> " + to_string(normalize(F1));
            }
        }
        push(c, "no arrow E2->F1", r);
    }

    push(c, "splitting order <= 2", splitting_ok(k));

    c.lists.emplace_back("ExW", std::move(ExW));
    c.lists.emplace_back("FxW", std::move(FxW));
    c.lists.emplace_back("F1Wd", std::move(F1Wd));
    return c;
}

namespace {

// Which fundamental module moves the source character to the target: +1 on
// one occurrence (k=1), -1 on one occurrence (k=5), +1 on both copies of a
// doubled value (k=2), -1 on both copies (k=4).  At most one move can
// match, because the value sums stay distinct mod 6 across move types and
// within a type different values give different multisets.
std::optional<int> detect_move(const InfChar& src, const InfChar& tgt) {
    auto matches = [&](int delta, int copies) {
        for (int v : src.distinct_values()) {
            if (copies == 2 && src.multiplicity(v) != 2) continue;
            std::array<int, 6> vals = src.values;
            int changed = 0;
            for (int i = 0; i < 6 && changed < copies; ++i)
                if (vals[i] == v) {
                    vals[i] += delta;
                    ++changed;
                }
            if (changed == copies && InfChar::of_values(vals) == tgt) return true;
        }
        return false;
    };
    if (matches(+1, 1)) return 1;
    if (matches(-1, 1)) return 5;
    if (matches(+1, 2)) return 2;
    if (matches(-1, 2)) return 4;
    return std::nullopt;
}

}  // namespace

PDomWeight translate_node(const PDomWeight& w, const InfChar& target) {
    const InfChar src = inf_char(w);
    const std::optional<int> k = detect_move(src, target);
    if (!k)
        throw NotAdjacentCharacters("no single raising or lowering move takes " + src.str() +
                                    " to " + target.str());
    const Decomposition d = tensor_with_fundamental(w, *k);
    std::vector<PDomWeight> hits;
    for (const Summand& s : d.summands)
        if (InfChar::of(s.weight) == target) hits.push_back(normalize(s.weight));
    if (hits.size() != 1) {
        std::string msg = "expected exactly one factor of character " + target.str() + " in " +
                          to_string(w) + " (x) L" + std::to_string(*k) + ", found " +
                          std::to_string(hits.size());
        for (const PDomWeight& h : hits) msg += " " + to_string(h);
        throw NonUniqueFactor(msg);
    }
    return hits[0];
}

std::string certificate_text(const TranslationCertificate& c) {
    std::ostringstream os;
    os << "kind: " << (c.kind == TranslationKind::Equisingular ? "equisingular" : "one-way")
       << "\n";
    os << "module: L" << c.module_k << "\n";
    for (const auto& [name, list] : c.lists) {
        os << name << ":\n";
        for (const CompositionFactor& f : list)
            os << "  " << to_string(f.weight) << " piece=(" << f.piece.i << "," << f.piece.j
               << ") char=" << f.character.str() << " phi=" << f.phi.str() << "\n";
    }
    os << "checks:\n";
    for (const CheckedCondition& ck : c.checked)
        os << "  " << (ck.passed ? "pass" : "FAIL") << " " << ck.name << ": " << ck.note << "\n";
    os << "result: " << (c.valid() ? "valid" : "invalid") << "\n";
    return os.str();
}

}  // namespace gr33
