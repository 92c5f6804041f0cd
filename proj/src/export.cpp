#include "gr33/export.hpp"

#include <cstddef>

namespace gr33 {

namespace {

Json summand_json(const Summand& s) {
    Json j;
    j["weight"] = to_string(s.weight);
    j["piece"] = Json::array({s.piece.i, s.piece.j});
    j["phi"] = s.phi.str();
    j["character"] = InfChar::of(s.weight).str();
    return j;
}

Json factor_json(const CompositionFactor& f) {
    Json j;
    j["weight"] = to_string(f.weight);
    j["piece"] = Json::array({f.piece.i, f.piece.j});
    j["phi"] = f.phi.str();
    j["character"] = f.character.str();
    return j;
}

}  // namespace

Json decomposition_json(const Decomposition& d) {
    Json j;
    j["schema"] = 1;
    j["base"] = to_string(d.base);
    j["k"] = d.module.k;
    j["dual"] = d.dual;
    j["summands"] = Json::array();
    for (const Summand& s : d.summands) j["summands"].push_back(summand_json(s));
    return j;
}

Json pattern_json(const Pattern& p,
                  const std::vector<std::pair<std::string, std::string>>& lift) {
    Json j;
    j["schema"] = 1;
    j["character"] = p.character.str();
    j["singularity"] = singularity_name(p.character.sing);
    j["cube_diagonal_nontrivial"] = p.cube_diagonal_nontrivial;
    j["nodes"] = Json::array();
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        Json n;
        n["index"] = i;
        n["weight"] = to_string(p.nodes[i].weight);
        n["phi"] = phi(p.nodes[i].weight).str();
        j["nodes"].push_back(std::move(n));
    }
    j["arrows"] = Json::array();
    const bool annotated = lift.size() == p.arrows.size();
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        const Arrow& a = p.arrows[i];
        Json e;
        e["src"] = a.src;
        e["tgt"] = a.tgt;
        e["kind"] = arrow_kind_name(a.kind);
        e["order"] = a.order;
        if (annotated) {
            Json l;
            l["verdict"] = lift[i].first;
            l["reason"] = lift[i].second;
            e["lift"] = std::move(l);
        }
        j["arrows"].push_back(std::move(e));
    }
    return j;
}

Json certificate_json(const TranslationCertificate& c) {
    Json j;
    j["schema"] = 1;
    j["kind"] = c.kind == TranslationKind::Equisingular ? "equisingular" : "one-way";
    j["module_k"] = c.module_k;
    j["valid"] = c.valid();
    j["lists"] = Json::array();
    for (const auto& [name, factors] : c.lists) {
        Json l;
        l["name"] = name;
        l["factors"] = Json::array();
        for (const CompositionFactor& f : factors) l["factors"].push_back(factor_json(f));
        j["lists"].push_back(std::move(l));
    }
    j["conditions"] = Json::array();
    for (const CheckedCondition& cc : c.checked) {
        Json e;
        e["name"] = cc.name;
        e["passed"] = cc.passed;
        e["note"] = cc.note;
        j["conditions"].push_back(std::move(e));
    }
    return j;
}

Json report_json(const ReplayReport& r) {
    Json j;
    j["schema"] = 1;
    j["steps"] = Json::array();
    for (const ReplayStep& s : r.steps) {
        Json e;
        e["label"] = s.label;
        e["pass"] = s.pass;
        e["lists"] = Json::array();
        for (const ListDiff& d : s.lists) {
            Json l;
            l["name"] = d.name;
            l["match"] = d.match;
            l["expected"] = d.expected;
            l["computed"] = d.computed;
            l["defects"] = d.defects;
            e["lists"].push_back(std::move(l));
        }
        e["certificate"] = s.certificate ? certificate_json(*s.certificate) : Json(nullptr);
        e["flags"] = s.flagged;
        e["notes"] = s.notes;
        j["steps"].push_back(std::move(e));
    }
    Json sum;
    sum["steps"] = r.steps.size();
    sum["passed"] = r.passed;
    sum["failed"] = r.failed;
    sum["flags"] = r.flagged;
    j["summary"] = std::move(sum);
    return j;
}

}  // namespace gr33
