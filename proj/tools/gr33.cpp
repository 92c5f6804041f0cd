// Command-line front end: classification queries, pattern generation,
// tensor decompositions, translation checks, verification replay, and
// DOT/JSON export.
//
// Exit codes: 0 success, 1 semantic failure (no such arrow, mismatched
// characters, failed verification, ...), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gr33/export.hpp"
#include "gr33/lift.hpp"
#include "gr33/pattern.hpp"
#include "gr33/tensor.hpp"
#include "gr33/translate.hpp"
#include "gr33/weights.hpp"

namespace {

// Accepts either an infinitesimal character "(5,4,3,2,1,0)" / "(543210)"
// or a weight "(521|430)", whose character is then taken.
gr33::InfChar character_argument(const std::string& text) {
    try {
        return gr33::parse_char(text);
    } catch (const gr33::ParseError&) {
        return gr33::inf_char(gr33::parse_pdom(text));
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string pattern_text(const gr33::Pattern& p) {
    std::string out;
    out += "character: " + p.character.str() + "\n";
    out += "singularity: ";
    out += gr33::singularity_name(p.character.sing);
    out += "\n";
    out += "nodes: " + std::to_string(p.nodes.size()) + "\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
        out += "  [" + std::to_string(i) + "] " + gr33::to_string(p.nodes[i].weight) +
               "  phi=" + gr33::phi(p.nodes[i].weight).str() + "\n";
    out += "arrows: " + std::to_string(p.arrows.size()) + "\n";
    for (const gr33::Arrow& a : p.arrows)
        out += "  " + gr33::to_string(p.nodes[static_cast<std::size_t>(a.src)].weight) +
               " -> " + gr33::to_string(p.nodes[static_cast<std::size_t>(a.tgt)].weight) +
               "  " + gr33::arrow_kind_name(a.kind) + ", order " + std::to_string(a.order) +
               "\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact classification of invariant operators for Gr(3,3) geometries"};
    app.require_subcommand(1);

    std::string classify_w;
    auto* classify = app.add_subcommand(
        "classify", "character, singularity and degree data of a weight");
    classify->add_option("weight", classify_w, "p-dominant weight, e.g. \"(210|321)\"")
        ->required();

    std::string pattern_ch;
    std::string pattern_fmt = "text";
    auto* pattern = app.add_subcommand(
        "pattern", "homomorphism pattern of an infinitesimal character");
    pattern->add_option("character", pattern_ch, "character, e.g. \"(543210)\", or a weight")
        ->required();
    pattern->add_option("--format", pattern_fmt, "text, dot or json")
        ->check(CLI::IsMember({"text", "dot", "json"}));

    std::string tensor_w;
    int tensor_k = 0;
    bool tensor_dual = false;
    std::string tensor_fmt = "text";
    auto* tensor = app.add_subcommand(
        "tensor", "composition factors of weight (x) Lambda^k or its dual");
    tensor->add_option("weight", tensor_w, "p-dominant weight")->required();
    tensor->add_option("k", tensor_k, "fundamental module index, 1..5")->required();
    tensor->add_flag("--dual", tensor_dual, "tensor with the dual module");
    tensor->add_option("--format", tensor_fmt, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string order_src, order_tgt;
    auto* order = app.add_subcommand(
        "order", "order of the operator between two weights of one character");
    order->add_option("source", order_src, "source weight")->required();
    order->add_option("target", order_tgt, "target weight")->required();

    std::string lift_src, lift_tgt;
    auto* lift = app.add_subcommand(
        "lift-status", "whether the operator on a pattern arrow lifts");
    lift->add_option("source", lift_src, "source weight")->required();
    lift->add_option("target", lift_tgt, "target weight")->required();

    std::string trans_w, trans_ch;
    auto* translate = app.add_subcommand(
        "translate", "move a weight to an adjacent infinitesimal character");
    translate->add_option("weight", trans_w, "p-dominant weight")->required();
    translate->add_option("character", trans_ch, "adjacent target character")->required();

    auto* verify = app.add_subcommand(
        "verify-paper", "replay every published table, diagram and translation argument");

    std::string export_what;
    std::string export_arg;
    int export_k = 0;
    bool export_dual = false;
    std::string export_fmt = "json";
    std::string export_out;
    auto* exporter = app.add_subcommand("export", "write DOT or JSON to a file or stdout");
    exporter->add_option("what", export_what, "pattern, report or tensor")
        ->required()
        ->check(CLI::IsMember({"pattern", "report", "tensor"}));
    exporter->add_option("argument", export_arg,
                         "character for pattern, weight for tensor");
    exporter->add_option("k", export_k, "fundamental module index for tensor");
    exporter->add_flag("--dual", export_dual, "tensor with the dual module");
    exporter->add_option("--format", export_fmt, "dot (pattern only) or json")
        ->check(CLI::IsMember({"dot", "json"}));
    exporter->add_option("--out", export_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*classify) {
        const gr33::PDomWeight w = gr33::parse_pdom(classify_w);
        const gr33::InfChar ch = gr33::inf_char(w);
        std::cout << "weight: " << gr33::to_string(w) << "\n"
                  << "normalized: " << gr33::to_string(gr33::normalize(w)) << "\n"
                  << "character: " << ch.str() << "\n"
                  << "singularity: " << gr33::singularity_name(ch.sing) << "\n"
                  << "phi: " << gr33::phi(w).str() << "\n"
                  << "dynkin: " << gr33::to_string(gr33::alpha_to_dynkin(w.as_weight6()))
                  << "\n";
        return 0;
    }
    if (*pattern) {
        const gr33::Pattern p = gr33::pattern_of(character_argument(pattern_ch));
        if (pattern_fmt == "dot") {
            std::cout << gr33::to_dot(p);
        } else if (pattern_fmt == "json") {
            std::vector<std::pair<std::string, std::string>> ann;
            for (const gr33::LiftStatus& s : gr33::annotate(p))
                ann.emplace_back(gr33::verdict_name(s.verdict), gr33::reason_name(s.reason));
            std::cout << gr33::pattern_json(p, ann).dump(2) << "\n";
        } else {
            std::cout << pattern_text(p);
        }
        return 0;
    }
    if (*tensor) {
        const gr33::PDomWeight w = gr33::parse_pdom(tensor_w);
        const gr33::Decomposition d = tensor_dual ? gr33::tensor_with_dual(w, tensor_k)
                                                  : gr33::tensor_with_fundamental(w, tensor_k);
        if (tensor_fmt == "json")
            std::cout << gr33::decomposition_json(d).dump(2) << "\n";
        else
            std::cout << gr33::decomposition_text(d);
        return 0;
    }
    if (*order) {
        std::cout << gr33::hom_order(gr33::parse_pdom(order_src), gr33::parse_pdom(order_tgt))
                  << "\n";
        return 0;
    }
    if (*lift) {
        const gr33::PDomWeight src = gr33::parse_pdom(lift_src);
        const gr33::PDomWeight tgt = gr33::parse_pdom(lift_tgt);
        const gr33::Pattern p = gr33::pattern_of(gr33::inf_char(src));
        const gr33::LiftStatus st = gr33::lift_status(p, src, tgt);
        const gr33::Arrow* a = p.find_arrow(p.find_node(src), p.find_node(tgt));
        std::cout << "arrow: " << gr33::to_string(src) << " -> " << gr33::to_string(tgt)
                  << "  " << gr33::arrow_kind_name(a->kind) << ", order "
                  << std::to_string(a->order) << "\n"
                  << "verdict: " << gr33::verdict_name(st.verdict) << "\n"
                  << "reason: " << gr33::reason_name(st.reason) << "\n"
                  << "detail: " << st.detail << "\n";
        return 0;
    }
    if (*translate) {
        const gr33::PDomWeight w = gr33::parse_pdom(trans_w);
        const gr33::InfChar target = gr33::parse_char(trans_ch);
        std::cout << gr33::to_string(gr33::translate_node(w, target)) << "\n";
        return 0;
    }
    if (*verify) {
        const gr33::ReplayReport r = gr33::verify_all();
        std::cout << gr33::report_text(r);
        if (!r.all_passed()) return 1;
        std::cout << "all steps passed\n";
        return 0;
    }
    if (*exporter) {
        if (export_what == "pattern") {
            if (export_arg.empty())
                throw CLI::ValidationError("export pattern requires a character argument");
            const gr33::Pattern p = gr33::pattern_of(character_argument(export_arg));
            if (export_fmt == "dot") {
                write_output(export_out, gr33::to_dot(p));
            } else {
                std::vector<std::pair<std::string, std::string>> ann;
                for (const gr33::LiftStatus& s : gr33::annotate(p))
                    ann.emplace_back(gr33::verdict_name(s.verdict),
                                     gr33::reason_name(s.reason));
                write_output(export_out, gr33::pattern_json(p, ann).dump(2) + "\n");
            }
            return 0;
        }
        if (export_what == "tensor") {
            if (export_arg.empty() || export_k == 0)
                throw CLI::ValidationError("export tensor requires a weight and k");
            if (export_fmt == "dot")
                throw CLI::ValidationError("tensor export supports only json");
            const gr33::PDomWeight w = gr33::parse_pdom(export_arg);
            const gr33::Decomposition d = export_dual
                                              ? gr33::tensor_with_dual(w, export_k)
                                              : gr33::tensor_with_fundamental(w, export_k);
            write_output(export_out, gr33::decomposition_json(d).dump(2) + "\n");
            return 0;
        }
        if (export_fmt == "dot") throw CLI::ValidationError("report export supports only json");
        write_output(export_out, gr33::report_json(gr33::verify_all()).dump(2) + "\n");
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gr33::ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const gr33::BadK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gr33::CharMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gr33::ArrowNotInPattern& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gr33::NotAdjacentCharacters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gr33::NonUniqueFactor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gr33::NotSingular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
