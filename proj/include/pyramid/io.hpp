#ifndef PYRAMID_IO_HPP
#define PYRAMID_IO_HPP

#include <json.hpp>

#include "pyramid/verify.hpp"

namespace pyramid {

using ordered_json = nlohmann::ordered_json;

inline ordered_json shape_json(const ResolutionShape& shape) {
    ordered_json j;
    j["simple"] = shape.simple;
    j["steps"] = ordered_json::array();
    for (std::size_t l = 0; l < shape.steps.size(); ++l) {
        ordered_json step;
        step["l"] = l;
        step["gens"] = ordered_json::array();
        for (const auto& g : shape.steps[l]) {
            ordered_json gen;
            gen["vertex"] = g.vertex;
            gen["deg"] = g.degree;
            step["gens"].push_back(std::move(gen));
        }
        j["steps"].push_back(std::move(step));
    }
    ordered_json term;
    term["kind"] = shape.terminal_kind == TerminalKind::Zero        ? "zero"
                   : shape.terminal_kind == TerminalKind::Semisimple ? "semisimple"
                                                                     : "truncated";
    term["socle"] = ordered_json::array();
    for (const auto& g : shape.terminal) {
        ordered_json gen;
        gen["vertex"] = g.vertex;
        gen["deg"] = g.degree;
        term["socle"].push_back(std::move(gen));
    }
    j["terminal"] = std::move(term);
    return j;
}

inline std::string shape_table(const ResolutionShape& shape) {
    std::string out = "simple (" + vertex_to_string(shape.simple) + ")\n";
    for (std::size_t l = 0; l < shape.steps.size(); ++l) {
        out += "  step " + std::to_string(l) + ":";
        for (const auto& g : shape.steps[l])
            out += " (" + vertex_to_string(g.vertex) + ")@" + std::to_string(g.degree);
        out += "\n";
    }
    out += "  terminal: ";
    switch (shape.terminal_kind) {
        case TerminalKind::Zero: out += "0"; break;
        case TerminalKind::Truncated: out += "truncated at cutoff"; break;
        case TerminalKind::Semisimple:
            for (const auto& g : shape.terminal)
                out += "S(" + vertex_to_string(g.vertex) + ")@" + std::to_string(g.degree) + " ";
            break;
    }
    out += "\n";
    return out;
}

template <class K>
ordered_json dims_json(const BoundAlgebra<K>& alg) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : dims_table(alg)) {
        ordered_json row;
        row["source"] = r.source;
        row["target"] = r.target;
        row["degree"] = r.degree;
        row["dim"] = r.dim;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json manifest_json(const ConeManifest& man) {
    ordered_json j;
    j["n_in"] = man.n_in;
    j["n_out"] = man.n_in + 1;
    j["m"] = man.m;
    j["stages"] = ordered_json::array();
    for (const auto& st : man.stages) {
        ordered_json stage;
        stage["name"] = st.name;
        stage["vertices"] = st.vertices;
        stage["arrows"] = st.arrows;
        j["stages"].push_back(std::move(stage));
    }
    j["checksums"]["lambda_dims"] = man.lambda_dims_checksum;
    j["checksums"]["gamma_dims"] = man.gamma_dims_checksum;
    return j;
}

inline std::string corpus_text(const CorpusResult& result) {
    std::string out;
    for (const auto& c : result.checks) {
        out += (c.pass ? "[PASS] " : c.inconclusive ? "[????] " : "[FAIL] ");
        out += c.name + ": " + c.detail;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", c.seconds);
        out += buf;
        out += "\n";
    }
    return out;
}

}  // namespace pyramid

#endif  // PYRAMID_IO_HPP
