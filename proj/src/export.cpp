#include <json.hpp>

#include "pyramid/quiver.hpp"

namespace pyramid {

using ordered_json = nlohmann::ordered_json;

std::string export_dot(const Skeleton& s) {
    std::string out = "digraph {\n";
    for (int v = 0; v < s.size(); ++v)
        out += "  \"" + s.label(v) + "\";\n";
    for (const auto& [src, t, dst] : s.arrows())
        out += "  \"" + s.label(src) + "\" -> \"" + s.label(dst) + "\" [label=\"" +
               std::to_string(t) + "\"];\n";
    out += "}\n";
    return out;
}

std::string export_dot(const SubquiverView& view) {
    const Skeleton& s = *view.parent;
    std::string out = "digraph {\n";
    for (int v : view.verts) out += "  \"" + s.label(v) + "\";\n";
    for (const auto& [src, t, dst] : view.arrows)
        out += "  \"" + s.label(src) + "\" -> \"" + s.label(dst) + "\" [label=\"" +
               std::to_string(t) + "\"];\n";
    out += "}\n";
    return out;
}

std::string export_json(const Skeleton& s) {
    ordered_json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["vertices"] = ordered_json::array();
    for (const auto& v : s.vertices) j["vertices"].push_back(v);
    j["arrows"] = ordered_json::array();
    for (const auto& [src, t, dst] : s.arrows()) {
        ordered_json a;
        a["source"] = s.vertices[src];
        a["kind"] = t;
        j["arrows"].push_back(std::move(a));
    }
    return j.dump(2) + "\n";
}

}  // namespace pyramid
