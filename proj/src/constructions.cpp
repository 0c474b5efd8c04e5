#include "pyramid/constructions.hpp"

#include <cstdint>
#include <deque>
#include <set>

namespace pyramid {

std::string fnv64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SliceAxiomReport check_slice_axioms(const Skeleton& window, const std::vector<int>& subset) {
    if (window.kind != QuiverKind::Cover)
        throw std::invalid_argument("check_slice_axioms expects a cover window");
    SliceAxiomReport rep;
    std::set<int> in(subset.begin(), subset.end());

    // (a) every level orbit meets the subset exactly once
    std::map<VertexVec, int> orbit_hits;
    for (int v = 0; v < window.size(); ++v) {
        VertexVec head(window.vertices[v].begin(), window.vertices[v].end() - 1);
        orbit_hits.emplace(head, 0);
        if (in.count(v)) orbit_hits[head] += 1;
    }
    for (const auto& [head, hits] : orbit_hits) {
        if (hits != 1) {
            rep.orbit_ok = false;
            rep.witness = "orbit of (" + vertex_to_string(head) + ") meets the slice " +
                          std::to_string(hits) + " times";
            return rep;
        }
    }

    // (b) no path between subset vertices passes outside.  BFS over states
    // (vertex, escaped); levels only grow along arrows, so the search is on a
    // finite dag.
    for (int u : subset) {
        struct State {
            int vertex;
            bool escaped;
        };
        std::map<std::pair<int, bool>, std::pair<int, bool>> parent;  // state -> prior state
        std::deque<State> queue{{u, false}};
        std::set<std::pair<int, bool>> seen{{u, false}};
        while (!queue.empty()) {
            State st = queue.front();
            queue.pop_front();
            for (int t = 1; t <= window.type_count; ++t) {
                int w = window.target(st.vertex, t);
                if (w < 0) continue;
                bool esc = st.escaped || (st.vertex != u && !in.count(st.vertex));
                if (in.count(w) && esc) {
                    // reconstruct the offending path
                    std::string path = window.label(w);
                    std::pair<int, bool> cur{st.vertex, st.escaped};
                    path = window.label(cur.first) + " -> " + path;
                    while (cur.first != u || cur.second) {
                        cur = parent.at(cur);
                        path = window.label(cur.first) + " -> " + path;
                    }
                    rep.path_complete = false;
                    rep.witness = "path leaves the slice: " + path;
                    return rep;
                }
                if (seen.insert({w, esc}).second) {
                    parent[{w, esc}] = {st.vertex, st.escaped};
                    queue.push_back({w, esc});
                }
            }
        }
    }
    return rep;
}

SlicePlan tau_slice(const SkeletonPtr& window, int anchor) {
    if (!window || window->kind != QuiverKind::Cover)
        throw std::invalid_argument("tau_slice expects a cover window");
    const int m = window->m;
    if (window->level_lo > anchor || window->level_hi < anchor + m - 1)
        throw std::invalid_argument(
            "window too small for a slice at level " + std::to_string(anchor) +
            ": need levels [" + std::to_string(anchor) + ", " + std::to_string(anchor + m - 1) +
            "], have [" + std::to_string(window->level_lo) + ", " +
            std::to_string(window->level_hi) + "]");

    SlicePlan plan;
    plan.window = window;
    plan.anchor = anchor;
    for (int v = 0; v < window->size(); ++v)
        if (window->vertices[v].back() == anchor) plan.slice.push_back(v);
    plan.axioms = check_slice_axioms(*window, plan.slice);

    std::set<int> completion;
    for (int v : plan.slice) {
        const VertexVec& iv = window->vertices[v];
        VertexVec head(iv.begin(), iv.end() - 1);
        Cuboid c = cuboid_of(head, m);
        for (int l = 0; l <= m - 1; ++l)
            for (const auto& a : c.layer(l)) {
                VertexVec w = vmap_bar(iv, a);
                completion.insert(window->vid(w));
            }
    }
    plan.completion.assign(completion.begin(), completion.end());
    return plan;
}

}  // namespace pyramid
