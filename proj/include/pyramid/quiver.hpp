#ifndef PYRAMID_QUIVER_HPP
#define PYRAMID_QUIVER_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pyramid/vertex.hpp"

namespace pyramid {

enum class QuiverKind {
    Pyramid,  // n coordinates, arrow types 1..n
    Stable,   // pyramid plus type n+1 back arrows i -> i - e_n
    Cover,    // vertices (i, level), type n+1 arrows raise the level
    Derived,  // restriction / relabelling / opposite; vertex set is explicit
};

// Immutable quiver skeleton: a sorted vertex list and at most one arrow of
// each type per source.  All higher layers (relations, algebras, modules)
// reference vertices by their index in `vertices`.
class Skeleton {
public:
    QuiverKind kind = QuiverKind::Pyramid;
    int n = 0;  // pyramid dimension (cover vertices carry n+1 coordinates)
    int m = 0;
    int level_lo = 0, level_hi = 0;  // Cover only
    int type_count = 0;

    std::vector<VertexVec> vertices;  // sorted lexicographically
    std::map<VertexVec, int> index_of;
    std::vector<std::vector<int>> out;  // [vid][type-1] -> target vid, -1 if absent

    int size() const { return static_cast<int>(vertices.size()); }
    int coord_count() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }

    bool has_vertex(const VertexVec& v) const { return index_of.count(v) != 0; }

    int vid(const VertexVec& v) const {
        auto it = index_of.find(v);
        if (it == index_of.end())
            throw std::invalid_argument("no such vertex: " + vertex_to_string(v));
        return it->second;
    }

    int target(int v, int t) const { return out[v][t - 1]; }

    int arrow_count() const {
        int c = 0;
        for (const auto& row : out)
            for (int w : row)
                if (w >= 0) ++c;
        return c;
    }

    std::vector<std::array<int, 3>> arrows() const {  // (source vid, type, target vid)
        std::vector<std::array<int, 3>> a;
        for (int v = 0; v < size(); ++v)
            for (int t = 1; t <= type_count; ++t)
                if (out[v][t - 1] >= 0) a.push_back({v, t, out[v][t - 1]});
        return a;
    }

    std::string label(int v) const;  // "1,2,3" or "1,2@0" for cover vertices

    void finalize();  // sorts vertices, builds index; arrows added afterwards
};

using SkeletonPtr = std::shared_ptr<const Skeleton>;

// A subset of a skeleton's vertices with the induced arrows.  Cells,
// hammocks, slices and cuboid completions are all views.  `full_bound`
// is filled in once the view has been checked against a relation set.
struct SubquiverView {
    SkeletonPtr parent;
    std::vector<int> verts;                   // vids, ascending
    std::vector<std::array<int, 3>> arrows;   // induced, (src, type, dst)
    VertexVec end_vertex;                     // cells/hammocks only
    bool complete = false;                    // end vertex present
    std::optional<bool> full_bound;

    bool contains(int v) const {
        return std::binary_search(verts.begin(), verts.end(), v);
    }
};

// --- generators -------------------------------------------------------------

SkeletonPtr generate_quiver(int n, int m);
SkeletonPtr stable_quiver(const SkeletonPtr& pyr);
SkeletonPtr cover_window(const SkeletonPtr& stable, int lo, int hi);

// Restriction to a vertex subset (ids into `parent`); arrows induced.
SkeletonPtr restrict_skeleton(const SkeletonPtr& parent, const std::vector<int>& verts);

// Relabel every vertex through `f` (must be injective on the vertex set).
SkeletonPtr relabel_skeleton(const SkeletonPtr& s,
                             const std::function<VertexVec(const VertexVec&)>& f);

// All arrows reversed; types kept.
SkeletonPtr opposite_skeleton(const SkeletonPtr& s);

// Drop a single arrow (negative-control helper for the verification suite).
SkeletonPtr drop_arrow(const SkeletonPtr& s, const VertexVec& source, int type);

// --- cells and hammocks ------------------------------------------------------

// Cell at i: images of the unit cube corners under vmap_bar that are
// vertices.  Complete when the top corner lands inside the quiver.
SubquiverView cell(const SkeletonPtr& s, const VertexVec& i);

// Hammock at i: images of the one-lower-dimensional cuboid of i.
SubquiverView hammock(const SkeletonPtr& s, const VertexVec& i);

inline bool is_complete(const SubquiverView& v) { return v.complete; }

// --- cuboids and the syzygy permutation -------------------------------------

// Cuboid of a vertex of a pyramid/stable skeleton (p = n), or of a cover
// vertex (the level coordinate is ignored, p = n again).
Cuboid vertex_cuboid(const Skeleton& s, const VertexVec& i);

VertexVec omega(const Skeleton& s, const VertexVec& i);
int omega_order(const Skeleton& s);  // order of the permutation

// --- exports -----------------------------------------------------------------

std::string export_dot(const Skeleton& s);
std::string export_dot(const SubquiverView& v);
std::string export_json(const Skeleton& s);

}  // namespace pyramid

#endif  // PYRAMID_QUIVER_HPP
