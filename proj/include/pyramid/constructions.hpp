#ifndef PYRAMID_CONSTRUCTIONS_HPP
#define PYRAMID_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "pyramid/resolution.hpp"

namespace pyramid {

// ---------------------------------------------------------------------------
// The level-raising pipeline: extend, cover, slice, complete, truncate,
// dualize.  One full turn takes a pyramid-type algebra of dimension n to the
// pair (Lambda(n+1), Gamma(n+1)).
// ---------------------------------------------------------------------------

// Adds the back arrows i -> i - e_N (type N+1) and regenerates the extra
// square/binomial relations they create.  Existing relations are kept; the
// scheme only supplies the new coefficients.
template <class K>
BoundAlgebra<K> stable_extend(const BoundAlgebra<K>& alg, const CoefficientScheme<K>& scheme) {
    SkeletonPtr ext = stable_quiver(alg.skeleton_ptr());
    std::vector<Relation<K>> rels = alg.relations();  // vertex ids are stable under extension
    const int nt = ext->type_count;
    for (int v = 0; v < ext->size(); ++v) {
        int w1 = ext->target(v, nt);
        if (w1 < 0) continue;
        int w2 = ext->target(w1, nt);
        if (w2 >= 0) rels.push_back({v, w2, {{K(1), {nt, nt}}}});
        for (int t = 1; t < nt; ++t) {
            int via_t = ext->target(v, t);
            int tgt_t_nt = via_t >= 0 ? ext->target(via_t, nt) : -1;
            int tgt_nt_t = ext->target(w1, t);
            if (tgt_t_nt < 0 || tgt_nt_t < 0 || tgt_t_nt != tgt_nt_t) continue;
            K d = scheme.d(nt, t, ext->vertices[v]);
            rels.push_back({v, tgt_nt_t, {{d, {nt, t}}, {K(-1), {t, nt}}}});
        }
    }
    return BoundAlgebra<K>(ext, std::move(rels), scheme.mode);
}

// The windowed smash-product algebra: one copy of the base relations per
// level plus the cross-level squares and binomials.
template <class K>
BoundAlgebra<K> cover_algebra(const BoundAlgebra<K>& alg, const CoefficientScheme<K>& scheme,
                              int lo, int hi) {
    SkeletonPtr base = alg.skeleton_ptr();
    SkeletonPtr stable =
        base->type_count == base->coord_count() ? stable_quiver(base) : base;
    SkeletonPtr win = cover_window(stable, lo, hi);
    const Skeleton& s = alg.skeleton();
    const int nt = win->type_count;
    std::vector<Relation<K>> rels;
    // per-level copies of the base relations
    for (const auto& r : alg.relations()) {
        for (int v = lo; v <= hi; ++v) {
            VertexVec src = s.vertices[r.source];
            src.push_back(v);
            VertexVec tgt = s.vertices[r.target];
            tgt.push_back(v);
            Relation<K> c = r;
            c.source = win->vid(src);
            c.target = win->vid(tgt);
            rels.push_back(std::move(c));
        }
    }
    // cross-level relations
    for (int v = 0; v < win->size(); ++v) {
        int w1 = win->target(v, nt);
        if (w1 < 0) continue;
        int w2 = win->target(w1, nt);
        if (w2 >= 0) rels.push_back({v, w2, {{K(1), {nt, nt}}}});
        for (int t = 1; t < nt; ++t) {
            int via_t = win->target(v, t);
            int tgt_t_nt = via_t >= 0 ? win->target(via_t, nt) : -1;
            int tgt_nt_t = win->target(w1, t);
            if (tgt_t_nt < 0 || tgt_nt_t < 0 || tgt_t_nt != tgt_nt_t) continue;
            K d = scheme.d(nt, t, win->vertices[v]);
            rels.push_back({v, tgt_nt_t, {{d, {nt, t}}, {K(-1), {t, nt}}}});
        }
    }
    return BoundAlgebra<K>(win, std::move(rels), scheme.mode);
}

// ---------------------------------------------------------------------------
// Slices.
// ---------------------------------------------------------------------------

struct SliceAxiomReport {
    bool orbit_ok = true;          // each translation orbit meets the slice once
    bool path_complete = true;     // no path leaves and re-enters
    std::string witness;
};

// Checks the two slice axioms for an arbitrary vertex subset of a cover
// window: (a) every level orbit {(i, *)} meets the subset exactly once, and
// (b) any path between subset vertices stays inside.
SliceAxiomReport check_slice_axioms(const Skeleton& window, const std::vector<int>& subset);

struct SlicePlan {
    SkeletonPtr window;
    int anchor = 0;
    std::vector<int> slice;        // vids of the level-anchor copy
    std::vector<int> completion;   // vids of the cuboid completion
    SliceAxiomReport axioms;
};

// Builds the plan for the slice at level `anchor`.  The completion reaches
// levels up to anchor + m - 1 (the longest cuboid side in the level
// direction is m-1), so the window must cover that range.
SlicePlan tau_slice(const SkeletonPtr& window, int anchor);

// The full subquiver on the completion vertex set, checked to be a full
// bound subquiver of the windowed algebra.  A violation here is a hard
// error: the construction guarantees it.
template <class K>
SubquiverView cuboid_completion(const SlicePlan& plan, const BoundAlgebra<K>& cover) {
    const Skeleton& w = *plan.window;
    SubquiverView view;
    view.parent = plan.window;
    view.verts = plan.completion;
    for (int v : view.verts)
        for (int t = 1; t <= w.type_count; ++t) {
            int u = w.target(v, t);
            if (u >= 0 && view.contains(u)) view.arrows.push_back({v, t, u});
        }
    for (const auto& r : cover.relations()) {
        if (!view.contains(r.source) || !view.contains(r.target)) continue;
        for (const auto& term : r.terms) {
            int at = r.source;
            for (std::size_t k = 0; k + 1 < term.types.size(); ++k) {
                at = w.target(at, term.types[k]);
                if (!view.contains(at))
                    throw std::logic_error("cuboid completion is not a full bound subquiver");
            }
        }
    }
    view.full_bound = true;
    return view;
}

// Kill the idempotents outside the completion and re-coordinate the quotient
// onto pyramid coordinates of dimension n+1 (level v at anchor t becomes the
// trailing coordinate v - t + 1).
template <class K>
BoundAlgebra<K> truncate(const BoundAlgebra<K>& cover, const SlicePlan& plan) {
    BoundAlgebra<K> sub = restrict_algebra(cover, plan.completion);
    const int anchor = plan.anchor;
    BoundAlgebra<K> out = relabel_algebra(sub, [anchor](const VertexVec& v) {
        VertexVec w = v;
        w.back() = w.back() - anchor + 1;
        return w;
    });
    return out;
}

// ---------------------------------------------------------------------------
// One full turn of the crank.
// ---------------------------------------------------------------------------

struct ConeStage {
    std::string name;
    int vertices = 0;
    int arrows = 0;
};

struct ConeManifest {
    int n_in = 0, m = 0;
    std::vector<ConeStage> stages;
    std::string lambda_dims_checksum;
    std::string gamma_dims_checksum;
};

template <class K>
struct ConeResult {
    BoundAlgebra<K> lambda_next;
    BoundAlgebra<K> gamma_next;
    ConeManifest manifest;
};

std::string fnv64_hex(const std::string& data);

template <class K>
std::string dims_checksum(const BoundAlgebra<K>& alg) {
    std::string blob;
    for (const auto& row : dims_table(alg)) {
        blob += vertex_to_string(row.source) + "|" + vertex_to_string(row.target) + "|" +
                std::to_string(row.degree) + "|" + std::to_string(row.dim) + "\n";
    }
    return fnv64_hex(blob);
}

template <class K>
ConeResult<K> cone(const BoundAlgebra<K>& alg, const CoefficientScheme<K>& scheme) {
    const int m = alg.skeleton().m;
    const int anchor = 1;
    ConeManifest man;
    man.n_in = alg.skeleton().coord_count();
    man.m = m;
    auto record = [&man](const std::string& name, const Skeleton& s) {
        man.stages.push_back({name, s.size(), s.arrow_count()});
    };
    record("input", alg.skeleton());
    BoundAlgebra<K> covered = cover_algebra(alg, scheme, anchor, anchor + m - 1);
    record("cover", covered.skeleton());
    SlicePlan plan = tau_slice(covered.skeleton_ptr(), anchor);
    if (!plan.axioms.orbit_ok || !plan.axioms.path_complete)
        throw std::logic_error("slice axioms failed: " + plan.axioms.witness);
    SubquiverView completion = cuboid_completion(plan, covered);
    BoundAlgebra<K> lambda = truncate(covered, plan);
    record("truncation", lambda.skeleton());
    BoundAlgebra<K> gamma = quadratic_dual(lambda);
    man.lambda_dims_checksum = dims_checksum(lambda);
    man.gamma_dims_checksum = dims_checksum(gamma);
    (void)completion;
    return {std::move(lambda), std::move(gamma), std::move(man)};
}

// ---------------------------------------------------------------------------
// Loewy-length / completeness / projective-injectivity report.
// ---------------------------------------------------------------------------

enum class CompletenessMode { CellMode, HammockMode };

struct PIRow {
    VertexVec vertex;
    int loewy = 0;
    bool complete = false;
    bool proj_inj = false;
};

// A projective A e_i is injective exactly when its socle is simple and its
// dimension matches the corresponding row total (the dimension of e_j A).
template <class K>
bool is_projective_injective(const BoundAlgebra<K>& alg, const VertexVec& i) {
    auto socle = socle_layers(alg, i);
    if (socle.empty()) return false;
    const auto& bottom = socle.front();
    if (bottom.size() != 1 || bottom[0].second != 1) return false;
    int j = bottom[0].first;
    int col = total_dim_from(alg, alg.skeleton().vid(i));
    int row = total_dim_into(alg, j);
    return col == row;
}

template <class K>
std::vector<PIRow> projective_injective_report(const BoundAlgebra<K>& alg,
                                               CompletenessMode mode) {
    const Skeleton& s = alg.skeleton();
    std::vector<PIRow> rows;
    for (const auto& v : s.vertices) {
        PIRow r;
        r.vertex = v;
        r.loewy = loewy_length(alg, v);
        SubquiverView view = mode == CompletenessMode::CellMode ? cell(alg.skeleton_ptr(), v)
                                                                : hammock(alg.skeleton_ptr(), v);
        r.complete = view.complete;
        r.proj_inj = is_projective_injective(alg, v);
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Coordinate identification between the completion at anchor 1 and the
// directly generated pyramid in one more dimension.
// ---------------------------------------------------------------------------

// (j_1, ..., j_{n+1})  <->  the completion point of the anchor-slice vertex
// (j_1, ..., j_{n-1}, j_n + j_{n+1} - 1) at box point (0, ..., 0, j_{n+1}-1).
inline VertexVec completion_anchor_of(const VertexVec& j) {
    VertexVec i(j.begin(), j.end() - 1);
    i[i.size() - 1] += j.back() - 1;
    return i;
}

inline VertexVec completion_point_of(const VertexVec& i_slice, int level_offset) {
    VertexVec iv = i_slice;
    iv.push_back(1);
    std::vector<int> a(iv.size(), 0);
    a.back() = level_offset;
    return vmap_bar(iv, a);
}

}  // namespace pyramid

#endif  // PYRAMID_CONSTRUCTIONS_HPP
