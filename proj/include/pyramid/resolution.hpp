#ifndef PYRAMID_RESOLUTION_HPP
#define PYRAMID_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pyramid/algebra.hpp"

namespace pyramid {

// ---------------------------------------------------------------------------
// Minimal graded projective resolutions of simple modules, computed by exact
// linear algebra, plus the closed-form cuboid prediction they are checked
// against.
// ---------------------------------------------------------------------------

struct GenSpec {
    int vertex = -1;  // vid
    int degree = 0;
    friend bool operator<(const GenSpec& a, const GenSpec& b) {
        return std::tie(a.degree, a.vertex) < std::tie(b.degree, b.vertex);
    }
    friend bool operator==(const GenSpec& a, const GenSpec& b) {
        return a.vertex == b.vertex && a.degree == b.degree;
    }
};

// Map entry: the image of generator k of step l, as one coordinate block per
// generator r of step l-1 (coordinates over the graded component basis of
// e_{v_k} A e_{v_r} in degree d_k - d_r).
template <class K>
struct ResolutionStep {
    std::vector<GenSpec> gens;
    std::vector<std::vector<std::vector<K>>> map;  // [k][r] -> coords
};

enum class TerminalKind { Zero, Semisimple, Truncated };

struct Terminal {
    TerminalKind kind = TerminalKind::Truncated;
    std::vector<GenSpec> socle;  // semisimple kernel, with multiplicity via repetition
};

// Per-step record of whether Ker f_l was semisimple (and where it sits);
// the classifier reads these marks.
struct KernelMark {
    bool zero = false;
    bool semisimple = false;
    std::vector<GenSpec> socle;
};

template <class K>
struct ResolutionReport {
    VertexVec simple;
    std::vector<ResolutionStep<K>> steps;
    Terminal terminal;
    std::vector<KernelMark> marks;  // marks[l] describes Ker f_l
};

enum class ResolveMode {
    ToCutoff,      // stop only at a zero kernel or the cutoff
    AtSemisimple,  // additionally stop at the first semisimple nonzero kernel
};

namespace detail {

// Graded submodule of P^l = (+)_k P(v_k)[d_k], stored per (vertex, degree)
// slot as an RREF row space over the concatenated component coordinates.
template <class K>
struct GradedSubmodule {
    // slot key -> rows
    std::map<std::pair<int, int>, RowSpace<K>> slots;

    bool empty() const {
        for (const auto& [k, rs] : slots)
            if (rs.rank() > 0) return false;
        return true;
    }
};

// Coordinate layout of P^l at one (vertex j, degree d) slot.
template <class K>
struct SlotLayout {
    std::vector<int> offset;  // per generator
    int width = 0;
};

template <class K>
SlotLayout<K> slot_layout(const BoundAlgebra<K>& alg, const std::vector<GenSpec>& gens, int j,
                          int d) {
    SlotLayout<K> lay;
    lay.offset.resize(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        lay.offset[k] = lay.width;
        if (d >= gens[k].degree)
            lay.width += alg.component(gens[k].vertex, j, d - gens[k].degree).dim();
    }
    return lay;
}

}  // namespace detail

template <class K>
ResolutionReport<K> minimal_resolution(const BoundAlgebra<K>& alg, const VertexVec& simple,
                                       int cutoff, ResolveMode mode) {
    if (cutoff < 1) throw std::invalid_argument("minimal_resolution: cutoff must be >= 1");
    const Skeleton& s = alg.skeleton();
    const int src = s.vid(simple);
    const int bound = alg.grading_bound();

    ResolutionReport<K> report;
    report.simple = simple;
    report.steps.push_back({{GenSpec{src, 0}}, {}});

    // Kernel of the cover map P(i) -> S(i): everything in positive degree.
    detail::GradedSubmodule<K> ker;
    for (int d = 1; d <= bound; ++d)
        for (int j = 0; j < s.size(); ++j) {
            int dim = alg.graded_dim(src, j, d);
            if (dim == 0) continue;
            RowSpace<K> rs(dim);
            for (int b = 0; b < dim; ++b) {
                std::vector<K> row(dim, K(0));
                row[b] = K(1);
                rs.insert(std::move(row));
            }
            ker.slots.emplace(std::make_pair(j, d), std::move(rs));
        }

    // Left-multiplies a slot vector by the arrow of `type` out of j.
    // `gens` describes the ambient step module.
    auto push_by_arrow = [&](const std::vector<GenSpec>& gens, int j, int d,
                             const std::vector<K>& x, int type) {
        const int w = s.target(j, type);
        detail::SlotLayout<K> from = detail::slot_layout(alg, gens, j, d);
        detail::SlotLayout<K> to = detail::slot_layout(alg, gens, w, d + 1);
        std::vector<K> y(to.width, K(0));
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (d < gens[k].degree) continue;
            const auto& c = alg.component(gens[k].vertex, j, d - gens[k].degree);
            if (c.dim() == 0) continue;
            const auto& ct = alg.component(gens[k].vertex, w, d + 1 - gens[k].degree);
            std::vector<K> raw(ct.path_count(), K(0));
            bool any = false;
            for (int b = 0; b < c.dim(); ++b) {
                const K& coeff = x[from.offset[k] + b];
                if (coeff == K(0)) continue;
                std::vector<int> types = c.paths[c.basis[b]];
                types.push_back(type);
                int idx = ct.path_index(types);
                raw[idx] += coeff;
                any = true;
            }
            if (!any) continue;
            auto red = ct.reduce(std::move(raw));
            for (std::size_t b = 0; b < red.size(); ++b) y[to.offset[k] + b] += red[b];
        }
        return y;
    };

    for (int l = 1;; ++l) {
        // copy: pushing the next step below reallocates the steps vector
        const std::vector<GenSpec> prev_gens = report.steps.back().gens;

        if (ker.empty()) {
            report.terminal.kind = TerminalKind::Zero;
            report.marks.push_back({true, false, {}});
            return report;
        }

        // rad K: arrow pushes of every kernel row; also decides semisimplicity.
        std::map<std::pair<int, int>, RowSpace<K>> spanned;
        bool all_pushes_zero = true;
        for (const auto& [key, rs] : ker.slots) {
            const auto [j, d] = key;
            for (int t = 1; t <= s.type_count; ++t) {
                if (s.target(j, t) < 0) continue;
                const int w = s.target(j, t);
                for (const auto& row : rs.rows()) {
                    std::vector<K> y = push_by_arrow(prev_gens, j, d, row, t);
                    bool zero = true;
                    for (const K& c : y)
                        if (c != K(0)) {
                            zero = false;
                            break;
                        }
                    if (zero) continue;
                    all_pushes_zero = false;
                    auto it = spanned.find({w, d + 1});
                    if (it == spanned.end())
                        it = spanned.emplace(std::make_pair(w, d + 1),
                                             RowSpace<K>(static_cast<int>(y.size()))).first;
                    it->second.insert(std::move(y));
                }
            }
        }

        KernelMark mark;
        mark.zero = false;
        mark.semisimple = all_pushes_zero;
        if (all_pushes_zero)
            for (const auto& [key, rs] : ker.slots)
                for (int r = 0; r < rs.rank(); ++r) mark.socle.push_back({key.first, key.second});
        report.marks.push_back(mark);

        if (mode == ResolveMode::AtSemisimple && all_pushes_zero) {
            report.terminal.kind = TerminalKind::Semisimple;
            report.terminal.socle = mark.socle;
            return report;
        }
        if (l > cutoff) {
            report.terminal.kind = TerminalKind::Truncated;
            return report;
        }

        // Generators of top(K): slotwise complement of rad K inside K.
        ResolutionStep<K> step;
        std::vector<std::vector<K>> gen_vectors;  // slot coordinates
        std::vector<std::pair<int, int>> gen_slots;
        for (const auto& [key, rs] : ker.slots) {
            const auto [j, d] = key;
            RowSpace<K> seen(rs.cols());
            auto it = spanned.find(key);
            if (it != spanned.end())
                for (const auto& row : it->second.rows()) seen.insert(row);
            for (const auto& row : rs.rows()) {
                if (seen.insert(row)) {
                    step.gens.push_back({j, d});
                    gen_vectors.push_back(row);
                    gen_slots.push_back(key);
                }
            }
        }
        // Keys iterate in (vertex, degree) order; re-sort by (degree, vertex)
        // so linear parts read off in homological order.
        {
            std::vector<std::size_t> perm(step.gens.size());
            for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
            std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
                return step.gens[a] < step.gens[b];
            });
            std::vector<GenSpec> g2;
            std::vector<std::vector<K>> v2;
            std::vector<std::pair<int, int>> s2;
            for (std::size_t k : perm) {
                g2.push_back(step.gens[k]);
                v2.push_back(gen_vectors[k]);
                s2.push_back(gen_slots[k]);
            }
            step.gens = std::move(g2);
            gen_vectors = std::move(v2);
            gen_slots = std::move(s2);
        }
        // Map table: decompose each generator vector into per-previous-gen
        // blocks; a block in degree zero would contradict minimality.
        for (std::size_t k = 0; k < step.gens.size(); ++k) {
            const auto [j, d] = gen_slots[k];
            detail::SlotLayout<K> lay = detail::slot_layout(alg, prev_gens, j, d);
            std::vector<std::vector<K>> blocks(prev_gens.size());
            for (std::size_t r = 0; r < prev_gens.size(); ++r) {
                if (d < prev_gens[r].degree) continue;
                const auto& c = alg.component(prev_gens[r].vertex, j, d - prev_gens[r].degree);
                std::vector<K> block(c.dim());
                bool nonzero = false;
                for (int b = 0; b < c.dim(); ++b) {
                    block[b] = gen_vectors[k][lay.offset[r] + b];
                    if (block[b] != K(0)) nonzero = true;
                }
                if (nonzero && d == prev_gens[r].degree)
                    throw std::logic_error("resolution lost minimality: degree-0 map entry");
                blocks[r] = std::move(block);
            }
            step.map.push_back(std::move(blocks));
        }
        report.steps.push_back(std::move(step));
        const std::vector<GenSpec>& gens = report.steps.back().gens;

        // Kernel of f_l, degree by degree.
        detail::GradedSubmodule<K> next_ker;
        int dmin = gens.front().degree, dmax = gens.front().degree;
        for (const auto& g : gens) {
            dmin = std::min(dmin, g.degree);
            dmax = std::max(dmax, g.degree);
        }
        for (int d = dmin; d <= dmax + bound; ++d) {
            for (int j = 0; j < s.size(); ++j) {
                detail::SlotLayout<K> dom = detail::slot_layout(alg, gens, j, d);
                if (dom.width == 0) continue;
                detail::SlotLayout<K> img = detail::slot_layout(alg, prev_gens, j, d);
                // image of each domain basis vector
                std::vector<std::vector<K>> images(dom.width, std::vector<K>(img.width, K(0)));
                int col = 0;
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    if (d < gens[k].degree) continue;
                    const auto& ck = alg.component(gens[k].vertex, j, d - gens[k].degree);
                    for (int b = 0; b < ck.dim(); ++b, ++col) {
                        // x_b . theta_k, blockwise over previous generators
                        for (std::size_t r = 0; r < prev_gens.size(); ++r) {
                            const auto& block = report.steps.back().map[k][r];
                            if (block.empty()) continue;
                            const auto& cth = alg.component(prev_gens[r].vertex, gens[k].vertex,
                                                            gens[k].degree - prev_gens[r].degree);
                            const auto& cd = alg.component(prev_gens[r].vertex, j,
                                                           d - prev_gens[r].degree);
                            std::vector<K> raw(cd.path_count(), K(0));
                            bool any = false;
                            for (std::size_t bt = 0; bt < block.size(); ++bt) {
                                if (block[bt] == K(0)) continue;
                                std::vector<int> types = cth.paths[cth.basis[bt]];
                                const auto& tail = ck.paths[ck.basis[b]];
                                types.insert(types.end(), tail.begin(), tail.end());
                                int idx = cd.path_index(types);
                                raw[idx] += block[bt];
                                any = true;
                            }
                            if (!any) continue;
                            auto red = cd.reduce(std::move(raw));
                            for (std::size_t c2 = 0; c2 < red.size(); ++c2)
                                images[col][img.offset[r] + c2] += red[c2];
                        }
                    }
                }
                // kernel = vectors orthogonal to every image coordinate row
                std::vector<std::vector<K>> constraints;
                for (int c2 = 0; c2 < img.width; ++c2) {
                    std::vector<K> row(dom.width, K(0));
                    bool nonzero = false;
                    for (int b = 0; b < dom.width; ++b) {
                        row[b] = images[b][c2];
                        if (row[b] != K(0)) nonzero = true;
                    }
                    if (nonzero) constraints.push_back(std::move(row));
                }
                auto null = nullspace(constraints, dom.width);
                if (null.empty()) continue;
                RowSpace<K> rs(dom.width);
                for (auto& v : null) rs.insert(std::move(v));
                if (rs.rank() > 0) next_ker.slots.emplace(std::make_pair(j, d), std::move(rs));
            }
        }
        ker = std::move(next_ker);
    }
}

// ---------------------------------------------------------------------------
// Shapes: generator multisets with internal degrees, for comparison against
// the combinatorial prediction.
// ---------------------------------------------------------------------------

struct ShapeGen {
    VertexVec vertex;
    int degree = 0;
    friend bool operator<(const ShapeGen& a, const ShapeGen& b) {
        return std::tie(a.vertex, a.degree) < std::tie(b.vertex, b.degree);
    }
    friend bool operator==(const ShapeGen& a, const ShapeGen& b) {
        return a.vertex == b.vertex && a.degree == b.degree;
    }
};

struct ResolutionShape {
    VertexVec simple;
    std::vector<std::vector<ShapeGen>> steps;  // each sorted
    TerminalKind terminal_kind = TerminalKind::Truncated;
    std::vector<ShapeGen> terminal;  // sorted
};

template <class K>
ResolutionShape shape_of(const ResolutionReport<K>& report, const Skeleton& s) {
    ResolutionShape shape;
    shape.simple = report.simple;
    for (const auto& step : report.steps) {
        std::vector<ShapeGen> gens;
        for (const auto& g : step.gens) gens.push_back({s.vertices[g.vertex], g.degree});
        std::sort(gens.begin(), gens.end());
        shape.steps.push_back(std::move(gens));
    }
    shape.terminal_kind = report.terminal.kind;
    for (const auto& g : report.terminal.socle)
        shape.terminal.push_back({s.vertices[g.vertex], g.degree});
    std::sort(shape.terminal.begin(), shape.terminal.end());
    return shape;
}

// Cuboid prediction for a stable-quiver simple: step l is generated by the
// layer-l box points pushed through the vertex map, in internal degree l;
// the terminal kernel is the simple at the far corner in degree m+n.
inline ResolutionShape predict_stable_resolution(const Skeleton& s, const VertexVec& i) {
    if (s.kind != QuiverKind::Stable)
        throw std::invalid_argument("predict_stable_resolution expects a stable skeleton");
    if (!s.index_of.count(i))
        throw std::invalid_argument("predict_stable_resolution: not a vertex: " +
                                    vertex_to_string(i));
    Cuboid c = cuboid_of(i, s.m);
    ResolutionShape shape;
    shape.simple = i;
    for (int l = 0; l <= s.m - 1; ++l) {
        std::vector<ShapeGen> gens;
        for (const auto& a : c.layer(l)) gens.push_back({vmap(i, a), l});
        std::sort(gens.begin(), gens.end());
        shape.steps.push_back(std::move(gens));
    }
    shape.terminal_kind = TerminalKind::Semisimple;
    shape.terminal = {{omega_map(i, s.m), s.m + s.n}};
    return shape;
}

// Same prediction through the level-raising vertex map for the covered
// quiver.  Valid when the window is generous enough to contain the support.
inline ResolutionShape predict_cover_resolution(const Skeleton& s, const VertexVec& iv) {
    if (s.kind != QuiverKind::Cover)
        throw std::invalid_argument("predict_cover_resolution expects a cover window");
    if (!s.index_of.count(iv))
        throw std::invalid_argument("predict_cover_resolution: not a vertex: " +
                                    vertex_to_string(iv));
    VertexVec head(iv.begin(), iv.end() - 1);
    Cuboid c = cuboid_of(head, s.m);
    ResolutionShape shape;
    shape.simple = iv;
    for (int l = 0; l <= s.m - 1; ++l) {
        std::vector<ShapeGen> gens;
        for (const auto& a : c.layer(l)) gens.push_back({vmap_bar(iv, a), l});
        std::sort(gens.begin(), gens.end());
        shape.steps.push_back(std::move(gens));
    }
    std::vector<int> be(c.b.begin(), c.b.end());
    for (int& x : be) x += 1;
    shape.terminal_kind = TerminalKind::Semisimple;
    shape.terminal = {{vmap_bar(iv, be), s.m + s.n}};
    return shape;
}

struct ShapeDiff {
    bool equal = true;
    std::string description;
};

// Structured diff: empty iff the step multisets (with internal degrees) and
// the terminal descriptors agree.  Reports the first divergent step.
ShapeDiff compare(const ResolutionShape& actual, const ResolutionShape& predicted);

// ---------------------------------------------------------------------------
// Almost-Koszul classification and syzygy periodicity.
// ---------------------------------------------------------------------------

enum class KoszulFlag { Koszul, AlmostKoszul, Neither, Inconclusive };

struct KoszulType {
    int p = 0;  // top nonzero degree
    int q = 0;  // linear steps (meaningful for AlmostKoszul)
    KoszulFlag flag = KoszulFlag::Inconclusive;
    std::string detail;
};

template <class K>
KoszulType koszul_classify(const BoundAlgebra<K>& alg, int cutoff) {
    const Skeleton& s = alg.skeleton();
    KoszulType out;
    out.p = alg.grading_bound();

    bool all_terminated_linear = true;
    bool any_truncated = false;
    int q_candidate = -1;
    bool q_consistent = true;
    bool concentration_ok = true;
    bool linear_up_to_q = true;

    std::vector<ResolutionReport<K>> reports;
    for (const auto& v : s.vertices)
        reports.push_back(minimal_resolution(alg, v, cutoff, ResolveMode::ToCutoff));

    // Longest all-linear prefix per simple; nonlinearity marks the step after
    // the almost-Koszul turning point.
    for (const auto& rep : reports) {
        int linear_prefix = -1;
        for (std::size_t l = 0; l < rep.steps.size(); ++l) {
            bool linear = true;
            for (const auto& g : rep.steps[l].gens)
                if (g.degree != static_cast<int>(l)) linear = false;
            if (!linear) break;
            linear_prefix = static_cast<int>(l);
        }
        bool terminated = rep.terminal.kind == TerminalKind::Zero;
        if (rep.terminal.kind == TerminalKind::Truncated) any_truncated = true;
        if (!(terminated && linear_prefix == static_cast<int>(rep.steps.size()) - 1))
            all_terminated_linear = false;
        if (!terminated) {
            // candidate q for this simple: last linear step
            if (linear_prefix + 1 < static_cast<int>(rep.steps.size())) {
                // a nonlinear step exists, so the turning point is visible
                int q_here = linear_prefix;
                if (q_candidate < 0) q_candidate = q_here;
                else if (q_candidate != q_here) q_consistent = false;
                if (q_here < 0 || static_cast<std::size_t>(q_here) >= rep.marks.size() ||
                    !rep.marks[q_here].semisimple)
                    concentration_ok = false;
                else
                    for (const auto& g : rep.marks[q_here].socle)
                        if (g.degree != out.p + q_here) concentration_ok = false;
            }
        }
    }

    if (all_terminated_linear && !any_truncated) {
        out.flag = KoszulFlag::Koszul;
        out.q = -1;  // q = infinity
        out.detail = "all simples admit finite linear resolutions";
        return out;
    }
    if (q_candidate < 0) {
        out.flag = KoszulFlag::Inconclusive;
        out.detail = "cutoff too small to witness the turning point";
        return out;
    }
    // Every simple must be linear through q and have its q-th kernel
    // semisimple, concentrated in degree p+q (zero kernels pass vacuously).
    for (const auto& rep : reports) {
        for (std::size_t l = 0; l < rep.steps.size() && l <= static_cast<std::size_t>(q_candidate);
             ++l)
            for (const auto& g : rep.steps[l].gens)
                if (g.degree != static_cast<int>(l)) linear_up_to_q = false;
        if (static_cast<std::size_t>(q_candidate) < rep.marks.size()) {
            const auto& mark = rep.marks[q_candidate];
            if (!mark.zero && !mark.semisimple) concentration_ok = false;
            for (const auto& g : mark.socle)
                if (g.degree != out.p + q_candidate) concentration_ok = false;
        }
    }
    if (q_consistent && concentration_ok && linear_up_to_q) {
        out.flag = KoszulFlag::AlmostKoszul;
        out.q = q_candidate;
        out.detail = "type (" + std::to_string(out.p) + ", " + std::to_string(out.q) + ")";
    } else {
        out.flag = any_truncated ? KoszulFlag::Inconclusive : KoszulFlag::Neither;
        out.detail = q_consistent ? "kernel concentration failed" : "inconsistent linear depth";
    }
    return out;
}

// The permutation induced on simples by the terminal syzygy, together with
// the number of homological steps one application takes.
struct SyzygyData {
    int steps = 0;                 // syzygy order: Omega^steps S(i) = S(perm(i))
    std::vector<int> perm;         // by vid
    std::vector<int> socle_degree; // internal degree of the terminal simple
};

template <class K>
SyzygyData syzygy_permutation(const BoundAlgebra<K>& alg, int cutoff) {
    const Skeleton& s = alg.skeleton();
    SyzygyData data;
    data.perm.resize(s.size(), -1);
    data.socle_degree.resize(s.size(), -1);
    for (int v = 0; v < s.size(); ++v) {
        auto rep = minimal_resolution(alg, s.vertices[v], cutoff, ResolveMode::AtSemisimple);
        if (rep.terminal.kind != TerminalKind::Semisimple || rep.terminal.socle.size() != 1)
            throw std::runtime_error("syzygy of " + vertex_to_string(s.vertices[v]) +
                                     " is not a single simple within the cutoff");
        int steps = static_cast<int>(rep.steps.size());
        if (data.steps == 0) data.steps = steps;
        else if (data.steps != steps)
            throw std::runtime_error("syzygy step count differs between simples");
        data.perm[v] = rep.terminal.socle[0].vertex;
        data.socle_degree[v] = rep.terminal.socle[0].degree;
    }
    return data;
}

template <class K>
std::vector<VertexVec> syzygy_orbit(const BoundAlgebra<K>& alg, const VertexVec& i, int cutoff) {
    const Skeleton& s = alg.skeleton();
    SyzygyData data = syzygy_permutation(alg, cutoff);
    std::vector<VertexVec> orbit{i};
    int at = s.vid(i);
    while (true) {
        at = data.perm[at];
        orbit.push_back(s.vertices[at]);
        if (s.vertices[at] == i) break;
        if (orbit.size() > static_cast<std::size_t>(s.size()) + 1)
            throw std::logic_error("syzygy orbit failed to close");
    }
    return orbit;
}

// Minimal d with Omega^d trivial on every simple: the per-application step
// count times the order of the induced permutation.
template <class K>
int algebra_period(const BoundAlgebra<K>& alg, int cutoff) {
    SyzygyData data = syzygy_permutation(alg, cutoff);
    const int n = static_cast<int>(data.perm.size());
    int order = 1;
    for (int v = 0; v < n; ++v) {
        int at = v, k = 0;
        do {
            at = data.perm[at];
            ++k;
        } while (at != v);
        order = std::lcm(order, k);
    }
    return data.steps * order;
}

}  // namespace pyramid

#endif  // PYRAMID_RESOLUTION_HPP
