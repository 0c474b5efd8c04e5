#ifndef PYRAMID_ALGEBRA_HPP
#define PYRAMID_ALGEBRA_HPP

#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>

#include "pyramid/field.hpp"
#include "pyramid/linalg.hpp"
#include "pyramid/quiver.hpp"

namespace pyramid {

// ---------------------------------------------------------------------------
// Relations.  Every generator is homogeneous of degree 2: either a single
// squared-type path or a two-term binomial tying the two routes around a
// commuting square.  Paths are recorded as type sequences in traversal order.
// ---------------------------------------------------------------------------

template <class K>
struct RelationTerm {
    K coeff;
    std::vector<int> types;
};

template <class K>
struct Relation {
    int source = -1;
    int target = -1;
    std::vector<RelationTerm<K>> terms;
};

enum class SchemeMode { Anticommutative, Commutative, Custom };

// Supplies the unit d(s, t, i) attached to the square at source vertex i for
// the type pair t < s.  The two built-in modes use the constants -1 and +1.
template <class K>
struct CoefficientScheme {
    SchemeMode mode = SchemeMode::Anticommutative;
    std::function<K(int s, int t, const VertexVec&)> custom;

    static CoefficientScheme anticommutative() { return {SchemeMode::Anticommutative, nullptr}; }
    static CoefficientScheme commutative() { return {SchemeMode::Commutative, nullptr}; }
    static CoefficientScheme make_custom(std::function<K(int, int, const VertexVec&)> f) {
        return {SchemeMode::Custom, std::move(f)};
    }

    K d(int s, int t, const VertexVec& at) const {
        K v(0);
        switch (mode) {
            case SchemeMode::Anticommutative: v = K(-1); break;
            case SchemeMode::Commutative: v = K(1); break;
            case SchemeMode::Custom: v = custom(s, t, at); break;
        }
        if (v == K(0))
            throw std::invalid_argument("coefficient scheme returned 0 at vertex " +
                                        vertex_to_string(at) + " for types (" +
                                        std::to_string(s) + "," + std::to_string(t) + ")");
        return v;
    }
};

inline const char* scheme_name(SchemeMode m) {
    switch (m) {
        case SchemeMode::Anticommutative: return "anticommutative";
        case SchemeMode::Commutative: return "commutative";
        default: return "custom";
    }
}

// Squares of each arrow type vanish; whenever both routes around a unit
// square of types t < s exist, they are tied by d(s,t,source).  This single
// rule produces the defining relations of the plain, stable and covered
// quivers alike.
template <class K>
std::vector<Relation<K>> generate_relations(const Skeleton& s, const CoefficientScheme<K>& scheme) {
    std::vector<Relation<K>> rels;
    for (int v = 0; v < s.size(); ++v) {
        for (int t = 1; t <= s.type_count; ++t) {
            int w1 = s.target(v, t);
            if (w1 < 0) continue;
            int w2 = s.target(w1, t);
            if (w2 >= 0) rels.push_back({v, w2, {{K(1), {t, t}}}});
        }
        for (int t = 1; t <= s.type_count; ++t) {
            for (int u = t + 1; u <= s.type_count; ++u) {
                int via_t = s.target(v, t);
                int via_u = s.target(v, u);
                if (via_t < 0 || via_u < 0) continue;
                int tgt_tu = s.target(via_t, u);  // path [t, u]
                int tgt_ut = s.target(via_u, t);  // path [u, t]
                if (tgt_tu < 0 || tgt_ut < 0 || tgt_tu != tgt_ut) continue;
                K d = scheme.d(u, t, s.vertices[v]);
                rels.push_back({v, tgt_ut, {{d, {u, t}}, {K(-1), {t, u}}}});
            }
        }
    }
    return rels;
}

// ---------------------------------------------------------------------------
// Graded components.  For a (source, target, degree) triple the component
// holds the raw paths, the reduced relation-ideal slice, and the canonical
// quotient basis (classes of the non-pivot paths).
// ---------------------------------------------------------------------------

struct PathInfo {
    std::vector<int> types;
    int target = -1;
};

template <class K>
struct Component {
    int source = -1, target = -1, degree = 0;
    std::vector<std::vector<int>> paths;  // sorted lexicographically
    RowSpace<K> rel{0};
    std::vector<int> basis;  // indices of non-pivot paths

    int dim() const { return static_cast<int>(basis.size()); }
    int path_count() const { return static_cast<int>(paths.size()); }

    int path_index(const std::vector<int>& types) const {
        auto it = std::lower_bound(paths.begin(), paths.end(), types);
        if (it == paths.end() || *it != types) return -1;
        return static_cast<int>(it - paths.begin());
    }

    // Raw coordinates over `paths` -> coordinates over `basis`.
    std::vector<K> reduce(std::vector<K> raw) const {
        rel.reduce(raw);
        std::vector<K> out(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) out[b] = raw[basis[b]];
        return out;
    }
};

// A homogeneous element of e_target . A . e_source in basis coordinates.
template <class K>
struct GradedElement {
    int source = -1, target = -1, degree = 0;
    std::vector<K> coords;

    bool is_zero() const {
        for (const K& c : coords)
            if (c != K(0)) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// BoundAlgebra: a skeleton together with its relation list.  Components are
// computed on demand and cached; the cache fill is idempotent, so concurrent
// readers are fine.
// ---------------------------------------------------------------------------

template <class K>
class BoundAlgebra {
public:
    BoundAlgebra(SkeletonPtr skel, std::vector<Relation<K>> rels, SchemeMode mode)
        : skel_(std::move(skel)), rels_(std::move(rels)), mode_(mode),
          cache_(std::make_unique<Caches>()) {
        validate();
        index_relations();
    }

    const Skeleton& skeleton() const { return *skel_; }
    const SkeletonPtr& skeleton_ptr() const { return skel_; }
    const std::vector<Relation<K>>& relations() const { return rels_; }
    SchemeMode scheme_mode() const { return mode_; }

    // All paths of the given length leaving `src`, lexicographic in the type
    // sequence.
    const std::vector<PathInfo>& paths_from(int src, int len) const {
        const auto key = std::make_pair(src, len);
        {
            std::lock_guard<std::mutex> g(cache_->mu);
            auto it = cache_->paths.find(key);
            if (it != cache_->paths.end()) return it->second;
        }
        std::vector<PathInfo> result = compute_paths(src, len);
        std::lock_guard<std::mutex> g(cache_->mu);
        return cache_->paths.emplace(key, std::move(result)).first->second;
    }

    const Component<K>& component(int src, int tgt, int deg) const {
        const auto key = std::make_tuple(src, tgt, deg);
        {
            std::lock_guard<std::mutex> g(cache_->mu);
            auto it = cache_->comp.find(key);
            if (it != cache_->comp.end()) return it->second;
        }
        Component<K> c = build_component(src, tgt, deg);
        std::lock_guard<std::mutex> g(cache_->mu);
        return cache_->comp.emplace(key, std::move(c)).first->second;
    }

    int graded_dim(int src, int tgt, int deg) const { return component(src, tgt, deg).dim(); }

    int graded_dim(const VertexVec& src, const VertexVec& tgt, int deg) const {
        return graded_dim(skel_->vid(src), skel_->vid(tgt), deg);
    }

    // Largest degree with a nonzero component.  Sound because the algebra is
    // generated in degree one, so a zero degree never resurrects.
    int grading_bound(int cap = 512) const {
        {
            std::lock_guard<std::mutex> g(cache_->mu);
            if (cache_->bound) return *cache_->bound;
        }
        int bound = 0;
        for (int d = 1; d <= cap; ++d) {
            bool nonzero = false;
            for (int v = 0; v < skel_->size() && !nonzero; ++v) {
                std::set<int> targets;
                for (const auto& p : paths_from(v, d)) targets.insert(p.target);
                for (int w : targets)
                    if (component(v, w, d).dim() > 0) {
                        nonzero = true;
                        break;
                    }
            }
            if (!nonzero) {
                bound = d - 1;
                std::lock_guard<std::mutex> g(cache_->mu);
                cache_->bound = bound;
                return bound;
            }
        }
        throw std::logic_error("grading bound probe exceeded cap");
    }

private:
    struct Caches {
        std::mutex mu;
        std::map<std::pair<int, int>, std::vector<PathInfo>> paths;
        std::map<std::tuple<int, int, int>, Component<K>> comp;
        std::optional<int> bound;
    };

    void validate() const {
        for (int v = 0; v < skel_->size(); ++v)
            for (int t = 1; t <= skel_->type_count; ++t) {
                int w = skel_->target(v, t);
                if (w < -1 || w >= skel_->size())
                    throw std::invalid_argument("skeleton has a dangling arrow");
            }
        for (const auto& r : rels_) {
            if (r.terms.empty()) throw std::invalid_argument("empty relation");
            for (const auto& term : r.terms) {
                if (term.coeff == K(0)) throw std::invalid_argument("zero relation coefficient");
                int at = r.source;
                for (int t : term.types) {
                    at = skel_->target(at, t);
                    if (at < 0) throw std::invalid_argument("relation term is not a path");
                }
                if (at != r.target) throw std::invalid_argument("relation term has wrong target");
            }
        }
    }

    void index_relations() {
        for (std::size_t k = 0; k < rels_.size(); ++k)
            rels_by_source_[rels_[k].source].push_back(static_cast<int>(k));
    }

    std::vector<PathInfo> compute_paths(int src, int len) const {
        std::vector<PathInfo> out;
        std::vector<int> types;
        std::function<void(int)> go = [&](int at) {
            if (static_cast<int>(types.size()) == len) {
                out.push_back({types, at});
                return;
            }
            for (int t = 1; t <= skel_->type_count; ++t) {
                int w = skel_->target(at, t);
                if (w < 0) continue;
                types.push_back(t);
                go(w);
                types.pop_back();
            }
        };
        go(src);
        return out;
    }

    Component<K> build_component(int src, int tgt, int deg) const {
        Component<K> c;
        c.source = src;
        c.target = tgt;
        c.degree = deg;
        for (const auto& p : paths_from(src, deg))
            if (p.target == tgt) c.paths.push_back(p.types);
        c.rel = RowSpace<K>(static_cast<int>(c.paths.size()));
        if (!c.paths.empty() && deg >= 2) {
            // Span p . r . q over all relation generators and complementary
            // path pairs.
            for (int a = 0; a + 2 <= deg; ++a) {
                const int b = deg - 2 - a;
                for (const auto& q : paths_from(src, a)) {
                    auto it = rels_by_source_.find(q.target);
                    if (it == rels_by_source_.end()) continue;
                    for (int rk : it->second) {
                        const Relation<K>& r = rels_[rk];
                        for (const auto& p : paths_from(r.target, b)) {
                            if (p.target != tgt) continue;
                            std::vector<K> row(c.paths.size(), K(0));
                            bool any = false;
                            for (const auto& term : r.terms) {
                                std::vector<int> types = q.types;
                                types.insert(types.end(), term.types.begin(), term.types.end());
                                types.insert(types.end(), p.types.begin(), p.types.end());
                                int idx = c.path_index(types);
                                assert(idx >= 0);
                                row[idx] += term.coeff;
                                any = true;
                            }
                            if (any) c.rel.insert(std::move(row));
                        }
                    }
                }
            }
        }
        std::vector<bool> pivot(c.paths.size(), false);
        for (int p : c.rel.pivots()) pivot[p] = true;
        for (int j = 0; j < static_cast<int>(c.paths.size()); ++j)
            if (!pivot[j]) c.basis.push_back(j);
        return c;
    }

    SkeletonPtr skel_;
    std::vector<Relation<K>> rels_;
    SchemeMode mode_;
    std::map<int, std::vector<int>> rels_by_source_;
    std::unique_ptr<Caches> cache_;
};

template <class K>
BoundAlgebra<K> build_algebra(const SkeletonPtr& skel, const CoefficientScheme<K>& scheme) {
    return BoundAlgebra<K>(skel, generate_relations(*skel, scheme), scheme.mode);
}

// ---------------------------------------------------------------------------
// Element arithmetic.
// ---------------------------------------------------------------------------

template <class K>
GradedElement<K> unit_element(const BoundAlgebra<K>& alg, const VertexVec& i) {
    int v = alg.skeleton().vid(i);
    return {v, v, 0, {K(1)}};
}

// Residue of the path starting at `source` with the given type word.  Throws
// if an arrow is missing; returns the zero class when the relations kill it.
template <class K>
GradedElement<K> path_element(const BoundAlgebra<K>& alg, const VertexVec& source,
                              const std::vector<int>& types) {
    const Skeleton& s = alg.skeleton();
    int at = s.vid(source);
    const int src = at;
    for (int t : types) {
        at = s.target(at, t);
        if (at < 0)
            throw std::invalid_argument("path_element: missing arrow of type " + std::to_string(t));
    }
    const auto& c = alg.component(src, at, static_cast<int>(types.size()));
    std::vector<K> raw(c.path_count(), K(0));
    raw[c.path_index(types)] = K(1);
    return {src, at, c.degree, c.reduce(std::move(raw))};
}

// x . y — first y, then x.  Degree-additive and associative.
template <class K>
GradedElement<K> multiply(const BoundAlgebra<K>& alg, const GradedElement<K>& x,
                          const GradedElement<K>& y) {
    if (x.source != y.target)
        throw std::invalid_argument("multiply: target of y must equal source of x");
    const auto& cy = alg.component(y.source, y.target, y.degree);
    const auto& cx = alg.component(x.source, x.target, x.degree);
    const auto& cp = alg.component(y.source, x.target, x.degree + y.degree);
    std::vector<K> raw(cp.path_count(), K(0));
    for (std::size_t a = 0; a < y.coords.size(); ++a) {
        if (y.coords[a] == K(0)) continue;
        for (std::size_t b = 0; b < x.coords.size(); ++b) {
            if (x.coords[b] == K(0)) continue;
            std::vector<int> types = cy.paths[cy.basis[a]];
            const auto& tail = cx.paths[cx.basis[b]];
            types.insert(types.end(), tail.begin(), tail.end());
            int idx = cp.path_index(types);
            assert(idx >= 0);
            raw[idx] += x.coords[b] * y.coords[a];
        }
    }
    return {y.source, x.target, x.degree + y.degree, cp.reduce(std::move(raw))};
}

// ---------------------------------------------------------------------------
// Projective-module structure of A e_i.
// ---------------------------------------------------------------------------

using LayerMultiset = std::vector<std::pair<int, int>>;  // (vid, multiplicity), sorted

template <class K>
std::vector<LayerMultiset> radical_layers(const BoundAlgebra<K>& alg, const VertexVec& i) {
    const Skeleton& s = alg.skeleton();
    const int src = s.vid(i);
    std::vector<LayerMultiset> layers;
    for (int d = 0;; ++d) {
        LayerMultiset layer;
        for (int j = 0; j < s.size(); ++j) {
            int dim = alg.graded_dim(src, j, d);
            if (dim > 0) layer.push_back({j, dim});
        }
        if (layer.empty()) break;
        layers.push_back(std::move(layer));
    }
    return layers;
}

template <class K>
int loewy_length(const BoundAlgebra<K>& alg, const VertexVec& i) {
    return static_cast<int>(radical_layers(alg, i).size());
}

template <class K>
int total_dim_from(const BoundAlgebra<K>& alg, int src) {
    int total = 0;
    for (int d = 0;; ++d) {
        int here = 0;
        for (int j = 0; j < alg.skeleton().size(); ++j) here += alg.graded_dim(src, j, d);
        if (here == 0) break;
        total += here;
    }
    return total;
}

template <class K>
int total_dim_into(const BoundAlgebra<K>& alg, int tgt) {
    int total = 0;
    const int bound = alg.grading_bound();
    for (int d = 0; d <= bound; ++d)
        for (int j = 0; j < alg.skeleton().size(); ++j) total += alg.graded_dim(j, tgt, d);
    return total;
}

// Socle filtration of A e_i, computed degreewise: an element lies in
// soc^{k+1} when every arrow pushes it into soc^k.
template <class K>
std::vector<LayerMultiset> socle_layers(const BoundAlgebra<K>& alg, const VertexVec& i) {
    const Skeleton& s = alg.skeleton();
    const int src = s.vid(i);
    const int bound = alg.grading_bound();

    struct Slot {
        int vertex, degree, dim;
    };
    std::vector<Slot> slots;
    std::map<std::pair<int, int>, int> slot_of;
    for (int d = 0; d <= bound; ++d)
        for (int j = 0; j < s.size(); ++j) {
            int dim = alg.graded_dim(src, j, d);
            if (dim > 0) {
                slot_of[{j, d}] = static_cast<int>(slots.size());
                slots.push_back({j, d, dim});
            }
        }

    // Arrow action on basis vectors, precomputed per slot and type.
    // act[slot][t-1] = matrix rows: image coordinates of each basis vector.
    std::vector<std::vector<std::vector<std::vector<K>>>> act(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
        act[k].resize(s.type_count);
        const auto& c = alg.component(src, slots[k].vertex, slots[k].degree);
        for (int t = 1; t <= s.type_count; ++t) {
            int w = s.target(slots[k].vertex, t);
            if (w < 0) continue;
            const auto& ct = alg.component(src, w, slots[k].degree + 1);
            std::vector<std::vector<K>> rows;
            for (int b = 0; b < c.dim(); ++b) {
                std::vector<K> raw(ct.path_count(), K(0));
                std::vector<int> types = c.paths[c.basis[b]];
                types.push_back(t);
                int idx = ct.path_index(types);
                assert(idx >= 0);
                raw[idx] = K(1);
                rows.push_back(ct.reduce(std::move(raw)));
            }
            act[k][t - 1] = std::move(rows);
        }
    }

    // soc^k per slot as a RowSpace; soc^0 = 0.
    std::vector<std::unique_ptr<RowSpace<K>>> soc(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k)
        soc[k] = std::make_unique<RowSpace<K>>(slots[k].dim);

    std::vector<LayerMultiset> layers;
    while (true) {
        std::vector<std::vector<std::vector<K>>> next(slots.size());
        bool all_full = true;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const Slot& sl = slots[k];
            // Constraints: for every arrow t out of sl.vertex, (gamma_t x)
            // reduced modulo soc^{k-1} at the target slot must vanish.
            std::vector<std::vector<K>> constraints;
            for (int t = 1; t <= s.type_count; ++t) {
                if (act[k][t - 1].empty()) continue;
                int w = s.target(sl.vertex, t);
                auto it = slot_of.find({w, sl.degree + 1});
                const RowSpace<K>* tgt_soc = (it == slot_of.end()) ? nullptr : soc[it->second].get();
                const auto& mat = act[k][t - 1];
                const int img_dim = mat.empty() ? 0 : static_cast<int>(mat[0].size());
                if (img_dim == 0) continue;
                // residual_b = image of basis vector b, reduced mod soc^{k-1}
                std::vector<std::vector<K>> residual;
                for (const auto& row : mat) {
                    std::vector<K> v = row;
                    if (tgt_soc) tgt_soc->reduce(v);
                    residual.push_back(std::move(v));
                }
                for (int cIdx = 0; cIdx < img_dim; ++cIdx) {
                    std::vector<K> cons(sl.dim, K(0));
                    bool nonzero = false;
                    for (int b = 0; b < sl.dim; ++b) {
                        cons[b] = residual[b][cIdx];
                        if (cons[b] != K(0)) nonzero = true;
                    }
                    if (nonzero) constraints.push_back(std::move(cons));
                }
            }
            next[k] = nullspace(constraints, sl.dim);
            if (static_cast<int>(next[k].size()) < sl.dim) all_full = false;
        }
        LayerMultiset layer;
        std::map<int, int> counts;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            RowSpace<K> grown(slots[k].dim);
            for (const auto& r : next[k]) grown.insert(r);
            int gain = grown.rank() - soc[k]->rank();
            if (gain > 0) counts[slots[k].vertex] += gain;
            *soc[k] = std::move(grown);
        }
        for (auto& [v, c] : counts) layer.push_back({v, c});
        if (layer.empty()) break;
        layers.push_back(std::move(layer));
        if (all_full) break;
    }
    return layers;
}

// ---------------------------------------------------------------------------
// Derived algebras: quadratic dual, opposite, restriction, relabelling.
// ---------------------------------------------------------------------------

// Dimensions of the quadratic relation space and its annihilator per vertex
// pair.
struct QuadraticData {
    int path_dim = 0;
    int rel_dim = 0;
    int perp_dim = 0;
};

template <class K>
QuadraticData quadratic_data(const BoundAlgebra<K>& alg, int src, int tgt) {
    const auto& c = alg.component(src, tgt, 2);
    QuadraticData q;
    q.path_dim = c.path_count();
    q.rel_dim = c.rel.rank();
    q.perp_dim = q.path_dim - q.rel_dim;
    return q;
}

// Annihilator relations under the pairing that makes distinct paths
// orthonormal, on the same skeleton.  Composing with `opposite_algebra`
// recovers the literal dual-then-reverse construction; the two orders agree.
template <class K>
BoundAlgebra<K> quadratic_dual(const BoundAlgebra<K>& alg) {
    for (const auto& r : alg.relations())
        for (const auto& term : r.terms)
            if (term.types.size() != 2)
                throw std::invalid_argument("quadratic_dual: relations must be quadratic");

    std::map<std::pair<int, int>, std::vector<const Relation<K>*>> by_pair;
    for (const auto& r : alg.relations()) by_pair[{r.source, r.target}].push_back(&r);

    const Skeleton& s = alg.skeleton();
    std::vector<Relation<K>> dual;
    for (int src = 0; src < s.size(); ++src) {
        std::map<int, std::vector<const PathInfo*>> by_target;
        for (const auto& p : alg.paths_from(src, 2)) by_target[p.target].push_back(&p);
        for (const auto& [tgt, paths] : by_target) {
            std::map<std::vector<int>, int> idx;
            for (std::size_t k = 0; k < paths.size(); ++k) idx[paths[k]->types] = static_cast<int>(k);
            std::vector<std::vector<K>> rows;
            auto it = by_pair.find({src, tgt});
            if (it != by_pair.end())
                for (const Relation<K>* r : it->second) {
                    std::vector<K> row(paths.size(), K(0));
                    for (const auto& term : r->terms) row[idx.at(term.types)] += term.coeff;
                    rows.push_back(std::move(row));
                }
            for (const auto& v : nullspace(rows, static_cast<int>(paths.size()))) {
                Relation<K> r;
                r.source = src;
                r.target = tgt;
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (v[k] != K(0)) r.terms.push_back({v[k], paths[k]->types});
                dual.push_back(std::move(r));
            }
        }
    }
    return BoundAlgebra<K>(alg.skeleton_ptr(), std::move(dual), alg.scheme_mode());
}

template <class K>
BoundAlgebra<K> opposite_algebra(const BoundAlgebra<K>& alg) {
    SkeletonPtr op = opposite_skeleton(alg.skeleton_ptr());
    std::vector<Relation<K>> rels;
    for (const auto& r : alg.relations()) {
        Relation<K> o;
        o.source = r.target;
        o.target = r.source;
        for (const auto& term : r.terms) {
            std::vector<int> types(term.types.rbegin(), term.types.rend());
            o.terms.push_back({term.coeff, std::move(types)});
        }
        rels.push_back(std::move(o));
    }
    return BoundAlgebra<K>(op, std::move(rels), alg.scheme_mode());
}

template <class K>
std::string relation_text(const BoundAlgebra<K>& alg, const Relation<K>& r);

// Restriction to a full bound subquiver.  Relations whose endpoints both
// survive must have every path inside the subset; otherwise the subset is
// rejected with the violating relation.
template <class K>
BoundAlgebra<K> restrict_algebra(const BoundAlgebra<K>& alg, const std::vector<int>& keep_ids) {
    const Skeleton& s = alg.skeleton();
    std::set<int> keep(keep_ids.begin(), keep_ids.end());
    std::vector<Relation<K>> kept;
    for (const auto& r : alg.relations()) {
        if (!keep.count(r.source) || !keep.count(r.target)) continue;
        for (const auto& term : r.terms) {
            int at = r.source;
            for (std::size_t k = 0; k + 1 < term.types.size(); ++k) {
                at = s.target(at, term.types[k]);
                if (!keep.count(at))
                    throw std::invalid_argument(
                        "restriction is not a full bound subquiver; violating relation: " +
                        relation_text(alg, r));
            }
        }
        kept.push_back(r);
    }
    SkeletonPtr sub = restrict_skeleton(alg.skeleton_ptr(), keep_ids);
    for (auto& r : kept) {
        r.source = sub->vid(s.vertices[r.source]);
        r.target = sub->vid(s.vertices[r.target]);
    }
    return BoundAlgebra<K>(sub, std::move(kept), alg.scheme_mode());
}

template <class K>
BoundAlgebra<K> restrict_algebra(const BoundAlgebra<K>& alg, const std::vector<VertexVec>& keep) {
    std::vector<int> ids;
    for (const auto& v : keep) ids.push_back(alg.skeleton().vid(v));
    return restrict_algebra(alg, ids);
}

template <class K>
BoundAlgebra<K> relabel_algebra(const BoundAlgebra<K>& alg,
                                const std::function<VertexVec(const VertexVec&)>& f) {
    const Skeleton& s = alg.skeleton();
    SkeletonPtr sk = relabel_skeleton(alg.skeleton_ptr(), f);
    std::vector<Relation<K>> rels = alg.relations();
    for (auto& r : rels) {
        r.source = sk->vid(f(s.vertices[r.source]));
        r.target = sk->vid(f(s.vertices[r.target]));
    }
    return BoundAlgebra<K>(sk, std::move(rels), alg.scheme_mode());
}

// ---------------------------------------------------------------------------
// Text forms.
// ---------------------------------------------------------------------------

template <class K>
std::string relation_text(const BoundAlgebra<K>& alg, const Relation<K>& r) {
    const Skeleton& s = alg.skeleton();
    std::string out;
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
        const auto& term = r.terms[k];
        std::string c = to_string(term.coeff);
        std::string body;
        // Arrows rendered right-to-left: the first arrow traversed sits at
        // the right, matching composition order.
        int at = r.source;
        std::vector<std::string> factors;
        for (int t : term.types) {
            factors.push_back("g[" + std::to_string(t) + "]@" + s.label(at));
            at = s.target(at, t);
        }
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (!body.empty()) body += " . ";
            body += *it;
        }
        if (k == 0) {
            if (c == "1") out += body;
            else if (c == "-1") out += "-" + body;
            else out += c + "*" + body;
        } else {
            if (c == "1") out += " + " + body;
            else if (c == "-1") out += " - " + body;
            else out += " + " + c + "*" + body;
        }
    }
    return out;
}

template <class K>
std::vector<std::string> relations_text(const BoundAlgebra<K>& alg) {
    std::vector<std::string> lines;
    for (const auto& r : alg.relations()) lines.push_back(relation_text(alg, r));
    std::sort(lines.begin(), lines.end());
    return lines;
}

// One row per nonzero graded dimension, sorted by (source, target, degree).
struct DimRow {
    VertexVec source, target;
    int degree = 0, dim = 0;
    friend bool operator==(const DimRow& a, const DimRow& b) {
        return a.source == b.source && a.target == b.target && a.degree == b.degree &&
               a.dim == b.dim;
    }
};

template <class K>
std::vector<DimRow> dims_table(const BoundAlgebra<K>& alg) {
    const Skeleton& s = alg.skeleton();
    const int bound = alg.grading_bound();
    std::vector<DimRow> rows;
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j)
            for (int d = 0; d <= bound; ++d) {
                int dim = alg.graded_dim(i, j, d);
                if (dim > 0) rows.push_back({s.vertices[i], s.vertices[j], d, dim});
            }
    return rows;
}

}  // namespace pyramid

#endif  // PYRAMID_ALGEBRA_HPP
