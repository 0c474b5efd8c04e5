#include "pyramid/quiver.hpp"

#include <algorithm>
#include <set>

namespace pyramid {

std::string Skeleton::label(int v) const {
    const VertexVec& c = vertices[v];
    if (kind == QuiverKind::Cover) {
        VertexVec head(c.begin(), c.end() - 1);
        return vertex_to_string(head) + "@" + std::to_string(c.back());
    }
    return vertex_to_string(c);
}

void Skeleton::finalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    index_of.clear();
    for (int i = 0; i < size(); ++i) index_of[vertices[i]] = i;
    out.assign(vertices.size(), std::vector<int>(type_count, -1));
}

namespace {

void enumerate_pyramid_vertices(int n, int m, std::vector<VertexVec>& out) {
    VertexVec v(n, 1);
    // DFS over coordinates; prefix bound prunes hard.
    std::function<void(int, int)> go = [&](int pos, int prefix) {
        if (pos == n) {
            out.push_back(v);
            return;
        }
        // prefix + v[pos] <= m + pos  (bound for prefix length pos+1)
        for (int x = 1; prefix + x <= m + pos; ++x) {
            v[pos] = x;
            go(pos + 1, prefix + x);
        }
        v[pos] = 1;
    };
    go(0, 0);
}

void connect_pyramid_arrows(Skeleton& s) {
    const int types = s.n;
    for (int v = 0; v < s.size(); ++v) {
        for (int t = 1; t <= types; ++t) {
            VertexVec w = coord_step(s.vertices[v], t);
            auto it = s.index_of.find(w);
            if (it != s.index_of.end()) s.out[v][t - 1] = it->second;
        }
    }
}

}  // namespace

SkeletonPtr generate_quiver(int n, int m) {
    validate_params(n, m);
    auto s = std::make_shared<Skeleton>();
    s->kind = QuiverKind::Pyramid;
    s->n = n;
    s->m = m;
    s->type_count = n;
    enumerate_pyramid_vertices(n, m, s->vertices);
    s->finalize();
    connect_pyramid_arrows(*s);
    return s;
}

SkeletonPtr stable_quiver(const SkeletonPtr& pyr) {
    if (!pyr) throw std::invalid_argument("stable_quiver: null skeleton");
    if (pyr->kind != QuiverKind::Pyramid && pyr->kind != QuiverKind::Derived)
        throw std::invalid_argument("stable_quiver expects a pyramid-shaped skeleton");
    if (pyr->type_count != pyr->coord_count())
        throw std::invalid_argument("stable_quiver: skeleton already extended");
    const int n = pyr->coord_count();
    auto s = std::make_shared<Skeleton>(*pyr);
    s->kind = QuiverKind::Stable;
    s->type_count = n + 1;
    for (auto& row : s->out) row.push_back(-1);
    for (int v = 0; v < s->size(); ++v) {
        const VertexVec& c = s->vertices[v];
        if (c[n - 1] > 1) {
            VertexVec w = c;
            w[n - 1] -= 1;
            auto it = s->index_of.find(w);
            if (it != s->index_of.end()) s->out[v][n] = it->second;
        }
    }
    return s;
}

SkeletonPtr cover_window(const SkeletonPtr& stable, int lo, int hi) {
    if (!stable) throw std::invalid_argument("cover_window: null skeleton");
    if (stable->kind != QuiverKind::Stable && stable->kind != QuiverKind::Pyramid)
        throw std::invalid_argument("cover_window expects a pyramid or stable skeleton");
    if (lo > hi) throw std::invalid_argument("cover_window: lo must be <= hi");
    const int n = stable->coord_count();
    auto s = std::make_shared<Skeleton>();
    s->kind = QuiverKind::Cover;
    s->n = n;
    s->m = stable->m;
    s->level_lo = lo;
    s->level_hi = hi;
    s->type_count = n + 1;
    for (const VertexVec& c : stable->vertices) {
        for (int v = lo; v <= hi; ++v) {
            VertexVec w = c;
            w.push_back(v);
            s->vertices.push_back(std::move(w));
        }
    }
    s->finalize();
    for (int v = 0; v < s->size(); ++v) {
        const VertexVec& c = s->vertices[v];
        VertexVec head(c.begin(), c.end() - 1);
        const int level = c.back();
        for (int t = 1; t <= n; ++t) {
            VertexVec w = coord_step(head, t);
            if (!in_pyramid(w, s->m)) continue;
            w.push_back(level);
            s->out[v][t - 1] = s->index_of.at(w);
        }
        if (head[n - 1] > 1 && level + 1 <= hi) {
            VertexVec w = head;
            w[n - 1] -= 1;
            w.push_back(level + 1);
            s->out[v][n] = s->index_of.at(w);
        }
    }
    return s;
}

SkeletonPtr restrict_skeleton(const SkeletonPtr& parent, const std::vector<int>& verts) {
    auto s = std::make_shared<Skeleton>();
    s->kind = QuiverKind::Derived;
    s->n = parent->n;
    s->m = parent->m;
    s->level_lo = parent->level_lo;
    s->level_hi = parent->level_hi;
    s->type_count = parent->type_count;
    std::set<int> keep(verts.begin(), verts.end());
    for (int v : keep) s->vertices.push_back(parent->vertices[v]);
    s->finalize();
    for (int v : keep) {
        int sv = s->index_of.at(parent->vertices[v]);
        for (int t = 1; t <= parent->type_count; ++t) {
            int w = parent->target(v, t);
            if (w >= 0 && keep.count(w)) s->out[sv][t - 1] = s->index_of.at(parent->vertices[w]);
        }
    }
    return s;
}

SkeletonPtr relabel_skeleton(const SkeletonPtr& p,
                             const std::function<VertexVec(const VertexVec&)>& f) {
    auto s = std::make_shared<Skeleton>();
    s->kind = QuiverKind::Derived;
    s->n = p->n;
    s->m = p->m;
    s->type_count = p->type_count;
    for (const auto& v : p->vertices) s->vertices.push_back(f(v));
    s->finalize();
    if (s->size() != p->size())
        throw std::invalid_argument("relabel_skeleton: map is not injective on the vertex set");
    for (int v = 0; v < p->size(); ++v) {
        int sv = s->index_of.at(f(p->vertices[v]));
        for (int t = 1; t <= p->type_count; ++t) {
            int w = p->target(v, t);
            if (w >= 0) s->out[sv][t - 1] = s->index_of.at(f(p->vertices[w]));
        }
    }
    return s;
}

SkeletonPtr opposite_skeleton(const SkeletonPtr& p) {
    auto s = std::make_shared<Skeleton>(*p);
    s->kind = QuiverKind::Derived;
    for (auto& row : s->out) std::fill(row.begin(), row.end(), -1);
    for (int v = 0; v < p->size(); ++v)
        for (int t = 1; t <= p->type_count; ++t) {
            int w = p->target(v, t);
            if (w >= 0) s->out[w][t - 1] = v;  // at most one type-t arrow into w
        }
    return s;
}

SkeletonPtr drop_arrow(const SkeletonPtr& p, const VertexVec& source, int type) {
    auto s = std::make_shared<Skeleton>(*p);
    s->kind = QuiverKind::Derived;
    int v = s->vid(source);
    if (s->out[v][type - 1] < 0)
        throw std::invalid_argument("drop_arrow: no such arrow");
    s->out[v][type - 1] = -1;
    return s;
}

namespace {

SubquiverView view_from_points(const SkeletonPtr& s, const std::vector<VertexVec>& pts,
                               const VertexVec& end) {
    SubquiverView view;
    view.parent = s;
    std::set<int> ids;
    for (const auto& p : pts) {
        auto it = s->index_of.find(p);
        if (it != s->index_of.end()) ids.insert(it->second);
    }
    view.verts.assign(ids.begin(), ids.end());
    for (int v : view.verts)
        for (int t = 1; t <= s->type_count; ++t) {
            int w = s->target(v, t);
            if (w >= 0 && ids.count(w)) view.arrows.push_back({v, t, w});
        }
    view.end_vertex = end;
    view.complete = s->has_vertex(end);
    return view;
}

}  // namespace

SubquiverView cell(const SkeletonPtr& s, const VertexVec& i) {
    if (!s->has_vertex(i)) throw std::invalid_argument("cell: not a vertex: " + vertex_to_string(i));
    const int p = s->coord_count();
    std::vector<VertexVec> pts;
    for (int l = 0; l <= p; ++l)
        for (const auto& a : unit_layer(p, l)) pts.push_back(vmap_bar(i, a));
    return view_from_points(s, pts, vmap_bar(i, std::vector<int>(p, 1)));
}

SubquiverView hammock(const SkeletonPtr& s, const VertexVec& i) {
    if (!s->has_vertex(i)) throw std::invalid_argument("hammock: not a vertex: " + vertex_to_string(i));
    const int p = s->coord_count();
    VertexVec head(i.begin(), i.end() - 1);
    Cuboid c = cuboid_of(head, s->m);  // p side lengths
    std::vector<VertexVec> pts;
    for (int l = 0; l <= s->m - 1; ++l)
        for (const auto& a : c.layer(l)) pts.push_back(vmap_bar(i, a));
    std::vector<int> b(c.b.begin(), c.b.end());
    return view_from_points(s, pts, vmap_bar(i, b));
}

Cuboid vertex_cuboid(const Skeleton& s, const VertexVec& i) {
    if (!s.index_of.count(i))
        throw std::invalid_argument("vertex_cuboid: not a vertex: " + vertex_to_string(i));
    if (s.kind == QuiverKind::Cover) {
        VertexVec head(i.begin(), i.end() - 1);
        return cuboid_of(head, s.m);
    }
    return cuboid_of(i, s.m);
}

VertexVec omega(const Skeleton& s, const VertexVec& i) {
    if (!s.index_of.count(i))
        throw std::invalid_argument("omega: not a vertex: " + vertex_to_string(i));
    return omega_map(i, s.m);
}

int omega_order(const Skeleton& s) {
    int order = 1;
    for (const auto& v : s.vertices) {
        VertexVec w = omega_map(v, s.m);
        int k = 1;
        while (w != v) {
            w = omega_map(w, s.m);
            ++k;
            if (k > s.size() + 1) throw std::logic_error("omega does not permute the vertex set");
        }
        order = std::lcm(order, k);
    }
    return order;
}

}  // namespace pyramid
