#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pyramid/constructions.hpp"

using namespace pyramid;

namespace {

using Alg = BoundAlgebra<Rational>;

const CoefficientScheme<Rational> kScheme = CoefficientScheme<Rational>::anticommutative();

Alg pyramid_alg(int n, int m) { return build_algebra(generate_quiver(n, m), kScheme); }

std::vector<VertexVec> coords_of(const Skeleton& s, const std::vector<int>& vids) {
    std::vector<VertexVec> out;
    for (int v : vids) out.push_back(s.vertices[v]);
    return out;
}

}  // namespace

TEST_CASE("stable_extend agrees with building on the extended skeleton") {
    Alg direct = build_algebra(stable_quiver(generate_quiver(2, 3)), kScheme);
    Alg extended = stable_extend(pyramid_alg(2, 3), kScheme);
    CHECK(relations_text(extended) == relations_text(direct));
    CHECK(dims_table(extended) == dims_table(direct));
}

TEST_CASE("level slices of the covered algebra reproduce the base algebra") {
    Alg base = pyramid_alg(1, 3);
    Alg covered = cover_algebra(base, kScheme, 0, 2);
    const Skeleton& w = covered.skeleton();
    for (int t = 0; t <= 2; ++t) {
        std::vector<int> level;
        for (int v = 0; v < w.size(); ++v)
            if (w.vertices[v].back() == t) level.push_back(v);
        Alg slice = restrict_algebra(covered, level);
        Alg dropped = relabel_algebra(slice, [](const VertexVec& v) {
            return VertexVec(v.begin(), v.end() - 1);
        });
        CHECK(dims_table(dropped) == dims_table(base));
    }
}

TEST_CASE("slice plans") {
    Alg base = pyramid_alg(1, 3);
    Alg covered = cover_algebra(base, kScheme, 0, 2);

    SUBCASE("the level-0 slice satisfies both axioms") {
        SlicePlan plan = tau_slice(covered.skeleton_ptr(), 0);
        CHECK(plan.axioms.orbit_ok);
        CHECK(plan.axioms.path_complete);
        CHECK(plan.slice.size() == 3);
    }
    SUBCASE("too small a window is rejected with the required levels") {
        CHECK_THROWS_WITH_AS(tau_slice(covered.skeleton_ptr(), 1),
                             doctest::Contains("[1, 3]"), std::invalid_argument);
    }
    SUBCASE("a subset missing an orbit representative fails axiom (a)") {
        const Skeleton& w = covered.skeleton();
        std::vector<int> subset{w.vid({1, 0}), w.vid({2, 0})};  // orbit of (3) missed
        auto rep = check_slice_axioms(w, subset);
        CHECK_FALSE(rep.orbit_ok);
        CHECK(rep.witness.find("orbit of (3)") != std::string::npos);
    }
    SUBCASE("a non-path-complete subset fails axiom (b) with a witness path") {
        const Skeleton& w = covered.skeleton();
        // one vertex per orbit, but the type-1 chain from (1,0) to (3,0)
        // passes through (2,0), which is replaced by (2,1)
        std::vector<int> subset{w.vid({1, 0}), w.vid({2, 1}), w.vid({3, 0})};
        auto rep = check_slice_axioms(w, subset);
        CHECK(rep.orbit_ok);
        CHECK_FALSE(rep.path_complete);
        CHECK(rep.witness.find("1@0 -> 2@0 -> 3@0") != std::string::npos);
    }
}

TEST_CASE("cuboid completion at the anchor slice") {
    Alg base = pyramid_alg(1, 3);
    Alg covered = cover_algebra(base, kScheme, 1, 3);
    SlicePlan plan = tau_slice(covered.skeleton_ptr(), 1);
    SubquiverView view = cuboid_completion(plan, covered);
    CHECK(view.full_bound == true);
    CHECK(view.verts.size() == 6);  // binomial(m+n, n+1) = C(4, 2)
    CHECK(coords_of(covered.skeleton(), view.verts) ==
          std::vector<VertexVec>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}});
}

TEST_CASE("completions at different anchors are isomorphic after the level shift") {
    Alg base = pyramid_alg(1, 3);
    Alg covered = cover_algebra(base, kScheme, 1, 5);
    Alg t1 = truncate(covered, tau_slice(covered.skeleton_ptr(), 1));
    Alg t2 = truncate(covered, tau_slice(covered.skeleton_ptr(), 2));
    CHECK(t1.skeleton().vertices == t2.skeleton().vertices);
    CHECK(dims_table(t1) == dims_table(t2));
}

TEST_CASE("truncation equals the directly generated algebra one dimension up") {
    for (auto [n, m] : {std::pair{1, 3}, {1, 4}, {2, 3}}) {
        Alg base = pyramid_alg(n, m);
        Alg covered = cover_algebra(base, kScheme, 1, m);
        SlicePlan plan = tau_slice(covered.skeleton_ptr(), 1);
        Alg trunc = truncate(covered, plan);
        Alg direct = pyramid_alg(n + 1, m);
        CHECK(trunc.skeleton().vertices == direct.skeleton().vertices);
        CHECK(dims_table(trunc) == dims_table(direct));
        CHECK(relations_text(trunc) == relations_text(direct));
    }
}

TEST_CASE("projectives of dropped vertices vanish in the truncation") {
    Alg base = pyramid_alg(1, 3);
    Alg covered = cover_algebra(base, kScheme, 1, 3);
    Alg trunc = truncate(covered, tau_slice(covered.skeleton_ptr(), 1));
    // (3,2) and (3,3) and (2,3) of the window die under the identification
    CHECK_FALSE(trunc.skeleton().has_vertex({3, 2}));
    CHECK_FALSE(trunc.skeleton().has_vertex({2, 3}));
    CHECK(trunc.skeleton().size() == 6);
}

TEST_CASE("truncation simples resolve along the surviving part of the prediction") {
    for (auto [n, m] : {std::pair{1, 3}, {2, 3}}) {
        Alg base = pyramid_alg(n, m);
        Alg covered = cover_algebra(base, kScheme, 1, m);
        Alg trunc = truncate(covered, tau_slice(covered.skeleton_ptr(), 1));
        const Skeleton& s = trunc.skeleton();
        for (const auto& i : s.vertices) {
            auto rep = minimal_resolution(trunc, i, m + 2, ResolveMode::ToCutoff);
            auto shape = shape_of(rep, s);
            // prediction: cuboid layers of the level-truncated vertex, kept
            // only where the image vertex survives
            VertexVec head(i.begin(), i.end() - 1);
            Cuboid c = cuboid_of(head, m);
            for (int l = 0; l <= m - 1; ++l) {
                std::vector<ShapeGen> expected;
                for (const auto& a : c.layer(l)) {
                    VertexVec w = vmap_bar(i, a);
                    if (s.index_of.count(w)) expected.push_back({w, l});
                }
                std::sort(expected.begin(), expected.end());
                std::vector<ShapeGen> got;
                if (l < static_cast<int>(shape.steps.size())) got = shape.steps[l];
                CHECK(got == expected);
            }
            // beyond the cuboid range the kernel is simple or zero
            if (static_cast<int>(rep.steps.size()) == m) {
                const auto& mark = rep.marks.back();
                CHECK((mark.zero || (mark.semisimple && mark.socle.size() == 1)));
            }
        }
    }
}

TEST_CASE("one cone turn reproduces the direct construction and its dual") {
    Alg l1 = pyramid_alg(1, 3);
    auto result = cone(l1, kScheme);
    CHECK(result.lambda_next.skeleton().vertices == generate_quiver(2, 3)->vertices);
    CHECK(dims_table(result.lambda_next) == dims_table(pyramid_alg(2, 3)));

    SUBCASE("the dual's projective-injectives are the complete-hammock vertices") {
        auto rows = projective_injective_report(result.gamma_next, CompletenessMode::HammockMode);
        std::vector<VertexVec> projinj;
        for (const auto& r : rows)
            if (r.proj_inj) projinj.push_back(r.vertex);
        CHECK(projinj == std::vector<VertexVec>{{1, 1}, {2, 1}, {3, 1}});
    }
    SUBCASE("manifests are deterministic") {
        auto again = cone(pyramid_alg(1, 3), kScheme);
        CHECK(result.manifest.lambda_dims_checksum == again.manifest.lambda_dims_checksum);
        CHECK(result.manifest.gamma_dims_checksum == again.manifest.gamma_dims_checksum);
    }
    SUBCASE("two turns reach the direct construction two dimensions up") {
        auto second = cone(result.lambda_next, kScheme);
        CHECK(dims_table(second.lambda_next) == dims_table(pyramid_alg(3, 3)));
    }
}

TEST_CASE("completeness, Loewy length and projective-injectivity coincide") {
    SUBCASE("cells on the plane quiver of height 3") {
        Alg lambda = pyramid_alg(2, 3);
        std::map<VertexVec, std::pair<int, bool>> expected{
            {{1, 1}, {3, true}}, {{2, 1}, {3, true}}, {{1, 2}, {3, true}},
            {{3, 1}, {2, false}}, {{2, 2}, {2, false}}, {{1, 3}, {1, false}},
        };
        for (const auto& r : projective_injective_report(lambda, CompletenessMode::CellMode)) {
            auto [len, complete] = expected.at(r.vertex);
            CHECK(r.loewy == len);
            CHECK(r.complete == complete);
            CHECK(r.proj_inj == complete);
        }
    }
    SUBCASE("hammocks on the dual") {
        Alg gamma = quadratic_dual(pyramid_alg(2, 3));
        std::map<VertexVec, std::pair<int, bool>> expected{
            {{1, 1}, {3, true}}, {{2, 1}, {3, true}}, {{3, 1}, {3, true}},
            {{1, 2}, {2, false}}, {{2, 2}, {2, false}}, {{1, 3}, {1, false}},
        };
        for (const auto& r : projective_injective_report(gamma, CompletenessMode::HammockMode)) {
            auto [len, complete] = expected.at(r.vertex);
            CHECK(r.loewy == len);
            CHECK(r.complete == complete);
            CHECK(r.proj_inj == complete);
        }
    }
}

TEST_CASE("trailing-one subquivers of the completion reproduce lower stages") {
    // inside the truncation of the 2-dimensional cover, the vertices with
    // trailing coordinate 1 form the previous pyramid with its relations
    Alg base = pyramid_alg(2, 3);
    Alg covered = cover_algebra(base, kScheme, 1, 3);
    Alg trunc = truncate(covered, tau_slice(covered.skeleton_ptr(), 1));
    const Skeleton& s = trunc.skeleton();

    for (int t = 1; t <= 2; ++t) {
        std::vector<int> keep;
        for (int v = 0; v < s.size(); ++v) {
            const VertexVec& c = s.vertices[v];
            bool trailing_ones = true;
            for (int k = t; k < static_cast<int>(c.size()); ++k)
                if (c[k] != 1) trailing_ones = false;
            if (trailing_ones) keep.push_back(v);
        }
        Alg sub = restrict_algebra(trunc, keep);
        Alg dropped = relabel_algebra(sub, [t](const VertexVec& v) {
            return VertexVec(v.begin(), v.begin() + t);
        });
        Alg direct = pyramid_alg(t, 3);
        CHECK(dropped.skeleton().vertices == direct.skeleton().vertices);
        CHECK(relations_text(dropped) == relations_text(direct));
        CHECK(dims_table(dropped) == dims_table(direct));
    }
}

TEST_CASE("anchor coordinate identification round-trips") {
    for (auto [n, m] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
        auto up = generate_quiver(n + 1, m);
        auto base = generate_quiver(n, m);
        for (const auto& j : up->vertices) {
            VertexVec anchor = completion_anchor_of(j);
            CHECK(base->has_vertex(anchor));
            CHECK(completion_point_of(anchor, j.back() - 1) == j);
        }
    }
}
