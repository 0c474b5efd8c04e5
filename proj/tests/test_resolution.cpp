#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pyramid/constructions.hpp"
#include "pyramid/resolution.hpp"

using namespace pyramid;

namespace {

using Alg = BoundAlgebra<Rational>;

Alg stable_alg(int n, int m, SchemeMode mode = SchemeMode::Anticommutative) {
    auto scheme = mode == SchemeMode::Commutative ? CoefficientScheme<Rational>::commutative()
                                                  : CoefficientScheme<Rational>::anticommutative();
    return build_algebra(stable_quiver(generate_quiver(n, m)), scheme);
}

Alg pyramid_alg(int n, int m) {
    return build_algebra(generate_quiver(n, m), CoefficientScheme<Rational>::anticommutative());
}

}  // namespace

TEST_CASE("cuboid predictions") {
    SUBCASE("corner simple of the 3-dimensional height-4 quiver") {
        auto s = stable_quiver(generate_quiver(3, 4));
        auto shape = predict_stable_resolution(*s, {1, 1, 1});
        REQUIRE(shape.steps.size() == 4);
        CHECK(shape.steps[0] == std::vector<ShapeGen>{{{1, 1, 1}, 0}});
        CHECK(shape.steps[1] == std::vector<ShapeGen>{{{2, 1, 1}, 1}});
        CHECK(shape.steps[2] == std::vector<ShapeGen>{{{3, 1, 1}, 2}});
        CHECK(shape.steps[3] == std::vector<ShapeGen>{{{4, 1, 1}, 3}});
        CHECK(shape.terminal == std::vector<ShapeGen>{{{4, 1, 1}, 7}});
    }
    SUBCASE("layer sizes 1,2,1 at (2,1) in the plane of height 3") {
        auto s = stable_quiver(generate_quiver(2, 3));
        auto shape = predict_stable_resolution(*s, {2, 1});
        CHECK(cuboid_of({2, 1}, 3).b == std::vector<int>{1, 1, 0});
        REQUIRE(shape.steps.size() == 3);
        CHECK(shape.steps[0].size() == 1);
        CHECK(shape.steps[1].size() == 2);
        CHECK(shape.steps[2].size() == 1);
    }
    SUBCASE("the terminal simple always sits at omega(i) in degree m+n") {
        for (auto [n, m] : {std::pair{1, 4}, {2, 3}, {2, 4}}) {
            auto s = stable_quiver(generate_quiver(n, m));
            for (const auto& i : s->vertices) {
                auto shape = predict_stable_resolution(*s, i);
                REQUIRE(shape.terminal.size() == 1);
                CHECK(shape.terminal[0].vertex == omega_map(i, m));
                CHECK(shape.terminal[0].degree == m + n);
            }
        }
    }
}

TEST_CASE("computed resolutions match the prediction") {
    for (auto [n, m] : {std::pair{1, 3}, {1, 4}, {2, 3}}) {
        Alg alg = stable_alg(n, m);
        const Skeleton& s = alg.skeleton();
        for (const auto& i : s.vertices) {
            auto rep = minimal_resolution(alg, i, m + 2, ResolveMode::AtSemisimple);
            auto diff = compare(shape_of(rep, s), predict_stable_resolution(s, i));
            CHECK_MESSAGE(diff.equal, diff.description);
        }
    }
}

TEST_CASE("a perturbed prediction is reported at the right step") {
    Alg alg = stable_alg(1, 4);
    const Skeleton& s = alg.skeleton();
    auto rep = minimal_resolution(alg, {1}, 6, ResolveMode::AtSemisimple);
    auto predicted = predict_stable_resolution(s, {1});
    predicted.steps[1].clear();  // negative control
    auto diff = compare(shape_of(rep, s), predicted);
    CHECK_FALSE(diff.equal);
    CHECK(diff.description.find("step 1") == 0);
}

TEST_CASE("plain pyramid simples resolve finitely and linearly") {
    Alg alg = pyramid_alg(1, 4);
    auto rep = minimal_resolution(alg, {1}, 10, ResolveMode::ToCutoff);
    REQUIRE(rep.steps.size() == 4);
    for (int l = 0; l < 4; ++l) {
        REQUIRE(rep.steps[l].gens.size() == 1);
        CHECK(alg.skeleton().vertices[rep.steps[l].gens[0].vertex] == VertexVec{l + 1});
        CHECK(rep.steps[l].gens[0].degree == l);
    }
    CHECK(rep.terminal.kind == TerminalKind::Zero);
}

TEST_CASE("cover-window simples at interior levels match the lifted prediction") {
    auto scheme = CoefficientScheme<Rational>::anticommutative();
    for (auto [n, m] : {std::pair{1, 3}, {2, 3}}) {
        Alg base = build_algebra(generate_quiver(n, m), scheme);
        Alg covered = cover_algebra(base, scheme, 0, m);
        const Skeleton& s = covered.skeleton();
        for (const auto& i : base.skeleton().vertices) {
            VertexVec iv = i;
            iv.push_back(0);
            auto rep = minimal_resolution(covered, iv, m + 2, ResolveMode::AtSemisimple);
            auto diff = compare(shape_of(rep, s), predict_cover_resolution(s, iv));
            CHECK_MESSAGE(diff.equal, diff.description);
        }
    }
}

TEST_CASE("resolution maps compose to zero and stay in the radical") {
    Alg alg = stable_alg(2, 3);
    const Skeleton& s = alg.skeleton();
    for (const auto& i : s.vertices) {
        auto rep = minimal_resolution(alg, i, 5, ResolveMode::AtSemisimple);
        for (std::size_t l = 2; l < rep.steps.size(); ++l) {
            const auto& s2 = rep.steps[l];
            const auto& s1 = rep.steps[l - 1];
            const auto& s0 = rep.steps[l - 2];
            for (std::size_t k = 0; k < s2.gens.size(); ++k) {
                // f_{l-1}(f_l(eps_k)) as one coordinate block per s0 generator
                for (std::size_t t = 0; t < s0.gens.size(); ++t) {
                    std::optional<GradedElement<Rational>> acc;
                    for (std::size_t r = 0; r < s1.gens.size(); ++r) {
                        const auto& block_kr = s2.map[k][r];
                        const auto& block_rt = s1.map[r][t];
                        if (block_kr.empty() || block_rt.empty()) continue;
                        GradedElement<Rational> x{s1.gens[r].vertex, s2.gens[k].vertex,
                                                  s2.gens[k].degree - s1.gens[r].degree,
                                                  block_kr};
                        GradedElement<Rational> y{s0.gens[t].vertex, s1.gens[r].vertex,
                                                  s1.gens[r].degree - s0.gens[t].degree,
                                                  block_rt};
                        auto prod = multiply(alg, x, y);
                        if (!acc) {
                            acc = prod;
                        } else {
                            for (std::size_t c = 0; c < prod.coords.size(); ++c)
                                acc->coords[c] += prod.coords[c];
                        }
                    }
                    if (acc) CHECK(acc->is_zero());
                }
            }
            // minimality: every nonzero block has positive degree
            for (std::size_t k = 0; k < s2.gens.size(); ++k)
                for (std::size_t r = 0; r < s1.gens.size(); ++r) {
                    bool nonzero = false;
                    for (const auto& c : s2.map[k][r])
                        if (c != Rational(0)) nonzero = true;
                    if (nonzero) CHECK(s2.gens[k].degree > s1.gens[r].degree);
                }
        }
    }
}

TEST_CASE("euler characteristic certifies exactness") {
    for (auto [n, m] : {std::pair{1, 4}, {2, 3}}) {
        Alg alg = stable_alg(n, m);
        const Skeleton& s = alg.skeleton();
        const int bound = alg.grading_bound();
        for (const auto& i : s.vertices) {
            auto rep = minimal_resolution(alg, i, m + 2, ResolveMode::AtSemisimple);
            REQUIRE(rep.terminal.kind == TerminalKind::Semisimple);
            const int L = static_cast<int>(rep.steps.size()) - 1;
            for (int j = 0; j < s.size(); ++j)
                for (int d = 0; d <= m + n + bound; ++d) {
                    // alternating sum over: S(i), P^0, ..., P^L, kernel
                    long long sum = (j == s.vid(i) && d == 0) ? 1 : 0;
                    long long sign = -1;
                    for (int l = 0; l <= L; ++l) {
                        long long dim = 0;
                        for (const auto& g : rep.steps[l].gens)
                            if (d >= g.degree)
                                dim += alg.graded_dim(g.vertex, j, d - g.degree);
                        sum += sign * dim;
                        sign = -sign;
                    }
                    for (const auto& g : rep.terminal.socle)
                        if (g.vertex == j && g.degree == d) sum += sign;
                    CHECK(sum == 0);
                }
        }
    }
}

TEST_CASE("almost-Koszul classification") {
    SUBCASE("stable algebras have type (n+1, m-1)") {
        auto type = koszul_classify(stable_alg(1, 4), 6);
        CHECK(type.flag == KoszulFlag::AlmostKoszul);
        CHECK(type.p == 2);
        CHECK(type.q == 3);
    }
    SUBCASE("the quadratic dual has the reflected type (m-1, n+1)") {
        auto type = koszul_classify(quadratic_dual(stable_alg(1, 4)), 4);
        CHECK(type.flag == KoszulFlag::AlmostKoszul);
        CHECK(type.p == 3);
        CHECK(type.q == 2);
    }
    SUBCASE("plain pyramid algebras are Koszul") {
        CHECK(koszul_classify(pyramid_alg(1, 4), 8).flag == KoszulFlag::Koszul);
        CHECK(koszul_classify(pyramid_alg(2, 3), 8).flag == KoszulFlag::Koszul);
    }
    SUBCASE("a short cutoff is reported, never guessed") {
        auto type = koszul_classify(stable_alg(1, 4), 2);
        CHECK(type.flag == KoszulFlag::Inconclusive);
    }
}

TEST_CASE("syzygy orbits and periods") {
    SUBCASE("the chain of height 4: orbit 1 -> 4 -> 1, period 8") {
        Alg alg = stable_alg(1, 4);
        auto orbit = syzygy_orbit(alg, {1}, 6);
        CHECK(orbit == std::vector<VertexVec>{{1}, {4}, {1}});
        CHECK(algebra_period(alg, 6) == 8);
    }
    SUBCASE("the corner of the 3-dimensional quiver has a full orbit") {
        Alg alg = stable_alg(3, 4);
        auto orbit = syzygy_orbit(alg, {1, 1, 1}, 6);
        CHECK(orbit == std::vector<VertexVec>{
                           {1, 1, 1}, {4, 1, 1}, {1, 4, 1}, {1, 1, 4}, {1, 1, 1}});
    }
    SUBCASE("dual periods") {
        CHECK(algebra_period(quadratic_dual(stable_alg(1, 3)), 4) == 6);
    }
}

TEST_CASE("resolution shape does not depend on the scheme") {
    Alg anti = stable_alg(1, 4, SchemeMode::Anticommutative);
    Alg comm = stable_alg(1, 4, SchemeMode::Commutative);
    const Skeleton& s = anti.skeleton();
    for (const auto& i : s.vertices) {
        auto ra = minimal_resolution(anti, i, 6, ResolveMode::AtSemisimple);
        auto rc = minimal_resolution(comm, i, 6, ResolveMode::AtSemisimple);
        CHECK(compare(shape_of(ra, s), shape_of(rc, s)).equal);
    }
}

TEST_CASE("cutoff truncation is flagged") {
    Alg alg = stable_alg(1, 4);
    auto rep = minimal_resolution(alg, {1}, 2, ResolveMode::ToCutoff);
    CHECK(rep.terminal.kind == TerminalKind::Truncated);
    CHECK(rep.steps.size() == 3);  // steps 0..2
}
