#ifndef PYRAMID_VERIFY_HPP
#define PYRAMID_VERIFY_HPP

#include <atomic>
#include <string>

#include "pyramid/constructions.hpp"

namespace pyramid {

// ---------------------------------------------------------------------------
// Executable checks of the structural statements: translation-quiver axioms,
// extendability of bound paths, and the aggregated corpus.
// ---------------------------------------------------------------------------

struct AxiomReport {
    std::string id;
    bool pass = true;
    bool inconclusive = false;
    std::string witness;  // reproducible counterexample on failure
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Elementary residue evaluations allowed per axiom check before the result
// is declared inconclusive.
inline constexpr long long kAxiomBudget = 20'000'000;

struct PathRec {
    int source = -1, target = -1;
    std::vector<int> types;
};

// All paths with nonzero residue, by length 0..maxlen.
template <class K>
std::vector<std::vector<PathRec>> bound_paths(const BoundAlgebra<K>& alg, int maxlen,
                                              long long* budget) {
    const Skeleton& s = alg.skeleton();
    std::vector<std::vector<PathRec>> out(maxlen + 1);
    for (int len = 0; len <= maxlen; ++len)
        for (int v = 0; v < s.size(); ++v)
            for (const auto& p : alg.paths_from(v, len)) {
                if (--*budget < 0) throw BudgetExceeded("bound-path enumeration budget");
                const auto& c = alg.component(v, p.target, len);
                std::vector<K> raw(c.path_count(), K(0));
                raw[c.path_index(p.types)] = K(1);
                auto red = c.reduce(std::move(raw));
                bool nonzero = false;
                for (const K& x : red)
                    if (x != K(0)) nonzero = true;
                if (nonzero) out[len].push_back({v, p.target, p.types});
            }
    return out;
}

// tau: i -> i - e_n wherever the last coordinate exceeds 1.  Vertices with
// trailing coordinate 1 are the projective ones.
std::map<int, int> pyramid_translation(const Skeleton& s);
// Identity on every vertex; the stable quiver needs no projectives or
// injectives.
std::map<int, int> trivial_translation(const Skeleton& s);

template <class K>
GradedElement<K> basis_element(const BoundAlgebra<K>& alg, int src, int tgt, int deg, int b) {
    const auto& c = alg.component(src, tgt, deg);
    std::vector<K> coords(c.dim(), K(0));
    coords[b] = K(1);
    return {src, tgt, deg, std::move(coords)};
}

template <class K>
GradedElement<K> raw_path(const BoundAlgebra<K>& alg, const PathRec& p) {
    return path_element(alg, alg.skeleton().vertices[p.source], p.types);
}

// The four axioms: (1) maximal bound paths have length nParam+1 and run from
// tau(i) to i; (2) two such paths are linearly dependent; (3)/(4) every bound
// element extends through tau(i) on the right resp. tau^{-1}(i) on the left.
// Elements are checked on the canonical basis of each graded component.
template <class K>
std::vector<AxiomReport> check_translation_axioms(const BoundAlgebra<K>& alg,
                                                  const std::map<int, int>& tau, int nParam,
                                                  long long budget = kAxiomBudget) {
    const Skeleton& s = alg.skeleton();
    // validate tau
    {
        std::set<int> image;
        for (const auto& [a, b] : tau) {
            if (a < 0 || a >= s.size() || b < 0 || b >= s.size())
                throw std::invalid_argument("translation maps outside the vertex set");
            if (!image.insert(b).second)
                throw std::invalid_argument("translation is not injective");
        }
    }
    std::set<int> proj, inj;
    {
        std::set<int> image;
        for (const auto& [a, b] : tau) image.insert(b);
        for (int v = 0; v < s.size(); ++v) {
            if (!tau.count(v)) proj.insert(v);
            if (!image.count(v)) inj.insert(v);
        }
    }
    auto tau_inv = [&](int v) -> int {
        for (const auto& [a, b] : tau)
            if (b == v) return a;
        return -1;
    };

    std::vector<AxiomReport> reports;
    long long remaining = budget;
    try {
        auto paths = bound_paths(alg, nParam + 2, &remaining);

        // incoming arrows
        std::vector<std::vector<std::pair<int, int>>> incoming(s.size());  // (src, type)
        for (int v = 0; v < s.size(); ++v)
            for (int t = 1; t <= s.type_count; ++t)
                if (s.target(v, t) >= 0) incoming[s.target(v, t)].push_back({v, t});

        // --- axiom 1 ---
        AxiomReport a1{"axiom-1", true, false, ""};
        if (!paths[nParam + 2].empty()) {
            const auto& p = paths[nParam + 2].front();
            a1.pass = false;
            a1.witness = "bound path of length " + std::to_string(nParam + 2) + " from " +
                         s.label(p.source) + " exists";
        }
        for (int len = 0; len <= nParam + 1 && a1.pass; ++len) {
            for (const auto& p : paths[len]) {
                if (--remaining < 0) throw BudgetExceeded("axiom 1");
                GradedElement<K> elem = raw_path(alg, p);
                bool extendable = false;
                for (int t = 1; t <= s.type_count && !extendable; ++t) {
                    int w = s.target(p.target, t);
                    if (w < 0) continue;
                    GradedElement<K> arrow =
                        path_element(alg, s.vertices[p.target], {t});
                    if (!multiply(alg, arrow, elem).is_zero()) extendable = true;
                }
                for (const auto& [u, t] : incoming[p.source]) {
                    if (extendable) break;
                    GradedElement<K> arrow = path_element(alg, s.vertices[u], {t});
                    if (!multiply(alg, elem, arrow).is_zero()) extendable = true;
                }
                if (extendable) continue;
                // maximal bound path
                if (len != nParam + 1) {
                    a1.pass = false;
                    a1.witness = "maximal bound path of length " + std::to_string(len) +
                                 " at " + s.label(p.source);
                    break;
                }
                auto it = tau.find(p.target);
                if (it == tau.end() || it->second != p.source) {
                    a1.pass = false;
                    a1.witness = "maximal bound path " + s.label(p.source) + " -> " +
                                 s.label(p.target) + " does not run from tau(target)";
                    break;
                }
            }
        }
        reports.push_back(a1);

        // --- axiom 2 ---
        AxiomReport a2{"axiom-2", true, false, ""};
        for (const auto& [i2, src2] : tau) {
            // tau maps i -> tau(i); paths run tau(i) -> i
            int dim = alg.graded_dim(src2, i2, nParam + 1);
            if (dim > 1) {
                a2.pass = false;
                a2.witness = "dim e_" + s.label(i2) + " A e_" + s.label(src2) + " in degree " +
                             std::to_string(nParam + 1) + " is " + std::to_string(dim);
                break;
            }
        }
        reports.push_back(a2);

        // --- axiom 3 ---
        AxiomReport a3{"axiom-3", true, false, ""};
        for (const auto& [i, taui] : tau) {
            if (!a3.pass) break;
            for (int j = 0; j < s.size() && a3.pass; ++j) {
                for (int t = 0; t <= nParam + 1 && a3.pass; ++t) {
                    const auto& c = alg.component(j, i, t);
                    if (c.dim() == 0) continue;
                    for (int b = 0; b < c.dim() && a3.pass; ++b) {
                        GradedElement<K> u = basis_element(alg, j, i, t, b);
                        bool ok = false;
                        for (const auto& q : alg.paths_from(taui, nParam + 1 - t)) {
                            if (q.target != j) continue;
                            if (--remaining < 0) throw BudgetExceeded("axiom 3");
                            GradedElement<K> qe =
                                path_element(alg, s.vertices[taui], q.types);
                            if (qe.is_zero()) continue;
                            if (!multiply(alg, u, qe).is_zero()) {
                                ok = true;
                                break;
                            }
                        }
                        if (!ok) {
                            a3.pass = false;
                            a3.witness = "element " + std::to_string(b) + " of degree " +
                                         std::to_string(t) + " component " + s.label(j) +
                                         " -> " + s.label(i) + " does not extend to tau(i)";
                        }
                    }
                }
            }
        }
        reports.push_back(a3);

        // --- axiom 4 ---
        AxiomReport a4{"axiom-4", true, false, ""};
        for (int i = 0; i < s.size() && a4.pass; ++i) {
            if (inj.count(i)) continue;
            int ti = tau_inv(i);
            if (ti < 0) {
                a4.pass = false;
                a4.witness = "vertex " + s.label(i) + " is not injective but has no tau^{-1}";
                break;
            }
            for (int j = 0; j < s.size() && a4.pass; ++j) {
                for (int t = 0; t <= nParam + 1 && a4.pass; ++t) {
                    const auto& c = alg.component(i, j, t);
                    if (c.dim() == 0) continue;
                    for (int b = 0; b < c.dim() && a4.pass; ++b) {
                        GradedElement<K> u = basis_element(alg, i, j, t, b);
                        bool ok = false;
                        for (const auto& p : alg.paths_from(j, nParam + 1 - t)) {
                            if (p.target != ti) continue;
                            if (--remaining < 0) throw BudgetExceeded("axiom 4");
                            GradedElement<K> pe = path_element(alg, s.vertices[j], p.types);
                            if (pe.is_zero()) continue;
                            if (!multiply(alg, pe, u).is_zero()) {
                                ok = true;
                                break;
                            }
                        }
                        if (!ok) {
                            a4.pass = false;
                            a4.witness = "element " + std::to_string(b) + " of degree " +
                                         std::to_string(t) + " component " + s.label(i) +
                                         " -> " + s.label(j) +
                                         " does not extend to tau^{-1}(i)";
                        }
                    }
                }
            }
        }
        reports.push_back(a4);
    } catch (const BudgetExceeded& e) {
        reports.push_back({"budget", false, true, e.what()});
    }
    return reports;
}

// Admissibility (i): every bound path embeds in a bound path of length
// nParam+1.
template <class K>
AxiomReport check_admissibility_i(const BoundAlgebra<K>& alg, int nParam,
                                  long long budget = kAxiomBudget) {
    const Skeleton& s = alg.skeleton();
    AxiomReport rep{"admissibility-i", true, false, ""};
    long long remaining = budget;
    try {
        auto paths = bound_paths(alg, nParam + 1, &remaining);
        for (int len = 0; len <= nParam + 1 && rep.pass; ++len) {
            for (const auto& p : paths[len]) {
                GradedElement<K> pe = raw_path(alg, p);
                bool ok = false;
                for (int before = 0; before + len <= nParam + 1 && !ok; ++before) {
                    const int after = nParam + 1 - len - before;
                    // q'' : x -> source(p) of length `before`
                    for (int x = 0; x < s.size() && !ok; ++x) {
                        for (const auto& qin : alg.paths_from(x, before)) {
                            if (qin.target != p.source) continue;
                            if (--remaining < 0) throw BudgetExceeded("admissibility");
                            GradedElement<K> qe = path_element(alg, s.vertices[x], qin.types);
                            GradedElement<K> mid = multiply(alg, pe, qe);
                            if (mid.is_zero()) continue;
                            for (const auto& qout : alg.paths_from(p.target, after)) {
                                GradedElement<K> oe =
                                    path_element(alg, s.vertices[p.target], qout.types);
                                if (!multiply(alg, oe, mid).is_zero()) {
                                    ok = true;
                                    break;
                                }
                            }
                            if (ok) break;
                        }
                    }
                }
                if (!ok) {
                    rep.pass = false;
                    rep.witness = "bound path of length " + std::to_string(len) + " from " +
                                  s.label(p.source) + " to " + s.label(p.target) +
                                  " does not extend to length " + std::to_string(nParam + 1);
                    break;
                }
            }
        }
    } catch (const BudgetExceeded& e) {
        rep.pass = false;
        rep.inconclusive = true;
        rep.witness = e.what();
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Corpus: each acceptance-grade check as a callable returning a CheckResult,
// plus the aggregator used by the CLI and the acceptance suite.
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    bool inconclusive = false;
    std::string detail;
    double seconds = 0.0;
};

using ConfigList = std::vector<std::pair<int, int>>;  // (n, m)

CheckResult check_vertex_counts(int nmax, int mmax);
CheckResult check_resolution_shapes(const ConfigList& configs);
CheckResult check_koszul_types(const ConfigList& configs);
CheckResult check_periodicity(const ConfigList& configs, const ConfigList& dual_configs);
CheckResult check_path_length_lemma(const ConfigList& configs);
CheckResult check_projective_layers(const ConfigList& configs);
CheckResult check_completion_equality(const ConfigList& configs);
CheckResult check_slice_axiom_corpus(const ConfigList& configs);
CheckResult check_loewy_criteria(const ConfigList& configs);
CheckResult check_translation_corpus(const ConfigList& configs);
CheckResult check_scheme_independence(const ConfigList& configs);
CheckResult check_cone_regression(int m);

struct CorpusResult {
    std::vector<CheckResult> checks;
    int exit_code = 0;  // 0 pass, 1 failure, 2 inconclusive
};

CorpusResult run_corpus(int nmax, int mmax);
CheckResult run_named_check(const std::string& theorem, int n, int m);
std::string junit_xml(const CorpusResult& result);

}  // namespace pyramid

#endif  // PYRAMID_VERIFY_HPP
