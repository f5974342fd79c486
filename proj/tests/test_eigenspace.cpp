#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <set>

#include "atcover/eigenspace.hpp"
#include "atcover/localaction.hpp"
#include "atcover/mk.hpp"

using namespace atcover;

namespace {

Gf2Matrix adjacency_plus_identity(const Graph& g) {
    Gf2Matrix m = adjacency_gf2(g);
    for (int v = 0; v < g.n; ++v) m.set(v, v, true);
    return m;
}

std::vector<int> support_of(const Gf2Vector& x) {
    std::vector<int> out;
    for (std::size_t v : x.support()) out.push_back(static_cast<int>(v));
    return out;
}

}  // namespace

TEST_CASE("eigenspace of the 2-vertex complete graph") {
    Graph k2 = make_graph({"a", "b"}, {{0, 1}});
    Gf2Basis e1 = one_eigenspace(k2);
    REQUIRE(e1.dim() == 1);
    CHECK(e1.vectors()[0].popcount() == 2);  // the all-ones vector
}

TEST_CASE("eigenspace dimensions and rank on the base graph") {
    Graph mk = build_mk();
    CHECK(rank(adjacency_plus_identity(mk)) == 12);
    CHECK(one_eigenspace(mk).dim() == 4);
}

TEST_CASE("eigenspace dimension reports for small covers") {
    Graph mk = build_mk();
    const struct {
        int n;
        int vertices;
        int dim;
    } expected[] = {{1, 16, 4}, {2, 256, 40}, {3, 1296, 164}};
    for (const auto& e : expected) {
        Cover cov = derived_cover(mk_voltage(mk, e.n));
        EigenReport rep = eigen_report(cov);
        CHECK(rep.vertices == e.vertices);
        CHECK(rep.dim == e.dim);
        CHECK(rep.formula_expected == e.dim);
        CHECK(rep.matches_formula);
        // Every basis vector satisfies the parity identity at every vertex.
        Gf2Matrix m = adjacency_plus_identity(cov.graph);
        for (const Gf2Vector& x : rep.basis.vectors()) CHECK(m.apply(x).is_zero());
    }
}

TEST_CASE("the 72-vertex support fixture") {
    Graph mk = build_mk();
    Cover c3 = derived_cover(mk_voltage(mk, 3));
    auto support = support72_vertices(c3);
    CHECK(support.size() == 72);

    std::set<std::string> labels;
    for (int v : support) labels.insert(c3.graph.labels[v]);
    CHECK(labels.count("a 0 0 1 2") == 1);
    CHECK(labels.count("id 0 0 0 0") == 0);

    Cover c2 = derived_cover(mk_voltage(mk, 2));
    CHECK_THROWS_AS(support72_vertices(c2), std::invalid_argument);
}

TEST_CASE("odd/even support verification") {
    Graph mk = build_mk();
    Cover c3 = derived_cover(mk_voltage(mk, 3));

    CHECK(verify_eigen_support(c3.graph, {}).ok);  // zero vector

    auto support = support72_vertices(c3);
    SupportCheck good = verify_eigen_support(c3.graph, support);
    CHECK(good.ok);
    CHECK(good.violations.empty());

    auto damaged = support;
    damaged.pop_back();
    SupportCheck bad = verify_eigen_support(c3.graph, damaged);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.violations.empty());

    CHECK_THROWS_AS(verify_eigen_support(c3.graph, std::vector<int>{-1}), std::out_of_range);

    // The indicator vector lies in the eigenspace.
    Gf2Basis e1 = one_eigenspace(c3.graph);
    CHECK(e1.in_span(indicator(c3.graph.n, support)));
}

TEST_CASE("eigenvectors are stable under lifted automorphisms") {
    GammaScaffold gs = build_gamma(2);
    PermGroup lifted = gs.lifted_b();
    for (const Gf2Vector& x : gs.e1.vectors())
        for (const Perm& g : lifted.generators) {
            Gf2Vector moved = permute_vector(x, g);
            CHECK(verify_eigen_support(gs.cover.graph, support_of(moved)).ok);
            CHECK(gs.e1.in_span(moved));
        }
}

TEST_CASE("greedy basis on the smallest example") {
    Graph k2 = make_graph({"a", "b"}, {{0, 1}});
    Gf2Vector ones(2);
    ones.set(0, true);
    ones.set(1, true);
    PermGroup swap2{2, {Perm(std::vector<int>{1, 0})}};
    GreedyBasis out = greedy_orbit_basis(k2, ones, swap2);
    CHECK(out.vectors.size() == 1);
    CHECK(out.basis.dim() == 1);
}

TEST_CASE("greedy basis covers the n = 3 cover") {
    GammaScaffold gs = build_gamma(3);
    auto support = support72_vertices(gs.cover);
    Gf2Vector x1 = indicator(gs.cover.graph.n, support);
    GreedyBasis out = greedy_orbit_basis(gs.cover.graph, x1, gs.lifted_b());

    const int t = static_cast<int>(out.vectors.size());
    CHECK(t >= 1296 / 72);
    CHECK(t <= static_cast<int>(gs.e1.dim()));
    CHECK(out.basis.dim() == static_cast<std::size_t>(t));

    std::vector<char> covered(gs.cover.graph.n, 0);
    for (std::size_t i = 0; i < out.vectors.size(); ++i) {
        const Gf2Vector& x = out.vectors[i];
        CHECK(x.popcount() == 72);
        CHECK(verify_eigen_support(gs.cover.graph, support_of(x)).ok);
        CHECK(permute_vector(x1, out.witnesses[i]) == x);
        for (std::size_t v : x.support()) covered[v] = 1;
    }
    CHECK(std::count(covered.begin(), covered.end(), 1) == gs.cover.graph.n);

    // Deterministic: a second run reproduces the same vectors.
    GreedyBasis again = greedy_orbit_basis(gs.cover.graph, x1, gs.lifted_b());
    CHECK(again.vectors.size() == out.vectors.size());
    for (std::size_t i = 0; i < out.vectors.size(); ++i) CHECK(again.vectors[i] == out.vectors[i]);
}

TEST_CASE("greedy basis rejects bad input") {
    Graph k2 = make_graph({"a", "b"}, {{0, 1}});
    PermGroup trivial{2, {}};
    Gf2Vector ones(2);
    ones.set(0, true);
    ones.set(1, true);
    CHECK_THROWS_AS(greedy_orbit_basis(k2, Gf2Vector(2), trivial), std::invalid_argument);
    Gf2Vector e0(2);
    e0.set(0, true);
    CHECK_THROWS_AS(greedy_orbit_basis(k2, e0, trivial), std::invalid_argument);
}
