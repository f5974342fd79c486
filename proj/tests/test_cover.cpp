#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <set>

#include "atcover/cover.hpp"
#include "atcover/mk.hpp"

using namespace atcover;

namespace {

struct Fixture {
    Graph mk = build_mk();
    MkAutGens gens = mk_aut_gens(mk);
    std::vector<const Perm*> all_gens() const {
        return {&gens.rho_a, &gens.rho_b, &gens.rho_c, &gens.alpha_abc, &gens.alpha_ab};
    }
};

// Test-only oracle, independent of the induced-matrix machinery: g lifts
// along za iff some fiber-preserving automorphism of the (connected) derived
// cover projects to g. Such a map is pinned by the image of one root vertex,
// so try every candidate fiber and propagate along cover edges.
bool lift_exists_bruteforce(const Cover& cov, const VoltageAssignment& za, const Perm& g) {
    const int root_base = 0;
    const int root = cov.vertex(root_base, zn_zero(cov.n));
    for (int t = 0; t < cov.fiber_size; ++t) {
        std::vector<int> image(cov.graph.n, -1);
        image[root] = g(root_base) * cov.fiber_size + t;
        std::vector<int> queue{root};
        bool ok = true;
        for (std::size_t head = 0; head < queue.size() && ok; ++head) {
            int uc = queue[head];
            int u = cov.base_of(uc);
            for (int v : za.base().adj[u]) {
                int vc = cov.vertex(v, zn_add(cov.fiber_of(uc), za.voltage(u, v)));
                int target = cov.vertex(
                    g(v), zn_add(cov.fiber_of(image[uc]), za.voltage(g(u), g(v))));
                if (image[vc] == -1) {
                    image[vc] = target;
                    queue.push_back(vc);
                } else if (image[vc] != target) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || queue.size() != static_cast<std::size_t>(cov.graph.n)) continue;
        std::vector<char> hit(cov.graph.n, 0);
        bool bijective = true;
        for (int im : image) {
            if (im < 0 || hit[im]) bijective = false;
            if (im >= 0) hit[im] = 1;
        }
        if (bijective) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("modular vectors and matrices") {
    ZnVec v = zn_make(5, 1, -1, 7, 0);
    CHECK(v.c == std::array<int, 4>{1, 4, 2, 0});
    CHECK(zn_add(v, zn_neg(v)) == zn_zero(5));
    CHECK(zn_is_zero(zn_unit(1, 2)));

    Mat4 id = Mat4::identity(5);
    CHECK(id.apply(v) == v);
    CHECK(id.det_mod_n() == 1);
    CHECK(id.invertible());

    Mat4 twice = id;
    for (int k = 0; k < 4; ++k) twice.m[k][k] = 2;
    CHECK(twice.det_mod_n() == 16 % 5);
    CHECK(twice.invertible());

    Mat4 singular = Mat4::identity(4);
    singular.m[0][0] = 2;  // det 2, not a unit mod 4
    CHECK_FALSE(singular.invertible());

    CHECK(Mat4::identity(1).invertible());
}

TEST_CASE("voltage assignment on the base graph") {
    Fixture f;
    CHECK_THROWS_AS(mk_voltage(f.mk, 0), std::invalid_argument);

    VoltageAssignment za = mk_voltage(f.mk, 3);
    int id = find_vertex(f.mk, "id"), c = find_vertex(f.mk, "c"), a = find_vertex(f.mk, "a"),
        ab = find_vertex(f.mk, "ab"), b = find_vertex(f.mk, "b");
    CHECK(za.voltage(id, c) == zn_unit(3, 0));
    CHECK(za.voltage(c, id) == zn_neg(zn_unit(3, 0)));
    CHECK(za.voltage(id, b) == zn_unit(3, 3));  // rim arc b -> id carries the negative
    CHECK(za.voltage(id, a) == zn_zero(3));     // unlabelled arcs are trivial
    CHECK(za.voltage(b, ab) == zn_zero(3));
    CHECK_THROWS_AS(za.voltage(a, ab), std::invalid_argument);  // not an arc
    CHECK_THROWS_AS(za.voltage(id, find_vertex(f.mk, "z")), std::invalid_argument);

    CHECK(za.inverse_consistent());
    CHECK(za.nonzero_arcs().size() == 16);  // eight rim arcs, both directions

    ZeroTree tree = zero_voltage_tree(za);
    CHECK(tree.root == id);
    CHECK(tree.bfs_order.size() == 16);
    int tree_edges = 0;
    for (int v = 0; v < f.mk.n; ++v)
        if (tree.parent[v] != -1) {
            ++tree_edges;
            CHECK(zn_is_zero(za.voltage(tree.parent[v], v)));
        }
    CHECK(tree_edges == 15);
}

TEST_CASE("derived covers") {
    Fixture f;

    Cover c1 = derived_cover(mk_voltage(f.mk, 1));
    CHECK(c1.graph.n == 16);
    for (int v = 0; v < 16; ++v) CHECK(c1.graph.adj[v] == f.mk.adj[v]);

    Cover c2 = derived_cover(mk_voltage(f.mk, 2));
    CHECK(c2.graph.n == 256);
    CHECK(is_regular(c2.graph, 3));
    CHECK(is_connected(c2.graph));

    // Frozen neighborhood of (id, 0) in the n = 2 cover.
    int id0 = c2.vertex(find_vertex(f.mk, "id"), zn_zero(2));
    std::set<std::string> nbrs;
    for (int u : neighbors(c2.graph, id0)) nbrs.insert(c2.graph.labels[u]);
    CHECK(nbrs == std::set<std::string>{"a 0 0 0 0", "b 0 0 0 1", "c 1 0 0 0"});

    Cover c3 = derived_cover(mk_voltage(f.mk, 3));
    CHECK(c3.graph.n == 1296);
    CHECK(is_regular(c3.graph, 3));
    CHECK(is_connected(c3.graph));

    // Vertex indexing round-trips.
    for (int v : {0, 5, 111, 1295}) {
        CHECK(c3.vertex(c3.base_of(v), c3.fiber_of(v)) == v);
    }
}

TEST_CASE("induced voltage automorphisms exist for the lifted generators") {
    Fixture f;
    for (int n : {1, 2, 3}) {
        VoltageAssignment za = mk_voltage(f.mk, n);
        CHECK(induced_voltage_aut(za, Perm(f.mk.n)) == Mat4::identity(n));
        for (const Perm* g : f.all_gens()) {
            auto phi = induced_voltage_aut(za, *g);
            REQUIRE(phi.has_value());
            CHECK(phi->invertible());
        }
    }

    std::vector<int> not_aut(f.mk.n);
    for (int i = 0; i < f.mk.n; ++i) not_aut[i] = i;
    std::swap(not_aut[0], not_aut[1]);
    CHECK_THROWS_AS(induced_voltage_aut(mk_voltage(f.mk, 3), Perm(not_aut)),
                    std::invalid_argument);
}

TEST_CASE("lifting criterion agrees with the brute-force oracle") {
    Fixture f;

    VoltageAssignment good = mk_voltage(f.mk, 3);
    Cover good_cover = derived_cover(good);
    for (const Perm* g : f.all_gens()) {
        CHECK(induced_voltage_aut(good, *g).has_value());
        CHECK(lift_exists_bruteforce(good_cover, good, *g));
    }

    // Smearing one fundamental-cycle voltage across two coordinates breaks
    // the criterion for every generator.
    VoltageAssignment broken = mk_voltage(f.mk, 3);
    broken.set_arc(find_vertex(f.mk, "id"), find_vertex(f.mk, "c"),
                   zn_make(3, 1, 1, 0, 0));
    CHECK(broken.inverse_consistent());
    Cover broken_cover = derived_cover(broken);
    REQUIRE(is_connected(broken_cover.graph));
    for (const Perm* g : f.all_gens()) {
        CHECK_FALSE(induced_voltage_aut(broken, *g).has_value());
        CHECK_FALSE(lift_exists_bruteforce(broken_cover, broken, *g));
    }

    // A single sign flip is subtler: one translation still lifts, the other
    // generators do not. Oracle and criterion must agree case by case.
    VoltageAssignment flipped = mk_voltage(f.mk, 3);
    flipped.set_arc(find_vertex(f.mk, "cz"), find_vertex(f.mk, "bcz"), zn_unit(3, 1));
    Cover flipped_cover = derived_cover(flipped);
    REQUIRE(is_connected(flipped_cover.graph));
    int lifting = 0;
    for (const Perm* g : f.all_gens()) {
        bool criterion = induced_voltage_aut(flipped, *g).has_value();
        CHECK(criterion == lift_exists_bruteforce(flipped_cover, flipped, *g));
        lifting += criterion;
    }
    CHECK(lifting == 1);  // only the matching translation survives
}

TEST_CASE("lifting automorphisms to the cover") {
    Fixture f;
    const int n = 3;
    VoltageAssignment za = mk_voltage(f.mk, n);
    Cover cov = derived_cover(za);

    // Deck translation from the identity lift.
    LiftedAut deck = lift_automorphism(cov, za, Perm(f.mk.n), Mat4::identity(n), zn_unit(n, 0));
    CHECK(is_automorphism(cov.graph, deck.cover_perm));
    for (int v = 0; v < cov.graph.n; ++v) {
        CHECK(deck.cover_perm(v) != v);
        CHECK(cov.base_of(deck.cover_perm(v)) == cov.base_of(v));
    }
    CHECK(deck.cover_perm == deck_translation(cov, zn_unit(n, 0)).cover_perm);

    // The generator 3-cycle pinned to fix (id, 0) has order 3.
    int id0 = cov.vertex(find_vertex(f.mk, "id"), zn_zero(n));
    auto phi = induced_voltage_aut(za, f.gens.alpha_abc);
    REQUIRE(phi.has_value());
    LiftedAut rot = lift_fixing(cov, za, f.gens.alpha_abc, *phi, id0);
    CHECK(rot.cover_perm(id0) == id0);
    CHECK(rot.cover_perm.order() == 3);
    CHECK(is_automorphism(cov.graph, rot.cover_perm));

    // A wrong matrix fails validation: double the true one (units mod 3).
    auto phi_b = induced_voltage_aut(za, f.gens.rho_b);
    REQUIRE(phi_b.has_value());
    Mat4 doubler = Mat4::identity(n);
    for (int k = 0; k < 4; ++k) doubler.m[k][k] = 2;
    Mat4 wrong = doubler.compose(*phi_b);
    CHECK_THROWS_AS(lift_automorphism(cov, za, f.gens.rho_b, wrong, zn_zero(n)),
                    std::runtime_error);
}

TEST_CASE("lift composition projects to composition") {
    Fixture f;
    const int n = 2;
    VoltageAssignment za = mk_voltage(f.mk, n);
    Cover cov = derived_cover(za);

    std::vector<LiftedAut> lifts;
    for (const Perm* g : f.all_gens())
        lifts.push_back(lift_automorphism(cov, za, *g, *induced_voltage_aut(za, *g), zn_zero(n)));

    for (const LiftedAut& x : lifts)
        for (const LiftedAut& y : lifts) {
            Perm composed = x.cover_perm.then(y.cover_perm);
            Perm projected_base = x.base_perm.then(y.base_perm);
            for (int bv = 0; bv < f.mk.n; ++bv)
                CHECK(cov.base_of(composed(cov.vertex(bv, zn_zero(n)))) == projected_base(bv));
        }
}

TEST_CASE("deck group is regular on fibers") {
    Fixture f;
    const int n = 3;
    Cover cov = derived_cover(mk_voltage(f.mk, n));
    PermGroup deck{cov.graph.n, {}};
    for (int axis = 0; axis < 4; ++axis)
        deck.generators.push_back(deck_translation(cov, zn_unit(n, axis)).cover_perm);
    CHECK(group_order(deck) == 81);
    for (int bv = 0; bv < f.mk.n; ++bv) {
        auto fiber_orbit = orbit(deck, cov.vertex(bv, zn_zero(n)));
        CHECK(fiber_orbit.size() == 81);
        for (int v : fiber_orbit) CHECK(cov.base_of(v) == bv);
    }
}

TEST_CASE("quotient chain down to the complete graph") {
    Fixture f;
    Quotient cube = quotient_mod_z(f.mk);
    CHECK(cube.graph.n == 8);
    CHECK(edge_count(cube.graph) == 12);
    CHECK(is_regular(cube.graph, 3));
    CHECK(cube.projection[find_vertex(f.mk, "id")] == cube.projection[find_vertex(f.mk, "z")]);

    // 2-to-1 local isomorphism: neighborhoods map bijectively.
    for (int v = 0; v < f.mk.n; ++v) {
        std::set<int> images;
        for (int u : neighbors(f.mk, v)) images.insert(cube.projection[u]);
        CHECK(images.size() == 3);
        std::set<int> target(neighbors(cube.graph, cube.projection[v]).begin(),
                             neighbors(cube.graph, cube.projection[v]).end());
        CHECK(images == target);
    }

    Quotient k4 = quotient_antipodal(cube.graph);
    CHECK(k4.graph.n == 4);
    CHECK(edge_count(k4.graph) == 6);
    CHECK(is_regular(k4.graph, 3));
    CHECK(k4.projection[find_vertex(cube.graph, "id")] ==
          k4.projection[find_vertex(cube.graph, "abc")]);
    for (int v = 0; v < cube.graph.n; ++v) {
        std::set<int> images;
        for (int u : neighbors(cube.graph, v)) images.insert(k4.projection[u]);
        CHECK(images.size() == 3);
    }
}
