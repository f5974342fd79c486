#include "atcover/localaction.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace atcover {

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::G1: return "G1";
        case Construction::G2: return "G2";
        case Construction::G3: return "G3";
    }
    return "G1";
}

PermGroup GammaScaffold::lifted_b() const {
    PermGroup g{cover.graph.n, {}};
    for (const LiftedAut& la : lift_gens) g.generators.push_back(la.cover_perm);
    for (const LiftedAut& la : deck_gens) g.generators.push_back(la.cover_perm);
    return g;
}

PermGroup GammaScaffold::lifted_a() const {
    PermGroup g{cover.graph.n, {}};
    for (std::size_t i = 0; i + 1 < lift_gens.size(); ++i)
        g.generators.push_back(lift_gens[i].cover_perm);
    for (const LiftedAut& la : deck_gens) g.generators.push_back(la.cover_perm);
    return g;
}

GammaScaffold build_gamma(int n) {
    if (n < 1) throw std::invalid_argument("build_gamma: n must be >= 1");
    Graph mk = build_mk();
    VoltageAssignment zeta = mk_voltage(mk, n);
    GammaScaffold gs{n,    mk, zeta, derived_cover(zeta), Graph{}, Gf2Basis{0}, {}, {},
                     {},   {}};
    gs.gamma = lex_blowup(gs.cover.graph);
    gs.e1 = one_eigenspace(gs.cover.graph);

    MkAutGens base = mk_aut_gens(mk);
    for (const Perm* g : {&base.rho_a, &base.rho_b, &base.rho_c, &base.alpha_abc, &base.alpha_ab}) {
        auto phi = induced_voltage_aut(zeta, *g);
        if (!phi) throw std::runtime_error("build_gamma: base generator does not lift");
        gs.lift_gens.push_back(lift_automorphism(gs.cover, zeta, *g, *phi, zn_zero(n)));
    }
    for (int axis = 0; axis < 4; ++axis)
        gs.deck_gens.push_back(deck_translation(gs.cover, zn_unit(n, axis)));

    gs.a_elements = enumerate_elements(mk_aut_a(mk), 100);
    gs.b_elements = enumerate_elements(mk_aut_b(mk), 200);
    return gs;
}

Perm flip_perm(int cover_vertices, const Gf2Vector& x) {
    if (static_cast<int>(x.size()) != cover_vertices)
        throw std::invalid_argument("flip_perm: size mismatch");
    std::vector<int> images(2 * cover_vertices);
    for (int v = 0; v < cover_vertices; ++v) {
        int flip = x.get(v) ? 1 : 0;
        images[2 * v] = 2 * v + flip;
        images[2 * v + 1] = 2 * v + 1 - flip;
    }
    return Perm(std::move(images));
}

Perm e1_as_perm(const GammaScaffold& gs, const Gf2Vector& x) {
    if (!gs.e1.in_span(x)) throw std::invalid_argument("e1_as_perm: vector is not in the eigenspace");
    return flip_perm(gs.cover.graph.n, x);
}

Perm as_gamma_perm(const Perm& cover_perm) {
    std::vector<int> images(2 * cover_perm.degree());
    for (int v = 0; v < cover_perm.degree(); ++v) {
        images[2 * v] = 2 * cover_perm(v);
        images[2 * v + 1] = 2 * cover_perm(v) + 1;
    }
    return Perm(std::move(images));
}

Perm lift_as_gamma_perm(const GammaScaffold&, const LiftedAut& la) {
    return as_gamma_perm(la.cover_perm);
}

namespace {

// Base automorphisms from `pool` fixing base vertex u, in sorted order.
std::vector<Perm> fixing_base_vertex(const std::vector<Perm>& pool, int u) {
    std::vector<Perm> out;
    for (const Perm& p : pool)
        if (p(u) == u) out.push_back(p);
    return out;
}

bool in_sorted(const std::vector<Perm>& sorted_pool, const Perm& p) {
    return std::binary_search(sorted_pool.begin(), sorted_pool.end(), p);
}

}  // namespace

SigmaTau build_sigma_tau(const GammaScaffold& gs) {
    // sigma on the base: pull the indicator of one K4 vertex (the class of
    // the identity) back through the two quotients.
    Quotient cube = quotient_mod_z(gs.mk);
    Quotient k4 = quotient_antipodal(cube.graph);
    int id_class = k4.projection[cube.projection[find_vertex(gs.mk, "id")]];

    Gf2Vector sigma(gs.cover.graph.n);
    for (int v = 0; v < gs.cover.graph.n; ++v)
        if (k4.projection[cube.projection[gs.cover.base_of(v)]] == id_class) sigma.set(v, true);

    SigmaTau st{std::move(sigma), LiftedAut{}, -1, -1};
    st.v = gs.cover.vertex(find_vertex(gs.mk, "a"), zn_zero(gs.n));
    st.w = gs.cover.vertex(find_vertex(gs.mk, "id"), zn_zero(gs.n));

    if (st.sigma.get(st.v) || !st.sigma.get(st.w))
        throw std::runtime_error("build_sigma_tau: special arc values are wrong");
    for (int u : neighbors(gs.cover.graph, st.v))
        if (u != st.w && st.sigma.get(u))
            throw std::runtime_error("build_sigma_tau: sigma hits another neighbor of v");

    // tau: pinned lift of an element outside the arc-regular subgroup that
    // fixes v and moves w.
    int base_v = gs.cover.base_of(st.v);
    bool found = false;
    for (const Perm& g : fixing_base_vertex(gs.b_elements, base_v)) {
        if (in_sorted(gs.a_elements, g)) continue;
        auto phi = induced_voltage_aut(gs.zeta, g);
        if (!phi) throw std::runtime_error("build_sigma_tau: element does not lift");
        LiftedAut lift = lift_fixing(gs.cover, gs.zeta, g, *phi, st.v);
        if (lift.cover_perm(st.w) != st.w) {
            st.tau = std::move(lift);
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("build_sigma_tau: no suitable tau exists");
    return st;
}

std::string LocalActionReport::to_json() const {
    nlohmann::json j;
    j["construction"] = construction_name(construction);
    j["n"] = n;
    j["identified_as"] = degree6_name(identified);
    j["local_order"] = local_order;
    j["kernel_order"] = kernel_order;
    j["stabiliser_order_log2_times3"] = stab_log2_times3;
    j["bound_log2"] = 2.0 * n * n * n * n * 16.0 / 144.0 - 1.0;
    j["bound_applies"] = bound_applies;
    j["bound_holds"] = bound_holds;
    j["witnesses"] = witnesses;
    return j.dump(2) + "\n";
}

LocalActionReport local_action(const GammaScaffold& gs, Construction c, int lambda_vertex) {
    const int std_vertex = gs.cover.vertex(find_vertex(gs.mk, "a"), zn_zero(gs.n));
    const int v = lambda_vertex < 0 ? std_vertex : lambda_vertex;
    if (v >= gs.cover.graph.n) throw std::out_of_range("local_action: vertex out of range");

    const std::size_t dim = gs.e1.dim();
    if (dim < 2) throw std::runtime_error("local_action: eigenspace dimension below 2");

    // Basis of the codimension-1 subspace of vectors vanishing at v.
    const Gf2Vector* pivot_at_v = nullptr;
    for (const Gf2Vector& x : gs.e1.vectors())
        if (x.get(v)) {
            pivot_at_v = &x;
            break;
        }
    if (!pivot_at_v) throw std::runtime_error("local_action: eigenspace vanishes at the vertex");
    std::vector<Gf2Vector> flips_at_v;
    for (const Gf2Vector& x : gs.e1.vectors()) {
        if (&x == pivot_at_v) continue;
        flips_at_v.push_back(x.get(v) ? (x ^ *pivot_at_v) : x);
    }

    // Order-3 pinned lift spanning the arc-regular stabiliser at v.
    std::vector<Perm> order3;
    for (const Perm& g : fixing_base_vertex(gs.a_elements, gs.cover.base_of(v)))
        if (g.order() == 3) order3.push_back(g);
    if (order3.empty()) throw std::runtime_error("local_action: no order-3 base stabiliser element");
    auto phi3 = induced_voltage_aut(gs.zeta, order3.front());
    LiftedAut rot = lift_fixing(gs.cover, gs.zeta, order3.front(), *phi3, v);
    if (rot.cover_perm.order() != 3)
        throw std::runtime_error("local_action: pinned lift does not have order 3");

    std::vector<Perm> stab_gens;
    for (const Gf2Vector& x : flips_at_v) stab_gens.push_back(flip_perm(gs.cover.graph.n, x));
    const std::size_t flip_gen_count = stab_gens.size();
    stab_gens.push_back(as_gamma_perm(rot.cover_perm));

    if (c == Construction::G2) {
        // Pinned involution projecting outside the arc-regular subgroup.
        bool found = false;
        for (const Perm& g : fixing_base_vertex(gs.b_elements, gs.cover.base_of(v))) {
            if (in_sorted(gs.a_elements, g)) continue;
            auto phi = induced_voltage_aut(gs.zeta, g);
            LiftedAut inv = lift_fixing(gs.cover, gs.zeta, g, *phi, v);
            if (inv.cover_perm.order() != 2)
                throw std::runtime_error("local_action: pinned involution has wrong order");
            stab_gens.push_back(as_gamma_perm(inv.cover_perm));
            found = true;
            break;
        }
        if (!found) throw std::runtime_error("local_action: no involution available");
    } else if (c == Construction::G3) {
        SigmaTau st = build_sigma_tau(gs);
        Perm tau_sigma =
            as_gamma_perm(st.tau.cover_perm).then(flip_perm(gs.cover.graph.n, st.sigma));
        if (v != st.v) {
            // Transport tau*sigma along an element of the first construction
            // carrying the standard vertex to v; the first construction is
            // normal in the third, so the conjugate stays outside it.
            Transversal trans = orbit_transversal(gs.lifted_a(), st.v);
            if (!trans.reached[v])
                throw std::runtime_error("local_action: lifted group is not transitive");
            Perm carry = as_gamma_perm(trans.perm_to[v]);
            tau_sigma = carry.inverse().then(tau_sigma).then(carry);
        }
        stab_gens.push_back(tau_sigma);
    }

    // Restrict to the six neighbors of (v, 0).
    const int vg = 2 * v;
    std::vector<int> pts;
    for (int u : neighbors(gs.gamma, vg)) pts.push_back(u);
    std::sort(pts.begin(), pts.end());
    if (pts.size() != 6) throw std::runtime_error("local_action: vertex is not 6-valent");
    auto restrict6 = [&pts, vg](const Perm& p) {
        if (p(vg) != vg) throw std::runtime_error("local_action: generator moves the vertex");
        std::vector<int> images(6);
        for (int k = 0; k < 6; ++k) {
            auto it = std::lower_bound(pts.begin(), pts.end(), p(pts[k]));
            if (it == pts.end() || *it != p(pts[k]))
                throw std::runtime_error("local_action: generator leaves the neighborhood");
            images[k] = static_cast<int>(it - pts.begin());
        }
        return Perm(std::move(images));
    };

    std::vector<Perm> local_gens, kernel_gens;
    for (std::size_t i = 0; i < stab_gens.size(); ++i) {
        Perm r = restrict6(stab_gens[i]);
        if (i < flip_gen_count) kernel_gens.push_back(r);
        if (!r.is_identity() &&
            std::find(local_gens.begin(), local_gens.end(), r) == local_gens.end())
            local_gens.push_back(r);
    }

    LocalActionReport rep;
    rep.construction = c;
    rep.n = gs.n;
    rep.lambda_vertex = v;
    PermGroup local{6, local_gens};
    rep.local_order = group_order(local);
    rep.kernel_order = group_order(PermGroup{6, kernel_gens});
    rep.identified = identify_degree6(local);
    rep.stab_log2_times3 = static_cast<int>(dim) - (c == Construction::G1 ? 1 : 0);
    rep.bound_applies = gs.n >= 3;
    // 3 * 2^k >= 3 * 2^(m/144 - 1)  <=>  144 * (k + 1) >= m.
    rep.bound_holds = 144LL * (rep.stab_log2_times3 + 1) >= static_cast<long long>(gs.gamma.n);
    for (const Perm& p : local_gens) rep.witnesses.push_back(p.cycle_string());
    return rep;
}

bool g1_membership(const GammaScaffold& gs, const Perm& gamma_perm) {
    const int cover_n = gs.cover.graph.n;
    if (gamma_perm.degree() != 2 * cover_n)
        throw std::invalid_argument("g1_membership: degree mismatch");

    // Split into base cover action and flip vector.
    std::vector<int> base_images(cover_n);
    Gf2Vector flip(cover_n);
    for (int v = 0; v < cover_n; ++v) {
        int im0 = gamma_perm(2 * v), im1 = gamma_perm(2 * v + 1);
        if (im0 / 2 != im1 / 2 || im0 == im1)
            throw std::invalid_argument("g1_membership: pair structure is not preserved");
        base_images[v] = im0 / 2;
        if (im0 % 2 == 1) flip.set(v, true);
    }
    Perm base(std::move(base_images));

    if (!gs.e1.in_span(flip)) return false;

    // The base action must be a lift: fiber-preserving, projecting into the
    // arc-regular subgroup, and equal to the reconstructed lift.
    std::vector<int> mk_images(gs.mk.n);
    for (int b = 0; b < gs.mk.n; ++b)
        mk_images[b] = gs.cover.base_of(base(gs.cover.vertex(b, zn_zero(gs.n))));
    for (int v = 0; v < cover_n; ++v)
        if (gs.cover.base_of(base(v)) != mk_images[gs.cover.base_of(v)]) return false;
    Perm projected(std::move(mk_images));
    if (!in_sorted(gs.a_elements, projected)) return false;

    auto phi = induced_voltage_aut(gs.zeta, projected);
    if (!phi) return false;
    ZeroTree tree = zero_voltage_tree(gs.zeta);
    ZnVec t = gs.cover.fiber_of(base(gs.cover.vertex(tree.root, zn_zero(gs.n))));
    LiftedAut rebuilt = lift_automorphism(gs.cover, gs.zeta, projected, *phi, t);
    return rebuilt.cover_perm == base;
}

}  // namespace atcover
