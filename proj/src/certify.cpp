#include "atcover/certify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <vector>

#include "atcover/eigenspace.hpp"
#include "atcover/localaction.hpp"
#include "atcover/mk.hpp"

namespace atcover {

namespace {

using nlohmann::json;

json check(const std::string& name, bool ok, bool mandatory = true) {
    return json{{"check", name}, {"ok", ok}, {"mandatory", mandatory}};
}

json base_graph_checks() {
    json out = json::array();
    Graph mk = build_mk();
    out.push_back(check("mk_16_vertices", mk.n == 16));
    out.push_back(check("mk_24_edges", edge_count(mk) == 24));
    out.push_back(check("mk_3_regular", is_regular(mk, 3)));
    out.push_back(check("mk_connected", is_connected(mk)));

    PermGroup b = mk_aut_b(mk), a = mk_aut_a(mk);
    out.push_back(check("aut_b_order_96", group_order(b) == 96));
    out.push_back(check("aut_a_order_48", group_order(a) == 48));
    out.push_back(check("aut_b_regular_on_2_arcs", s_arc_action(b, mk, 2) == ArcAction::regular));
    out.push_back(check("aut_a_regular_on_arcs", s_arc_action(a, mk, 1) == ArcAction::regular));
    return out;
}

json cover_checks(const GammaScaffold& gs) {
    json out = json::array();
    const int expected = 16 * gs.n * gs.n * gs.n * gs.n;
    out.push_back(check("cover_vertex_count", gs.cover.graph.n == expected));
    out.push_back(check("cover_3_regular", is_regular(gs.cover.graph, 3)));
    out.push_back(check("cover_connected", is_connected(gs.cover.graph)));
    out.push_back(check("voltage_inverse_consistent", gs.zeta.inverse_consistent()));
    if (gs.n == 1) {
        bool iso = gs.cover.graph.n == gs.mk.n;
        for (int v = 0; iso && v < gs.mk.n; ++v) iso = gs.cover.graph.adj[v] == gs.mk.adj[v];
        out.push_back(check("cover_n1_equals_base", iso));
    }
    return out;
}

json lifting_checks(const GammaScaffold& gs) {
    json out = json::array();
    bool lifts_ok = true, auts_ok = true;
    MkAutGens base = mk_aut_gens(gs.mk);
    for (const Perm* g : {&base.rho_a, &base.rho_b, &base.rho_c, &base.alpha_abc, &base.alpha_ab})
        if (!induced_voltage_aut(gs.zeta, *g)) lifts_ok = false;
    for (const LiftedAut& la : gs.lift_gens)
        if (!is_automorphism(gs.cover.graph, la.cover_perm)) auts_ok = false;
    out.push_back(check("all_base_generators_lift", lifts_ok));
    out.push_back(check("lifts_are_cover_automorphisms", auts_ok));

    // Deck group: n^4 distinct translations, free away from zero, transitive
    // on each fiber.
    const int fiber = gs.cover.fiber_size;
    PermGroup deck{gs.cover.graph.n, {}};
    for (const LiftedAut& la : gs.deck_gens) deck.generators.push_back(la.cover_perm);
    bool deck_ok = group_order(deck) == static_cast<std::uint64_t>(fiber);
    for (int b = 0; b < gs.cover.base.n && deck_ok; ++b)
        deck_ok = static_cast<int>(orbit(deck, b * fiber).size()) == fiber;
    out.push_back(check("deck_group_regular_on_fibers", deck_ok));
    return out;
}

json order_oracle_checks(const GammaScaffold& gs) {
    json out = json::array();
    const std::uint64_t n4 = static_cast<std::uint64_t>(gs.cover.fiber_size);
    out.push_back(check("lifted_b_order", group_order(gs.lifted_b()) == 96 * n4));
    out.push_back(check("lifted_a_order", group_order(gs.lifted_a()) == 48 * n4));
    return out;
}

json eigen_checks(const GammaScaffold& gs, json& summary) {
    json out = json::array();
    EigenReport rep;
    rep.n = gs.n;
    rep.vertices = gs.cover.graph.n;
    rep.dim = static_cast<int>(gs.e1.dim());
    rep.formula_expected = gs.cover.graph.n / 8 + (gs.n % 2 ? 2 : 8);
    rep.matches_formula = rep.dim == rep.formula_expected;
    summary["eigen_dim"] = rep.dim;
    summary["eigen_formula_expected"] = rep.formula_expected;
    summary["eigen_matches_formula"] = rep.matches_formula;

    bool basis_ok = true;
    Gf2Matrix a_plus_i = adjacency_gf2(gs.cover.graph);
    for (int v = 0; v < gs.cover.graph.n; ++v) a_plus_i.set(v, v, true);
    for (const Gf2Vector& x : gs.e1.vectors())
        if (!a_plus_i.apply(x).is_zero()) basis_ok = false;
    out.push_back(check("eigen_basis_valid", basis_ok));
    out.push_back(check("eigen_formula_match", rep.matches_formula, /*mandatory=*/false));
    return out;
}

json support_checks(const GammaScaffold& gs, const std::string& support_path) {
    json out = json::array();
    auto support =
        support_path.empty() ? support72_vertices(gs.cover) : support72_vertices(gs.cover, support_path);
    out.push_back(check("support_has_72_vertices", support.size() == 72));
    SupportCheck sc = verify_eigen_support(gs.cover.graph, support);
    out.push_back(check("support_odd_even_criterion", sc.ok));
    out.push_back(
        check("support_in_eigenspace", gs.e1.in_span(indicator(gs.cover.graph.n, support))));

    GreedyBasis greedy = greedy_orbit_basis(gs.cover.graph, indicator(gs.cover.graph.n, support),
                                            gs.lifted_b());
    const int t = static_cast<int>(greedy.vectors.size());
    bool sizes_ok = true, eigen_ok = true;
    std::vector<char> covered(gs.cover.graph.n, 0);
    for (const Gf2Vector& x : greedy.vectors) {
        if (x.popcount() != 72) sizes_ok = false;
        if (!verify_eigen_support(gs.cover.graph,
                                  [&x] {
                                      std::vector<int> s;
                                      for (std::size_t v : x.support()) s.push_back(static_cast<int>(v));
                                      return s;
                                  }())
                 .ok)
            eigen_ok = false;
        for (std::size_t v : x.support()) covered[v] = 1;
    }
    bool covers_all = std::find(covered.begin(), covered.end(), 0) == covered.end();
    out.push_back(check("greedy_supports_cover_graph", covers_all));
    out.push_back(check("greedy_supports_size_72", sizes_ok));
    out.push_back(check("greedy_vectors_are_eigenvectors", eigen_ok));
    out.push_back(check("greedy_count_meets_bound", 72 * t >= gs.cover.graph.n));
    out.push_back(check("greedy_count_at_most_dim", t <= static_cast<int>(gs.e1.dim())));
    return out;
}

json local_action_checks(const GammaScaffold& gs, json& reports) {
    json out = json::array();
    const struct {
        Construction c;
        Degree6Type expected;
        std::uint64_t order;
    } targets[3] = {{Construction::G1, Degree6Type::A4_6, 12},
                    {Construction::G2, Degree6Type::S4_6d, 24},
                    {Construction::G3, Degree6Type::S4_6c, 24}};
    for (const auto& target : targets) {
        LocalActionReport rep = local_action(gs, target.c);
        reports.push_back(nlohmann::json::parse(rep.to_json()));
        std::string prefix = construction_name(target.c);
        out.push_back(check(prefix + "_identified", rep.identified == target.expected));
        out.push_back(check(prefix + "_local_order", rep.local_order == target.order));
        out.push_back(check(prefix + "_kernel_order_4", rep.kernel_order == 4));
        if (gs.n >= 3) out.push_back(check(prefix + "_stabiliser_bound", rep.bound_holds));
    }
    return out;
}

json sigma_checks(const GammaScaffold& gs) {
    json out = json::array();
    SigmaTau st = build_sigma_tau(gs);

    bool closure_ok = true;
    auto check_gen = [&](const Perm& cover_perm) {
        Gf2Vector moved = permute_vector(st.sigma, cover_perm);
        if (!gs.e1.in_span(moved ^ st.sigma)) closure_ok = false;
    };
    for (const LiftedAut& la : gs.lift_gens) check_gen(la.cover_perm);
    for (const LiftedAut& la : gs.deck_gens) check_gen(la.cover_perm);
    out.push_back(check("sigma_translates_into_eigenspace", closure_ok));

    bool arc_ok = !st.sigma.get(st.v) && st.sigma.get(st.w);
    for (int u : neighbors(gs.cover.graph, st.v))
        if (u != st.w && st.sigma.get(u)) arc_ok = false;
    out.push_back(check("sigma_special_arc", arc_ok));

    Perm tau_sigma = as_gamma_perm(st.tau.cover_perm).then(flip_perm(gs.cover.graph.n, st.sigma));
    out.push_back(check("tau_sigma_fixes_vertex", tau_sigma(2 * st.v) == 2 * st.v));
    out.push_back(check("tau_sigma_outside_g1", !g1_membership(gs, tau_sigma)));
    out.push_back(check("tau_sigma_squared_in_g1", g1_membership(gs, tau_sigma.then(tau_sigma))));
    return out;
}

json run_level(int n, const std::string& support_path) {
    GammaScaffold gs = build_gamma(n);
    json level;
    level["n"] = n;
    json checks = json::array();
    auto append = [&checks](const json& more) {
        for (const auto& c : more) checks.push_back(c);
    };
    append(cover_checks(gs));
    append(lifting_checks(gs));
    if (n <= 2) append(order_oracle_checks(gs));
    json summary;
    append(eigen_checks(gs, summary));
    level["eigen"] = summary;
    if (n >= 3)
        append(support_checks(gs, support_path));
    else
        level["support"] = "skipped (requires n >= 3)";
    json reports = json::array();
    append(local_action_checks(gs, reports));
    level["local_actions"] = reports;
    append(sigma_checks(gs));
    level["checks"] = checks;

    bool pass = true;
    for (const auto& c : checks)
        if (c["mandatory"].get<bool>() && !c["ok"].get<bool>()) pass = false;
    level["pass"] = pass;
    return level;
}

}  // namespace

CertifyResult certify(const CertifyOptions& options) {
    if (options.n_max < 1) throw std::invalid_argument("certify: n_max must be >= 1");

    CertifyResult result;
    result.report["n_max"] = options.n_max;
    result.report["base"] = base_graph_checks();

    std::vector<json> levels(options.n_max);
    if (options.parallel) {
        std::vector<std::future<json>> futures;
        for (int n = 1; n <= options.n_max; ++n)
            futures.push_back(std::async(std::launch::async, run_level, n, options.support_path));
        for (int n = 1; n <= options.n_max; ++n) levels[n - 1] = futures[n - 1].get();
    } else {
        for (int n = 1; n <= options.n_max; ++n) levels[n - 1] = run_level(n, options.support_path);
    }

    bool pass = true;
    for (const auto& c : result.report["base"])
        if (c["mandatory"].get<bool>() && !c["ok"].get<bool>()) pass = false;
    json runs = json::array();
    for (auto& level : levels) {
        if (!level["pass"].get<bool>()) pass = false;
        runs.push_back(std::move(level));
    }
    result.report["runs"] = std::move(runs);
    result.report["overall_pass"] = pass;
    result.pass = pass;
    return result;
}

}  // namespace atcover
