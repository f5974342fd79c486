#include "atcover/eigenspace.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace atcover {

Gf2Basis one_eigenspace(const Graph& g) {
    Gf2Matrix m = adjacency_gf2(g);
    for (int v = 0; v < g.n; ++v) m.set(v, v, true);
    return kernel_basis(m);
}

std::string EigenReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["vertices"] = vertices;
    j["dim"] = dim;
    j["formula_expected"] = formula_expected;
    j["matches_formula"] = matches_formula;
    return j.dump(2) + "\n";
}

EigenReport eigen_report(const Cover& cov) {
    EigenReport rep;
    rep.n = cov.n;
    rep.vertices = cov.graph.n;
    rep.basis = one_eigenspace(cov.graph);
    rep.dim = static_cast<int>(rep.basis.dim());
    rep.formula_expected = cov.graph.n / 8 + (cov.n % 2 ? 2 : 8);
    rep.matches_formula = rep.dim == rep.formula_expected;
    return rep;
}

std::string default_support_path() { return std::string(ATCOVER_DATA_DIR) + "/support72.txt"; }

std::vector<int> support72_vertices(const Cover& cov, const std::string& path) {
    if (cov.n < 3)
        throw std::invalid_argument("support72_vertices: requires modulus n >= 3");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("support72_vertices: cannot open " + path);

    std::vector<int> out;
    std::set<int> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        int c1, c2, c3, c4;
        if (!(ls >> word >> c1 >> c2 >> c3 >> c4))
            throw std::runtime_error("support72_vertices: malformed line: " + line);
        for (int c : {c1, c2, c3, c4})
            if (c < 0 || c > 2)
                throw std::runtime_error("support72_vertices: coordinate out of range: " + line);
        int base_v = find_vertex(cov.base, word);
        if (base_v < 0) throw std::runtime_error("support72_vertices: unknown word: " + word);
        int v = cov.vertex(base_v, zn_make(cov.n, c1, c2, c3, c4));
        if (!seen.insert(v).second)
            throw std::runtime_error("support72_vertices: duplicate vertex: " + line);
        out.push_back(v);
    }
    if (out.size() != 72)
        throw std::runtime_error("support72_vertices: expected 72 lines, got " +
                                 std::to_string(out.size()));
    return out;
}

SupportCheck verify_eigen_support(const Graph& g, const std::vector<int>& support) {
    std::vector<char> in_set(g.n, 0);
    for (int v : support) {
        if (v < 0 || v >= g.n) throw std::out_of_range("verify_eigen_support: vertex out of range");
        in_set[v] = 1;
    }
    SupportCheck check;
    for (int v = 0; v < g.n; ++v) {
        int count = 0;
        for (int u : g.adj[v]) count += in_set[u];
        if ((count % 2 == 1) != static_cast<bool>(in_set[v])) check.violations.push_back(v);
    }
    check.ok = check.violations.empty();
    return check;
}

Gf2Vector indicator(std::size_t len, const std::vector<int>& support) {
    Gf2Vector v(len);
    for (int i : support) v.set(static_cast<std::size_t>(i), true);
    return v;
}

Gf2Vector permute_vector(const Gf2Vector& x, const Perm& p) {
    Gf2Vector out(x.size());
    for (std::size_t v : x.support()) out.set(static_cast<std::size_t>(p(static_cast<int>(v))), true);
    return out;
}

GreedyBasis greedy_orbit_basis(const Graph& g, const Gf2Vector& x1, const PermGroup& aut_gens) {
    if (static_cast<int>(x1.size()) != g.n || aut_gens.degree != g.n)
        throw std::invalid_argument("greedy_orbit_basis: size mismatch");
    if (x1.is_zero()) throw std::invalid_argument("greedy_orbit_basis: x1 is zero");

    const int root = static_cast<int>(x1.pivot());  // least support vertex
    Transversal trans = orbit_transversal(aut_gens, root);
    for (int v = 0; v < g.n; ++v)
        if (!trans.reached[v])
            throw std::invalid_argument("greedy_orbit_basis: group is not vertex-transitive");

    GreedyBasis out{Gf2Basis(g.n), {}, {}};
    std::vector<char> covered(g.n, 0);
    auto take = [&](const Gf2Vector& x, const Perm& witness) {
        if (!out.basis.extend(x))
            throw std::runtime_error("greedy_orbit_basis: translated vector is dependent");
        for (std::size_t v : x.support()) covered[v] = 1;
        out.vectors.push_back(x);
        out.witnesses.push_back(witness);
    };
    take(x1, Perm(g.n));

    for (int v = 0; v < g.n; ++v) {
        if (covered[v]) continue;
        const Perm& witness = trans.perm_to[v];  // maps root to v
        take(permute_vector(x1, witness), witness);
        if (!covered[v])
            throw std::runtime_error("greedy_orbit_basis: transversal failed to cover vertex");
    }
    return out;
}

}  // namespace atcover
