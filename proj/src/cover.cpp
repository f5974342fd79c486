#include "atcover/cover.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "atcover/mk.hpp"

namespace atcover {

ZnVec zn_zero(int n) { return ZnVec{n, {0, 0, 0, 0}}; }

ZnVec zn_unit(int n, int axis) {
    if (axis < 0 || axis > 3) throw std::out_of_range("zn_unit: axis");
    ZnVec v = zn_zero(n);
    v.c[axis] = 1 % n;
    return v;
}

ZnVec zn_make(int n, int c1, int c2, int c3, int c4) {
    auto norm = [n](int x) { return ((x % n) + n) % n; };
    return ZnVec{n, {norm(c1), norm(c2), norm(c3), norm(c4)}};
}

ZnVec zn_add(const ZnVec& a, const ZnVec& b) {
    if (a.n != b.n) throw std::invalid_argument("zn_add: modulus mismatch");
    ZnVec out = a;
    for (int k = 0; k < 4; ++k) out.c[k] = (a.c[k] + b.c[k]) % a.n;
    return out;
}

ZnVec zn_neg(const ZnVec& a) {
    ZnVec out = a;
    for (int k = 0; k < 4; ++k) out.c[k] = (a.n - a.c[k]) % a.n;
    return out;
}

bool zn_is_zero(const ZnVec& a) {
    return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0;
}

Mat4 Mat4::identity(int n) {
    Mat4 m;
    m.n = n;
    for (int k = 0; k < 4; ++k) m.m[k][k] = 1 % n;
    return m;
}

ZnVec Mat4::apply(const ZnVec& x) const {
    if (x.n != n) throw std::invalid_argument("Mat4::apply: modulus mismatch");
    ZnVec out = zn_zero(n);
    for (int r = 0; r < 4; ++r) {
        long long acc = 0;
        for (int k = 0; k < 4; ++k) acc += static_cast<long long>(m[r][k]) * x.c[k];
        out.c[r] = static_cast<int>(acc % n);
    }
    return out;
}

Mat4 Mat4::compose(const Mat4& other) const {
    if (other.n != n) throw std::invalid_argument("Mat4::compose: modulus mismatch");
    Mat4 out;
    out.n = n;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            long long acc = 0;
            for (int k = 0; k < 4; ++k) acc += static_cast<long long>(m[r][k]) * other.m[k][c];
            out.m[r][c] = static_cast<int>(acc % n);
        }
    return out;
}

int Mat4::det_mod_n() const {
    // Laplace expansion over the 24 permutations; entries are < n <= a few
    // thousand, so 64-bit accumulation is exact.
    static const int perms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
        {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
        {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
    long long det = 0;
    for (const auto& p : perms) {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        long long term = (inversions % 2) ? -1 : 1;
        for (int r = 0; r < 4; ++r) term *= m[r][p[r]];
        det += term;
    }
    return static_cast<int>(((det % n) + n) % n);
}

bool Mat4::invertible() const { return std::gcd(det_mod_n(), n) == 1; }

VoltageAssignment::VoltageAssignment(Graph base, int n) : base_(std::move(base)), n_(n) {
    if (n < 1) throw std::invalid_argument("VoltageAssignment: modulus must be >= 1");
}

void VoltageAssignment::set_arc(int u, int v, const ZnVec& volt) {
    if (volt.n != n_) throw std::invalid_argument("set_arc: modulus mismatch");
    const auto& nbrs = neighbors(base_, u);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), v))
        throw std::invalid_argument("set_arc: (u,v) is not an arc");
    if (zn_is_zero(volt)) {
        arcs_.erase({u, v});
        arcs_.erase({v, u});
    } else {
        arcs_[{u, v}] = volt;
        arcs_[{v, u}] = zn_neg(volt);
    }
}

ZnVec VoltageAssignment::voltage(int u, int v) const {
    const auto& nbrs = neighbors(base_, u);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), v))
        throw std::invalid_argument("voltage: (u,v) is not an arc");
    auto it = arcs_.find({u, v});
    return it == arcs_.end() ? zn_zero(n_) : it->second;
}

bool VoltageAssignment::inverse_consistent() const {
    for (int u = 0; u < base_.n; ++u)
        for (int v : base_.adj[u])
            if (!(voltage(v, u) == zn_neg(voltage(u, v)))) return false;
    return true;
}

std::string VoltageAssignment::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto arr = nlohmann::json::array();
    for (const auto& [arc, volt] : arcs_) {
        if (arc.first > arc.second) continue;
        arr.push_back({{"from", base_.labels[arc.first]},
                       {"to", base_.labels[arc.second]},
                       {"voltage", {volt.c[0], volt.c[1], volt.c[2], volt.c[3]}}});
    }
    j["arcs"] = std::move(arr);
    return j.dump(2) + "\n";
}

VoltageAssignment mk_voltage(const Graph& mk, int n) {
    if (n < 1) throw std::invalid_argument("mk_voltage: n must be >= 1");
    VoltageAssignment za(mk, n);
    struct RimArc {
        const char *from, *to;
        int axis;
        int sign;
    };
    static const RimArc rim[8] = {{"id", "c", 0, 1},   {"c", "bc", 1, 1},
                                  {"bc", "bz", 2, 1},  {"bz", "z", 3, 1},
                                  {"z", "cz", 0, -1},  {"cz", "bcz", 1, -1},
                                  {"bcz", "b", 2, -1}, {"b", "id", 3, -1}};
    for (const RimArc& arc : rim) {
        ZnVec unit = zn_unit(n, arc.axis);
        za.set_arc(find_vertex(mk, arc.from), find_vertex(mk, arc.to),
                   arc.sign > 0 ? unit : zn_neg(unit));
    }
    return za;
}

int Cover::vertex(int base_v, const ZnVec& f) const {
    int rank = 0;
    for (int k = 0; k < 4; ++k) rank = rank * n + f.c[k];
    return base_v * fiber_size + rank;
}

int Cover::base_of(int cover_v) const { return cover_v / fiber_size; }

ZnVec Cover::fiber_of(int cover_v) const {
    int rank = cover_v % fiber_size;
    ZnVec f = zn_zero(n);
    for (int k = 3; k >= 0; --k) {
        f.c[k] = rank % n;
        rank /= n;
    }
    return f;
}

std::string Cover::vertex_label(int cover_v) const {
    ZnVec f = fiber_of(cover_v);
    std::ostringstream out;
    out << base.labels[base_of(cover_v)];
    for (int k = 0; k < 4; ++k) out << ' ' << f.c[k];
    return out.str();
}

Cover derived_cover(const VoltageAssignment& za) {
    if (!za.inverse_consistent())
        throw std::invalid_argument("derived_cover: assignment is not inverse-consistent");
    Cover cov;
    cov.base = za.base();
    cov.n = za.modulus();
    cov.fiber_size = cov.n * cov.n * cov.n * cov.n;

    const int total = cov.base.n * cov.fiber_size;
    cov.graph.n = total;
    cov.graph.adj.assign(total, {});

    // Enumerate fibers once in rank order.
    std::vector<ZnVec> fibers(cov.fiber_size, zn_zero(cov.n));
    for (int rank = 0; rank < cov.fiber_size; ++rank) {
        int r = rank;
        for (int k = 3; k >= 0; --k) {
            fibers[rank].c[k] = r % cov.n;
            r /= cov.n;
        }
    }

    for (int u = 0; u < cov.base.n; ++u)
        for (int v : cov.base.adj[u]) {
            ZnVec volt = za.voltage(u, v);
            for (int rank = 0; rank < cov.fiber_size; ++rank) {
                int from = u * cov.fiber_size + rank;
                cov.graph.adj[from].push_back(cov.vertex(v, zn_add(fibers[rank], volt)));
            }
        }
    for (auto& list : cov.graph.adj) std::sort(list.begin(), list.end());

    cov.graph.labels.reserve(total);
    for (int v = 0; v < total; ++v) cov.graph.labels.push_back(cov.vertex_label(v));
    return cov;
}

ZeroTree zero_voltage_tree(const VoltageAssignment& za) {
    const Graph& base = za.base();
    ZeroTree tree;
    int root = find_vertex(base, "id");
    tree.root = root >= 0 ? root : 0;
    tree.parent.assign(base.n, -1);
    std::vector<char> seen(base.n, 0);
    seen[tree.root] = 1;
    tree.bfs_order.push_back(tree.root);
    for (std::size_t head = 0; head < tree.bfs_order.size(); ++head) {
        int u = tree.bfs_order[head];
        for (int v : base.adj[u]) {
            if (seen[v] || !zn_is_zero(za.voltage(u, v))) continue;
            seen[v] = 1;
            tree.parent[v] = u;
            tree.bfs_order.push_back(v);
        }
    }
    if (static_cast<int>(tree.bfs_order.size()) != base.n)
        throw std::runtime_error("zero_voltage_tree: zero-voltage arcs do not span");
    return tree;
}

namespace {

std::vector<int> path_to_root(const ZeroTree& tree, int u) {
    std::vector<int> path{u};
    while (tree.parent[path.back()] != -1) path.push_back(tree.parent[path.back()]);
    return path;
}

// Voltage of the image under g of the fundamental closed walk through the
// cotree arc (u, v): u -> v by the arc, then back to u through the tree.
ZnVec image_cycle_voltage(const VoltageAssignment& za, const ZeroTree& tree, const Perm& g,
                          int u, int v) {
    ZnVec total = za.voltage(g(u), g(v));
    std::vector<int> pv = path_to_root(tree, v);
    for (std::size_t i = 0; i + 1 < pv.size(); ++i)
        total = zn_add(total, za.voltage(g(pv[i]), g(pv[i + 1])));
    std::vector<int> pu = path_to_root(tree, u);
    for (std::size_t i = pu.size(); i-- > 1;)
        total = zn_add(total, za.voltage(g(pu[i]), g(pu[i - 1])));
    return total;
}

}  // namespace

std::optional<Mat4> induced_voltage_aut(const VoltageAssignment& za, const Perm& g) {
    const Graph& base = za.base();
    if (!is_automorphism(base, g))
        throw std::invalid_argument("induced_voltage_aut: not a base automorphism");
    ZeroTree tree = zero_voltage_tree(za);
    const int n = za.modulus();

    std::vector<std::pair<int, int>> cotree;
    for (int u = 0; u < base.n; ++u)
        for (int v : base.adj[u])
            if (u < v && tree.parent[v] != u && tree.parent[u] != v) cotree.emplace_back(u, v);

    // Columns of phi come from the arcs carrying exactly the unit voltages.
    Mat4 phi;
    phi.n = n;
    std::array<bool, 4> have{false, false, false, false};
    for (auto [u, v] : cotree) {
        for (int axis = 0; axis < 4; ++axis) {
            if (za.voltage(u, v) == zn_unit(n, axis)) {
                ZnVec col = image_cycle_voltage(za, tree, g, u, v);
                for (int r = 0; r < 4; ++r) phi.m[r][axis] = col.c[r];
                have[axis] = true;
            } else if (za.voltage(v, u) == zn_unit(n, axis)) {
                ZnVec col = image_cycle_voltage(za, tree, g, v, u);
                for (int r = 0; r < 4; ++r) phi.m[r][axis] = col.c[r];
                have[axis] = true;
            }
        }
    }
    if (!(have[0] && have[1] && have[2] && have[3]))
        throw std::invalid_argument("induced_voltage_aut: no arc carries some unit voltage");

    // Every cotree fundamental cycle must transform through phi.
    for (auto [u, v] : cotree)
        if (!(image_cycle_voltage(za, tree, g, u, v) == phi.apply(za.voltage(u, v))))
            return std::nullopt;
    if (!phi.invertible()) return std::nullopt;
    return phi;
}

LiftedAut lift_automorphism(const Cover& cov, const VoltageAssignment& za, const Perm& g,
                            const Mat4& phi, const ZnVec& t) {
    const Graph& base = za.base();
    ZeroTree tree = zero_voltage_tree(za);
    const int n = za.modulus();

    std::vector<ZnVec> shift(base.n, zn_zero(n));
    shift[tree.root] = t;
    for (int v : tree.bfs_order) {
        if (tree.parent[v] == -1) continue;
        int u = tree.parent[v];
        // Tree arcs carry zero voltage, so the recurrence loses the phi term.
        shift[v] = zn_add(shift[u], za.voltage(g(u), g(v)));
    }
    for (int u = 0; u < base.n; ++u)
        for (int v : base.adj[u]) {
            ZnVec lhs = za.voltage(g(u), g(v));
            ZnVec rhs = zn_add(zn_add(phi.apply(za.voltage(u, v)), shift[v]), zn_neg(shift[u]));
            if (!(lhs == rhs))
                throw std::runtime_error("lift_automorphism: shift equation fails (no lift)");
        }

    std::vector<int> images(cov.graph.n);
    for (int cv = 0; cv < cov.graph.n; ++cv) {
        int bv = cov.base_of(cv);
        images[cv] = cov.vertex(g(bv), zn_add(phi.apply(cov.fiber_of(cv)), shift[bv]));
    }
    return LiftedAut{Perm(std::move(images)), g, phi, std::move(shift)};
}

LiftedAut lift_fixing(const Cover& cov, const VoltageAssignment& za, const Perm& g,
                      const Mat4& phi, int cover_vertex) {
    int bv = cov.base_of(cover_vertex);
    if (g(bv) != bv) throw std::invalid_argument("lift_fixing: g moves the base vertex");
    LiftedAut base_lift = lift_automorphism(cov, za, g, phi, zn_zero(za.modulus()));
    // shift_t = shift_0 + t, so solve phi f + shift_0(bv) + t = f.
    ZnVec f = cov.fiber_of(cover_vertex);
    ZnVec t = zn_add(f, zn_neg(zn_add(phi.apply(f), base_lift.shift[bv])));
    return lift_automorphism(cov, za, g, phi, t);
}

LiftedAut deck_translation(const Cover& cov, const ZnVec& t) {
    std::vector<int> images(cov.graph.n);
    std::vector<ZnVec> shift(cov.base.n, t);
    for (int cv = 0; cv < cov.graph.n; ++cv)
        images[cv] = cov.vertex(cov.base_of(cv), zn_add(cov.fiber_of(cv), t));
    return LiftedAut{Perm(std::move(images)), Perm(cov.base.n), Mat4::identity(cov.n),
                     std::move(shift)};
}

namespace {

Quotient quotient_by_pairing(const Graph& g, const std::vector<int>& partner) {
    std::vector<int> proj(g.n, -1);
    std::vector<std::string> labels;
    std::vector<int> reps;
    for (int v = 0; v < g.n; ++v) {
        if (proj[v] != -1) continue;
        int rep = std::min(v, partner[v]);
        proj[v] = proj[partner[v]] = static_cast<int>(reps.size());
        reps.push_back(rep);
        labels.push_back(g.labels[rep]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            int pu = proj[u], pv = proj[v];
            if (pu == pv) throw std::runtime_error("quotient: pairing collapses an edge");
            if (pu < pv) edges.emplace_back(pu, pv);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Quotient q;
    q.graph = make_graph(std::move(labels), edges);
    q.projection = std::move(proj);
    return q;
}

}  // namespace

Quotient quotient_mod_z(const Graph& mk) {
    std::vector<int> partner(mk.n);
    const RElement z = r_parse("z");
    for (int v = 0; v < mk.n; ++v) {
        int p = find_vertex(mk, r_word(r_multiply(r_parse(mk.labels[v]), z)));
        if (p < 0) throw std::invalid_argument("quotient_mod_z: input is not the Cayley base");
        partner[v] = p;
    }
    return quotient_by_pairing(mk, partner);
}

Quotient quotient_antipodal(const Graph& cube) {
    // Labels are z-free words over {a, b, c}; the antipode adds all three.
    std::vector<int> partner(cube.n);
    const RElement abc = r_parse("abc");
    for (int v = 0; v < cube.n; ++v) {
        RElement x = r_parse(cube.labels[v]);
        RElement y = r_multiply(x, abc);
        y.bits &= 0x7;  // quotient group is elementary abelian; drop the z part
        int p = find_vertex(cube, r_word(y));
        if (p < 0) throw std::invalid_argument("quotient_antipodal: input is not the cube quotient");
        partner[v] = p;
    }
    return quotient_by_pairing(cube, partner);
}

}  // namespace atcover
