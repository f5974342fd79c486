#include "atcover/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace atcover {

Perm::Perm(int degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("Perm: not a bijection");
        seen[x] = 1;
    }
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::then(const Perm& next) const {
    if (degree() != next.degree()) throw std::invalid_argument("Perm::then: degree mismatch");
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[i] = next.img_[img_[i]];
    Perm p;
    p.img_ = std::move(out);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
    Perm p;
    p.img_ = std::move(out);
    return p;
}

long long Perm::order() const {
    std::vector<char> seen(img_.size(), 0);
    long long ord = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Perm::cycle_string() const {
    std::vector<char> seen(img_.size(), 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        out << '(';
        bool first = true;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

std::vector<int> orbit(const PermGroup& g, int point) {
    if (point < 0 || point >= g.degree) throw std::out_of_range("orbit: point out of range");
    std::vector<char> seen(g.degree, 0);
    std::vector<int> out{point};
    seen[point] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const Perm& s : g.generators) {
            int im = s(out[head]);
            if (!seen[im]) {
                seen[im] = 1;
                out.push_back(im);
            }
        }
    return out;
}

Transversal orbit_transversal(const PermGroup& g, int root) {
    if (root < 0 || root >= g.degree) throw std::out_of_range("orbit_transversal: root out of range");
    Transversal t;
    t.root = root;
    t.reached.assign(g.degree, 0);
    t.perm_to.assign(g.degree, Perm());
    t.reached[root] = 1;
    t.perm_to[root] = Perm(g.degree);
    t.points.push_back(root);
    for (std::size_t head = 0; head < t.points.size(); ++head) {
        int p = t.points[head];
        for (const Perm& s : g.generators) {
            int im = s(p);
            if (!t.reached[im]) {
                t.reached[im] = 1;
                t.perm_to[im] = t.perm_to[p].then(s);
                t.points.push_back(im);
            }
        }
    }
    return t;
}

bool is_transitive(const PermGroup& g) {
    if (g.degree == 0) return true;
    return static_cast<int>(orbit(g, 0).size()) == g.degree;
}

int degree_ceiling() {
    if (const char* env = std::getenv("ATCOVER_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 4096;
}

namespace {

// Stabilizer chain: level i holds generators fixing base[0..i-1] pointwise,
// with the orbit and transversal of base[i] under them.
struct StabChain {
    int degree = 0;
    std::vector<int> base;
    std::vector<std::vector<Perm>> gens;
    std::vector<std::vector<int>> orbit_points;   // BFS order
    std::vector<std::vector<int>> orbit_pos;      // point -> index or -1
    std::vector<std::vector<Perm>> transversal;   // by orbit index; maps base[i] to the point
};

int min_moved(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p(i) != i) return i;
    return -1;
}

void rebuild_level(StabChain& c, std::size_t i) {
    int b = c.base[i];
    c.orbit_points[i].assign(1, b);
    c.orbit_pos[i].assign(c.degree, -1);
    c.orbit_pos[i][b] = 0;
    c.transversal[i].assign(1, Perm(c.degree));
    for (std::size_t head = 0; head < c.orbit_points[i].size(); ++head) {
        int p = c.orbit_points[i][head];
        for (const Perm& s : c.gens[i]) {
            int im = s(p);
            if (c.orbit_pos[i][im] < 0) {
                c.orbit_pos[i][im] = static_cast<int>(c.orbit_points[i].size());
                c.orbit_points[i].push_back(im);
                c.transversal[i].push_back(c.transversal[i][head].then(s));
            }
        }
    }
}

void add_level(StabChain& c, int point) {
    c.base.push_back(point);
    c.gens.emplace_back();
    c.orbit_points.emplace_back();
    c.orbit_pos.emplace_back();
    c.transversal.emplace_back();
    rebuild_level(c, c.base.size() - 1);
}

// Sifts g through levels from..end; returns the residue and the level where
// sifting stopped (== base.size() when the residue fixes every base point).
std::pair<Perm, std::size_t> strip(const StabChain& c, Perm g, std::size_t from) {
    std::size_t i = from;
    for (; i < c.base.size(); ++i) {
        int im = g(c.base[i]);
        int pos = c.orbit_pos[i][im];
        if (pos < 0) return {std::move(g), i};
        g = g.then(c.transversal[i][pos].inverse());
    }
    return {std::move(g), i};
}

StabChain schreier_sims(const PermGroup& group, int forced_first_base) {
    if (group.degree > degree_ceiling())
        throw std::runtime_error("group_order: degree exceeds ceiling (set ATCOVER_MAX_DEGREE)");
    StabChain c;
    c.degree = group.degree;

    std::vector<Perm> gens;
    for (const Perm& g : group.generators) {
        if (g.degree() != group.degree) throw std::invalid_argument("group degree mismatch");
        if (!g.is_identity()) gens.push_back(g);
    }
    if (forced_first_base >= 0) add_level(c, forced_first_base);
    if (gens.empty()) return c;
    if (c.base.empty()) add_level(c, min_moved(gens.front()));
    c.gens[0] = gens;
    rebuild_level(c, 0);

    // Fixpoint over Schreier generators, deepest level first. All chain
    // vectors are accessed by index: adding a level reallocates them.
    std::size_t i = c.base.size();
    while (i > 0) {
        --i;
        bool complete = true;
        for (std::size_t oi = 0; complete && oi < c.orbit_points[i].size(); ++oi) {
            for (std::size_t si = 0; si < c.gens[i].size(); ++si) {
                int image = c.gens[i][si](c.orbit_points[i][oi]);
                Perm schreier = c.transversal[i][oi]
                                    .then(c.gens[i][si])
                                    .then(c.transversal[i][c.orbit_pos[i][image]].inverse());
                auto [residue, lev] = strip(c, std::move(schreier), i + 1);
                if (residue.is_identity()) continue;
                if (lev == c.base.size()) add_level(c, min_moved(residue));
                for (std::size_t j = i + 1; j <= lev; ++j) {
                    c.gens[j].push_back(residue);
                    rebuild_level(c, j);
                }
                i = lev + 1;  // resume scanning at level lev
                complete = false;
                break;
            }
        }
    }
    return c;
}

std::uint64_t chain_order(const StabChain& c, std::size_t from_level) {
    std::uint64_t order = 1;
    for (std::size_t i = from_level; i < c.base.size(); ++i)
        order *= static_cast<std::uint64_t>(c.orbit_points[i].size());
    return order;
}

}  // namespace

std::uint64_t group_order(const PermGroup& g) {
    StabChain c = schreier_sims(g, -1);
    return chain_order(c, 0);
}

PointStabilizer point_stabilizer(const PermGroup& g, int point) {
    if (point < 0 || point >= g.degree) throw std::out_of_range("point_stabilizer: point");
    StabChain c = schreier_sims(g, point);
    PointStabilizer out;
    out.group_order = chain_order(c, 0);
    out.stabilizer_order = chain_order(c, 1);
    if (c.base.size() > 1) out.stabilizer_generators = c.gens[1];
    return out;
}

std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t limit) {
    std::set<Perm> seen;
    std::deque<Perm> queue;
    Perm id(g.degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const Perm& s : g.generators) {
            Perm next = cur.then(s);
            if (seen.insert(next).second) {
                if (seen.size() > limit)
                    throw std::runtime_error("enumerate_elements: limit exceeded");
                queue.push_back(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

ArcAction s_arc_action(const PermGroup& g, const Graph& graph, int s) {
    if (s != 1 && s != 2) throw std::invalid_argument("s_arc_action: s must be 1 or 2");
    if (g.degree != graph.n) throw std::invalid_argument("s_arc_action: degree mismatch");
    for (const Perm& p : g.generators)
        if (!is_automorphism(graph, p))
            throw std::invalid_argument("s_arc_action: generator is not a graph automorphism");

    std::vector<std::vector<int>> arcs;
    for (int u = 0; u < graph.n; ++u)
        for (int v : graph.adj[u]) {
            if (s == 1)
                arcs.push_back({u, v});
            else
                for (int w : graph.adj[v])
                    if (w != u) arcs.push_back({u, v, w});
        }
    if (arcs.empty()) return ArcAction::intransitive;

    std::set<std::vector<int>> seen{arcs.front()};
    std::deque<std::vector<int>> queue{arcs.front()};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (const Perm& p : g.generators) {
            std::vector<int> im(cur.size());
            for (std::size_t k = 0; k < cur.size(); ++k) im[k] = p(cur[k]);
            if (seen.insert(im).second) queue.push_back(std::move(im));
        }
    }
    if (seen.size() != arcs.size()) return ArcAction::intransitive;
    return group_order(g) == arcs.size() ? ArcAction::regular : ArcAction::transitive_not_regular;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Finest partition in which a and b share a block and every generator
// permutes blocks setwise.
std::vector<std::vector<int>> block_closure(const PermGroup& g, int a, int b) {
    Dsu dsu(g.degree);
    std::deque<std::pair<int, int>> work{{a, b}};
    dsu.unite(a, b);
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (const Perm& s : g.generators) {
            int u = dsu.find(s(x)), v = dsu.find(s(y));
            if (u != v) {
                dsu.unite(u, v);
                work.emplace_back(u, v);
            }
        }
    }
    std::vector<std::vector<int>> by_root(g.degree);
    for (int p = 0; p < g.degree; ++p) by_root[dsu.find(p)].push_back(p);
    std::vector<std::vector<int>> blocks;
    for (auto& blk : by_root)
        if (!blk.empty()) blocks.push_back(std::move(blk));
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

const std::vector<int>* block_of(const std::vector<std::vector<int>>& blocks, int p) {
    for (const auto& blk : blocks)
        if (std::binary_search(blk.begin(), blk.end(), p)) return &blk;
    return nullptr;
}

}  // namespace

std::vector<BlockSystem> minimal_blocks(const PermGroup& g) {
    if (!is_transitive(g)) throw std::invalid_argument("minimal_blocks: group is intransitive");

    std::vector<std::vector<std::vector<int>>> systems;
    for (int q = 1; q < g.degree; ++q) {
        auto blocks = block_closure(g, 0, q);
        if (static_cast<int>(blocks.front().size()) == g.degree) continue;  // trivial
        if (std::find(systems.begin(), systems.end(), blocks) == systems.end())
            systems.push_back(std::move(blocks));
    }

    std::vector<BlockSystem> out;
    for (const auto& sys : systems) {
        const auto& zero_block = *block_of(sys, 0);
        bool minimal = true;
        for (int q : zero_block) {
            if (q == 0) continue;
            if (block_closure(g, 0, q) != sys) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        BlockSystem bs;
        bs.blocks = sys;
        auto elements = enumerate_elements(g, 100000);
        std::uint64_t kernel = 0;
        for (const Perm& e : elements) {
            bool fixes_all = true;
            for (const auto& blk : sys) {
                for (int p : blk)
                    if (!std::binary_search(blk.begin(), blk.end(), e(p))) {
                        fixes_all = false;
                        break;
                    }
                if (!fixes_all) break;
            }
            if (fixes_all) ++kernel;
        }
        bs.kernel_order = kernel;
        out.push_back(std::move(bs));
    }
    return out;
}

std::string degree6_name(Degree6Type t) {
    switch (t) {
        case Degree6Type::A4_6: return "A4(6)";
        case Degree6Type::S4_6d: return "S4(6d)";
        case Degree6Type::S4_6c: return "S4(6c)";
        case Degree6Type::Other: return "other";
    }
    return "other";
}

namespace {

// Right-coset action of a group on the cosets of a subgroup, with coset
// indices ordered by minimal coset element.
PermGroup coset_action(const std::vector<Perm>& parent_gens, const std::vector<Perm>& sub_gens) {
    int deg = parent_gens.front().degree();
    auto parent = enumerate_elements(PermGroup{deg, parent_gens}, 100000);
    auto sub = enumerate_elements(PermGroup{deg, sub_gens}, 100000);

    auto coset_rep = [&sub](const Perm& g) {
        Perm best = sub.front().then(g);
        for (const Perm& h : sub) {
            Perm cand = h.then(g);
            if (cand < best) best = cand;
        }
        return best;
    };

    std::vector<Perm> reps;
    for (const Perm& g : parent) {
        Perm rep = coset_rep(g);
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());

    auto rep_index = [&reps](const Perm& rep) {
        return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin());
    };

    PermGroup out;
    out.degree = static_cast<int>(reps.size());
    for (const Perm& s : parent_gens) {
        std::vector<int> images(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            images[i] = rep_index(coset_rep(reps[i].then(s)));
        out.generators.emplace_back(std::move(images));
    }
    return out;
}

std::vector<std::vector<int>> sorted_images(const std::vector<Perm>& elements) {
    std::vector<std::vector<int>> out;
    out.reserve(elements.size());
    for (const Perm& e : elements) out.push_back(e.images());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PermGroup reference_degree6(Degree6Type which) {
    const Perm s4_a{std::vector<int>{1, 0, 2, 3}};     // (0 1)
    const Perm s4_b{std::vector<int>{1, 2, 3, 0}};     // (0 1 2 3)
    const Perm a4_a{std::vector<int>{1, 2, 0, 3}};     // (0 1 2)
    const Perm a4_b{std::vector<int>{1, 0, 3, 2}};     // (0 1)(2 3)
    const Perm pair23{std::vector<int>{0, 1, 3, 2}};   // (2 3)
    switch (which) {
        case Degree6Type::A4_6:
            return coset_action({a4_a, a4_b}, {a4_b});
        case Degree6Type::S4_6d:
            return coset_action({s4_a, s4_b}, {s4_a, pair23});
        case Degree6Type::S4_6c:
            return coset_action({s4_a, s4_b}, {s4_b});
        case Degree6Type::Other:
            break;
    }
    throw std::invalid_argument("reference_degree6: no reference for 'other'");
}

Degree6Type identify_degree6(const PermGroup& g) {
    if (g.degree != 6) throw std::invalid_argument("identify_degree6: degree must be 6");
    if (!is_transitive(g)) throw std::invalid_argument("identify_degree6: group is intransitive");

    auto mine = sorted_images(enumerate_elements(g, 720));
    for (Degree6Type which : {Degree6Type::A4_6, Degree6Type::S4_6d, Degree6Type::S4_6c}) {
        auto ref = sorted_images(enumerate_elements(reference_degree6(which), 720));
        if (ref.size() != mine.size()) continue;
        std::vector<int> relabel{0, 1, 2, 3, 4, 5};
        do {
            std::vector<int> inverse(6);
            for (int i = 0; i < 6; ++i) inverse[relabel[i]] = i;
            std::vector<std::vector<int>> conj;
            conj.reserve(mine.size());
            for (const auto& e : mine) {
                std::vector<int> c(6);
                for (int i = 0; i < 6; ++i) c[i] = relabel[e[inverse[i]]];
                conj.push_back(std::move(c));
            }
            std::sort(conj.begin(), conj.end());
            if (conj == ref) return which;
        } while (std::next_permutation(relabel.begin(), relabel.end()));
    }
    return Degree6Type::Other;
}

bool is_automorphism(const Graph& g, const Perm& p) {
    if (p.degree() != g.n) return false;
    std::vector<int> image;
    for (int u = 0; u < g.n; ++u) {
        image.clear();
        for (int v : g.adj[u]) image.push_back(p(v));
        std::sort(image.begin(), image.end());
        if (image != g.adj[p(u)]) return false;
    }
    return true;
}

}  // namespace atcover
