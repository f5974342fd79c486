#pragma once
// Permutations and permutation groups given by generators: orbits and
// transversals, a deterministic stabilizer-chain order oracle, minimal block
// systems, and exact identification of the three target transitive groups of
// degree 6 by brute-force conjugacy.

#include <cstdint>
#include <string>
#include <vector>

#include "atcover/graph.hpp"

namespace atcover {

class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);               // identity
    explicit Perm(std::vector<int> images);  // validated bijection

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int p) const { return img_[p]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    // Composition in action order: (p.then(q))(x) = q(p(x)).
    Perm then(const Perm& next) const;
    Perm inverse() const;
    long long order() const;
    std::string cycle_string() const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
};

std::vector<int> orbit(const PermGroup& g, int point);

// BFS transversal of the orbit of root: for each reached point p,
// perm_to[p] maps root to p.
struct Transversal {
    int root = 0;
    std::vector<int> points;       // orbit in BFS order
    std::vector<char> reached;     // indexed by point
    std::vector<Perm> perm_to;     // valid where reached
};
Transversal orbit_transversal(const PermGroup& g, int root);

bool is_transitive(const PermGroup& g);

// Degree ceiling for the stabilizer-chain oracle; ATCOVER_MAX_DEGREE
// overrides the default of 4096.
int degree_ceiling();

// Exact order of <generators>, deterministic base points in increasing
// order. Throws if the degree exceeds the ceiling.
std::uint64_t group_order(const PermGroup& g);

// Stabilizer chain with first base point forced to `point`: full group
// order, stabilizer order and strong generators of the point stabilizer.
struct PointStabilizer {
    std::uint64_t group_order = 1;
    std::uint64_t stabilizer_order = 1;
    std::vector<Perm> stabilizer_generators;
};
PointStabilizer point_stabilizer(const PermGroup& g, int point);

// BFS closure of the generators; throws if it exceeds `limit` elements.
std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t limit);

enum class ArcAction { regular, transitive_not_regular, intransitive };
// Classifies the action of g on the s-arcs of `graph` (s = 1 or 2).
// Generators must be automorphisms of the graph.
ArcAction s_arc_action(const PermGroup& g, const Graph& graph, int s);

struct BlockSystem {
    std::vector<std::vector<int>> blocks;  // sorted blocks of equal size
    std::uint64_t kernel_order = 0;  // order of the subgroup fixing every block setwise
};
// All minimal nontrivial block systems of a transitive group.
std::vector<BlockSystem> minimal_blocks(const PermGroup& g);

enum class Degree6Type { A4_6, S4_6d, S4_6c, Other };
std::string degree6_name(Degree6Type t);

// The three degree-6 coset actions: Alt(4) on the cosets of <(0 1)(2 3)>,
// Sym(4) on the cosets of <(0 1),(2 3)>, and Sym(4) on the cosets of
// <(0 1 2 3)>. Generators are induced programmatically from the coset action.
PermGroup reference_degree6(Degree6Type which);

// Which reference group (if any) is conjugate to g inside Sym(6), decided by
// exhaustive search over all 720 relabelings. Requires g transitive.
Degree6Type identify_degree6(const PermGroup& g);

bool is_automorphism(const Graph& g, const Perm& p);

}  // namespace atcover
