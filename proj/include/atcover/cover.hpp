#pragma once
// Voltage assignments valued in Z_n^4 on a base graph, derived covering
// graphs, automorphism lifting along a normalised assignment, and the small
// quotient chain (base graph -> 3-cube -> K4).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atcover/graph.hpp"
#include "atcover/perm.hpp"

namespace atcover {

// Element of Z_n^4 with coordinates normalised to 0..n-1.
struct ZnVec {
    int n = 1;
    std::array<int, 4> c{0, 0, 0, 0};
    bool operator==(const ZnVec&) const = default;
};

ZnVec zn_zero(int n);
ZnVec zn_unit(int n, int axis);
ZnVec zn_make(int n, int c1, int c2, int c3, int c4);
ZnVec zn_add(const ZnVec& a, const ZnVec& b);
ZnVec zn_neg(const ZnVec& a);
bool zn_is_zero(const ZnVec& a);

// 4x4 matrix over Z_n acting on ZnVec columns.
struct Mat4 {
    int n = 1;
    std::array<std::array<int, 4>, 4> m{};  // m[row][col]
    static Mat4 identity(int n);
    ZnVec apply(const ZnVec& x) const;
    Mat4 compose(const Mat4& other) const;  // this * other
    int det_mod_n() const;
    bool invertible() const;  // det is a unit mod n
    bool operator==(const Mat4&) const = default;
};

// Arc-to-Z_n^4 voltage map on a base graph; unset arcs carry zero and the
// reverse arc always carries the negated voltage.
class VoltageAssignment {
public:
    VoltageAssignment(Graph base, int n);

    const Graph& base() const { return base_; }
    int modulus() const { return n_; }

    void set_arc(int u, int v, const ZnVec& volt);  // also fixes the reverse arc
    ZnVec voltage(int u, int v) const;              // (u,v) must be an arc
    const std::map<std::pair<int, int>, ZnVec>& nonzero_arcs() const { return arcs_; }
    bool inverse_consistent() const;
    std::string to_json() const;  // nonzero arcs only, u < v direction

private:
    Graph base_;
    int n_;
    std::map<std::pair<int, int>, ZnVec> arcs_;
};

// The fixed assignment on the Moebius-Kantor base: the eight rim arcs carry
// the unit vectors and their negatives, every other arc is trivial.
VoltageAssignment mk_voltage(const Graph& mk, int n);

// Derived covering graph: vertex (b, f) at index b * n^4 + rank(f) with
// fibers ordered lexicographically.
struct Cover {
    Graph graph;
    Graph base;
    int n = 1;
    int fiber_size = 1;  // n^4

    int vertex(int base_v, const ZnVec& f) const;
    int base_of(int cover_v) const;
    ZnVec fiber_of(int cover_v) const;
    std::string vertex_label(int cover_v) const;
};
Cover derived_cover(const VoltageAssignment& za);

// BFS spanning tree over zero-voltage arcs, rooted at the vertex labelled
// "id" when present (vertex 0 otherwise). Throws if the zero-voltage
// subgraph does not span.
struct ZeroTree {
    int root = 0;
    std::vector<int> parent;     // -1 at root
    std::vector<int> bfs_order;  // root first
};
ZeroTree zero_voltage_tree(const VoltageAssignment& za);

// The voltage-group automorphism induced by the base automorphism g, read
// off the fundamental cycles of the four arcs carrying unit voltages and
// checked against every cotree cycle; nullopt when g does not lift.
std::optional<Mat4> induced_voltage_aut(const VoltageAssignment& za, const Perm& g);

struct LiftedAut {
    Perm cover_perm;
    Perm base_perm;
    Mat4 voltage_aut;
    std::vector<ZnVec> shift;  // per base vertex
};

// Lift of g with shift(root) = t: (u, x) -> (g(u), phi x + shift(u)).
// Throws if the shift equation fails on any base arc.
LiftedAut lift_automorphism(const Cover& cov, const VoltageAssignment& za, const Perm& g,
                            const Mat4& phi, const ZnVec& t);
// The unique lift of g fixing the given cover vertex; g must fix its base vertex.
LiftedAut lift_fixing(const Cover& cov, const VoltageAssignment& za, const Perm& g,
                      const Mat4& phi, int cover_vertex);
// Lift of the identity translating every fiber by t.
LiftedAut deck_translation(const Cover& cov, const ZnVec& t);

struct Quotient {
    Graph graph;
    std::vector<int> projection;  // input vertex -> quotient vertex
};

// Quotient of the Cayley base by its central involution z: vertices are the
// pairs {g, gz}; the result is the 3-cube.
Quotient quotient_mod_z(const Graph& mk);
// Antipodal quotient of the cube: fold each vertex with its complement; the
// result is K4.
Quotient quotient_antipodal(const Graph& cube);

}  // namespace atcover
