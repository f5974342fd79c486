#pragma once
// 1-eigenspaces of graphs over GF(2) (kernel of A + I), the fixed 72-vertex
// support fixture on covers, odd/even support verification, and the greedy
// translated-eigenvector basis.

#include <string>
#include <vector>

#include "atcover/cover.hpp"
#include "atcover/gf2.hpp"
#include "atcover/perm.hpp"

namespace atcover {

// Row-reduced basis of { x : (A + I) x = 0 }.
Gf2Basis one_eigenspace(const Graph& g);

struct EigenReport {
    int n = 0;  // cover modulus
    int vertices = 0;
    int dim = 0;
    Gf2Basis basis{0};
    long long formula_expected = 0;  // |V|/8 + 2 for odd n, |V|/8 + 8 for even n
    bool matches_formula = false;
    std::string to_json() const;  // without the basis
};
EigenReport eigen_report(const Cover& cov);

std::string default_support_path();

// The fixed 72-vertex support, transcribed as "word c1 c2 c3 c4" lines and
// read modulo n. Requires n >= 3; validates the line count, coordinate
// range and absence of duplicates.
std::vector<int> support72_vertices(const Cover& cov,
                                    const std::string& path = default_support_path());

struct SupportCheck {
    bool ok = false;
    std::vector<int> violations;  // vertices breaking the odd/even criterion
};
// The indicator vector of `support` is a 1-eigenvector iff every member has
// an odd number of member-neighbors and every non-member an even number.
SupportCheck verify_eigen_support(const Graph& g, const std::vector<int>& support);

Gf2Vector indicator(std::size_t len, const std::vector<int>& support);

// Image of x under the vertex permutation p: (x^p)(p(v)) = x(v).
Gf2Vector permute_vector(const Gf2Vector& x, const Perm& p);

struct GreedyBasis {
    Gf2Basis basis{0};
    std::vector<Gf2Vector> vectors;  // in discovery order, starting with x1
    std::vector<Perm> witnesses;     // vectors[i] = permute_vector(x1, witnesses[i])
};

// Repeatedly translates x1 by automorphisms until the supports cover every
// vertex, extending an independent set at each step. aut_gens must act
// vertex-transitively; each step picks the least-index uncovered vertex and
// the BFS transversal element carrying the least support vertex of x1 to it.
GreedyBasis greedy_orbit_basis(const Graph& g, const Gf2Vector& x1, const PermGroup& aut_gens);

}  // namespace atcover
