#pragma once
// The 6-valent doubled covers, the three arc-transitive group constructions
// acting on them, the sigma/tau pair obtained from the quotient chain, exact
// local-action identification at a vertex, and membership in the first
// construction.

#include <cstdint>
#include <string>
#include <vector>

#include "atcover/cover.hpp"
#include "atcover/eigenspace.hpp"
#include "atcover/gf2.hpp"
#include "atcover/mk.hpp"
#include "atcover/perm.hpp"

namespace atcover {

enum class Construction { G1, G2, G3 };
std::string construction_name(Construction c);

// Everything derived from one modulus: the cover, its doubled graph
// ((v, eps) at index 2v + eps), the 1-eigenspace, the lifted generators and
// the enumerated base automorphism groups.
struct GammaScaffold {
    int n = 1;
    Graph mk;
    VoltageAssignment zeta;
    Cover cover;
    Graph gamma;
    Gf2Basis e1{0};
    std::vector<LiftedAut> lift_gens;  // lifts of rho_a, rho_b, rho_c, alpha_abc, alpha_ab
    std::vector<LiftedAut> deck_gens;  // translations by the four unit vectors
    std::vector<Perm> a_elements;      // the 48 base automorphisms (sorted)
    std::vector<Perm> b_elements;      // the 96 base automorphisms (sorted)

    // Groups acting on the cover vertices. The first includes all five lift
    // generators, the second only the four whose projections generate the
    // arc-regular subgroup.
    PermGroup lifted_b() const;
    PermGroup lifted_a() const;
};
GammaScaffold build_gamma(int n);

// Second-coordinate flip on the doubled graph: (v, eps) -> (v, eps + x(v)).
Perm flip_perm(int cover_vertices, const Gf2Vector& x);
// Same, but requires x in the 1-eigenspace.
Perm e1_as_perm(const GammaScaffold& gs, const Gf2Vector& x);
// Action of a cover permutation on the doubled graph, fixing eps.
Perm as_gamma_perm(const Perm& cover_perm);
Perm lift_as_gamma_perm(const GammaScaffold& gs, const LiftedAut& la);

struct SigmaTau {
    Gf2Vector sigma;  // pullback through the quotient chain; constant on fibers
    LiftedAut tau;    // lift outside the arc-regular subgroup fixing v, moving w
    int v = -1, w = -1;  // the special arc in the cover
};
SigmaTau build_sigma_tau(const GammaScaffold& gs);

struct LocalActionReport {
    Construction construction = Construction::G1;
    int n = 1;
    int lambda_vertex = -1;
    Degree6Type identified = Degree6Type::Other;
    std::uint64_t local_order = 0;
    std::uint64_t kernel_order = 0;  // restriction of the flip part to the six neighbors
    int stab_log2_times3 = 0;        // stabiliser order = 3 * 2^this
    bool bound_applies = false;      // the exponential lower bound is asserted (n >= 3)
    bool bound_holds = false;        // 144 * stab_log2_times3 >= |V(gamma)| - 144
    std::vector<std::string> witnesses;  // cycle forms of the degree-6 generators
    std::string to_json() const;
};

// Local action of the vertex stabiliser of (lambda_vertex, 0) on its six
// neighbors, built structurally from the semidirect decomposition:
// the codimension-1 flip subspace, the pinned order-3 lift, plus for the
// second construction a pinned involution and for the third the tau*sigma
// element (transported from the standard vertex when needed).
// lambda_vertex = -1 selects the standard vertex (base "a", zero fiber).
LocalActionReport local_action(const GammaScaffold& gs, Construction c, int lambda_vertex = -1);

// Decomposes a pair-structure-preserving automorphism of the doubled graph
// into (base cover action, flip vector); true iff the base action is a lift
// of an arc-regular-subgroup element and the flip vector lies in the
// 1-eigenspace. Throws if the pair structure is broken.
bool g1_membership(const GammaScaffold& gs, const Perm& gamma_perm);

}  // namespace atcover
