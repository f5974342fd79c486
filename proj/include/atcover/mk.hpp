#pragma once
// The extraspecial-style group of order 16 generated by three commuting-up-
// to-center involutions, the Moebius-Kantor graph as its Cayley graph, and
// the two distinguished automorphism groups acting on it.

#include <cstdint>
#include <string>

#include "atcover/graph.hpp"
#include "atcover/perm.hpp"

namespace atcover {

// Normal form a^ea b^eb c^ec z^ez with exponents mod 2, packed in four bits
// (bit0 = ea, bit1 = eb, bit2 = ec, bit3 = ez). z is central and each of
// a, b, c squares to the identity; swapping two distinct generators costs z.
struct RElement {
    std::uint8_t bits = 0;
    bool operator==(const RElement&) const = default;
};

inline constexpr RElement r_identity{};
RElement r_from_exponents(int ea, int eb, int ec, int ez);
RElement r_multiply(RElement x, RElement y);
RElement r_inverse(RElement x);
std::string r_word(RElement x);   // "id", "a", "abz", ...
RElement r_parse(const std::string& word);

// The 16-vertex cubic Cayley graph: edges {g, s*g} for s in {a, b, c},
// vertices sorted by label.
Graph build_mk();

struct MkAutGens {
    Perm rho_a, rho_b, rho_c;  // right translations g -> g*s
    Perm alpha_ab;             // automorphism induced by swapping a and b
    Perm alpha_abc;            // automorphism induced by the 3-cycle a->b->c->a
};
MkAutGens mk_aut_gens(const Graph& mk);

// <rho_a, rho_b, rho_c, alpha_abc, alpha_ab>: order 96, regular on 2-arcs.
PermGroup mk_aut_b(const Graph& mk);
// <rho_a, rho_b, rho_c, alpha_abc>: order 48, regular on arcs.
PermGroup mk_aut_a(const Graph& mk);

}  // namespace atcover
