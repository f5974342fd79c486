#include "atcover/mk.hpp"

#include <algorithm>
#include <stdexcept>

namespace atcover {

namespace {
int bit(RElement x, int k) { return (x.bits >> k) & 1; }
}  // namespace

RElement r_from_exponents(int ea, int eb, int ec, int ez) {
    RElement r;
    r.bits = static_cast<std::uint8_t>((ea & 1) | ((eb & 1) << 1) | ((ec & 1) << 2) |
                                       ((ez & 1) << 3));
    return r;
}

RElement r_multiply(RElement x, RElement y) {
    int ea = bit(x, 0), eb = bit(x, 1), ec = bit(x, 2), ez = bit(x, 3);
    int fa = bit(y, 0), fb = bit(y, 1), fc = bit(y, 2), fz = bit(y, 3);
    // Moving y's generators left past x's tail: each swap of two distinct
    // generators contributes a central z.
    int zcorr = (fa & eb) ^ (fa & ec) ^ (fb & ec);
    return r_from_exponents(ea ^ fa, eb ^ fb, ec ^ fc, ez ^ fz ^ zcorr);
}

RElement r_inverse(RElement x) {
    int ea = bit(x, 0), eb = bit(x, 1), ec = bit(x, 2), ez = bit(x, 3);
    return r_from_exponents(ea, eb, ec, ez ^ ((ea & eb) ^ (ea & ec) ^ (eb & ec)));
}

std::string r_word(RElement x) {
    std::string out;
    const char* names = "abcz";
    for (int k = 0; k < 4; ++k)
        if (bit(x, k)) out.push_back(names[k]);
    return out.empty() ? "id" : out;
}

RElement r_parse(const std::string& word) {
    if (word == "id") return r_identity;
    RElement r;
    for (char ch : word) {
        int k;
        switch (ch) {
            case 'a': k = 0; break;
            case 'b': k = 1; break;
            case 'c': k = 2; break;
            case 'z': k = 3; break;
            default: throw std::invalid_argument("r_parse: bad character in word");
        }
        if (bit(r, k)) throw std::invalid_argument("r_parse: repeated generator");
        r.bits |= static_cast<std::uint8_t>(1 << k);
    }
    return r;
}

Graph build_mk() {
    std::vector<std::string> labels;
    for (int bits = 0; bits < 16; ++bits) labels.push_back(r_word(RElement{static_cast<std::uint8_t>(bits)}));
    std::sort(labels.begin(), labels.end());

    auto index_of = [&labels](RElement x) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), r_word(x)) -
                                labels.begin());
    };

    const RElement gens[3] = {r_parse("a"), r_parse("b"), r_parse("c")};
    std::vector<std::pair<int, int>> edges;
    for (const std::string& w : labels) {
        RElement g = r_parse(w);
        int gi = index_of(g);
        for (RElement s : gens) {
            int hi = index_of(r_multiply(s, g));
            if (gi < hi) edges.emplace_back(gi, hi);
        }
    }
    return make_graph(std::move(labels), edges);
}

namespace {

Perm perm_from_element_map(const Graph& mk, RElement (*map)(RElement, RElement), RElement arg) {
    std::vector<int> images(mk.n);
    for (int i = 0; i < mk.n; ++i) {
        RElement g = r_parse(mk.labels[i]);
        images[i] = find_vertex(mk, r_word(map(g, arg)));
    }
    return Perm(std::move(images));
}

RElement right_translate(RElement g, RElement h) { return r_multiply(g, h); }

// Generator-permuting automorphism: rewrite each generator letter of the
// normal form through `perm` (z is fixed; it is the common commutator).
RElement generator_permute(RElement g, const int* perm) {
    RElement out;
    const RElement letters[4] = {r_parse("a"), r_parse("b"), r_parse("c"), r_parse("z")};
    for (int k = 0; k < 4; ++k)
        if ((g.bits >> k) & 1) out = r_multiply(out, letters[k < 3 ? perm[k] : 3]);
    return out;
}

}  // namespace

MkAutGens mk_aut_gens(const Graph& mk) {
    MkAutGens out{
        perm_from_element_map(mk, right_translate, r_parse("a")),
        perm_from_element_map(mk, right_translate, r_parse("b")),
        perm_from_element_map(mk, right_translate, r_parse("c")),
        Perm(mk.n),
        Perm(mk.n),
    };
    static const int swap_ab[3] = {1, 0, 2};
    static const int cycle_abc[3] = {1, 2, 0};
    std::vector<int> img_ab(mk.n), img_abc(mk.n);
    for (int i = 0; i < mk.n; ++i) {
        RElement g = r_parse(mk.labels[i]);
        img_ab[i] = find_vertex(mk, r_word(generator_permute(g, swap_ab)));
        img_abc[i] = find_vertex(mk, r_word(generator_permute(g, cycle_abc)));
    }
    out.alpha_ab = Perm(std::move(img_ab));
    out.alpha_abc = Perm(std::move(img_abc));
    return out;
}

PermGroup mk_aut_b(const Graph& mk) {
    MkAutGens g = mk_aut_gens(mk);
    return PermGroup{mk.n, {g.rho_a, g.rho_b, g.rho_c, g.alpha_abc, g.alpha_ab}};
}

PermGroup mk_aut_a(const Graph& mk) {
    MkAutGens g = mk_aut_gens(mk);
    return PermGroup{mk.n, {g.rho_a, g.rho_b, g.rho_c, g.alpha_abc}};
}

}  // namespace atcover
