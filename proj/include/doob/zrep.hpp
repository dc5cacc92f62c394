#pragma once

// The pair presentation of the Doob scheme on Z4^{2m} x Z2^{2n'} x Z4^{n''}:
// native weight/coweight tables on Z4^2 pairs, the plus and minus inner
// products, their character table and character sums, duals, and the
// coordinate isomorphism to the mixed representation.  The scheme is
// implemented independently of the mixed one: the group structures correspond
// under the isomorphism but the pairings do not.

#include <array>
#include <string>
#include <vector>

#include "charsum.hpp"
#include "codes.hpp"

namespace doob {

using Z4Pair = std::array<Z4, 2>;
using Z2Pair = std::array<Z2, 2>;

// Weight-1 and coweight-1 pair sets on Z4^2; every other nonzero pair
// weighs 2.  The two sets share the four order-4 "axis" pairs but differ on
// the diagonals: 11/33 have weight 1, 13/31 have coweight 1.
constexpr int pair_weight(Z4Pair p) {
    if (p[0] == Z4(0) && p[1] == Z4(0)) return 0;
    const bool a_odd = p[0].is_unit(), b_odd = p[1].is_unit();
    if (a_odd != b_odd) return (a_odd ? p[1] : p[0]) == Z4(0) ? 1 : 2;  // 01,03,10,30
    if (a_odd && b_odd) return p[0] == p[1] ? 1 : 2;                    // 11,33
    return 2;
}

constexpr int pair_coweight(Z4Pair p) {
    if (p[0] == Z4(0) && p[1] == Z4(0)) return 0;
    const bool a_odd = p[0].is_unit(), b_odd = p[1].is_unit();
    if (a_odd != b_odd) return (a_odd ? p[1] : p[0]) == Z4(0) ? 1 : 2;  // 01,03,10,30
    if (a_odd && b_odd) return p[0] == -p[1] ? 1 : 2;                   // 13,31
    return 2;
}

constexpr int pair_index(Z4Pair p) { return 4 * p[0].v + p[1].v; }
constexpr Z4Pair pair_from_index(int i) { return {Z4(i >> 2), Z4(i & 3)}; }

// ---------------------------------------------------------------------------
// ZVector
// ---------------------------------------------------------------------------

struct ZVector {
    using ShapeType = SpaceShape;

    std::vector<Z4Pair> quads;  // Z4^2 pairs, length m
    std::vector<Z2Pair> bits;   // Z2^2 pairs, length n'
    std::vector<Z4> tail;       // Z4 symbols, length n''

    SpaceShape shape() const {
        return {static_cast<int>(quads.size()), static_cast<int>(bits.size()),
                static_cast<int>(tail.size())};
    }

    static ZVector zero(const SpaceShape& s) {
        ZVector v;
        v.quads.resize(s.m);
        v.bits.resize(s.nprime);
        v.tail.resize(s.nsec);
        return v;
    }

    ZVector operator-() const {
        ZVector r = *this;
        for (auto& q : r.quads) q = {-q[0], -q[1]};
        for (auto& t : r.tail) t = -t;
        return r;
    }

    friend ZVector operator+(const ZVector& x, const ZVector& y) {
        if (x.shape() != y.shape()) throw std::invalid_argument("vector shape mismatch");
        ZVector r = x;
        for (size_t j = 0; j < r.quads.size(); ++j)
            r.quads[j] = {r.quads[j][0] + y.quads[j][0], r.quads[j][1] + y.quads[j][1]};
        for (size_t j = 0; j < r.bits.size(); ++j)
            r.bits[j] = {r.bits[j][0] + y.bits[j][0], r.bits[j][1] + y.bits[j][1]};
        for (size_t j = 0; j < r.tail.size(); ++j) r.tail[j] = r.tail[j] + y.tail[j];
        return r;
    }
    friend ZVector operator-(const ZVector& x, const ZVector& y) { return x + (-y); }

    bool operator==(const ZVector&) const = default;

    friend bool operator<(const ZVector& x, const ZVector& y) {
        for (size_t j = 0; j < x.quads.size() && j < y.quads.size(); ++j)
            if (x.quads[j] != y.quads[j]) return pair_index(x.quads[j]) < pair_index(y.quads[j]);
        for (size_t j = 0; j < x.bits.size() && j < y.bits.size(); ++j)
            if (x.bits[j] != y.bits[j])
                return 2 * x.bits[j][0].v + x.bits[j][1].v < 2 * y.bits[j][0].v + y.bits[j][1].v;
        for (size_t j = 0; j < x.tail.size() && j < y.tail.size(); ++j)
            if (x.tail[j] != y.tail[j]) return x.tail[j].v < y.tail[j].v;
        return false;
    }

    static ZVector at(const SpaceShape& s, uint64_t idx) {
        ZVector v = zero(s);
        for (int j = s.nsec - 1; j >= 0; --j, idx >>= 2) v.tail[j] = Z4(static_cast<int>(idx & 3));
        for (int j = s.nprime - 1; j >= 0; --j, idx >>= 2)
            v.bits[j] = {Z2(static_cast<int>((idx >> 1) & 1)), Z2(static_cast<int>(idx & 1))};
        for (int j = s.m - 1; j >= 0; --j, idx >>= 4)
            v.quads[j] = pair_from_index(static_cast<int>(idx & 15));
        return v;
    }

    uint64_t index() const {
        uint64_t idx = 0;
        for (const auto& q : quads) idx = (idx << 4) | static_cast<uint64_t>(pair_index(q));
        for (const auto& b : bits) idx = (idx << 2) | (uint64_t{b[0].v} << 1) | b[1].v;
        for (Z4 t : tail) idx = (idx << 2) | t.v;
        return idx;
    }
};

inline int weight(const ZVector& x) {
    int w = 0;
    for (const auto& q : x.quads) w += pair_weight(q);
    for (const auto& b : x.bits) w += (b[0] == Z2(0) && b[1] == Z2(0)) ? 0 : 1;
    for (Z4 t : x.tail) w += weight(t);
    return w;
}

inline int coweight(const ZVector& x) {
    int w = 0;
    for (const auto& q : x.quads) w += pair_coweight(q);
    for (const auto& b : x.bits) w += (b[0] == Z2(0) && b[1] == Z2(0)) ? 0 : 1;
    for (Z4 t : x.tail) w += weight(t);
    return w;
}

// ---------------------------------------------------------------------------
// Inner products and pairings
// ---------------------------------------------------------------------------

/// sum (u_j x_j + v_j y_j) + 2 sum (u'_j x'_j + v'_j y'_j) + sum u''_j x''_j
inline Z4 inner_plus(const ZVector& u, const ZVector& x) {
    if (u.shape() != x.shape()) throw std::invalid_argument("vector shape mismatch");
    Z4 r{};
    for (size_t j = 0; j < u.quads.size(); ++j)
        r = r + u.quads[j][0] * x.quads[j][0] + u.quads[j][1] * x.quads[j][1];
    for (size_t j = 0; j < u.bits.size(); ++j)
        r = r + embed_double(u.bits[j][0] * x.bits[j][0] + u.bits[j][1] * x.bits[j][1]);
    for (size_t j = 0; j < u.tail.size(); ++j) r = r + u.tail[j] * x.tail[j];
    return r;
}

/// As inner_plus with the first segment twisted to u_j x_j - v_j y_j.
inline Z4 inner_minus(const ZVector& u, const ZVector& x) {
    if (u.shape() != x.shape()) throw std::invalid_argument("vector shape mismatch");
    Z4 r{};
    for (size_t j = 0; j < u.quads.size(); ++j)
        r = r + u.quads[j][0] * x.quads[j][0] - u.quads[j][1] * x.quads[j][1];
    for (size_t j = 0; j < u.bits.size(); ++j)
        r = r + embed_double(u.bits[j][0] * x.bits[j][0] + u.bits[j][1] * x.bits[j][1]);
    for (size_t j = 0; j < u.tail.size(); ++j) r = r + u.tail[j] * x.tail[j];
    return r;
}

struct ZPairing {
    enum class Kind : uint8_t { Plus, Minus };

    Kind kind{Kind::Plus};

    static ZPairing plus() { return {Kind::Plus}; }
    static ZPairing minus() { return {Kind::Minus}; }

    Z4 operator()(const ZVector& u, const ZVector& x) const {
        return kind == Kind::Plus ? inner_plus(u, x) : inner_minus(u, x);
    }

    Z4 kernel(Z4Pair a, Z4Pair v) const {
        return kind == Kind::Plus ? a[0] * v[0] + a[1] * v[1] : a[0] * v[0] - a[1] * v[1];
    }
    Z4 kernel(Z2Pair a, Z2Pair v) const { return embed_double(a[0] * v[0] + a[1] * v[1]); }
    Z4 kernel(Z4 a, Z4 v) const { return a * v; }

    std::string name() const { return kind == Kind::Plus ? "plus" : "minus"; }
};

using ZCode = GroupCode<ZVector>;

inline ZCode z_dual(const ZCode& code, const ZPairing& pairing, uint64_t budget = default_budget) {
    return dual_under(code, pairing, budget);
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// 16x16 character table on Z4^2, entry (u, v) = i^{u1 v1 + u2 v2},
/// indexed by pair_index.
inline std::array<std::array<GaussInt, 16>, 16> character_table_z4sq() {
    std::array<std::array<GaussInt, 16>, 16> t;
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v) {
            const Z4Pair pu = pair_from_index(u), pv = pair_from_index(v);
            t[u][v] = char_i(pu[0] * pv[0] + pu[1] * pv[1]);
        }
    return t;
}

/// sum over v in Z4^2 of i^<a,v> A^{2-wt(v)} B^{wt(v)} collapses to the
/// reference binomials with coweight exponents under the plus pairing and
/// weight exponents under the minus pairing; verified symbolically.
inline std::pair<int, int> z_char_sum_exponents(Z4Pair a, ZPairing pairing) {
    std::vector<Z4Pair> alphabet(16);
    for (int i = 0; i < 16; ++i) alphabet[i] = pair_from_index(i);
    const int ref =
        pairing.kind == ZPairing::Kind::Plus ? pair_coweight(a) : pair_weight(a);
    return detail::verified_char_sum(
        alphabet.begin(), alphabet.end(), 2,
        [&](Z4Pair v) { return char_i(pairing.kernel(a, v)); },
        [](Z4Pair v) { return pair_weight(v); }, ref);
}

// ---------------------------------------------------------------------------
// Coordinate isomorphism with the mixed representation
// ---------------------------------------------------------------------------

// a + b*omega <-> (a : b), on both the E4 and F4 segments.  This is an
// additive-group isomorphism preserving the weight (the unit coset Omega
// reads off exactly as the weight-1 pair set) but not the coweight.
inline ZVector to_zrep(const MixedVector& v) {
    ZVector z;
    z.quads.reserve(v.estar.size());
    z.bits.reserve(v.fprime.size());
    for (E4Elem e : v.estar) z.quads.push_back({e.a, e.b});
    for (F4Elem f : v.fprime) z.bits.push_back({f.a, f.b});
    z.tail = v.zsec;
    return z;
}

inline MixedVector from_zrep(const ZVector& z) {
    MixedVector v;
    v.estar.reserve(z.quads.size());
    v.fprime.reserve(z.bits.size());
    for (const auto& q : z.quads) v.estar.push_back({q[0], q[1]});
    for (const auto& b : z.bits) v.fprime.push_back({b[0], b[1]});
    v.zsec = z.tail;
    return v;
}

}  // namespace doob
