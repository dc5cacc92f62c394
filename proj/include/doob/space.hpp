#pragma once

// The ambient space V(m, n', n'') = E4^m x F4^{n'} x Z4^{n''}: mixed vectors,
// the weight/coweight metrics, lexicographic enumeration, and every inner
// product used for duality (E4-valued standard and Hermitian products, the
// Z4-valued trace, psi-modified and L-based forms).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rings.hpp"

namespace doob {

inline constexpr uint64_t default_budget = uint64_t{1} << 20;

struct SpaceShape {
    int m{0}, nprime{0}, nsec{0};

    constexpr bool operator==(const SpaceShape&) const = default;

    constexpr int total_degree() const { return 2 * m + nprime + nsec; }  // N
    constexpr int coord_count() const { return m + nprime + nsec; }
    constexpr long long log2_size() const {
        return 4LL * m + 2LL * nprime + 2LL * nsec;
    }
    constexpr bool valid() const {
        // bounded so that degree and exponent arithmetic cannot overflow
        constexpr int limit = 1 << 20;
        return m >= 0 && nprime >= 0 && nsec >= 0 && m <= limit && nprime <= limit &&
               nsec <= limit;
    }
};

/// Ambient cardinality 16^m 4^{n'} 4^{n''}, guarded by the enumeration budget.
inline uint64_t ambient_size_checked(const SpaceShape& s, uint64_t budget = default_budget) {
    if (!s.valid()) throw std::invalid_argument("coordinate counts out of range in shape");
    if (s.log2_size() >= 63 || (uint64_t{1} << s.log2_size()) > budget)
        throw budget_error("ambient space of 2^" + std::to_string(s.log2_size()) +
                           " vectors exceeds the enumeration budget of " + std::to_string(budget));
    return uint64_t{1} << s.log2_size();
}

// ---------------------------------------------------------------------------
// MixedVector
// ---------------------------------------------------------------------------

struct MixedVector {
    using ShapeType = SpaceShape;

    std::vector<E4Elem> estar;   // E4 segment, length m
    std::vector<F4Elem> fprime;  // F4 segment, length n'
    std::vector<Z4> zsec;        // Z4 segment, length n''

    SpaceShape shape() const {
        return {static_cast<int>(estar.size()), static_cast<int>(fprime.size()),
                static_cast<int>(zsec.size())};
    }

    static MixedVector zero(const SpaceShape& s) {
        MixedVector v;
        v.estar.resize(s.m);
        v.fprime.resize(s.nprime);
        v.zsec.resize(s.nsec);
        return v;
    }

    bool is_zero() const {
        return std::all_of(estar.begin(), estar.end(), [](E4Elem x) { return x.is_zero(); }) &&
               std::all_of(fprime.begin(), fprime.end(), [](F4Elem x) { return x.is_zero(); }) &&
               std::all_of(zsec.begin(), zsec.end(), [](Z4 x) { return x == Z4(0); });
    }

    MixedVector operator-() const {
        MixedVector r = *this;
        for (auto& x : r.estar) x = -x;
        for (auto& x : r.zsec) x = -x;
        return r;  // F4 part is its own negative
    }

    friend MixedVector operator+(const MixedVector& x, const MixedVector& y) {
        if (x.shape() != y.shape()) throw std::invalid_argument("vector shape mismatch");
        MixedVector r = x;
        for (size_t j = 0; j < r.estar.size(); ++j) r.estar[j] = r.estar[j] + y.estar[j];
        for (size_t j = 0; j < r.fprime.size(); ++j) r.fprime[j] = r.fprime[j] + y.fprime[j];
        for (size_t j = 0; j < r.zsec.size(); ++j) r.zsec[j] = r.zsec[j] + y.zsec[j];
        return r;
    }
    friend MixedVector operator-(const MixedVector& x, const MixedVector& y) { return x + (-y); }

    bool operator==(const MixedVector&) const = default;

    // Canonical order: lexicographic on the token encoding, realized through
    // the per-coordinate canonical indices.
    friend bool operator<(const MixedVector& x, const MixedVector& y) {
        for (size_t j = 0; j < x.estar.size() && j < y.estar.size(); ++j)
            if (x.estar[j] != y.estar[j]) return e4_index(x.estar[j]) < e4_index(y.estar[j]);
        for (size_t j = 0; j < x.fprime.size() && j < y.fprime.size(); ++j)
            if (x.fprime[j] != y.fprime[j]) return f4_index(x.fprime[j]) < f4_index(y.fprime[j]);
        for (size_t j = 0; j < x.zsec.size() && j < y.zsec.size(); ++j)
            if (x.zsec[j] != y.zsec[j]) return x.zsec[j].v < y.zsec[j].v;
        return false;
    }

    /// Vector at a given position of the lexicographic enumeration.
    static MixedVector at(const SpaceShape& s, uint64_t idx) {
        MixedVector v = zero(s);
        for (int j = s.nsec - 1; j >= 0; --j, idx >>= 2) v.zsec[j] = Z4(static_cast<int>(idx & 3));
        for (int j = s.nprime - 1; j >= 0; --j, idx >>= 2)
            v.fprime[j] = f4_from_index(static_cast<int>(idx & 3));
        for (int j = s.m - 1; j >= 0; --j, idx >>= 4)
            v.estar[j] = e4_from_index(static_cast<int>(idx & 15));
        return v;
    }

    uint64_t index() const {
        uint64_t idx = 0;
        for (E4Elem x : estar) idx = (idx << 4) | static_cast<uint64_t>(e4_index(x));
        for (F4Elem x : fprime) idx = (idx << 2) | static_cast<uint64_t>(f4_index(x));
        for (Z4 x : zsec) idx = (idx << 2) | x.v;
        return idx;
    }
};

/// Scalar action of E4: modulo 4 on the E4 segment, modulo 2 on the F4
/// segment.  Undefined when plain Z4 coordinates are present.
inline MixedVector operator*(E4Elem s, const MixedVector& x) {
    if (!x.zsec.empty())
        throw std::invalid_argument("E4 scalar action is undefined on Z4 coordinates");
    MixedVector r = x;
    const F4Elem s2 = reduce_mod2(s);
    for (auto& e : r.estar) e = s * e;
    for (auto& f : r.fprime) f = s2 * f;
    return r;
}

/// Coordinatewise conjugation (E4 and F4 segments; Z4 coordinates unchanged).
inline MixedVector conj(const MixedVector& x) {
    MixedVector r = x;
    for (auto& e : r.estar) e = e4_conj(e);
    for (auto& f : r.fprime) f = f4_conj(f);
    return r;
}

/// Multiply only the E4 segment by a scalar, leaving the rest untouched.
/// With s = psi this carries the weight metric onto the coweight metric.
inline MixedVector scale_e4_part(E4Elem s, const MixedVector& x) {
    MixedVector r = x;
    for (auto& e : r.estar) e = s * e;
    return r;
}

inline int weight(const MixedVector& x) {
    int w = 0;
    for (E4Elem e : x.estar) w += weight(e);
    for (F4Elem f : x.fprime) w += weight(f);
    for (Z4 z : x.zsec) w += weight(z);
    return w;
}

inline int coweight(const MixedVector& x) {
    int w = 0;
    for (E4Elem e : x.estar) w += coweight(e);
    for (F4Elem f : x.fprime) w += weight(f);
    for (Z4 z : x.zsec) w += weight(z);
    return w;
}

inline int distance(const MixedVector& x, const MixedVector& y) { return weight(y - x); }

// ---------------------------------------------------------------------------
// Inner products
// ---------------------------------------------------------------------------

namespace detail {
inline void require_same_shape(const MixedVector& x, const MixedVector& y) {
    if (x.shape() != y.shape()) throw std::invalid_argument("vector shape mismatch");
}
inline void require_no_zsec(const MixedVector& x, const char* what) {
    if (!x.zsec.empty())
        throw std::invalid_argument(std::string(what) + " is undefined on Z4 coordinates");
}
}  // namespace detail

/// Standard E4-valued product <x*, y*> + 2.<x', y'>.
inline E4Elem inner_std(const MixedVector& x, const MixedVector& y) {
    detail::require_same_shape(x, y);
    detail::require_no_zsec(x, "the standard inner product");
    E4Elem e{};
    for (size_t j = 0; j < x.estar.size(); ++j) e = e + x.estar[j] * y.estar[j];
    F4Elem f{};
    for (size_t j = 0; j < x.fprime.size(); ++j) f = f + x.fprime[j] * y.fprime[j];
    return e + embed_double(f);
}

/// Hermitian variant: the second argument is conjugated coordinatewise.
inline E4Elem inner_hermitian(const MixedVector& x, const MixedVector& y) {
    detail::require_no_zsec(y, "the Hermitian inner product");
    return inner_std(x, conj(y));
}

/// Z4-valued product Tr<x*,y*> + 2.Tr<x',y'> + <x'',y''>.
inline Z4 inner_z4_tr(const MixedVector& x, const MixedVector& y) {
    detail::require_same_shape(x, y);
    E4Elem e{};
    for (size_t j = 0; j < x.estar.size(); ++j) e = e + x.estar[j] * y.estar[j];
    F4Elem f{};
    for (size_t j = 0; j < x.fprime.size(); ++j) f = f + x.fprime[j] * y.fprime[j];
    Z4 z{};
    for (size_t j = 0; j < x.zsec.size(); ++j) z = z + x.zsec[j] * y.zsec[j];
    return e4_trace(e) + embed_double(f4_trace(f)) + z;
}

/// The psi-modified product Tr(psi<x*,y*>) + 2.Tr<x',y'> + <x'',y''>, the
/// form under which weight enumerators of dual additive codes are related.
inline Z4 inner_z4_psi(const MixedVector& x, const MixedVector& y) {
    detail::require_same_shape(x, y);
    E4Elem e{};
    for (size_t j = 0; j < x.estar.size(); ++j) e = e + x.estar[j] * y.estar[j];
    F4Elem f{};
    for (size_t j = 0; j < x.fprime.size(); ++j) f = f + x.fprime[j] * y.fprime[j];
    Z4 z{};
    for (size_t j = 0; j < x.zsec.size(); ++j) z = z + x.zsec[j] * y.zsec[j];
    return e4_trace(e4_psi * e) + embed_double(f4_trace(f)) + z;
}

// ---------------------------------------------------------------------------
// Surjective Z4-linear maps L : E4 -> Z4
// ---------------------------------------------------------------------------

// Parametrized by the images of the basis {1, omega}; surjective iff either
// image is a unit of Z4.  Exactly 12 of the 16 maps are surjective; the
// trace is the map (2, 3).
struct LMap {
    Z4 l1{2}, lw{3};

    constexpr bool surjective() const { return l1.is_unit() || lw.is_unit(); }
    constexpr Z4 operator()(E4Elem x) const { return x.a * l1 + x.b * lw; }
    constexpr bool operator==(const LMap&) const = default;

    static constexpr LMap trace_map() { return {Z4(2), Z4(3)}; }

    static std::vector<LMap> all_surjective() {
        std::vector<LMap> maps;
        for (int l1 = 0; l1 < 4; ++l1)
            for (int lw = 0; lw < 4; ++lw)
                if (LMap{Z4(l1), Z4(lw)}.surjective()) maps.push_back({Z4(l1), Z4(lw)});
        return maps;
    }
};

/// L-based product L(<x, y>) for a surjective L; defined where inner_std is.
inline Z4 inner_L(const MixedVector& x, const MixedVector& y, const LMap& l) {
    if (!l.surjective()) throw std::invalid_argument("L-map is not surjective onto Z4");
    return l(inner_std(x, y));
}

// ---------------------------------------------------------------------------
// Enumeration and graph statistics
// ---------------------------------------------------------------------------

/// All ambient vectors in lexicographic token order.
inline std::vector<MixedVector> enumerate_space(const SpaceShape& s,
                                                uint64_t budget = default_budget) {
    const uint64_t n = ambient_size_checked(s, budget);
    std::vector<MixedVector> out;
    out.reserve(n);
    for (uint64_t i = 0; i < n; ++i) out.push_back(MixedVector::at(s, i));
    return out;
}

struct GraphStats {
    uint64_t vertices{0};
    std::map<int, uint64_t> degree_histogram;            // degree -> #vertices
    std::optional<std::array<uint64_t, 4>> srg;          // {v, k, lambda, mu}

    bool regular() const { return degree_histogram.size() == 1; }
    int degree() const {
        return degree_histogram.size() == 1 ? degree_histogram.begin()->first : -1;
    }
};

/// Statistics of the distance-1 graph of weight (or coweight) on the ambient
/// space.  Strongly-regular parameters are computed by brute force for small
/// spaces and left unset when the pair scan is too large or the parameters
/// are not constant.
template <class WeightFn>
GraphStats graph_stats_under(const SpaceShape& s, WeightFn&& wf, uint64_t budget = uint64_t{1} << 16) {
    const uint64_t n = ambient_size_checked(s, budget);
    GraphStats st;
    st.vertices = n;

    // Neighbors differ by a vector of weight 1, so per-vertex degrees come
    // from one scan for the weight-1 sphere around zero.
    std::vector<MixedVector> sphere;
    for (uint64_t i = 0; i < n; ++i) {
        MixedVector v = MixedVector::at(s, i);
        if (wf(v) == 1) sphere.push_back(std::move(v));
    }
    st.degree_histogram[static_cast<int>(sphere.size())] = n;

    if (n > (uint64_t{1} << 12) || n < 2) return st;

    // Exhaustive common-neighbor counts for the srg parameters.
    // TODO: bitset rows would push the pair scan past 4096 vertices.
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (uint64_t i = 0; i < n; ++i) {
        const MixedVector vi = MixedVector::at(s, i);
        for (const auto& d : sphere) adj[i][(vi + d).index()] = 1;
    }
    std::optional<uint64_t> lambda, mu;
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = i + 1; j < n; ++j) {
            uint64_t common = 0;
            for (uint64_t k = 0; k < n; ++k) common += adj[i][k] && adj[j][k];
            auto& slot = adj[i][j] ? lambda : mu;
            if (!slot) slot = common;
            if (*slot != common) return st;  // not strongly regular
        }
    if (lambda && mu) st.srg = {{n, sphere.size(), *lambda, *mu}};
    return st;
}

inline GraphStats graph_stats(const SpaceShape& s, bool use_coweight = false,
                              uint64_t budget = uint64_t{1} << 16) {
    if (use_coweight)
        return graph_stats_under(s, [](const MixedVector& v) { return coweight(v); }, budget);
    return graph_stats_under(s, [](const MixedVector& v) { return weight(v); }, budget);
}

}  // namespace doob
