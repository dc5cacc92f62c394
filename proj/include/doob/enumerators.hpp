#pragma once

// Weight, coweight, and complete weight enumerators; the MacWilliams
// transform on bivariate enumerators; the exact Fourier transform and
// Poisson summation over a code/dual pair; and evaluation of the complete
// transform identity at Gaussian-integer points.
//
// All arithmetic is exact.  Enumerator coefficients are big integers, and
// every division by a code cardinality asserts divisibility, so a wrong
// pairing or mismatched enumerator surfaces as an error rather than a
// rounded-away discrepancy.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "charsum.hpp"
#include "codes.hpp"
#include "zrep.hpp"

namespace doob {

// ---------------------------------------------------------------------------
// Bivariate enumerators
// ---------------------------------------------------------------------------

/// Homogeneous degree-N generating polynomial sum_w coeffs[w] A^{N-w} B^w.
struct BivariateEnum {
    int total_degree{0};
    std::vector<BigInt> coeffs;  // size total_degree + 1

    BivariateEnum() : coeffs(1) {}
    explicit BivariateEnum(int degree) : total_degree(degree), coeffs(degree + 1) {}

    bool operator==(const BivariateEnum&) const = default;

    BigInt sum() const {
        BigInt s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    BigInt evaluate(const BigInt& a, const BigInt& b) const {
        BigInt r = 0;
        for (int w = 0; w <= total_degree; ++w) {
            BigInt term = coeffs[w];
            for (int k = 0; k < total_degree - w; ++k) term *= a;
            for (int k = 0; k < w; ++k) term *= b;
            r += term;
        }
        return r;
    }
};

/// Histogram of a weight function over the elements of a code.
template <class Code, class WeightFn>
BivariateEnum enumerator_of(const Code& code, WeightFn&& wf) {
    BivariateEnum en(code.shape().total_degree());
    for (const auto& z : code.elements()) en.coeffs[wf(z)] += 1;
    return en;
}

inline BivariateEnum weight_enumerator(const AdditiveCode& c) {
    return enumerator_of(c, [](const MixedVector& v) { return weight(v); });
}
inline BivariateEnum coweight_enumerator(const AdditiveCode& c) {
    return enumerator_of(c, [](const MixedVector& v) { return coweight(v); });
}
inline BivariateEnum weight_enumerator(const ZCode& c) {
    return enumerator_of(c, [](const ZVector& v) { return weight(v); });
}
inline BivariateEnum coweight_enumerator(const ZCode& c) {
    return enumerator_of(c, [](const ZVector& v) { return coweight(v); });
}

// ---------------------------------------------------------------------------
// MacWilliams transform
// ---------------------------------------------------------------------------

/// Linear change of variables A -> a_to_a*A + a_to_b*B, B -> b_to_a*A + b_to_b*B.
struct EnumSubstitution {
    int a_to_a{1}, a_to_b{0}, b_to_a{0}, b_to_b{1};
};

/// The substitution relating the enumerators of a dual pair.
inline constexpr EnumSubstitution macwilliams_substitution{1, 3, 1, -1};

/// Apply a substitution to an enumerator and divide by the code size.
/// Throws std::domain_error if any resulting coefficient is fractional or
/// negative -- the signature of a wrong pairing/enumerator combination.
inline BivariateEnum transform_enumerator(const BivariateEnum& en, const BigInt& code_size,
                                          const EnumSubstitution& s) {
    if (code_size <= 0) throw std::invalid_argument("code size must be positive");
    const int n = en.total_degree;
    std::vector<BigInt> out(n + 1);
    for (int w = 0; w <= n; ++w) {
        if (en.coeffs[w] == 0) continue;
        // expand (a_to_a A + a_to_b B)^{n-w} (b_to_a A + b_to_b B)^w
        std::vector<BigInt> poly{1};
        auto mul_linear = [&poly](int ca, int cb) {
            std::vector<BigInt> next(poly.size() + 1);
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k] * ca;
                next[k + 1] += poly[k] * cb;
            }
            poly.swap(next);
        };
        for (int k = 0; k < n - w; ++k) mul_linear(s.a_to_a, s.a_to_b);
        for (int k = 0; k < w; ++k) mul_linear(s.b_to_a, s.b_to_b);
        for (int k = 0; k <= n; ++k) out[k] += en.coeffs[w] * poly[k];
    }
    BivariateEnum r(n);
    for (int k = 0; k <= n; ++k) {
        if (out[k] % code_size != 0)
            throw std::domain_error("transformed coefficient is not divisible by the code size");
        out[k] /= code_size;
        if (out[k] < 0) throw std::domain_error("transformed coefficient is negative");
        r.coeffs[k] = out[k];
    }
    return r;
}

/// (1/|C|) en(A+3B, A-B), the MacWilliams transform.
inline BivariateEnum macwilliams_transform(const BivariateEnum& en, const BigInt& code_size) {
    return transform_enumerator(en, code_size, macwilliams_substitution);
}

// ---------------------------------------------------------------------------
// Complete weight enumerator
// ---------------------------------------------------------------------------

// Exponent profile of one monomial: occurrence counts of each symbol, with
// 16 X slots (by e4_index), 4 Y slots (by f4_index), and 4 Z slots.
using ExponentProfile = std::array<uint8_t, 24>;

struct CompleteEnum {
    SpaceShape shape;
    std::map<ExponentProfile, BigInt> profiles;

    bool operator==(const CompleteEnum&) const = default;

    BigInt sum() const {
        BigInt s = 0;
        for (const auto& [profile, c] : profiles) s += c;
        return s;
    }
};

inline ExponentProfile profile_of(const MixedVector& v) {
    ExponentProfile p{};
    for (E4Elem e : v.estar) ++p[e4_index(e)];
    for (F4Elem f : v.fprime) ++p[16 + f4_index(f)];
    for (Z4 z : v.zsec) ++p[20 + z.v];
    return p;
}

inline CompleteEnum complete_weight_enumerator(const AdditiveCode& code) {
    CompleteEnum ce;
    ce.shape = code.shape();
    for (const auto& z : code.elements()) ce.profiles[profile_of(z)] += 1;
    return ce;
}

enum class EnumKind : uint8_t { Weight, Coweight };

/// Substitute every variable by its bivariate weight monomial
/// (X_a -> A^{2-wt(a)} B^{wt(a)}, Y and Z slots -> A or B) and collect the
/// homogeneous degree-N enumerator.
inline BivariateEnum specialize(const CompleteEnum& ce, EnumKind kind) {
    // per-slot contribution to the B-exponent
    std::array<int, 24> slot_weight{};
    for (int i = 0; i < 16; ++i)
        slot_weight[i] = kind == EnumKind::Weight ? weight(e4_from_index(i))
                                                  : coweight(e4_from_index(i));
    for (int i = 0; i < 4; ++i) slot_weight[16 + i] = weight(f4_from_index(i));
    for (int i = 0; i < 4; ++i) slot_weight[20 + i] = weight(Z4(i));

    BivariateEnum en(ce.shape.total_degree());
    for (const auto& [profile, c] : ce.profiles) {
        int w = 0;
        for (int i = 0; i < 24; ++i) w += slot_weight[i] * profile[i];
        en.coeffs[w] += c;
    }
    return en;
}

// ---------------------------------------------------------------------------
// Fourier transform and Poisson summation
// ---------------------------------------------------------------------------

/// A complex-valued (exact Gaussian-integer) function on the ambient space,
/// tabulated in enumeration order.
template <class V>
struct FunctionTable {
    SpaceShape shape;
    std::vector<GaussInt> values;  // indexed by V::index()

    static FunctionTable zero(const SpaceShape& s, uint64_t budget = default_budget) {
        FunctionTable t;
        t.shape = s;
        t.values.resize(ambient_size_checked(s, budget));
        return t;
    }

    GaussInt& operator[](const V& v) { return values[v.index()]; }
    const GaussInt& operator[](const V& v) const { return values[v.index()]; }
};

/// fhat(u) = sum over v of i^[u,v] f(v), tabulated over the whole space.
template <class V, class PairFn>
FunctionTable<V> fourier_transform(const FunctionTable<V>& f, PairFn&& pairing,
                                   uint64_t budget = default_budget) {
    const uint64_t n = ambient_size_checked(f.shape, budget);
    FunctionTable<V> out = FunctionTable<V>::zero(f.shape, budget);
    for (uint64_t iu = 0; iu < n; ++iu) {
        const V u = V::at(f.shape, iu);
        GaussInt acc;
        for (uint64_t iv = 0; iv < n; ++iv)
            acc += char_i(pairing(u, V::at(f.shape, iv))) * f.values[iv];
        out.values[iu] = acc;
    }
    return out;
}

/// Both sides of the summation identity
///   sum over z in dual(C) of f(z) = (1/|C|) sum over u in C of fhat(u),
/// evaluated exactly; the right side is checked divisible by |C|.
template <class V, class PairFn>
std::pair<GaussInt, GaussInt> poisson_check(const GroupCode<V>& code, const FunctionTable<V>& f,
                                            PairFn&& pairing, uint64_t budget = default_budget) {
    if (!(code.shape() == f.shape)) throw std::invalid_argument("function/code shape mismatch");
    const uint64_t n = ambient_size_checked(code.shape(), budget);

    const GroupCode<V> dual_code = dual_under(code, pairing, budget);
    GaussInt lhs;
    for (const auto& z : dual_code.elements()) lhs += f[z];

    GaussInt rhs;
    for (const auto& u : code.elements())
        for (uint64_t iv = 0; iv < n; ++iv)
            rhs += char_i(pairing(u, V::at(code.shape(), iv))) * f.values[iv];
    return {lhs, rhs.divided_by(BigInt(code.size()))};
}

// ---------------------------------------------------------------------------
// Complete transform identity, evaluated at Gaussian-integer points
// ---------------------------------------------------------------------------

/// Values assigned to the 24 formal variables of a complete enumerator.
struct VariableAssignment {
    std::array<GaussInt, 16> x;  // X_a by e4_index
    std::array<GaussInt, 4> y;   // Y_b by f4_index
    std::array<GaussInt, 4> z;   // Z_c by value

    GaussInt monomial(const MixedVector& v) const {
        GaussInt r(1);
        for (E4Elem e : v.estar) r = r * x[e4_index(e)];
        for (F4Elem f : v.fprime) r = r * y[f4_index(f)];
        for (Z4 t : v.zsec) r = r * z[t.v];
        return r;
    }
};

/// Left side: the complete enumerator of the explicitly computed dual,
/// evaluated at the assignment.  Right side: the enumerator of the code
/// itself, evaluated at the character-substituted variable values and
/// divided by |C|.  Equality of the two is the complete transform identity.
inline std::pair<GaussInt, GaussInt> complete_transform_eval(const AdditiveCode& code,
                                                             const VariableAssignment& assign,
                                                             const Pairing& pairing,
                                                             uint64_t budget = default_budget) {
    const AdditiveCode dual_code = dual(code, pairing, budget);
    GaussInt lhs;
    for (const auto& v : dual_code.elements()) lhs += assign.monomial(v);

    // substituted values: S[a] = sum over v of i^{kernel(a, v)} * value[v]
    VariableAssignment subst;
    for (int a = 0; a < 16; ++a) {
        GaussInt acc;
        for (int v = 0; v < 16; ++v)
            acc += char_i(pairing.kernel(e4_from_index(a), e4_from_index(v))) * assign.x[v];
        subst.x[a] = acc;
    }
    for (int a = 0; a < 4; ++a) {
        GaussInt acc;
        for (int v = 0; v < 4; ++v)
            acc += char_i(pairing.kernel(f4_from_index(a), f4_from_index(v))) * assign.y[v];
        subst.y[a] = acc;
    }
    for (int a = 0; a < 4; ++a) {
        GaussInt acc;
        for (int v = 0; v < 4; ++v) acc += char_i(pairing.kernel(Z4(a), Z4(v))) * assign.z[v];
        subst.z[a] = acc;
    }

    GaussInt rhs;
    for (const auto& u : code.elements()) rhs += subst.monomial(u);
    return {lhs, rhs.divided_by(BigInt(code.size()))};
}

}  // namespace doob
