#pragma once

// Exact arithmetic in the alphabet rings of the Doob scheme: the residue
// rings Z4 and Z2, the field F4 = GF(4), the Galois ring E4 = GR(4^2), and
// exact Gaussian integers for character values.
//
// E4 elements are coordinate pairs (a, b) standing for a + b*omega with the
// defining relation omega^2 = -1 - omega; F4 uses omega^2 = 1 + omega.  All
// named constants (omega, psi = omega - 1, the unit group Omega and its
// cosets) are derived from these relations, never hard-coded.

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace doob {

using BigInt = boost::multiprecision::cpp_int;

/// Enumeration or closure would exceed the configured ambient-size budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed token, vector, or code file.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Residue rings Z2 and Z4
// ---------------------------------------------------------------------------

struct Z2 {
    uint8_t v{0};

    constexpr Z2() = default;
    constexpr Z2(int x) : v(static_cast<uint8_t>(x & 1)) {}

    constexpr Z2 operator-() const { return *this; }
    friend constexpr Z2 operator+(Z2 x, Z2 y) { return Z2(x.v ^ y.v); }
    friend constexpr Z2 operator-(Z2 x, Z2 y) { return Z2(x.v ^ y.v); }
    friend constexpr Z2 operator*(Z2 x, Z2 y) { return Z2(x.v & y.v); }
    constexpr bool operator==(const Z2&) const = default;
};

struct Z4 {
    uint8_t v{0};

    constexpr Z4() = default;
    constexpr Z4(int x) : v(static_cast<uint8_t>(x & 3)) {}

    constexpr Z4 operator-() const { return Z4(-static_cast<int>(v)); }
    friend constexpr Z4 operator+(Z4 x, Z4 y) { return Z4(x.v + y.v); }
    friend constexpr Z4 operator-(Z4 x, Z4 y) { return Z4(static_cast<int>(x.v) - y.v); }
    friend constexpr Z4 operator*(Z4 x, Z4 y) { return Z4(x.v * y.v); }
    constexpr bool operator==(const Z4&) const = default;

    constexpr bool is_unit() const { return (v & 1) != 0; }
};

constexpr Z2 reduce_mod2(Z4 x) { return Z2(x.v); }
constexpr Z4 embed_double(Z2 x) { return Z4(2 * x.v); }  // 0 -> 0, 1 -> 2

// ---------------------------------------------------------------------------
// F4 = GF(4), elements a + b*omega with omega^2 = 1 + omega
// ---------------------------------------------------------------------------

struct F4Elem {
    Z2 a{}, b{};

    constexpr F4Elem() = default;
    constexpr F4Elem(Z2 a_, Z2 b_) : a(a_), b(b_) {}

    constexpr F4Elem operator-() const { return *this; }
    friend constexpr F4Elem operator+(F4Elem x, F4Elem y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr F4Elem operator-(F4Elem x, F4Elem y) { return x + y; }
    friend constexpr F4Elem operator*(F4Elem x, F4Elem y) {
        // (a + b w)(c + d w) = (ac + bd) + (ad + bc + bd) w
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    constexpr bool operator==(const F4Elem&) const = default;

    constexpr bool is_zero() const { return a == Z2(0) && b == Z2(0); }
};

inline constexpr F4Elem f4_zero{};
inline constexpr F4Elem f4_one{1, 0};
inline constexpr F4Elem f4_omega{0, 1};
inline constexpr F4Elem f4_omega_bar = f4_omega * f4_omega;  // 1 + omega

/// Frobenius conjugation z -> z^2, the order-2 field automorphism.
constexpr F4Elem f4_conj(F4Elem x) { return x * x; }

/// Trace onto the prime field: Tr(z) = z + z^2, i.e. (a, b) -> b.
constexpr Z2 f4_trace(F4Elem x) { return x.b; }

// ---------------------------------------------------------------------------
// E4 = GR(4^2), elements a + b*omega with omega^2 = -1 - omega
// ---------------------------------------------------------------------------

struct E4Elem {
    Z4 a{}, b{};

    constexpr E4Elem() = default;
    constexpr E4Elem(Z4 a_, Z4 b_) : a(a_), b(b_) {}

    constexpr E4Elem operator-() const { return {-a, -b}; }
    friend constexpr E4Elem operator+(E4Elem x, E4Elem y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr E4Elem operator-(E4Elem x, E4Elem y) { return {x.a - y.a, x.b - y.b}; }
    friend constexpr E4Elem operator*(E4Elem x, E4Elem y) {
        // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    constexpr bool operator==(const E4Elem&) const = default;

    constexpr bool is_zero() const { return a == Z4(0) && b == Z4(0); }
};

inline constexpr E4Elem e4_zero{};
inline constexpr E4Elem e4_one{1, 0};
inline constexpr E4Elem e4_two{2, 0};
inline constexpr E4Elem e4_omega{0, 1};
inline constexpr E4Elem e4_omega_bar = -e4_one - e4_omega;  // conjugate root of x^2 + x + 1
inline constexpr E4Elem e4_psi = e4_omega - e4_one;

/// Ring conjugation omega -> omega-bar: a + b*omega -> (a - b) - b*omega.
constexpr E4Elem e4_conj(E4Elem x) { return {x.a - x.b, -x.b}; }

/// Trace onto Z4: Tr(z) = z + conj(z) = 2a - b.
constexpr Z4 e4_trace(E4Elem x) { return Z4(2 * x.a.v) - x.b; }

/// The group homomorphism 2*: F4 -> E4, z + 2E -> 2z + 4E.
constexpr E4Elem embed_double(F4Elem x) { return {embed_double(x.a), embed_double(x.b)}; }

/// Coordinatewise reduction modulo 2, the surjective ring map E4 -> F4.
constexpr F4Elem reduce_mod2(E4Elem x) { return {reduce_mod2(x.a), reduce_mod2(x.b)}; }

// Canonical index of an E4 element, lexicographic on (a, b); this is also
// the order of the element tokens "a:b".
constexpr int e4_index(E4Elem x) { return 4 * x.a.v + x.b.v; }
constexpr E4Elem e4_from_index(int i) { return {Z4(i >> 2), Z4(i & 3)}; }

// Canonical index of an F4 element, following the order of the element
// tokens "0" < "1" < "W" < "w".
constexpr int f4_index(F4Elem x) {
    constexpr int rank[4] = {0, 3, 1, 2};  // indexed by 2a + b
    return rank[2 * x.a.v + x.b.v];
}
constexpr F4Elem f4_from_index(int i) {
    constexpr uint8_t ab[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return {Z2(ab[i][0]), Z2(ab[i][1])};
}

// ---------------------------------------------------------------------------
// Multiplicative cosets and weights
// ---------------------------------------------------------------------------

// E4 \ 2E4 splits into the unit cosets Omega = <-omega> (the powers of
// -omega) and psi*Omega; the zero divisors split into {0} and 2*Omega.
enum class CosetClass : uint8_t { Zero, Omega, TwoOmega, PsiOmega };

namespace detail {

constexpr std::array<CosetClass, 16> build_coset_table() {
    std::array<CosetClass, 16> cls{};
    cls[0] = CosetClass::Zero;
    E4Elem w = e4_one;
    for (int k = 0; k < 6; ++k) {
        cls[e4_index(w)] = CosetClass::Omega;
        cls[e4_index(e4_two * w)] = CosetClass::TwoOmega;
        cls[e4_index(e4_psi * w)] = CosetClass::PsiOmega;
        w = w * (-e4_omega);
    }
    return cls;
}

inline constexpr std::array<CosetClass, 16> coset_table = build_coset_table();

}  // namespace detail

constexpr CosetClass coset_class(E4Elem x) { return detail::coset_table[e4_index(x)]; }

// Weight: 0 on 0, 1 on Omega, 2 elsewhere.  Coweight: 1 on psi*Omega instead.
constexpr int weight(E4Elem x) {
    switch (coset_class(x)) {
        case CosetClass::Zero: return 0;
        case CosetClass::Omega: return 1;
        default: return 2;
    }
}
constexpr int coweight(E4Elem x) {
    switch (coset_class(x)) {
        case CosetClass::Zero: return 0;
        case CosetClass::PsiOmega: return 1;
        default: return 2;
    }
}
constexpr int weight(F4Elem x) { return x.is_zero() ? 0 : 1; }
constexpr int weight(Z4 x) { return x == Z4(0) ? 0 : 1; }

// ---------------------------------------------------------------------------
// Exact Gaussian integers and characters
// ---------------------------------------------------------------------------

struct GaussInt {
    BigInt re{0}, im{0};

    GaussInt() = default;
    GaussInt(long r) : re(r) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    GaussInt operator-() const { return {-re, -im}; }
    friend GaussInt operator+(const GaussInt& x, const GaussInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussInt operator-(const GaussInt& x, const GaussInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussInt& operator+=(const GaussInt& y) {
        re += y.re;
        im += y.im;
        return *this;
    }
    bool operator==(const GaussInt&) const = default;

    GaussInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }

    bool divisible_by(const BigInt& d) const { return re % d == 0 && im % d == 0; }
    GaussInt divided_by(const BigInt& d) const {
        if (!divisible_by(d)) throw std::domain_error("GaussInt: inexact division");
        return {re / d, im / d};
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussInt& g) {
        os << g.re;
        if (g.im >= 0) os << "+";
        return os << g.im << "i";
    }
};

/// The power i^k for a residue exponent, one of {1, i, -1, -i}, exact.
inline GaussInt char_i(Z4 k) {
    switch (k.v) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

/// 16x16 character table, entry (u, v) = i^Tr(uv), indexed by e4_index.
inline std::array<std::array<GaussInt, 16>, 16> character_table_e4() {
    std::array<std::array<GaussInt, 16>, 16> t;
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v)
            t[u][v] = char_i(e4_trace(e4_from_index(u) * e4_from_index(v)));
    return t;
}

// ---------------------------------------------------------------------------
// Element tokens (shared with the vector and code-file formats)
// ---------------------------------------------------------------------------

inline std::string token(E4Elem x) {
    std::string s(3, ':');
    s[0] = static_cast<char>('0' + x.a.v);
    s[2] = static_cast<char>('0' + x.b.v);
    return s;
}

inline std::string token(F4Elem x) {
    static constexpr const char* names[4] = {"0", "1", "W", "w"};
    return names[f4_index(x)];
}

inline std::string token(Z4 x) { return std::string(1, static_cast<char>('0' + x.v)); }

inline E4Elem parse_e4_token(std::string_view s) {
    if (s.size() != 3 || s[1] != ':' || s[0] < '0' || s[0] > '3' || s[2] < '0' || s[2] > '3')
        throw parse_error("bad E4 token '" + std::string(s) + "', expected a:b with digits 0-3");
    return {Z4(s[0] - '0'), Z4(s[2] - '0')};
}

inline F4Elem parse_f4_token(std::string_view s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case '0': return f4_zero;
            case '1': return f4_one;
            case 'w': return f4_omega;
            case 'W': return f4_omega_bar;
            default: break;
        }
    }
    throw parse_error("bad F4 token '" + std::string(s) + "', expected one of 0 1 w W");
}

inline Z4 parse_z4_token(std::string_view s) {
    if (s.size() != 1 || s[0] < '0' || s[0] > '3')
        throw parse_error("bad Z4 token '" + std::string(s) + "', expected a digit 0-3");
    return Z4(s[0] - '0');
}

inline std::ostream& operator<<(std::ostream& os, E4Elem x) { return os << token(x); }
inline std::ostream& operator<<(std::ostream& os, F4Elem x) { return os << token(x); }
inline std::ostream& operator<<(std::ostream& os, Z4 x) { return os << token(x); }

}  // namespace doob
