#pragma once

// Exact character-sum identities: for each alphabet, the 16- (or 4-) term sum
// of i^<a,v> against the weight monomial of v collapses to a product of the
// reference binomials (A+3B) and (A-B).  These identities are what turn the
// Poisson summation into the enumerator transform, so they are verified
// symbolically, with Gaussian-integer polynomial coefficients.

#include <stdexcept>
#include <utility>
#include <vector>

#include "rings.hpp"

namespace doob {

/// Homogeneous bivariate polynomial in (A, B) with exact Gaussian-integer
/// coefficients; coeff[k] multiplies A^{deg-k} B^k.
struct GaussPoly {
    std::vector<GaussInt> coeff;

    explicit GaussPoly(int degree = 0) : coeff(degree + 1) {}
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool operator==(const GaussPoly&) const = default;

    friend GaussPoly operator*(const GaussPoly& p, const GaussPoly& q) {
        GaussPoly r(p.degree() + q.degree());
        for (int i = 0; i <= p.degree(); ++i)
            for (int j = 0; j <= q.degree(); ++j) r.coeff[i + j] += p.coeff[i] * q.coeff[j];
        return r;
    }
};

/// (A + 3B)^p (A - B)^q, expanded exactly.
inline GaussPoly reference_binomials(int p, int q) {
    GaussPoly one(0);
    one.coeff[0] = GaussInt(1);
    GaussPoly a3b(1), amb(1);
    a3b.coeff[0] = GaussInt(1);
    a3b.coeff[1] = GaussInt(3);
    amb.coeff[0] = GaussInt(1);
    amb.coeff[1] = GaussInt(-1);
    GaussPoly r = one;
    for (int i = 0; i < p; ++i) r = r * a3b;
    for (int i = 0; i < q; ++i) r = r * amb;
    return r;
}

namespace detail {

// Accumulate sum over an alphabet of chi(v) * A^{deg-wt(v)} B^{wt(v)} and
// compare against the reference product with the claimed exponents.
template <class Iter, class ChiFn, class WtFn>
std::pair<int, int> verified_char_sum(Iter first, Iter last, int degree, ChiFn&& chi, WtFn&& wt,
                                      int ref_weight) {
    GaussPoly lhs(degree);
    for (Iter it = first; it != last; ++it) lhs.coeff[wt(*it)] += chi(*it);
    const std::pair<int, int> exps{degree - ref_weight, ref_weight};
    if (!(lhs == reference_binomials(exps.first, exps.second)))
        throw std::logic_error("character-sum identity failed");
    return exps;
}

}  // namespace detail

/// sum over v in E4 of i^Tr(av) A^{2-wt(v)} B^{wt(v)}
///   = (A+3B)^{2-wa(a)} (A-B)^{wa(a)}, verified symbolically.
inline std::pair<int, int> char_sum_exponents(E4Elem a) {
    std::vector<E4Elem> alphabet(16);
    for (int i = 0; i < 16; ++i) alphabet[i] = e4_from_index(i);
    return detail::verified_char_sum(
        alphabet.begin(), alphabet.end(), 2,
        [a](E4Elem v) { return char_i(e4_trace(a * v)); }, [](E4Elem v) { return weight(v); },
        coweight(a));
}

/// sum over v in F4 of (-1)^Tr(bv) A^{1-wt(v)} B^{wt(v)}
///   = (A+3B)^{1-wt(b)} (A-B)^{wt(b)}, verified symbolically.
inline std::pair<int, int> f4_char_sum_exponents(F4Elem b) {
    std::vector<F4Elem> alphabet(4);
    for (int i = 0; i < 4; ++i) alphabet[i] = f4_from_index(i);
    return detail::verified_char_sum(
        alphabet.begin(), alphabet.end(), 1,
        [b](F4Elem v) { return char_i(embed_double(f4_trace(b * v))); },
        [](F4Elem v) { return weight(v); }, weight(b));
}

/// sum over v in Z4 of i^{cv} A^{1-wt(v)} B^{wt(v)}
///   = (A+3B)^{1-wt(c)} (A-B)^{wt(c)}, verified symbolically.
inline std::pair<int, int> z4_char_sum_exponents(Z4 c) {
    std::vector<Z4> alphabet{Z4(0), Z4(1), Z4(2), Z4(3)};
    return detail::verified_char_sum(
        alphabet.begin(), alphabet.end(), 1, [c](Z4 v) { return char_i(c * v); },
        [](Z4 v) { return weight(v); }, weight(c));
}

}  // namespace doob
