#pragma once

// Seeded random-code generation and the identity checks run by verification
// campaigns: for each code, the bivariate-enumerator transform is compared
// against the enumerator of the exhaustively computed dual, together with
// the structural facts (cardinality product, double dual) that must hold for
// every code under every pairing.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "enumerators.hpp"

namespace doob {

/// Deterministic generator: the seed fully determines every draw, and draws
/// do not depend on library-specific distribution implementations.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next(uint64_t bound) { return gen() % bound; }  // bound > 0
    int64_t next_signed(int64_t lo, int64_t hi) {            // inclusive
        return lo + static_cast<int64_t>(next(static_cast<uint64_t>(hi - lo + 1)));
    }
};

inline MixedVector random_vector(const SpaceShape& s, Rng& rng) {
    MixedVector v = MixedVector::zero(s);
    for (auto& e : v.estar) e = e4_from_index(static_cast<int>(rng.next(16)));
    for (auto& f : v.fprime) f = f4_from_index(static_cast<int>(rng.next(4)));
    for (auto& z : v.zsec) z = Z4(static_cast<int>(rng.next(4)));
    return v;
}

inline ZVector random_z_vector(const SpaceShape& s, Rng& rng) {
    ZVector v = ZVector::zero(s);
    for (auto& q : v.quads) q = pair_from_index(static_cast<int>(rng.next(16)));
    for (auto& b : v.bits)
        b = {Z2(static_cast<int>(rng.next(2))), Z2(static_cast<int>(rng.next(2)))};
    for (auto& t : v.tail) t = Z4(static_cast<int>(rng.next(4)));
    return v;
}

// Campaign codes draw 1..4 uniform random generators.
inline AdditiveCode random_additive_code(const SpaceShape& s, Rng& rng,
                                         uint64_t budget = default_budget) {
    std::vector<MixedVector> gens;
    const uint64_t count = 1 + rng.next(4);
    for (uint64_t i = 0; i < count; ++i) gens.push_back(random_vector(s, rng));
    return additive_closure(s, gens, budget);
}

inline AdditiveCode random_linear_code(const SpaceShape& s, Rng& rng,
                                       uint64_t budget = default_budget) {
    std::vector<MixedVector> gens;
    const uint64_t count = 1 + rng.next(4);
    for (uint64_t i = 0; i < count; ++i) gens.push_back(random_vector(s, rng));
    return linear_closure(s, gens, budget);
}

inline ZCode random_z_code(const SpaceShape& s, Rng& rng, uint64_t budget = default_budget) {
    std::vector<ZVector> gens;
    const uint64_t count = 1 + rng.next(4);
    for (uint64_t i = 0; i < count; ++i) gens.push_back(random_z_vector(s, rng));
    return ZCode::from_generators(s, gens, budget);
}

inline GaussInt random_gauss(Rng& rng, int64_t magnitude = 9) {
    return {BigInt(rng.next_signed(-magnitude, magnitude)),
            BigInt(rng.next_signed(-magnitude, magnitude))};
}

inline VariableAssignment random_assignment(Rng& rng, int64_t magnitude = 9) {
    VariableAssignment a;
    for (auto& v : a.x) v = random_gauss(rng, magnitude);
    for (auto& v : a.y) v = random_gauss(rng, magnitude);
    for (auto& v : a.z) v = random_gauss(rng, magnitude);
    return a;
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

struct IdentityReport {
    std::vector<std::pair<std::string, bool>> items;

    void record(const std::string& name, bool ok) { items.emplace_back(name, ok); }
    bool all_pass() const {
        for (const auto& [name, ok] : items)
            if (!ok) return false;
        return true;
    }
};

namespace detail {

// Compare transform(source enumerator)/|C| with the target enumerator; a
// domain_error from the transform (fractional or negative coefficient)
// counts as a failed identity, not a crash.
inline bool transform_matches(const BivariateEnum& source, const BigInt& size,
                              const BivariateEnum& target, const EnumSubstitution& subst) {
    try {
        return transform_enumerator(source, size, subst) == target;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace detail

/// Checks for one code in the mixed representation under one pairing, using
/// a configurable substitution so a deliberately wrong substitution can be
/// shown to break the campaign.
inline IdentityReport check_code_identities(
    const AdditiveCode& code, const Pairing& pairing, uint64_t budget = default_budget,
    const EnumSubstitution& subst = macwilliams_substitution) {
    IdentityReport r;
    const AdditiveCode dc = dual(code, pairing, budget);

    const uint64_t ambient = ambient_size_checked(code.shape(), budget);
    r.record("cardinality", code.size() * dc.size() == ambient);
    r.record("double-dual", dual(dc, pairing, budget) == code);

    const BivariateEnum w_c = weight_enumerator(code), w_d = weight_enumerator(dc);
    switch (pairing.kind) {
        case Pairing::Kind::Tr:
        case Pairing::Kind::Herm: {
            // coweight of one side determines weight of the other
            r.record("mw-coweight-to-weight",
                     detail::transform_matches(coweight_enumerator(code), code.size(), w_d, subst));
            r.record("mw-weight-from-coweight",
                     detail::transform_matches(coweight_enumerator(dc), dc.size(), w_c, subst));
            if (code.shape().nsec == 0 && is_linear(code))
                r.record("mw-linear-weight-to-weight",
                         detail::transform_matches(w_c, code.size(), w_d, subst));
            break;
        }
        case Pairing::Kind::Psi: {
            // weight relates to weight for arbitrary additive codes
            r.record("mw-weight-to-weight",
                     detail::transform_matches(w_c, code.size(), w_d, subst));
            r.record("mw-weight-to-weight-reverse",
                     detail::transform_matches(w_d, dc.size(), w_c, subst));
            break;
        }
        case Pairing::Kind::L: {
            if (code.shape().nsec == 0 && is_linear(code))
                r.record("l-dual-equals-tr-dual", dc == dual(code, Pairing::tr(), budget));
            break;
        }
    }
    return r;
}

/// Checks for one code in the pair representation.
inline IdentityReport check_z_code_identities(
    const ZCode& code, const ZPairing& pairing, uint64_t budget = default_budget,
    const EnumSubstitution& subst = macwilliams_substitution) {
    IdentityReport r;
    const ZCode dc = z_dual(code, pairing, budget);

    const uint64_t ambient = ambient_size_checked(code.shape(), budget);
    r.record("cardinality", code.size() * dc.size() == ambient);
    r.record("double-dual", z_dual(dc, pairing, budget) == code);

    if (pairing.kind == ZPairing::Kind::Plus) {
        r.record("mw-coweight-to-weight",
                 detail::transform_matches(coweight_enumerator(code), code.size(),
                                           weight_enumerator(dc), subst));
        r.record("mw-weight-from-coweight",
                 detail::transform_matches(coweight_enumerator(dc), dc.size(),
                                           weight_enumerator(code), subst));
    } else {
        r.record("mw-weight-to-weight",
                 detail::transform_matches(weight_enumerator(code), code.size(),
                                           weight_enumerator(dc), subst));
        r.record("mw-weight-to-weight-reverse",
                 detail::transform_matches(weight_enumerator(dc), dc.size(),
                                           weight_enumerator(code), subst));
    }
    return r;
}

/// All 12 surjective L-maps give the same dual as the trace pairing on a
/// linear code.
inline bool check_l_duality(const AdditiveCode& linear_code, uint64_t budget = default_budget) {
    const AdditiveCode tr_dual = dual(linear_code, Pairing::tr(), budget);
    for (const LMap& l : LMap::all_surjective())
        if (!(dual(linear_code, Pairing::with_l(l), budget) == tr_dual)) return false;
    return true;
}

}  // namespace doob
