#pragma once

// Additive and linear codes as generated subgroups of an ambient space:
// worklist closure, canonical element lists, membership, and dual codes by
// exhaustive scan against a generating set.  The machinery is shared between
// the mixed E4/F4/Z4 representation and the Z4^2-pair representation.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "space.hpp"

namespace doob {

// ---------------------------------------------------------------------------
// Generic subgroup codes
// ---------------------------------------------------------------------------

// V must be a value type with shape-aware zero/at/index, operators +, unary -,
// <, ==, and a ShapeType of SpaceShape.
template <class V>
class GroupCode {
  public:
    using Vector = V;

    GroupCode() = default;

    /// Smallest subgroup containing the generators, by worklist closure.
    /// The empty generator list yields {0}.  Elements are tracked by their
    /// enumeration index, whose order is the canonical vector order.
    static GroupCode from_generators(const SpaceShape& shape, const std::vector<V>& gens,
                                     uint64_t budget = default_budget) {
        for (const auto& g : gens)
            if (g.shape() != shape) throw std::invalid_argument("generator shape mismatch");
        std::set<uint64_t> seen{V::zero(shape).index()};
        std::vector<uint64_t> work{V::zero(shape).index()};
        while (!work.empty()) {
            const V x = V::at(shape, work.back());
            work.pop_back();
            for (const auto& g : gens) {
                const uint64_t y = (x + g).index();
                if (seen.insert(y).second) {
                    if (seen.size() > budget)
                        throw budget_error("closure exceeds the enumeration budget");
                    work.push_back(y);
                }
            }
        }
        std::vector<V> elements;
        elements.reserve(seen.size());
        for (uint64_t idx : seen) elements.push_back(V::at(shape, idx));
        return from_element_set(shape, std::move(elements));
    }

    /// Wrap an already-closed, canonically sorted element set.
    static GroupCode from_element_set(const SpaceShape& shape, std::vector<V> elements) {
        GroupCode c;
        c.shape_ = shape;
        c.elems_ = std::move(elements);
        c.gens_ = reduce_generators(shape, c.elems_);
        return c;
    }

    const SpaceShape& shape() const { return shape_; }
    /// A minimal canonical generating set (first elements, in canonical
    /// order, that each enlarge the generated subgroup).
    const std::vector<V>& generators() const { return gens_; }
    /// All elements, canonically sorted.
    const std::vector<V>& elements() const { return elems_; }
    uint64_t size() const { return elems_.size(); }

    bool contains(const V& v) const {
        return std::binary_search(elems_.begin(), elems_.end(), v);
    }

    bool operator==(const GroupCode& other) const {
        return shape_ == other.shape_ && elems_ == other.elems_;
    }

  private:
    static std::vector<V> reduce_generators(const SpaceShape& shape,
                                            const std::vector<V>& sorted_elems) {
        std::vector<V> gens;
        std::set<uint64_t> closed{V::zero(shape).index()};
        for (const auto& e : sorted_elems) {
            if (closed.count(e.index())) continue;
            gens.push_back(e);
            // extend the closure by all multiples of the new generator
            std::vector<V> multiples;
            V acc = V::zero(shape);
            do {
                multiples.push_back(acc);
                acc = acc + e;
            } while (!(acc == V::zero(shape)));
            std::set<uint64_t> bigger;
            for (uint64_t xi : closed) {
                const V x = V::at(shape, xi);
                for (const auto& k : multiples) bigger.insert((x + k).index());
            }
            closed.swap(bigger);
        }
        return gens;
    }

    SpaceShape shape_{};
    std::vector<V> gens_;
    std::vector<V> elems_;
};

/// Dual code under a Z4-valued biadditive pairing: all ambient vectors
/// pairing to zero with every generator (which suffices by biadditivity).
template <class V, class PairFn>
GroupCode<V> dual_under(const GroupCode<V>& code, PairFn&& pairing,
                        uint64_t budget = default_budget) {
    const uint64_t n = ambient_size_checked(code.shape(), budget);
    std::vector<V> kept;
    for (uint64_t i = 0; i < n; ++i) {
        V v = V::at(code.shape(), i);
        bool orthogonal = true;
        for (const auto& g : code.generators())
            if (!(pairing(v, g) == Z4(0))) {
                orthogonal = false;
                break;
            }
        if (orthogonal) kept.push_back(std::move(v));
    }
    return GroupCode<V>::from_element_set(code.shape(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Codes in the mixed representation
// ---------------------------------------------------------------------------

using AdditiveCode = GroupCode<MixedVector>;

inline AdditiveCode additive_closure(const SpaceShape& shape,
                                     const std::vector<MixedVector>& gens,
                                     uint64_t budget = default_budget) {
    return AdditiveCode::from_generators(shape, gens, budget);
}

/// Submodule closure: additive closure of all E4-scalar multiples of the
/// generators.  Defined only without plain Z4 coordinates.
inline AdditiveCode linear_closure(const SpaceShape& shape, const std::vector<MixedVector>& gens,
                                   uint64_t budget = default_budget) {
    if (shape.nsec != 0)
        throw std::invalid_argument("linear codes are undefined on Z4 coordinates");
    std::vector<MixedVector> scaled;
    scaled.reserve(16 * gens.size());
    for (const auto& g : gens)
        for (int i = 0; i < 16; ++i) scaled.push_back(e4_from_index(i) * g);
    return AdditiveCode::from_generators(shape, scaled, budget);
}

/// True iff the additive code is closed under the E4-scalar action.  Closure
/// under multiplication by omega alone suffices: together with addition it
/// generates every scalar multiple.
inline bool is_linear(const AdditiveCode& code) {
    if (code.shape().nsec != 0)
        throw std::invalid_argument("linearity is undefined on Z4 coordinates");
    for (const auto& x : code.elements())
        if (!code.contains(e4_omega * x)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Pairings of the mixed representation
// ---------------------------------------------------------------------------

// A named Z4-valued biadditive form.  The coordinate kernels expose the
// summand contributed by a single coordinate pair; the full form is always
// the sum of its kernels, which is what makes the Fourier machinery factor
// coordinatewise.
struct Pairing {
    enum class Kind : uint8_t { Tr, Psi, L, Herm };

    Kind kind{Kind::Tr};
    LMap lmap{};  // meaningful only for Kind::L

    static Pairing tr() { return {Kind::Tr, {}}; }
    static Pairing psi() { return {Kind::Psi, {}}; }
    static Pairing hermitian() { return {Kind::Herm, {}}; }
    static Pairing with_l(const LMap& l) {
        if (!l.surjective()) throw std::invalid_argument("L-map is not surjective onto Z4");
        return {Kind::L, l};
    }

    Z4 operator()(const MixedVector& x, const MixedVector& y) const {
        switch (kind) {
            case Kind::Tr: return inner_z4_tr(x, y);
            case Kind::Psi: return inner_z4_psi(x, y);
            case Kind::L: return inner_L(x, y, lmap);
            case Kind::Herm: return e4_trace(inner_hermitian(x, y));
        }
        throw std::logic_error("unreachable");
    }

    Z4 kernel(E4Elem a, E4Elem v) const {
        switch (kind) {
            case Kind::Tr: return e4_trace(a * v);
            case Kind::Psi: return e4_trace(e4_psi * a * v);
            case Kind::L: return lmap(a * v);
            case Kind::Herm: return e4_trace(a * e4_conj(v));
        }
        throw std::logic_error("unreachable");
    }

    Z4 kernel(F4Elem a, F4Elem v) const {
        switch (kind) {
            case Kind::Herm: return embed_double(f4_trace(a * f4_conj(v)));
            case Kind::L: return lmap(embed_double(a * v));
            default: return embed_double(f4_trace(a * v));
        }
    }

    Z4 kernel(Z4 a, Z4 v) const { return a * v; }

    std::string name() const {
        switch (kind) {
            case Kind::Tr: return "tr";
            case Kind::Psi: return "psi";
            case Kind::Herm: return "herm";
            case Kind::L:
                return "L:" + std::to_string(lmap.l1.v) + "," + std::to_string(lmap.lw.v);
        }
        return "?";
    }
};

inline AdditiveCode dual(const AdditiveCode& code, const Pairing& pairing,
                         uint64_t budget = default_budget) {
    return dual_under(code, pairing, budget);
}

}  // namespace doob
