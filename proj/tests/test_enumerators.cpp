#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <doob/campaign.hpp>
#include <doob/enumerators.hpp>
#include <doob/io.hpp>

using namespace doob;

namespace {

const SpaceShape e1{1, 0, 0};

MixedVector vec(const SpaceShape& s, const std::string& body) {
    return parse_mixed_vector(s, body);
}

AdditiveCode code_c() { return additive_closure(e1, {vec(e1, "2:0"), vec(e1, "0:2")}); }
AdditiveCode code_d() { return additive_closure(e1, {vec(e1, "3:1")}); }

BivariateEnum coeffs(std::vector<long> v) {
    BivariateEnum en(static_cast<int>(v.size()) - 1);
    for (size_t i = 0; i < v.size(); ++i) en.coeffs[i] = v[i];
    return en;
}

}  // namespace

TEST_CASE("weight and coweight enumerators of the worked examples", "[enumerators]") {
    CHECK(weight_enumerator(code_c()) == coeffs({1, 0, 3}));
    CHECK(weight_enumerator(code_d()) == coeffs({1, 0, 3}));
    CHECK(coweight_enumerator(code_c()) == coeffs({1, 0, 3}));
    CHECK(coweight_enumerator(code_d()) == coeffs({1, 2, 1}));

    const AdditiveCode dd = dual(code_d(), Pairing::tr());
    CHECK(weight_enumerator(dd) == coeffs({1, 2, 1}));
    CHECK(coweight_enumerator(dd) == coeffs({1, 0, 3}));
    const AdditiveCode cd = dual(code_c(), Pairing::tr());
    CHECK(weight_enumerator(cd) == coeffs({1, 0, 3}));
    CHECK(coweight_enumerator(cd) == coeffs({1, 0, 3}));

    CHECK(weight_enumerator(additive_closure({1, 1, 1}, {})) == coeffs({1, 0, 0, 0, 0}));
}

TEST_CASE("enumerator evaluations", "[enumerators]") {
    Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        const AdditiveCode c = random_additive_code({1, 1, 1}, rng);
        const BivariateEnum w = weight_enumerator(c);
        CHECK(w.evaluate(1, 1) == BigInt(c.size()));
        CHECK(w.evaluate(1, 0) == 1);
        CHECK(w.sum() == BigInt(c.size()));
    }
}

TEST_CASE("complete weight enumerator", "[enumerators]") {
    const CompleteEnum trivial = complete_weight_enumerator(additive_closure(e1, {}));
    REQUIRE(trivial.profiles.size() == 1);
    ExponentProfile zero_profile{};
    zero_profile[e4_index(e4_zero)] = 1;
    CHECK(trivial.profiles.begin()->first == zero_profile);
    CHECK(trivial.profiles.begin()->second == 1);

    // each codeword of an order-4 code in one coordinate is its own monomial
    const CompleteEnum cc = complete_weight_enumerator(code_c());
    REQUIRE(cc.profiles.size() == 4);
    for (const auto& [profile, coeff] : cc.profiles) CHECK(coeff == 1);
    CHECK(cc.sum() == 4);
    for (const char* t : {"0:0", "0:2", "2:0", "2:2"}) {
        ExponentProfile p{};
        p[e4_index(parse_e4_token(t))] = 1;
        CHECK(cc.profiles.count(p) == 1);
    }
}

TEST_CASE("specializing the complete enumerator", "[enumerators]") {
    CHECK(specialize(complete_weight_enumerator(code_c()), EnumKind::Weight) == coeffs({1, 0, 3}));
    CHECK(specialize(complete_weight_enumerator(code_d()), EnumKind::Coweight) ==
          coeffs({1, 2, 1}));
    CHECK(specialize(complete_weight_enumerator(additive_closure({1, 1, 1}, {})),
                     EnumKind::Weight) == coeffs({1, 0, 0, 0, 0}));

    Rng rng(13);
    for (int k = 0; k < 20; ++k) {
        const AdditiveCode c = random_additive_code({1, 1, 1}, rng);
        const CompleteEnum ce = complete_weight_enumerator(c);
        CHECK(specialize(ce, EnumKind::Weight) == weight_enumerator(c));
        CHECK(specialize(ce, EnumKind::Coweight) == coweight_enumerator(c));
    }
}

TEST_CASE("enumerator transform", "[enumerators]") {
    CHECK(macwilliams_transform(coeffs({1, 2, 1}), 4) == coeffs({1, 2, 1}));
    CHECK(macwilliams_transform(coeffs({1, 0, 3}), 4) == coeffs({1, 0, 3}));
    CHECK(macwilliams_transform(coeffs({1}), 1) == coeffs({1}));

    // fractional coefficients are an error, not a silent rounding
    CHECK_THROWS_AS(macwilliams_transform(coeffs({1, 1}), 3), std::domain_error);
    // the flipped substitution produces a negative cross coefficient
    CHECK_THROWS_AS(transform_enumerator(coeffs({1, 2, 1}), 4, EnumSubstitution{1, 1, 1, -3}),
                    std::domain_error);
}

TEST_CASE("transforming twice returns the original enumerator", "[enumerators]") {
    Rng rng(17);
    for (int k = 0; k < 20; ++k) {
        const AdditiveCode c = random_additive_code({1, 1, 1}, rng);
        const AdditiveCode dc = dual(c, Pairing::tr());
        const BivariateEnum w = coweight_enumerator(c);
        // the substitution composed with itself scales both variables by 4,
        // and |C| |dual| = 4^N cancels the scale exactly
        const BivariateEnum once = macwilliams_transform(w, c.size());
        CHECK(macwilliams_transform(once, dc.size()) == w);
    }
}

TEST_CASE("MacWilliams identities against the exhaustive dual", "[enumerators]") {
    Rng rng(19);
    const std::vector<SpaceShape> shapes{{1, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                         {1, 1, 1}, {2, 0, 0}, {0, 2, 2}};
    for (const SpaceShape& s : shapes)
        for (int k = 0; k < 5; ++k) {
            const AdditiveCode c = random_additive_code(s, rng);
            CHECK(check_code_identities(c, Pairing::tr()).all_pass());
            CHECK(check_code_identities(c, Pairing::psi()).all_pass());
            if (s.nsec == 0) {
                CHECK(check_code_identities(linear_closure(s, c.generators()), Pairing::tr())
                          .all_pass());
                CHECK(check_code_identities(c, Pairing::hermitian()).all_pass());
            }
        }
}

TEST_CASE("the flipped substitution breaks the identities", "[enumerators]") {
    const EnumSubstitution flipped{1, 1, 1, -3};
    const IdentityReport r = check_code_identities(code_d(), Pairing::tr(), default_budget,
                                                   flipped);
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("character sums collapse to the reference binomials", "[enumerators]") {
    CHECK(char_sum_exponents(e4_zero) == std::pair{2, 0});
    CHECK(char_sum_exponents(e4_two) == std::pair{0, 2});
    CHECK(char_sum_exponents(e4_psi) == std::pair{1, 1});
    for (int i = 0; i < 16; ++i) {
        const E4Elem a = e4_from_index(i);
        CHECK(char_sum_exponents(a) == std::pair{2 - coweight(a), coweight(a)});
    }
    for (int i = 0; i < 4; ++i) {
        const F4Elem b = f4_from_index(i);
        CHECK(f4_char_sum_exponents(b) == std::pair{1 - weight(b), weight(b)});
        CHECK(z4_char_sum_exponents(Z4(i)) == std::pair{1 - weight(Z4(i)), weight(Z4(i))});
    }
}

TEST_CASE("Fourier transform", "[enumerators]") {
    auto f = FunctionTable<MixedVector>::zero(e1);
    f[MixedVector::zero(e1)] = GaussInt(1);  // indicator of {0}
    const auto fhat = fourier_transform(f, Pairing::tr());
    for (const auto& v : fhat.values) CHECK(v == GaussInt(1));

    auto ones = FunctionTable<MixedVector>::zero(e1);
    for (auto& v : ones.values) v = GaussInt(1);
    const auto ones_hat = fourier_transform(ones, Pairing::tr());
    CHECK(ones_hat[MixedVector::zero(e1)] == GaussInt(16));
    for (uint64_t i = 1; i < 16; ++i) CHECK(ones_hat.values[i] == GaussInt(0));

    // indicator of C transforms to |C| on the dual, 0 elsewhere
    const AdditiveCode c = code_c();
    auto ind = FunctionTable<MixedVector>::zero(e1);
    for (const auto& z : c.elements()) ind[z] = GaussInt(1);
    const auto ind_hat = fourier_transform(ind, Pairing::tr());
    const AdditiveCode cd = dual(c, Pairing::tr());
    for (uint64_t i = 0; i < 16; ++i)
        CHECK(ind_hat.values[i] ==
              (cd.contains(MixedVector::at(e1, i)) ? GaussInt(4) : GaussInt(0)));

    // transform value at zero is the plain sum of the function
    Rng rng(29);
    auto g = FunctionTable<MixedVector>::zero(e1);
    GaussInt total;
    for (auto& v : g.values) {
        v = random_gauss(rng);
        total += v;
    }
    CHECK(fourier_transform(g, Pairing::tr())[MixedVector::zero(e1)] == total);
}

TEST_CASE("Poisson summation over a code and its dual", "[enumerators]") {
    const AdditiveCode d = code_d();

    auto ind0 = FunctionTable<MixedVector>::zero(e1);
    ind0[MixedVector::zero(e1)] = GaussInt(1);
    CHECK(poisson_check(d, ind0, Pairing::tr()) == std::pair{GaussInt(1), GaussInt(1)});

    auto ones = FunctionTable<MixedVector>::zero(e1);
    for (auto& v : ones.values) v = GaussInt(1);
    CHECK(poisson_check(d, ones, Pairing::tr()) == std::pair{GaussInt(4), GaussInt(4)});

    Rng rng(37);
    for (int k = 0; k < 25; ++k) {
        auto f = FunctionTable<MixedVector>::zero(e1);
        for (auto& v : f.values) v = random_gauss(rng);
        for (const Pairing& p : {Pairing::tr(), Pairing::psi(), Pairing::hermitian()}) {
            const auto [lhs, rhs] = poisson_check(d, f, p);
            CHECK(lhs == rhs);
        }
    }

    // larger mixed shape
    const SpaceShape s{1, 1, 1};
    for (int k = 0; k < 10; ++k) {
        const AdditiveCode c = random_additive_code(s, rng);
        auto f = FunctionTable<MixedVector>::zero(s);
        for (auto& v : f.values) v = random_gauss(rng);
        const auto [lhs, rhs] = poisson_check(c, f, Pairing::tr());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("complete transform evaluated at Gaussian-integer points", "[enumerators]") {
    const AdditiveCode d = code_d();

    // all variables set to 1 count the dual
    VariableAssignment ones;
    for (auto& v : ones.x) v = GaussInt(1);
    for (auto& v : ones.y) v = GaussInt(1);
    for (auto& v : ones.z) v = GaussInt(1);
    CHECK(complete_transform_eval(d, ones, Pairing::tr()) ==
          std::pair{GaussInt(4), GaussInt(4)});

    // weight monomials at (A, B) = (1, 0) count only the zero word
    VariableAssignment at10;
    for (int i = 0; i < 16; ++i)
        at10.x[i] = weight(e4_from_index(i)) == 0 ? GaussInt(1) : GaussInt(0);
    for (int i = 0; i < 4; ++i) {
        at10.y[i] = weight(f4_from_index(i)) == 0 ? GaussInt(1) : GaussInt(0);
        at10.z[i] = weight(Z4(i)) == 0 ? GaussInt(1) : GaussInt(0);
    }
    CHECK(complete_transform_eval(d, at10, Pairing::tr()) ==
          std::pair{GaussInt(1), GaussInt(1)});

    Rng rng(41);
    for (int k = 0; k < 25; ++k) {
        const auto [lhs, rhs] = complete_transform_eval(d, random_assignment(rng), Pairing::tr());
        CHECK(lhs == rhs);
    }
    for (int k = 0; k < 10; ++k) {
        const AdditiveCode c = random_additive_code({1, 1, 1}, rng);
        for (int j = 0; j < 3; ++j) {
            const auto [lhs, rhs] =
                complete_transform_eval(c, random_assignment(rng), Pairing::tr());
            CHECK(lhs == rhs);
        }
    }
}
