// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  The CLI binary path is taken from argv[1] for the determinism
// and exit-code checks.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <doob/doob.hpp>

using namespace doob;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

MixedVector vec(const SpaceShape& s, const std::string& body) {
    return parse_mixed_vector(s, body);
}

const SpaceShape e1{1, 0, 0};
AdditiveCode code_c() { return additive_closure(e1, {vec(e1, "2:0"), vec(e1, "0:2")}); }
AdditiveCode code_d() { return additive_closure(e1, {vec(e1, "3:1")}); }

BivariateEnum coeffs(std::vector<long> v) {
    BivariateEnum en(static_cast<int>(v.size()) - 1);
    for (size_t i = 0; i < v.size(); ++i) en.coeffs[i] = v[i];
    return en;
}

const std::vector<SpaceShape> campaign_shapes{{1, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                              {1, 1, 1}, {2, 0, 0}, {0, 2, 2}};

// shared tallies filled by the campaign criteria and reported under the
// structural-invariants criterion
struct StructuralTally {
    uint64_t codes = 0;
    uint64_t cardinality_failures = 0;
    uint64_t double_dual_failures = 0;

    void absorb(const IdentityReport& r) {
        ++codes;
        for (const auto& [name, ok] : r.items) {
            if (name == "cardinality" && !ok) ++cardinality_failures;
            if (name == "double-dual" && !ok) ++double_dual_failures;
        }
    }
} structural;

uint64_t identity_failures(const IdentityReport& r) {
    uint64_t n = 0;
    for (const auto& [name, ok] : r.items) n += !ok;
    return n;
}

// ---------------------------------------------------------------------------

std::pair<bool, std::string> criterion1_counterexample() {
    const auto start = Clock::now();
    const AdditiveCode c = code_c(), d = code_d();
    const AdditiveCode cd = dual(c, Pairing::tr()), dd = dual(d, Pairing::tr());

    bool ok = weight_enumerator(c) == coeffs({1, 0, 3});
    ok = ok && weight_enumerator(d) == coeffs({1, 0, 3});
    ok = ok && cd == c;
    const AdditiveCode expected_dd =
        additive_closure(e1, {vec(e1, "0:1")});  // {0, w, 2w, -w}
    ok = ok && dd == expected_dd;
    ok = ok && weight_enumerator(cd) == coeffs({1, 0, 3});
    ok = ok && weight_enumerator(dd) == coeffs({1, 2, 1});
    ok = ok && coweight_enumerator(cd) == coeffs({1, 0, 3});
    ok = ok && coweight_enumerator(dd) == coeffs({1, 0, 3});

    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    std::ostringstream detail;
    detail << "counterexample quadruple exact, " << elapsed << " s";
    return {ok, detail.str()};
}

std::pair<bool, std::string> criterion2_theorems123() {
    const auto start = Clock::now();
    Rng rng(2024);
    uint64_t codes = 0, failures = 0, flipped_failures = 0;
    const EnumSubstitution flipped{1, 1, 1, -3};
    for (const SpaceShape& s : campaign_shapes)
        for (int k = 0; k < 34; ++k) {
            const AdditiveCode c = random_additive_code(s, rng);
            ++codes;

            const IdentityReport tr = check_code_identities(c, Pairing::tr());
            structural.absorb(tr);
            failures += identity_failures(tr);

            const IdentityReport psi = check_code_identities(c, Pairing::psi());
            structural.absorb(psi);
            failures += identity_failures(psi);

            if (s.nsec == 0) {
                const AdditiveCode lin = linear_closure(s, c.generators());
                const IdentityReport linr = check_code_identities(lin, Pairing::tr());
                structural.absorb(linr);
                failures += identity_failures(linr);
            }

            if (!check_code_identities(c, Pairing::tr(), default_budget, flipped).all_pass())
                ++flipped_failures;
        }
    const double elapsed = seconds_since(start);
    const bool ok = codes >= 200 && failures == 0 && flipped_failures >= 1 && elapsed < 60.0;
    std::ostringstream detail;
    detail << codes << " codes, " << failures << " identity failures, flipped substitution fails "
           << flipped_failures << " codes, " << elapsed << " s";
    return {ok, detail.str()};
}

std::pair<bool, std::string> criterion3_theorems45() {
    Rng rng(2025);
    uint64_t codes = 0, failures = 0;
    for (const SpaceShape& s : campaign_shapes)
        for (int k = 0; k < 34; ++k) {
            const ZCode c = random_z_code(s, rng);
            ++codes;
            const IdentityReport plus = check_z_code_identities(c, ZPairing::plus());
            structural.absorb(plus);
            failures += identity_failures(plus);
            const IdentityReport minus = check_z_code_identities(c, ZPairing::minus());
            structural.absorb(minus);
            failures += identity_failures(minus);
        }
    std::ostringstream detail;
    detail << codes << " codes, " << failures << " identity failures";
    return {codes >= 200 && failures == 0, detail.str()};
}

std::pair<bool, std::string> criterion4_l_duality() {
    Rng rng(2026);
    const std::vector<SpaceShape> shapes{{1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {0, 2, 0}};
    uint64_t codes = 0, failures = 0;
    for (const SpaceShape& s : shapes)
        for (int k = 0; k < 13; ++k) {
            ++codes;
            if (!check_l_duality(random_linear_code(s, rng))) ++failures;
        }
    std::ostringstream detail;
    detail << codes << " linear codes x 12 L-maps, " << failures << " failures";
    return {codes >= 50 && failures == 0, detail.str()};
}

std::pair<bool, std::string> criterion5_char_sums() {
    uint64_t checked = 0;
    try {
        for (int i = 0; i < 16; ++i) {
            char_sum_exponents(e4_from_index(i));
            ++checked;
        }
        for (int i = 0; i < 4; ++i) {
            f4_char_sum_exponents(f4_from_index(i));
            z4_char_sum_exponents(Z4(i));
            checked += 2;
        }
        for (int i = 0; i < 16; ++i) {
            z_char_sum_exponents(pair_from_index(i), ZPairing::plus());
            z_char_sum_exponents(pair_from_index(i), ZPairing::minus());
            checked += 2;
        }
    } catch (const std::logic_error& e) {
        return {false, std::string("identity violated: ") + e.what()};
    }
    return {checked == 56, std::to_string(checked) + " identities, exact polynomial equality"};
}

std::pair<bool, std::string> criterion6_poisson() {
    Rng rng(2027);
    const std::vector<SpaceShape> mixed_shapes{{1, 0, 0}, {0, 1, 1}, {1, 1, 0}};
    const std::vector<SpaceShape> flat_shapes{{1, 0, 0}, {1, 1, 0}, {0, 2, 0}};
    uint64_t pairs = 0, failures = 0;

    auto run_e4 = [&](const Pairing& p, const std::vector<SpaceShape>& shapes) {
        for (int k = 0; k < 100; ++k) {
            const SpaceShape s = shapes[k % shapes.size()];
            const AdditiveCode c = random_additive_code(s, rng);
            auto f = FunctionTable<MixedVector>::zero(s);
            for (auto& v : f.values) v = random_gauss(rng);
            const auto [lhs, rhs] = poisson_check(c, f, p);
            ++pairs;
            if (!(lhs == rhs)) ++failures;
        }
    };
    run_e4(Pairing::tr(), mixed_shapes);
    run_e4(Pairing::psi(), mixed_shapes);
    run_e4(Pairing::hermitian(), flat_shapes);

    for (const ZPairing p : {ZPairing::plus(), ZPairing::minus()})
        for (int k = 0; k < 100; ++k) {
            const SpaceShape s = mixed_shapes[k % mixed_shapes.size()];
            const ZCode c = random_z_code(s, rng);
            auto f = FunctionTable<ZVector>::zero(s);
            for (auto& v : f.values) v = random_gauss(rng);
            const auto [lhs, rhs] = poisson_check(c, f, p);
            ++pairs;
            if (!(lhs == rhs)) ++failures;
        }

    std::ostringstream detail;
    detail << pairs << " (code, function) pairs across 5 pairings, " << failures << " failures";
    return {pairs >= 500 && failures == 0, detail.str()};
}

std::pair<bool, std::string> criterion7_complete_transform() {
    Rng rng(2028);
    uint64_t evals = 0, failures = 0;
    auto run = [&](const AdditiveCode& c) {
        for (int k = 0; k < 20; ++k) {
            const auto [lhs, rhs] = complete_transform_eval(c, random_assignment(rng),
                                                            Pairing::tr());
            ++evals;
            if (!(lhs == rhs)) ++failures;
        }
    };
    run(code_c());
    run(code_d());
    for (int k = 0; k < 20; ++k) run(random_additive_code({1, 1, 1}, rng));
    std::ostringstream detail;
    detail << evals << " evaluations on 22 codes, " << failures << " failures";
    return {evals >= 440 && failures == 0, detail.str()};
}

std::pair<bool, std::string> criterion8_structural() {
    bool ok = true;
    std::ostringstream detail;

    detail << structural.codes << " campaign duals: " << structural.cardinality_failures
           << " cardinality, " << structural.double_dual_failures << " double-dual failures";
    ok = ok && structural.codes > 0 && structural.cardinality_failures == 0 &&
         structural.double_dual_failures == 0;

    const SpaceShape s{1, 1, 1};
    bool psi_twist_ok = true;
    for (const auto& x : enumerate_space(s))
        psi_twist_ok = psi_twist_ok && weight(x) == coweight(scale_e4_part(e4_psi, x));
    detail << "; wt=wa(psi x) " << (psi_twist_ok ? "holds" : "FAILS");
    ok = ok && psi_twist_ok;

    const GraphStats g = graph_stats({1, 0, 0});
    const bool srg_ok = g.srg && *g.srg == std::array<uint64_t, 4>{16, 6, 2, 2};
    detail << "; D(1,0) " << (srg_ok ? "is srg(16,6,2,2)" : "srg check FAILS");
    ok = ok && srg_ok;

    Rng rng(2029);
    bool herm_ok = true;
    for (int k = 0; k < 20; ++k) {
        const SpaceShape hs = k % 2 ? SpaceShape{1, 1, 0} : SpaceShape{2, 0, 0};
        const AdditiveCode c = random_linear_code(hs, rng);
        herm_ok = herm_ok && weight_enumerator(dual(c, Pairing::hermitian())) ==
                                 weight_enumerator(dual(c, Pairing::tr()));
    }
    detail << "; Hermitian/standard dual enumerators " << (herm_ok ? "match" : "DIFFER");
    ok = ok && herm_ok;

    return {ok, detail.str()};
}

// ---------------------------------------------------------------------------
// CLI determinism and exit codes
// ---------------------------------------------------------------------------

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::pair<bool, std::string> criterion9_cli(const std::string& cli) {
    if (cli.empty()) return {false, "CLI path not provided"};

    const fs::path dir = fs::temp_directory_path() / "doob-acceptance";
    fs::create_directories(dir);
    const auto write = [&dir](const char* name, const char* text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    const std::string code_d_file = write("d.code", "space 1 0 0\ngen 3:1\n");
    const std::string bad_file = write("bad.code", "volume 1 0 0\ngen 3:1\n");
    const std::string big_file = write("big.code", "space 3 3 3\n");

    const std::string quoted = "'" + cli + "'";
    const std::string campaign = quoted + " check --random 200 --seed 7 --shape 1,1,1 --pairing tr";

    std::ostringstream detail;
    bool ok = true;

    const CommandResult first = run_command(campaign);
    const CommandResult second = run_command(campaign);
    const bool deterministic = first.exit_code == 0 && second.exit_code == 0 &&
                               !first.output.empty() && first.output == second.output;
    detail << "campaign twice: " << (deterministic ? "byte-identical, exit 0" : "MISMATCH");
    ok = ok && deterministic;
    const bool summary_ok = first.output.find("summary: 200/200 codes passed") != std::string::npos;
    detail << "; " << (summary_ok ? "200/200 pass" : "campaign failures");
    ok = ok && summary_ok;

    const int ok_code = run_command(quoted + " enum " + code_d_file).exit_code;
    const int parse_code = run_command(quoted + " dual " + bad_file).exit_code;
    const int budget_code = run_command(quoted + " dual " + big_file).exit_code;
    const int paper_code = run_command(quoted + " check --paper-examples").exit_code;
    detail << "; exit codes enum=" << ok_code << " parse=" << parse_code
           << " budget=" << budget_code << " fixture=" << paper_code;
    ok = ok && ok_code == 0 && parse_code == 2 && budget_code == 3 && paper_code == 0;

    return {ok, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    int failures = 0;

    const auto report = [&failures](int id, const std::string& name,
                                    std::pair<bool, std::string> outcome) {
        std::cout << (outcome.first ? "PASS" : "FAIL") << " criterion " << id << " (" << name
                  << "): " << outcome.second << "\n";
        if (!outcome.first) ++failures;
    };

    auto guarded = [](auto&& fn) -> std::pair<bool, std::string> {
        try {
            return fn();
        } catch (const std::exception& e) {
            return {false, std::string("exception: ") + e.what()};
        }
    };

    report(1, "worked counterexample", guarded(criterion1_counterexample));
    report(2, "mixed-representation MacWilliams campaign", guarded(criterion2_theorems123));
    report(3, "pair-representation MacWilliams campaign", guarded(criterion3_theorems45));
    report(4, "L-duality equals tr-duality on linear codes", guarded(criterion4_l_duality));
    report(5, "character-sum identities", guarded(criterion5_char_sums));
    report(6, "summation identity over code/dual pairs", guarded(criterion6_poisson));
    report(7, "complete transform evaluation", guarded(criterion7_complete_transform));
    report(8, "structural invariants", guarded(criterion8_structural));
    report(9, "CLI determinism and exit codes", guarded([&] { return criterion9_cli(cli); }));

    if (failures) {
        std::cout << failures << " criteria FAILED\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
