// Command-line front end: dual codes, enumerators, representation
// conversion, and verification campaigns over the identities.
//
// Exit codes: 0 all checks passed, 1 identity failure, 2 parse/usage error,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <doob/doob.hpp>

namespace {

using namespace doob;

constexpr int exit_ok = 0;
constexpr int exit_identity_failure = 1;
constexpr int exit_parse_error = 2;
constexpr int exit_budget_error = 3;

struct Options {
    std::string file;
    std::string rep;          // "", "e4", "z4"
    std::string pairing;      // "", "tr", "psi", "herm", "L:l1,lw", "plus", "minus"
    uint64_t seed = 0;
    uint64_t budget = default_budget;
    bool json = false;
    std::string shape_spec;   // "m,n',n''"
    uint64_t random_count = 0;
    bool paper_examples = false;
    bool proposition1 = false;
};

SpaceShape parse_shape_spec(const std::string& spec) {
    int vals[3];
    char c1, c2;
    std::istringstream iss(spec);
    if (!(iss >> vals[0] >> c1 >> vals[1] >> c2 >> vals[2]) || c1 != ',' || c2 != ',' ||
        !(iss >> std::ws).eof())
        throw parse_error("bad shape '" + spec + "', expected m,n',n''");
    SpaceShape s{vals[0], vals[1], vals[2]};
    if (!s.valid()) throw parse_error("bad shape '" + spec + "': negative counts");
    return s;
}

Pairing parse_e4_pairing(const std::string& name) {
    if (name.empty() || name == "tr") return Pairing::tr();
    if (name == "psi") return Pairing::psi();
    if (name == "herm") return Pairing::hermitian();
    if (name.rfind("L:", 0) == 0) {
        int l1, lw;
        char comma;
        std::istringstream iss(name.substr(2));
        if (!(iss >> l1 >> comma >> lw) || comma != ',' || !(iss >> std::ws).eof())
            throw parse_error("bad pairing '" + name + "', expected L:<l1>,<lw>");
        const LMap l{Z4(l1), Z4(lw)};
        if (!l.surjective()) throw parse_error("pairing '" + name + "' is not surjective");
        return Pairing::with_l(l);
    }
    throw parse_error("pairing '" + name + "' is not valid for the e4 representation");
}

ZPairing parse_z_pairing(const std::string& name) {
    if (name.empty() || name == "plus") return ZPairing::plus();
    if (name == "minus") return ZPairing::minus();
    throw parse_error("pairing '" + name + "' is not valid for the z4 representation");
}

CodeFileData load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_code_file(in);
}

std::string format_poly(const BivariateEnum& en, const char* a = "A", const char* b = "B") {
    std::string out;
    for (int w = 0; w <= en.total_degree; ++w) {
        if (en.coeffs[w] == 0) continue;
        if (!out.empty()) out += " + ";
        const int ea = en.total_degree - w;
        std::string term;
        if (en.coeffs[w] != 1 || (ea == 0 && w == 0)) term = en.coeffs[w].str();
        auto power = [&term](const char* var, int e) {
            if (e == 0) return;
            if (!term.empty()) term += " ";
            term += var;
            if (e > 1) term += "^" + std::to_string(e);
        };
        power(a, ea);
        power(b, w);
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string format_coeffs(const BivariateEnum& en) {
    std::string out = "[";
    for (int w = 0; w <= en.total_degree; ++w) {
        if (w) out += ", ";
        out += en.coeffs[w].str();
    }
    return out + "]";
}

template <class Code>
void print_code_listing(const std::string& label, const Code& code) {
    std::cout << label << ": size " << code.size() << "\n";
    if (code.size() <= 64) {
        for (const auto& e : code.elements()) std::cout << "  " << format_vector(e) << "\n";
    } else {
        std::cout << "  (listing suppressed; generators)\n";
        for (const auto& g : code.generators()) std::cout << "  gen " << format_vector(g) << "\n";
    }
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

template <class Code, class PairingT>
int run_dual(const Code& code, const PairingT& pairing, const Options& opt) {
    const auto dual_code = dual_under(code, pairing, opt.budget);
    const uint64_t ambient = ambient_size_checked(code.shape(), opt.budget);
    const bool card_ok = code.size() * dual_code.size() == ambient;
    if (opt.json) {
        nlohmann::json j{{"pairing", pairing.name()},
                         {"ambient", ambient},
                         {"code", code_to_json(code)},
                         {"dual", code_to_json(dual_code)},
                         {"cardinality_ok", card_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_code_listing("code", code);
        print_code_listing("dual (pairing " + pairing.name() + ")", dual_code);
        std::cout << "ambient: " << ambient << "\n"
                  << "cardinality: " << code.size() << " * " << dual_code.size() << " == "
                  << ambient << (card_ok ? " ok" : " VIOLATED") << "\n";
    }
    return card_ok ? exit_ok : exit_identity_failure;
}

int cmd_dual(const Options& opt) {
    const CodeFileData data = load_code_file(opt.file);
    if (data.z_representation) {
        if (!opt.rep.empty() && opt.rep != "z4")
            throw parse_error("file is in the z4 representation");
        const ZCode code = ZCode::from_generators(data.shape, data.z_generators, opt.budget);
        return run_dual(code, parse_z_pairing(opt.pairing), opt);
    }
    if (!opt.rep.empty() && opt.rep != "e4") throw parse_error("file is in the e4 representation");
    const AdditiveCode code = additive_closure(data.shape, data.mixed_generators, opt.budget);
    return run_dual(code, parse_e4_pairing(opt.pairing), opt);
}

// ---------------------------------------------------------------------------
// enum
// ---------------------------------------------------------------------------

int cmd_enum(const Options& opt) {
    const CodeFileData data = load_code_file(opt.file);
    BivariateEnum w, cw;
    std::optional<CompleteEnum> ce;
    uint64_t size = 0;
    if (data.z_representation) {
        const ZCode code = ZCode::from_generators(data.shape, data.z_generators, opt.budget);
        w = weight_enumerator(code);
        cw = coweight_enumerator(code);
        size = code.size();
    } else {
        const AdditiveCode code =
            additive_closure(data.shape, data.mixed_generators, opt.budget);
        w = weight_enumerator(code);
        cw = coweight_enumerator(code);
        ce = complete_weight_enumerator(code);
        size = code.size();
    }
    if (opt.json) {
        nlohmann::json j{{"size", size},
                         {"weight_enumerator", to_json(w)},
                         {"coweight_enumerator", to_json(cw)}};
        if (ce) j["complete_enumerator"] = to_json(*ce);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "size: " << size << "\n"
                  << "weight enumerator:   " << format_coeffs(w) << "  = " << format_poly(w)
                  << "\n"
                  << "coweight enumerator: " << format_coeffs(cw) << "  = " << format_poly(cw)
                  << "\n";
        if (ce) {
            std::cout << "complete enumerator:\n";
            for (const auto& [profile, c] : ce->profiles) {
                std::cout << "  " << c.str();
                for (int i = 0; i < 16; ++i)
                    if (profile[i]) {
                        std::cout << " X_" << token(e4_from_index(i));
                        if (profile[i] > 1) std::cout << "^" << int(profile[i]);
                    }
                for (int i = 0; i < 4; ++i)
                    if (profile[16 + i]) {
                        std::cout << " Y_" << token(f4_from_index(i));
                        if (profile[16 + i] > 1) std::cout << "^" << int(profile[16 + i]);
                    }
                for (int i = 0; i < 4; ++i)
                    if (profile[20 + i]) {
                        std::cout << " Z_" << token(Z4(i));
                        if (profile[20 + i] > 1) std::cout << "^" << int(profile[20 + i]);
                    }
                std::cout << "\n";
            }
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

// Translates the generators as given; the coordinate maps are mutually
// inverse, so converting twice reproduces the canonicalized input.
int cmd_convert(const Options& opt) {
    const CodeFileData data = load_code_file(opt.file);
    const SpaceShape s = data.shape;
    std::string out;
    if (data.z_representation) {
        out = "space " + std::to_string(s.m) + " " + std::to_string(s.nprime) + " " +
              std::to_string(s.nsec) + "\n";
        for (const auto& g : data.z_generators) out += "gen " + format_vector(from_zrep(g)) + "\n";
    } else {
        out = "zspace " + std::to_string(s.m) + " " + std::to_string(s.nprime) + " " +
              std::to_string(s.nsec) + "\n";
        for (const auto& g : data.mixed_generators) out += "gen " + format_vector(to_zrep(g)) + "\n";
    }
    std::cout << out;
    return exit_ok;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

bool report_line(const std::string& label, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << label << "\n";
    return ok;
}

int check_paper_examples(const Options& opt) {
    const SpaceShape s{1, 0, 0};
    const AdditiveCode c = additive_closure(
        s, {parse_mixed_vector(s, "2:0"), parse_mixed_vector(s, "0:2")}, opt.budget);
    const AdditiveCode d = additive_closure(s, {parse_mixed_vector(s, "3:1")}, opt.budget);
    const AdditiveCode cd = dual(c, Pairing::tr(), opt.budget);
    const AdditiveCode dd = dual(d, Pairing::tr(), opt.budget);

    auto coeffs = [](std::vector<long> v) {
        BivariateEnum en(static_cast<int>(v.size()) - 1);
        for (size_t i = 0; i < v.size(); ++i) en.coeffs[i] = v[i];
        return en;
    };
    auto elements_are = [](const AdditiveCode& code, const std::vector<std::string>& toks) {
        if (code.size() != toks.size()) return false;
        for (size_t i = 0; i < toks.size(); ++i)
            if (format_vector(code.elements()[i]) != toks[i]) return false;
        return true;
    };

    int failures = 0;
    auto check = [&failures](const std::string& label, bool ok) {
        if (!report_line(label, ok)) ++failures;
    };
    check("W(C) = A^2 + 3 B^2", weight_enumerator(c) == coeffs({1, 0, 3}));
    check("W(D) = A^2 + 3 B^2", weight_enumerator(d) == coeffs({1, 0, 3}));
    check("dual(C) = C = {0:0, 2:0, 0:2, 2:2}", cd == c);
    check("dual(D) = {0:0, 0:1, 0:2, 0:3}", elements_are(dd, {"0:0", "0:1", "0:2", "0:3"}));
    check("W(dual C) = A^2 + 3 B^2", weight_enumerator(cd) == coeffs({1, 0, 3}));
    check("W(dual D) = A^2 + 2 A B + B^2", weight_enumerator(dd) == coeffs({1, 2, 1}));
    check("coweight(dual C) = A^2 + 3 B^2", coweight_enumerator(cd) == coeffs({1, 0, 3}));
    check("coweight(dual D) = A^2 + 3 B^2", coweight_enumerator(dd) == coeffs({1, 0, 3}));
    check("transform identities on C", check_code_identities(c, Pairing::tr(), opt.budget).all_pass());
    check("transform identities on D", check_code_identities(d, Pairing::tr(), opt.budget).all_pass());

    Rng rng(opt.seed);
    bool eval_ok = true;
    for (int k = 0; k < 20; ++k) {
        const VariableAssignment a = random_assignment(rng);
        const auto [lc, rc] = complete_transform_eval(c, a, Pairing::tr(), opt.budget);
        const auto [ld, rd] = complete_transform_eval(d, a, Pairing::tr(), opt.budget);
        eval_ok = eval_ok && lc == rc && ld == rd;
    }
    check("complete transform evaluation on C and D (20 assignments)", eval_ok);

    std::cout << "summary: " << (11 - failures) << "/11 checks passed\n";
    return failures == 0 ? exit_ok : exit_identity_failure;
}

int check_proposition1(const Options& opt) {
    const uint64_t count = opt.random_count ? opt.random_count : 50;
    const std::vector<SpaceShape> shapes{{1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {0, 2, 0}};
    Rng rng(opt.seed);
    uint64_t failures = 0;
    for (uint64_t k = 0; k < count; ++k) {
        const SpaceShape s = shapes[k % shapes.size()];
        const AdditiveCode code = random_linear_code(s, rng, opt.budget);
        const bool ok = check_l_duality(code, opt.budget);
        std::ostringstream label;
        label << "[" << (k + 1) << "/" << count << "] shape " << s.m << "," << s.nprime << ","
              << s.nsec << " size " << code.size() << ": all 12 L-duals equal tr-dual";
        if (!report_line(label.str(), ok)) ++failures;
    }
    std::cout << "summary: " << (count - failures) << "/" << count << " codes passed\n";
    return failures == 0 ? exit_ok : exit_identity_failure;
}

template <class Code, class PairingT, class CheckFn>
int run_check_loop(const std::string& rep, const PairingT& pairing, uint64_t count,
                   CheckFn&& make_and_check) {
    uint64_t failures = 0;
    for (uint64_t k = 0; k < count; ++k) {
        const auto [size, report] = make_and_check();
        std::ostringstream label;
        label << "[" << (k + 1) << "/" << count << "] rep " << rep << " pairing "
              << pairing.name() << " size " << size << ":";
        for (const auto& [name, ok] : report.items)
            if (!ok) label << " " << name << "!";
        if (!report_line(label.str() + (report.all_pass() ? " all identities hold" : ""),
                         report.all_pass()))
            ++failures;
    }
    std::cout << "summary: " << (count - failures) << "/" << count << " codes passed\n";
    return failures == 0 ? exit_ok : exit_identity_failure;
}

int cmd_check(const Options& opt) {
    if (opt.paper_examples) return check_paper_examples(opt);
    if (opt.proposition1) return check_proposition1(opt);

    const std::string rep = opt.rep.empty() ? "e4" : opt.rep;
    if (rep != "e4" && rep != "z4") throw parse_error("--rep must be e4 or z4");
    const SpaceShape shape =
        opt.shape_spec.empty() ? SpaceShape{1, 1, 1} : parse_shape_spec(opt.shape_spec);

    if (!opt.file.empty()) {
        // check the single code from a file
        const CodeFileData data = load_code_file(opt.file);
        if (data.z_representation) {
            const ZCode code = ZCode::from_generators(data.shape, data.z_generators, opt.budget);
            const ZPairing pairing = parse_z_pairing(opt.pairing);
            return run_check_loop<ZCode>("z4", pairing, 1, [&] {
                return std::pair{code.size(), check_z_code_identities(code, pairing, opt.budget)};
            });
        }
        const AdditiveCode code =
            additive_closure(data.shape, data.mixed_generators, opt.budget);
        const Pairing pairing = parse_e4_pairing(opt.pairing);
        return run_check_loop<AdditiveCode>("e4", pairing, 1, [&] {
            return std::pair{code.size(), check_code_identities(code, pairing, opt.budget)};
        });
    }

    const uint64_t count = opt.random_count ? opt.random_count : 100;
    Rng rng(opt.seed);
    if (rep == "z4") {
        const ZPairing pairing = parse_z_pairing(opt.pairing);
        return run_check_loop<ZCode>("z4", pairing, count, [&] {
            const ZCode code = random_z_code(shape, rng, opt.budget);
            return std::pair{code.size(), check_z_code_identities(code, pairing, opt.budget)};
        });
    }
    const Pairing pairing = parse_e4_pairing(opt.pairing);
    return run_check_loop<AdditiveCode>("e4", pairing, count, [&] {
        const AdditiveCode code = random_additive_code(shape, rng, opt.budget);
        return std::pair{code.size(), check_code_identities(code, pairing, opt.budget)};
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact duals, enumerators, and MacWilliams-identity checks for codes in "
                 "Doob schemes"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub, bool with_file, bool file_required) {
        if (with_file) {
            auto* f = sub->add_option("file", opt.file, "code file");
            if (file_required) f->required();
        }
        sub->add_option("--rep", opt.rep, "representation: e4 or z4");
        sub->add_option("--pairing", opt.pairing,
                        "pairing: tr, psi, herm, L:<l1>,<lw> (e4) or plus, minus (z4)");
        sub->add_option("--seed", opt.seed, "seed for randomized runs");
        sub->add_option("--budget", opt.budget, "ambient-size cap for exhaustive scans");
        sub->add_flag("--json", opt.json, "emit JSON");
    };

    auto* sub_dual = app.add_subcommand("dual", "compute the dual code");
    add_common(sub_dual, true, true);
    auto* sub_enum = app.add_subcommand("enum", "compute weight/coweight/complete enumerators");
    add_common(sub_enum, true, true);
    auto* sub_check = app.add_subcommand("check", "verify the duality identities");
    add_common(sub_check, true, false);
    sub_check->add_option("--shape", opt.shape_spec, "shape m,n',n'' for random codes");
    sub_check->add_option("--random", opt.random_count, "number of random codes");
    sub_check->add_flag("--paper-examples", opt.paper_examples,
                        "run the pinned worked-example fixture");
    sub_check->add_flag("--proposition1", opt.proposition1,
                        "check L-duality against tr-duality on random linear codes");
    auto* sub_convert =
        app.add_subcommand("convert", "rewrite a code file in the other representation");
    add_common(sub_convert, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse_error;
    }

    try {
        if (sub_dual->parsed()) return cmd_dual(opt);
        if (sub_enum->parsed()) return cmd_enum(opt);
        if (sub_check->parsed()) return cmd_check(opt);
        if (sub_convert->parsed()) return cmd_convert(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse_error;
    }
    return exit_ok;
}
