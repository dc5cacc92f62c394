#pragma once

// Text formats: vectors as three '|'-separated segments of space-separated
// tokens (empty segment written '-', empty trailing segments omitted), code
// files with a `space m n' n''` or `zspace m n' n''` header followed by
// `gen <vector>` lines, and JSON emission for enumerators.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "enumerators.hpp"

namespace doob {

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream iss{std::string(s)};
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

// Split a vector body into its up-to-three segments of tokens.  A segment
// consisting of a single '-' (or nothing) is empty; missing trailing
// segments are empty.
inline std::array<std::vector<std::string>, 3> split_segments(std::string_view body) {
    std::array<std::vector<std::string>, 3> seg;
    size_t part = 0, pos = 0;
    while (true) {
        const size_t bar = body.find('|', pos);
        const std::string_view piece =
            bar == std::string_view::npos ? body.substr(pos) : body.substr(pos, bar - pos);
        if (part >= 3) throw parse_error("vector has more than three segments");
        auto toks = split_tokens(piece);
        if (toks.size() == 1 && toks[0] == "-") toks.clear();
        seg[part++] = std::move(toks);
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return seg;
}

inline std::string join_segments(const std::array<std::vector<std::string>, 3>& seg) {
    int last = 2;
    while (last >= 0 && seg[last].empty()) --last;
    if (last < 0) return "-";
    std::string out;
    for (int i = 0; i <= last; ++i) {
        if (i) out += " | ";
        if (seg[i].empty()) {
            out += "-";
            continue;
        }
        for (size_t j = 0; j < seg[i].size(); ++j) {
            if (j) out += " ";
            out += seg[i][j];
        }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Vector text format
// ---------------------------------------------------------------------------

inline std::string format_vector(const MixedVector& v) {
    std::array<std::vector<std::string>, 3> seg;
    for (E4Elem e : v.estar) seg[0].push_back(token(e));
    for (F4Elem f : v.fprime) seg[1].push_back(token(f));
    for (Z4 z : v.zsec) seg[2].push_back(token(z));
    return detail::join_segments(seg);
}

inline std::string format_vector(const ZVector& v) {
    std::array<std::vector<std::string>, 3> seg;
    for (const auto& q : v.quads)
        seg[0].push_back(token(q[0]) + ":" + token(q[1]));
    for (const auto& b : v.bits)
        seg[1].push_back(std::to_string(b[0].v) + ":" + std::to_string(b[1].v));
    for (Z4 z : v.tail) seg[2].push_back(token(z));
    return detail::join_segments(seg);
}

inline MixedVector parse_mixed_vector(const SpaceShape& shape, std::string_view body) {
    const auto seg = detail::split_segments(body);
    if (static_cast<int>(seg[0].size()) != shape.m ||
        static_cast<int>(seg[1].size()) != shape.nprime ||
        static_cast<int>(seg[2].size()) != shape.nsec)
        throw parse_error("vector '" + std::string(body) + "' does not match shape " +
                          std::to_string(shape.m) + " " + std::to_string(shape.nprime) + " " +
                          std::to_string(shape.nsec));
    MixedVector v;
    for (const auto& t : seg[0]) v.estar.push_back(parse_e4_token(t));
    for (const auto& t : seg[1]) v.fprime.push_back(parse_f4_token(t));
    for (const auto& t : seg[2]) v.zsec.push_back(parse_z4_token(t));
    return v;
}

inline ZVector parse_z_vector(const SpaceShape& shape, std::string_view body) {
    const auto seg = detail::split_segments(body);
    if (static_cast<int>(seg[0].size()) != shape.m ||
        static_cast<int>(seg[1].size()) != shape.nprime ||
        static_cast<int>(seg[2].size()) != shape.nsec)
        throw parse_error("vector '" + std::string(body) + "' does not match shape " +
                          std::to_string(shape.m) + " " + std::to_string(shape.nprime) + " " +
                          std::to_string(shape.nsec));
    ZVector v;
    for (const auto& t : seg[0]) {
        const E4Elem e = parse_e4_token(t);  // same a:b digit syntax
        v.quads.push_back({e.a, e.b});
    }
    for (const auto& t : seg[1]) {
        if (t.size() != 3 || t[1] != ':' || t[0] < '0' || t[0] > '1' || t[2] < '0' || t[2] > '1')
            throw parse_error("bad Z2 pair token '" + t + "', expected a:b with digits 0-1");
        v.bits.push_back({Z2(t[0] - '0'), Z2(t[2] - '0')});
    }
    for (const auto& t : seg[2]) v.tail.push_back(parse_z4_token(t));
    return v;
}

// ---------------------------------------------------------------------------
// Code files
// ---------------------------------------------------------------------------

struct CodeFileData {
    bool z_representation{false};
    SpaceShape shape;
    std::vector<MixedVector> mixed_generators;  // when !z_representation
    std::vector<ZVector> z_generators;          // when z_representation
};

inline CodeFileData parse_code_file(std::istream& in) {
    CodeFileData data;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto toks = detail::split_tokens(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if ((toks[0] != "space" && toks[0] != "zspace") || toks.size() != 4)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected header 'space m n' n''' or 'zspace m n' n'''");
            data.z_representation = toks[0] == "zspace";
            try {
                data.shape = {std::stoi(toks[1]), std::stoi(toks[2]), std::stoi(toks[3])};
            } catch (const std::exception&) {
                throw parse_error("line " + std::to_string(lineno) + ": bad shape numbers");
            }
            if (!data.shape.valid())
                throw parse_error("line " + std::to_string(lineno) + ": shape out of range");
            have_header = true;
            continue;
        }
        if (toks[0] != "gen")
            throw parse_error("line " + std::to_string(lineno) + ": expected 'gen <vector>'");
        const size_t at = line.find("gen");
        const std::string body = line.substr(at + 3);
        try {
            if (data.z_representation)
                data.z_generators.push_back(parse_z_vector(data.shape, body));
            else
                data.mixed_generators.push_back(parse_mixed_vector(data.shape, body));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_header) throw parse_error("missing 'space'/'zspace' header line");
    return data;
}

inline CodeFileData parse_code_file_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_code_file(in);
}

/// Canonical file form: header plus the code's reduced generating set.
inline std::string format_code_file(const AdditiveCode& code) {
    const SpaceShape s = code.shape();
    std::string out = "space " + std::to_string(s.m) + " " + std::to_string(s.nprime) + " " +
                      std::to_string(s.nsec) + "\n";
    for (const auto& g : code.generators()) out += "gen " + format_vector(g) + "\n";
    return out;
}

inline std::string format_code_file(const ZCode& code) {
    const SpaceShape s = code.shape();
    std::string out = "zspace " + std::to_string(s.m) + " " + std::to_string(s.nprime) + " " +
                      std::to_string(s.nsec) + "\n";
    for (const auto& g : code.generators()) out += "gen " + format_vector(g) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// JSON emission
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const BivariateEnum& en) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : en.coeffs) coeffs.push_back(c.convert_to<uint64_t>());
    return {{"N", en.total_degree}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const CompleteEnum& ce) {
    nlohmann::json profiles = nlohmann::json::array();
    for (const auto& [profile, c] : ce.profiles) {
        nlohmann::json exps = nlohmann::json::object();
        for (int i = 0; i < 16; ++i)
            if (profile[i]) exps["X_" + token(e4_from_index(i))] = profile[i];
        for (int i = 0; i < 4; ++i)
            if (profile[16 + i]) exps["Y_" + token(f4_from_index(i))] = profile[16 + i];
        for (int i = 0; i < 4; ++i)
            if (profile[20 + i]) exps["Z_" + token(Z4(i))] = profile[20 + i];
        profiles.push_back({{"exponents", exps}, {"coeff", c.convert_to<uint64_t>()}});
    }
    return {{"profiles", profiles}};
}

template <class Code>
nlohmann::json code_to_json(const Code& code) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& e : code.elements()) elems.push_back(format_vector(e));
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : code.generators()) gens.push_back(format_vector(g));
    return {{"size", code.size()}, {"generators", gens}, {"elements", elems}};
}

}  // namespace doob
