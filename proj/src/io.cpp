#include "dominion/io.hpp"

#include <fstream>

#include "dominion/errors.hpp"

namespace dominion {

namespace {

const char* kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::Int: return "int";
        case WitnessKind::Rainbow: return "rainbow";
        case WitnessKind::Edge: return "edge";
    }
    return "int";
}

const char* label_name(std::uint8_t l) {
    static const char* names[] = {"", "a", "b", "ab"};
    return names[l & 3];
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::vector<std::vector<int>> int_lists(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) bad(std::string("missing array \"") + key + "\"");
    std::vector<std::vector<int>> out;
    for (const auto& s : j[key]) {
        if (!s.is_array()) bad(std::string("\"") + key + "\" must hold arrays");
        out.emplace_back();
        for (const auto& x : s) {
            if (!x.is_number_integer()) bad(std::string("\"") + key + "\" entries must be integers");
            out.back().push_back(x.get<int>());
        }
    }
    return out;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

json value_json(const Value& v) { return v.finite() ? json(v.get()) : json("infinity"); }

json rational_json(const Rational& r) {
    if (r.denominator() == 1) return json(r.numerator());
    return json(to_string(r));
}

json witness_json(Param p, const Witness& w) {
    json values = json::array();
    for (auto x : w.values) {
        if (w.kind == WitnessKind::Rainbow) values.push_back(label_name(x));
        else values.push_back(static_cast<int>(x));
    }
    return json{{"parameter", info(p).name}, {"kind", kind_name(w.kind)}, {"values", values}};
}

ParsedWitness witness_from_json(const json& j) {
    if (!j.is_object()) bad("witness must be an object");
    if (!j.contains("parameter") || !j["parameter"].is_string()) bad("witness needs a \"parameter\" string");
    auto p = param_from_name(j["parameter"].get<std::string>());
    if (!p) throw Error(ErrorCode::UnknownName, "unknown parameter " + j["parameter"].get<std::string>());
    WitnessKind expected = kind_for(*p);
    if (j.contains("kind") && j["kind"] != kind_name(expected))
        throw Error(ErrorCode::WitnessShapeMismatch, "kind does not match parameter");
    if (!j.contains("values") || !j["values"].is_array()) bad("witness needs a \"values\" array");
    std::vector<std::uint8_t> values;
    for (const auto& x : j["values"]) {
        if (expected == WitnessKind::Rainbow) {
            if (!x.is_string()) bad("rainbow labels are strings");
            auto s = x.get<std::string>();
            std::uint8_t l = 0;
            for (char c : s) {
                if (c == 'a') l |= kA;
                else if (c == 'b') l |= kB;
                else bad("bad rainbow label \"" + s + "\"");
            }
            values.push_back(l);
        } else {
            if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() > 255) bad("values must be small integers");
            values.push_back(static_cast<std::uint8_t>(x.get<int>()));
        }
    }
    return {*p, Witness{expected, std::move(values)}};
}

SetCoverInstance set_cover_from_json(const json& j) {
    if (!j.is_object()) bad("set cover must be an object");
    SetCoverInstance out{int_field(j, "ground"), int_lists(j, "sets")};
    validate(out);
    return out;
}

json set_cover_json(const SetCoverInstance& j) { return json{{"ground", j.ground}, {"sets", j.sets}}; }

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object()) bad("hypergraph must be an object");
    Hypergraph h;
    if (j.contains("vertices")) h = {int_field(j, "vertices"), int_lists(j, "edges")};
    else h = {int_field(j, "ground"), int_lists(j, "sets")};
    validate(h);
    return h;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

json json_argument(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            bad(e.what());
        }
    }
    return read_json_file(text);
}

}  // namespace dominion
