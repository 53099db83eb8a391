#include "dsum/io.hpp"

#include "dsum/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace dsum::io {

using json = nlohmann::ordered_json;

namespace {

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_from(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational as \"a/b\" string or integer, got " + j.dump());
}

CycloNum cyclonum_from(const json& j) {
    if (!j.is_object()) return CycloNum(rational_from(j));
    if (!j.contains("level") || !j.contains("coeffs") || !j["level"].is_number_integer() || !j["coeffs"].is_array())
        throw ParseError("cyclotomic number needs integer 'level' and array 'coeffs': " + j.dump());
    const long long level = j["level"].get<long long>();
    if (level < 1) throw ParseError("cyclotomic level must be >= 1");
    std::vector<Rational> c;
    for (const auto& x : j["coeffs"]) c.push_back(rational_from(x));
    try {
        return CycloNum(level, std::move(c));
    } catch (const InvalidParam& e) {
        throw ParseError(e.what());
    }
}

json cyclonum_to(const CycloNum& x) {
    json j;
    j["level"] = x.level();
    json c = json::array();
    for (const auto& r : x.coeffs()) c.push_back(r.str());
    j["coeffs"] = std::move(c);
    return j;
}

std::vector<long long> int_range(const json& j, const char* key) {
    std::vector<long long> v;
    if (j.is_array()) {
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw ParseError(std::string("'") + key + "' must hold integers");
            v.push_back(x.get<long long>());
        }
        return v;
    }
    if (j.is_object() && j.contains("from") && j.contains("to") && j["from"].is_number_integer() &&
        j["to"].is_number_integer()) {
        for (long long i = j["from"].get<long long>(); i <= j["to"].get<long long>(); ++i) v.push_back(i);
        return v;
    }
    throw ParseError(std::string("'") + key + "' must be an integer list or {\"from\": a, \"to\": b}");
}

bool is_integer_param(const std::string& key) {
    return key == "m" || key == "n" || key == "r" || key == "p" || key == "T";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CycloNum parse_cyclonum(std::string_view json_text) {
    // A bare a/b is accepted too, for command-line use.
    if (!json_text.empty() && json_text.front() != '{' && json_text.front() != '"')
        return CycloNum(Rational::parse(json_text));
    return cyclonum_from(parse_text(json_text));
}

std::string cyclonum_json(const CycloNum& x) { return cyclonum_to(x).dump(); }

PeriodicSeq parse_sequence(std::string_view json_text) {
    const json j = parse_text(json_text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("values") ||
        !j["values"].is_array())
        throw ParseError("sequence file needs integer 'n' and array 'values'");
    const long long n = j["n"].get<long long>();
    if (n < 2) throw ParseError("sequence period must be >= 2");
    std::vector<CycloNum> values;
    for (const auto& x : j["values"]) {
        CycloNum v = cyclonum_from(x);
        if (v.level() != 1 && v.level() != n)
            throw ParseError("sequence value at level " + std::to_string(v.level()) + " in a sequence of period " +
                             std::to_string(n));
        values.push_back(std::move(v));
    }
    if (static_cast<long long>(values.size()) != n)
        throw ParseError("sequence declares n = " + std::to_string(n) + " but has " + std::to_string(values.size()) +
                         " values");
    return PeriodicSeq(n, std::move(values));
}

std::string sequence_json(const PeriodicSeq& C) {
    json j;
    j["n"] = C.n();
    json v = json::array();
    for (const auto& x : C.values()) {
        if (auto r = x.to_rational())
            v.push_back(r->str());
        else
            v.push_back(cyclonum_to(x));
    }
    j["values"] = std::move(v);
    return j.dump();
}

GridFile parse_grid(std::string_view json_text, std::optional<Identity> identity) {
    const json j = parse_text(json_text);
    if (!j.is_object()) throw ParseError("grid spec must be a JSON object");
    std::optional<Identity> from_file;
    if (j.contains("identity")) {
        if (!j["identity"].is_string()) throw ParseError("'identity' must be a string");
        try {
            from_file = parse_identity(j["identity"].get<std::string>());
        } catch (const InvalidGrid& e) {
            throw ParseError(e.what());
        }
    }
    if (identity && from_file && *identity != *from_file)
        throw InvalidGrid("grid file is for '" + std::string(to_string(*from_file)) + "' but '" +
                          std::string(to_string(*identity)) + "' was requested");
    const auto id = identity ? identity : from_file;
    if (!id) throw InvalidGrid("no identity given");

    std::uint64_t seed = 0;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ParseError("'seed' must be a nonnegative integer");
        seed = j["seed"].get<std::uint64_t>();
    }
    GridFile out{default_grid(*id, seed), std::nullopt};
    GridSpec& g = out.spec;
    for (const auto& [key, value] : j.items()) {
        if (key == "identity" || key == "seed") continue;
        if (key == "campaign") {
            if (!value.is_string()) throw ParseError("'campaign' must be a string");
            g.campaign = value.get<std::string>();
        } else if (key == "m") {
            g.m = int_range(value, "m");
        } else if (key == "n") {
            g.n = int_range(value, "n");
        } else if (key == "r") {
            g.r = int_range(value, "r");
        } else if (key == "p") {
            g.p = int_range(value, "p");
        } else if (key == "lambda") {
            if (!value.is_array()) throw ParseError("'lambda' must be a list");
            g.lambdas.clear();
            for (const auto& x : value) g.lambdas.push_back(rational_from(x));
        } else if (key == "sequences") {
            if (!value.is_array()) throw ParseError("'sequences' must be a list of strings");
            g.sequences.clear();
            for (const auto& x : value) {
                if (!x.is_string()) throw ParseError("'sequences' must be a list of strings");
                g.sequences.push_back(x.get<std::string>());
            }
        } else if (key == "T") {
            if (!value.is_number_unsigned()) throw ParseError("'T' must be a nonnegative integer");
            g.order = value.get<std::size_t>();
        } else if (key == "mutation_case") {
            if (!value.is_number_unsigned()) throw ParseError("'mutation_case' must be a nonnegative integer");
            out.mutation_case = value.get<std::size_t>();
        } else {
            throw ParseError("unknown grid key '" + key + "'");
        }
    }
    validate(g);
    return out;
}

std::string report_json(const std::string& campaign, const std::vector<IdentityCase>& cases) {
    json j;
    j["campaign"] = campaign;
    json arr = json::array();
    for (const auto& c : cases) {
        json jc;
        jc["identity"] = c.identity;
        json params = json::object();
        for (const auto& [k, v] : c.params) {
            if (is_integer_param(k))
                params[k] = std::stoll(v);
            else
                params[k] = v;
        }
        jc["params"] = std::move(params);
        jc["status"] = std::string(to_string(c.status));
        if (!c.reason.empty()) jc["reason"] = c.reason;
        if (!c.lhs.empty()) jc["lhs"] = c.lhs;
        if (!c.rhs.empty()) jc["rhs"] = c.rhs;
        arr.push_back(std::move(jc));
    }
    j["cases"] = std::move(arr);
    const Summary s = summarize(cases);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    return j.dump(1) + "\n";
}

std::string report_csv(const std::vector<IdentityCase>& cases) {
    static const std::vector<std::string> columns{"m", "n", "r", "p", "lambda", "seq", "T"};
    std::string out = "identity,m,n,r,p,lambda,seq,T,status,reason,lhs,rhs\n";
    for (const auto& c : cases) {
        out += csv_field(c.identity);
        for (const auto& col : columns) {
            out += ',';
            auto it = std::find_if(c.params.begin(), c.params.end(), [&](const auto& kv) { return kv.first == col; });
            if (it != c.params.end()) out += csv_field(it->second);
        }
        out += ',' + std::string(to_string(c.status));
        out += ',' + csv_field(c.reason);
        out += ',' + csv_field(c.lhs);
        out += ',' + csv_field(c.rhs);
        out += '\n';
    }
    return out;
}

}  // namespace dsum::io
