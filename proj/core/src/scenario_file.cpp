#include "scatter/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace scatter {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

double parse_real(std::string_view s, int line, std::string_view what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError(line, std::string(what) + ": expected a real number, got '" + std::string(s) + "'");
    return v;
}

int parse_int(std::string_view s, int line, std::string_view what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError(line, std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::string canonical_kind(std::string_view k, int line) {
    static const std::vector<std::pair<std::string_view, std::string_view>> table = {
        {"twist", "twist"},
        {"overshoot", "overshoot"},
        {"pseudo-virtual", "pseudo-virtual"},
        {"pseudo", "pseudo-virtual"},
        {"virtual-I", "virtual-I"},
        {"overshoot-I", "virtual-I"},
        {"virtual-II", "virtual-II"},
        {"overshoot-II", "virtual-II"},
        {"overshoot-pseudo", "overshoot-pseudo"},
    };
    for (const auto& [alias, name] : table)
        if (k == alias) return std::string(name);
    throw ParseError(line, "unknown seed kind '" + std::string(k) +
                               "' (twist, overshoot, pseudo-virtual, virtual-I, virtual-II, overshoot-pseudo)");
}

double* param_slot(Params& p, std::string_view name) {
    if (name == "h") return &p.h;
    if (name == "mu") return &p.mu;
    if (name == "g") return &p.g;
    return nullptr;
}

void set_param(ScenarioFile& f, std::string_view name, double v, int line, std::vector<std::string>& seen) {
    const auto names = parameter_names(f.family);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string list;
        for (auto n : names) list += (list.empty() ? "" : ", ") + std::string(n);
        throw ParseError(line, "parameter '" + std::string(name) + "' not used by " +
                                   std::string(family_name(f.family)) + " (expects " + list + ")");
    }
    if (std::find(seen.begin(), seen.end(), name) != seen.end())
        throw ParseError(line, "parameter '" + std::string(name) + "' given twice");
    seen.emplace_back(name);
    *param_slot(f.params, name) = v;
}

void require_params(const ScenarioFile& f, const std::vector<std::string>& seen) {
    for (auto n : parameter_names(f.family))
        if (std::find(seen.begin(), seen.end(), n) == seen.end())
            throw ParseError(0, "params: missing '" + std::string(n) + "' for " + std::string(family_name(f.family)));
}

Family family_or_throw(std::string_view name, int line) {
    const auto fam = parse_family(name);
    if (!fam)
        throw ParseError(line, "unknown family '" + std::string(name) +
                                   "' (rm, soliton, hst, morse, eckart, hpt, coulomb)");
    return *fam;
}

bool matches(SeedKind k, std::string_view want) { return seed_kind_name(k) == want; }

SeedSolution resolve_seed(const PotentialSpec& spec, const SeedRequest& req) {
    try {
        if (req.kind == "twist") return make_twist_seed(spec, req.degree, req.twist);
        if (req.kind == "overshoot") {
            if (req.twist) throw ParseError(req.line, "overshoot seeds take no twist");
            return make_overshoot_seed(spec, req.degree);
        }
    } catch (const SeedError& e) {
        throw ParseError(req.line, e.what());
    }
    std::vector<std::string> refusals;
    std::vector<SeedSolution> candidates;
    const auto twists = req.twist ? std::vector<Twist>{*req.twist} : family_twists(spec.family());
    for (Twist t : twists) {
        try {
            candidates.push_back(make_twist_seed(spec, req.degree, t));
        } catch (const SeedError& e) {
            refusals.emplace_back(e.what());
        }
    }
    if (!req.twist) {
        try {
            candidates.push_back(make_overshoot_seed(spec, req.degree));
        } catch (const SeedError& e) {
            refusals.emplace_back(e.what());
        }
    }
    for (const auto& c : candidates)
        if (matches(c.kind, req.kind)) return c;
    std::ostringstream os;
    os << "no " << req.kind << " seed of degree " << req.degree << " for " << family_name(spec.family());
    for (const auto& c : candidates)
        os << "; " << (c.origin == SeedOrigin::Twist ? "twist" : "overshoot") << " gives " << seed_kind_name(c.kind);
    for (const auto& r : refusals) os << "; " << r;
    throw ParseError(req.line, os.str());
}

std::string grid_text(const GridSpec& g) {
    return format_real(g.min) + ":" + format_real(g.max) + ":" + std::to_string(g.points);
}

std::string seed_text(const SeedRequest& s) {
    std::string out = s.kind + ":" + std::to_string(s.degree);
    if (s.twist) out += ":" + std::string(twist_name(*s.twist));
    return out;
}

int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

GridSpec grid_from_json(const json& j, std::string_view field) {
    if (!j.is_object()) throw ParseError(0, std::string(field) + ": expected an object {min, max, points}");
    GridSpec g;
    try {
        g.min = j.at("min").get<double>();
        g.max = j.at("max").get<double>();
        g.points = j.at("points").get<int>();
    } catch (const json::exception&) {
        throw ParseError(0, std::string(field) + ": needs numeric min, max and integer points");
    }
    if (g.points < 1) throw ParseError(0, std::string(field) + ".points must be >= 1");
    if (g.points == 1 && g.min != g.max) throw ParseError(0, std::string(field) + ": one point needs min == max");
    return g;
}

}  // namespace

std::vector<double> GridSpec::values() const {
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = points == 1 ? min : min + (max - min) * i / (points - 1);
    return v;
}

std::vector<std::string_view> parameter_names(Family f) {
    switch (f) {
        case Family::RosenMorse:
        case Family::HyperbolicSymTop:
        case Family::Morse: return {"h", "mu"};
        case Family::Soliton: return {"h"};
        case Family::Eckart: return {"g", "mu"};
        case Family::HyperbolicPT: return {"h", "g"};
        case Family::Coulomb: return {"g"};
    }
    return {};
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

SeedRequest parse_seed(std::string_view token, int line) {
    const auto parts = split(trim(token), ':');
    if (parts.size() < 2 || parts.size() > 3)
        throw ParseError(line, "seed '" + std::string(token) + "': expected kind:degree[:twist]");
    SeedRequest s;
    s.line = line;
    s.kind = canonical_kind(parts[0], line);
    s.degree = parse_int(parts[1], line, "seed degree");
    if (s.degree < 0) throw ParseError(line, "seed degree must be >= 0");
    if (parts.size() == 3) {
        s.twist = parse_twist(parts[2]);
        if (!s.twist) throw ParseError(line, "unknown twist '" + std::string(parts[2]) + "' (h, g, gh)");
    }
    return s;
}

std::vector<SeedRequest> parse_seed_list(std::string_view text, int line) {
    std::vector<SeedRequest> out;
    for (auto tok : split(text, ','))
        if (!tok.empty()) out.push_back(parse_seed(tok, line));
    return out;
}

GridSpec parse_grid(std::string_view text, int line) {
    const auto parts = split(trim(text), ':');
    if (parts.size() != 3) throw ParseError(line, "grid '" + std::string(text) + "': expected min:max:points");
    GridSpec g;
    g.min = parse_real(parts[0], line, "grid min");
    g.max = parse_real(parts[1], line, "grid max");
    g.points = parse_int(parts[2], line, "grid points");
    if (g.points < 1) throw ParseError(line, "grid points must be >= 1");
    if (g.points == 1 && g.min != g.max) throw ParseError(line, "one-point grid needs min == max");
    return g;
}

ScenarioFile parse_scenario_text(std::string_view text) {
    ScenarioFile f;
    bool have_family = false;
    std::string section;
    std::vector<std::string> seen;
    std::vector<std::pair<int, std::pair<std::string, double>>> pending;  // params before family
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line;
        if (const auto c = raw.find('#'); c != std::string_view::npos) raw = raw.substr(0, c);
        const auto s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ParseError(line, "unterminated section header");
            section = std::string(trim(s.substr(1, s.size() - 2)));
            if (section != "params" && section != "seeds" && section != "grids")
                throw ParseError(line, "unknown section [" + section + "] (params, seeds, grids)");
            continue;
        }
        if (section == "seeds") {
            for (auto& r : parse_seed_list(s, line)) f.seeds.push_back(r);
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) throw ParseError(line, "expected key = value");
        const auto key = trim(s.substr(0, eq));
        const auto val = trim(s.substr(eq + 1));
        if (section.empty()) {
            if (key != "family") throw ParseError(line, "unknown top-level key '" + std::string(key) + "'");
            if (have_family) throw ParseError(line, "family given twice");
            f.family = family_or_throw(val, line);
            have_family = true;
        } else if (section == "params") {
            pending.push_back({line, {std::string(key), parse_real(val, line, key)}});
        } else {
            if (key == "k") {
                if (f.k_grid) throw ParseError(line, "k grid given twice");
                f.k_grid = parse_grid(val, line);
            } else if (key == "x") {
                if (f.x_grid) throw ParseError(line, "x grid given twice");
                f.x_grid = parse_grid(val, line);
            } else {
                throw ParseError(line, "unknown grid '" + std::string(key) + "' (k, x)");
            }
        }
    }
    if (!have_family) throw ParseError(0, "missing 'family = ...'");
    for (const auto& [ln, kv] : pending) set_param(f, kv.first, kv.second, ln, seen);
    require_params(f, seen);
    return f;
}

ScenarioFile parse_scenario_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte), std::string("JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(0, "JSON scenario must be an object");
    for (const auto& [key, _] : j.items())
        if (key != "family" && key != "params" && key != "seeds" && key != "grids")
            throw ParseError(0, "unknown field '" + key + "'");
    ScenarioFile f;
    if (!j.contains("family") || !j["family"].is_string()) throw ParseError(0, "family: required string");
    f.family = family_or_throw(j["family"].get<std::string>(), 0);
    std::vector<std::string> seen;
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw ParseError(0, "params: expected an object");
        for (const auto& [key, v] : j["params"].items()) {
            if (!v.is_number()) throw ParseError(0, "params." + key + ": expected a number");
            set_param(f, key, v.get<double>(), 0, seen);
        }
    }
    require_params(f, seen);
    if (j.contains("seeds")) {
        if (!j["seeds"].is_array()) throw ParseError(0, "seeds: expected an array");
        int i = 0;
        for (const auto& s : j["seeds"]) {
            const std::string where = "seeds[" + std::to_string(i++) + "]";
            if (s.is_string()) {
                f.seeds.push_back(parse_seed(s.get<std::string>()));
                continue;
            }
            if (!s.is_object() || !s.contains("kind") || !s.contains("degree") || !s["kind"].is_string() ||
                !s["degree"].is_number_integer())
                throw ParseError(0, where + ": expected {kind, degree[, twist]}");
            std::string tok = s["kind"].get<std::string>() + ":" + std::to_string(s["degree"].get<int>());
            if (s.contains("twist")) {
                if (!s["twist"].is_string()) throw ParseError(0, where + ".twist: expected a string");
                tok += ":" + s["twist"].get<std::string>();
            }
            try {
                f.seeds.push_back(parse_seed(tok));
            } catch (const ParseError& e) {
                throw ParseError(0, where + ": " + e.what());
            }
        }
    }
    if (j.contains("grids")) {
        if (!j["grids"].is_object()) throw ParseError(0, "grids: expected an object");
        for (const auto& [key, g] : j["grids"].items()) {
            if (key == "k") f.k_grid = grid_from_json(g, "grids.k");
            else if (key == "x") f.x_grid = grid_from_json(g, "grids.x");
            else throw ParseError(0, "grids." + key + ": unknown grid (k, x)");
        }
    }
    return f;
}

ScenarioFile parse_scenario(std::string_view text) {
    const auto b = text.find_first_not_of(" \t\r\n");
    if (b != std::string_view::npos && text[b] == '{') return parse_scenario_json(text);
    return parse_scenario_text(text);
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize(const ScenarioFile& f) {
    std::ostringstream os;
    os << "family = " << family_name(f.family) << "\n\n[params]\n";
    Params p = f.params;
    for (auto n : parameter_names(f.family)) os << n << " = " << format_real(*param_slot(p, n)) << "\n";
    os << "\n[seeds]\n";
    for (const auto& s : f.seeds) os << seed_text(s) << "\n";
    if (f.k_grid || f.x_grid) {
        os << "\n[grids]\n";
        if (f.k_grid) os << "k = " << grid_text(*f.k_grid) << "\n";
        if (f.x_grid) os << "x = " << grid_text(*f.x_grid) << "\n";
    }
    return os.str();
}

std::string serialize_json(const ScenarioFile& f) {
    json j;
    j["family"] = std::string(family_name(f.family));
    Params p = f.params;
    j["params"] = json::object();
    for (auto n : parameter_names(f.family)) j["params"][std::string(n)] = *param_slot(p, n);
    j["seeds"] = json::array();
    for (const auto& s : f.seeds) {
        json e{{"kind", s.kind}, {"degree", s.degree}};
        if (s.twist) e["twist"] = std::string(twist_name(*s.twist));
        j["seeds"].push_back(e);
    }
    if (f.k_grid || f.x_grid) {
        j["grids"] = json::object();
        if (f.k_grid) j["grids"]["k"] = {{"min", f.k_grid->min}, {"max", f.k_grid->max}, {"points", f.k_grid->points}};
        if (f.x_grid) j["grids"]["x"] = {{"min", f.x_grid->min}, {"max", f.x_grid->max}, {"points", f.x_grid->points}};
    }
    return j.dump(2) + "\n";
}

PotentialSpec build_spec(const ScenarioFile& f) { return PotentialSpec::make(f.family, f.params); }

Scenario build_scenario(const ScenarioFile& f) {
    const PotentialSpec spec = build_spec(f);
    std::vector<SeedSolution> seeds;
    for (const auto& r : f.seeds) seeds.push_back(resolve_seed(spec, r));
    return make_scenario(spec, std::move(seeds));
}

}  // namespace scatter
