#include "speclab/config.hpp"

#include <fstream>
#include <sstream>

#include "speclab/errors.hpp"

namespace speclab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Config::json parse_value(const std::string& text, const std::string& key) {
    std::string t = trim(text);
    if (t.empty()) throw ConfigError("empty value for key '" + key + "'");
    try {
        return Config::json::parse(t);
    } catch (const Config::json::parse_error&) {
        return Config::json(t); // bare word: string
    }
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

Config Config::parse_text(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not 'key = value': " + line);
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + " has no key");
        c.kv_[key] = parse_value(line.substr(eq + 1), key);
    }
    return c;
}

void Config::set_kv(const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--set expects key=value, got: " + assignment);
    std::string key = trim(assignment.substr(0, eq));
    kv_[key] = parse_value(assignment.substr(eq + 1), key);
}

void Config::set(const std::string& key, json value) { kv_[key] = std::move(value); }

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

const Config::json& Config::raw(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

double Config::number(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

double Config::number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

long Config::integer(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_number_integer())
        throw ConfigError("config key '" + key + "' must be an integer");
    return v.get<long>();
}

long Config::integer(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
}

uint64_t Config::uinteger(const std::string& key, uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ConfigError("config key '" + key + "' must be a nonnegative integer");
    return v.get<uint64_t>();
}

bool Config::boolean(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be a bool");
    return v.get<bool>();
}

std::string Config::str(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

std::string Config::str(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
}

std::vector<double> Config::number_list(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_array()) throw ConfigError("config key '" + key + "' must be a list");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number())
            throw ConfigError("config key '" + key + "' must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<double> Config::number_list(const std::string& key,
                                        std::vector<double> fallback) const {
    return has(key) ? number_list(key) : fallback;
}

void Config::require_known(const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : kv_)
        if (!allowed.count(key))
            throw ConfigError("unknown config key '" + key + "'");
}

std::string Config::render() const {
    std::ostringstream os;
    for (const auto& [key, value] : kv_)
        os << key << " = " << value.dump() << "\n";
    return os.str();
}

namespace {

cplx complex_from_json(const Config::json& v, const std::string& key) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    throw ConfigError("config key '" + key + "' must be a number or [re, im]");
}

} // namespace

Symbol1D symbol_from_config(const Config& c, const std::string& prefix,
                            std::set<std::string>* known_keys) {
    auto key = [&prefix](const std::string& s) { return prefix + "." + s; };
    if (known_keys) {
        for (const char* k : {"name", "scale", "shift", "amp", "grid_size",
                              "order", "analytic_hint"})
            known_keys->insert(key(k));
    }
    const std::string name = c.str(key("name"), "exp_ix");
    const int grid = static_cast<int>(c.integer(key("grid_size"), 33));
    const bool analytic = c.boolean(key("analytic_hint"), true);

    if (name == "exp_ix") {
        cplx scale = c.has(key("scale"))
                         ? complex_from_json(c.raw(key("scale")), key("scale"))
                         : cplx(1.0, 0.0);
        Symbol1D s = make_exp_ix(scale, grid);
        s.analytic_hint = analytic;
        return s;
    }
    if (name == "shifted_cos") {
        cplx shift = c.has(key("shift"))
                         ? complex_from_json(c.raw(key("shift")), key("shift"))
                         : cplx(0.0, 0.0);
        Symbol1D s = make_shifted_cos(shift, c.number(key("amp"), 1.0), grid);
        s.analytic_hint = analytic;
        return s;
    }
    if (name == "schrodinger_iv") {
        Symbol1D s = make_schrodinger_iv(c.number(key("amp"), 1.0), grid);
        s.analytic_hint = analytic;
        return s;
    }
    if (name == "custom") {
        const long order = c.integer(key("order"));
        if (order < 0) throw ConfigError("symbol order must be >= 0");
        std::vector<const Config::json*> arrays;
        int target = grid;
        for (long k = 0; k <= order; ++k) {
            std::string ck = prefix + ".coeff[" + std::to_string(k) + "].fourier";
            if (known_keys) known_keys->insert(ck);
            const Config::json& arr = c.raw(ck);
            if (!arr.is_array() || arr.size() % 2 == 0)
                throw ConfigError("'" + ck + "' must list an odd number of [re, im] modes");
            arrays.push_back(&arr);
            target = std::max(target, static_cast<int>(arr.size()));
        }
        std::vector<PeriodicFunction> coeffs;
        const int offset = (target - 1) / 2;
        for (long k = 0; k <= order; ++k) {
            const Config::json& arr = *arrays[k];
            const int half = (static_cast<int>(arr.size()) - 1) / 2;
            Vec fc = Vec::Zero(target);
            for (int m = -half; m <= half; ++m)
                fc(m + offset) = complex_from_json(arr[m + half], "coeff list");
            coeffs.push_back(PeriodicFunction::from_fourier(std::move(fc)));
        }
        return Symbol1D(std::move(coeffs), analytic);
    }
    throw ConfigError("unknown symbol name '" + name + "'");
}

uint64_t file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot checksum missing file: " + path);
    uint64_t hash = 0xCBF29CE484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001B3ULL;
        }
        if (!in) break;
    }
    return hash;
}

} // namespace speclab
