#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "speclab/symbol.hpp"
#include "speclab/types.hpp"

namespace speclab {

// Flat dotted-key configuration: one "key = value" per line, values in JSON
// syntax (bare words are taken as strings), '#' starts a comment.  Every
// subcommand declares its key set; unknown keys are rejected at dispatch.
class Config {
public:
    using json = nlohmann::json;

    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);

    // "key=value" as given on the command line.
    void set_kv(const std::string& assignment);
    void set(const std::string& key, json value);

    bool has(const std::string& key) const;

    double number(const std::string& key) const;
    double number(const std::string& key, double fallback) const;
    long integer(const std::string& key) const;
    long integer(const std::string& key, long fallback) const;
    uint64_t uinteger(const std::string& key, uint64_t fallback) const;
    bool boolean(const std::string& key, bool fallback) const;
    std::string str(const std::string& key) const;
    std::string str(const std::string& key, const std::string& fallback) const;
    std::vector<double> number_list(const std::string& key) const;
    std::vector<double> number_list(const std::string& key,
                                    std::vector<double> fallback) const;
    const json& raw(const std::string& key) const;

    // Throws ConfigError naming the first key outside the allowed set.
    void require_known(const std::set<std::string>& allowed) const;

    // Sorted "key = value" lines; parseable by parse_text.
    std::string render() const;

    const std::map<std::string, json>& entries() const { return kv_; }

private:
    std::map<std::string, json> kv_;
};

// Builds a symbol from config keys under the given prefix:
//   <p>.name       one of exp_ix | shifted_cos | schrodinger_iv | custom
//   <p>.scale      [re, im]        (exp_ix)
//   <p>.shift      [re, im]        (shifted_cos)
//   <p>.amp        number          (shifted_cos, schrodinger_iv)
//   <p>.grid_size  odd integer
//   <p>.order      integer         (custom)
//   <p>.coeff[k].fourier = [[re, im], ...]   coefficients of c_k, modes
//                                            -B..B in order (custom)
//   <p>.analytic_hint  bool
Symbol1D symbol_from_config(const Config& c, const std::string& prefix,
                            std::set<std::string>* known_keys = nullptr);

// 64-bit FNV-1a over a file's bytes, for the run manifest.
uint64_t file_checksum(const std::string& path);

} // namespace speclab
