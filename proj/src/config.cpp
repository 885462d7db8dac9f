// config.cpp — key = value parsing, overrides and figure presets

#include "hopfield/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hopfield {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const int i = int(v);
    if (double(i) != v)
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

SweepOutput parse_output(const std::string& key, const std::string& name) {
    if (name == "spectrum") return SweepOutput::Spectrum;
    if (name == "decay") return SweepOutput::Decay;
    if (name == "heat") return SweepOutput::Heat;
    if (name == "lme") return SweepOutput::Lme;
    if (name == "virtual") return SweepOutput::Virtual;
    if (name == "entropy") return SweepOutput::Entropy;
    throw ConfigError("key '" + key + "': unknown output '" + name + "'");
}

} // namespace

ConfigMap ConfigMap::from_text(const std::string& text, const std::string& origin) {
    ConfigMap map;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        map.values[key] = value;
    }
    return map;
}

ConfigMap ConfigMap::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

void ConfigMap::set(const std::string& key_equals_value) {
    const auto eq = key_equals_value.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("--set expects key=value, got '" + key_equals_value + "'");
    values[trim(key_equals_value.substr(0, eq))] = trim(key_equals_value.substr(eq + 1));
}

SweepConfig make_sweep_config(const ConfigMap& map, SweepConfig cfg) {
    for (const auto& [key, value] : map.values) {
        if (key == "omega_c") cfg.scenario.omega_c = parse_double(key, value);
        else if (key == "omega_b") cfg.scenario.omega_b = parse_double(key, value);
        else if (key == "g") cfg.scenario.g = parse_double(key, value);
        else if (key == "gamma_L") cfg.scenario.gamma_L = parse_double(key, value);
        else if (key == "gamma_R") cfg.scenario.gamma_R = parse_double(key, value);
        else if (key == "T_L") cfg.scenario.T_L = parse_double(key, value);
        else if (key == "T_R") cfg.scenario.T_R = parse_double(key, value);
        else if (key == "spectral_density") {
            if (value == "flat") cfg.scenario.spectral_density = SpectralDensity::Flat;
            else if (value == "ohmic") cfg.scenario.spectral_density = SpectralDensity::Ohmic;
            else throw ConfigError("key 'spectral_density': expected flat|ohmic");
        }
        else if (key == "g_min") cfg.g_min = parse_double(key, value);
        else if (key == "g_max") cfg.g_max = parse_double(key, value);
        else if (key == "g_points") cfg.g_points = parse_int(key, value);
        else if (key == "g_scale") {
            if (value == "log") cfg.g_scale = GScale::Log;
            else if (value == "linear") cfg.g_scale = GScale::Linear;
            else throw ConfigError("key 'g_scale': expected log|linear");
        }
        else if (key == "outputs") {
            cfg.outputs.clear();
            std::istringstream is(value);
            std::string item;
            while (std::getline(is, item, ',')) {
                item = trim(item);
                if (!item.empty()) cfg.outputs.insert(parse_output(key, item));
            }
            if (cfg.outputs.empty()) throw ConfigError("key 'outputs': empty list");
        }
        else if (key == "threads") cfg.threads = parse_int(key, value);
        else if (key == "provenance_line") cfg.provenance_line = parse_bool(key, value);
        else if (key == "ed_n_max") cfg.verify.ed.n_max = parse_int(key, value);
        else if (key == "ed_convergence_tol")
            cfg.verify.ed.convergence_tol = parse_double(key, value);
        else if (key == "ed_dimension_cap")
            cfg.verify.ed.dimension_cap = parse_int(key, value);
        else if (key == "liouville_n_max")
            cfg.verify.liouville.n_max = parse_int(key, value);
        else if (key == "liouville_n_max_cap")
            cfg.verify.liouville.n_max_cap = parse_int(key, value);
        else if (key == "verify_T_L") cfg.verify.liouville_T_L = parse_double(key, value);
        else if (key == "verify_T_R") cfg.verify.liouville_T_R = parse_double(key, value);
        else if (key == "gibbs_T") cfg.verify.gibbs_T = parse_double(key, value);
        else if (key == "spectrum_levels")
            cfg.verify.spectrum_levels = parse_int(key, value);
        else throw ConfigError("unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

SweepConfig make_sweep_config(const ConfigMap& map) {
    // Default scenario: the resonant junction driven by the standard bath set.
    SweepConfig base;
    base.scenario = {1.0, 1.0, 0.1, 0.05, 0.05, 5.0, 0.5, SpectralDensity::Flat};
    return make_sweep_config(map, base);
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3-resonant", "fig3-offres", "fig4-resonant", "fig4-offres"};
}

SweepConfig preset_config(const std::string& name) {
    SweepConfig cfg;
    cfg.g_min = 1e-3;
    cfg.g_max = 1e2;
    cfg.g_points = 201;
    cfg.g_scale = GScale::Log;
    if (name == "fig2") {
        // Decay-rate sweep with the right bath disconnected; gamma_L is the
        // normalization unit so the columns read as Gamma/gamma_L.
        cfg.scenario = {1.0, 0.97, 0.0, 1.0, 0.0, 0.0, 0.0, SpectralDensity::Flat};
        cfg.outputs = {SweepOutput::Decay};
    } else if (name == "fig3-resonant" || name == "fig3-offres") {
        cfg.scenario = {1.0, name == "fig3-resonant" ? 1.0 : 0.2, 0.0,
                        0.05, 0.05, 5.0, 0.5, SpectralDensity::Flat};
        cfg.outputs = {SweepOutput::Heat, SweepOutput::Lme, SweepOutput::Entropy};
    } else if (name == "fig4-resonant" || name == "fig4-offres") {
        cfg.scenario = {1.0, name == "fig4-resonant" ? 1.0 : 0.2, 0.0,
                        0.05, 0.05, 0.0, 0.0, SpectralDensity::Flat};
        cfg.outputs = {SweepOutput::Virtual};
        cfg.g_min = 1e-2;
        cfg.g_max = 1e1;
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return cfg;
}

std::string preset_summary(const std::string& name) {
    const SweepConfig cfg = preset_config(name);
    std::ostringstream os;
    os << name << ": omega_b=" << cfg.scenario.omega_b
       << " gamma_L=" << cfg.scenario.gamma_L << " gamma_R=" << cfg.scenario.gamma_R
       << " T_L=" << cfg.scenario.T_L << " T_R=" << cfg.scenario.T_R << " g in ["
       << cfg.g_min << ", " << cfg.g_max << "] x" << cfg.g_points << " (log), outputs:";
    for (const auto& c : sweep_columns(cfg)) os << " " << c;
    return os.str();
}

} // namespace hopfield
