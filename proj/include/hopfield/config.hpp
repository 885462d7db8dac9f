// config.hpp — Flat key = value configuration and figure presets

#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfield/sweep.hpp"

namespace hopfield {

// Ordered key -> value map from a config file and/or --set overrides.
struct ConfigMap {
    std::map<std::string, std::string> values;

    // Parses "key = value" lines; '#' starts a comment. ConfigError carries
    // the offending line number.
    static ConfigMap from_file(const std::string& path);
    static ConfigMap from_text(const std::string& text, const std::string& origin);

    // Applies a single "key=value" override (the --set flag).
    void set(const std::string& key_equals_value);
};

// Builds a validated SweepConfig from defaults + config map. Unknown keys and
// malformed values raise ConfigError naming the key.
SweepConfig make_sweep_config(const ConfigMap& map);
SweepConfig make_sweep_config(const ConfigMap& map, SweepConfig base);

std::vector<std::string> preset_names();
// ConfigError for unknown names.
SweepConfig preset_config(const std::string& name);
std::string preset_summary(const std::string& name);

} // namespace hopfield
