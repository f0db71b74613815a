// Scenario configuration files.
//
// INI-style text: `[section]` headers, `key = value` lines, `;` comments.
// Lists are comma separated, booleans are true/false, regions R1/R2/R3.
// Missing keys keep their defaults; unknown sections or keys are errors.
// See docs/config.md for the full key reference.
#pragma once

#include "hibs/scenario.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace hibs {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string &what, std::string key = {}, int line = 0)
        : std::runtime_error(what), key_(std::move(key)), line_(line) {}

    /// "section.key" of the offending entry, if any.
    const std::string &key() const { return key_; }
    /// 1-based line of a parse error, 0 otherwise.
    int line() const { return line_; }

private:
    std::string key_;
    int line_;
};

ScenarioConfig load_config(const std::filesystem::path &path);
ScenarioConfig parse_config(const std::string &text);

/// Throws ConfigError naming the first invalid key.
void validate_config(const ScenarioConfig &cfg);

/// Every key, in file order, with round-trip exact numbers.
std::string serialize_config(const ScenarioConfig &cfg);

/// Same content as serialize_config, as {section: {key: value}}.
nlohmann::ordered_json config_to_json(const ScenarioConfig &cfg);

} // namespace hibs
