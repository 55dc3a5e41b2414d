#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "adsi/augment.hpp"

namespace adsi {

/// Flat, serializable view of one CLI run: augmentation parameters plus
/// corpus paths, embedder selection, and output locations. Stored as
/// `key = value` lines with '#' comments; parse(serialize(c)) == c.
struct RunConfig {
    std::string input;
    std::string output;
    std::string report;
    std::string variant = "adsi";
    double alpha_min = 0.0;
    double alpha_max = 1.0;
    double beta_min = 0.01;
    double beta_max = 0.4;
    std::string orders = "1,2,3";
    double epsilon = kDefaultEpsilon;
    std::uint64_t seed = 0;
    bool clamp = true;
    std::string embedder = "builtin";

    bool operator==(const RunConfig&) const = default;

    /// Converts the augmentation-related fields, validating them.
    AugmentConfig to_augment_config() const;
};

RunConfig parse_run_config(std::istream& in);
RunConfig parse_run_config_file(const std::string& path);
std::string serialize_run_config(const RunConfig& config);

/// Parses a comma-separated order list such as "1,2,3".
std::vector<int> parse_orders(const std::string& text);

} // namespace adsi
