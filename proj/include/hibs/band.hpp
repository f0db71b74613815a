// Carrier frequency check against the HIBS service-link band plan.
#pragma once

#include "hibs/network.hpp"
#include "hibs/scenario.hpp"

#include <string>
#include <vector>

namespace hibs {

struct FrequencyBand {
    double low_mhz = 0;
    double high_mhz = 0;
    bool downlink_allowed = false;
    std::vector<Region> regions;
    bool candidate = false; // under study for WRC-23 agenda item 1.4

    bool contains(double mhz) const { return mhz >= low_mhz && mhz <= high_mhz; }
    bool in_region(Region r) const;
    std::string label() const;
};

enum class BandStatus { Ok, Warning };

struct BandCheck {
    BandStatus status = BandStatus::Ok;
    std::string message;
    std::string nearest_band; // e.g. "2110-2160 MHz"; empty when ok
};

/// Identified HIBS bands followed by the WRC-23 AI 1.4 candidate bands.
const std::vector<FrequencyBand> &hibs_band_plan();

/// Warnings never stop a simulation; they flag carriers outside the
/// identified bands for the region and link direction.
BandCheck validate_band(double frequency_hz, Region region, Direction direction);

const char *to_string(Region r);

} // namespace hibs
