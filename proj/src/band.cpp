#include "hibs/band.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hibs {

const char *to_string(Region r) {
    switch (r) {
    case Region::R1:
        return "R1";
    case Region::R2:
        return "R2";
    case Region::R3:
        return "R3";
    }
    return "?";
}

bool FrequencyBand::in_region(Region r) const {
    return std::find(regions.begin(), regions.end(), r) != regions.end();
}

std::string FrequencyBand::label() const {
    std::ostringstream os;
    os << low_mhz << "-" << high_mhz << " MHz";
    return os.str();
}

const std::vector<FrequencyBand> &hibs_band_plan() {
    using enum Region;
    static const std::vector<FrequencyBand> plan{
        {1885, 1980, false, {R1, R2, R3}, false},
        {2010, 2025, false, {R1, R3}, false},
        {2110, 2170, true, {R1, R3}, false},
        {2110, 2160, true, {R2}, false},
        {694, 960, false, {R1, R2, R3}, true},
        {1710, 1885, false, {R1, R2, R3}, true},
        {2500, 2690, false, {R1, R2}, true},
        {2500, 2655, false, {R3}, true},
    };
    return plan;
}

BandCheck validate_band(double frequency_hz, Region region, Direction direction) {
    const double mhz = frequency_hz / 1e6;
    const FrequencyBand *nearest = nullptr;
    double nearest_gap = std::numeric_limits<double>::infinity();
    for (const auto &band : hibs_band_plan()) {
        if (band.candidate || !band.in_region(region)) {
            continue;
        }
        if (direction == Direction::DL && !band.downlink_allowed) {
            continue;
        }
        if (band.contains(mhz)) {
            return {};
        }
        const double gap = std::min(std::abs(mhz - band.low_mhz), std::abs(mhz - band.high_mhz));
        if (gap < nearest_gap) {
            nearest_gap = gap;
            nearest = &band;
        }
    }

    BandCheck check;
    check.status = BandStatus::Warning;
    std::ostringstream os;
    os << mhz << " MHz is outside the HIBS " << to_string(direction) << " bands for Region "
       << std::string(to_string(region)).substr(1);
    if (nearest != nullptr) {
        check.nearest_band = nearest->label();
        os << "; nearest permitted band " << check.nearest_band;
    }
    for (const auto &band : hibs_band_plan()) {
        if (band.candidate && band.in_region(region) && band.contains(mhz)) {
            os << "; WRC-23 AI 1.4 candidate (" << band.label() << ")";
            break;
        }
    }
    check.message = os.str();
    return check;
}

} // namespace hibs
