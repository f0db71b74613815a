#include "hibs/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hibs {

const char *to_string(CellKind kind) {
    return kind == CellKind::HibsBeam ? "hibs" : "tn";
}

const char *to_string(Direction dir) {
    return dir == Direction::DL ? "DL" : "UL";
}

double tx_gain_toward(const Cell &cell, const Position &target) {
    const Vec3 d = target - cell.tx_position;
    if (const auto *ap = std::get_if<AperturePattern>(&cell.pattern)) {
        return aperture_gain(off_axis_angle(cell.boresight, d), *ap);
    }
    const auto &sp = std::get<SectorPattern>(cell.pattern);
    const double azimuth = rad2deg(std::atan2(d.y(), d.x()));
    const double depression = rad2deg(std::atan2(-d.z(), d.head<2>().norm()));
    return sector_gain(azimuth - cell.sector_azimuth_deg, depression, sp);
}

PathlossSample propagation(const Cell &cell, const Position &user, const Carrier &carrier,
                           const ChannelConfig &channel, const LargeScaleDraw &draw) {
    if (cell.kind == CellKind::HibsBeam) {
        return ntn_rural_pathloss(elevation_angle(user, cell.tx_position),
                                  slant_distance(user, cell.tx_position), carrier.frequency_hz,
                                  channel.ntn, draw);
    }
    return rma_pathloss(ground_distance(user, cell.tx_position), cell.tx_position.z(), user.z(),
                        carrier.frequency_hz, channel.rma, draw);
}

LinkBudget link_budget(const Cell &cell, const User &user, const Carrier &carrier,
                       const ChannelConfig &channel, const LargeScaleDraw &draw) {
    LargeScaleDraw d = draw;
    if (!channel.shadowing) {
        d.shadow_normal = 0;
    }
    const PathlossSample p = propagation(cell, user.position, carrier, channel, d);
    LinkBudget b;
    b.distance_m = slant_distance(user.position, cell.tx_position);
    b.elevation_deg = cell.tx_position.z() > user.position.z()
                          ? elevation_angle(user.position, cell.tx_position)
                          : 0.0;
    b.pathloss_db = p.pathloss_db;
    b.shadow_db = p.shadow_db;
    b.clutter_db = p.clutter_db;
    b.g_tx_dbi = tx_gain_toward(cell, user.position);
    b.g_rx_dbi = user.antenna_gain_dbi;
    b.coupling_loss_db = coupling_loss(b.pathloss_db, b.shadow_db, b.clutter_db, b.g_tx_dbi, b.g_rx_dbi);
    b.los = p.los;
    b.clamped = p.clamped;
    return b;
}

int site_count(std::span<const Cell> cells) {
    int n = 0;
    for (const auto &c : cells) {
        if (c.site_id < 0) {
            throw std::invalid_argument("site_count: negative site id");
        }
        n = std::max(n, c.site_id + 1);
    }
    return n;
}

Eigen::MatrixXd received_power_dbm(std::span<const Cell> cells, const Eigen::MatrixXd &coupling_db) {
    Eigen::VectorXd tx(coupling_db.rows());
    for (Eigen::Index c = 0; c < tx.size(); ++c) {
        tx(c) = cells[static_cast<std::size_t>(c)].tx_power_dbm;
    }
    return (-coupling_db).colwise() + tx;
}

int associate(const Eigen::Ref<const Eigen::VectorXd> &rx_power_dbm) {
    if (rx_power_dbm.size() == 0) {
        throw std::invalid_argument("associate: no cells");
    }
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < rx_power_dbm.size(); ++c) {
        if (rx_power_dbm(c) > rx_power_dbm(best)) {
            best = c;
        }
    }
    return static_cast<int>(best);
}

std::vector<int> associate_all(const Eigen::MatrixXd &rx_power_dbm) {
    std::vector<int> serving(static_cast<std::size_t>(rx_power_dbm.cols()));
    for (Eigen::Index u = 0; u < rx_power_dbm.cols(); ++u) {
        serving[static_cast<std::size_t>(u)] = associate(rx_power_dbm.col(u));
    }
    return serving;
}

std::vector<bool> active_cells(std::span<const int> serving, int n_cells) {
    std::vector<bool> active(static_cast<std::size_t>(n_cells), false);
    for (int c : serving) {
        active.at(static_cast<std::size_t>(c)) = true;
    }
    return active;
}

namespace {

double dbm_to_mw(double dbm) {
    return std::pow(10.0, dbm / 10.0);
}

} // namespace

double dl_sinr(const Eigen::Ref<const Eigen::VectorXd> &rx_power_dbm, int serving,
               const std::vector<bool> &active, double noise_dbm) {
    double interference = 0;
    for (Eigen::Index c = 0; c < rx_power_dbm.size(); ++c) {
        if (c != serving && active[static_cast<std::size_t>(c)]) {
            interference += dbm_to_mw(rx_power_dbm(c));
        }
    }
    return rx_power_dbm(serving) - 10.0 * std::log10(interference + dbm_to_mw(noise_dbm));
}

double ul_sinr(const Eigen::MatrixXd &coupling_db, std::span<const User> users, int scheduled_user,
               int serving, std::span<const int> co_scheduled, double noise_dbm) {
    const auto &u = users[static_cast<std::size_t>(scheduled_user)];
    const double signal = u.tx_power_dbm - coupling_db(serving, scheduled_user);
    double interference = 0;
    for (int j : co_scheduled) {
        interference += dbm_to_mw(users[static_cast<std::size_t>(j)].tx_power_dbm - coupling_db(serving, j));
    }
    return signal - 10.0 * std::log10(interference + dbm_to_mw(noise_dbm));
}

std::vector<std::vector<int>> ul_co_scheduled(std::span<const int> serving, int n_cells) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(n_cells));
    std::vector<int> slot(serving.size());
    for (std::size_t u = 0; u < serving.size(); ++u) {
        auto &m = members.at(static_cast<std::size_t>(serving[u]));
        slot[u] = static_cast<int>(m.size());
        m.push_back(static_cast<int>(u));
    }
    std::vector<std::vector<int>> result(serving.size());
    for (std::size_t u = 0; u < serving.size(); ++u) {
        for (int c = 0; c < n_cells; ++c) {
            const auto &m = members[static_cast<std::size_t>(c)];
            if (c == serving[u] || m.empty()) {
                continue;
            }
            result[u].push_back(m[static_cast<std::size_t>(slot[u]) % m.size()]);
        }
    }
    return result;
}

double spectral_efficiency(double sinr_db, const SeMapping &mapping) {
    if (sinr_db < mapping.sinr_min_db) {
        return 0.0;
    }
    const double linear = std::pow(10.0, sinr_db / 10.0);
    return std::min(mapping.alpha * std::log2(1.0 + linear), mapping.se_max_bpshz);
}

ThroughputReport cell_and_user_throughput(std::span<const int> serving,
                                          std::span<const double> sinr_db, int n_cells,
                                          double bandwidth_hz, const SeMapping &mapping,
                                          double user_density) {
    if (serving.size() != sinr_db.size()) {
        throw std::invalid_argument("cell_and_user_throughput: size mismatch");
    }
    ThroughputReport r;
    r.user_density = user_density;
    r.cell_bps.assign(static_cast<std::size_t>(n_cells), 0.0);
    r.cell_se_bpshz.assign(static_cast<std::size_t>(n_cells), 0.0);
    r.cell_user_count.assign(static_cast<std::size_t>(n_cells), 0);
    r.user_bps.assign(serving.size(), 0.0);
    for (int c : serving) {
        ++r.cell_user_count.at(static_cast<std::size_t>(c));
    }
    for (std::size_t u = 0; u < serving.size(); ++u) {
        const auto c = static_cast<std::size_t>(serving[u]);
        r.user_bps[u] = bandwidth_hz * spectral_efficiency(sinr_db[u], mapping) / r.cell_user_count[c];
        r.cell_bps[c] += r.user_bps[u];
    }
    for (std::size_t c = 0; c < r.cell_bps.size(); ++c) {
        r.cell_se_bpshz[c] = r.cell_bps[c] / bandwidth_hz;
    }
    return r;
}

} // namespace hibs
