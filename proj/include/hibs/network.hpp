// Cells and users, per-drop coupling matrices, association, DL/UL SINR and
// throughput mapping.
#pragma once

#include "hibs/antenna.hpp"
#include "hibs/channel.hpp"
#include "hibs/geometry.hpp"

#include <Eigen/Dense>

#include <span>
#include <variant>
#include <vector>

namespace hibs {

enum class CellKind { HibsBeam, TnSector };
enum class Direction { DL, UL };

const char *to_string(CellKind kind);
const char *to_string(Direction dir);

struct Cell {
    int id = 0;
    CellKind kind = CellKind::HibsBeam;
    int site_id = 0; // cells sharing a site share large-scale fading
    int ring = -1;   // HIBS beam ring, -1 for terrestrial sectors
    Position tx_position = Position::Zero();
    Vec3 boresight = -Vec3::UnitZ(); // unit vector
    std::variant<AperturePattern, SectorPattern> pattern;
    double sector_azimuth_deg = 0; // terrestrial sectors only
    double tx_power_dbm = 49.0;
    double rx_noise_figure_db = 5.0;
};

struct User {
    int id = 0;
    Position position = Position(0, 0, 1.5);
    double tx_power_dbm = 23.0;
    double antenna_gain_dbi = 0.0;
    double noise_figure_db = 9.0;
    int serving_cell_id = -1;
};

struct SinrSample {
    int user_id = 0;
    Direction direction = Direction::DL;
    double sinr_db = 0;
    CellKind serving_kind = CellKind::HibsBeam;
    int drop_index = 0;
};

/// Truncated Shannon link-to-system mapping.
struct SeMapping {
    double alpha = 0.6;
    double sinr_min_db = -10.0;
    double se_max_bpshz = 4.8;

    bool operator==(const SeMapping &) const = default;
};

struct ThroughputReport {
    std::vector<double> cell_bps;
    std::vector<double> user_bps;
    std::vector<double> cell_se_bpshz;
    std::vector<int> cell_user_count;
    double user_density = 0;
};

/// Transmit antenna gain of @p cell toward @p target [dBi].
double tx_gain_toward(const Cell &cell, const Position &target);

/// Site-level propagation (pathloss, shadowing, clutter) for the cell's link
/// model: NTN rural for HIBS beams, rural macro for terrestrial sectors.
PathlossSample propagation(const Cell &cell, const Position &user, const Carrier &carrier,
                           const ChannelConfig &channel, const LargeScaleDraw &draw);

/// Full budget for one (cell, user) pair given a large-scale draw. The shadow
/// term is dropped when channel.shadowing is off.
LinkBudget link_budget(const Cell &cell, const User &user, const Carrier &carrier,
                       const ChannelConfig &channel, const LargeScaleDraw &draw);

template <typename Rng>
LinkBudget link_budget(const Cell &cell, const User &user, const Carrier &carrier,
                       const ChannelConfig &channel, Rng &rng) {
    return link_budget(cell, user, carrier, channel, draw_large_scale(rng));
}

/// Number of distinct sites referenced by @p cells (max site_id + 1).
int site_count(std::span<const Cell> cells);

/**
 * Coupling loss [dB] for every (cell, user) pair, cells along rows. One
 * large-scale draw is taken per (site, user) in user-major, site-minor order,
 * so beams of one platform see the same LOS state and shadowing.
 */
template <typename Rng>
Eigen::MatrixXd coupling_matrix(std::span<const Cell> cells, std::span<const User> users,
                                const Carrier &carrier, const ChannelConfig &channel, Rng &rng);

/// Received power [dBm] per (cell, user): tx power minus coupling loss.
Eigen::MatrixXd received_power_dbm(std::span<const Cell> cells, const Eigen::MatrixXd &coupling_db);

/// Index of the strongest entry; ties go to the lowest index.
int associate(const Eigen::Ref<const Eigen::VectorXd> &rx_power_dbm);

/// Serving cell per user (column-wise associate).
std::vector<int> associate_all(const Eigen::MatrixXd &rx_power_dbm);

/// Active mask under the full-buffer rule: a cell transmits iff it serves a user.
std::vector<bool> active_cells(std::span<const int> serving, int n_cells);

/**
 * Downlink SINR [dB] of the user whose received powers are @p rx_power_dbm.
 * Interference sums over active cells other than @p serving.
 */
double dl_sinr(const Eigen::Ref<const Eigen::VectorXd> &rx_power_dbm, int serving,
               const std::vector<bool> &active, double noise_dbm);

/**
 * Uplink SINR [dB] at cell @p serving for @p scheduled_user, with interference
 * from @p co_scheduled users of other cells on the same resource.
 */
double ul_sinr(const Eigen::MatrixXd &coupling_db, std::span<const User> users, int scheduled_user,
               int serving, std::span<const int> co_scheduled, double noise_dbm);

/**
 * Round-robin TDM uplink schedule. Slot k of cell c carries its (k mod n_c)-th
 * user; each user is reported in the slot equal to its index within its cell.
 * Returns, per user, the users of other cells sharing that slot.
 */
std::vector<std::vector<int>> ul_co_scheduled(std::span<const int> serving, int n_cells);

double spectral_efficiency(double sinr_db, const SeMapping &mapping);

/// Equal time share per cell; cells without users report zero.
ThroughputReport cell_and_user_throughput(std::span<const int> serving,
                                          std::span<const double> sinr_db, int n_cells,
                                          double bandwidth_hz, const SeMapping &mapping,
                                          double user_density = 0);

// ---------------------------------------------------------------------------

template <typename Rng>
Eigen::MatrixXd coupling_matrix(std::span<const Cell> cells, std::span<const User> users,
                                const Carrier &carrier, const ChannelConfig &channel, Rng &rng) {
    const int n_sites = site_count(cells);
    // First cell of each site carries the site's propagation model and position.
    std::vector<int> site_cell(static_cast<std::size_t>(n_sites), -1);
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        auto &slot = site_cell[static_cast<std::size_t>(cells[c].site_id)];
        if (slot < 0) {
            slot = c;
        }
    }
    Eigen::MatrixXd coupling(static_cast<Eigen::Index>(cells.size()),
                             static_cast<Eigen::Index>(users.size()));
    std::vector<PathlossSample> per_site(static_cast<std::size_t>(n_sites));
    for (std::size_t u = 0; u < users.size(); ++u) {
        for (int s = 0; s < n_sites; ++s) {
            LargeScaleDraw draw = draw_large_scale(rng);
            if (!channel.shadowing) {
                draw.shadow_normal = 0;
            }
            const int c = site_cell[static_cast<std::size_t>(s)];
            if (c >= 0) {
                per_site[static_cast<std::size_t>(s)] =
                    propagation(cells[static_cast<std::size_t>(c)], users[u].position, carrier, channel, draw);
            }
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto &p = per_site[static_cast<std::size_t>(cells[c].site_id)];
            coupling(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(u)) =
                coupling_loss(p.pathloss_db, p.shadow_db, p.clutter_db,
                              tx_gain_toward(cells[c], users[u].position), users[u].antenna_gain_dbi);
        }
    }
    return coupling;
}

} // namespace hibs
