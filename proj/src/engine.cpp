#include "hibs/engine.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hibs {

void validate(const ExperimentSpec &spec) {
    if (spec.n_drops < 1) {
        throw std::invalid_argument("experiment needs at least one drop");
    }
    if (spec.densities.empty()) {
        throw std::invalid_argument("experiment needs at least one density");
    }
    for (double d : spec.densities) {
        if (!(d >= 0) || !std::isfinite(d)) {
            throw std::invalid_argument("densities must be finite and non-negative");
        }
    }
    if (spec.threads < 1) {
        throw std::invalid_argument("thread count must be at least 1");
    }
}

void parallel_for(int n, int threads, const std::function<void(int)> &body) {
    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

Deployment build_hibs_deployment(const ScenarioConfig &cfg) {
    const auto &h = cfg.hibs;
    Deployment d;
    d.hibs = build_hibs_layout(h.footprint_diameter_m, h.n_rings, h.altitude_m,
                               h.service_area_km2 * 1e6);
    const AperturePattern pattern = make_aperture_pattern(
        h.peak_gain_dbi, nadir_beamwidth_for_footprint(h.footprint_diameter_m, h.altitude_m),
        h.pattern_floor_db);
    for (std::size_t i = 0; i < d.hibs.beam_centers.size(); ++i) {
        Cell c;
        c.id = static_cast<int>(i);
        c.kind = CellKind::HibsBeam;
        c.site_id = 0;
        c.ring = d.hibs.beam_ring[i];
        c.tx_position = d.hibs.platform_position;
        c.boresight = (d.hibs.beam_centers[i] - c.tx_position).normalized();
        c.pattern = pattern;
        c.tx_power_dbm = h.tx_power_dbm;
        c.rx_noise_figure_db = h.noise_figure_db;
        d.cells.push_back(c);
    }
    d.drop_region = DropRegion{0.0, d.hibs.service_radius_m, 0.0, 0.0};
    return d;
}

Deployment build_combined_deployment(const ScenarioConfig &cfg) {
    ScenarioConfig single = cfg;
    single.hibs.n_rings = 0;
    Deployment d = build_hibs_deployment(single);

    const auto &t = cfg.terrestrial;
    d.tn = build_tn_ring_layout(t.isd_m, t.n_sites, t.height_m, t.sector_rotation_deg);
    const double tilt = deg2rad(t.pattern.downtilt_deg);
    for (int k = 0; k < d.tn.n_sectors(); ++k) {
        const double az_deg = d.tn.sector_azimuths_deg[static_cast<std::size_t>(k)];
        const double az = deg2rad(az_deg);
        const int site = TerrestrialLayout::site_of_sector(k);
        Cell c;
        c.id = static_cast<int>(d.cells.size());
        c.kind = CellKind::TnSector;
        c.site_id = 1 + site;
        c.tx_position = d.tn.site_positions[static_cast<std::size_t>(site)];
        c.boresight = Vec3(std::cos(az) * std::cos(tilt), std::sin(az) * std::cos(tilt), -std::sin(tilt));
        c.pattern = t.pattern;
        c.sector_azimuth_deg = az_deg;
        c.tx_power_dbm = t.tx_power_dbm;
        c.rx_noise_figure_db = t.noise_figure_db;
        d.cells.push_back(c);
    }
    d.drop_region = DropRegion{0.0, d.tn.ring_radius_m + t.drop_margin_m, 0.0, 0.0};
    return d;
}

std::vector<User> make_users(const std::vector<Position> &positions, const UeConfig &ue) {
    std::vector<User> users;
    users.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        User u;
        u.id = static_cast<int>(i);
        u.position = positions[i];
        u.tx_power_dbm = ue.tx_power_dbm;
        u.antenna_gain_dbi = ue.antenna_gain_dbi;
        u.noise_figure_db = ue.noise_figure_db;
        users.push_back(u);
    }
    return users;
}

Drop simulate_drop(const Deployment &deployment, const ScenarioConfig &cfg, double mean_users,
                   Rng &rng) {
    int count = 0;
    if (mean_users > 0) {
        std::poisson_distribution<int> poisson(mean_users);
        count = poisson(rng);
    }
    Drop drop;
    drop.users = make_users(drop_users(deployment.drop_region, count, rng, cfg.ue.height_m), cfg.ue);
    const std::span<const Cell> cells(deployment.cells);
    drop.coupling_db = coupling_matrix(cells, std::span<const User>(drop.users), cfg.carrier,
                                       cfg.channel, rng);
    drop.rx_power_dbm = received_power_dbm(cells, drop.coupling_db);
    drop.serving = associate_all(drop.rx_power_dbm);
    for (std::size_t u = 0; u < drop.users.size(); ++u) {
        drop.users[u].serving_cell_id = drop.serving[u];
    }
    return drop;
}

std::vector<double> drop_dl_sinr(const Drop &drop, const ScenarioConfig &cfg) {
    const int n_cells = static_cast<int>(drop.rx_power_dbm.rows());
    const auto active = active_cells(drop.serving, n_cells);
    std::vector<double> sinr(drop.users.size());
    for (std::size_t u = 0; u < drop.users.size(); ++u) {
        const double noise = noise_power_dbm(cfg.carrier.bandwidth_hz, drop.users[u].noise_figure_db,
                                             cfg.channel.thermal_density_dbm_hz);
        sinr[u] = dl_sinr(drop.rx_power_dbm.col(static_cast<Eigen::Index>(u)), drop.serving[u],
                          active, noise);
    }
    return sinr;
}

std::vector<double> drop_ul_sinr(const Drop &drop, const Deployment &deployment,
                                 const ScenarioConfig &cfg) {
    const int n_cells = static_cast<int>(deployment.cells.size());
    const auto co = ul_co_scheduled(drop.serving, n_cells);
    std::vector<double> sinr(drop.users.size());
    for (std::size_t u = 0; u < drop.users.size(); ++u) {
        const auto &cell = deployment.cells[static_cast<std::size_t>(drop.serving[u])];
        const double noise = noise_power_dbm(cfg.carrier.bandwidth_hz, cell.rx_noise_figure_db,
                                             cfg.channel.thermal_density_dbm_hz);
        sinr[u] = ul_sinr(drop.coupling_db, drop.users, static_cast<int>(u), drop.serving[u], co[u],
                          noise);
    }
    return sinr;
}

CouplingLossResult run_coupling_loss(const ExperimentSpec &spec) {
    validate(spec);
    const Deployment dep = build_hibs_deployment(spec.scenario);
    const double density = spec.densities.front();
    const double mean_users = density * static_cast<double>(dep.cells.size());

    std::vector<std::vector<CouplingLossSample>> per_drop(static_cast<std::size_t>(spec.n_drops));
    parallel_for(spec.n_drops, spec.threads, [&](int drop_index) {
        Rng rng = derive_rng(spec.seed, 0, static_cast<std::uint64_t>(drop_index));
        const Drop drop = simulate_drop(dep, spec.scenario, mean_users, rng);
        auto &out = per_drop[static_cast<std::size_t>(drop_index)];
        for (std::size_t u = 0; u < drop.users.size(); ++u) {
            const int c = drop.serving[u];
            out.push_back({drop_index, drop.users[u].id, dep.cells[static_cast<std::size_t>(c)].ring,
                           drop.coupling_db(c, static_cast<Eigen::Index>(u))});
        }
    });

    CouplingLossResult result;
    result.density = density;
    for (auto &v : per_drop) {
        result.samples.insert(result.samples.end(), v.begin(), v.end());
    }
    return result;
}

std::vector<SinrSweepPoint> run_sinr_sweep(const ExperimentSpec &spec) {
    validate(spec);
    const Deployment dep = build_hibs_deployment(spec.scenario);
    const auto n_dens = static_cast<int>(spec.densities.size());
    const int total = n_dens * spec.n_drops;

    struct DropSamples {
        std::vector<SinrSample> dl, ul;
    };
    std::vector<DropSamples> per_job(static_cast<std::size_t>(total));
    parallel_for(total, spec.threads, [&](int job) {
        const int di = job / spec.n_drops;
        const int drop_index = job % spec.n_drops;
        const double mean_users =
            spec.densities[static_cast<std::size_t>(di)] * static_cast<double>(dep.cells.size());
        Rng rng = derive_rng(spec.seed, static_cast<std::uint64_t>(di),
                             static_cast<std::uint64_t>(drop_index));
        const Drop drop = simulate_drop(dep, spec.scenario, mean_users, rng);
        const auto dl = drop_dl_sinr(drop, spec.scenario);
        const auto ul = drop_ul_sinr(drop, dep, spec.scenario);
        auto &out = per_job[static_cast<std::size_t>(job)];
        for (std::size_t u = 0; u < drop.users.size(); ++u) {
            const CellKind kind = dep.cells[static_cast<std::size_t>(drop.serving[u])].kind;
            out.dl.push_back({drop.users[u].id, Direction::DL, dl[u], kind, drop_index});
            out.ul.push_back({drop.users[u].id, Direction::UL, ul[u], kind, drop_index});
        }
    });

    std::vector<SinrSweepPoint> points(static_cast<std::size_t>(n_dens));
    for (int job = 0; job < total; ++job) {
        auto &p = points[static_cast<std::size_t>(job / spec.n_drops)];
        p.density = spec.densities[static_cast<std::size_t>(job / spec.n_drops)];
        auto &src = per_job[static_cast<std::size_t>(job)];
        p.n_users += static_cast<int>(src.dl.size());
        p.dl.insert(p.dl.end(), src.dl.begin(), src.dl.end());
        p.ul.insert(p.ul.end(), src.ul.begin(), src.ul.end());
    }
    return points;
}

std::vector<ThroughputPoint> run_throughput_sweep(const ExperimentSpec &spec) {
    validate(spec);
    const Deployment dep = build_combined_deployment(spec.scenario);
    const auto n_dens = static_cast<int>(spec.densities.size());
    const int total = n_dens * spec.n_drops;
    const double bw = spec.scenario.carrier.bandwidth_hz;

    struct Partial {
        double hibs_cell = 0, tn_cell = 0, hibs_user = 0, tn_user = 0;
        long hibs_active = 0, tn_active = 0, hibs_users = 0, tn_users = 0;
    };
    std::vector<Partial> per_job(static_cast<std::size_t>(total));
    parallel_for(total, spec.threads, [&](int job) {
        const int di = job / spec.n_drops;
        const int drop_index = job % spec.n_drops;
        const double density = spec.densities[static_cast<std::size_t>(di)];
        Rng rng = derive_rng(spec.seed, static_cast<std::uint64_t>(di),
                             static_cast<std::uint64_t>(drop_index));
        const Drop drop =
            simulate_drop(dep, spec.scenario, density * static_cast<double>(dep.cells.size()), rng);
        const auto sinr = drop_dl_sinr(drop, spec.scenario);
        const ThroughputReport r = cell_and_user_throughput(
            drop.serving, sinr, static_cast<int>(dep.cells.size()), bw, spec.scenario.scheduler, density);
        Partial &p = per_job[static_cast<std::size_t>(job)];
        for (std::size_t c = 0; c < dep.cells.size(); ++c) {
            if (r.cell_user_count[c] == 0) {
                continue;
            }
            if (dep.cells[c].kind == CellKind::HibsBeam) {
                p.hibs_cell += r.cell_bps[c];
                ++p.hibs_active;
            } else {
                p.tn_cell += r.cell_bps[c];
                ++p.tn_active;
            }
        }
        for (std::size_t u = 0; u < drop.users.size(); ++u) {
            if (dep.cells[static_cast<std::size_t>(drop.serving[u])].kind == CellKind::HibsBeam) {
                p.hibs_user += r.user_bps[u];
                ++p.hibs_users;
            } else {
                p.tn_user += r.user_bps[u];
                ++p.tn_users;
            }
        }
    });

    std::vector<ThroughputPoint> points(static_cast<std::size_t>(n_dens));
    std::vector<Partial> sums(static_cast<std::size_t>(n_dens));
    for (int job = 0; job < total; ++job) {
        auto &s = sums[static_cast<std::size_t>(job / spec.n_drops)];
        const auto &p = per_job[static_cast<std::size_t>(job)];
        s.hibs_cell += p.hibs_cell;
        s.tn_cell += p.tn_cell;
        s.hibs_user += p.hibs_user;
        s.tn_user += p.tn_user;
        s.hibs_active += p.hibs_active;
        s.tn_active += p.tn_active;
        s.hibs_users += p.hibs_users;
        s.tn_users += p.tn_users;
    }
    auto safe_mean = [](double sum, long n) { return n > 0 ? sum / static_cast<double>(n) : 0.0; };
    for (int di = 0; di < n_dens; ++di) {
        const auto &s = sums[static_cast<std::size_t>(di)];
        auto &pt = points[static_cast<std::size_t>(di)];
        pt.density = spec.densities[static_cast<std::size_t>(di)];
        pt.hibs_cell_bps = safe_mean(s.hibs_cell, s.hibs_active);
        pt.tn_cell_bps = safe_mean(s.tn_cell, s.tn_active);
        pt.hibs_user_bps = safe_mean(s.hibs_user, s.hibs_users);
        pt.tn_user_bps = safe_mean(s.tn_user, s.tn_users);
        pt.hibs_se_bpshz = pt.hibs_cell_bps / bw;
        pt.tn_se_bpshz = pt.tn_cell_bps / bw;
        pt.hibs_active_cells = s.hibs_active;
        pt.tn_active_cells = s.tn_active;
        pt.hibs_users = s.hibs_users;
        pt.tn_users = s.tn_users;
    }
    return points;
}

} // namespace hibs
