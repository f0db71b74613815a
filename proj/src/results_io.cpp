#include "hibs/results_io.hpp"

#include "hibs/config.hpp"
#include "hibs/stats.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

namespace hibs {

ExperimentOutput run_experiment(const ExperimentSpec &spec) {
    ExperimentOutput out{spec, {}};
    switch (spec.kind) {
    case ExperimentKind::CouplingLoss:
        out.result = run_coupling_loss(spec);
        break;
    case ExperimentKind::SinrSweep:
        out.result = run_sinr_sweep(spec);
        break;
    case ExperimentKind::ThroughputSweep:
        out.result = run_throughput_sweep(spec);
        break;
    case ExperimentKind::Mobility:
        out.result = run_mobility(spec, spec.scenario.mobility);
        break;
    }
    return out;
}

const char *experiment_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::CouplingLoss:
        return "coupling-loss";
    case ExperimentKind::SinrSweep:
        return "sinr-sweep";
    case ExperimentKind::ThroughputSweep:
        return "throughput-sweep";
    case ExperimentKind::Mobility:
        return "mobility";
    }
    return "unknown";
}

const char *ring_label(int ring) {
    switch (ring) {
    case 0:
        return "center";
    case 1:
        return "ring1";
    case 2:
        return "ring2";
    default:
        return "outer";
    }
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string coupling_loss_csv(const CouplingLossResult &r) {
    std::string s = "ring,sample_db\n";
    for (const auto &x : r.samples) {
        s += ring_label(x.ring);
        s += ',' + format_number(x.coupling_loss_db) + '\n';
    }
    return s;
}

std::string sinr_csv(const std::vector<SinrSweepPoint> &points) {
    std::string s = "density,direction,sinr_db\n";
    for (const auto &p : points) {
        const std::string d = format_number(p.density);
        for (const auto *set : {&p.dl, &p.ul}) {
            for (const auto &x : *set) {
                s += d + ',' + to_string(x.direction) + ',' + format_number(x.sinr_db) + '\n';
            }
        }
    }
    return s;
}

std::string throughput_csv(const std::vector<ThroughputPoint> &points) {
    std::string s = "density,kind,cell_bps,user_bps,se_bpshz\n";
    for (const auto &p : points) {
        const std::string d = format_number(p.density);
        s += d + ",hibs," + format_number(p.hibs_cell_bps) + ',' + format_number(p.hibs_user_bps) +
             ',' + format_number(p.hibs_se_bpshz) + '\n';
        s += d + ",tn," + format_number(p.tn_cell_bps) + ',' + format_number(p.tn_user_bps) + ',' +
             format_number(p.tn_se_bpshz) + '\n';
    }
    return s;
}

std::string handover_csv(const std::vector<HandoverEvent> &events) {
    std::string s = "time_s,direction,x_m,y_m,dist_from_center_m\n";
    for (const auto &e : events) {
        s += format_number(e.time_s) + ',' + to_string(e.direction) + ',' +
             format_number(e.position.x()) + ',' + format_number(e.position.y()) + ',' +
             format_number(e.position.head<2>().norm()) + '\n';
    }
    return s;
}

namespace {

using Json = nlohmann::ordered_json;

Json stat_block(const std::vector<double> &v, const char *unit) {
    Json j;
    j["count"] = v.size();
    if (v.empty()) {
        j[std::string("median_") + unit] = nullptr;
        j[std::string("mean_") + unit] = nullptr;
    } else {
        j[std::string("median_") + unit] = median(v);
        j[std::string("mean_") + unit] = mean(v);
    }
    return j;
}

Json summarize(const CouplingLossResult &r) {
    std::map<int, std::vector<double>> by_ring;
    for (const auto &x : r.samples) {
        by_ring[x.ring].push_back(x.coupling_loss_db);
    }
    Json j;
    j["density"] = r.density;
    j["rings"] = Json::array();
    for (const auto &[ring, v] : by_ring) {
        Json b = stat_block(v, "db");
        b["ring"] = ring_label(ring);
        j["rings"].push_back(b);
    }
    if (by_ring.size() >= 2) {
        j["outer_minus_center_median_db"] = median(by_ring.rbegin()->second) - median(by_ring.begin()->second);
    }
    return j;
}

Json summarize(const std::vector<SinrSweepPoint> &points) {
    Json j;
    j["points"] = Json::array();
    for (const auto &p : points) {
        std::vector<double> dl, ul;
        for (const auto &x : p.dl) {
            dl.push_back(x.sinr_db);
        }
        for (const auto &x : p.ul) {
            ul.push_back(x.sinr_db);
        }
        Json b;
        b["density"] = p.density;
        b["n_users"] = p.n_users;
        b["dl"] = stat_block(dl, "db");
        b["ul"] = stat_block(ul, "db");
        j["points"].push_back(b);
    }
    return j;
}

Json summarize(const std::vector<ThroughputPoint> &points) {
    Json j;
    j["points"] = Json::array();
    double hibs_max = 0, tn_max = 0;
    for (const auto &p : points) {
        Json b;
        b["density"] = p.density;
        b["hibs_cell_bps"] = p.hibs_cell_bps;
        b["tn_cell_bps"] = p.tn_cell_bps;
        b["hibs_user_bps"] = p.hibs_user_bps;
        b["tn_user_bps"] = p.tn_user_bps;
        b["hibs_se_bpshz"] = p.hibs_se_bpshz;
        b["tn_se_bpshz"] = p.tn_se_bpshz;
        b["hibs_users"] = p.hibs_users;
        b["tn_users"] = p.tn_users;
        j["points"].push_back(b);
        hibs_max = std::max(hibs_max, p.hibs_se_bpshz);
        tn_max = std::max(tn_max, p.tn_se_bpshz);
    }
    j["hibs_max_se_bpshz"] = hibs_max;
    j["tn_max_se_bpshz"] = tn_max;
    return j;
}

Json summarize(const MobilityResult &r) {
    std::map<HandoverDirection, std::vector<double>> by_dir;
    for (const auto &e : r.events) {
        by_dir[e.direction].push_back(e.position.head<2>().norm());
    }
    Json j;
    j["n_trajectories"] = r.trajectories.size();
    j["n_events"] = r.events.size();
    j["directions"] = Json::object();
    for (auto dir : {HandoverDirection::TnToHibs, HandoverDirection::HibsToTn, HandoverDirection::TnToTn}) {
        const auto &v = by_dir[dir];
        Json b;
        b["count"] = v.size();
        b["mean_dist_from_center_m"] = v.empty() ? Json(nullptr) : Json(mean(v));
        j["directions"][to_string(dir)] = b;
    }
    const auto &h2t = by_dir[HandoverDirection::HibsToTn];
    const auto &t2h = by_dir[HandoverDirection::TnToHibs];
    j["hibs_to_tn_minus_tn_to_hibs_m"] =
        (h2t.empty() || t2h.empty()) ? Json(nullptr) : Json(mean(h2t) - mean(t2h));
    return j;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + ": " + std::strerror(errno));
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("cannot write " + path.string() + ": " + std::strerror(errno));
    }
}

} // namespace

nlohmann::ordered_json summary_json(const ExperimentOutput &out) {
    Json j;
    j["experiment"] = experiment_name(out.spec.kind);
    j["seed"] = out.spec.seed;
    j["n_drops"] = out.spec.n_drops;
    j["densities"] = out.spec.densities;
    j["results"] = std::visit([](const auto &r) { return summarize(r); }, out.result);
    j["config"] = config_to_json(out.spec.scenario);
    return j;
}

std::vector<std::filesystem::path> emit_results(const ExperimentOutput &out,
                                                const std::filesystem::path &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
    }
    std::vector<std::filesystem::path> written;
    auto emit = [&](const char *name, const std::string &content) {
        const auto path = out_dir / name;
        write_file(path, content);
        written.push_back(path);
    };
    std::visit(
        [&](const auto &r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, CouplingLossResult>) {
                emit("coupling_loss.csv", coupling_loss_csv(r));
            } else if constexpr (std::is_same_v<T, std::vector<SinrSweepPoint>>) {
                emit("sinr.csv", sinr_csv(r));
            } else if constexpr (std::is_same_v<T, std::vector<ThroughputPoint>>) {
                emit("throughput.csv", throughput_csv(r));
            } else {
                emit("handover.csv", handover_csv(r.events));
            }
        },
        out.result);
    emit("summary.json", summary_json(out).dump(2) + "\n");
    return written;
}

} // namespace hibs
