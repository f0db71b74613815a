// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.
//
// Usage: acceptance <path-to-hibs-sim> <scratch-dir>
#include "hibs/antenna.hpp"
#include "hibs/channel.hpp"
#include "hibs/engine.hpp"
#include "hibs/mobility.hpp"
#include "hibs/results_io.hpp"
#include "hibs/stats.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace hibs;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &what, const std::string &detail) {
    std::printf("%s criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<double> kDensities{0.1, 0.2, 0.5, 1, 2, 5, 10, 20};

void coupling_loss_gap() {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::CouplingLoss;
    spec.n_drops = 500;
    const auto r = run_coupling_loss(spec);
    std::map<int, std::vector<double>> by_ring;
    for (const auto &s : r.samples) {
        by_ring[s.ring].push_back(s.coupling_loss_db);
    }
    const double gap = median(by_ring[2]) - median(by_ring[0]);

    ScenarioConfig cfg;
    cfg.channel.shadowing = false;
    const Deployment dep = build_hibs_deployment(cfg);
    User u;
    u.position = Position(0, 0, 0);
    const double nadir = link_budget(dep.cells[0], u, cfg.carrier, cfg.channel, LargeScaleDraw{0.5, 0}).coupling_loss_db;

    report(1, gap >= 3.5 && std::abs(nadir - 108.0) <= 0.2,
           "outer-ring minus center median coupling loss >= 3.5 dB; nadir budget 108.0 +- 0.2 dB",
           fmt("gap %.2f dB", gap) + fmt(", nadir %.3f dB", nadir));
}

void geometry() {
    const HibsLayout l = build_hibs_layout(10000.0);
    const double edge = slant_distance(Position(l.service_radius_m, 0, 0), l.platform_position);
    const double center = slant_distance(l.beam_centers[0], l.platform_position);
    report(2, edge > 40000 && edge < 42000 && center == 20000.0,
           "service-edge slant in (40, 42) km; center slant exactly 20 km",
           fmt("edge %.1f m", edge) + fmt(", center %.6f m", center));
}

void sinr_sweep() {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::SinrSweep;
    spec.n_drops = 500;
    spec.densities = kDensities;
    const auto points = run_sinr_sweep(spec);
    std::vector<double> dl, ul;
    for (const auto &p : points) {
        std::vector<double> d, u;
        for (const auto &s : p.dl) d.push_back(s.sinr_db);
        for (const auto &s : p.ul) u.push_back(s.sinr_db);
        dl.push_back(median(d));
        ul.push_back(median(u));
    }
    std::string dl_list, ul_list;
    for (std::size_t i = 0; i < kDensities.size(); ++i) {
        dl_list += fmt(" %.2f", dl[i]);
        ul_list += fmt(" %.2f", ul[i]);
    }

    bool decreasing = true;
    for (std::size_t i = 1; i < kDensities.size() && kDensities[i] <= 5; ++i) {
        decreasing = decreasing && dl[i] < dl[i - 1];
    }
    const double sat = std::abs(dl[6] - dl[7]);
    report(3, decreasing && sat < 1.0,
           "median DL SINR strictly decreasing over 0.1..5 users/cell; |median(10) - median(20)| < 1 dB",
           "DL medians" + dl_list + fmt(" dB; saturation delta %.2f dB", sat));

    const auto [lo, hi] = std::minmax_element(ul.begin(), ul.end());
    const double spread = *hi - *lo;
    report(4, spread < 1.5 && ul[0] < dl[0],
           "median UL SINR spread < 1.5 dB over 0.1..20 users/cell; UL median < DL median at 0.1",
           "UL medians" + ul_list + fmt(" dB; spread %.2f dB", spread) +
               fmt("; UL(0.1) %.2f", ul[0]) + fmt(" vs DL(0.1) %.2f dB", dl[0]));
}

void throughput() {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::ThroughputSweep;
    spec.n_drops = 500;
    spec.densities = kDensities;
    const auto points = run_throughput_sweep(spec);
    double hibs_max = 0, tn_max = 0;
    for (const auto &p : points) {
        hibs_max = std::max(hibs_max, p.hibs_se_bpshz);
        tn_max = std::max(tn_max, p.tn_se_bpshz);
    }
    const double plateau = points.back().hibs_cell_bps;
    const double ratio = tn_max / hibs_max;
    const double user_ratio = points.front().hibs_user_bps / points.back().hibs_user_bps;
    report(5, plateau >= 2.5e6 && plateau <= 6.5e6 && ratio >= 1.5 && ratio <= 2.6 && user_ratio >= 10,
           "HIBS cell throughput at saturation in [2.5, 6.5] Mbps; TN/HIBS max SE in [1.5, 2.6]; "
           "HIBS user throughput lowest/highest density >= 10",
           fmt("plateau %.2f Mbps", plateau / 1e6) + fmt("; max SE HIBS %.3f", hibs_max) +
               fmt(" TN %.3f bps/Hz", tn_max) + fmt(" ratio %.2f", ratio) +
               fmt("; user ratio %.1f", user_ratio));
}

void mobility() {
    bool ok = true;
    std::string detail;
    for (double offset : {1.0, 3.0, 6.0}) {
        ExperimentSpec spec;
        spec.kind = ExperimentKind::Mobility;
        MobilityParams p = spec.scenario.mobility;
        p.a3_offset_db = offset;
        const auto r = run_mobility(spec, p);
        std::vector<double> h2t, t2h;
        for (const auto &e : r.events) {
            const double d = e.position.head<2>().norm();
            if (e.direction == HandoverDirection::HibsToTn) h2t.push_back(d);
            if (e.direction == HandoverDirection::TnToHibs) t2h.push_back(d);
        }
        const double diff = (h2t.empty() || t2h.empty()) ? NAN : mean(h2t) - mean(t2h);
        const bool trajectories_ok = r.trajectories.size() >= 200;
        ok = ok && trajectories_ok && diff > 0 && (offset != 3.0 || diff >= 1000.0);
        detail += fmt("offset %.0f dB: ", offset) + fmt("%.0f m", diff) +
                  fmt(" (%.0f HIBS->TN, ", double(h2t.size())) + fmt("%.0f TN->HIBS); ", double(t2h.size()));
    }
    report(6, ok,
           "mean HIBS->TN handover distance exceeds TN->HIBS by >= 1 km (default 3 dB offset), "
           "ordering holds for offsets 1, 3, 6 dB over 200 trajectories",
           detail);
}

void unit_oracles() {
    double lo = 3, hi = 4.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bessel_j1(lo) * bessel_j1(mid) <= 0 ? hi : lo) = mid;
    }
    const double zero = 0.5 * (lo + hi);
    const double pl = fspl(20000, 2e9);
    const double noise = noise_power_dbm(20e6, 9);
    const double bw = nadir_beamwidth_for_footprint(10000, 20000);
    const AperturePattern ap = make_aperture_pattern(16.5, bw);
    const double edge = aperture_gain(bw / 2, ap) - ap.peak_gain_dbi;
    report(7,
           std::abs(zero - 3.83171) <= 1e-4 && std::abs(pl - 124.5) <= 0.1 &&
               std::abs(noise + 91.99) <= 0.01 && std::abs(edge + 3) <= 0.05,
           "J1 first zero, free-space loss at 20 km, noise power, aperture -3 dB point",
           fmt("zero %.6f", zero) + fmt("; fspl %.3f dB", pl) + fmt("; noise %.3f dBm", noise) +
               fmt("; half-beamwidth gain %.4f dB", edge));
}

void determinism(const std::string &sim, const fs::path &scratch) {
    struct Run {
        const char *cmd;
        const char *args;
        const char *csv;
    };
    const Run runs[] = {
        {"coupling-loss", "--drops 100", "coupling_loss.csv"},
        {"sinr-sweep", "--drops 40 --densities 0.5,2,10", "sinr.csv"},
        {"throughput-sweep", "--drops 40 --densities 0.5,5", "throughput.csv"},
        {"mobility", "--drops 16", "handover.csv"},
    };
    bool ok = true;
    std::string detail;
    for (const auto &r : runs) {
        std::string first;
        bool same = true;
        for (int threads : {1, 2, 4}) {
            const fs::path out = scratch / (std::string(r.cmd) + "_t" + std::to_string(threads));
            fs::remove_all(out);
            const std::string cmd = "\"" + sim + "\" " + r.cmd + " " + r.args + " --seed 12345 --threads " +
                                    std::to_string(threads) + " --out \"" + out.string() + "\" >/dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0) {
                same = false;
                break;
            }
            const std::string bytes = read_file(out / r.csv);
            if (threads == 1) {
                first = bytes;
                same = !bytes.empty();
            } else {
                same = same && bytes == first;
            }
        }
        ok = ok && same;
        detail += std::string(r.cmd) + (same ? " identical; " : " DIFFERS; ");
    }
    report(8, ok, "byte-identical CSVs for threads 1, 2, 4", detail);
}

void properties() {
    const int cases = 1000;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> power(-140, -40), offset(-60, 60), sinr(-20, 40);
    std::uniform_int_distribution<int> n_cells(1, 40), n_users(0, 80), len(1, 500);
    std::normal_distribution<double> normal(0, 10);
    int assoc_bad = 0, dl_bad = 0, tp_bad = 0, cdf_bad = 0;

    for (int i = 0; i < cases; ++i) {
        Eigen::VectorXd v(n_cells(rng));
        for (auto &x : v) x = power(rng);
        const Eigen::VectorXd shifted = v.array() + offset(rng);
        assoc_bad += associate(shifted) != associate(v);
    }

    for (int i = 0; i < cases; ++i) {
        const int n = n_cells(rng) + 1;
        Eigen::VectorXd v(n);
        for (auto &x : v) x = power(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int serving = pick(rng);
        std::vector<bool> active(static_cast<std::size_t>(n), false);
        active[static_cast<std::size_t>(serving)] = true;
        double prev = dl_sinr(v, serving, active, -100);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int c : order) {
            if (active[static_cast<std::size_t>(c)]) continue;
            active[static_cast<std::size_t>(c)] = true;
            const double s = dl_sinr(v, serving, active, -100);
            dl_bad += s > prev;
            prev = s;
        }
    }

    for (int i = 0; i < cases; ++i) {
        const int nc = n_cells(rng);
        std::uniform_int_distribution<int> pick(0, nc - 1);
        std::vector<int> serving(static_cast<std::size_t>(n_users(rng)));
        std::vector<double> s(serving.size());
        for (std::size_t u = 0; u < serving.size(); ++u) {
            serving[u] = pick(rng);
            s[u] = sinr(rng);
        }
        const auto r = cell_and_user_throughput(serving, s, nc, 20e6, SeMapping{});
        std::vector<double> sum(static_cast<std::size_t>(nc), 0.0);
        for (std::size_t u = 0; u < serving.size(); ++u) sum[static_cast<std::size_t>(serving[u])] += r.user_bps[u];
        for (int c = 0; c < nc; ++c) tp_bad += r.cell_bps[static_cast<std::size_t>(c)] != sum[static_cast<std::size_t>(c)];
    }

    for (int i = 0; i < cases; ++i) {
        std::vector<double> x(static_cast<std::size_t>(len(rng)));
        for (auto &e : x) e = normal(rng);
        const auto c = make_cdf(x);
        bool good = c.size() == x.size();
        for (std::size_t k = 0; k < c.size(); ++k) {
            good = good && c.probabilities[k] > 0 && c.probabilities[k] < 1;
            if (k > 0) good = good && c.values[k] >= c.values[k - 1] && c.probabilities[k] > c.probabilities[k - 1];
        }
        cdf_bad += !good;
    }

    report(9, assoc_bad + dl_bad + tp_bad + cdf_bad == 0,
           "association offset invariance, DL SINR monotone in active set, per-cell throughput "
           "conservation, CDF monotonicity (1000 random cases each)",
           fmt("violations: association %.0f", assoc_bad) + fmt(", dl_sinr %.0f", dl_bad) +
               fmt(", throughput %.0f", tp_bad) + fmt(", cdf %.0f", cdf_bad));
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <hibs-sim> <scratch-dir>\n", argv[0]);
        return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    const fs::path scratch = argv[2];
    fs::create_directories(scratch);

    coupling_loss_gap();
    geometry();
    sinr_sweep();
    throughput();
    mobility();
    unit_oracles();
    determinism(argv[1], scratch);
    properties();

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 9 criteria failed (%.1f s)\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
