// nuphase command line: growth certificates, Cayley balls, walk counts,
// percolation curves and slab diagnostics. Every output file is written
// together with a .manifest.json recording the full invocation.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nuphase/io.hpp"
#include "nuphase/nuphase.hpp"

namespace fs = std::filesystem;
using namespace nuphase;

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest make_manifest(const std::string& command, const std::vector<std::string>& argv,
                          std::uint64_t seed) {
    RunManifest man;
    man.command = command;
    man.parameters["argv"] = argv;
    man.seed = seed;
    man.timestamp = iso_timestamp();
    return man;
}

CoxeterSystem resolve_system(const std::string& nerve_path, const std::string& preset,
                             RunManifest& man) {
    if (!nerve_path.empty()) {
        const std::string bytes = read_file(nerve_path);
        man.input_hashes[nerve_path] = content_hash(bytes);
        return system_from_json(Json::parse(bytes));
    }
    if (!preset.empty()) return preset_system(preset);
    throw error(errc::bad_format, "provide --nerve FILE or --preset NAME");
}

std::vector<double> parse_p_grid(const std::string& text) {
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) return {std::stod(text)};
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw error(errc::bad_format, "p grid is lo:hi:step");
    const double lo = std::stod(text.substr(0, c1));
    const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (step <= 0.0 || hi < lo) throw error(errc::bad_format, "bad p grid");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double p = lo + i * step;
        if (p > hi + 1e-12) break;
        grid.push_back(std::min(p, 1.0));
    }
    return grid;
}

BallMode parse_mode(const std::string& mode) {
    if (mode == "auto") return BallMode::automatic;
    if (mode == "matrix") return BallMode::matrix;
    if (mode == "word") return BallMode::word;
    throw error(errc::bad_format, "mode must be auto, matrix or word");
}

CayleyBall load_profiled_ball(const std::string& path, RunManifest& man) {
    man.input_hashes[path] = content_hash(read_file(path));
    return load_ball(path); // load_ball profiles on load
}

int run(int argc, char** argv) {
    CLI::App app{"growth, spectral bounds and percolation diagnostics for "
                 "hyperbolic reflection groups"};
    app.require_subcommand(1);
    const std::vector<std::string> full_argv(argv, argv + argc);

    // ---- certify ----------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "phase certificate for one k and bound family");
    unsigned certify_k = 12;
    std::string certify_family = "rac";
    std::string certify_out;
    certify->add_option("--k", certify_k, "number of polyhedron faces")->required();
    certify->add_option("--family", certify_family, "basic | general | rac")
        ->check(CLI::IsMember({"basic", "general", "rac"}))
        ->required();
    certify->add_option("--out", certify_out, "write the certificate JSON here");
    certify->callback([&] {
        const PhaseCertificate cert = certify_phase(certify_k, certify_family);
        const std::string body = certificate_json(cert).dump(2) + "\n";
        std::cout << body;
        if (!certify_out.empty())
            write_output(certify_out, body, make_manifest("certify", full_argv, 0));
    });

    // ---- table ------------------------------------------------------------
    auto* table = app.add_subcommand("table", "minimal k per bound family and mode");
    std::string table_out;
    table->add_option("--out", table_out, "write the CSV here");
    table->callback([&] {
        const std::string csv = threshold_table_csv(secrems_table());
        std::cout << csv;
        if (!table_out.empty()) write_output(table_out, csv, make_manifest("table", full_argv, 0));
    });

    // ---- growth -----------------------------------------------------------
    auto* growth = app.add_subcommand("growth", "exact growth series and growth rate");
    std::string growth_nerve, growth_preset, growth_out = "growth.json";
    unsigned growth_terms = 64;
    growth->add_option("--nerve", growth_nerve, "nerve description JSON");
    growth->add_option("--preset", growth_preset, "built-in system name");
    growth->add_option("--terms", growth_terms, "Taylor coefficients to emit");
    growth->add_option("--out", growth_out, "output JSON path");
    growth->callback([&] {
        RunManifest man = make_manifest("growth", full_argv, 0);
        const CoxeterSystem sys = resolve_system(growth_nerve, growth_preset, man);
        const GrowthResult g =
            growth_rate(steinberg_inverse_growth(build_nerve(sys)), growth_terms);
        write_output(growth_out, growth_json(g).dump(2) + "\n", man);
        std::cout << "root " << format_decimal(g.least_positive_root, 12) << "  rate "
                  << format_decimal(g.growth_rate, 12) << "\n";
    });

    // ---- ball -------------------------------------------------------------
    auto* ballcmd = app.add_subcommand("ball", "build (or fetch) a Cayley ball");
    std::string ball_nerve, ball_preset, ball_mode = "auto", ball_out = "ball.bin";
    std::string ball_json_path, ball_cache;
    unsigned ball_radius = 3;
    std::size_t ball_budget = 500000;
    bool ball_no_build = false;
    ballcmd->add_option("--nerve", ball_nerve, "nerve description JSON");
    ballcmd->add_option("--preset", ball_preset, "built-in system name");
    ballcmd->add_option("--radius", ball_radius, "ball radius")->required();
    ballcmd->add_option("--mode", ball_mode, "auto | matrix | word");
    ballcmd->add_option("--out", ball_out, "output ball path");
    ballcmd->add_option("--json", ball_json_path, "also write a JSON debug dump");
    ballcmd->add_option("--budget", ball_budget, "vertex budget");
    ballcmd->add_option("--cache", ball_cache, "ball cache directory");
    ballcmd->add_flag("--no-build", ball_no_build, "fail on a cache miss instead of building");
    ballcmd->callback([&] {
        RunManifest man = make_manifest("ball", full_argv, 0);
        const CoxeterSystem sys = resolve_system(ball_nerve, ball_preset, man);
        const BallMode mode = parse_mode(ball_mode);

        fs::path cache_file;
        if (!ball_cache.empty()) {
            // invalidation is by content hash of the system, not by filename
            cache_file = fs::path(ball_cache) /
                         (std::to_string(system_hash(sys)) + "_r" + std::to_string(ball_radius) +
                          "_" + ball_mode_name(mode) + ".ball");
        }

        CayleyBall ball;
        if (!cache_file.empty() && fs::exists(cache_file)) {
            ball = load_ball(cache_file.string());
        } else if (ball_no_build) {
            throw error(errc::cache_miss, "no cached ball and --no-build given");
        } else {
            ball = build_ball(sys, ball_radius, mode, ball_budget);
            orient_and_profile(ball);
            if (!cache_file.empty()) {
                fs::create_directories(cache_file.parent_path());
                save_ball(ball, cache_file.string());
            }
        }

        save_ball(ball, ball_out);
        write_file(ball_out + ".manifest.json", man.to_json().dump(2) + "\n");
        if (!ball_json_path.empty())
            write_output(ball_json_path, ball_json(ball).dump() + "\n", man);
        std::cout << "vertices " << ball.vertex_count() << "  edges " << ball.edges.size()
                  << "\n";
    });

    // ---- cycles -----------------------------------------------------------
    auto* cycles = app.add_subcommand("cycles", "closed / non-backtracking / simple cycle counts");
    std::string cycles_graph, cycles_out = "cycles.csv";
    unsigned cycles_n = 12;
    cycles->add_option("--graph", cycles_graph, "ball cache file")->required();
    cycles->add_option("--N", cycles_n, "walk length horizon");
    cycles->add_option("--out", cycles_out, "output CSV path");
    cycles->callback([&] {
        RunManifest man = make_manifest("cycles", full_argv, 0);
        const CayleyBall ball = load_profiled_ball(cycles_graph, man);
        const WalkCounts wc = count_walks(ball.as_graph(), 0, cycles_n);
        write_output(cycles_out, walk_counts_csv(wc), man);
        std::cout << "wrote " << cycles_out << "\n";
    });

    // ---- percolate --------------------------------------------------------
    auto* perc = app.add_subcommand("percolate", "crossing curve on a Cayley ball");
    std::string perc_ball, perc_mode = "bond", perc_p = "0.05:0.25:0.01";
    std::string perc_out = "percolate.csv", perc_probe_out;
    std::uint64_t perc_trials = 2000, perc_seed = 7;
    unsigned perc_threads = 1;
    std::size_t perc_probe_min = 0;
    perc->add_option("--ball", perc_ball, "ball cache file")->required();
    perc->add_option("--mode", perc_mode, "bond | site")
        ->check(CLI::IsMember({"bond", "site"}));
    perc->add_option("--p", perc_p, "probability grid lo:hi:step or a single value");
    perc->add_option("--trials", perc_trials, "Monte Carlo trials per p");
    perc->add_option("--seed", perc_seed, "base seed");
    perc->add_option("--threads", perc_threads, "worker threads");
    perc->add_option("--out", perc_out, "output CSV path");
    perc->add_option("--probe-min-size", perc_probe_min,
                     "also run the boundary-cluster multiplicity probe at this minimum size");
    perc->add_option("--probe-out", perc_probe_out, "multiplicity histogram JSON path");
    perc->callback([&] {
        RunManifest man = make_manifest("percolate", full_argv, perc_seed);
        const CayleyBall ball = load_profiled_ball(perc_ball, man);
        const PercMode mode = perc_mode == "site" ? PercMode::site : PercMode::bond;
        const std::vector<double> grid = parse_p_grid(perc_p);
        const auto curve = crossing_curve(ball, mode, grid, perc_trials, perc_seed, perc_threads);
        write_output(perc_out, crossing_curve_csv(curve), man);
        if (perc_probe_min > 0) {
            Json probes = Json::array();
            for (double p : grid)
                probes.push_back(multiplicity_json(multiplicity_probe(
                    ball, mode, p, perc_trials, perc_seed, perc_probe_min, perc_threads)));
            Json j;
            j["mode"] = perc_mode;
            j["probes"] = std::move(probes);
            j["heuristic"] = true;
            const std::string path = perc_probe_out.empty() ? "multiplicity.json" : perc_probe_out;
            write_output(path, j.dump(2) + "\n", man);
        }
        std::cout << "wrote " << perc_out << "\n";
    });

    // ---- slab -------------------------------------------------------------
    auto* slab = app.add_subcommand("slab", "horocyclic slab connection function estimate");
    unsigned slab_pgon = 5, slab_radius = 7, slab_threads = 1;
    double slab_h = 1.0, slab_p = 0.15, slab_rmax = 20.0, slab_rstep = 0.25;
    std::uint64_t slab_trials = 5000, slab_seed = 9;
    std::string slab_out = "slab.csv", slab_fit_out = "slab_fit.json";
    slab->add_option("--pgon", slab_pgon, "polygon sides (>= 5)");
    slab->add_option("--radius", slab_radius, "Cayley ball radius");
    slab->add_option("--H", slab_h, "slab height");
    slab->add_option("--p", slab_p, "bond probability");
    slab->add_option("--rmax", slab_rmax, "largest r on the grid");
    slab->add_option("--rstep", slab_rstep, "grid step");
    slab->add_option("--trials", slab_trials, "Monte Carlo trials");
    slab->add_option("--seed", slab_seed, "base seed");
    slab->add_option("--threads", slab_threads, "worker threads");
    slab->add_option("--out", slab_out, "output CSV path");
    slab->add_option("--fit-out", slab_fit_out, "exponential fit JSON path");
    slab->callback([&] {
        RunManifest man = make_manifest("slab", full_argv, slab_seed);
        const SlabEmbedding emb = embed_polygon_group(slab_pgon, slab_radius);
        std::vector<double> grid;
        for (double r = slab_rstep; r <= slab_rmax + 1e-12; r += slab_rstep) grid.push_back(r);
        const GEstimate est =
            estimate_g(emb, slab_h, slab_p, grid, slab_trials, slab_seed, slab_threads);
        write_output(slab_out, g_estimate_csv(est), man);
        write_output(slab_fit_out, g_fit_json(est).dump(2) + "\n", man);
        std::cout << "psi_hat " << format_decimal(est.psi_hat, 6) << "  r2 "
                  << format_decimal(est.r_squared, 6) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // unknown command / bad flag
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_budget() ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
