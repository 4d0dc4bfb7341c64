#pragma once

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nuphase/cayley.hpp"
#include "nuphase/coxeter.hpp"
#include "nuphase/cycles.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/growth.hpp"
#include "nuphase/percolation.hpp"
#include "nuphase/slab.hpp"
#include "nuphase/spectral.hpp"
#include "nuphase/version.hpp"

namespace nuphase {

using Json = nlohmann::ordered_json;

/// Locale-independent fixed-point decimal rendering.
inline std::string format_decimal(double v, int places) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, places);
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Coxeter matrix and nerve-description JSON
// ---------------------------------------------------------------------------

/// {"k": n, "edges": [[s, t, m], ...]}; pairs absent from the list have
/// m = infinity. Labels may be the string "inf" for explicit infinities.
inline Json nerve_json(const CoxeterSystem& sys) {
    Json j;
    j["k"] = sys.rank();
    Json edges = Json::array();
    for (unsigned s = 0; s < sys.rank(); ++s)
        for (unsigned t = s + 1; t < sys.rank(); ++t)
            if (m_is_finite(sys.m(s, t))) edges.push_back(Json::array({s, t, sys.m(s, t)}));
    j["edges"] = std::move(edges);
    return j;
}

inline CoxeterSystem system_from_json(const Json& j) {
    if (!j.contains("k") || !j["k"].is_number_unsigned())
        throw error(errc::bad_format, "nerve JSON needs an unsigned \"k\"");
    CoxeterMatrix m(j["k"].get<unsigned>());
    for (const auto& e : j.value("edges", Json::array())) {
        if (!e.is_array() || e.size() != 3)
            throw error(errc::bad_format, "edge entries must be [s, t, m]");
        const unsigned s = e[0].get<unsigned>(), t = e[1].get<unsigned>();
        if (s >= m.rank() || t >= m.rank())
            throw error(errc::bad_format, "edge endpoint out of range");
        if (e[2].is_string()) {
            if (e[2].get<std::string>() != "inf")
                throw error(errc::bad_format, "labels are integers or \"inf\"");
            m.set(s, t, m_infinity);
        } else {
            m.set(s, t, e[2].get<unsigned>());
        }
    }
    return CoxeterSystem::validate(m);
}

inline CoxeterSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::bad_format, "cannot open " + path);
    Json j;
    in >> j;
    return system_from_json(j);
}

// ---------------------------------------------------------------------------
// Growth and certificate JSON
// ---------------------------------------------------------------------------

inline Json growth_json(const GrowthResult& g) {
    Json j;
    j["root"] = format_decimal(g.least_positive_root, 12);
    j["rate"] = format_decimal(g.growth_rate, 12);
    Json coeffs = Json::array();
    for (const auto& c : g.taylor_coefficients) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json certificate_json(const PhaseCertificate& c) {
    Json j;
    j["k"] = c.k;
    j["family"] = c.family;
    j["b1"] = format_decimal(c.b1, 15);
    j["b2"] = format_decimal(c.b2, 15);
    j["verdict"] = c.verdict;
    if (c.verdict) {
        j["certified_interval"] =
            Json::array({format_decimal(c.interval_lo, 15), format_decimal(c.interval_hi, 15)});
    } else {
        j["certified_interval"] = nullptr;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Ball cache (versioned binary) and JSON debug dump
// ---------------------------------------------------------------------------

namespace detail {

constexpr char ball_magic[8] = {'N', 'U', 'B', 'A', 'L', 'L', '0', '1'};

template <class T>
void put(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw error(errc::bad_format, "truncated ball cache");
    return v;
}

} // namespace detail

inline void save_ball(const CayleyBall& ball, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::bad_format, "cannot write " + path);
    out.write(detail::ball_magic, sizeof(detail::ball_magic));
    detail::put(out, ball.sys_hash);
    detail::put<std::uint32_t>(out, ball.R);
    detail::put<std::uint32_t>(out, ball.k);
    detail::put<std::uint8_t>(out, static_cast<std::uint8_t>(ball.mode));
    detail::put<std::uint64_t>(out, ball.vertex_count());
    for (auto l : ball.level) detail::put(out, l);
    detail::put<std::uint64_t>(out, ball.edges.size());
    for (const auto& e : ball.edges) {
        detail::put(out, e.lo);
        detail::put(out, e.hi);
        detail::put(out, e.gen);
    }
}

inline CayleyBall load_ball(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::cache_miss, "cannot open " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, detail::ball_magic, sizeof(magic)) != 0)
        throw error(errc::bad_format, "not a ball cache: " + path);
    CayleyBall ball;
    ball.sys_hash = detail::get<std::uint64_t>(in);
    ball.R = detail::get<std::uint32_t>(in);
    ball.k = detail::get<std::uint32_t>(in);
    ball.mode = static_cast<BallMode>(detail::get<std::uint8_t>(in));
    const auto nv = detail::get<std::uint64_t>(in);
    if (nv > (1ULL << 32)) throw error(errc::bad_format, "implausible vertex count in cache");
    ball.level.resize(nv);
    for (auto& l : ball.level) l = detail::get<std::uint32_t>(in);
    const auto ne = detail::get<std::uint64_t>(in);
    if (ne > (1ULL << 36)) throw error(errc::bad_format, "implausible edge count in cache");
    ball.edges.resize(ne);
    for (auto& e : ball.edges) {
        e.lo = detail::get<std::uint32_t>(in);
        e.hi = detail::get<std::uint32_t>(in);
        e.gen = detail::get<std::uint16_t>(in);
    }
    ball.sphere_sizes.assign(ball.R + 1, 0);
    for (auto l : ball.level) ++ball.sphere_sizes[l];
    orient_and_profile(ball);
    return ball;
}

inline Json ball_json(const CayleyBall& ball) {
    Json j;
    j["R"] = ball.R;
    j["k"] = ball.k;
    j["mode"] = ball_mode_name(ball.mode);
    j["system_hash"] = ball.sys_hash;
    j["spheres"] = ball.sphere_sizes;
    Json edges = Json::array();
    for (const auto& e : ball.edges) edges.push_back(Json::array({e.lo, e.hi, e.gen}));
    j["edges"] = std::move(edges);
    return j;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180: CRLF line endings, header row)
// ---------------------------------------------------------------------------

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) {
        append_row(header);
    }

    void append_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << "\r\n";
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

inline std::string crossing_curve_csv(const std::vector<CurvePoint>& curve) {
    CsvWriter csv({"p", "estimate", "ci_lo", "ci_hi"});
    for (const auto& pt : curve)
        csv.append_row({format_decimal(pt.p, 6), format_decimal(pt.estimate, 6),
                        format_decimal(pt.ci_lo, 6), format_decimal(pt.ci_hi, 6)});
    return csv.str();
}

inline std::string threshold_table_csv(const std::vector<ThresholdRow>& rows) {
    CsvWriter csv({"lemma", "mode", "threshold"});
    for (const auto& r : rows) csv.append_row({r.family, r.mode, std::to_string(r.threshold)});
    return csv.str();
}

inline std::string walk_counts_csv(const WalkCounts& wc) {
    CsvWriter csv({"n", "C", "a_star", "a_simple"});
    for (std::size_t n = 0; n < wc.C.size(); ++n)
        csv.append_row({std::to_string(n), wc.C[n].str(), wc.a_star[n].str(),
                        n < wc.a_simple.size() ? wc.a_simple[n].str() : std::string{}});
    return csv.str();
}

inline std::string g_estimate_csv(const GEstimate& est) {
    CsvWriter csv({"r", "g_hat", "ci_lo", "ci_hi"});
    for (const auto& pt : est.g_hat)
        csv.append_row({format_decimal(pt.r, 6), format_decimal(pt.estimate, 6),
                        format_decimal(pt.ci_lo, 6), format_decimal(pt.ci_hi, 6)});
    return csv.str();
}

inline Json g_fit_json(const GEstimate& est) {
    Json j;
    j["psi_hat"] = format_decimal(est.psi_hat, 6);
    j["r2"] = format_decimal(est.r_squared, 6);
    j["fit_points"] = est.fit_points;
    j["p"] = format_decimal(est.p, 6);
    j["H"] = format_decimal(est.H, 6);
    j["trials"] = est.trials;
    // estimation caveats: edges crossing the slab boundary are dropped, and
    // only the (h, R) = (1, identity) representative of the sup is sampled
    j["edge_fragments"] = "dropped";
    j["sup_over_isometries"] = false;
    return j;
}

inline Json multiplicity_json(const MultiplicityHistogram& h) {
    Json j;
    j["p"] = format_decimal(h.p, 6);
    j["min_size"] = h.min_size;
    j["trials"] = h.trials;
    j["mean"] = format_decimal(h.mean, 6);
    Json counts = Json::object();
    for (const auto& [value, times] : h.counts) counts[std::to_string(value)] = times;
    j["histogram"] = std::move(counts);
    j["heuristic"] = true; // finite-ball probe; never feeds a certificate
    return j;
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

inline std::uint64_t content_hash(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct RunManifest {
    std::string command;
    Json parameters = Json::object();
    std::uint64_t seed = 0;
    std::string version = nuphase_version;
    Json input_hashes = Json::object();
    std::string timestamp;

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["seed"] = seed;
        j["version"] = version;
        j["input_hashes"] = input_hashes;
        j["timestamp"] = timestamp;
        return j;
    }
};

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::bad_format, "cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::bad_format, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Write an output file together with its sibling manifest.
inline void write_output(const std::string& path, const std::string& bytes,
                         const RunManifest& manifest) {
    write_file(path, bytes);
    write_file(path + ".manifest.json", manifest.to_json().dump(2) + "\n");
}

} // namespace nuphase
