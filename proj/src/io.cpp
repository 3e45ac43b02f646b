#include "chq/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace chq {
namespace {

constexpr std::uint32_t kSnapshotVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i)
        b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_snapshot(const std::string& path, const SpatialGrid& g, const ModelParams& mp,
                    double t, const std::vector<cplx>& field) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("snapshot: cannot open for writing: " + path);
    os.write("CHQS", 4);
    put_u32(os, kSnapshotVersion);
    put_u32(os, static_cast<std::uint32_t>(g.dim()));
    put_u32(os, static_cast<std::uint32_t>(g.points_per_axis()));
    put_f64(os, g.box());
    put_f64(os, t);
    put_f64(os, mp.alpha);
    put_f64(os, mp.b);
    put_f64(os, mp.p);
    for (const cplx& z : field) {
        put_f64(os, z.real());
        put_f64(os, z.imag());
    }
    if (!os)
        throw std::runtime_error("snapshot: write failed: " + path);
}

SnapshotData read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("snapshot: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "CHQS", 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    std::uint32_t version = get_u32(is);
    if (version != kSnapshotVersion)
        throw std::runtime_error("snapshot: unsupported version in " + path);
    SnapshotData s;
    s.dim = static_cast<int>(get_u32(is));
    s.points_per_axis = static_cast<int>(get_u32(is));
    s.box = get_f64(is);
    s.t = get_f64(is);
    s.alpha = get_f64(is);
    s.b = get_f64(is);
    s.p = get_f64(is);
    if (!is || s.dim < 1 || s.dim > 4 || s.points_per_axis < 4)
        throw std::runtime_error("snapshot: corrupt header in " + path);
    std::size_t n = 1;
    for (int d = 0; d < s.dim; ++d)
        n *= static_cast<std::size_t>(s.points_per_axis);
    s.field.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double re = get_f64(is);
        double im = get_f64(is);
        s.field[i] = cplx(re, im);
    }
    if (!is)
        throw std::runtime_error("snapshot: truncated payload in " + path);
    return s;
}

void write_diagnostics_csv(const std::string& path, const TrajectoryReport& rep) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("diagnostics: cannot open for writing: " + path);
    os << "# diagnostics schema v1\n";
    os << "t,mass,energy_2p,energy_p,grad_l2,hsc_norm,potential_P,local_mass,"
          "morawetz_action,kinetic_threshold_ratio,boundary_mass\n";
    for (const DiagnosticsRecord& r : rep.records) {
        os << format_double(r.t) << ',' << format_double(r.mass) << ','
           << format_double(r.energy_2p) << ',' << format_double(r.energy_p) << ','
           << format_double(r.grad_l2) << ',' << format_double(r.hsc_norm) << ','
           << format_double(r.potential_P) << ',' << format_double(r.local_mass) << ','
           << format_double(r.morawetz_action) << ','
           << format_double(r.kinetic_threshold_ratio) << ','
           << format_double(r.boundary_mass) << '\n';
    }
    if (!os)
        throw std::runtime_error("diagnostics: write failed: " + path);
}

void write_threshold_csv(const std::string& path, const ModelParams& mp,
                         const DerivedExponents& ex, const GroundState& gs) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("thresholds: cannot open for writing: " + path);
    os << "N,alpha,b,p,s_c,A,B,massQ,gradQ_sq,energyQ,C0,ME_threshold,K_threshold,"
          "residual,grid_M,box_L,seed_id\n";
    os << mp.dim << ',' << format_double(mp.alpha) << ',' << format_double(mp.b) << ','
       << format_double(mp.p) << ',' << format_double(ex.s_c) << ','
       << format_double(ex.A) << ',' << format_double(ex.B) << ','
       << format_double(gs.massQ) << ',' << format_double(gs.gradQ_sq) << ','
       << format_double(gs.energyQ) << ',' << format_double(gs.C0) << ','
       << format_double(gs.ME_threshold) << ',' << format_double(gs.K_threshold) << ','
       << format_double(gs.residual) << ',' << gs.grid->points_per_axis() << ','
       << format_double(gs.grid->box()) << ',' << gs.seed_id << '\n';
    if (!os)
        throw std::runtime_error("thresholds: write failed: " + path);
}

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        key.erase(std::find_if(key.rbegin(), key.rend(), notspace).base(), key.end());
        val.erase(val.begin(), std::find_if(val.begin(), val.end(), notspace));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (out.count(key))
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
        out[key] = val;
    }
    return out;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

double config_double(const ConfigMap& c, const std::string& key, double fallback) {
    auto it = c.find(key);
    if (it == c.end())
        return fallback;
    try {
        std::size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not a number: " + it->second);
    }
}

long long config_int(const ConfigMap& c, const std::string& key, long long fallback) {
    auto it = c.find(key);
    if (it == c.end())
        return fallback;
    try {
        std::size_t pos = 0;
        long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not an integer: " + it->second);
    }
}

bool config_bool(const ConfigMap& c, const std::string& key, bool fallback) {
    auto it = c.find(key);
    if (it == c.end())
        return fallback;
    if (it->second == "true" || it->second == "1")
        return true;
    if (it->second == "false" || it->second == "0")
        return false;
    throw ConfigError("config: key '" + key + "' is not a boolean: " + it->second);
}

std::string config_string(const ConfigMap& c, const std::string& key,
                          const std::string& fallback) {
    auto it = c.find(key);
    return it == c.end() ? fallback : it->second;
}

std::vector<double> config_double_list(const ConfigMap& c, const std::string& key) {
    std::vector<double> out;
    auto it = c.find(key);
    if (it == c.end() || it->second.empty())
        return out;
    std::istringstream is(it->second);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("config: key '" + key + "' has a bad list entry: " + tok);
        }
    }
    return out;
}

void reject_unknown_keys(const ConfigMap& c, const std::vector<std::string>& known) {
    for (const auto& [key, value] : c) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("config: unknown key '" + key + "'");
    }
}

void write_resolved_config(const std::string& path, const ConfigMap& c) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("config echo: cannot open for writing: " + path);
    for (const auto& [key, value] : c)
        os << key << " = " << value << '\n';
    if (!os)
        throw std::runtime_error("config echo: write failed: " + path);
}

} // namespace chq
