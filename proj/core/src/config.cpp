#include "sbe/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "sbe/errors.hpp"

namespace sbe {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw ConfigError(os.str());
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        fail(origin, line, key + " expects a number, got '" + value + "'");
    return v;
}

long long parse_int(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        fail(origin, line, key + " expects an integer, got '" + value + "'");
    return v;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : value) {
        if (c == ',') {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(trim(cur));
    return items;
}

ModelKind model_from_name(const std::string& origin, int line, const std::string& value) {
    for (ModelKind m : {ModelKind::ou, ModelKind::sbe, ModelKind::ddt, ModelKind::ss_lattice,
                        ModelKind::ns2d})
        if (value == model_name(m)) return m;
    fail(origin, line, "unknown model '" + value + "' (ou, sbe, ddt, ss_lattice, ns2d)");
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::simulate: return "simulate";
        case ExperimentKind::invariance: return "invariance";
        case ExperimentKind::drift_scaling: return "drift-scaling";
        case ExperimentKind::cauchy: return "cauchy";
        case ExperimentKind::mollifier_cauchy: return "mollifier-cauchy";
        case ExperimentKind::ito_check: return "ito-check";
        case ExperimentKind::uniqueness: return "uniqueness";
        case ExperimentKind::ns2d_invariance: return "ns2d-invariance";
    }
    return "?";
}

ExperimentKind experiment_from_name(const std::string& name) {
    for (ExperimentKind k :
         {ExperimentKind::simulate, ExperimentKind::invariance, ExperimentKind::drift_scaling,
          ExperimentKind::cauchy, ExperimentKind::mollifier_cauchy, ExperimentKind::ito_check,
          ExperimentKind::uniqueness, ExperimentKind::ns2d_invariance})
        if (name == experiment_name(k)) return k;
    throw ConfigError("unknown experiment '" + name +
                      "' (simulate, invariance, drift-scaling, cauchy, mollifier-cauchy, "
                      "ito-check, uniqueness, ns2d-invariance)");
}

void ExperimentSpec::validate() const {
    if (paths < 1) throw ConfigError("paths must be >= 1");
    if (has("eps") && !(eps > 0)) throw ConfigError("eps must be > 0");
    for (int k : modes)
        if (k < 1) throw ConfigError("modes entries must be >= 1");
    for (int m : m_list)
        if (m < 1) throw ConfigError("M_list entries must be >= 1");
    for (double e : eps_list)
        if (!(e > 0)) throw ConfigError("eps_list entries must be > 0");
    if (kind == ExperimentKind::ns2d_invariance && model.model != ModelKind::ns2d)
        throw ConfigError("ns2d-invariance requires model = ns2d");
    if (kind == ExperimentKind::ito_check && model.model != ModelKind::ou &&
        model.model != ModelKind::sbe)
        throw ConfigError("ito-check requires model = ou or sbe");
    model.validate();
}

ExperimentSpec parse_config_text(const std::string& text, ExperimentKind kind,
                                 const std::string& origin) {
    ExperimentSpec spec;
    spec.kind = kind;

    std::map<std::string, int> seen;  // key -> first line
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) fail(origin, line, "expected 'key = value', got '" + s + "'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(origin, line, "empty key");
        if (value.empty()) fail(origin, line, "empty value for key '" + key + "'");

        auto ins = seen.emplace(key, line);
        if (!ins.second) {
            std::ostringstream os;
            os << "duplicate key '" << key << "' (lines " << ins.first->second << " and " << line
               << ")";
            fail(origin, line, os.str());
        }

        if (key == "model") {
            spec.model.model = model_from_name(origin, line, value);
        } else if (key == "theta") {
            spec.model.theta = parse_double(origin, line, key, value);
            if (!(spec.model.theta >= 0)) fail(origin, line, "theta must be >= 0");
        } else if (key == "sigma") {
            spec.model.sigma = parse_double(origin, line, key, value);
            if (!(spec.model.sigma >= 0)) fail(origin, line, "sigma must be >= 0");
        } else if (key == "N") {
            long long n = parse_int(origin, line, key, value);
            if (n < 1 || n > 1 << 20) fail(origin, line, "N must be in [1, 2^20]");
            spec.model.N = int(n);
        } else if (key == "dt") {
            spec.model.dt = parse_double(origin, line, key, value);
            if (!(spec.model.dt > 0)) fail(origin, line, "dt must be > 0");
        } else if (key == "T") {
            spec.model.T = parse_double(origin, line, key, value);
            if (!(spec.model.T > 0)) fail(origin, line, "T must be > 0");
        } else if (key == "stride") {
            long long v = parse_int(origin, line, key, value);
            if (v < 1) fail(origin, line, "stride must be >= 1");
            spec.model.stride = int(v);
        } else if (key == "noise_factor") {
            spec.model.noise_factor = parse_double(origin, line, key, value);
            if (!(spec.model.noise_factor > 0)) fail(origin, line, "noise_factor must be > 0");
        } else if (key == "paths") {
            long long v = parse_int(origin, line, key, value);
            if (v < 1) fail(origin, line, "paths must be >= 1");
            spec.paths = int(v);
        } else if (key == "modes") {
            for (const std::string& item : split_list(value)) {
                long long v = parse_int(origin, line, key, item);
                if (v < 1) fail(origin, line, "modes entries must be >= 1");
                spec.modes.push_back(int(v));
            }
        } else if (key == "M_list") {
            for (const std::string& item : split_list(value)) {
                long long v = parse_int(origin, line, key, item);
                if (v < 1) fail(origin, line, "M_list entries must be >= 1");
                spec.m_list.push_back(int(v));
            }
        } else if (key == "eps_list") {
            for (const std::string& item : split_list(value)) {
                double v = parse_double(origin, line, key, item);
                if (!(v > 0)) fail(origin, line, "eps_list entries must be > 0");
                spec.eps_list.push_back(v);
            }
        } else if (key == "eps") {
            spec.eps = parse_double(origin, line, key, value);
            if (!(spec.eps > 0)) fail(origin, line, "eps must be > 0");
        } else if (key == "seed") {
            errno = 0;
            char* end = nullptr;
            unsigned long long v = std::strtoull(value.c_str(), &end, 10);
            // strtoull accepts a leading '-' by wrapping; forbid it explicitly
            if (value.empty() || value[0] == '-' || end == value.c_str() || *end != '\0' ||
                errno == ERANGE)
                fail(origin, line, "seed expects an unsigned integer, got '" + value + "'");
            spec.seed = v;
        } else if (key == "out") {
            spec.out_dir = value;
        } else {
            fail(origin, line, "unknown key '" + key + "'");
        }
        spec.provided.insert(key);
    }
    if (kind == ExperimentKind::ns2d_invariance && !spec.has("model"))
        spec.model.model = ModelKind::ns2d;
    spec.validate();
    return spec;
}

ExperimentSpec parse_config(const std::string& path, ExperimentKind kind) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str(), kind, path);
}

}  // namespace sbe
