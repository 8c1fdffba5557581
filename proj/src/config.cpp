#include "cab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cab/errors.hpp"

namespace cab {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for " + key + ": '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
        const std::uint64_t v = std::stoull(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for " + key + ": '" + value + "'");
    }
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string item;
    std::stringstream stream(value);
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const auto& item : split_list(value)) out.push_back(parse_double(key, item));
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string join_doubles(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_double(values[i]);
    }
    return out;
}

void validate(const ExperimentConfig& config) {
    if (config.horizon < 1) throw ConfigError("config: T must be >= 1");
    if (config.trials < 1) throw ConfigError("config: trials must be >= 1");
    if (config.context_dim < 0) throw ConfigError("config: d_x must be >= 0");
    if (config.arm_dim < 1) throw ConfigError("config: d_y must be >= 1");
    if (!(config.probe_scale > 0.0 && config.probe_scale <= 0.5))
        throw ConfigError("config: delta must lie in (0, 0.5]");
    if (config.bins_override && *config.bins_override < 1)
        throw ConfigError("config: K_override must be >= 1");
    if (config.gain_override && !(*config.gain_override > 0.0))
        throw ConfigError("config: a_override must be positive");
    if (!config.checkpoints.empty()) {
        for (std::size_t i = 0; i < config.checkpoints.size(); ++i) {
            if (config.checkpoints[i] < 1)
                throw ConfigError("config: checkpoints must be >= 1");
            if (i > 0 && config.checkpoints[i] <= config.checkpoints[i - 1])
                throw ConfigError("config: checkpoints must be strictly increasing");
        }
        if (config.checkpoints.back() != config.horizon)
            throw ConfigError("config: last checkpoint must equal T");
    }
}

}  // namespace

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::kwsa_binning: return "kwsa_binning";
        case Algorithm::discretized_ucb: return "discretized_ucb";
    }
    return "unknown";
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon) {
    std::vector<std::uint64_t> points;
    for (int k = 1; k <= 10; ++k) {
        const double value =
            std::pow(static_cast<double>(horizon), static_cast<double>(k) / 10.0);
        auto t = static_cast<std::uint64_t>(std::ceil(value));
        t = std::clamp<std::uint64_t>(t, 1, horizon);
        if (points.empty() || t > points.back()) points.push_back(t);
    }
    if (points.back() != horizon) points.push_back(horizon);
    return points;
}

std::vector<std::uint64_t> effective_checkpoints(const ExperimentConfig& config) {
    return config.checkpoints.empty() ? default_checkpoints(config.horizon)
                                      : config.checkpoints;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig config;
    bool saw_q = false, saw_center = false, saw_amplitude = false;

    std::stringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " is not 'key = value'");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " has an empty key or value");

        if (key == "experiment.d_x") {
            config.context_dim = static_cast<int>(parse_u64(key, value));
        } else if (key == "experiment.d_y") {
            config.arm_dim = static_cast<int>(parse_u64(key, value));
        } else if (key == "experiment.T") {
            config.horizon = parse_u64(key, value);
        } else if (key == "experiment.trials") {
            config.trials = parse_u64(key, value);
        } else if (key == "experiment.master_seed") {
            config.master_seed = parse_u64(key, value);
        } else if (key == "experiment.algorithm") {
            if (value == "kwsa_binning") config.algorithm = Algorithm::kwsa_binning;
            else if (value == "discretized_ucb") config.algorithm = Algorithm::discretized_ucb;
            else throw ConfigError("config: unknown algorithm '" + value + "'");
        } else if (key == "experiment.K_override") {
            config.bins_override = static_cast<int>(parse_u64(key, value));
        } else if (key == "experiment.a_override") {
            config.gain_override = parse_double(key, value);
        } else if (key == "experiment.delta") {
            config.probe_scale = parse_double(key, value);
        } else if (key == "experiment.checkpoints") {
            config.checkpoints.clear();
            for (const auto& item : split_list(value))
                config.checkpoints.push_back(parse_u64(key, item));
        } else if (key == "env.f0") {
            config.env.peak = parse_double(key, value);
        } else if (key == "env.q") {
            config.env.curvature = parse_double_list(key, value);
            saw_q = true;
        } else if (key == "env.center") {
            config.env.center = parse_double_list(key, value);
            saw_center = true;
        } else if (key == "env.amplitude") {
            config.env.amplitude = parse_double_list(key, value);
            saw_amplitude = true;
        } else if (key == "env.phi") {
            if (value == "affine") config.env.phi = PhiKind::affine;
            else if (value == "holder") config.env.phi = PhiKind::holder;
            else throw ConfigError("config: unknown phi '" + value + "'");
        } else if (key == "env.alpha") {
            config.env.alpha = parse_double(key, value);
        } else if (key == "env.noise_sigma") {
            config.env.noise_sigma = parse_double(key, value);
        } else if (key == "env.margin") {
            config.env.margin = parse_double(key, value);
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }

    config.env.context_dim = config.context_dim;
    config.env.arm_dim = config.arm_dim;
    const auto d_y = static_cast<std::size_t>(std::max(config.arm_dim, 1));
    if (!saw_q) config.env.curvature.assign(d_y, 1.0);
    if (!saw_center) config.env.center.assign(d_y, 0.5);
    if (!saw_amplitude) config.env.amplitude.assign(d_y, 0.0);
    if (saw_q && config.env.curvature.size() != d_y)
        throw ConfigError("config: env.q must have d_y entries");
    if (saw_center && config.env.center.size() != d_y)
        throw ConfigError("config: env.center must have d_y entries");
    if (saw_amplitude && config.env.amplitude.size() != d_y)
        throw ConfigError("config: env.amplitude must have d_y entries");

    validate(config);
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string canonical_config_text(const ExperimentConfig& config) {
    std::string out;
    auto add = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    add("experiment.d_x", std::to_string(config.context_dim));
    add("experiment.d_y", std::to_string(config.arm_dim));
    add("experiment.T", std::to_string(config.horizon));
    add("experiment.trials", std::to_string(config.trials));
    add("experiment.master_seed", std::to_string(config.master_seed));
    add("experiment.algorithm", algorithm_name(config.algorithm));
    if (config.bins_override)
        add("experiment.K_override", std::to_string(*config.bins_override));
    if (config.gain_override)
        add("experiment.a_override", format_double(*config.gain_override));
    add("experiment.delta", format_double(config.probe_scale));
    {
        std::string list;
        const auto checkpoints = effective_checkpoints(config);
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            if (i) list += ", ";
            list += std::to_string(checkpoints[i]);
        }
        add("experiment.checkpoints", list);
    }
    add("env.f0", format_double(config.env.peak));
    add("env.q", join_doubles(config.env.curvature));
    add("env.center", join_doubles(config.env.center));
    add("env.amplitude", join_doubles(config.env.amplitude));
    add("env.phi", config.env.phi == PhiKind::affine ? "affine" : "holder");
    add("env.alpha", format_double(config.env.alpha));
    add("env.noise_sigma", format_double(config.env.noise_sigma));
    add("env.margin", format_double(config.env.margin));
    return out;
}

QuadraticEnv build_environment(const ExperimentConfig& config) {
    QuadraticEnvSpec spec = config.env;
    spec.context_dim = config.context_dim;
    spec.arm_dim = config.arm_dim;
    return QuadraticEnv(spec);
}

}  // namespace cab
