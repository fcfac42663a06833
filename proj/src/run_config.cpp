#include "qsl/run_config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qsl::cli {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError(where + ": unknown key '" + item.key() + "'");
        }
    }
}

double get_number(const json& j, const std::string& key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
    return v.get<double>();
}

std::uint64_t get_seed(const json& j, const std::string& key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
        throw ConfigError(where + ": '" + key + "' must be an integer seed");
    }
    return v.get<std::uint64_t>();
}

int get_int(const json& j, const std::string& key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ConfigError(where + ": '" + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string get_string(const json& j, const std::string& key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw ConfigError(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

Matrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ConfigError(where + ": matrix must be a nonempty array");
    const Eigen::Index n = static_cast<Eigen::Index>(j.size());
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw ConfigError(where + ": matrix must be square");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto& cell = row.at(static_cast<std::size_t>(k));
            if (cell.is_number()) {
                m(i, k) = Complex(cell.get<double>(), 0.0);
            } else if (cell.is_array() && cell.size() == 2) {
                m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            } else {
                throw ConfigError(where + ": matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

StateSpec parse_state(const json& j, const std::string& where) {
    StateSpec s;
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "plus") {
            s.kind = StateSpec::Kind::plus;
        } else if (name.rfind("basis", 0) == 0) {
            s.kind = StateSpec::Kind::basis;
            const std::string idx = name.substr(5);
            if (!idx.empty() && idx.find_first_not_of("0123456789") != std::string::npos) {
                throw ConfigError(where + ": bad basis index in '" + name + "'");
            }
            s.basis_index = idx.empty() ? 0 : std::stoll(idx);
        } else {
            throw ConfigError(where + ": unknown state name '" + name + "'");
        }
        return s;
    }
    if (j.is_array()) {
        s.kind = StateSpec::Kind::amplitudes;
        s.amplitudes.resize(static_cast<Eigen::Index>(j.size()));
        for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
            const auto& cell = j.at(static_cast<std::size_t>(i));
            if (cell.is_number()) {
                s.amplitudes(i) = Complex(cell.get<double>(), 0.0);
            } else if (cell.is_array() && cell.size() == 2) {
                s.amplitudes(i) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            } else {
                throw ConfigError(where + ": state amplitudes must be numbers or [re, im] pairs");
            }
        }
        return s;
    }
    if (j.is_object()) {
        reject_unknown_keys(j, {"kind", "seed"}, where + ".initial_state");
        if (get_string(j, "kind", where) != "gaussian") {
            throw ConfigError(where + ": only the 'gaussian' state kind takes an object form");
        }
        s.kind = StateSpec::Kind::gaussian;
        s.seed = j.contains("seed") ? get_seed(j, "seed", where) : 0;
        return s;
    }
    throw ConfigError(where + ": invalid initial_state");
}

RateSpec parse_rate(const json& j, const std::string& where) {
    RateSpec r;
    if (j.is_number()) {
        r.kind = RateSpec::Kind::constant;
        r.value = j.get<double>();
        return r;
    }
    if (j.is_object()) {
        reject_unknown_keys(j, {"kind", "value", "amplitude", "frequency", "offset"},
                            where + ".dephasing");
        const std::string kind = get_string(j, "kind", where);
        if (kind == "constant") {
            r.kind = RateSpec::Kind::constant;
            r.value = get_number(j, "value", where);
            return r;
        }
        if (kind == "cosine") {
            r.kind = RateSpec::Kind::cosine;
            if (j.contains("amplitude")) r.amplitude = get_number(j, "amplitude", where);
            if (j.contains("frequency")) r.frequency = get_number(j, "frequency", where);
            if (j.contains("offset")) r.offset = get_number(j, "offset", where);
            return r;
        }
        throw ConfigError(where + ": unknown rate kind '" + kind + "'");
    }
    throw ConfigError(where + ": dephasing must be a number or an object");
}

ScheduleDef parse_schedule(const json& j, const std::string& where) {
    reject_unknown_keys(
        j, {"family", "dim", "params", "seed", "matrix", "initial_state", "dephasing"}, where);
    ScheduleDef def;
    def.family = get_string(j, "family", where);
    if (j.contains("dim")) def.dim = get_int(j, "dim", where);
    if (j.contains("params")) {
        for (const auto& p : j.at("params")) {
            if (!p.is_number()) throw ConfigError(where + ": params must be numbers");
            def.params.push_back(p.get<double>());
        }
    }
    if (j.contains("seed")) def.seed = get_seed(j, "seed", where);
    if (j.contains("matrix")) def.matrix = parse_matrix(j.at("matrix"), where);
    if (def.family == "constant" && def.matrix) {
        try {
            ops::Operator::hermitian(*def.matrix);
        } catch (const NonHermitianInput&) {
            throw ConfigError(where + ": constant-family matrix must be Hermitian");
        }
    }
    if (j.contains("initial_state")) {
        def.initial_state = parse_state(j.at("initial_state"), where);
    }
    if (j.contains("dephasing")) def.dephasing = parse_rate(j.at("dephasing"), where);
    return def;
}

sched::PresetSpec parse_preset(const json& j, const std::string& where) {
    reject_unknown_keys(j, {"family", "tau", "dim", "params", "seed", "matrix"}, where);
    sched::PresetSpec p;
    p.family = get_string(j, "family", where);
    p.tau = get_number(j, "tau", where);
    if (j.contains("dim")) p.dim = get_int(j, "dim", where);
    if (j.contains("params")) {
        for (const auto& x : j.at("params")) {
            if (!x.is_number()) throw ConfigError(where + ": params must be numbers");
            p.params.push_back(x.get<double>());
        }
    }
    if (j.contains("seed")) p.seed = get_seed(j, "seed", where);
    if (j.contains("matrix")) p.h0 = parse_matrix(j.at("matrix"), where);
    return p;
}

lab::ExperimentSpec parse_experiment(const json& j, const std::string& where) {
    reject_unknown_keys(j,
                        {"id", "kind", "steps", "seed", "family", "samples", "dims",
                         "tau_range", "tolerance", "witness", "control"},
                        where);
    lab::ExperimentSpec spec;
    spec.id = get_string(j, "id", where);
    spec.kind = lab::kind_from_name(get_string(j, "kind", where));
    if (j.contains("family")) {
        try {
            spec.family = sched::family_from_name(get_string(j, "family", where));
        } catch (const UnknownPreset& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    if (j.contains("steps")) spec.steps = get_int(j, "steps", where);
    if (j.contains("seed")) spec.seed = get_seed(j, "seed", where);
    if (j.contains("samples")) spec.samples = get_int(j, "samples", where);
    if (j.contains("dims")) {
        const auto& d = j.at("dims");
        if (!d.is_array() || d.size() != 2) {
            throw ConfigError(where + ": dims must be [min, max]");
        }
        spec.dim_min = d.at(0).get<int>();
        spec.dim_max = d.at(1).get<int>();
    }
    if (j.contains("tau_range")) {
        const auto& t = j.at("tau_range");
        if (!t.is_array() || t.size() != 2) {
            throw ConfigError(where + ": tau_range must be [min, max]");
        }
        spec.tau_min = t.at(0).get<double>();
        spec.tau_max = t.at(1).get<double>();
    }
    if (j.contains("tolerance")) spec.tolerance = get_number(j, "tolerance", where);
    if (j.contains("witness")) spec.witness = parse_preset(j.at("witness"), where + ".witness");
    if (j.contains("control")) spec.control = parse_preset(j.at("control"), where + ".control");

    if (spec.steps < 1) throw ConfigError(where + ": steps must be >= 1");
    if (spec.samples < 1) throw ConfigError(where + ": samples must be >= 1");
    if (spec.dim_min < 2 || spec.dim_max < spec.dim_min) {
        throw ConfigError(where + ": dims must satisfy 2 <= min <= max");
    }
    if (!(spec.tau_min > 0.0) || spec.tau_max < spec.tau_min) {
        throw ConfigError(where + ": tau_range must satisfy 0 < min <= max");
    }
    return spec;
}

SweepConfig parse_sweep(const json& j, const std::string& where) {
    reject_unknown_keys(j, {"id", "samples", "dims", "tau_range", "steps", "seed"}, where);
    SweepConfig s;
    if (j.contains("id")) s.id = get_string(j, "id", where);
    if (j.contains("samples")) s.samples = get_int(j, "samples", where);
    if (j.contains("dims")) {
        const auto& d = j.at("dims");
        if (!d.is_array() || d.size() != 2) throw ConfigError(where + ": dims must be [min, max]");
        s.dim_min = d.at(0).get<int>();
        s.dim_max = d.at(1).get<int>();
    }
    if (j.contains("tau_range")) {
        const auto& t = j.at("tau_range");
        if (!t.is_array() || t.size() != 2) {
            throw ConfigError(where + ": tau_range must be [min, max]");
        }
        s.tau_min = t.at(0).get<double>();
        s.tau_max = t.at(1).get<double>();
    }
    if (j.contains("steps")) s.steps = get_int(j, "steps", where);
    if (j.contains("seed")) s.seed = get_seed(j, "seed", where);
    if (s.samples < 1) throw ConfigError(where + ": samples must be >= 1");
    if (s.steps < 1) throw ConfigError(where + ": steps must be >= 1");
    return s;
}

OutputConfig parse_output(const json& j, const std::string& where) {
    reject_unknown_keys(j, {"directory", "formats"}, where);
    OutputConfig out;
    if (j.contains("directory")) out.directory = get_string(j, "directory", where);
    if (j.contains("formats")) {
        out.json = out.csv = false;
        for (const auto& f : j.at("formats")) {
            if (!f.is_string()) throw ConfigError(where + ": formats must be strings");
            const std::string name = f.get<std::string>();
            if (name == "json") {
                out.json = true;
            } else if (name == "csv") {
                out.csv = true;
            } else {
                throw ConfigError(where + ": unknown format '" + name + "'");
            }
        }
    }
    return out;
}

}  // namespace

ops::PureState StateSpec::realize(Eigen::Index dim) const {
    switch (kind) {
        case Kind::plus: {
            if (dim != 2) throw ConfigError("initial_state 'plus' requires dim = 2");
            return ops::ket_plus();
        }
        case Kind::basis:
            if (basis_index < 0 || basis_index >= dim) {
                throw ConfigError("initial_state basis index out of range");
            }
            return ops::ket_basis(dim, basis_index);
        case Kind::amplitudes:
            if (amplitudes.size() != dim) {
                throw ConfigError("initial_state amplitude count does not match dim");
            }
            try {
                return ops::PureState::normalized(amplitudes);
            } catch (const InvalidParams& e) {
                throw ConfigError(std::string("initial_state: ") + e.what());
            }
        case Kind::gaussian: {
            std::mt19937_64 gen(seed);
            return ops::PureState{rng::gaussian_state(gen, dim)};
        }
    }
    throw ConfigError("initial_state: unreachable kind");
}

sched::RateFn RateSpec::realize() const {
    if (kind == Kind::constant) {
        const double v = value;
        return [v](double) { return v; };
    }
    const double a = amplitude, w = frequency, c = offset;
    return [a, w, c](double t) { return c + a * std::cos(w * t); };
}

sched::PresetSpec ScheduleDef::preset_with_tau(double tau) const {
    sched::PresetSpec p;
    p.family = family;
    p.tau = tau;
    p.dim = dim;
    p.params = params;
    p.seed = seed;
    p.h0 = matrix;
    if (family == "constant" && matrix) p.dim = matrix->rows();
    return p;
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    reject_unknown_keys(j, {"hbar", "seed", "output", "schedules", "experiments", "sweep"},
                        "config");

    RunConfig cfg;
    if (j.contains("hbar")) {
        cfg.hbar = get_number(j, "hbar", "config");
        if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar)) {
            throw ConfigError("config: hbar must be finite and > 0");
        }
    }
    if (j.contains("seed")) cfg.seed = get_seed(j, "seed", "config");
    if (j.contains("output")) cfg.output = parse_output(j.at("output"), "config.output");
    if (j.contains("schedules")) {
        const auto& s = j.at("schedules");
        if (!s.is_object()) throw ConfigError("config.schedules: expected an object");
        for (const auto& item : s.items()) {
            cfg.schedules.emplace(item.key(),
                                  parse_schedule(item.value(), "config.schedules." + item.key()));
        }
    }
    if (j.contains("experiments")) {
        const auto& e = j.at("experiments");
        if (!e.is_array()) throw ConfigError("config.experiments: expected an array");
        std::vector<lab::ExperimentSpec> specs;
        std::set<std::string> ids;
        for (std::size_t i = 0; i < e.size(); ++i) {
            lab::ExperimentSpec spec =
                parse_experiment(e.at(i), "config.experiments[" + std::to_string(i) + "]");
            if (!ids.insert(spec.id).second) {
                throw ConfigError("config.experiments: duplicate id '" + spec.id + "'");
            }
            specs.push_back(std::move(spec));
        }
        cfg.experiments = std::move(specs);
    }
    if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"), "config.sweep");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

}  // namespace qsl::cli
