// run_config.hpp — Structured run configuration: one JSON document describing
// hbar, named schedules, experiments, and output destinations. The schema is
// validated up front and unknown keys are rejected.

#pragma once

#include "qsl/common.hpp"
#include "qsl/schedules.hpp"
#include "qsl/verify_lab.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsl::cli {

struct OutputConfig {
    std::string directory = "out";
    bool json = true;
    bool csv = true;
};

// Initial-state choice for a configured schedule: a named ket, an explicit
// amplitude list, or a seeded Gaussian draw.
struct StateSpec {
    enum class Kind { plus, basis, amplitudes, gaussian } kind = Kind::basis;
    Eigen::Index basis_index = 0;
    Vector amplitudes;
    std::uint64_t seed = 0;

    ops::PureState realize(Eigen::Index dim) const;
};

// Optional dephasing rate turning a Hamiltonian schedule into an open-system
// generator. Negative rates are allowed.
struct RateSpec {
    enum class Kind { constant, cosine } kind = Kind::constant;
    double value = 0.0;      // constant
    double amplitude = 0.0;  // cosine: offset + amplitude * cos(frequency * t)
    double frequency = 1.0;
    double offset = 0.0;

    sched::RateFn realize() const;
};

struct ScheduleDef {
    std::string family;           // preset family name
    Eigen::Index dim = 2;
    std::vector<double> params;
    std::uint64_t seed = 0;
    std::optional<Matrix> matrix;  // constant family
    StateSpec initial_state;
    std::optional<RateSpec> dephasing;

    sched::PresetSpec preset_with_tau(double tau) const;
};

struct SweepConfig {
    std::string id = "sweep";
    int samples = 1000;
    int dim_min = 2, dim_max = 6;
    double tau_min = 0.5, tau_max = 2.5;
    int steps = 4096;
    std::uint64_t seed = 0;
};

struct RunConfig {
    double hbar = 1.0;
    std::uint64_t seed = 0;
    OutputConfig output;
    std::map<std::string, ScheduleDef> schedules;
    // Absent: run the default verification suite. Present but empty: run
    // nothing (with a warning).
    std::optional<std::vector<lab::ExperimentSpec>> experiments;
    std::optional<SweepConfig> sweep;
};

// Throws ConfigError on malformed JSON, schema violations, or unknown keys.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

}  // namespace qsl::cli
