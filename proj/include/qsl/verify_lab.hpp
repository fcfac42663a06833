// verify_lab.hpp — Named, reproducible experiments: witness-plus-control checks
// of the two algebraic identities this library refutes, and randomized sweeps
// over schedule samples that test orderings, reductions, and bound validity.

#pragma once

#include "qsl/bounds.hpp"
#include "qsl/common.hpp"
#include "qsl/schedules.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsl::lab {

enum class ExperimentKind {
    overlap_identity,       // naive-generator survival amplitude vs time-ordered
    trace_norm_identity,    // tr|Hρ| vs ⟨H⟩ vs sqrt(⟨H²⟩)
    looseness_ordering,     // second-moment bound ≤ variance (MT) bound
    mt_reduction,           // ‖ρ̇‖_hs = sqrt(2)ΔE/hbar for pure unitary dynamics
    bound_validity,         // bounds ≤ actual τ along propagated trajectories
    ml_empirical,           // violation search for the initial-mean-energy bound
};

const char* kind_name(ExperimentKind k);
ExperimentKind kind_from_name(const std::string& name);  // ConfigError

// Experiments whose claim is expected to come back confirmed; ml_empirical is
// a survey and reports inconclusive unless it finds a violation witness.
bool expected_confirmed(ExperimentKind k);

// Fully describes one experiment run; equal specs produce bit-identical
// verdict numbers.
struct ExperimentSpec {
    std::string id;
    ExperimentKind kind = ExperimentKind::bound_validity;

    // Witness/control schedules (overlap_identity). Defaults: a Landau–Zener
    // witness and a constant-σ_z control.
    std::optional<sched::PresetSpec> witness;
    std::optional<sched::PresetSpec> control;

    int steps = 4096;
    std::uint64_t seed = 0;

    // Sweep parameters.
    sched::Family family = sched::Family::random_fourier;
    int samples = 1000;
    int dim_min = 2, dim_max = 6;
    double tau_min = 0.5, tau_max = 2.5;

    // Confirmation tolerance; negative means "use the kind's default".
    double tolerance = -1.0;

    double default_tolerance() const;
};

// Copy of the spec with every default filled in (tolerance, and the
// witness/control presets of the overlap experiment), so a serialized spec
// replays standalone.
ExperimentSpec resolve_defaults(ExperimentSpec spec);

enum class Outcome { confirmed, refuted, inconclusive };

const char* outcome_name(Outcome o);

// A confirmed or refuted outcome always carries numeric witnesses; notes hold
// replay diagnostics (sample indices, branch flags) for any violations seen.
struct Verdict {
    std::string id;
    std::string claim;
    Outcome outcome = Outcome::inconclusive;
    std::map<std::string, double> witness;  // ordered keys, deterministic serialization
    std::vector<std::string> notes;
    int skipped_samples = 0;
    double runtime_seconds = 0.0;  // informational; excluded from replay files
};

Verdict run_experiment(const ExperimentSpec& spec);

Verdict overlap_identity_experiment(const ExperimentSpec& spec);
Verdict trace_norm_identity_experiment(const ExperimentSpec& spec);
Verdict looseness_ordering_experiment(const ExperimentSpec& spec);
Verdict mt_reduction_experiment(const ExperimentSpec& spec);
Verdict bound_validity_experiment(const ExperimentSpec& spec);
Verdict ml_empirical_experiment(const ExperimentSpec& spec);

// The five expected-confirmed experiments with per-experiment seeds derived
// from base_seed.
std::vector<ExperimentSpec> default_suite(std::uint64_t base_seed);

}  // namespace qsl::lab
