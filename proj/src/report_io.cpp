#include "qsl/report_io.hpp"

#include "qsl/schedules.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace qsl::io {

// -------------------------------- JsonWriter ----------------------------------

void JsonWriter::comma() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_.empty()) {
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
    if (!first_.empty()) {
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    comma();
    if (std::isfinite(v)) {
        out_ += to_g17(v);
    } else {
        out_ += "null";
    }
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    comma();
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::null() {
    comma();
    out_ += "null";
    return *this;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// ------------------------------- Serializers ----------------------------------

void write_bound_entry(JsonWriter& w, const bounds::BoundEntry& entry) {
    w.begin_object();
    w.key("id").value(entry.id);
    w.key("value");
    if (entry.infinite) {
        w.null();
    } else {
        w.value(entry.value);
    }
    w.key("infinite").value(entry.infinite);
    w.key("status").value(bounds::status_name(entry.status));
    w.key("satisfied_by_actual_tau").value(entry.satisfied_by_actual_tau);
    w.key("tau").value(entry.tau);
    w.key("angle").value(entry.angle);
    w.key("denominator").value(entry.denominator);
    w.end_object();
}

namespace {

void write_preset(JsonWriter& w, const sched::PresetSpec& p) {
    w.begin_object();
    w.key("family").value(p.family);
    w.key("tau").value(p.tau);
    w.key("dim").value(static_cast<std::int64_t>(p.dim));
    w.key("params").begin_array();
    for (double x : p.params) w.value(x);
    w.end_array();
    w.key("seed").value(static_cast<std::uint64_t>(p.seed));
    if (p.h0) {
        w.key("matrix").begin_array();
        for (Eigen::Index i = 0; i < p.h0->rows(); ++i) {
            w.begin_array();
            for (Eigen::Index j = 0; j < p.h0->cols(); ++j) {
                w.begin_array().value((*p.h0)(i, j).real()).value((*p.h0)(i, j).imag()).end_array();
            }
            w.end_array();
        }
        w.end_array();
    }
    w.end_object();
}

}  // namespace

// Emitted in the config schema's shape so a serialized spec can be pasted
// straight back into an "experiments" array.
void write_experiment_spec(JsonWriter& w, const lab::ExperimentSpec& raw) {
    const lab::ExperimentSpec spec = lab::resolve_defaults(raw);
    w.begin_object();
    w.key("id").value(spec.id);
    w.key("kind").value(lab::kind_name(spec.kind));
    w.key("steps").value(spec.steps);
    w.key("seed").value(static_cast<std::uint64_t>(spec.seed));
    w.key("family").value(sched::family_name(spec.family));
    w.key("samples").value(spec.samples);
    w.key("dims").begin_array().value(spec.dim_min).value(spec.dim_max).end_array();
    w.key("tau_range").begin_array().value(spec.tau_min).value(spec.tau_max).end_array();
    w.key("tolerance").value(spec.tolerance);
    if (spec.witness) {
        w.key("witness");
        write_preset(w, *spec.witness);
    }
    if (spec.control) {
        w.key("control");
        write_preset(w, *spec.control);
    }
    w.end_object();
}

std::string verdict_json(const lab::ExperimentSpec& spec, const lab::Verdict& verdict) {
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("id").value(verdict.id);
    w.key("kind").value(lab::kind_name(spec.kind));
    w.key("claim").value(verdict.claim);
    w.key("outcome").value(lab::outcome_name(verdict.outcome));
    w.key("witness").begin_object();
    for (const auto& [k, x] : verdict.witness) {
        w.key(k).value(x);
    }
    w.end_object();
    w.key("notes").begin_array();
    for (const auto& note : verdict.notes) w.value(note);
    w.end_array();
    w.key("skipped_samples").value(verdict.skipped_samples);
    w.key("spec");
    write_experiment_spec(w, spec);
    w.end_object();
    std::string out = w.str();
    out += '\n';
    return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("write_text_file: cannot open " + path);
    f << contents;
    if (!f) throw Error("write_text_file: write failed for " + path);
}

}  // namespace qsl::io
