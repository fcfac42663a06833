// report_io.hpp — Deterministic serialization of reports and verdicts. All
// floats are written with 17 significant digits so that a rerun of the same
// configuration produces byte-identical files.

#pragma once

#include "qsl/bounds.hpp"
#include "qsl/verify_lab.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qsl::io {

// Minimal streaming JSON writer. Keys are emitted in call order; numbers via
// %.17g; non-finite doubles become null (callers carry explicit flags for
// infinities they care about).
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);

    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& null();

    const std::string& str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> first_;   // per nesting level: no element written yet
    bool pending_key_ = false;
};

std::string json_escape(std::string_view s);

// Serialize one bound entry as an object.
void write_bound_entry(JsonWriter& w, const bounds::BoundEntry& entry);

// Resolved experiment spec (defaults applied) for standalone replay.
void write_experiment_spec(JsonWriter& w, const lab::ExperimentSpec& spec);

// One verdict file. Runtime is informational only and is deliberately left
// out so reruns stay byte-identical.
std::string verdict_json(const lab::ExperimentSpec& spec, const lab::Verdict& verdict);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace qsl::io
