#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace akg {

enum class Errc {
    // corpus
    parse_error,
    missing_required_field,
    duplicate_ids,
    // gateway
    unknown_template,
    missing_slot,
    backend_unreachable,
    rate_limited,
    fixture_missing,
    empty_input_text,
    provider_unreachable,
    // extraction
    completion_error,
    unparseable_output,
    missing_elements,
    no_tables,
    index_out_of_range,
    classifier_unavailable,
    // curation
    detector_unavailable,
    missing_frequency,
    dimension_mismatch,
    k_out_of_range,
    invalid_kind,
    // graph store
    empty_surface,
    schema_violation,
    dangling_endpoint,
    unknown_entity,
    non_title_id,
    kind_mismatch,
    io_error,
    corrupt_snapshot,
    version_mismatch,
    // qa
    unparseable_intent,
    empty_question,
    no_matches,
    // interface
    usage_error,
    request_rejected,
};

std::string_view errc_name(Errc code);

// Single exception type for the whole toolkit. `stage` identifies the
// pipeline stage that raised the error when it propagates through an
// orchestrator (empty otherwise).
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
    Error(Errc code, std::string stage, std::string message)
        : std::runtime_error("[" + stage + "] " + std::string(errc_name(code)) + ": " + message),
          code_(code),
          stage_(std::move(stage)) {}

    Errc code() const { return code_; }
    const std::string& stage() const { return stage_; }

private:
    Errc code_;
    std::string stage_;
};

} // namespace akg
