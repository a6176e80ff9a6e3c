#pragma once

#include <string>

#include "qhorn/identities.hpp"

namespace qhorn {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);  // throws ConfigError
std::string format_name(Format f);

/// Stable serializations of an audit report. JSON carries the full structure
/// with sorted keys; CSV has one row per identity with the header
///   id,eq,family,variant,n_points,max_rel_residual,classification
/// and text is an aligned human table in catalogue order.
std::string render_report(const AuditReport& report, Format format);

std::string verdict_to_string(const Verdict& v, Format format);
std::string eval_to_string(const EvalResult& r, Format format);

/// True when some identity failed in its literal reading and no registered
/// variant verified (the CLI's exit-1 condition).
bool has_unresolved_failure(const AuditReport& report);

/// Writes via a temp file in the same directory followed by a rename.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace qhorn
