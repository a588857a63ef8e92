#pragma once

#include <ostream>
#include <string>

#include "flab/fpgroup/serialize.hpp"
#include "flab/scenarios/pipeline.hpp"

namespace flab::scenarios {

using fpgroup::json;

inline constexpr const char* kReportSchema = "fourfold-lab-report/1";

enum class ReportFormat { Json, Text };

json report_json(const PipelineReport& r);
std::string report_text(const PipelineReport& r);

/// JSON is dumped with two-space indentation and a trailing newline, so the
/// output of a given report is byte-stable.
void emit_report(const PipelineReport& r, ReportFormat format, std::ostream& out);
/// Throws IoError when the file cannot be written.
void write_report(const PipelineReport& r, ReportFormat format, const std::string& path);

/// "±(2S+2T)" when the candidates are exactly plus and minus the canonical
/// class, otherwise the candidates listed in braces.
std::string basic_class_summary(const swenum::BasicClassReport& r);

/// "H", "3H", or "rank n, signature s" for other forms.
std::string form_summary(const fourfold::FourManifoldModel& m, const fourfold::VerificationReport& v);

}  // namespace flab::scenarios
