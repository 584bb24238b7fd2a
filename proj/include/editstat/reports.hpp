#pragma once

#include "editstat/analysis.hpp"

#include <string>
#include <string_view>

namespace editstat {

enum class ReportFormat { plain, structured };

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

// Structured output is JSON with deterministic key order; every rational is
// emitted both as an exact fraction and a 6-decimal rendering, so parsing a
// structured report recovers each number exactly. Plain output is aligned
// human-readable text. Both are byte-deterministic.

std::string render_distance_matrix(const DistanceMatrix& dm, ReportFormat fmt,
                                   bool include_items = true);
std::string render_frechet(const FrechetResult& result,
                           std::span<const std::string> display,
                           std::size_t sample_size, ReportFormat fmt);
std::string render_reconstruction(const ReconstructionReport& report,
                                  ReportFormat fmt);
std::string render_group_variance(const GroupVarianceReport& report,
                                  ReportFormat fmt);
std::string render_rand_test(const RandTestReport& report, ReportFormat fmt);
std::string render_clustering(const Clustering& clustering, ReportFormat fmt);

// Two-column replicate table for external plotting; degenerate replicates
// are written as "NA NA".
std::string render_replicate_table(const RandTestReport& report);

// Inverses used by round-trip checks and exceedance recounts.
RandTestReport parse_rand_test(std::string_view structured_text);
GroupVarianceReport parse_group_variance(std::string_view structured_text);

}  // namespace editstat
