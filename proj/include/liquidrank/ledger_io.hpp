#pragma once

#include <string>
#include <vector>

#include "liquidrank/market_sim.hpp"
#include "liquidrank/metrics.hpp"
#include "liquidrank/reputation.hpp"

namespace liquidrank {

/// Parses a tab-separated rating log with header
/// `day\trater\tratee\tvalue\tfinancial`. Days must be non-decreasing.
/// Errors name the offending 1-based line number.
std::vector<RatingEvent> parse_ratings_log(const std::string& text);

std::string write_ratings_log(const std::vector<RatingEvent>& events);

/// `day\tidentity\trank` rows, ranks with 6 decimals, sorted day-major then
/// by identity. Snapshots must be ordered by day.
std::string write_snapshot_series(const std::vector<ReputationSnapshot>& snapshots);

std::string write_ledger(const Ledger& ledger);

/// Rows in build_comparison_table order; LTS with one decimal, PFS and the
/// decrease columns as integer percentages, raw fractions appended.
std::string write_metrics_table(const std::vector<MetricsReport>& table);

}  // namespace liquidrank
