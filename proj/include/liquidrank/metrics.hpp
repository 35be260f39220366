#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liquidrank/market_sim.hpp"

namespace liquidrank {

struct MetricsReport {
    int scam_period = 0;
    System system = System::None;
    double lts = 0.0;
    double pfs = 0.0;
    std::optional<double> lts_relative_decrease; // absent on baseline rows
    std::optional<double> pfs_relative_decrease;
};

/// Honest-buyer volume paid to dishonest sellers over all honest-buyer
/// volume. Classification is by underlying agent honesty, not identity.
double compute_lts(const Ledger& ledger);

/// Honest-buyer volume captured by dishonest sellers over dishonest-buyer
/// spend.
double compute_pfs(const Ledger& ledger);

/// (baseline - value) / baseline; positive means improvement.
double relative_decrease(double baseline, double value);

/// Orders rows by (scam_period descending; system None, Regular, Weighted,
/// TOM, SOM) and fills the decrease columns against each period's None
/// baseline. Throws when a period group lacks its baseline.
std::vector<MetricsReport> build_comparison_table(std::vector<MetricsReport> reports);

}  // namespace liquidrank
