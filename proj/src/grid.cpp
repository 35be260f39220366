#include "liquidrank/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace liquidrank {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

void GridConfig::validate() const {
    if (replications < 1) throw std::invalid_argument("replications must be >= 1");
    if (scam_periods.empty()) throw std::invalid_argument("scam_periods must not be empty");
    for (int p : scam_periods)
        if (p < 1) throw std::invalid_argument("scam periods must be positive");
    if (systems.empty()) throw std::invalid_argument("systems must not be empty");
    base.validate();
}

std::vector<MetricsReport> run_grid(const GridConfig& grid) {
    grid.validate();
    std::vector<MetricsReport> reports;
    std::uint64_t cell_index = 0;
    for (int period : grid.scam_periods) {
        for (System system : grid.systems) {
            std::vector<double> lts_values, pfs_values;
            for (int rep = 0; rep < grid.replications; ++rep) {
                SimConfig cfg = grid.base;
                cfg.scam_period_days = period;
                cfg.system = system;
                cfg.seed = grid.base.seed + cell_index * grid.replications + rep;
                SimResult result = run_simulation(cfg);
                lts_values.push_back(compute_lts(result.ledger));
                pfs_values.push_back(compute_pfs(result.ledger));
            }
            MetricsReport report;
            report.scam_period = period;
            report.system = system;
            report.lts = median(lts_values);
            report.pfs = median(pfs_values);
            reports.push_back(report);
            ++cell_index;
        }
    }
    return build_comparison_table(std::move(reports));
}

}  // namespace liquidrank
