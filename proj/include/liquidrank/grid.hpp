#pragma once

#include <cstdint>
#include <vector>

#include "liquidrank/market_sim.hpp"
#include "liquidrank/metrics.hpp"

namespace liquidrank {

struct GridConfig {
    SimConfig base;
    std::vector<int> scam_periods{182, 92, 30, 10};
    std::vector<System> systems{System::None, System::Regular, System::Weighted,
                                System::Tom, System::Som};
    int replications = 5;

    void validate() const;
};

/// Runs every (scam_period, system) cell with `replications` seeds and
/// aggregates LTS/PFS per cell by median. Run seeds are
/// base.seed + cell_index * replications + replication, with cells indexed
/// period-major in configuration order. Returns the finished comparison
/// table.
std::vector<MetricsReport> run_grid(const GridConfig& grid);

}  // namespace liquidrank
