#include "liquidrank/metrics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liquidrank {

namespace {

std::map<int, bool> agent_honesty(const Ledger& ledger) {
    std::map<int, bool> honest;
    for (const auto& interval : ledger.identities)
        honest[interval.agent_id] = interval.honest;
    return honest;
}

struct Volumes {
    double honest_total = 0.0;       // all honest-buyer spend
    double honest_to_dishonest = 0.0;
    double dishonest_spend = 0.0;
};

Volumes tally(const Ledger& ledger) {
    auto honest = agent_honesty(ledger);
    Volumes v;
    for (const auto& tx : ledger.transactions) {
        bool buyer_honest = honest.at(tx.buyer_agent_id);
        bool seller_honest = honest.at(tx.seller_agent_id);
        if (buyer_honest) {
            v.honest_total += tx.value;
            if (!seller_honest) v.honest_to_dishonest += tx.value;
        } else {
            v.dishonest_spend += tx.value;
        }
    }
    return v;
}

int system_order(System s) {
    switch (s) {
        case System::None: return 0;
        case System::Regular: return 1;
        case System::Weighted: return 2;
        case System::Tom: return 3;
        case System::Som: return 4;
    }
    return 5;
}

}  // namespace

double compute_lts(const Ledger& ledger) {
    Volumes v = tally(ledger);
    if (v.honest_total <= 0.0)
        throw std::domain_error("LTS undefined: no honest-buyer volume in ledger");
    return v.honest_to_dishonest / v.honest_total;
}

double compute_pfs(const Ledger& ledger) {
    Volumes v = tally(ledger);
    if (v.dishonest_spend <= 0.0)
        throw std::domain_error("PFS undefined: no dishonest-buyer spend in ledger");
    return v.honest_to_dishonest / v.dishonest_spend;
}

double relative_decrease(double baseline, double value) {
    if (!(baseline > 0.0))
        throw std::domain_error("relative decrease needs a positive baseline");
    return (baseline - value) / baseline;
}

std::vector<MetricsReport> build_comparison_table(std::vector<MetricsReport> reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const MetricsReport& a, const MetricsReport& b) {
                         if (a.scam_period != b.scam_period)
                             return a.scam_period > b.scam_period;
                         return system_order(a.system) < system_order(b.system);
                     });

    std::map<int, const MetricsReport*> baselines;
    for (const auto& r : reports)
        if (r.system == System::None) baselines[r.scam_period] = &r;

    for (auto& r : reports) {
        auto it = baselines.find(r.scam_period);
        if (it == baselines.end())
            throw std::invalid_argument("no baseline (system none) for scam period " +
                                        std::to_string(r.scam_period));
        if (r.system == System::None) {
            r.lts_relative_decrease.reset();
            r.pfs_relative_decrease.reset();
            continue;
        }
        const MetricsReport& base = *it->second;
        if (base.lts > 0.0) r.lts_relative_decrease = relative_decrease(base.lts, r.lts);
        if (base.pfs > 0.0) r.pfs_relative_decrease = relative_decrease(base.pfs, r.pfs);
    }
    return reports;
}

}  // namespace liquidrank
