#include "liquidrank/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace liquidrank {

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::Regular: return "regular";
        case Mode::Weighted: return "weighted";
        case Mode::Tom: return "tom";
        case Mode::Som: return "som";
    }
    return "?";
}

Mode mode_from_string(const std::string& name) {
    if (name == "regular") return Mode::Regular;
    if (name == "weighted") return Mode::Weighted;
    if (name == "tom") return Mode::Tom;
    if (name == "som") return Mode::Som;
    throw std::invalid_argument("unknown mode: " + name);
}

void EngineConfig::validate() const {
    if (!(blend_d > 0.0 && blend_d <= 1.0))
        throw std::invalid_argument("blend_d must be in (0, 1]");
    if (!(retention_lambda > 0.0 && retention_lambda <= 1.0))
        throw std::invalid_argument("retention_lambda must be in (0, 1]");
}

ReputationEngine::ReputationEngine(const std::vector<std::string>& identities,
                                   EngineConfig config)
    : config_(config) {
    config_.validate();
    for (const auto& id : identities) {
        auto [it, inserted] = identities_.emplace(id, IdentityRecord{});
        if (!inserted)
            throw std::invalid_argument("duplicate identity id: " + id);
    }
}

void ReputationEngine::register_identity(const std::string& id, int day) {
    if (identities_.count(id))
        throw std::invalid_argument("identity already registered: " + id);
    if (day < current_day_)
        throw std::invalid_argument("cannot register " + id + " in the past (day " +
                                    std::to_string(day) + " < " +
                                    std::to_string(current_day_) + ")");
    identities_.emplace(id, IdentityRecord{EngineConfig::kDefaultRank, std::max(day, 1), 0.0});
}

bool ReputationEngine::knows(const std::string& id) const {
    return identities_.count(id) != 0;
}

const ReputationEngine::IdentityRecord& ReputationEngine::record(const std::string& id) const {
    auto it = identities_.find(id);
    if (it == identities_.end())
        throw std::out_of_range("unknown identity: " + id);
    return it->second;
}

double ReputationEngine::multiplier_at(int day, const std::string& rater,
                                       const std::vector<std::string>& period_raters) const {
    if (config_.mode == Mode::Regular || config_.mode == Mode::Weighted) {
        record(rater);
        return 1.0;
    }
    if (config_.mode == Mode::Tom) {
        // days on the market, inclusive of the first one
        double own = double(day - record(rater).first_active_day + 1);
        double max_tom = 0.0;
        for (const auto& r : period_raters)
            max_tom = std::max(max_tom, double(day - record(r).first_active_day + 1));
        return max_tom > 0.0 ? own / max_tom : 1.0;
    }
    // SOM: log-space normalization; an all-zero period counts everyone fully
    double max_spend = 0.0;
    for (const auto& r : period_raters)
        max_spend = std::max(max_spend, record(r).cumulative_spend);
    if (max_spend <= 0.0) {
        record(rater);
        return 1.0;
    }
    return std::log1p(record(rater).cumulative_spend) / std::log1p(max_spend);
}

double ReputationEngine::rater_multiplier(const std::string& rater,
                                          const std::vector<std::string>& period_raters) const {
    return multiplier_at(current_day_, rater, period_raters);
}

void ReputationEngine::update_period(const std::vector<RatingEvent>& events) {
    const int day = current_day_ + 1;
    for (const auto& e : events) {
        if (e.day != day)
            throw std::invalid_argument("event day " + std::to_string(e.day) +
                                        " does not match period day " + std::to_string(day));
        if (e.rater == e.ratee)
            throw std::invalid_argument("self-rating by " + e.rater);
        if (!(e.value >= -1.0 && e.value <= 1.0))
            throw std::invalid_argument("rating value out of [-1, 1]");
        if (!(e.financial >= 0.0))
            throw std::invalid_argument("negative financial value");
        record(e.rater);
        record(e.ratee);
    }

    // canonical event order so the result is bit-identical under permutation
    std::vector<RatingEvent> batch(events);
    std::sort(batch.begin(), batch.end(), [](const RatingEvent& a, const RatingEvent& b) {
        return std::tie(a.ratee, a.rater, a.value, a.financial) <
               std::tie(b.ratee, b.rater, b.value, b.financial);
    });

    std::vector<std::string> period_raters;
    {
        std::set<std::string> raters;
        for (const auto& e : batch) raters.insert(e.rater);
        period_raters.assign(raters.begin(), raters.end());
    }

    // per-rater multipliers, with the period maxima hoisted out of the event loop
    std::map<std::string, double> multiplier;
    if (config_.mode == Mode::Tom) {
        double max_tom = 0.0;
        for (const auto& r : period_raters)
            max_tom = std::max(max_tom, double(day - record(r).first_active_day + 1));
        for (const auto& r : period_raters) {
            double own = double(day - record(r).first_active_day + 1);
            multiplier[r] = max_tom > 0.0 ? own / max_tom : 1.0;
        }
    } else if (config_.mode == Mode::Som) {
        double max_spend = 0.0;
        for (const auto& r : period_raters)
            max_spend = std::max(max_spend, record(r).cumulative_spend);
        for (const auto& r : period_raters)
            multiplier[r] = max_spend > 0.0 ? std::log1p(record(r).cumulative_spend) /
                                                  std::log1p(max_spend)
                                            : 1.0;
    } else {
        for (const auto& r : period_raters) multiplier[r] = 1.0;
    }

    std::map<std::string, double> raw;
    for (const auto& e : batch) {
        double weight = config_.mode == Mode::Regular ? 1.0 : std::log10(1.0 + e.financial);
        raw[e.ratee] += record(e.rater).rank * e.value * weight * multiplier.at(e.rater);
    }

    double max_abs = 0.0;
    for (const auto& [id, r] : raw) max_abs = std::max(max_abs, std::abs(r));

    for (auto& [id, rec] : identities_) {
        auto it = raw.find(id);
        if (it == raw.end()) {
            rec.rank *= config_.retention_lambda;
        } else {
            double q = max_abs > 0.0 ? ((it->second / max_abs) + 1.0) / 2.0 : 0.5;
            rec.rank = (1.0 - config_.blend_d) * rec.rank + config_.blend_d * q;
        }
    }

    for (const auto& e : batch)
        identities_.at(e.rater).cumulative_spend += e.financial;

    current_day_ = day;
}

void ReputationEngine::advance_day() { ++current_day_; }

double ReputationEngine::get_rank(const std::string& id) const { return record(id).rank; }

int ReputationEngine::first_active_day(const std::string& id) const {
    return record(id).first_active_day;
}

double ReputationEngine::cumulative_spend(const std::string& id) const {
    return record(id).cumulative_spend;
}

ReputationSnapshot ReputationEngine::snapshot() const {
    ReputationSnapshot snap;
    snap.day = current_day_;
    snap.entries.reserve(identities_.size());
    for (const auto& [id, rec] : identities_)
        snap.entries.emplace_back(id, rec.rank);
    return snap;
}

std::vector<ReputationSnapshot> replay_log(const std::vector<RatingEvent>& events,
                                           const EngineConfig& config) {
    ReputationEngine engine({}, config);
    std::vector<ReputationSnapshot> series;
    if (events.empty()) return series;

    int last_day = 0;
    for (const auto& e : events) last_day = std::max(last_day, e.day);

    std::size_t next = 0;
    for (int day = 1; day <= last_day; ++day) {
        std::vector<RatingEvent> batch;
        while (next < events.size() && events[next].day == day)
            batch.push_back(events[next++]);
        for (const auto& e : batch) {
            if (!engine.knows(e.rater)) engine.register_identity(e.rater, day);
            if (!engine.knows(e.ratee)) engine.register_identity(e.ratee, day);
        }
        engine.update_period(batch);
        series.push_back(engine.snapshot());
    }
    return series;
}

}  // namespace liquidrank
