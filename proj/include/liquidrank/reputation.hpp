#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liquidrank {

/// Rater-weighting mode of the reputation engine.
enum class Mode { Regular, Weighted, Tom, Som };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& name);

/// One rater -> ratee measure tied to a transaction.
struct RatingEvent {
    int day = 1;               // day index, >= 1
    std::string rater;
    std::string ratee;
    double value = 0.0;        // rating in [-1, +1]
    double financial = 0.0;    // transaction value, >= 0

    friend bool operator==(const RatingEvent&, const RatingEvent&) = default;
};

struct EngineConfig {
    Mode mode = Mode::Regular;
    double blend_d = 0.5;           // update weight, in (0, 1]
    double retention_lambda = 0.99; // per-day retention for unrated identities, in (0, 1]

    static constexpr double kDefaultRank = 0.5;
    static constexpr double kLogBase = 10.0;

    void validate() const;
};

struct ReputationSnapshot {
    int day = 0;
    std::vector<std::pair<std::string, double>> entries; // sorted by identity id
};

/// Per-identity reputation ranks with one batch update per day.
///
/// Rater influence always uses the previous day's rank, so the result of an
/// update is independent of the order of events within the batch.
class ReputationEngine {
public:
    ReputationEngine(const std::vector<std::string>& identities, EngineConfig config);

    void register_identity(const std::string& id, int day);
    bool knows(const std::string& id) const;

    /// TOM/SOM weight of `rater` relative to the other raters active in the
    /// current period. Regular and Weighted modes always return 1.
    double rater_multiplier(const std::string& rater,
                            const std::vector<std::string>& period_raters) const;

    /// Applies one day's batch of ratings. All events must carry
    /// day == current_day() + 1 and reference registered identities.
    void update_period(const std::vector<RatingEvent>& events);

    /// Advances the day counter without touching any rank. Used when the
    /// engine is kept in sync with an external clock but not consulted.
    void advance_day();

    double get_rank(const std::string& id) const;
    ReputationSnapshot snapshot() const;

    int current_day() const { return current_day_; }
    const EngineConfig& config() const { return config_; }
    int first_active_day(const std::string& id) const;
    double cumulative_spend(const std::string& id) const;

private:
    struct IdentityRecord {
        double rank = EngineConfig::kDefaultRank;
        int first_active_day = 1;
        double cumulative_spend = 0.0;
    };

    const IdentityRecord& record(const std::string& id) const;
    double multiplier_at(int day, const std::string& rater,
                         const std::vector<std::string>& period_raters) const;

    EngineConfig config_;
    int current_day_ = 0;
    std::map<std::string, IdentityRecord> identities_;
};

/// Replays a rating log day by day from day 1 through the last rated day,
/// auto-registering identities at their first appearance. Returns one
/// snapshot per replayed day.
std::vector<ReputationSnapshot> replay_log(const std::vector<RatingEvent>& events,
                                           const EngineConfig& config);

}  // namespace liquidrank
