#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "liquidrank/reputation.hpp"

namespace liquidrank {

/// Reputation system driving supplier choice. None bypasses the engine.
enum class System { None, Regular, Weighted, Tom, Som };

const char* to_string(System system);
System system_from_string(const std::string& name);

struct SimConfig {
    int n_agents = 1000;
    double consumer_fraction = 0.9;
    double dishonest_supplier_fraction = 0.05; // fraction of suppliers
    double dishonest_consumer_fraction = 0.05; // fraction of consumers
    int duration_days = 183;
    int scam_period_days = 182;
    System system = System::None;
    double price = 1.0;                 // currency units per transaction
    double purchase_probability = 1.0;  // per consumer per day
    double bad_service_rate = 0.10;     // honest supplier bad-service probability
    std::uint64_t seed = 1;
    double blend_d = 0.5;
    double retention_lambda = 0.99;

    static constexpr double kSelectionEpsilon = 0.01;

    void validate() const;
    EngineConfig engine_config() const;
};

enum class Role { Consumer, Supplier };
enum class Outcome { Good, Bad, Scam };

const char* to_string(Role role);
const char* to_string(Outcome outcome);

struct Agent {
    int agent_id = 0;
    Role role = Role::Consumer;
    bool honest = true;
    std::string current_identity;
    int identity_gen = 1;
    std::set<std::string> blacklist; // honest consumers only
};

struct TransactionRecord {
    int day = 0;
    std::string buyer_identity;
    std::string seller_identity;
    int buyer_agent_id = 0;
    int seller_agent_id = 0;
    double value = 0.0;
    Outcome outcome = Outcome::Good;
    double rating_value = 0.0;

    friend bool operator==(const TransactionRecord&, const TransactionRecord&) = default;
};

struct IdentityInterval {
    std::string identity;
    int agent_id = 0;
    Role role = Role::Consumer;
    bool honest = true;
    int active_from_day = 1;
    int active_to_day = 0; // 0 = still open

    friend bool operator==(const IdentityInterval&, const IdentityInterval&) = default;
};

struct Ledger {
    std::vector<TransactionRecord> transactions;
    std::vector<IdentityInterval> identities;

    friend bool operator==(const Ledger&, const Ledger&) = default;
};

/// Seeded marketplace world; advances one day at a time. The daily phase
/// order (transact, rate/update, rotate) is part of the determinism contract.
class World {
public:
    explicit World(const SimConfig& config);

    void step_day();
    void rotate_identities();

    /// Supplier identity chosen by `consumer` for today, or nullopt when no
    /// eligible candidate exists.
    std::optional<std::string> choose_supplier(const Agent& consumer);

    int day() const { return day_; }
    const SimConfig& config() const { return config_; }
    const std::vector<Agent>& agents() const { return agents_; }
    const Ledger& ledger() const { return ledger_; }
    const ReputationEngine& engine() const { return engine_; }
    ReputationSnapshot snapshot() const { return engine_.snapshot(); }

    int n_consumers() const { return n_consumers_; }
    int n_suppliers() const { return int(supplier_ids_.size()); }
    int n_dishonest_consumers() const { return n_dishonest_consumers_; }
    int n_dishonest_suppliers() const { return int(dishonest_supplier_ids_.size()); }

private:
    double draw_unit();
    int draw_index(int bound);
    void refresh_supplier_cache();
    std::string make_identity(const Agent& agent) const;
    void open_interval(const Agent& agent, int from_day);

    SimConfig config_;
    std::vector<Agent> agents_;
    std::vector<int> supplier_ids_;
    std::vector<int> dishonest_supplier_ids_;
    std::map<std::string, int> identity_owner_;
    int n_consumers_ = 0;
    int n_dishonest_consumers_ = 0;
    Ledger ledger_;
    ReputationEngine engine_;
    int day_ = 0;
    std::mt19937_64 rng_;

    // per-day cache: supplier identity + selection weight, by supplier index
    std::vector<std::string> supplier_identity_;
    std::vector<double> supplier_weight_;
};

World build_population(const SimConfig& config);

struct SimResult {
    Ledger ledger;
    std::vector<ReputationSnapshot> snapshots; // day 0 .. duration
};

SimResult run_simulation(const SimConfig& config);

}  // namespace liquidrank
