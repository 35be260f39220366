#include "liquidrank/market_sim.hpp"

#include <algorithm>
#include <cmath>

namespace liquidrank {

const char* to_string(System system) {
    switch (system) {
        case System::None: return "none";
        case System::Regular: return "regular";
        case System::Weighted: return "weighted";
        case System::Tom: return "tom";
        case System::Som: return "som";
    }
    return "?";
}

System system_from_string(const std::string& name) {
    if (name == "none") return System::None;
    if (name == "regular") return System::Regular;
    if (name == "weighted") return System::Weighted;
    if (name == "tom") return System::Tom;
    if (name == "som") return System::Som;
    throw std::invalid_argument("unknown system: " + name);
}

const char* to_string(Role role) {
    return role == Role::Consumer ? "consumer" : "supplier";
}

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Good: return "good";
        case Outcome::Bad: return "bad";
        case Outcome::Scam: return "scam";
    }
    return "?";
}

void SimConfig::validate() const {
    auto fraction = [](double f) { return f >= 0.0 && f <= 1.0; };
    if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
    if (!fraction(consumer_fraction) || !fraction(dishonest_supplier_fraction) ||
        !fraction(dishonest_consumer_fraction) || !fraction(purchase_probability) ||
        !fraction(bad_service_rate))
        throw std::invalid_argument("fractions must be in [0, 1]");
    if (duration_days < 1) throw std::invalid_argument("duration_days must be >= 1");
    if (scam_period_days < 1) throw std::invalid_argument("scam_period_days must be >= 1");
    if (!(price > 0.0)) throw std::invalid_argument("price must be > 0");
    engine_config().validate();
}

EngineConfig SimConfig::engine_config() const {
    EngineConfig cfg;
    switch (system) {
        case System::None:
        case System::Regular: cfg.mode = Mode::Regular; break;
        case System::Weighted: cfg.mode = Mode::Weighted; break;
        case System::Tom: cfg.mode = Mode::Tom; break;
        case System::Som: cfg.mode = Mode::Som; break;
    }
    cfg.blend_d = blend_d;
    cfg.retention_lambda = retention_lambda;
    return cfg;
}

namespace {

int round_half_up(double x) { return int(std::floor(x + 0.5)); }

// rounding half-up, with a floor of 1 whenever the fraction is positive
int count_from_fraction(int total, double fraction) {
    if (fraction <= 0.0) return 0;
    return std::max(1, round_half_up(total * fraction));
}

}  // namespace

World::World(const SimConfig& config)
    : config_(config), engine_({}, config.engine_config()), rng_(config.seed) {
    config_.validate();

    n_consumers_ = count_from_fraction(config_.n_agents, config_.consumer_fraction);
    const int n_suppliers = config_.n_agents - n_consumers_;
    if (n_consumers_ < 1 || n_suppliers < 1)
        throw std::invalid_argument(
            "population must contain at least one consumer and one supplier");

    const int dishonest_suppliers =
        count_from_fraction(n_suppliers, config_.dishonest_supplier_fraction);
    n_dishonest_consumers_ =
        count_from_fraction(n_consumers_, config_.dishonest_consumer_fraction);

    agents_.reserve(config_.n_agents);
    for (int i = 0; i < n_consumers_; ++i) {
        Agent a;
        a.agent_id = i;
        a.role = Role::Consumer;
        a.honest = i >= n_dishonest_consumers_;
        agents_.push_back(std::move(a));
    }
    for (int i = 0; i < n_suppliers; ++i) {
        Agent a;
        a.agent_id = n_consumers_ + i;
        a.role = Role::Supplier;
        a.honest = i >= dishonest_suppliers;
        agents_.push_back(std::move(a));
    }

    for (auto& agent : agents_) {
        agent.current_identity = make_identity(agent);
        engine_.register_identity(agent.current_identity, 1);
        open_interval(agent, 1);
        if (agent.role == Role::Supplier) {
            supplier_ids_.push_back(agent.agent_id);
            if (!agent.honest) dishonest_supplier_ids_.push_back(agent.agent_id);
        }
    }
}

std::string World::make_identity(const Agent& agent) const {
    const char prefix = agent.role == Role::Consumer ? 'c' : 's';
    return prefix + std::to_string(agent.agent_id) + "." +
           std::to_string(agent.identity_gen);
}

void World::open_interval(const Agent& agent, int from_day) {
    ledger_.identities.push_back({agent.current_identity, agent.agent_id, agent.role,
                                  agent.honest, from_day, 0});
    identity_owner_.emplace(agent.current_identity, agent.agent_id);
}

double World::draw_unit() {
    // 53-bit mantissa draw in [0, 1); stable across platforms
    return double(rng_() >> 11) * 0x1.0p-53;
}

int World::draw_index(int bound) {
    return int(draw_unit() * bound);
}

void World::refresh_supplier_cache() {
    supplier_identity_.assign(agents_.size(), {});
    supplier_weight_.assign(agents_.size(), 0.0);
    for (int id : supplier_ids_) {
        supplier_identity_[id] = agents_[id].current_identity;
        supplier_weight_[id] = config_.system == System::None
                                   ? 1.0
                                   : engine_.get_rank(agents_[id].current_identity) +
                                         SimConfig::kSelectionEpsilon;
    }
}

std::optional<std::string> World::choose_supplier(const Agent& consumer) {
    if (consumer.role != Role::Consumer)
        throw std::invalid_argument("choose_supplier needs a consumer agent");

    if (!consumer.honest) {
        if (dishonest_supplier_ids_.empty()) return std::nullopt;
        int pick = draw_index(int(dishonest_supplier_ids_.size()));
        return agents_[dishonest_supplier_ids_[pick]].current_identity;
    }

    double total = 0.0;
    int candidates = 0;
    for (int id : supplier_ids_) {
        if (consumer.blacklist.count(supplier_identity_[id])) continue;
        total += supplier_weight_[id];
        ++candidates;
    }
    if (candidates == 0 || total <= 0.0) return std::nullopt;

    double u = draw_unit() * total;
    double acc = 0.0;
    int last_id = -1;
    for (int id : supplier_ids_) {
        if (consumer.blacklist.count(supplier_identity_[id])) continue;
        acc += supplier_weight_[id];
        last_id = id;
        if (u < acc) return supplier_identity_[id];
    }
    return supplier_identity_[last_id];  // u landed on the rounding tail
}

void World::step_day() {
    if (day_ >= config_.duration_days)
        throw std::logic_error("simulation already ran its full duration");
    const int day = day_ + 1;

    refresh_supplier_cache();
    std::vector<RatingEvent> ratings;
    ratings.reserve(n_consumers_);

    for (auto& buyer : agents_) {
        if (buyer.role != Role::Consumer) continue;
        if (config_.purchase_probability < 1.0 && draw_unit() >= config_.purchase_probability)
            continue;
        auto seller_identity = choose_supplier(buyer);
        if (!seller_identity) continue;

        const Agent& seller = agents_[identity_owner_.at(*seller_identity)];
        TransactionRecord tx;
        tx.day = day;
        tx.buyer_identity = buyer.current_identity;
        tx.seller_identity = *seller_identity;
        tx.buyer_agent_id = buyer.agent_id;
        tx.seller_agent_id = seller.agent_id;
        tx.value = config_.price;

        if (!seller.honest) {
            tx.outcome = Outcome::Scam;
            if (buyer.honest) {
                tx.rating_value = -1.0;
                buyer.blacklist.insert(*seller_identity);
            } else {
                tx.rating_value = +1.0;  // fake pump
            }
        } else if (config_.bad_service_rate > 0.0 && draw_unit() < config_.bad_service_rate) {
            tx.outcome = Outcome::Bad;
            tx.rating_value = -1.0;
        } else {
            tx.outcome = Outcome::Good;
            tx.rating_value = +1.0;
        }

        ratings.push_back({day, tx.buyer_identity, tx.seller_identity, tx.rating_value,
                           tx.value});
        ledger_.transactions.push_back(std::move(tx));
    }

    if (config_.system == System::None)
        engine_.advance_day();  // ranks stay at defaults, clock stays in sync
    else
        engine_.update_period(ratings);
    day_ = day;
}

void World::rotate_identities() {
    if (day_ % config_.scam_period_days != 0 || day_ >= config_.duration_days) return;
    for (auto& agent : agents_) {
        if (agent.honest) continue;
        for (auto it = ledger_.identities.rbegin(); it != ledger_.identities.rend(); ++it) {
            if (it->identity == agent.current_identity) {
                it->active_to_day = day_;
                break;
            }
        }
        ++agent.identity_gen;
        agent.current_identity = make_identity(agent);
        engine_.register_identity(agent.current_identity, day_ + 1);
        open_interval(agent, day_ + 1);
    }
}

World build_population(const SimConfig& config) { return World(config); }

SimResult run_simulation(const SimConfig& config) {
    World world(config);
    SimResult result;
    result.snapshots.push_back(world.snapshot());
    for (int day = 1; day <= config.duration_days; ++day) {
        world.step_day();
        world.rotate_identities();
        result.snapshots.push_back(world.snapshot());
    }
    result.ledger = world.ledger();
    return result;
}

}  // namespace liquidrank
