#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "liquidrank/reputation.hpp"
#include "oracle.hpp"

using namespace liquidrank;

namespace {

EngineConfig config_for(Mode mode) {
    EngineConfig cfg;
    cfg.mode = mode;
    return cfg;
}

ReputationEngine at_day(ReputationEngine engine, int day) {
    while (engine.current_day() < day) engine.update_period({});
    return engine;
}

}  // namespace

TEST_CASE("initial state gives everyone the default rank") {
    ReputationEngine engine({"A", "B", "C"}, {});
    CHECK(engine.current_day() == 0);
    CHECK(engine.get_rank("A") == 0.5);
    CHECK(engine.get_rank("B") == 0.5);
    CHECK(engine.get_rank("C") == 0.5);

    ReputationEngine empty({}, {});
    CHECK(empty.snapshot().entries.empty());
    CHECK(empty.current_day() == 0);

    CHECK_THROWS_WITH_AS(ReputationEngine({"A", "A"}, {}),
                         doctest::Contains("duplicate identity id: A"),
                         std::invalid_argument);
}

TEST_CASE("config validation") {
    EngineConfig bad;
    bad.blend_d = 0.0;
    CHECK_THROWS_AS(ReputationEngine({}, bad), std::invalid_argument);
    bad = {};
    bad.retention_lambda = 1.5;
    CHECK_THROWS_AS(ReputationEngine({}, bad), std::invalid_argument);
}

TEST_CASE("register_identity") {
    ReputationEngine engine({"A"}, {});
    engine.register_identity("D", 11);
    CHECK(engine.get_rank("D") == 0.5);
    CHECK(engine.first_active_day("D") == 11);
    CHECK(engine.cumulative_spend("D") == 0.0);

    CHECK_THROWS_AS(engine.register_identity("A", 1), std::invalid_argument);

    auto later = at_day(ReputationEngine({"A"}, {}), 10);
    CHECK_THROWS_AS(later.register_identity("D", 5), std::invalid_argument);
}

TEST_CASE("rank reads") {
    ReputationEngine engine({"A", "B"}, {});
    auto snap = engine.snapshot();
    CHECK(snap.day == 0);
    REQUIRE(snap.entries.size() == 2);
    CHECK(snap.entries[0] == std::pair<std::string, double>{"A", 0.5});
    CHECK(snap.entries[1] == std::pair<std::string, double>{"B", 0.5});
    CHECK_THROWS_AS(engine.get_rank("Z"), std::out_of_range);
}

TEST_CASE("TOM multiplier normalizes over the period's raters") {
    ReputationEngine engine({"A"}, config_for(Mode::Tom));
    engine.register_identity("B", 11);
    engine = at_day(std::move(engine), 20);
    CHECK(engine.rater_multiplier("A", {"A", "B"}) == doctest::Approx(1.0));
    CHECK(engine.rater_multiplier("B", {"A", "B"}) == doctest::Approx(0.5));
    CHECK(engine.rater_multiplier("B", {"B"}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(engine.rater_multiplier("Z", {"Z"}), std::out_of_range);
}

TEST_CASE("SOM multiplier normalizes in log space") {
    ReputationEngine engine({"A", "B", "X"}, config_for(Mode::Som));
    engine.update_period({{1, "A", "X", 1.0, 99.0}, {1, "B", "X", 1.0, 9.0}});
    CHECK(engine.cumulative_spend("A") == 99.0);
    CHECK(engine.rater_multiplier("A", {"A", "B"}) == doctest::Approx(1.0));
    CHECK(engine.rater_multiplier("B", {"A", "B"}) == doctest::Approx(0.5));
    CHECK(engine.rater_multiplier("B", {"B"}) == doctest::Approx(1.0));
}

TEST_CASE("SOM falls back to full weight when nobody has spent yet") {
    ReputationEngine engine({"A", "B"}, config_for(Mode::Som));
    CHECK(engine.rater_multiplier("A", {"A", "B"}) == 1.0);
}

TEST_CASE("regular and weighted modes ignore the multiplier") {
    ReputationEngine engine({"A", "B"}, config_for(Mode::Weighted));
    CHECK(engine.rater_multiplier("A", {"A", "B"}) == 1.0);
}

TEST_CASE("single-event update, hand-traced") {
    auto run = [](double value) {
        ReputationEngine engine({"A", "B", "C"}, config_for(Mode::Weighted));
        engine.update_period({{1, "A", "C", value, 9.0}});
        return engine;
    };

    auto up = run(1.0);
    CHECK(up.get_rank("C") == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(up.get_rank("A") == doctest::Approx(0.495).epsilon(1e-12));
    CHECK(up.get_rank("B") == doctest::Approx(0.495).epsilon(1e-12));
    CHECK(up.current_day() == 1);
    CHECK(up.cumulative_spend("A") == 9.0);

    auto down = run(-1.0);
    CHECK(down.get_rank("C") == doctest::Approx(0.25).epsilon(1e-12));

    auto neutral = run(0.0);
    CHECK(neutral.get_rank("C") == 0.5);
}

TEST_CASE("empty batch decays every rank") {
    ReputationEngine engine({"A", "B"}, {});
    engine.update_period({});
    CHECK(engine.get_rank("A") == doctest::Approx(0.5 * 0.99).epsilon(1e-15));
    CHECK(engine.current_day() == 1);
}

TEST_CASE("unrated identities decay exactly by lambda^k") {
    ReputationEngine engine({"A", "B", "X"}, {});
    engine.update_period({{1, "A", "X", 1.0, 1.0}});
    double before = engine.get_rank("B");
    for (int k = 1; k <= 40; ++k) {
        engine.update_period({{engine.current_day() + 1, "A", "X", 1.0, 1.0}});
        CHECK(engine.get_rank("B") == doctest::Approx(before * std::pow(0.99, k)).epsilon(1e-12));
    }
}

TEST_CASE("update rejects bad batches") {
    ReputationEngine engine({"A", "B", "C"}, {});
    CHECK_THROWS_AS(engine.update_period({{2, "A", "C", 1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(engine.update_period({{1, "A", "C", 1.0, 1.0}, {2, "A", "B", 1.0, 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(engine.update_period({{1, "A", "Z", 1.0, 1.0}}), std::out_of_range);
    CHECK_THROWS_AS(engine.update_period({{1, "A", "A", 1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(engine.update_period({{1, "A", "C", 2.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(engine.update_period({{1, "A", "C", 1.0, -1.0}}), std::invalid_argument);
    CHECK(engine.current_day() == 0);  // failed updates leave the state alone
}

TEST_CASE("order invariance: permuted batches give bit-identical states") {
    std::mt19937_64 rng(7);
    std::vector<std::string> ids{"A", "B", "C", "D"};
    for (Mode mode : {Mode::Regular, Mode::Weighted, Mode::Tom, Mode::Som}) {
        std::vector<RatingEvent> batch;
        for (int i = 0; i < 8; ++i) {
            int rater = int(rng() % 4), ratee = int(rng() % 4);
            if (rater == ratee) ratee = (ratee + 1) % 4;
            batch.push_back({1, ids[rater], ids[ratee],
                             double(int(rng() % 21) - 10) / 10.0, double(rng() % 50)});
        }
        auto shuffled = batch;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);

        ReputationEngine a(ids, config_for(mode)), b(ids, config_for(mode));
        a.update_period(batch);
        b.update_period(shuffled);
        for (const auto& id : ids) {
            CHECK(a.get_rank(id) == b.get_rank(id));
            CHECK(a.cumulative_spend(id) == b.cumulative_spend(id));
        }
    }
}

TEST_CASE("ranks stay inside [0, 1] under random update sequences") {
    std::mt19937_64 rng(42);
    std::vector<std::string> ids{"A", "B", "C", "D", "E"};
    for (Mode mode : {Mode::Regular, Mode::Weighted, Mode::Tom, Mode::Som}) {
        ReputationEngine engine(ids, config_for(mode));
        for (int day = 1; day <= 60; ++day) {
            std::vector<RatingEvent> batch;
            int n = int(rng() % 6);
            for (int i = 0; i < n; ++i) {
                int rater = int(rng() % ids.size()), ratee = int(rng() % ids.size());
                if (rater == ratee) continue;
                batch.push_back({day, ids[rater], ids[ratee],
                                 double(int(rng() % 2001) - 1000) / 1000.0,
                                 double(rng() % 1000) / 10.0});
            }
            engine.update_period(batch);
            for (const auto& [id, rank] : engine.snapshot().entries) {
                CHECK(rank >= 0.0);
                CHECK(rank <= 1.0);
            }
        }
    }
}

TEST_CASE("TOM and SOM multipliers are monotone in their inputs") {
    // longer time on the market never lowers the TOM weight
    ReputationEngine tom({"A"}, config_for(Mode::Tom));
    tom.register_identity("B", 5);
    tom.register_identity("C", 9);
    tom = at_day(std::move(tom), 12);
    CHECK(tom.rater_multiplier("A", {"A", "B", "C"}) >=
          tom.rater_multiplier("B", {"A", "B", "C"}));
    CHECK(tom.rater_multiplier("B", {"A", "B", "C"}) >=
          tom.rater_multiplier("C", {"A", "B", "C"}));

    ReputationEngine som({"A", "B", "C", "X"}, config_for(Mode::Som));
    som.update_period({{1, "A", "X", 1.0, 80.0},
                       {1, "B", "X", 1.0, 20.0},
                       {1, "C", "X", 1.0, 1.0}});
    CHECK(som.rater_multiplier("A", {"A", "B", "C"}) >=
          som.rater_multiplier("B", {"A", "B", "C"}));
    CHECK(som.rater_multiplier("B", {"A", "B", "C"}) >=
          som.rater_multiplier("C", {"A", "B", "C"}));
}

TEST_CASE("modes collapse to Regular when weights are forced to one") {
    // financial 9 gives unit log weight; a single rater gets multiplier 1
    std::vector<std::string> ids{"A", "X", "Y"};
    std::vector<RatingEvent> batch{{1, "A", "X", 0.8, 9.0}, {1, "A", "Y", -0.4, 9.0}};
    ReputationEngine reference(ids, config_for(Mode::Regular));
    reference.update_period(batch);
    for (Mode mode : {Mode::Weighted, Mode::Tom, Mode::Som}) {
        ReputationEngine engine(ids, config_for(mode));
        engine.update_period(batch);
        for (const auto& id : ids)
            CHECK(engine.get_rank(id) == reference.get_rank(id));
    }
}

TEST_CASE("update matches the brute-force oracle on random micro-batches") {
    std::mt19937_64 rng(2024);
    std::vector<std::string> ids{"A", "B", "C", "D"};
    for (int trial = 0; trial < 200; ++trial) {
        Mode mode = Mode(trial % 4);
        EngineConfig cfg = config_for(mode);

        ReputationEngine engine(ids, cfg);
        oracle::State state;
        for (const auto& id : ids) {
            state.ranks[id] = 0.5;
            state.first_active_day[id] = 1;
            state.spends[id] = 0.0;
        }

        for (int day = 1; day <= 3; ++day) {
            std::vector<RatingEvent> batch;
            int n = int(rng() % 6);
            for (int i = 0; i < n; ++i) {
                int rater = int(rng() % ids.size()), ratee = int(rng() % ids.size());
                if (rater == ratee) continue;
                batch.push_back({day, ids[rater], ids[ratee],
                                 double(int(rng() % 201) - 100) / 100.0,
                                 double(rng() % 500) / 7.0});
            }
            engine.update_period(batch);
            state = oracle::update(state, batch, cfg);
            for (const auto& id : ids)
                CHECK(engine.get_rank(id) == doctest::Approx(state.ranks[id]).epsilon(1e-12));
        }
    }
}

TEST_CASE("replay_log registers identities as they appear") {
    std::vector<RatingEvent> events{{1, "Z", "X", 1.0, 1.0}, {3, "Z", "Y", 1.0, 1.0}};
    auto series = replay_log(events, {});
    REQUIRE(series.size() == 3);
    CHECK(series[0].entries.size() == 2);  // X, Z
    CHECK(series[2].entries.size() == 3);  // Y joined on day 3
    CHECK(series[2].day == 3);

    CHECK(replay_log({}, {}).empty());
}
