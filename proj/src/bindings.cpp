#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liquidrank/grid.hpp"
#include "liquidrank/ledger_io.hpp"
#include "liquidrank/market_sim.hpp"
#include "liquidrank/metrics.hpp"
#include "liquidrank/reputation.hpp"

namespace py = pybind11;
using namespace liquidrank;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reputation engine, marketplace simulator and metrics";

    py::enum_<Mode>(m, "Mode")
        .value("Regular", Mode::Regular)
        .value("Weighted", Mode::Weighted)
        .value("Tom", Mode::Tom)
        .value("Som", Mode::Som);

    py::enum_<System>(m, "System")
        .value("NoSystem", System::None)
        .value("Regular", System::Regular)
        .value("Weighted", System::Weighted)
        .value("Tom", System::Tom)
        .value("Som", System::Som);

    py::enum_<Role>(m, "Role")
        .value("Consumer", Role::Consumer)
        .value("Supplier", Role::Supplier);

    py::enum_<Outcome>(m, "Outcome")
        .value("Good", Outcome::Good)
        .value("Bad", Outcome::Bad)
        .value("Scam", Outcome::Scam);

    py::class_<RatingEvent>(m, "RatingEvent")
        .def(py::init([](int day, std::string rater, std::string ratee, double value,
                         double financial) {
                 return RatingEvent{day, std::move(rater), std::move(ratee), value, financial};
             }),
             py::arg("day"), py::arg("rater"), py::arg("ratee"), py::arg("value"),
             py::arg("financial"))
        .def_readwrite("day", &RatingEvent::day)
        .def_readwrite("rater", &RatingEvent::rater)
        .def_readwrite("ratee", &RatingEvent::ratee)
        .def_readwrite("value", &RatingEvent::value)
        .def_readwrite("financial", &RatingEvent::financial);

    py::class_<EngineConfig>(m, "EngineConfig")
        .def(py::init<>())
        .def_readwrite("mode", &EngineConfig::mode)
        .def_readwrite("blend_d", &EngineConfig::blend_d)
        .def_readwrite("retention_lambda", &EngineConfig::retention_lambda);

    py::class_<ReputationSnapshot>(m, "ReputationSnapshot")
        .def_readonly("day", &ReputationSnapshot::day)
        .def_readonly("entries", &ReputationSnapshot::entries);

    py::class_<ReputationEngine>(m, "ReputationEngine")
        .def(py::init<const std::vector<std::string>&, EngineConfig>(),
             py::arg("identities"), py::arg("config"))
        .def("register_identity", &ReputationEngine::register_identity)
        .def("rater_multiplier", &ReputationEngine::rater_multiplier)
        .def("update_period", &ReputationEngine::update_period)
        .def("get_rank", &ReputationEngine::get_rank)
        .def("snapshot", &ReputationEngine::snapshot)
        .def("current_day", &ReputationEngine::current_day);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("n_agents", &SimConfig::n_agents)
        .def_readwrite("consumer_fraction", &SimConfig::consumer_fraction)
        .def_readwrite("dishonest_supplier_fraction", &SimConfig::dishonest_supplier_fraction)
        .def_readwrite("dishonest_consumer_fraction", &SimConfig::dishonest_consumer_fraction)
        .def_readwrite("duration_days", &SimConfig::duration_days)
        .def_readwrite("scam_period_days", &SimConfig::scam_period_days)
        .def_readwrite("system", &SimConfig::system)
        .def_readwrite("price", &SimConfig::price)
        .def_readwrite("purchase_probability", &SimConfig::purchase_probability)
        .def_readwrite("bad_service_rate", &SimConfig::bad_service_rate)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("blend_d", &SimConfig::blend_d)
        .def_readwrite("retention_lambda", &SimConfig::retention_lambda);

    py::class_<TransactionRecord>(m, "TransactionRecord")
        .def_readonly("day", &TransactionRecord::day)
        .def_readonly("buyer_identity", &TransactionRecord::buyer_identity)
        .def_readonly("seller_identity", &TransactionRecord::seller_identity)
        .def_readonly("buyer_agent_id", &TransactionRecord::buyer_agent_id)
        .def_readonly("seller_agent_id", &TransactionRecord::seller_agent_id)
        .def_readonly("value", &TransactionRecord::value)
        .def_readonly("outcome", &TransactionRecord::outcome)
        .def_readonly("rating_value", &TransactionRecord::rating_value);

    py::class_<IdentityInterval>(m, "IdentityInterval")
        .def_readonly("identity", &IdentityInterval::identity)
        .def_readonly("agent_id", &IdentityInterval::agent_id)
        .def_readonly("role", &IdentityInterval::role)
        .def_readonly("honest", &IdentityInterval::honest)
        .def_readonly("active_from_day", &IdentityInterval::active_from_day)
        .def_readonly("active_to_day", &IdentityInterval::active_to_day);

    py::class_<Ledger>(m, "Ledger")
        .def_readonly("transactions", &Ledger::transactions)
        .def_readonly("identities", &Ledger::identities);

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("ledger", &SimResult::ledger)
        .def_readonly("snapshots", &SimResult::snapshots);

    py::class_<MetricsReport>(m, "MetricsReport")
        .def_readonly("scam_period", &MetricsReport::scam_period)
        .def_readonly("system", &MetricsReport::system)
        .def_readonly("lts", &MetricsReport::lts)
        .def_readonly("pfs", &MetricsReport::pfs)
        .def_readonly("lts_relative_decrease", &MetricsReport::lts_relative_decrease)
        .def_readonly("pfs_relative_decrease", &MetricsReport::pfs_relative_decrease);

    py::class_<GridConfig>(m, "GridConfig")
        .def(py::init<>())
        .def_readwrite("base", &GridConfig::base)
        .def_readwrite("scam_periods", &GridConfig::scam_periods)
        .def_readwrite("systems", &GridConfig::systems)
        .def_readwrite("replications", &GridConfig::replications);

    m.def("run_simulation", &run_simulation, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_grid", &run_grid, py::arg("grid"),
          py::call_guard<py::gil_scoped_release>());
    m.def("compute_lts", &compute_lts);
    m.def("compute_pfs", &compute_pfs);
    m.def("relative_decrease", &relative_decrease);
    m.def("build_comparison_table", &build_comparison_table);
    m.def("replay_log", &replay_log, py::arg("events"), py::arg("config"));
    m.def("parse_ratings_log", &parse_ratings_log);
    m.def("write_ratings_log", &write_ratings_log);
    m.def("write_snapshot_series", &write_snapshot_series);
    m.def("write_ledger", &write_ledger);
    m.def("write_metrics_table", &write_metrics_table);
}
