#include "liquidrank/ledger_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace liquidrank {

namespace {

constexpr const char* kRatingsHeader = "day\trater\tratee\tvalue\tfinancial";

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

double parse_number(const std::string& text, std::size_t line) {
    if (text.empty()) fail(line, "empty numeric field");
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) fail(line, "malformed number '" + text + "'");
    return v;
}

int parse_day(const std::string& text, std::size_t line) {
    double v = parse_number(text, line);
    int day = int(v);
    if (double(day) != v || day < 1) fail(line, "invalid day '" + text + "'");
    return day;
}

std::string format_rank(double rank) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", rank);
    return buf;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string format_percent(double fraction, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f%%", decimals, fraction * 100.0);
    return buf;
}

}  // namespace

std::vector<RatingEvent> parse_ratings_log(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<RatingEvent> events;
    int previous_day = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != kRatingsHeader)
                fail(1, std::string("expected header '") + kRatingsHeader + "'");
            continue;
        }
        if (line.empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 5) fail(line_no, "expected 5 tab-separated fields");

        RatingEvent e;
        e.day = parse_day(fields[0], line_no);
        e.rater = fields[1];
        e.ratee = fields[2];
        e.value = parse_number(fields[3], line_no);
        e.financial = parse_number(fields[4], line_no);

        if (e.rater.empty() || e.ratee.empty()) fail(line_no, "empty identity field");
        if (e.rater == e.ratee) fail(line_no, "rater equals ratee");
        if (e.value < -1.0 || e.value > 1.0) fail(line_no, "value out of [-1, 1]");
        if (e.financial < 0.0) fail(line_no, "negative financial value");
        if (e.day < previous_day) fail(line_no, "decreasing day");
        previous_day = e.day;
        events.push_back(std::move(e));
    }
    if (line_no == 0) fail(1, "empty input, header missing");
    return events;
}

std::string write_ratings_log(const std::vector<RatingEvent>& events) {
    std::ostringstream out;
    out << kRatingsHeader << '\n';
    for (const auto& e : events)
        out << e.day << '\t' << e.rater << '\t' << e.ratee << '\t' << format_number(e.value)
            << '\t' << format_number(e.financial) << '\n';
    return out.str();
}

std::string write_snapshot_series(const std::vector<ReputationSnapshot>& snapshots) {
    for (std::size_t i = 1; i < snapshots.size(); ++i)
        if (snapshots[i].day < snapshots[i - 1].day)
            throw std::invalid_argument("snapshots not ordered by day");

    std::ostringstream out;
    out << "day\tidentity\trank\n";
    for (const auto& snap : snapshots) {
        auto entries = snap.entries;
        std::sort(entries.begin(), entries.end());
        for (const auto& [id, rank] : entries)
            out << snap.day << '\t' << id << '\t' << format_rank(rank) << '\n';
    }
    return out.str();
}

std::string write_ledger(const Ledger& ledger) {
    std::ostringstream out;
    out << "# transactions\n";
    out << "day\tbuyer_identity\tseller_identity\tbuyer_agent\tseller_agent\tvalue\toutcome\trating\n";
    for (const auto& tx : ledger.transactions)
        out << tx.day << '\t' << tx.buyer_identity << '\t' << tx.seller_identity << '\t'
            << tx.buyer_agent_id << '\t' << tx.seller_agent_id << '\t'
            << format_number(tx.value) << '\t' << to_string(tx.outcome) << '\t'
            << format_number(tx.rating_value) << '\n';
    out << "# identities\n";
    out << "identity\tagent\trole\thonest\tactive_from\tactive_to\n";
    for (const auto& id : ledger.identities) {
        out << id.identity << '\t' << id.agent_id << '\t' << to_string(id.role) << '\t'
            << (id.honest ? 1 : 0) << '\t' << id.active_from_day << '\t';
        if (id.active_to_day > 0) out << id.active_to_day;
        out << '\n';
    }
    return out.str();
}

std::string write_metrics_table(const std::vector<MetricsReport>& table) {
    std::ostringstream out;
    out << "scam_period\tsystem\tlts\tpfs\tlts_rel_decrease\tpfs_rel_decrease"
           "\tlts_raw\tpfs_raw\n";
    for (const auto& row : table) {
        out << row.scam_period << '\t' << to_string(row.system) << '\t'
            << format_percent(row.lts, 1) << '\t' << format_percent(row.pfs, 0) << '\t';
        if (row.lts_relative_decrease) out << format_percent(*row.lts_relative_decrease, 0);
        out << '\t';
        if (row.pfs_relative_decrease) out << format_percent(*row.pfs_relative_decrease, 0);
        out << '\t' << format_number(row.lts) << '\t' << format_number(row.pfs) << '\n';
    }
    return out.str();
}

}  // namespace liquidrank
