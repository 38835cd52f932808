#include "sbal/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "sbal/io.hpp"

namespace sbal {

namespace {

using json = nlohmann::ordered_json;

json ratio_or_null(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return r->to_double();
}

json percent_or_null(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return r->percent(2);
}

std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return s + std::string(width - s.size(), ' ');
}

} // namespace

std::string render_balance(const BalanceReport& report, OutputFormat format) {
    std::uint64_t tot_count = 0, tot_cb = 0, tot_pb = 0, tot_ci = 0;
    for (const auto& tb : report.per_type) {
        tot_count += tb.triad_count;
        tot_cb += tb.cb;
        tot_pb += tb.pb;
        tot_ci += tb.ci;
    }

    switch (format) {
        case OutputFormat::Json: {
            json j;
            j["triad_types"] = json::array();
            for (const auto& tb : report.per_type) {
                json row;
                row["type"] = std::string(to_string(tb.type));
                row["count"] = tb.triad_count;
                row["completely_balanced"] = tb.cb;
                row["partially_balanced"] = tb.pb;
                row["completely_imbalanced"] = tb.ci;
                row["nonzero"] = tb.nonzero;
                row["zero"] = tb.zero;
                row["balance_ratio"] = ratio_or_null(tb.ratio);
                row["balance_percent"] = percent_or_null(tb.ratio);
                row["nonzero_share"] = ratio_or_null(tb.nonzero_share);
                j["triad_types"].push_back(std::move(row));
            }
            j["totals"] = {{"count", tot_count},
                           {"completely_balanced", tot_cb},
                           {"partially_balanced", tot_pb},
                           {"completely_imbalanced", tot_ci}};
            j["overall_balance"] = ratio_or_null(report.overall);
            j["overall_percent"] = percent_or_null(report.overall);
            json signs;
            signs["total"] = report.signs.total();
            json counts, ratios;
            for (int i = 0; i < 4; ++i) {
                counts[std::string(kSignPatternNames[static_cast<std::size_t>(i)])] =
                    report.signs.counts[static_cast<std::size_t>(i)];
                ratios[std::string(kSignPatternNames[static_cast<std::size_t>(i)])] =
                    ratio_or_null(report.signs.ratio(i));
            }
            signs["counts"] = std::move(counts);
            signs["ratios"] = std::move(ratios);
            j["semicycles"] = std::move(signs);
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "type,count,completely_balanced,partially_balanced,completely_imbalanced,"
                   "balance_ratio\n";
            for (const auto& tb : report.per_type) {
                out << to_string(tb.type) << ',' << tb.triad_count << ',' << tb.cb << ','
                    << tb.pb << ',' << tb.ci << ','
                    << (tb.ratio ? format_double(tb.ratio->to_double()) : "") << '\n';
            }
            out << "TOTAL," << tot_count << ',' << tot_cb << ',' << tot_pb << ',' << tot_ci
                << ',' << (report.overall ? format_double(report.overall->to_double()) : "")
                << '\n';
            return out.str();
        }
        case OutputFormat::Table: {
            std::ostringstream out;
            out << "Type    Count  Completely Balanced  Partially Balanced  "
                   "Completely Imbalanced  Balance Ratio\n";
            auto row = [&](const std::string& label, std::uint64_t count, std::uint64_t cb,
                           std::uint64_t pb, std::uint64_t ci,
                           const std::optional<Rational>& ratio) {
                out << pad_right(label, 6) << pad_left(std::to_string(count), 7)
                    << pad_left(std::to_string(cb), 21) << pad_left(std::to_string(pb), 20)
                    << pad_left(std::to_string(ci), 23)
                    << pad_left(ratio ? ratio->percent(2) + "%" : "-", 15) << '\n';
            };
            for (const auto& tb : report.per_type)
                row(std::string(to_string(tb.type)), tb.triad_count, tb.cb, tb.pb, tb.ci,
                    tb.ratio);
            row("Total", tot_count, tot_cb, tot_pb, tot_ci, report.overall);
            out << "\nSemicycle signs:";
            for (int i = 0; i < 4; ++i)
                out << "  " << kSignPatternNames[static_cast<std::size_t>(i)] << " "
                    << report.signs.counts[static_cast<std::size_t>(i)];
            out << "  (total " << report.signs.total() << ")\n";
            return out.str();
        }
    }
    return {};
}

std::string render_census(const CensusTable& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            json j;
            j["triads"] = json::array();
            for (TriadType t : kAllTriadTypes)
                j["triads"].push_back({{"type", std::string(to_string(t))}, {"count", table[t]}});
            j["total"] = table.total();
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "type,count\n";
            for (TriadType t : kAllTriadTypes) out << to_string(t) << ',' << table[t] << '\n';
            return out.str();
        }
        case OutputFormat::Table: {
            std::ostringstream out;
            out << "Type   Count\n";
            for (TriadType t : kAllTriadTypes)
                out << pad_right(std::string(to_string(t)), 6)
                    << pad_left(std::to_string(table[t]), 12) << '\n';
            out << pad_right("Total", 6) << pad_left(std::to_string(table.total()), 12) << '\n';
            return out.str();
        }
    }
    return {};
}

namespace {

// Row labels follow the conventional descriptive-measures table layout.
struct StatRow {
    const char* label;
    bool integral;
    double value;
    bool defined;
};

std::vector<StatRow> stat_rows(const NetworkStats& s) {
    auto opt = [](const std::optional<double>& v) { return v.has_value(); };
    return {
        {"# of nodes", true, static_cast<double>(s.node_count), true},
        {"# of edges", true, static_cast<double>(s.edge_count), true},
        {"Transitivity", false, s.transitivity.value_or(0), opt(s.transitivity)},
        {"Degree Centralization", false, s.degree_centralization.value_or(0),
         opt(s.degree_centralization)},
        {"Density", false, s.density.value_or(0), opt(s.density)},
        {"Average Path Length", false, s.average_path_length.value_or(0),
         opt(s.average_path_length)},
        {"Clustering Coefficient", false, s.clustering_coefficient.value_or(0),
         opt(s.clustering_coefficient)},
        {"# of Components", true, static_cast<double>(s.component_count), true},
        {"# of node in largest component", true, static_cast<double>(s.largest_component_size),
         true},
    };
}

} // namespace

std::string render_stats(const NetworkStats& stats, OutputFormat format) {
    auto rows = stat_rows(stats);
    switch (format) {
        case OutputFormat::Json: {
            json j;
            for (const auto& r : rows) {
                if (!r.defined) j[r.label] = nullptr;
                else if (r.integral) j[r.label] = static_cast<std::uint64_t>(r.value);
                else j[r.label] = r.value;
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "measure,value\n";
            for (const auto& r : rows) {
                out << r.label << ',';
                if (!r.defined) out << "NA";
                else if (r.integral) out << static_cast<std::uint64_t>(r.value);
                else out << format_double(r.value);
                out << '\n';
            }
            return out.str();
        }
        case OutputFormat::Table: {
            std::ostringstream out;
            for (const auto& r : rows) {
                std::string v;
                if (!r.defined) v = "-";
                else if (r.integral) v = std::to_string(static_cast<std::uint64_t>(r.value));
                else {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.4f", r.value);
                    v = buf;
                }
                out << pad_right(r.label, 32) << v << '\n';
            }
            return out.str();
        }
    }
    return {};
}

std::string to_dot(const SignedDigraph& g) {
    std::ostringstream out;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q.push_back('\\');
            q.push_back(c);
        }
        q.push_back('"');
        return q;
    };

    out << "digraph signed_network {\n";
    const auto n = static_cast<SignedDigraph::NodeId>(g.node_count());
    for (SignedDigraph::NodeId u = 0; u < n; ++u)
        out << "  " << quote(g.name(u)) << ";\n";
    for (SignedDigraph::NodeId u = 0; u < n; ++u)
        for (const auto& a : g.out(u)) {
            bool pos = a.sign() > 0;
            out << "  " << quote(g.name(u)) << " -> " << quote(g.name(a.to)) << " [sign=\""
                << (pos ? "+" : "-") << "\", color=" << (pos ? "green" : "red") << "];\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace sbal
