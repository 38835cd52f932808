#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "sbal/balance.hpp"
#include "sbal/census.hpp"
#include "sbal/errors.hpp"
#include "sbal/graph.hpp"
#include "sbal/io.hpp"
#include "sbal/lexicon.hpp"
#include "sbal/metrics.hpp"
#include "sbal/oracle.hpp"
#include "sbal/records.hpp"
#include "sbal/report.hpp"
#include "sbal/scoring.hpp"

namespace {

struct CommonOptions {
    std::string input;
    std::string output;    // empty -> stdout
    std::string alias_map; // empty -> none
    sbal::AggregationPolicy policy = sbal::AggregationPolicy::Mean;
    bool no_prune_pendants = false;
    sbal::OutputFormat format = sbal::OutputFormat::Json;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_format = true) {
    cmd->add_option("--input", opts.input, "signed edgelist CSV (source,target,weight)")
        ->required();
    cmd->add_option("--output", opts.output, "output file (default: stdout)");
    cmd->add_option("--alias-map", opts.alias_map, "TSV alias map applied before graph build");
    cmd->add_option("--policy", opts.policy, "duplicate-edge aggregation policy")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, sbal::AggregationPolicy>{
                {"mean", sbal::AggregationPolicy::Mean},
                {"first", sbal::AggregationPolicy::First},
                {"last", sbal::AggregationPolicy::Last}},
            CLI::ignore_case))
        ->default_str("mean");
    cmd->add_flag("--no-prune-pendants", opts.no_prune_pendants,
                  "keep pendant nodes (self-loops and isolates are always removed)");
    if (with_format)
        cmd->add_option("--format", opts.format, "report format")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, sbal::OutputFormat>{{"json", sbal::OutputFormat::Json},
                                                          {"csv", sbal::OutputFormat::Csv},
                                                          {"table", sbal::OutputFormat::Table}},
                CLI::ignore_case))
            ->default_str("json");
}

sbal::SignedDigraph load_graph(const CommonOptions& opts) {
    auto records = sbal::read_edgelist_csv(std::filesystem::path(opts.input));
    if (!opts.alias_map.empty())
        sbal::apply_alias_map(records, sbal::read_alias_map(opts.alias_map));
    auto edges = sbal::drop_neutral(records);
    auto g = sbal::build_graph(edges, opts.policy);
    return sbal::prune(g, {.self_loops = true, .isolates = true,
                           .pendants = !opts.no_prune_pendants});
}

void emit(const std::string& content, const std::string& output) {
    if (output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(output);
    if (!out) throw sbal::IoError("cannot open output file: " + output);
    out << content;
    if (!out) throw sbal::IoError("failed writing output file: " + output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural balance analysis for signed directed networks"};
    app.require_subcommand(1);

    // label
    auto* label = app.add_subcommand(
        "label", "score JSON-lines records into a signed edgelist CSV");
    std::string label_input, label_output, lexicon_path, negations_path, strip_marker;
    bool survey = false;
    std::int64_t threshold = 3;
    label->add_option("--input", label_input, "JSON-lines records")->required();
    label->add_option("--output", label_output, "output CSV (default: stdout)");
    label->add_option("--lexicon", lexicon_path, "polarity lexicon TSV (text records)");
    label->add_option("--negations", negations_path, "negation-term list, one per line");
    label->add_flag("--survey", survey, "records carry survey ratings instead of text");
    label->add_option("--threshold", threshold, "survey rating threshold for a positive sign")
        ->default_val(3);
    label->add_option("--strip-marker", strip_marker,
                      "drop text at and below the first line containing this marker");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full balance report for a signed edgelist");
    CommonOptions analyze_opts;
    add_common(analyze, analyze_opts);
    std::string dot_path;
    unsigned analyze_threads = 1;
    bool strict = false;
    analyze->add_option("--dot", dot_path, "also export the pruned graph as DOT");
    analyze->add_option("--threads", analyze_threads, "worker threads (any count, same result)")
        ->default_val(1);
    analyze->add_flag("--strict", strict, "fail when the graph has no transitive triads");

    // census
    auto* census = app.add_subcommand("census", "16-class triad census");
    CommonOptions census_opts;
    add_common(census, census_opts);
    unsigned census_threads = 1;
    census->add_option("--threads", census_threads, "worker threads (any count, same result)")
        ->default_val(1);

    // stats
    auto* stats = app.add_subcommand("stats", "descriptive network statistics");
    CommonOptions stats_opts;
    add_common(stats, stats_opts);

    // oracle-check (hidden): cross-validate fast engines against brute force
    auto* oracle = app.add_subcommand("oracle-check", "");
    oracle->group(""); // hidden from help
    CommonOptions oracle_opts;
    add_common(oracle, oracle_opts, /*with_format=*/false);
    std::size_t oracle_cap = sbal::kOracleDefaultCap;
    oracle->add_option("--max-nodes", oracle_cap, "refuse graphs above this size")
        ->default_val(sbal::kOracleDefaultCap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (label->parsed()) {
            if (survey && !lexicon_path.empty())
                throw sbal::IoError("--survey and --lexicon are mutually exclusive");
            if (!survey && lexicon_path.empty())
                throw sbal::IoError("label needs --lexicon (or --survey for rating records)");

            auto records = sbal::read_jsonl(label_input);
            std::ostringstream out;
            if (survey) {
                auto edges = sbal::label_survey_edges(records, threshold);
                sbal::write_edgelist_csv(out, edges);
            } else {
                auto lex = sbal::Lexicon::load(lexicon_path);
                if (!negations_path.empty()) lex.load_negations(negations_path);
                auto labeled =
                    sbal::label_text_edges(records, lex, {.strip_marker = strip_marker});
                sbal::write_edgelist_csv(out, labeled);
            }
            emit(out.str(), label_output);
        } else if (analyze->parsed()) {
            auto g = load_graph(analyze_opts);
            auto report = sbal::network_balance(g, analyze_threads);
            if (strict && report.triad_total() == 0)
                throw sbal::DomainError("strict mode: graph contains no transitive triads");
            if (!dot_path.empty()) emit(sbal::to_dot(g), dot_path);
            emit(sbal::render_balance(report, analyze_opts.format), analyze_opts.output);
        } else if (census->parsed()) {
            auto g = load_graph(census_opts);
            emit(sbal::render_census(sbal::full_census(g, census_threads), census_opts.format),
                 census_opts.output);
        } else if (stats->parsed()) {
            auto g = load_graph(stats_opts);
            emit(sbal::render_stats(sbal::descriptive_stats(g), stats_opts.format),
                 stats_opts.output);
        } else if (oracle->parsed()) {
            auto g = load_graph(oracle_opts);
            auto fast_census = sbal::full_census(g);
            auto slow_census = sbal::brute_force_census(g, oracle_cap);
            auto fast_balance = sbal::network_balance(g);
            auto slow_balance = sbal::brute_force_balance(g, oracle_cap);

            bool census_ok = fast_census == slow_census;
            bool balance_ok = fast_balance == slow_balance;
            if (!census_ok) {
                std::cerr << "census mismatch:\n";
                for (sbal::TriadType t : sbal::kAllTriadTypes)
                    if (fast_census[t] != slow_census[t])
                        std::cerr << "  " << sbal::to_string(t) << ": fast " << fast_census[t]
                                  << " vs oracle " << slow_census[t] << "\n";
            }
            if (!balance_ok) std::cerr << "balance report mismatch\n";
            if (!census_ok || !balance_ok) return 1;
            std::cout << "oracle-check: OK (" << g.node_count() << " nodes, " << g.arc_count()
                      << " edges, " << slow_census.total() << " triples)\n";
        }
    } catch (const sbal::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const sbal::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
