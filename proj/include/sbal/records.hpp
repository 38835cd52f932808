#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sbal {

// One observation of a directed interaction before aggregation.  The
// payload is free text (to be scored), a survey rating, or an already
// numeric score.  `t` is an explicit ordinal; records without one fall
// back to their position in the input stream.
struct RawRecord {
    std::string source;
    std::string target;
    std::variant<std::string, std::int64_t, double> payload; // text | rating | score
    std::optional<std::int64_t> t;

    bool is_text() const { return std::holds_alternative<std::string>(payload); }
    bool is_rating() const { return std::holds_alternative<std::int64_t>(payload); }
    bool is_score() const { return std::holds_alternative<double>(payload); }
    const std::string& text() const { return std::get<std::string>(payload); }
    std::int64_t rating() const { return std::get<std::int64_t>(payload); }
    double score() const { return std::get<double>(payload); }
};

// A nonzero scored observation, ready for graph aggregation.
struct SignedEdgeRecord {
    std::string source;
    std::string target;
    double weight = 0.0;     // nonzero; sign(weight) is the edge sign
    std::int64_t ordinal = 0; // explicit t when present, else stream index

    int sign() const { return weight > 0 ? +1 : -1; }
};

// Drops zero-score records and maps the rest to signed edges.  Records
// must carry numeric score payloads.  Ordinals come from the explicit t
// field, falling back to the record's index in `records`.
std::vector<SignedEdgeRecord> drop_neutral(std::span<const RawRecord> records);

} // namespace sbal
