#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbal/lexicon.hpp"
#include "sbal/records.hpp"

namespace sbal {

struct Token {
    std::string text;              // lowercased surface form
    std::optional<std::string> pos; // set only for pre-annotated "word/TAG" input

    bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

// Rule-based splitter/tokenizer.  Sentences end at '.', '!' or '?'; tokens
// are runs of alphanumeric characters (apostrophes between letters are
// kept, so "don't" stays one token).  A token written as word/TAG carries
// the tag as its POS annotation.  Sentences without tokens are dropped.
std::vector<Sentence> tokenize(std::string_view text);

struct SentenceScore {
    int positive_matches = 0;
    int negative_matches = 0;
    bool negated = false;
    int polarity = 0; // +1, -1, or 0
};

// Majority polarity over lexicon matches, then a single negation flip if
// any negation term occurs anywhere in the sentence (0 stays 0).
SentenceScore score_sentence(const Sentence& tokens, const Lexicon& lex);

// Mean sentence polarity; 0 for empty or all-neutral text.
double score_document(std::string_view text, const Lexicon& lex);

struct TextLabelOptions {
    // When non-empty, text at and below the first line containing this
    // marker is dropped before scoring (quoted-reply stripping).
    std::string strip_marker;
};

// Replaces each record's text payload by its document score.  Zero scores
// pass through for downstream neutral removal.  Order is preserved.
std::vector<RawRecord> label_text_edges(std::span<const RawRecord> records, const Lexicon& lex,
                                        const TextLabelOptions& opts = {});

// Maps survey ratings to signs: rating >= threshold -> +1, else -1.
// Ratings must be integers in [1,5].
std::vector<SignedEdgeRecord> label_survey_edges(std::span<const RawRecord> records,
                                                 std::int64_t threshold = 3);

// Cuts `text` at the first line containing `marker` (that line and
// everything after it are removed).  Empty marker returns text unchanged.
std::string strip_quoted_tail(std::string_view text, std::string_view marker);

} // namespace sbal
