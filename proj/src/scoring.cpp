#include "sbal/scoring.hpp"

#include <cctype>
#include <stdexcept>

#include "sbal/errors.hpp"

namespace sbal {

namespace {

bool is_token_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80; // keep multi-byte UTF-8 sequences intact
}

bool is_tag_char(unsigned char c) { return (c >= 'A' && c <= 'Z') || c == '$'; }

char ascii_lower(unsigned char c) { return static_cast<char>(std::tolower(c)); }

} // namespace

std::vector<Sentence> tokenize(std::string_view text) {
    std::vector<Sentence> sentences;
    Sentence current;
    std::string word;

    auto flush_token = [&](std::optional<std::string> pos = std::nullopt) {
        if (!word.empty()) current.push_back({std::move(word), std::move(pos)});
        word.clear();
    };
    auto flush_sentence = [&] {
        flush_token();
        if (!current.empty()) sentences.push_back(std::move(current));
        current.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_token_char(c)) {
            word.push_back(ascii_lower(c));
        } else if (c == '\'' && !word.empty() && i + 1 < text.size() &&
                   is_token_char(static_cast<unsigned char>(text[i + 1]))) {
            word.push_back('\''); // keep "don't" as one token
        } else if (c == '/' && !word.empty()) {
            // word/TAG carries a POS annotation; anything else makes '/' a
            // plain separator.
            std::size_t j = i + 1;
            while (j < text.size() && is_tag_char(static_cast<unsigned char>(text[j]))) ++j;
            bool tag_ok = j > i + 1 &&
                          (j == text.size() || !is_token_char(static_cast<unsigned char>(text[j])));
            if (tag_ok) {
                flush_token(std::string(text.substr(i + 1, j - i - 1)));
                i = j - 1;
            } else {
                flush_token();
            }
        } else if (c == '.' || c == '!' || c == '?') {
            flush_sentence();
        } else {
            flush_token();
        }
    }
    flush_sentence();
    return sentences;
}

SentenceScore score_sentence(const Sentence& tokens, const Lexicon& lex) {
    SentenceScore s;
    for (const Token& tok : tokens) {
        if (lex.is_negation(tok.text)) s.negated = true;
        const Lexicon::Entry* e =
            lex.find(tok.text, tok.pos ? std::optional<std::string_view>(*tok.pos) : std::nullopt);
        if (!e) continue;
        if (e->polarity > 0) ++s.positive_matches;
        else if (e->polarity < 0) ++s.negative_matches;
        // polarity 0: matched, counted for neither side
    }
    if (s.positive_matches > s.negative_matches) s.polarity = +1;
    else if (s.negative_matches > s.positive_matches) s.polarity = -1;
    if (s.negated) s.polarity = -s.polarity; // single flip, flag semantics
    return s;
}

double score_document(std::string_view text, const Lexicon& lex) {
    auto sentences = tokenize(text);
    if (sentences.empty()) return 0.0;
    int sum = 0;
    for (const auto& sent : sentences) sum += score_sentence(sent, lex).polarity;
    return static_cast<double>(sum) / static_cast<double>(sentences.size());
}

std::string strip_quoted_tail(std::string_view text, std::string_view marker) {
    if (marker.empty()) return std::string(text);
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        if (text.substr(line_start, line_end - line_start).find(marker) !=
            std::string_view::npos)
            return std::string(text.substr(0, line_start));
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return std::string(text);
}

std::vector<RawRecord> label_text_edges(std::span<const RawRecord> records, const Lexicon& lex,
                                        const TextLabelOptions& opts) {
    std::vector<RawRecord> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RawRecord& r = records[i];
        if (!r.is_text())
            throw std::invalid_argument("label_text_edges: record " + std::to_string(i) +
                                        " does not carry a text payload");
        std::string body = opts.strip_marker.empty()
                               ? r.text()
                               : strip_quoted_tail(r.text(), opts.strip_marker);
        out.push_back({r.source, r.target, score_document(body, lex), r.t});
    }
    return out;
}

std::vector<SignedEdgeRecord> label_survey_edges(std::span<const RawRecord> records,
                                                 std::int64_t threshold) {
    std::vector<SignedEdgeRecord> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RawRecord& r = records[i];
        if (!r.is_rating())
            throw std::invalid_argument("label_survey_edges: record " + std::to_string(i) +
                                        " does not carry a rating payload");
        std::int64_t rating = r.rating();
        if (rating < 1 || rating > 5)
            throw IoError("label_survey_edges: record " + std::to_string(i) + " has rating " +
                          std::to_string(rating) + " outside [1,5]");
        out.push_back({r.source, r.target, rating >= threshold ? +1.0 : -1.0,
                       r.t.has_value() ? *r.t : static_cast<std::int64_t>(i)});
    }
    return out;
}

} // namespace sbal
