#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sbal {

// Polarity lexicon with optional POS restrictions plus a negation-term
// list.  Lookup is case-insensitive on the surface form (keys are stored
// lowercased; callers pass lowercased tokens).
class Lexicon {
public:
    struct Entry {
        int polarity = 0;     // +1, -1, or 0 (matched but counted for neither side)
        std::string category; // optional metadata; never affects the sign
    };

    // TSV: term <TAB> POS-or-* <TAB> polarity [<TAB> category].
    // '#'-prefixed lines and blank lines are ignored.
    static Lexicon load(const std::filesystem::path& file);

    // One term per line; '#' comments and blanks ignored.
    void load_negations(const std::filesystem::path& file);

    void add(std::string term, std::string pos, Entry entry); // pos "*" = any token
    void add_negation(std::string term);

    // Entry for a token.  A POS-tagged token prefers the exact (term, POS)
    // entry and falls back to the wildcard; an untagged token matches only
    // the wildcard.
    const Entry* find(std::string_view term, std::optional<std::string_view> pos) const;

    bool is_negation(std::string_view term) const;

    std::size_t size() const { return entry_count_; }
    std::size_t negation_count() const { return negations_.size(); }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    // term -> list of (POS-or-*, entry); tiny lists, linear scan
    std::unordered_map<std::string, std::vector<std::pair<std::string, Entry>>> entries_;
    std::unordered_set<std::string> negations_;
    std::size_t entry_count_ = 0;
    std::string name_;
};

} // namespace sbal
