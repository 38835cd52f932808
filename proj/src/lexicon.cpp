#include "sbal/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "sbal/errors.hpp"

namespace sbal {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool is_comment_or_blank(const std::string& line) {
    auto t = trim(line);
    return t.empty() || t[0] == '#';
}

std::optional<int> parse_polarity(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return +1;
    if (s == "-" || s == "-1") return -1;
    if (s == "0") return 0;
    return std::nullopt;
}

} // namespace

Lexicon Lexicon::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open lexicon file: " + file.string());

    Lexicon lex;
    lex.set_name(file.stem().string());

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;

        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                cols.push_back(trim(line.substr(start)));
                break;
            }
            cols.push_back(trim(line.substr(start, tab - start)));
            start = tab + 1;
        }
        if (cols.size() < 3 || cols.size() > 4)
            throw IoError(file.string() + ":" + std::to_string(lineno) +
                          ": expected 3 or 4 tab-separated columns, got " +
                          std::to_string(cols.size()));
        if (cols[0].empty())
            throw IoError(file.string() + ":" + std::to_string(lineno) + ": empty term");

        auto polarity = parse_polarity(cols[2]);
        if (!polarity)
            throw IoError(file.string() + ":" + std::to_string(lineno) + ": bad polarity '" +
                          cols[2] + "' (want +1, -1 or 0)");

        std::string term = lower(cols[0]);
        std::string pos = cols[1] == "*" ? std::string("*") : upper(cols[1]);
        if (pos.empty())
            throw IoError(file.string() + ":" + std::to_string(lineno) +
                          ": empty POS column (use * for any)");

        for (const auto& [existing_pos, entry] : lex.entries_[term])
            if (existing_pos == pos)
                throw IoError(file.string() + ":" + std::to_string(lineno) +
                              ": duplicate entry for (" + term + ", " + pos + ")");

        lex.entries_[term].emplace_back(pos,
                                        Entry{*polarity, cols.size() == 4 ? cols[3] : ""});
        ++lex.entry_count_;
    }
    return lex;
}

void Lexicon::load_negations(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open negation list: " + file.string());
    std::string line;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        negations_.insert(lower(trim(line)));
    }
}

void Lexicon::add(std::string term, std::string pos, Entry entry) {
    entries_[lower(term)].emplace_back(pos == "*" ? pos : upper(pos), std::move(entry));
    ++entry_count_;
}

void Lexicon::add_negation(std::string term) { negations_.insert(lower(term)); }

const Lexicon::Entry* Lexicon::find(std::string_view term,
                                    std::optional<std::string_view> pos) const {
    auto it = entries_.find(std::string(term));
    if (it == entries_.end()) return nullptr;
    if (pos) {
        for (const auto& [p, e] : it->second)
            if (p == *pos) return &e;
    }
    for (const auto& [p, e] : it->second)
        if (p == "*") return &e;
    return nullptr;
}

bool Lexicon::is_negation(std::string_view term) const {
    return negations_.count(std::string(term)) > 0;
}

} // namespace sbal
