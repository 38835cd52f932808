#include "sbal/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "sbal/errors.hpp"

namespace sbal {

namespace {

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

bool is_blank(const std::string& s) {
    for (unsigned char c : s)
        if (!std::isspace(c)) return false;
    return true;
}

bool is_comment(const std::string& s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) continue;
        return c == '#';
    }
    return false;
}

// Splits one CSV line; supports double-quoted fields with "" escapes.
std::vector<std::string> split_csv(const std::string& line, const std::string& where) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw IoError(where + ": unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

double parse_weight(const std::string& s, const std::string& where) {
    if (s.empty()) throw IoError(where + ": empty weight field");
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end != begin + s.size() || errno == ERANGE || !std::isfinite(v))
        throw IoError(where + ": bad weight '" + s + "'");
    return v;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::vector<RawRecord> read_jsonl(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open input file: " + file.string());

    std::vector<RawRecord> records;
    std::string line;
    std::size_t lineno = 0;
    enum class Kind { Unknown, Text, Rating } kind = Kind::Unknown;

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (is_blank(line)) continue;
        const std::string where = file.string() + ":" + std::to_string(lineno);

        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw IoError(where + ": invalid JSON: " + e.what());
        }
        if (!j.is_object()) throw IoError(where + ": expected a JSON object");

        RawRecord r;
        if (!j.contains("source") || !j["source"].is_string() ||
            j["source"].get<std::string>().empty())
            throw IoError(where + ": missing or empty \"source\"");
        if (!j.contains("target") || !j["target"].is_string() ||
            j["target"].get<std::string>().empty())
            throw IoError(where + ": missing or empty \"target\"");
        r.source = j["source"].get<std::string>();
        r.target = j["target"].get<std::string>();

        bool has_text = j.contains("text");
        bool has_rating = j.contains("rating");
        if (has_text == has_rating)
            throw IoError(where + ": record needs exactly one of \"text\" or \"rating\"");
        if (has_text) {
            if (!j["text"].is_string()) throw IoError(where + ": \"text\" must be a string");
            if (kind == Kind::Rating)
                throw IoError(where + ": mixed payload kinds (file started with ratings)");
            kind = Kind::Text;
            r.payload = j["text"].get<std::string>();
        } else {
            if (!j["rating"].is_number_integer())
                throw IoError(where + ": \"rating\" must be an integer");
            if (kind == Kind::Text)
                throw IoError(where + ": mixed payload kinds (file started with text)");
            kind = Kind::Rating;
            r.payload = j["rating"].get<std::int64_t>();
        }

        if (j.contains("t")) {
            if (!j["t"].is_number_integer())
                throw IoError(where + ": \"t\" must be an integer");
            r.t = j["t"].get<std::int64_t>();
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<RawRecord> read_edgelist_csv(std::istream& in, const std::string& display_name) {
    std::vector<RawRecord> records;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (is_blank(line) || is_comment(line)) continue;
        const std::string where = display_name + ":" + std::to_string(lineno);

        if (!header_seen) {
            if (line != "source,target,weight")
                throw IoError(where + ": expected header 'source,target,weight', got '" + line +
                              "'");
            header_seen = true;
            continue;
        }

        auto fields = split_csv(line, where);
        if (fields.size() != 3)
            throw IoError(where + ": expected 3 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty())
            throw IoError(where + ": empty source or target");

        records.push_back(
            {std::move(fields[0]), std::move(fields[1]), parse_weight(fields[2], where),
             std::nullopt});
    }
    if (!header_seen && lineno > 0)
        throw IoError(display_name + ": no header line 'source,target,weight' found");
    return records;
}

std::vector<RawRecord> read_edgelist_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open input file: " + file.string());
    return read_edgelist_csv(in, file.string());
}

void write_edgelist_csv(std::ostream& out, std::span<const RawRecord> records) {
    out << "source,target,weight\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (!r.is_score())
            throw std::invalid_argument("write_edgelist_csv: record " + std::to_string(i) +
                                        " does not carry a numeric score");
        out << csv_escape(r.source) << ',' << csv_escape(r.target) << ','
            << format_double(r.score()) << '\n';
    }
}

void write_edgelist_csv(std::ostream& out, std::span<const SignedEdgeRecord> records) {
    out << "source,target,weight\n";
    for (const auto& r : records)
        out << csv_escape(r.source) << ',' << csv_escape(r.target) << ','
            << format_double(r.weight) << '\n';
}

std::unordered_map<std::string, std::string> read_alias_map(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open alias map: " + file.string());

    std::unordered_map<std::string, std::string> map;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (is_blank(line) || is_comment(line)) continue;
        const std::string where = file.string() + ":" + std::to_string(lineno);

        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw IoError(where + ": expected 'alias<TAB>canonical'");
        std::string alias = line.substr(0, tab);
        std::string canonical = line.substr(tab + 1);
        if (alias.empty() || canonical.empty())
            throw IoError(where + ": empty alias or canonical name");
        if (auto [it, inserted] = map.emplace(alias, canonical); !inserted)
            throw IoError(where + ": duplicate alias '" + alias + "'");
    }
    return map;
}

} // namespace sbal
