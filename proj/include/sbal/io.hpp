#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sbal/records.hpp"

namespace sbal {

// JSON-lines records: {"source":..., "target":..., "text":...} or
// {"source":..., "target":..., "rating":...}, optional integer "t".
// All records in one file must carry the same payload kind.
std::vector<RawRecord> read_jsonl(const std::filesystem::path& file);

// Signed edgelist CSV with header `source,target,weight`; '#' comment
// lines and blank lines are ignored.  Rows with weight 0 are retained
// here (neutral removal is a pipeline step, not a parser concern).
std::vector<RawRecord> read_edgelist_csv(const std::filesystem::path& file);
std::vector<RawRecord> read_edgelist_csv(std::istream& in, const std::string& display_name);

// Writers emit weights with shortest round-trip formatting, so a written
// file parses back to bit-identical doubles.
void write_edgelist_csv(std::ostream& out, std::span<const RawRecord> records);
void write_edgelist_csv(std::ostream& out, std::span<const SignedEdgeRecord> records);

// TSV `alias<TAB>canonical`; '#' comments and blanks ignored.
std::unordered_map<std::string, std::string> read_alias_map(const std::filesystem::path& file);

// Round-trip double formatting (std::to_chars shortest form).
std::string format_double(double v);

} // namespace sbal
