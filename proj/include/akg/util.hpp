#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace akg::util {

// FNV-1a, 64 bit. Used for fixture keys, snapshot checksums and input hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed);
std::string to_hex64(std::uint64_t value);

std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::string ascii_lower(std::string_view s);

// Normalization used for title/surface matching: case-fold, collapse internal
// whitespace, strip terminal punctuation.
std::string normalize_surface(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_lines(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

// Word tokens: maximal runs of ASCII alphanumerics or non-ASCII bytes,
// case-folded. Punctuation is dropped.
std::vector<std::string> word_tokens(std::string_view s);

// Truncates to at most `max_bytes` without splitting a UTF-8 sequence.
std::string truncate_utf8(std::string_view s, std::size_t max_bytes);

// Tab-separated field escaping for the snapshot format: \\, \t, \n.
std::string tsv_escape(std::string_view s);
std::string tsv_unescape(std::string_view s);

std::string read_file(const std::string& path);           // throws io_error
void write_file(const std::string& path, std::string_view content);
bool file_exists(const std::string& path);

std::optional<int> parse_int(std::string_view s);

// Deterministic uniform double in [0,1) from a 64-bit generator draw.
double uniform_unit(std::uint64_t draw);

} // namespace akg::util
