#include "akg/util.hpp"

#include "akg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace akg {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::parse_error: return "parse-error";
        case Errc::missing_required_field: return "missing-required-field";
        case Errc::duplicate_ids: return "duplicate-ids";
        case Errc::unknown_template: return "unknown-template";
        case Errc::missing_slot: return "missing-slot";
        case Errc::backend_unreachable: return "backend-unreachable";
        case Errc::rate_limited: return "rate-limited";
        case Errc::fixture_missing: return "fixture-missing";
        case Errc::empty_input_text: return "empty-input-text";
        case Errc::provider_unreachable: return "provider-unreachable";
        case Errc::completion_error: return "completion-error";
        case Errc::unparseable_output: return "unparseable-output";
        case Errc::missing_elements: return "missing-elements";
        case Errc::no_tables: return "no-tables";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::classifier_unavailable: return "classifier-unavailable";
        case Errc::detector_unavailable: return "detector-unavailable";
        case Errc::missing_frequency: return "missing-frequency";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::k_out_of_range: return "k-out-of-range";
        case Errc::invalid_kind: return "invalid-kind";
        case Errc::empty_surface: return "empty-surface";
        case Errc::schema_violation: return "schema-violation";
        case Errc::dangling_endpoint: return "dangling-endpoint";
        case Errc::unknown_entity: return "unknown-entity";
        case Errc::non_title_id: return "non-title-id";
        case Errc::kind_mismatch: return "kind-mismatch";
        case Errc::io_error: return "io-error";
        case Errc::corrupt_snapshot: return "corrupt-snapshot";
        case Errc::version_mismatch: return "version-mismatch";
        case Errc::unparseable_intent: return "unparseable-intent";
        case Errc::empty_question: return "empty-question";
        case Errc::no_matches: return "no-matches";
        case Errc::usage_error: return "usage-error";
        case Errc::request_rejected: return "request-rejected";
    }
    return "unknown-error";
}

} // namespace akg

namespace akg::util {

namespace {
constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
} // namespace

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    return fnv1a64(bytes.data(), bytes.size(), kFnvOffset);
}

std::string to_hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string normalize_surface(std::string_view s) {
    std::string out = ascii_lower(collapse_whitespace(s));
    while (!out.empty()) {
        char c = out.back();
        if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?')
            out.pop_back();
        else
            break;
    }
    return trim(out);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> lines = split(s, '\n');
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
    }
    return lines;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    }
    return true;
}

std::vector<std::string> word_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };
    for (char c : s) {
        auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc) || uc >= 0x80) {
            current.push_back(static_cast<char>(std::tolower(uc)));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::string truncate_utf8(std::string_view s, std::size_t max_bytes) {
    if (s.size() <= max_bytes) return std::string(s);
    std::size_t end = max_bytes;
    while (end > 0 && (static_cast<unsigned char>(s[end]) & 0xC0) == 0x80) --end;
    return std::string(s.substr(0, end));
}

std::string tsv_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string tsv_unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\' || i + 1 == s.size()) {
            out.push_back(s[i]);
            continue;
        }
        ++i;
        switch (s[i]) {
            case '\\': out.push_back('\\'); break;
            case 't': out.push_back('\t'); break;
            case 'n': out.push_back('\n'); break;
            default:
                out.push_back('\\');
                out.push_back(s[i]);
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(Errc::io_error, "read failed for " + path);
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(Errc::io_error, "write failed for " + path);
}

bool file_exists(const std::string& path) {
    std::error_code ec;
    return std::filesystem::exists(path, ec);
}

std::optional<int> parse_int(std::string_view s) {
    std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return std::nullopt;
    long value = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
        value = value * 10 + (t[i] - '0');
        if (value > 1'000'000'000L) return std::nullopt;
    }
    return static_cast<int>(t[0] == '-' ? -value : value);
}

double uniform_unit(std::uint64_t draw) {
    return static_cast<double>(draw >> 11) * (1.0 / 9007199254740992.0);
}

} // namespace akg::util
