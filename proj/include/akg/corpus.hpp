#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace akg::corpus {

struct AuthorRef {
    std::string name;
    std::optional<std::string> institution;

    bool operator==(const AuthorRef&) const = default;
};

struct TableBlock {
    int table_index = 0;
    std::string caption;
    std::vector<std::vector<std::string>> cells; // row-major, ragged rows permitted

    bool operator==(const TableBlock&) const = default;
};

struct CitationContext {
    std::string context_text;
    std::string cited_title;
    std::optional<std::string> resolved_id;

    bool operator==(const CitationContext&) const = default;
};

// One structured document from the corpus, keyed by its Anthology-style ID.
struct PaperRecord {
    std::string corpus_id;
    std::string title;
    std::vector<AuthorRef> authors;
    std::optional<std::string> venue;
    std::optional<std::string> date; // raw venue string, e.g. "2012 December"
    std::string abstract;
    std::string introduction;
    std::vector<TableBlock> tables;
    std::vector<CitationContext> citations;

    bool operator==(const PaperRecord&) const = default;
};

// Derived coarse date, parsed from the raw string.
struct DateParts {
    std::optional<int> year;
    std::optional<int> month; // 1-12
};
DateParts parse_date_parts(const std::string& raw);

// Parses one newline-delimited corpus record (a JSON object). Unknown keys
// are ignored. Throws parse_error / missing_required_field.
PaperRecord parse_paper_record(const std::string& document);

nlohmann::ordered_json to_json(const PaperRecord& record);
std::string serialize_paper_record(const PaperRecord& record); // one line, no trailing newline

std::vector<PaperRecord> load_corpus(const std::string& path);
void save_corpus(const std::string& path, const std::vector<PaperRecord>& records);

struct CorpusReport {
    std::vector<std::string> duplicate_ids;      // in stream order, one entry per extra copy
    std::size_t record_count = 0;
    std::size_t empty_abstracts = 0;
    std::size_t empty_introductions = 0;
    std::size_t citation_count = 0;
    std::size_t resolvable_citations = 0;   // cited_title matches a record title
    std::size_t unresolvable_citations = 0;
    std::size_t dangling_resolved_ids = 0;  // resolved_id not present in the corpus

    bool ok() const { return duplicate_ids.empty() && dangling_resolved_ids == 0; }
    nlohmann::ordered_json to_json() const;
};

// Pure analysis pass; problems are reported, never thrown.
CorpusReport validate_corpus(const std::vector<PaperRecord>& records);

// Fills resolved_id where the normalized cited title exactly matches exactly
// one record title. Idempotent; never unsets an existing resolved_id.
// Requires a duplicate-free corpus.
void resolve_citations(std::vector<PaperRecord>& records);

} // namespace akg::corpus
