#include "akg/corpus.hpp"

#include "akg/errors.hpp"
#include "akg/util.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace akg::corpus {

namespace {

using nlohmann::ordered_json;

const std::map<std::string, int> kMonths = {
    {"january", 1}, {"february", 2}, {"march", 3},     {"april", 4},   {"may", 5},
    {"june", 6},    {"july", 7},     {"august", 8},    {"september", 9},
    {"october", 10}, {"november", 11}, {"december", 12},
};

std::string get_string(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return "";
    if (!it->is_string())
        throw Error(Errc::parse_error, std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

} // namespace

DateParts parse_date_parts(const std::string& raw) {
    DateParts parts;
    for (const auto& token : util::word_tokens(raw)) {
        if (!parts.year && token.size() == 4) {
            if (auto y = util::parse_int(token); y && *y >= 1900 && *y <= 2100) parts.year = *y;
        }
        if (!parts.month) {
            auto it = kMonths.find(token);
            if (it != kMonths.end()) parts.month = it->second;
        }
    }
    return parts;
}

PaperRecord parse_paper_record(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, e.what());
    }
    if (!doc.is_object()) throw Error(Errc::parse_error, "record is not an object");

    PaperRecord record;
    record.corpus_id = util::trim(get_string(doc, "corpus_id"));
    record.title = util::trim(get_string(doc, "title"));
    if (record.corpus_id.empty()) throw Error(Errc::missing_required_field, "corpus_id");
    if (record.title.empty()) throw Error(Errc::missing_required_field, "title");

    if (auto it = doc.find("authors"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) throw Error(Errc::parse_error, "authors must be a list");
        for (const auto& a : *it) {
            if (!a.is_object()) throw Error(Errc::parse_error, "author entry must be an object");
            AuthorRef author;
            author.name = util::trim(get_string(a, "name"));
            if (author.name.empty()) throw Error(Errc::parse_error, "author name missing");
            std::string inst = util::trim(get_string(a, "institution"));
            if (!inst.empty()) author.institution = inst;
            record.authors.push_back(std::move(author));
        }
    }
    if (std::string v = util::trim(get_string(doc, "venue")); !v.empty()) record.venue = v;
    if (std::string d = util::trim(get_string(doc, "date")); !d.empty()) record.date = d;
    record.abstract = util::trim(get_string(doc, "abstract"));
    record.introduction = util::trim(get_string(doc, "introduction"));

    if (auto it = doc.find("tables"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) throw Error(Errc::parse_error, "tables must be a list");
        std::set<int> seen;
        int position = 0;
        for (const auto& t : *it) {
            if (!t.is_object()) throw Error(Errc::parse_error, "table entry must be an object");
            TableBlock table;
            table.table_index = t.value("index", position);
            if (table.table_index < 0)
                throw Error(Errc::parse_error, "table index must be >= 0");
            if (!seen.insert(table.table_index).second)
                throw Error(Errc::parse_error,
                            "duplicate table index " + std::to_string(table.table_index));
            table.caption = get_string(t, "caption");
            if (auto cells = t.find("cells"); cells != t.end() && !cells->is_null()) {
                if (!cells->is_array()) throw Error(Errc::parse_error, "cells must be a list");
                for (const auto& row : *cells) {
                    if (!row.is_array())
                        throw Error(Errc::parse_error, "cells rows must be lists");
                    std::vector<std::string> cols;
                    for (const auto& cell : row) {
                        cols.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
                    }
                    table.cells.push_back(std::move(cols));
                }
            }
            record.tables.push_back(std::move(table));
            ++position;
        }
    }

    if (auto it = doc.find("citations"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) throw Error(Errc::parse_error, "citations must be a list");
        for (const auto& c : *it) {
            if (!c.is_object()) throw Error(Errc::parse_error, "citation entry must be an object");
            CitationContext citation;
            citation.context_text = util::trim(get_string(c, "context"));
            citation.cited_title = util::trim(get_string(c, "cited_title"));
            if (citation.context_text.empty())
                throw Error(Errc::parse_error, "citation context must be non-empty");
            if (citation.cited_title.empty())
                throw Error(Errc::parse_error, "citation cited_title must be non-empty");
            if (std::string rid = util::trim(get_string(c, "resolved_id")); !rid.empty())
                citation.resolved_id = rid;
            record.citations.push_back(std::move(citation));
        }
    }
    return record;
}

ordered_json to_json(const PaperRecord& record) {
    ordered_json doc;
    doc["corpus_id"] = record.corpus_id;
    doc["title"] = record.title;
    if (!record.authors.empty()) {
        doc["authors"] = ordered_json::array();
        for (const auto& a : record.authors) {
            ordered_json entry;
            entry["name"] = a.name;
            if (a.institution) entry["institution"] = *a.institution;
            doc["authors"].push_back(std::move(entry));
        }
    }
    if (record.venue) doc["venue"] = *record.venue;
    if (record.date) doc["date"] = *record.date;
    if (!record.abstract.empty()) doc["abstract"] = record.abstract;
    if (!record.introduction.empty()) doc["introduction"] = record.introduction;
    if (!record.tables.empty()) {
        doc["tables"] = ordered_json::array();
        for (const auto& t : record.tables) {
            ordered_json entry;
            entry["index"] = t.table_index;
            entry["caption"] = t.caption;
            entry["cells"] = t.cells;
            doc["tables"].push_back(std::move(entry));
        }
    }
    if (!record.citations.empty()) {
        doc["citations"] = ordered_json::array();
        for (const auto& c : record.citations) {
            ordered_json entry;
            entry["context"] = c.context_text;
            entry["cited_title"] = c.cited_title;
            if (c.resolved_id) entry["resolved_id"] = *c.resolved_id;
            doc["citations"].push_back(std::move(entry));
        }
    }
    return doc;
}

std::string serialize_paper_record(const PaperRecord& record) {
    return to_json(record).dump();
}

std::vector<PaperRecord> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open corpus file " + path);
    std::vector<PaperRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (util::trim(line).empty()) continue;
        try {
            records.push_back(parse_paper_record(line));
        } catch (const Error& e) {
            throw Error(e.code(), path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

void save_corpus(const std::string& path, const std::vector<PaperRecord>& records) {
    std::ostringstream out;
    for (const auto& record : records) out << serialize_paper_record(record) << '\n';
    util::write_file(path, out.str());
}

ordered_json CorpusReport::to_json() const {
    ordered_json doc;
    doc["record_count"] = record_count;
    doc["duplicate_ids"] = duplicate_ids;
    doc["empty_abstracts"] = empty_abstracts;
    doc["empty_introductions"] = empty_introductions;
    doc["citation_count"] = citation_count;
    doc["resolvable_citations"] = resolvable_citations;
    doc["unresolvable_citations"] = unresolvable_citations;
    doc["dangling_resolved_ids"] = dangling_resolved_ids;
    return doc;
}

CorpusReport validate_corpus(const std::vector<PaperRecord>& records) {
    CorpusReport report;
    report.record_count = records.size();
    std::set<std::string> ids;
    std::map<std::string, std::size_t> titles_by_norm;
    for (const auto& record : records)
        titles_by_norm[util::normalize_surface(record.title)]++;
    for (const auto& record : records) {
        if (!ids.insert(record.corpus_id).second)
            report.duplicate_ids.push_back(record.corpus_id);
        if (record.abstract.empty()) ++report.empty_abstracts;
        if (record.introduction.empty()) ++report.empty_introductions;
        for (const auto& citation : record.citations) {
            ++report.citation_count;
            auto it = titles_by_norm.find(util::normalize_surface(citation.cited_title));
            if (it != titles_by_norm.end())
                ++report.resolvable_citations;
            else
                ++report.unresolvable_citations;
            if (citation.resolved_id && !ids.count(*citation.resolved_id) &&
                std::none_of(records.begin(), records.end(), [&](const PaperRecord& r) {
                    return r.corpus_id == *citation.resolved_id;
                }))
                ++report.dangling_resolved_ids;
        }
    }
    return report;
}

void resolve_citations(std::vector<PaperRecord>& records) {
    auto report = validate_corpus(records);
    if (!report.duplicate_ids.empty())
        throw Error(Errc::duplicate_ids,
                    "corpus has duplicate corpus_ids, first: " + report.duplicate_ids.front());
    // Normalized title -> corpus_id, only when the match is unambiguous.
    std::map<std::string, std::optional<std::string>> index;
    for (const auto& record : records) {
        auto key = util::normalize_surface(record.title);
        auto [it, inserted] = index.emplace(key, record.corpus_id);
        if (!inserted) it->second = std::nullopt; // ambiguous title, never auto-link
    }
    for (auto& record : records) {
        for (auto& citation : record.citations) {
            if (citation.resolved_id) continue;
            auto it = index.find(util::normalize_surface(citation.cited_title));
            if (it != index.end() && it->second) citation.resolved_id = it->second;
        }
    }
}

} // namespace akg::corpus
