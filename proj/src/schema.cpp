#include "akg/schema.hpp"

#include "akg/errors.hpp"
#include "akg/util.hpp"

#include <algorithm>

namespace akg::schema {

namespace {

constexpr std::array<std::string_view, kEntityKindCount> kEntityNames = {
    "Title",  "Author",     "Institution", "Conference", "Date",
    "Field",  "Keywords",   "Innovation",  "Method",     "Problem",
    "Model",  "Task",       "Dataset",     "Metric",     "Result",
};

constexpr std::array<std::string_view, kRelationKindCount> kRelationIds = {
    "writes",      "works_for", "publishes", "is_written_in", "belongs_to",
    "keywords",    "solves",    "adopts",    "proposes",      "works_on",
    "innovates",   "experiments_on", "uses", "faces",         "achieves",
    "direct_use",  "task_related",
};

constexpr std::array<std::string_view, kRelationKindCount> kRelationDisplay = {
    "writes",      "works for", "publishes", "is written in", "belongs to",
    "keywords",    "solves",    "adopts",    "proposes",      "works on",
    "innovates",   "experiments on", "uses", "faces",         "achieves",
    "direct use",  "task related",
};

std::vector<RelationSignature> build_signatures() {
    using K = EntityKind;
    using R = RelationKind;
    return {
        {R::Writes, K::Author, K::Title},
        {R::WorksFor, K::Author, K::Institution},
        {R::Publishes, K::Title, K::Conference},
        {R::IsWrittenIn, K::Title, K::Date},
        {R::BelongsTo, K::Title, K::Field},
        {R::Keywords, K::Title, K::Keywords},
        {R::Solves, K::Title, K::Problem},
        {R::Solves, K::Method, K::Problem},
        {R::Solves, K::Model, K::Problem},
        {R::Adopts, K::Title, K::Method},
        {R::Proposes, K::Title, K::Model},
        {R::Proposes, K::Method, K::Model},
        {R::WorksOn, K::Title, K::Task},
        {R::WorksOn, K::Method, K::Task},
        {R::WorksOn, K::Model, K::Task},
        {R::Innovates, K::Title, K::Innovation},
        {R::Innovates, K::Method, K::Innovation},
        {R::ExperimentsOn, K::Title, K::Dataset},
        {R::ExperimentsOn, K::Task, K::Dataset},
        {R::ExperimentsOn, K::Model, K::Dataset},
        {R::Uses, K::Title, K::Metric},
        {R::Uses, K::Task, K::Metric},
        {R::Uses, K::Model, K::Metric},
        {R::Faces, K::Task, K::Problem},
        {R::Achieves, K::Title, K::Result},
        {R::Achieves, K::Method, K::Result},
        {R::Achieves, K::Model, K::Result},
        {R::DirectUse, K::Title, K::Title},
        {R::TaskRelated, K::Title, K::Title},
    };
}

// For each non-Title kind, the single relation that links it to Title and
// whether Title is the source of that relation. Institution has no direct
// link and is handled separately (it reaches Title through Author).
struct TitleLink {
    RelationKind relation;
    bool title_is_source;
};

std::optional<TitleLink> title_link(EntityKind kind) {
    using K = EntityKind;
    using R = RelationKind;
    switch (kind) {
        case K::Author: return TitleLink{R::Writes, false};
        case K::Conference: return TitleLink{R::Publishes, true};
        case K::Date: return TitleLink{R::IsWrittenIn, true};
        case K::Field: return TitleLink{R::BelongsTo, true};
        case K::Keywords: return TitleLink{R::Keywords, true};
        case K::Innovation: return TitleLink{R::Innovates, true};
        case K::Method: return TitleLink{R::Adopts, true};
        case K::Problem: return TitleLink{R::Solves, true};
        case K::Model: return TitleLink{R::Proposes, true};
        case K::Task: return TitleLink{R::WorksOn, true};
        case K::Dataset: return TitleLink{R::ExperimentsOn, true};
        case K::Metric: return TitleLink{R::Uses, true};
        case K::Result: return TitleLink{R::Achieves, true};
        default: return std::nullopt;
    }
}

} // namespace

std::array<EntityKind, kEntityKindCount> all_entity_kinds() {
    std::array<EntityKind, kEntityKindCount> out{};
    for (std::size_t i = 0; i < kEntityKindCount; ++i) out[i] = static_cast<EntityKind>(i);
    return out;
}

std::array<RelationKind, kRelationKindCount> all_relation_kinds() {
    std::array<RelationKind, kRelationKindCount> out{};
    for (std::size_t i = 0; i < kRelationKindCount; ++i) out[i] = static_cast<RelationKind>(i);
    return out;
}

std::string_view entity_kind_name(EntityKind kind) {
    return kEntityNames[static_cast<std::size_t>(kind)];
}

std::optional<EntityKind> entity_kind_from_name(std::string_view name) {
    std::string folded = util::ascii_lower(util::trim(name));
    for (std::size_t i = 0; i < kEntityKindCount; ++i) {
        if (folded == util::ascii_lower(kEntityNames[i])) return static_cast<EntityKind>(i);
    }
    return std::nullopt;
}

std::string_view relation_kind_id(RelationKind kind) {
    return kRelationIds[static_cast<std::size_t>(kind)];
}

std::string_view relation_kind_display(RelationKind kind) {
    return kRelationDisplay[static_cast<std::size_t>(kind)];
}

std::optional<RelationKind> relation_kind_from_id(std::string_view id) {
    std::string folded = util::ascii_lower(util::trim(id));
    std::replace(folded.begin(), folded.end(), ' ', '_');
    for (std::size_t i = 0; i < kRelationKindCount; ++i) {
        if (folded == kRelationIds[i]) return static_cast<RelationKind>(i);
    }
    return std::nullopt;
}

RelationClass relation_class(RelationKind kind) {
    return (kind == RelationKind::DirectUse || kind == RelationKind::TaskRelated)
               ? RelationClass::InterPaper
               : RelationClass::IntraPaper;
}

const std::vector<RelationSignature>& all_signatures() {
    static const std::vector<RelationSignature> table = build_signatures();
    return table;
}

std::vector<std::pair<EntityKind, EntityKind>> relation_signatures(RelationKind kind) {
    std::vector<std::pair<EntityKind, EntityKind>> out;
    for (const auto& sig : all_signatures()) {
        if (sig.relation == kind) out.emplace_back(sig.source, sig.target);
    }
    return out;
}

ValidationResult validate_triple(EntityKind subject_kind, RelationKind relation,
                                 EntityKind object_kind) {
    for (const auto& sig : all_signatures()) {
        if (sig.relation == relation && sig.source == subject_kind && sig.target == object_kind)
            return {true, ""};
    }
    std::string msg = "(" + std::string(entity_kind_name(subject_kind)) + ", " +
                      std::string(relation_kind_id(relation)) + ", " +
                      std::string(entity_kind_name(object_kind)) + ") not allowed; legal:";
    for (const auto& [src, tgt] : relation_signatures(relation)) {
        msg += " (" + std::string(entity_kind_name(src)) + "," +
               std::string(entity_kind_name(tgt)) + ")";
    }
    return {false, msg};
}

namespace {

// Hops from `kind` up to its Title node.
std::optional<std::vector<Hop>> hops_to_title(EntityKind kind) {
    using K = EntityKind;
    using R = RelationKind;
    if (kind == K::Title) return std::vector<Hop>{};
    if (kind == K::Institution) {
        return std::vector<Hop>{{R::WorksFor, HopDirection::Inbound, K::Author},
                                {R::Writes, HopDirection::Outbound, K::Title}};
    }
    auto link = title_link(kind);
    if (!link) return std::nullopt;
    // Walk towards Title: inbound when Title is the subject of the relation.
    return std::vector<Hop>{{link->relation,
                             link->title_is_source ? HopDirection::Inbound : HopDirection::Outbound,
                             K::Title}};
}

// Hops from a Title node down to `kind`.
std::optional<std::vector<Hop>> hops_from_title(EntityKind kind) {
    using K = EntityKind;
    using R = RelationKind;
    if (kind == K::Title) return std::vector<Hop>{};
    if (kind == K::Institution) {
        return std::vector<Hop>{{R::Writes, HopDirection::Inbound, K::Author},
                                {R::WorksFor, HopDirection::Outbound, K::Institution}};
    }
    auto link = title_link(kind);
    if (!link) return std::nullopt;
    return std::vector<Hop>{{link->relation,
                             link->title_is_source ? HopDirection::Outbound : HopDirection::Inbound,
                             kind}};
}

} // namespace

std::optional<PathSpec> canonical_path(EntityKind source_kind, EntityKind target_kind) {
    auto up = hops_to_title(source_kind);
    auto down = hops_from_title(target_kind);
    if (!up || !down) return std::nullopt;
    PathSpec path{source_kind, {}};
    path.hops.reserve(up->size() + down->size());
    path.hops.insert(path.hops.end(), up->begin(), up->end());
    path.hops.insert(path.hops.end(), down->begin(), down->end());
    return path;
}

nlohmann::ordered_json describe() {
    nlohmann::ordered_json doc;
    doc["entity_kinds"] = nlohmann::ordered_json::array();
    for (auto kind : all_entity_kinds()) doc["entity_kinds"].push_back(entity_kind_name(kind));
    doc["relations"] = nlohmann::ordered_json::array();
    std::size_t signature_count = 0;
    for (auto rel : all_relation_kinds()) {
        nlohmann::ordered_json entry;
        entry["name"] = relation_kind_id(rel);
        entry["display"] = relation_kind_display(rel);
        entry["class"] =
            relation_class(rel) == RelationClass::InterPaper ? "inter_paper" : "intra_paper";
        entry["signatures"] = nlohmann::ordered_json::array();
        for (const auto& [src, tgt] : relation_signatures(rel)) {
            entry["signatures"].push_back(
                {{"source", entity_kind_name(src)}, {"target", entity_kind_name(tgt)}});
            ++signature_count;
        }
        doc["relations"].push_back(std::move(entry));
    }
    doc["signature_count"] = signature_count;
    return doc;
}

} // namespace akg::schema
