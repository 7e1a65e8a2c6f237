#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace akg::schema {

// The 15 node types of the ontology.
enum class EntityKind : std::uint8_t {
    Title,
    Author,
    Institution,
    Conference,
    Date,
    Field,
    Keywords,
    Innovation,
    Method,
    Problem,
    Model,
    Task,
    Dataset,
    Metric,
    Result,
};
inline constexpr std::size_t kEntityKindCount = 15;

// The 17 named relations. `direct_use` and `task_related` are the only
// inter-paper relations; everything else links a paper to its own elements.
enum class RelationKind : std::uint8_t {
    Writes,
    WorksFor,
    Publishes,
    IsWrittenIn,
    BelongsTo,
    Keywords,
    Solves,
    Adopts,
    Proposes,
    WorksOn,
    Innovates,
    ExperimentsOn,
    Uses,
    Faces,
    Achieves,
    DirectUse,
    TaskRelated,
};
inline constexpr std::size_t kRelationKindCount = 17;

enum class RelationClass : std::uint8_t { IntraPaper, InterPaper };

struct RelationSignature {
    RelationKind relation;
    EntityKind source;
    EntityKind target;

    bool operator==(const RelationSignature&) const = default;
};

std::array<EntityKind, kEntityKindCount> all_entity_kinds();
std::array<RelationKind, kRelationKindCount> all_relation_kinds();

std::string_view entity_kind_name(EntityKind kind);
std::optional<EntityKind> entity_kind_from_name(std::string_view name); // case-insensitive

std::string_view relation_kind_id(RelationKind kind);      // snake_case identifier
std::string_view relation_kind_display(RelationKind kind); // space-separated display name
std::optional<RelationKind> relation_kind_from_id(std::string_view id);

RelationClass relation_class(RelationKind kind);

// The exact (source, target) pairs a relation admits; 29 pairs in total
// across all relations.
std::vector<std::pair<EntityKind, EntityKind>> relation_signatures(RelationKind kind);
const std::vector<RelationSignature>& all_signatures();

struct ValidationResult {
    bool ok;
    std::string message; // offending shape plus the legal signatures when !ok

    explicit operator bool() const { return ok; }
};

ValidationResult validate_triple(EntityKind subject_kind, RelationKind relation,
                                 EntityKind object_kind);

enum class HopDirection : std::uint8_t { Outbound, Inbound };

// One traversal step: follow `relation` in `direction` and land on a node of
// kind `kind`.
struct Hop {
    RelationKind relation;
    HopDirection direction;
    EntityKind kind;

    bool operator==(const Hop&) const = default;
};

// A canonical query path. Always pivots through exactly one Title node; the
// hop list is empty only for (Title, Title), where start and pivot coincide.
struct PathSpec {
    EntityKind source_kind;
    std::vector<Hop> hops;

    EntityKind terminal_kind() const { return hops.empty() ? source_kind : hops.back().kind; }
    bool operator==(const PathSpec&) const = default;
};

// The unique Title-pivoting path from source_kind to target_kind. Every
// built-in kind reaches Title: most by a single relation, Institution through
// its Author. Returns nullopt only for kinds with no Title-linking chain,
// which cannot happen for the 15 built-ins.
std::optional<PathSpec> canonical_path(EntityKind source_kind, EntityKind target_kind);

// Self-describing export (entity kinds plus the 29 signatures) for the
// service's introspection endpoint.
nlohmann::ordered_json describe();

} // namespace akg::schema
