#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace casefs::repo {

// ---------------------------------------------------------------------------
// Type system
// ---------------------------------------------------------------------------

enum class BaseType {
    Document,
    Folder,
    Relationship,
    Item,
    Policy,
    Secondary,
};

std::string toString(BaseType base);
std::optional<BaseType> baseTypeFromString(const std::string& text);
// "cmis:document", "cmis:folder", ... — the id of the root type for a base.
std::string baseTypeId(BaseType base);

enum class DataKind {
    String,
    Boolean,
    Integer,
    Decimal,
    DateTime,
    Uri,
    Id,
    Html,
};

std::string toString(DataKind kind);
std::optional<DataKind> dataKindFromString(const std::string& text);

enum class Cardinality { Single, Multi };

std::string toString(Cardinality c);
std::optional<Cardinality> cardinalityFromString(const std::string& text);

// A typed value as stored on an object. Values are kept in canonical text
// form: integers as arbitrary-precision decimal strings, decimals as exact
// decimal strings, datetimes as RFC 3339 UTC with millisecond precision,
// booleans as "true"/"false", everything else as-is.
struct PropertyValue {
    DataKind kind = DataKind::String;
    Cardinality cardinality = Cardinality::Single;
    std::vector<std::string> values;

    bool operator==(const PropertyValue&) const = default;

    static PropertyValue string(std::string v);
    static PropertyValue boolean(bool v);
    static PropertyValue integer(int64_t v);
    static PropertyValue integer(std::string digits);
    static PropertyValue decimal(std::string v);
    static PropertyValue dateTime(int64_t epochMillis);
    static PropertyValue uri(std::string v);
    static PropertyValue id(std::string v);
    static PropertyValue html(std::string v);
    static PropertyValue multi(DataKind kind, std::vector<std::string> values);

    // Convenience for single-valued properties; empty string when no value.
    const std::string& scalar() const;
};

// Validates `raw` against `kind` and rewrites it to canonical form.
// Returns nullopt when the text does not parse as the kind.
std::optional<std::string> canonicalizeValue(DataKind kind, const std::string& raw);

struct PropertyDefinition {
    std::string propertyId;
    DataKind dataKind = DataKind::String;
    Cardinality cardinality = Cardinality::Single;
    bool required = false;
    std::optional<PropertyValue> defaultValue;

    bool operator==(const PropertyDefinition&) const = default;
};

struct TypeDefinition {
    std::string typeId;
    BaseType baseType = BaseType::Document;
    std::optional<std::string> parentTypeId;
    std::string displayName;
    std::vector<PropertyDefinition> propertyDefs;

    bool operator==(const TypeDefinition&) const = default;
};

// Well-known type ids. The six CMIS roots are pre-registered in every
// repository; "cmmn:caseFolder" marks case-root folders (folders whose type
// derives from it may be created without a parent and anchor case indexing).
inline constexpr const char* kCaseFolderTypeId = "cmmn:caseFolder";
// Multi-valued id property carrying attached secondary-type markers.
inline constexpr const char* kSecondaryTypeIdsProperty = "secondaryTypeIds";

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

enum class Permission { Read, Write, All };

std::string toString(Permission p);
std::optional<Permission> permissionFromString(const std::string& text);

struct Ace {
    std::string principal;
    std::set<Permission> permissions;

    bool operator==(const Ace&) const = default;
};

struct ContentStream {
    std::string mimeType;
    std::string bytes;

    uint64_t length() const { return bytes.size(); }
    bool operator==(const ContentStream&) const = default;
};

struct ObjectRecord {
    std::string objectId;
    std::string typeId;
    BaseType baseType = BaseType::Document;
    std::string name;
    std::map<std::string, PropertyValue> properties;
    std::vector<std::string> parentIds;
    std::string sourceId;  // relationships only
    std::string targetId;  // relationships only
    std::optional<ContentStream> content;
    std::string versionSeriesId;
    std::string versionLabel;
    bool isLatestVersion = true;
    uint64_t caseIndex = 0;
    std::vector<Ace> acl;
    std::string createdBy;
    std::string lastModifiedBy;
    int64_t creationDate = 0;          // epoch millis, UTC
    int64_t lastModificationDate = 0;  // epoch millis, UTC

    bool operator==(const ObjectRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Change log
// ---------------------------------------------------------------------------

enum class ChangeType { Created, Updated, Deleted, Security };

std::string toString(ChangeType t);
std::optional<ChangeType> changeTypeFromString(const std::string& text);

struct ChangeEvent {
    uint64_t token = 0;
    ChangeType changeType = ChangeType::Created;
    std::string objectId;
    BaseType baseType = BaseType::Document;
    std::string nameSnapshot;
    std::vector<std::string> parentIdsSnapshot;
    std::string sourceIdSnapshot;
    std::string targetIdSnapshot;
    int64_t timestamp = 0;  // epoch millis, UTC

    bool operator==(const ChangeEvent&) const = default;
};

struct ChangePage {
    std::vector<ChangeEvent> events;
    uint64_t nextToken = 0;
};

}  // namespace casefs::repo
