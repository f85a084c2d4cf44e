#include "casefs/repo/types.hpp"

#include "casefs/util/time.hpp"

namespace casefs::repo {

std::string toString(BaseType base) {
    switch (base) {
        case BaseType::Document: return "document";
        case BaseType::Folder: return "folder";
        case BaseType::Relationship: return "relationship";
        case BaseType::Item: return "item";
        case BaseType::Policy: return "policy";
        case BaseType::Secondary: return "secondary";
    }
    return "document";
}

std::optional<BaseType> baseTypeFromString(const std::string& text) {
    if (text == "document") return BaseType::Document;
    if (text == "folder") return BaseType::Folder;
    if (text == "relationship") return BaseType::Relationship;
    if (text == "item") return BaseType::Item;
    if (text == "policy") return BaseType::Policy;
    if (text == "secondary") return BaseType::Secondary;
    return std::nullopt;
}

std::string baseTypeId(BaseType base) {
    switch (base) {
        case BaseType::Document: return "cmis:document";
        case BaseType::Folder: return "cmis:folder";
        case BaseType::Relationship: return "cmis:relationship";
        case BaseType::Item: return "cmis:item";
        case BaseType::Policy: return "cmis:policy";
        case BaseType::Secondary: return "cmis:secondary";
    }
    return "cmis:document";
}

std::string toString(DataKind kind) {
    switch (kind) {
        case DataKind::String: return "string";
        case DataKind::Boolean: return "boolean";
        case DataKind::Integer: return "integer";
        case DataKind::Decimal: return "decimal";
        case DataKind::DateTime: return "datetime";
        case DataKind::Uri: return "uri";
        case DataKind::Id: return "id";
        case DataKind::Html: return "html";
    }
    return "string";
}

std::optional<DataKind> dataKindFromString(const std::string& text) {
    if (text == "string") return DataKind::String;
    if (text == "boolean") return DataKind::Boolean;
    if (text == "integer") return DataKind::Integer;
    if (text == "decimal") return DataKind::Decimal;
    if (text == "datetime") return DataKind::DateTime;
    if (text == "uri") return DataKind::Uri;
    if (text == "id") return DataKind::Id;
    if (text == "html") return DataKind::Html;
    return std::nullopt;
}

std::string toString(Cardinality c) {
    return c == Cardinality::Single ? "single" : "multi";
}

std::optional<Cardinality> cardinalityFromString(const std::string& text) {
    if (text == "single") return Cardinality::Single;
    if (text == "multi") return Cardinality::Multi;
    return std::nullopt;
}

std::string toString(Permission p) {
    switch (p) {
        case Permission::Read: return "read";
        case Permission::Write: return "write";
        case Permission::All: return "all";
    }
    return "read";
}

std::optional<Permission> permissionFromString(const std::string& text) {
    if (text == "read") return Permission::Read;
    if (text == "write") return Permission::Write;
    if (text == "all") return Permission::All;
    return std::nullopt;
}

std::string toString(ChangeType t) {
    switch (t) {
        case ChangeType::Created: return "CREATED";
        case ChangeType::Updated: return "UPDATED";
        case ChangeType::Deleted: return "DELETED";
        case ChangeType::Security: return "SECURITY";
    }
    return "CREATED";
}

std::optional<ChangeType> changeTypeFromString(const std::string& text) {
    if (text == "CREATED") return ChangeType::Created;
    if (text == "UPDATED") return ChangeType::Updated;
    if (text == "DELETED") return ChangeType::Deleted;
    if (text == "SECURITY") return ChangeType::Security;
    return std::nullopt;
}

PropertyValue PropertyValue::string(std::string v) {
    return {DataKind::String, Cardinality::Single, {std::move(v)}};
}
PropertyValue PropertyValue::boolean(bool v) {
    return {DataKind::Boolean, Cardinality::Single, {v ? "true" : "false"}};
}
PropertyValue PropertyValue::integer(int64_t v) {
    return {DataKind::Integer, Cardinality::Single, {std::to_string(v)}};
}
PropertyValue PropertyValue::integer(std::string digits) {
    return {DataKind::Integer, Cardinality::Single, {std::move(digits)}};
}
PropertyValue PropertyValue::decimal(std::string v) {
    return {DataKind::Decimal, Cardinality::Single, {std::move(v)}};
}
PropertyValue PropertyValue::dateTime(int64_t epochMillis) {
    return {DataKind::DateTime, Cardinality::Single, {util::formatRfc3339Ms(epochMillis)}};
}
PropertyValue PropertyValue::uri(std::string v) {
    return {DataKind::Uri, Cardinality::Single, {std::move(v)}};
}
PropertyValue PropertyValue::id(std::string v) {
    return {DataKind::Id, Cardinality::Single, {std::move(v)}};
}
PropertyValue PropertyValue::html(std::string v) {
    return {DataKind::Html, Cardinality::Single, {std::move(v)}};
}
PropertyValue PropertyValue::multi(DataKind kind, std::vector<std::string> values) {
    return {kind, Cardinality::Multi, std::move(values)};
}

const std::string& PropertyValue::scalar() const {
    static const std::string empty;
    return values.empty() ? empty : values.front();
}

namespace {

bool allDigits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

std::optional<std::string> canonicalInteger(const std::string& raw) {
    if (raw.empty()) return std::nullopt;
    size_t start = raw[0] == '-' ? 1 : 0;
    if (!allDigits(raw, start, raw.size())) return std::nullopt;
    // Strip leading zeros; normalize -0 to 0.
    size_t firstSig = start;
    while (firstSig + 1 < raw.size() && raw[firstSig] == '0') ++firstSig;
    std::string digits = raw.substr(firstSig);
    if (digits == "0") return digits;
    return (start == 1) ? "-" + digits : digits;
}

std::optional<std::string> validateDecimal(const std::string& raw) {
    if (raw.empty()) return std::nullopt;
    size_t start = raw[0] == '-' ? 1 : 0;
    size_t dot = raw.find('.');
    if (dot == std::string::npos) {
        if (!allDigits(raw, start, raw.size())) return std::nullopt;
        return raw;
    }
    if (!allDigits(raw, start, dot) || !allDigits(raw, dot + 1, raw.size())) return std::nullopt;
    return raw;  // exact decimal, kept verbatim
}

}  // namespace

std::optional<std::string> canonicalizeValue(DataKind kind, const std::string& raw) {
    switch (kind) {
        case DataKind::Boolean:
            if (raw == "true" || raw == "false") return raw;
            return std::nullopt;
        case DataKind::Integer:
            return canonicalInteger(raw);
        case DataKind::Decimal:
            return validateDecimal(raw);
        case DataKind::DateTime: {
            auto ms = util::parseRfc3339Ms(raw);
            if (!ms) return std::nullopt;
            return util::formatRfc3339Ms(*ms);
        }
        case DataKind::String:
        case DataKind::Uri:
        case DataKind::Id:
        case DataKind::Html:
            return raw;
    }
    return std::nullopt;
}

}  // namespace casefs::repo
