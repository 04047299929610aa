#pragma once

// Minimal JSON-Schema checker covering the subset the shipped schema uses:
// type (single or list), required, properties, items, enum, $ref into $defs,
// and oneOf. Test-only code.

#include <string>

#include <json.hpp>

namespace schema_validator {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline bool validate(const json& root, const json& schema, const json& value, std::string& err);

inline bool validate_ref(const json& root, const std::string& ref, const json& value,
                         std::string& err) {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) {
        err = "unsupported $ref: " + ref;
        return false;
    }
    const std::string name = ref.substr(prefix.size());
    if (!root.contains("$defs") || !root["$defs"].contains(name)) {
        err = "missing $def: " + name;
        return false;
    }
    return validate(root, root["$defs"][name], value, err);
}

inline bool validate(const json& root, const json& schema, const json& value, std::string& err) {
    if (schema.contains("$ref"))
        return validate_ref(root, schema["$ref"].get<std::string>(), value, err);

    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const json& sub : schema["oneOf"]) {
            std::string ignored;
            if (validate(root, sub, value, ignored)) ++hits;
        }
        if (hits != 1) {
            err = "oneOf matched " + std::to_string(hits) + " branches";
            return false;
        }
        return true;
    }

    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const json& alt : t)
                if (type_matches(alt.get<std::string>(), value)) ok = true;
        }
        if (!ok) {
            err = "type mismatch against " + t.dump() + " for " + value.dump().substr(0, 80);
            return false;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& allowed : schema["enum"])
            if (allowed == value) ok = true;
        if (!ok) {
            err = "value " + value.dump() + " not in enum " + schema["enum"].dump();
            return false;
        }
    }

    if (schema.contains("required")) {
        for (const json& key : schema["required"]) {
            if (!value.is_object() || !value.contains(key.get<std::string>())) {
                err = "missing required key: " + key.get<std::string>();
                return false;
            }
        }
    }

    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (!value.contains(key)) continue;
            if (!validate(root, sub, value[key], err)) {
                err = key + ": " + err;
                return false;
            }
        }
    }

    if (schema.contains("items") && value.is_array()) {
        std::size_t i = 0;
        for (const json& item : value) {
            if (!validate(root, schema["items"], item, err)) {
                err = "[" + std::to_string(i) + "]: " + err;
                return false;
            }
            ++i;
        }
    }

    return true;
}

} // namespace schema_validator
