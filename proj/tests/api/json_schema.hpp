#pragma once

// Validator for the JSON Schema subset used by schema/report.schema.json:
// type, enum, const, properties, required, additionalProperties (boolean),
// items, minimum, anyOf and local "$ref": "#/definitions/<name>".

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  // Empty when `doc` conforms; otherwise one message per violation.
  std::vector<std::string> validate(const json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const json& resolve(const json& s) const {
    const std::string ref = s.at("$ref").get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref " + ref);
    return root_.at("definitions").at(ref.substr(prefix.size()));
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    throw std::invalid_argument("unknown type " + t);
  }

  void check(const json& s, const json& v, const std::string& at, std::vector<std::string>& errors) const {
    if (s.contains("$ref")) {
      check(resolve(s), v, at, errors);
      return;
    }
    if (s.contains("anyOf")) {
      bool any = false;
      for (const auto& alt : s["anyOf"]) {
        std::vector<std::string> sub;
        check(alt, v, at, sub);
        if (sub.empty()) {
          any = true;
          break;
        }
      }
      if (!any) errors.push_back(at + ": matches no alternative");
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) {
        errors.push_back(at + ": expected type " + s["type"].dump() + ", got " + v.dump());
        return;
      }
    }
    if (s.contains("const") && v != s["const"]) errors.push_back(at + ": expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) errors.push_back(at + ": " + v.dump() + " not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      errors.push_back(at + ": below minimum");
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) errors.push_back(at + ": missing " + k.get<std::string>());
      const json props = s.value("properties", json::object());
      for (const auto& [k, sub] : v.items()) {
        if (props.contains(k)) check(props[k], sub, at + "." + k, errors);
        else if (s.contains("additionalProperties") && s["additionalProperties"] == false)
          errors.push_back(at + ": unexpected key " + k);
      }
    }
    if (v.is_array() && s.contains("items"))
      for (size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], at + "[" + std::to_string(i) + "]", errors);
  }

  json root_;
};

}  // namespace schema_check
