#include "ample/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ample {

Record& Record::add(const std::string& key, std::string value) {
  for (const auto& [k, v] : fields_) {
    if (k == key) throw std::logic_error("duplicate report key " + key);
  }
  fields_.emplace_back(key, std::move(value));
  return *this;
}

namespace {

std::string quoted(const std::string& v) {
  const bool plain = !v.empty() && std::none_of(v.begin(), v.end(), [](char c) {
    return c == ' ' || c == '"' || c == '\\' || c == '\n' || c == '\t';
  });
  if (plain) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string Report::text() const {
  std::string out;
  for (const Record& r : records) {
    bool first = true;
    for (const auto& [k, v] : r.fields()) {
      if (!first) out.push_back(' ');
      first = false;
      out += k + "=" + quoted(v);
    }
    out.push_back('\n');
  }
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["records"] = nlohmann::ordered_json::array();
  for (const Record& r : records) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields()) obj[k] = v;
    doc["records"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ample
