#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ample {

// One output line: ordered key=value fields with unique keys.
class Record {
 public:
  Record& add(const std::string& key, std::string value);
  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct Report {
  std::string command;
  std::vector<Record> records;

  Record& line() { return records.emplace_back(); }

  // "KEY=value KEY2=value2" per record; values holding spaces or quotes are
  // double-quoted with backslash escapes.
  std::string text() const;
  // {"command": ..., "records": [{"KEY": "value", ...}, ...]}, keys in order.
  std::string json() const;
};

}  // namespace ample
