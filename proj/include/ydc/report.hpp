#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace ydc {

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string witness;  // first failing instance, empty on success
  std::string note;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckEntry> entries;

  void add(std::string name, bool pass, std::string witness = {}, std::string note = {});
  void merge(const CheckReport& other, const std::string& prefix = {});
  bool ok() const;
  const CheckEntry* first_failure() const;
  std::string text() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace ydc
