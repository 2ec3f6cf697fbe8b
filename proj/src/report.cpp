#include "ydc/report.hpp"

#include <sstream>

namespace ydc {

void CheckReport::add(std::string name, bool pass, std::string witness, std::string note) {
  entries.push_back({std::move(name), pass, std::move(witness), std::move(note)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& e : other.entries) entries.push_back({prefix + e.name, e.pass, e.witness, e.note});
}

bool CheckReport::ok() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

const CheckEntry* CheckReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.pass) return &e;
  return nullptr;
}

std::string CheckReport::text() const {
  std::ostringstream os;
  os << subject << ": " << (ok() ? "ok" : "FAILED") << "\n";
  for (const auto& e : entries) {
    os << "  [" << (e.pass ? "pass" : "FAIL") << "] " << e.name;
    if (!e.note.empty()) os << " (" << e.note << ")";
    if (!e.pass && !e.witness.empty()) os << "  witness: " << e.witness;
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json x;
    x["name"] = e.name;
    x["pass"] = e.pass;
    if (!e.witness.empty()) x["witness"] = e.witness;
    if (!e.note.empty()) x["note"] = e.note;
    arr.push_back(x);
  }
  j["checks"] = arr;
  return j;
}

}  // namespace ydc
