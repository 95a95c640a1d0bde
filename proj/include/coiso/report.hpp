#pragma once

// Verification reports: JSON and Markdown serialization.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coiso/errors.hpp"

namespace coiso {

enum class CheckStatus { pass, fail, skip };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skip";
  }
}

inline CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skip") return CheckStatus::skip;
  throw Error("unknown check status '" + s + "'");
}

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::int64_t runtime_ms = 0;

  void add(std::string name, bool ok, std::optional<std::string> witness = std::nullopt) {
    checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)});
  }
  void skip(std::string name, std::string why) { checks.push_back({std::move(name), CheckStatus::skip, std::move(why)}); }

  /// Appends another report's checks under "<suite>/".
  void absorb(const VerificationReport& other) {
    for (auto c : other.checks) {
      c.name = other.suite + "/" + c.name;
      checks.push_back(std::move(c));
    }
  }

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    j["checks"].push_back(std::move(cj));
  }
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline std::string to_json_string(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

inline VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& cj : j.at("checks")) {
      CheckRecord c;
      c.name = cj.at("name").get<std::string>();
      c.status = parse_status(cj.at("status").get<std::string>());
      if (!cj.at("witness").is_null()) c.witness = cj.at("witness").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

namespace detail {

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += "<br>";
    else out += ch;
  }
  return out;
}

}  // namespace detail

inline std::string to_markdown(const VerificationReport& r) {
  std::string out = "# Verification report: " + r.suite + "\n\n";
  out += "- seed: " + std::to_string(r.seed) + "\n";
  out += "- status: " + std::string(r.passed() ? "pass" : "fail") + "\n";
  out += "- checks: " + std::to_string(r.count(CheckStatus::pass)) + " pass, " +
         std::to_string(r.count(CheckStatus::fail)) + " fail, " + std::to_string(r.count(CheckStatus::skip)) +
         " skip\n";
  out += "- runtime_ms: " + std::to_string(r.runtime_ms) + "\n\n";
  out += "| name | status | witness |\n|---|---|---|\n";
  for (const auto& c : r.checks)
    out += "| " + detail::md_cell(c.name) + " | " + to_string(c.status) + " | " +
           (c.witness ? detail::md_cell(*c.witness) : std::string("")) + " |\n";
  return out;
}

}  // namespace coiso
