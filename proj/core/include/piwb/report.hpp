#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace piwb {

enum class Verdict { pass, fail, skipped_cap };

std::string verdict_str(Verdict v);

/// Machine-readable result of one verification or bound check. Deterministic
/// for fixed inputs except for the elapsed_ms field.
struct VerificationReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::fail;
  nlohmann::json payload = nlohmann::json::object();
  double elapsed_ms = 0.0;
  std::string certificate_hash;

  bool passed() const { return verdict == Verdict::pass; }
  nlohmann::json to_json() const;
  std::string to_json_line() const;
};

/// Compares two reports ignoring elapsed_ms; returns a human-readable list of
/// differing fields (empty = match).
std::string report_drift(const nlohmann::json& expected, const nlohmann::json& actual);

/// FNV-1a, used to fingerprint certificates in golden files.
std::uint64_t fnv1a(const std::string& data);
std::string fnv1a_hex(const std::string& data);

/// Monotonic wall-clock helper.
class Stopwatch {
 public:
  Stopwatch();
  double elapsed_ms() const;

 private:
  std::uint64_t start_ns_;
};

}  // namespace piwb
