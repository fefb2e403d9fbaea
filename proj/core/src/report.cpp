#include "piwb/report.hpp"

#include <chrono>
#include <sstream>

namespace piwb {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_cap: return "skipped-cap";
  }
  return "?";
}

nlohmann::json VerificationReport::to_json() const {
  return nlohmann::json{{"check", check},
                        {"params", params},
                        {"verdict", verdict_str(verdict)},
                        {"payload", payload},
                        {"elapsed_ms", elapsed_ms},
                        {"certificate_hash", certificate_hash}};
}

std::string VerificationReport::to_json_line() const { return to_json().dump(); }

std::string report_drift(const nlohmann::json& expected, const nlohmann::json& actual) {
  std::ostringstream drift;
  for (const char* key : {"check", "params", "verdict", "payload", "certificate_hash"}) {
    const bool in_e = expected.contains(key), in_a = actual.contains(key);
    if (!in_e && !in_a) continue;
    if (!in_e || !in_a || expected.at(key) != actual.at(key)) {
      drift << key << ": expected " << (in_e ? expected.at(key).dump() : "<missing>") << ", got "
            << (in_a ? actual.at(key).dump() : "<missing>") << "\n";
    }
  }
  return drift.str();
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& data) {
  std::ostringstream os;
  os << std::hex << fnv1a(data);
  return os.str();
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::elapsed_ms() const {
  auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
  return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace piwb
