#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "acx/contraction.hpp"

namespace acx {

enum class CheckStatus { Pass, Fail, Skip };
inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct ResidualTerm {
  std::vector<std::string> word;
  std::string vec;  // empty for scalar forms
  std::string re, im;
};

struct CheckRecord {
  std::string name;
  std::string suite;
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  std::vector<ResidualTerm> residual;  // nonempty exactly when failing
  std::string reason;                  // skip reason / failure context
  double wall_ms = 0.0;

  void fail_with(const Form& r, const std::string& context);
  void fail_with(const VectorForm& r, const std::string& context);
  void require_zero(const Form& r, const std::string& context);
  void require_zero(const VectorForm& r, const std::string& context);
  void require(bool ok, const std::string& context);
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  uint32_t n = 0;
  int max_degree = 0;
  std::vector<CheckRecord> checks;  // sorted by name before emission

  int count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
  void sort_checks();

  /// Byte-stable given identical manifest and seed (no timing data).
  nlohmann::json to_json() const;
  /// Human-readable table, includes wall times.
  std::string to_text() const;
};

void emit_report(const Report& report, const std::string& format, const std::string& path);

std::vector<ResidualTerm> residual_terms(const Form& f, size_t cap = 16);
std::vector<ResidualTerm> residual_terms(const VectorForm& f, size_t cap = 16);

}  // namespace acx
