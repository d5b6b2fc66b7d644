#include "acx/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace acx {

using nlohmann::json;

std::vector<ResidualTerm> residual_terms(const Form& f, size_t cap) {
  std::vector<ResidualTerm> out;
  for (const auto& [w, c] : f.terms()) {
    if (out.size() >= cap) break;
    ResidualTerm t;
    for (uint32_t code : word_indices(w)) t.word.push_back(idx_name(f.n(), code));
    t.re = c.re.get_str();
    t.im = c.im.get_str();
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ResidualTerm> residual_terms(const VectorForm& f, size_t cap) {
  std::vector<ResidualTerm> out;
  for (const auto& [k, c] : f.terms) {
    if (out.size() >= cap) break;
    ResidualTerm t;
    for (uint32_t code : word_indices(k.first)) t.word.push_back(idx_name(f.n, code));
    t.vec = idx_name(f.n, k.second);
    t.re = c.re.get_str();
    t.im = c.im.get_str();
    out.push_back(std::move(t));
  }
  return out;
}

void CheckRecord::fail_with(const Form& r, const std::string& context) {
  status = CheckStatus::Fail;
  residual = residual_terms(r);
  if (reason.empty()) reason = context;
}

void CheckRecord::fail_with(const VectorForm& r, const std::string& context) {
  status = CheckStatus::Fail;
  residual = residual_terms(r);
  if (reason.empty()) reason = context;
}

void CheckRecord::require_zero(const Form& r, const std::string& context) {
  if (status == CheckStatus::Fail) return;
  if (!r.is_zero()) fail_with(r, context);
}

void CheckRecord::require_zero(const VectorForm& r, const std::string& context) {
  if (status == CheckStatus::Fail) return;
  if (!r.is_zero()) fail_with(r, context);
}

void CheckRecord::require(bool ok, const std::string& context) {
  if (status == CheckStatus::Fail || ok) return;
  status = CheckStatus::Fail;
  if (reason.empty()) reason = context;
  if (residual.empty()) {
    // boolean failures still carry a nonzero residual: the indicator constant
    ResidualTerm marker;
    marker.re = "1";
    marker.im = "0";
    residual.push_back(std::move(marker));
  }
}

int Report::count(CheckStatus s) const {
  int k = 0;
  for (const auto& c : checks)
    if (c.status == s) ++k;
  return k;
}

void Report::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

json Report::to_json() const {
  json j;
  j["schema"] = "acx-report/1";
  j["suite"] = suite;
  j["seed"] = seed;
  j["n"] = n;
  j["max_degree"] = max_degree;
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"skip", count(CheckStatus::Skip)}};
  json arr = json::array();
  for (const auto& c : checks) {
    json rec;
    rec["name"] = c.name;
    rec["suite"] = c.suite;
    rec["anchor"] = c.anchor;
    rec["status"] = status_name(c.status);
    if (!c.reason.empty()) rec["reason"] = c.reason;
    json res = json::array();
    for (const auto& t : c.residual) {
      json rt;
      rt["word"] = t.word;
      if (!t.vec.empty()) rt["vector"] = t.vec;
      rt["re"] = t.re;
      rt["im"] = t.im;
      res.push_back(rt);
    }
    rec["residual"] = res;
    arr.push_back(rec);
  }
  j["checks"] = arr;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite << "  n=" << n << "  seed=" << seed << "  max_degree=" << max_degree
     << "\n";
  size_t width = 8;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    os << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << status_name(c.status)
       << "  (" << c.wall_ms << " ms)";
    if (!c.reason.empty()) os << "  [" << c.reason << "]";
    os << "\n";
    for (const auto& t : c.residual) {
      os << "      residual ";
      for (const auto& w : t.word) os << "t" << w << "^";
      if (!t.vec.empty()) os << " (x) e" << t.vec;
      os << " = " << t.re << (t.im == "0" ? "" : " + " + t.im + "i") << "\n";
    }
  }
  os << "  total: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail)
     << " fail, " << count(CheckStatus::Skip) << " skip\n";
  return os.str();
}

void emit_report(const Report& report, const std::string& format, const std::string& path) {
  std::string body;
  if (format == "json") {
    body = report.to_json().dump(2) + "\n";
  } else if (format == "text") {
    body = report.to_text();
  } else {
    fail(Errc::ParseError, "unknown report format '" + format + "'");
  }
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write report '" + path + "'");
  out << body;
  if (!out) fail(Errc::IoError, "short write to '" + path + "'");
}

}  // namespace acx
