#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "acx/deformation.hpp"

namespace acx {

/// On-disk description of a verification run: the frame data, named Beltrami
/// matrices and forms, the suites to run, a seed, and a sweep bound.
/// Rationals travel as strings "a/b", complex scalars as {"re","im"},
/// coframe indices as "k"/"kbar".
struct Manifest {
  uint32_t n = 0;
  std::vector<Form> dtheta;  // holomorphic table, one entry per 1..n
  std::map<std::string, Beltrami> beltrami;
  std::map<std::string, Form> forms;
  std::vector<std::string> tasks;
  uint64_t seed = 0;
  int max_degree = -1;  // -1 means 2n

  FrameSpec to_spec() const { return FrameSpec(n, dtheta); }
  int sweep_degree() const { return max_degree < 0 ? static_cast<int>(2 * n) : max_degree; }
};

Manifest manifest_from_json(const nlohmann::json& j);
nlohmann::json manifest_to_json(const Manifest& m);
Manifest parse_manifest(const std::string& path);
void write_manifest(const Manifest& m, const std::string& path);

nlohmann::json form_to_json(const Form& f);
Form form_from_json(uint32_t n, const nlohmann::json& j);

}  // namespace acx
