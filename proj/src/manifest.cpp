#include "acx/manifest.hpp"

#include <fstream>

namespace acx {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    fail(Errc::ParseError, "scalar must be an object with \"re\" and \"im\"");
  if (!j["re"].is_string() || !j["im"].is_string())
    fail(Errc::ParseError, "scalar parts must be rational strings");
  return Scalar::from_strings(j["re"].get<std::string>(), j["im"].get<std::string>());
}

json scalar_to_json(const Scalar& s) {
  return json{{"re", s.re.get_str()}, {"im", s.im.get_str()}};
}

}  // namespace

Form form_from_json(uint32_t n, const json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "form must be an array of terms");
  Form f(n);
  for (const json& term : j) {
    if (!term.is_object() || !term.contains("word"))
      fail(Errc::ParseError, "form term needs a \"word\"");
    std::vector<uint32_t> codes;
    for (const json& idx : term["word"]) {
      if (!idx.is_string()) fail(Errc::ParseError, "word entries are index strings");
      codes.push_back(idx_parse(n, idx.get<std::string>()));
    }
    f += Form::monomial(n, codes, scalar_from_json(term));
  }
  return f;
}

json form_to_json(const Form& f) {
  json out = json::array();
  for (const auto& [w, c] : f.terms()) {
    json word = json::array();
    for (uint32_t code : word_indices(w)) word.push_back(idx_name(f.n(), code));
    json term = scalar_to_json(c);
    term["word"] = word;
    out.push_back(term);
  }
  return out;
}

Manifest manifest_from_json(const json& j) {
  Manifest m;
  if (!j.is_object()) fail(Errc::ParseError, "manifest must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    fail(Errc::ParseError, "manifest needs an unsigned \"n\"");
  m.n = j["n"].get<uint32_t>();
  if (m.n < 1 || m.n > kMaxDim) fail(Errc::RangeError, "n out of range");

  m.dtheta.assign(m.n, Form(m.n));
  if (j.contains("dtheta")) {
    if (!j["dtheta"].is_array()) fail(Errc::ParseError, "dtheta must be an array");
    for (const json& entry : j["dtheta"]) {
      if (!entry.is_object() || !entry.contains("gamma") || !entry.contains("terms"))
        fail(Errc::ParseError, "dtheta entry needs \"gamma\" and \"terms\"");
      uint32_t code = idx_parse(m.n, entry["gamma"].get<std::string>());
      if (idx_is_anti(m.n, code))
        fail(Errc::ParseError, "dtheta table lists holomorphic indices only");
      m.dtheta[code] = form_from_json(m.n, entry["terms"]);
    }
  }

  if (j.contains("beltrami")) {
    for (const auto& [name, mat] : j["beltrami"].items()) {
      if (!mat.is_array() || mat.size() != m.n)
        fail(Errc::ParseError, "beltrami \"" + name + "\" must be an n-row matrix");
      Matrix entries(m.n, m.n);
      for (uint32_t i = 0; i < m.n; ++i) {
        if (!mat[i].is_array() || mat[i].size() != m.n)
          fail(Errc::ParseError, "beltrami \"" + name + "\" row has wrong length");
        for (uint32_t k = 0; k < m.n; ++k) entries.at(i, k) = scalar_from_json(mat[i][k]);
      }
      m.beltrami.emplace(name, Beltrami(entries));
    }
  }

  if (j.contains("forms")) {
    for (const auto& [name, terms] : j["forms"].items())
      m.forms.emplace(name, form_from_json(m.n, terms));
  }

  if (j.contains("tasks")) {
    for (const json& t : j["tasks"]) m.tasks.push_back(t.get<std::string>());
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail(Errc::ParseError, "seed must be unsigned");
    m.seed = j["seed"].get<uint64_t>();
  }
  if (j.contains("max_degree")) m.max_degree = j["max_degree"].get<int>();
  return m;
}

json manifest_to_json(const Manifest& m) {
  json j;
  j["n"] = m.n;
  json dtheta = json::array();
  for (uint32_t g = 0; g < m.n; ++g) {
    if (m.dtheta[g].is_zero()) continue;
    dtheta.push_back(json{{"gamma", idx_name(m.n, g)}, {"terms", form_to_json(m.dtheta[g])}});
  }
  j["dtheta"] = dtheta;
  json bel = json::object();
  for (const auto& [name, b] : m.beltrami) {
    json rows = json::array();
    for (uint32_t i = 0; i < m.n; ++i) {
      json row = json::array();
      for (uint32_t k = 0; k < m.n; ++k) row.push_back(scalar_to_json(b.matrix().at(i, k)));
      rows.push_back(row);
    }
    bel[name] = rows;
  }
  j["beltrami"] = bel;
  json forms = json::object();
  for (const auto& [name, f] : m.forms) forms[name] = form_to_json(f);
  j["forms"] = forms;
  j["tasks"] = m.tasks;
  j["seed"] = m.seed;
  if (m.max_degree >= 0) j["max_degree"] = m.max_degree;
  return j;
}

Manifest parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open manifest '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("manifest JSON: ") + e.what());
  }
  return manifest_from_json(j);
}

void write_manifest(const Manifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write manifest '" + path + "'");
  out << manifest_to_json(m).dump(2) << "\n";
}

}  // namespace acx
