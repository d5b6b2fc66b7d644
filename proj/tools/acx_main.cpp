#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "acx/suites.hpp"

using namespace acx;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

struct GlobalOpts {
  std::string manifest_path;
  uint64_t seed = 0;
  bool seed_set = false;
  int max_degree = -1;
};

Manifest load(const GlobalOpts& g, uint64_t* seed, int* max_degree) {
  Manifest m = parse_manifest(g.manifest_path);
  *seed = g.seed_set ? g.seed : m.seed;
  int md = g.max_degree >= 0 ? g.max_degree : m.sweep_degree();
  *max_degree = std::min<int>(md, static_cast<int>(2 * m.n));
  return m;
}

int emit_and_status(const Report& rep, const std::string& format, const std::string& out) {
  emit_report(rep, format, out);
  return rep.all_passed() ? kExitPass : kExitFail;
}

int run_deform(const Manifest& m, uint64_t seed, const std::string& check,
               const std::string& phi_name, const std::string& form_name,
               const std::string& format, const std::string& out) {
  (void)seed;
  auto pit = m.beltrami.find(phi_name);
  if (pit == m.beltrami.end()) fail(Errc::ParseError, "unknown beltrami '" + phi_name + "'");
  FrameSpec spec = m.to_spec();
  spec.ensure_valid();

  Report rep;
  rep.suite = "deform";
  rep.seed = seed;
  rep.n = m.n;
  rep.max_degree = static_cast<int>(2 * m.n);
  CheckRecord rec;
  rec.suite = "deform";
  rec.name = "deform/" + check + "/" + phi_name;
  rec.anchor = check;

  if (check == "mc") {
    VectorForm mc = maurer_cartan(spec, pit->second);
    rec.require_zero(mc, "Maurer-Cartan residual");
  } else {
    auto fit = m.forms.find(form_name);
    if (fit == m.forms.end()) fail(Errc::ParseError, "unknown form '" + form_name + "'");
    DeformedStructure ds(spec, pit->second);
    bool predicate = false, native = false;
    if (check == "prop2") {
      predicate = n0_closedness_predicate(ds, fit->second);
      native = n0_closed_native(ds, fit->second);
    } else if (check == "thm5") {
      predicate = dolbeault_class_predicate(ds, fit->second);
      native = dolbeault_class_native(ds, fit->second);
    } else if (check == "thm6") {
      predicate = nq_closedness_predicate(ds, fit->second);
      native = nq_closed_native(ds, fit->second);
    } else {
      fail(Errc::ParseError, "unknown deform check '" + check + "'");
    }
    rec.reason = std::string("predicate=") + (predicate ? "true" : "false") +
                 " native=" + (native ? "true" : "false");
    rec.require(predicate == native, rec.reason);
  }
  rep.checks.push_back(std::move(rec));
  return emit_and_status(rep, format, out);
}

int run_cohomology(const Manifest& m, int p, int q, const std::string& format,
                   const std::string& out) {
  FrameSpec spec = m.to_spec();
  spec.ensure_valid();
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text;
  text << "invariant cohomology dimensions (n=" << m.n << ")\n";
  text << "  (p,q)   dim H_mubar   dim H_dolbeault\n";
  auto emit_row = [&](int pp, int qq) {
    DolbeaultCohomology dol = dolbeault_cohomology(spec, pp, qq);
    rows.push_back({{"p", pp}, {"q", qq}, {"mubar", dol.dim_mubar}, {"dolbeault", dol.dim}});
    text << "  (" << pp << "," << qq << ")        " << dol.dim_mubar << "             "
         << dol.dim << "\n";
  };
  if (p >= 0 && q >= 0) {
    emit_row(p, q);
  } else {
    for (int pp = 0; pp <= static_cast<int>(m.n); ++pp)
      for (int qq = 0; qq <= static_cast<int>(m.n); ++qq) emit_row(pp, qq);
  }
  std::string body;
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = "acx-cohomology/1";
    j["n"] = m.n;
    j["label"] = "invariant cohomology";
    j["dimensions"] = rows;
    body = j.dump(2) + "\n";
  } else {
    body = text.str();
  }
  if (out.empty() || out == "-") {
    std::cout << body;
  } else {
    std::ofstream f(out);
    if (!f) fail(Errc::IoError, "cannot write '" + out + "'");
    f << body;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bigraded exterior calculus on invariant frames"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed override")->each([&](const std::string&) {
    g.seed_set = true;
  });
  app.add_option("--max-degree", g.max_degree, "bound the sweep degree");

  std::string format = "text", out, suite = "all";
  std::string check, phi_name, form_name;
  int p = -1, q = -1;

  CLI::App* validate = app.add_subcommand("validate", "frame integrity checks");
  validate->add_option("manifest", g.manifest_path)->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--out", out);

  CLI::App* checkcmd = app.add_subcommand("check", "run an identity suite");
  checkcmd->add_option("manifest", g.manifest_path)->required();
  checkcmd->add_option("--suite", suite);
  checkcmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  checkcmd->add_option("--out", out);

  CLI::App* cohom = app.add_subcommand("cohomology", "invariant cohomology dimensions");
  cohom->add_option("manifest", g.manifest_path)->required();
  cohom->add_option("--p", p);
  cohom->add_option("--q", q);
  cohom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cohom->add_option("--out", out);

  CLI::App* deform = app.add_subcommand("deform", "evaluate a deformation predicate");
  deform->add_option("manifest", g.manifest_path)->required();
  deform->add_option("--check", check)->required()->check(
      CLI::IsMember({"mc", "prop2", "thm5", "thm6"}));
  deform->add_option("--phi", phi_name)->required();
  deform->add_option("--form", form_name);
  deform->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  deform->add_option("--out", out);

  CLI::App* report = app.add_subcommand("report", "write a machine-readable report");
  report->add_option("manifest", g.manifest_path)->required();
  report->add_option("--suite", suite);
  report->add_option("--out", out)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    uint64_t seed = 0;
    int max_degree = 0;
    Manifest m = load(g, &seed, &max_degree);
    if (validate->parsed()) {
      return emit_and_status(run_suite(m, "validate", seed, max_degree), format, out);
    }
    if (checkcmd->parsed()) {
      return emit_and_status(run_suite(m, suite, seed, max_degree), format, out);
    }
    if (cohom->parsed()) {
      if ((p >= 0) != (q >= 0)) fail(Errc::ParseError, "--p and --q go together");
      return run_cohomology(m, p, q, format, out);
    }
    if (deform->parsed()) {
      if (check != "mc" && form_name.empty())
        fail(Errc::ParseError, "--form is required for this check");
      return run_deform(m, seed, check, phi_name, form_name, format, out);
    }
    if (report->parsed()) {
      std::vector<std::string> suites;
      if (report->count("--suite") > 0) {
        suites.push_back(suite);
      } else if (!m.tasks.empty()) {
        suites = m.tasks;
      } else {
        suites.push_back("all");
      }
      Report rep = run_suites(m, suites, seed, max_degree);
      if (suites.size() == 1) rep.suite = suites[0];
      emit_report(rep, format.empty() ? "json" : format, out);
      return rep.all_passed() ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::RangeError:
      case Errc::RationalError:
      case Errc::IoError:
      case Errc::InvalidFrame:
      case Errc::SingularTransition:
      case Errc::MCViolation:
      case Errc::PreconditionViolation:
        return kExitBadInput;
      default:
        return kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitBadInput;
}
