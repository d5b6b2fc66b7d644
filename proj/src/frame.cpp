#include "acx/frame.hpp"

#include <sstream>

namespace acx {

std::string VectorField::str() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeff) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*e" << idx_name(n, k);
  }
  return os.str();
}

std::string VectorForm::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (uint32_t code : word_indices(k.first)) os << "*t" << idx_name(n, code);
    os << " (x) e" << idx_name(n, k.second);
  }
  return os.str();
}

VectorForm tensor(const Form& f, uint32_t vec) {
  VectorForm out(f.n());
  for (const auto& [w, c] : f.terms()) out.add(w, vec, c);
  return out;
}

Form value_component(const VectorForm& v, uint32_t vec) {
  Form out(v.n);
  for (const auto& [k, c] : v.terms)
    if (k.second == vec) out.add_term(k.first, c);
  return out;
}

VectorForm vf_conjugate(const VectorForm& v) {
  VectorForm out(v.n);
  for (const auto& [k, c] : v.terms) {
    Word cw;
    int sgn;
    conj_word(v.n, k.first, &cw, &sgn);
    out.add(cw, idx_conj(v.n, k.second), Scalar(sgn) * c.conj());
  }
  return out;
}

VectorForm wedge_vf(const Form& a, const VectorForm& v) {
  VectorForm out(v.n);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [k, c] : v.terms) {
      int sgn = wedge_word_sign(wa, k.first);
      if (sgn == 0) continue;
      out.add(wa | k.first, k.second, Scalar(sgn) * ca * c);
    }
  }
  return out;
}

VectorForm vf_project(const VectorForm& v, int p, int q, bool value_anti) {
  VectorForm out(v.n);
  for (const auto& [k, c] : v.terms) {
    if (word_holo_degree(v.n, k.first) == p && word_anti_degree(v.n, k.first) == q &&
        idx_is_anti(v.n, k.second) == value_anti)
      out.add(k.first, k.second, c);
  }
  return out;
}

FrameSpec::FrameSpec(uint32_t n, std::vector<Form> dtheta_holo) : n_(n), zero_field_(n) {
  if (n < 1 || n > kMaxDim) fail(Errc::RangeError, "complex dimension out of range");
  if (dtheta_holo.size() != n) fail(Errc::InvalidFrame, "need one dθ entry per holomorphic index");
  dtheta_.resize(2 * n, Form(n));
  for (uint32_t g = 0; g < n; ++g) {
    if (dtheta_holo[g].n() != n && !dtheta_holo[g].is_zero())
      fail(Errc::InvalidFrame, "dθ entry over wrong frame");
    dtheta_[g] = dtheta_holo[g];
    if (dtheta_[g].n() != n) dtheta_[g] = Form(n);
    dtheta_[n + g] = conjugate(dtheta_[g]);
  }
  // bracket constants: c^γ_{ab} = -(dθ^γ)(e_a, e_b); determinant convention
  // makes (dθ^γ)(e_a, e_b) with a<b the stored coefficient on the word {a,b}.
  bracket_.assign(2 * n, std::vector<VectorField>(2 * n, VectorField(n)));
  for (uint32_t a = 0; a < 2 * n; ++a) {
    for (uint32_t b = a + 1; b < 2 * n; ++b) {
      Word w = (1u << a) | (1u << b);
      VectorField v(n);
      for (uint32_t g = 0; g < 2 * n; ++g) v.add(g, -dtheta_[g].coeff(w));
      bracket_[a][b] = v;
    }
  }
}

const VectorField& FrameSpec::bracket_basis(uint32_t a, uint32_t b) const {
  if (a == b) return zero_field_;
  return a < b ? bracket_[a][b] : bracket_[b][a];
}

ValidationReport FrameSpec::validate() const {
  ValidationReport rep;
  rep.degrees_ok = true;
  for (uint32_t g = 0; g < n_; ++g) {
    for (const auto& [w, c] : dtheta_[g].terms()) {
      if (word_degree(w) != 2) rep.degrees_ok = false;
    }
    rep.entries.push_back({g, exterior_d(*this, dtheta_[g])});
  }
  rep.pass = rep.degrees_ok;
  for (const auto& e : rep.entries)
    if (!e.residual.is_zero()) rep.pass = false;
  return rep;
}

void FrameSpec::ensure_valid() const {
  ValidationReport rep = validate();
  if (!rep.pass) {
    const Form* r = rep.first_failure();
    fail(Errc::InvalidFrame, r ? "d^2 != 0, residual " + r->str() : "non-homogeneous dθ entry");
  }
}

ValidationReport validate_frame(const FrameSpec& spec) { return spec.validate(); }

Form exterior_d(const FrameSpec& spec, const Form& a) {
  Form out(spec.n());
  for (const auto& [w, c] : a.terms()) {
    // Leibniz over the factors of the word
    int pos = 0;
    for (uint32_t code : word_indices(w)) {
      Word rest;
      int sgn;
      interior_word(w, code, &rest, &sgn);
      (void)sgn;  // we need the position sign, identical to interior's
      Scalar front = c * Scalar((pos & 1) ? -1 : 1);
      // d(θ^{w}) term: (-1)^{pos} dθ^{code} ∧ θ^{w \ code}
      Form rest_form(spec.n());
      rest_form.add_term(rest, Scalar::one());
      out += front * wedge(spec.dtheta(code), rest_form);
      ++pos;
    }
  }
  return out;
}

Form d_component(const FrameSpec& spec, const Form& a, DPart part) {
  auto [dp, dq] = dpart_shift(part);
  Form out(spec.n());
  for (const auto& [key, piece] : bigraded_parts(a)) {
    Form d = exterior_d(spec, piece);
    out += project(d, key.first + dp, key.second + dq);
  }
  return out;
}

Form interior(const VectorField& X, const Form& a) {
  Form out(a.n());
  for (const auto& [k, xc] : X.coeff) {
    for (const auto& [w, c] : a.terms()) {
      Word rest;
      int sgn;
      if (!interior_word(w, k, &rest, &sgn)) continue;
      out.add_term(rest, Scalar(sgn) * xc * c);
    }
  }
  return out;
}

VectorField vector_bracket(const FrameSpec& spec, const VectorField& X, const VectorField& Y) {
  VectorField out(spec.n());
  for (const auto& [a, xa] : X.coeff) {
    for (const auto& [b, yb] : Y.coeff) {
      if (a == b) continue;
      Scalar c = xa * yb;
      if (a > b) c = -c;
      out += c * spec.bracket_basis(a, b);
    }
  }
  return out;
}

Form lie_derivative_form(const FrameSpec& spec, const VectorField& X, const Form& a) {
  return interior(X, exterior_d(spec, a)) + exterior_d(spec, interior(X, a));
}

VectorForm nijenhuis(const FrameSpec& spec) {
  VectorForm out(spec.n());
  uint32_t d = spec.dim();
  for (uint32_t a = 0; a < d; ++a) {
    VectorField ea = VectorField::basis(spec.n(), a);
    VectorField Ja = ea.apply_J();
    for (uint32_t b = a + 1; b < d; ++b) {
      VectorField eb = VectorField::basis(spec.n(), b);
      VectorField Jb = eb.apply_J();
      VectorField nab = vector_bracket(spec, Ja, Jb) - vector_bracket(spec, Ja, eb).apply_J() -
                        vector_bracket(spec, ea, Jb).apply_J() - vector_bracket(spec, ea, eb);
      Word w = (1u << a) | (1u << b);
      for (const auto& [g, c] : nab.coeff) out.add(w, g, c);
    }
  }
  return out;
}

}  // namespace acx
