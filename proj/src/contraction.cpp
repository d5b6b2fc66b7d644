#include "acx/contraction.hpp"

#include <algorithm>

namespace acx {

Form contract(const VectorForm& rho, const Form& a) {
  Form out(a.n());
  for (const auto& [k, c] : rho.terms) {
    const auto& [w, vec] = k;
    for (const auto& [aw, ac] : a.terms()) {
      Word rest;
      int s1;
      if (!interior_word(aw, vec, &rest, &s1)) continue;
      int s2 = wedge_word_sign(w, rest);
      if (s2 == 0) continue;
      out.add_term(w | rest, Scalar(s1 * s2) * c * ac);
    }
  }
  return out;
}

VectorForm contract_into(const VectorForm& rho, const VectorForm& tau) {
  VectorForm out(tau.n);
  for (const auto& [k, c] : tau.terms) {
    Form part(tau.n);
    part.add_term(k.first, c);
    Form image = contract(rho, part);
    for (const auto& [w, ic] : image.terms()) out.add(w, k.second, ic);
  }
  return out;
}

namespace {

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int permutation_sign(const std::vector<uint32_t>& perm) {
  int sgn = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[j] < perm[i]) sgn = -sgn;
  return sgn;
}

}  // namespace

Form contract_general(const VectorForm& rho, const Form& a) {
  Form out(a.n());
  uint32_t dim = 2 * a.n();
  // split both inputs into degree-homogeneous pieces
  std::map<int, VectorForm> rho_parts;
  for (const auto& [k, c] : rho.terms) {
    auto& part = rho_parts.try_emplace(word_degree(k.first), VectorForm(rho.n)).first->second;
    part.add(k.first, k.second, c);
  }
  std::map<int, Form> a_parts;
  for (const auto& [w, c] : a.terms()) {
    auto& part = a_parts.try_emplace(word_degree(w), Form(a.n())).first->second;
    part.add_term(w, c);
  }
  for (const auto& [p, rp] : rho_parts) {
    for (const auto& [r, ap] : a_parts) {
      if (r == 0) continue;  // vectors annihilate functions
      int m = p + r - 1;
      Scalar norm = Scalar::rational(1, factorial(p) * factorial(r - 1));
      // sweep all increasing argument tuples of size m
      for (Word tw = 0; tw < (1u << dim); ++tw) {
        if (word_degree(tw) != m) continue;
        std::vector<uint32_t> tuple = word_indices(tw);
        std::vector<uint32_t> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        Scalar val;
        do {
          int psgn = permutation_sign(order);
          std::vector<uint32_t> first(p), rest(r - 1);
          for (int i = 0; i < p; ++i) first[i] = tuple[order[i]];
          for (int i = 0; i < r - 1; ++i) rest[i] = tuple[order[p + i]];
          // rho(first) is a vector; pair it into the first slot of a
          for (const auto& [k, c] : rp.terms) {
            int s1 = eval_word_on_basis(k.first, first);
            if (s1 == 0) continue;
            std::vector<uint32_t> args;
            args.reserve(r);
            args.push_back(k.second);
            args.insert(args.end(), rest.begin(), rest.end());
            for (const auto& [aw, ac] : ap.terms()) {
              int s2 = eval_word_on_basis(aw, args);
              if (s2 == 0) continue;
              val += Scalar(psgn * s1 * s2) * c * ac;
            }
          }
        } while (std::next_permutation(order.begin(), order.end()));
        if (!val.is_zero()) out.add_term(tw, norm * val);
      }
    }
  }
  return out;
}

namespace {

void require_beltrami_type(const VectorForm& phi) {
  for (const auto& [k, c] : phi.terms) {
    bool ok = word_holo_degree(phi.n, k.first) == 0 && word_anti_degree(phi.n, k.first) == 1 &&
              !idx_is_anti(phi.n, k.second);
    if (!ok) fail(Errc::NonBeltramiInput, "exp contraction needs A^{0,1}(T^{1,0}) input");
  }
}

}  // namespace

Form exp_contraction(const VectorForm& phi, const Form& a) {
  require_beltrami_type(phi);
  Form result = a;
  Form acc = a;
  mpq_class kfact(1);
  for (uint32_t k = 1; k <= 2 * a.n() + 1; ++k) {
    acc = contract(phi, acc);
    if (acc.is_zero()) break;
    kfact *= k;
    result += Scalar(mpq_class(1) / kfact, mpq_class(0)) * acc;
  }
  return result;
}

namespace {

VectorForm tensor_field(const Form& f, const VectorField& v) {
  VectorForm out(f.n());
  for (const auto& [g, c] : v.coeff) out += tensor(c * f, g);
  return out;
}

/// Five-term bracket for decomposable arguments given as whole forms.
VectorForm fn_terms(const FrameSpec& spec, const Form& rho, uint32_t a, const Form& tau,
                    uint32_t b, int rho_degree) {
  VectorField X = VectorField::basis(spec.n(), a);
  VectorField Y = VectorField::basis(spec.n(), b);
  Scalar sgn((rho_degree & 1) ? -1 : 1);
  VectorForm out(spec.n());
  VectorField xy = spec.bracket_sign_flip(a, b) ? -spec.bracket_basis(a, b)
                                                : spec.bracket_basis(a, b);
  out += tensor_field(wedge(rho, tau), xy);
  out += tensor(wedge(rho, lie_derivative_form(spec, X, tau)), b);
  out += tensor(-wedge(lie_derivative_form(spec, Y, rho), tau), a);
  out += tensor(sgn * wedge(exterior_d(spec, rho), interior(X, tau)), b);
  out += tensor(sgn * wedge(interior(Y, rho), exterior_d(spec, tau)), a);
  return out;
}

}  // namespace

VectorForm fn_bracket(const FrameSpec& spec, const VectorForm& phi, const VectorForm& psi) {
  VectorForm out(spec.n());
  for (const auto& [k1, c1] : phi.terms) {
    Form rho(spec.n());
    rho.add_term(k1.first, Scalar::one());
    for (const auto& [k2, c2] : psi.terms) {
      Form tau(spec.n());
      tau.add_term(k2.first, Scalar::one());
      out += (c1 * c2) * fn_terms(spec, rho, k1.second, tau, k2.second, word_degree(k1.first));
    }
  }
  return out;
}

VectorForm fn_bracket_collected(const FrameSpec& spec, const VectorForm& phi,
                                const VectorForm& psi) {
  int pdeg = phi.form_degree();
  VectorForm out(spec.n());
  for (uint32_t a = 0; a < spec.dim(); ++a) {
    Form rho = value_component(phi, a);
    if (rho.is_zero()) continue;
    for (uint32_t b = 0; b < spec.dim(); ++b) {
      Form tau = value_component(psi, b);
      if (tau.is_zero()) continue;
      out += fn_terms(spec, rho, a, tau, b, pdeg);
    }
  }
  return out;
}

AbcParts abc_decompose(const VectorForm& v) {
  AbcParts parts{VectorForm(v.n), VectorForm(v.n), VectorForm(v.n)};
  for (const auto& [k, c] : v.terms) {
    int p = word_holo_degree(v.n, k.first), q = word_anti_degree(v.n, k.first);
    bool anti = idx_is_anti(v.n, k.second);
    if (p == 0 && q == 2 && !anti) {
      parts.a.add(k.first, k.second, c);
    } else if (p == 1 && q == 1 && !anti) {
      parts.b.add(k.first, k.second, c);
    } else if (p == 0 && q == 2 && anti) {
      parts.c.add(k.first, k.second, c);
    } else {
      fail(Errc::TypeLeak, "component of type (" + std::to_string(p) + "," + std::to_string(q) +
                               (anti ? ")⊗T(0,1)" : ")⊗T(1,0)"));
    }
  }
  return parts;
}

VectorForm dbar_vector(const FrameSpec& spec, uint32_t code) {
  VectorForm out(spec.n());
  for (uint32_t j = 0; j < spec.n(); ++j) {
    uint32_t jbar = idx_anti(spec.n(), j + 1);
    VectorField br = spec.bracket_basis(jbar, code);
    if (code < jbar) br = Scalar(-1) * br;  // stored as [e_code, e_jbar]
    for (const auto& [g, c] : br.part(false).coeff) out.add(1u << jbar, g, c);
  }
  return out;
}

VectorForm vf_dbar(const FrameSpec& spec, const VectorForm& v) {
  VectorForm out(spec.n());
  for (const auto& [k, c] : v.terms) {
    if (word_holo_degree(v.n, k.first) != 0 || idx_is_anti(v.n, k.second))
      fail(Errc::TypeLeak, "extended dbar needs A^{0,*}(T^{1,0}) input");
    Form rho(spec.n());
    rho.add_term(k.first, c);
    // ∂̄ρ ⊗ Y
    Form dbr = d_component(spec, rho, DPart::DelBar);
    for (const auto& [w, dc] : dbr.terms()) out.add(w, k.second, dc);
    // (-1)^p ρ ∧ ∂̄Y
    int p = word_degree(k.first);
    VectorForm tail = wedge_vf(rho, dbar_vector(spec, k.second));
    out += Scalar((p & 1) ? -1 : 1) * tail;
  }
  return out;
}

Form anticommutation_residual(const VectorForm& phi, const VectorForm& psi, const Form& a) {
  int q = 0, s = 0, dummy = 0;
  bool anti_p = false, anti_s = false;
  if (!phi.homogeneous(&dummy, &q, &anti_p) || dummy != 0 || anti_p)
    fail(Errc::TypeLeak, "first argument not in A^{0,q}(T^{1,0})");
  if (!psi.homogeneous(&dummy, &s, &anti_s) || dummy != 0 || anti_s)
    fail(Errc::TypeLeak, "second argument not in A^{0,s}(T^{1,0})");
  Form lhs = contract(phi, contract(psi, a));
  Form rhs = contract(psi, contract(phi, a));
  int sgn = (((q + 1) * (s + 1)) & 1) ? -1 : 1;
  return lhs - Scalar(sgn) * rhs;
}

EValuedForm& EValuedForm::operator+=(const EValuedForm& o) {
  if (comps.size() != o.comps.size()) fail(Errc::RankMismatch, "bundle ranks differ");
  for (size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
  return *this;
}
EValuedForm& EValuedForm::operator-=(const EValuedForm& o) {
  if (comps.size() != o.comps.size()) fail(Errc::RankMismatch, "bundle ranks differ");
  for (size_t i = 0; i < comps.size(); ++i) comps[i] -= o.comps[i];
  return *this;
}

EValuedForm nabla_apply(const FrameSpec& spec, const Connection& conn, const EValuedForm& s) {
  if (s.rank() != conn.rank) fail(Errc::RankMismatch, "section rank != connection rank");
  EValuedForm out(conn.rank, spec.n());
  for (uint32_t i = 0; i < conn.rank; ++i) {
    out.comps[i] = exterior_d(spec, s.comps[i]);
    for (uint32_t j = 0; j < conn.rank; ++j) {
      if (const Form* w = conn.entry(i, j)) out.comps[i] += wedge(*w, s.comps[j]);
    }
  }
  return out;
}

EValuedForm nabla_component(const FrameSpec& spec, const Connection& conn, DPart part,
                            const EValuedForm& s) {
  if (s.rank() != conn.rank) fail(Errc::RankMismatch, "section rank != connection rank");
  EValuedForm out(conn.rank, spec.n());
  int wp = 0, wq = 0;
  switch (part) {
    case DPart::Del: wp = 1; wq = 0; break;
    case DPart::DelBar: wp = 0; wq = 1; break;
    default: break;
  }
  for (uint32_t i = 0; i < conn.rank; ++i) {
    out.comps[i] = d_component(spec, s.comps[i], part);
    if (part == DPart::Del || part == DPart::DelBar) {
      for (uint32_t j = 0; j < conn.rank; ++j) {
        if (const Form* w = conn.entry(i, j)) out.comps[i] += wedge(project(*w, wp, wq), s.comps[j]);
      }
    }
  }
  return out;
}

EValuedForm ev_contract(const VectorForm& rho, const EValuedForm& s) {
  EValuedForm out = s;
  for (auto& f : out.comps) f = contract(rho, f);
  return out;
}

EValuedForm ev_exp_contraction(const VectorForm& phi, const EValuedForm& s) {
  EValuedForm out = s;
  for (auto& f : out.comps) f = exp_contraction(phi, f);
  return out;
}

EValuedForm gen_lie(const FrameSpec& spec, const VectorForm& rho, const Connection& conn,
                    const EValuedForm& s) {
  int deg = rho.form_degree();
  EValuedForm first = ev_contract(rho, nabla_apply(spec, conn, s));
  EValuedForm second = nabla_apply(spec, conn, ev_contract(rho, s));
  return first + Scalar((deg & 1) ? -1 : 1) * second;
}

Form gen_lie_d(const FrameSpec& spec, const VectorForm& rho, const Form& a) {
  int deg = rho.form_degree();
  return contract(rho, exterior_d(spec, a)) +
         Scalar((deg & 1) ? -1 : 1) * exterior_d(spec, contract(rho, a));
}

Form gen_lie_part(const FrameSpec& spec, const VectorForm& rho, DPart part, const Form& a) {
  int deg = rho.form_degree();
  return contract(rho, d_component(spec, a, part)) +
         Scalar((deg & 1) ? -1 : 1) * d_component(spec, contract(rho, a), part);
}

}  // namespace acx
