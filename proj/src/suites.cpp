#include "acx/suites.hpp"

#include <chrono>

namespace acx {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Word> sweep_words(const SuiteContext& ctx) {
  std::vector<Word> out;
  for (Word w = 0; w < (1u << (2 * ctx.spec.n())); ++w)
    if (word_degree(w) <= ctx.max_degree) out.push_back(w);
  return out;
}

Form basis_form(uint32_t n, Word w) {
  Form f(n);
  f.add_term(w, Scalar::one());
  return f;
}

VectorForm identity_endo(uint32_t n) {
  VectorForm eye(n);
  for (uint32_t c = 0; c < 2 * n; ++c) eye.add(1u << c, c, Scalar::one());
  return eye;
}

VectorForm block_vf(uint32_t n, const Matrix& m, bool row_anti, bool col_anti) {
  VectorForm out(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      out.add(1u << (col_anti ? n + j : j), row_anti ? n + i : i, m.at(i, j));
  return out;
}

std::vector<Beltrami> mc_flat_beltramis(const SuiteContext& ctx, Rng& rng, int want) {
  std::vector<Beltrami> out;
  for (const auto& [name, b] : ctx.manifest.beltrami) {
    try {
      build_transition(b);
    } catch (const Error&) {
      continue;
    }
    if (maurer_cartan(ctx.spec, b).is_zero()) out.push_back(b);
  }
  for (int tries = 0; tries < 400 && static_cast<int>(out.size()) < want; ++tries) {
    Beltrami b = random_beltrami(rng, ctx.spec.n());
    if (maurer_cartan(ctx.spec, b).is_zero()) out.push_back(b);
  }
  return out;
}

Connection rank1_omega(uint32_t n) {
  Connection c;
  c.rank = 1;
  c.omega = {{Form::theta(n, 0) + Scalar::rational(1, 2) * Form::theta(n, n)}};
  return c;
}

Connection rank2_omega(uint32_t n) {
  Connection c;
  c.rank = 2;
  c.omega = {{Form(n), Form::theta(n, 0)}, {Form::theta(n, n + (n > 1 ? 1 : 0)), Form(n)}};
  return c;
}

Form d2_identity(const FrameSpec& s, int which, const Form& a) {
  auto part = [&](DPart p, const Form& f) { return d_component(s, f, p); };
  auto mu = [&](const Form& f) { return part(DPart::Mu, f); };
  auto de = [&](const Form& f) { return part(DPart::Del, f); };
  auto db = [&](const Form& f) { return part(DPart::DelBar, f); };
  auto mb = [&](const Form& f) { return part(DPart::MuBar, f); };
  switch (which) {
    case 0: return mu(mu(a));
    case 1: return mu(de(a)) + de(mu(a));
    case 2: return mu(db(a)) + db(mu(a)) + de(de(a));
    case 3: return mu(mb(a)) + de(db(a)) + db(de(a)) + mb(mu(a));
    case 4: return mb(de(a)) + de(mb(a)) + db(db(a));
    case 5: return mb(db(a)) + db(mb(a));
    default: return mb(mb(a));
  }
}

// ---------------------------------------------------------------- validate

void check_frame_integrity(const SuiteContext& ctx, CheckRecord& rec) {
  ValidationReport rep = ctx.spec.validate();
  if (!rep.pass) {
    const Form* r = rep.first_failure();
    if (r)
      rec.fail_with(*r, "d^2 != 0");
    else
      rec.require(false, "non-homogeneous dθ entry");
    return;
  }
  for (Word w : sweep_words(ctx)) {
    Form a = basis_form(ctx.spec.n(), w);
    for (int which = 0; which < 7; ++which)
      rec.require_zero(d2_identity(ctx.spec, which, a),
                       "type identity " + std::to_string(which));
  }
}

void check_canonical_words(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  rec.require(Form::monomial(n, {0, 0}, Scalar::one()).is_zero(), "repeated index must vanish");
  Form t1 = Form::theta(n, 0);
  rec.require_zero(wedge(t1, t1), "θ∧θ");
  for (int it = 0; it < 24; ++it) {
    // draw a word, scramble it, rebuild with the tracked sign
    Word w = static_cast<Word>(rng.below(1u << (2 * n)));
    std::vector<uint32_t> seq = word_indices(w);
    int sgn = 1;
    for (size_t s = 0; s + 1 < seq.size(); ++s) {
      size_t j = s + rng.below(seq.size() - s);
      if (j != s) {
        std::swap(seq[s], seq[j]);
        sgn = -sgn;
      }
    }
    // one extra adjacent transposition, tracked
    if (seq.size() >= 2) {
      std::swap(seq[0], seq[1]);
      sgn = -sgn;
    }
    Form built = Form::monomial(n, seq, Scalar::one());
    Form canon(n);
    canon.add_term(w, Scalar(sgn));
    rec.require(built == canon, "permutation sign");
  }
}

void check_projection_resolution(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 12; ++it) {
    Form a(n);
    for (Word w : sweep_words(ctx))
      if (rng.below(3) == 0) a.add_term(w, random_small_scalar(rng));
    Form sum(n);
    for (int p = 0; p <= static_cast<int>(n); ++p)
      for (int q = 0; q <= static_cast<int>(n); ++q) {
        Form piece = project(a, p, q);
        rec.require(project(piece, p, q) == piece, "projection idempotence");
        rec.require(conjugate(piece) == project(conjugate(a), q, p), "conjugate swaps bidegree");
        sum += piece;
      }
    rec.require(sum == a, "projections resolve the identity");
    rec.require(conjugate(conjugate(a)) == a, "conjugation involution");
  }
}

void check_nijenhuis_quarter(const SuiteContext& ctx, CheckRecord& rec) {
  const FrameSpec& spec = ctx.spec;
  uint32_t n = spec.n();
  VectorForm nij = nijenhuis(spec);
  for (const auto& [k, c] : nij.terms) {
    int p = word_holo_degree(n, k.first);
    rec.require(p == 0 || p == 2, "mixed Nijenhuis component");
  }
  for (uint32_t i = 0; i < n; ++i) {
    Form mubar = d_component(spec, Form::theta(n, i), DPart::MuBar);
    Form quarter = Scalar::rational(1, 4) * value_component(nij, i);
    rec.require(mubar == project(quarter, 0, 2), "μ̄ = (1/4)N");
    Form mu = d_component(spec, Form::theta(n, n + i), DPart::Mu);
    Form quarter_bar = Scalar::rational(1, 4) * value_component(nij, n + i);
    rec.require(mu == project(quarter_bar, 2, 0), "μ = (1/4)N̄");
  }
  if (nij.is_zero()) {
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(d_component(spec, a, DPart::Mu), "integrable μ");
      rec.require_zero(d_component(spec, a, DPart::MuBar), "integrable μ̄");
    }
  }
}

// ----------------------------------------------------------------- bracket

void check_contract_general(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  std::vector<Word> words = sweep_words(ctx);
  for (Word rw = 0; rw < (1u << (2 * n)); ++rw) {
    if (word_degree(rw) > 2) continue;
    for (uint32_t vec = 0; vec < 2 * n; ++vec) {
      VectorForm rho(n);
      rho.add(rw, vec, Scalar::one());
      for (Word aw : words) {
        Form a = basis_form(n, aw);
        rec.require_zero(contract(rho, a) - contract_general(rho, a),
                         "contraction definitions disagree");
        if (rec.status == CheckStatus::Fail) return;
      }
    }
  }
}

void check_anticommutation(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it)
    for (int q = 1; q <= 2; ++q)
      for (int s = 1; s <= 2; ++s) {
        VectorForm phi = random_vector_form(rng, n, 0, q, false);
        VectorForm psi = random_vector_form(rng, n, 0, s, false);
        for (Word w : sweep_words(ctx))
          rec.require_zero(anticommutation_residual(phi, psi, basis_form(n, w)),
                           "anticommutation residual");
      }
}

void check_lemma17(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 10; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 1, false);
    VectorForm br = fn_bracket(ctx.spec, phi, psi);
    try {
      abc_decompose(br);
    } catch (const Error&) {
      rec.fail_with(br, "bracket leaves the three-space sum");
      return;
    }
  }
}

void check_two_expansions(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 8; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 1, false);
    VectorForm a = fn_bracket(ctx.spec, phi, psi);
    rec.require_zero(a - fn_bracket_collected(ctx.spec, phi, psi), "expansion mismatch");
    rec.require_zero(a - fn_bracket(ctx.spec, psi, phi), "graded antisymmetry (0,1)x(0,1)");
  }
}

void check_lemma5(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it) {
    VectorForm A = random_vector_form(rng, n, 0, 2, false);
    VectorForm B = random_vector_form(rng, n, 1, 1, false);
    VectorForm C = random_vector_form(rng, n, 0, 2, true);
    VectorForm xi = random_vector_form(rng, n, 0, 1, false);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(contract(A, contract(xi, a)) - contract(xi, contract(A, a)), "[i_A,i_ξ]");
      rec.require_zero(contract(B, contract(xi, a)) - contract(xi, contract(B, a)) +
                           contract(contract_into(xi, B), a),
                       "[i_B,i_ξ]");
      rec.require_zero(contract(C, contract(xi, a)) - contract(xi, contract(C, a)) -
                           contract(contract_into(C, xi), a),
                       "[i_C,i_ξ]");
    }
  }
}

void check_lemma11(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 1, false);
    VectorForm xi = random_vector_form(rng, n, 0, 1, false);
    VectorForm br = fn_bracket(ctx.spec, phi, psi);
    AbcParts parts = abc_decompose(br);
    VectorForm arg = contract_into(parts.c, xi) - contract_into(xi, parts.b);
    rec.require_zero(arg - (contract_into(br, xi) - contract_into(xi, br)),
                     "argument reduction");
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(contract(br, contract(xi, a)) - contract(xi, contract(br, a)) -
                           contract(arg, a),
                       "[i_{[φ,ψ]}, i_ξ]");
    }
  }
}

void check_lemma3(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm xi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 2, false) +
                     random_vector_form(rng, n, 1, 1, false) +
                     random_vector_form(rng, n, 0, 2, true);
    VectorForm arg = contract_into(psi, xi) - contract_into(xi, psi);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(contract(phi, contract(arg, a)) - contract(arg, contract(phi, a)),
                       "corrected-argument commutator");
    }
  }
}

void check_corollary2(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Connection conn = rank1_omega(n);
  for (int it = 0; it < 4; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 1, false);
    VectorForm br = fn_bracket(ctx.spec, phi, psi);
    for (Word w : sweep_words(ctx)) {
      EValuedForm s(1, n);
      s.comps[0].add_term(w, Scalar::one());
      EValuedForm lhs = gen_lie(ctx.spec, phi, conn, ev_contract(psi, s)) -
                        ev_contract(psi, gen_lie(ctx.spec, phi, conn, s));
      rec.require_zero(lhs.comps[0] - ev_contract(br, s).comps[0], "[L_φ, i_ψ] = i_{[φ,ψ]}");
    }
  }
}

void check_lemma7(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Connection conn = rank1_omega(n);
  for (int it = 0; it < 2; ++it)
    for (int dp = 1; dp <= 2; ++dp)
      for (int ds = 1; ds <= 2; ++ds) {
        Word wp = 0, ws = 0;
        while (word_degree(wp) != dp) wp = static_cast<Word>(rng.below(1u << (2 * n)));
        while (word_degree(ws) != ds) ws = static_cast<Word>(rng.below(1u << (2 * n)));
        VectorForm phi(n), psi(n);
        phi.add(wp, static_cast<uint32_t>(rng.below(2 * n)), random_small_nonzero(rng));
        psi.add(ws, static_cast<uint32_t>(rng.below(2 * n)), random_small_nonzero(rng));
        VectorForm br = fn_bracket(ctx.spec, phi, psi);
        VectorForm ipsi_phi = contract_into(psi, phi);
        Scalar sgn(((dp * (ds - 1)) & 1) ? -1 : 1);
        for (Word w : sweep_words(ctx)) {
          EValuedForm s(1, n);
          s.comps[0].add_term(w, Scalar::one());
          EValuedForm lhs = gen_lie(ctx.spec, phi, conn, ev_contract(psi, s)) -
                            sgn * ev_contract(psi, gen_lie(ctx.spec, phi, conn, s));
          EValuedForm rhs =
              ev_contract(br, s) - sgn * gen_lie(ctx.spec, ipsi_phi, conn, s);
          rec.require_zero(lhs.comps[0] - rhs.comps[0], "mixed-degree commutator");
        }
      }
}

void check_four_split(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 3; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 1, false);
    AbcParts parts = abc_decompose(fn_bracket(ctx.spec, phi, psi));
    auto op = [&](DPart part, const Form& f) { return d_component(ctx.spec, f, part); };
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      auto four = [&](DPart part) {
        return -op(part, contract(phi, contract(psi, a))) -
               contract(psi, contract(phi, op(part, a))) +
               contract(psi, op(part, contract(phi, a))) +
               contract(phi, op(part, contract(psi, a)));
      };
      rec.require_zero(four(DPart::Del) - contract(parts.a, a), "(1,0) row");
      rec.require_zero(four(DPart::Mu) - contract(parts.b, a) - contract(parts.c, a),
                       "(2,-1) row");
      rec.require_zero(four(DPart::DelBar), "(0,1) row");
      rec.require_zero(four(DPart::MuBar), "(-1,2) row");
    }
  }
}

void check_dbar_contraction(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it)
    for (int q = 1; q <= 2; ++q) {
      VectorForm phi = random_vector_form(rng, n, 0, q, false);
      VectorForm dphi = vf_dbar(ctx.spec, phi);
      Scalar sgn(((q - 1) & 1) ? -1 : 1);
      for (Word w : sweep_words(ctx)) {
        Form a = basis_form(n, w);
        Form lhs = d_component(ctx.spec, contract(phi, a), DPart::DelBar) -
                   sgn * contract(phi, d_component(ctx.spec, a, DPart::DelBar));
        rec.require_zero(lhs - contract(dphi, a), "[∂̄, i_φ] = i_{∂̄φ}");
      }
    }
}

void check_tian_todorov(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Form omega(n);
  omega.add_term((1u << n) - 1u, Scalar::one());
  auto del = [&](const Form& f) { return d_component(ctx.spec, f, DPart::Del); };
  auto mu = [&](const Form& f) { return d_component(ctx.spec, f, DPart::Mu); };
  for (int it = 0; it < 8; ++it) {
    VectorForm phi = random_vector_form(rng, n, 0, 1, false);
    VectorForm psi = random_vector_form(rng, n, 0, 1, false);
    VectorForm br = fn_bracket(ctx.spec, phi, psi);
    AbcParts parts = abc_decompose(br);
    Form pp = contract(phi, contract(psi, omega));
    Form rhs = -mu(pp) + contract(phi, del(contract(psi, omega))) - del(pp) +
               contract(psi, del(contract(phi, omega)));
    rec.require_zero(contract(br, omega) - rhs, "top-degree bracket identity");
    rec.require_zero(contract(parts.c, omega), "C-part annihilates Ω");
    rec.require_zero(contract(parts.b, omega) + mu(pp), "B-part on Ω");
  }
}

// --------------------------------------------------------------- extension

void check_prop1(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Connection conns[2] = {Connection::trivial(1), rank1_omega(n)};
  for (int k = 1; k <= 5; ++k)
    for (int it = 0; it < 2; ++it) {
      Beltrami b = random_beltrami(rng, n);
      for (const Connection& conn : conns) {
        EValuedForm s(1, n);
        s.comps[0] = random_form(rng, n, static_cast<int>(rng.below(n + 1)),
                                 static_cast<int>(rng.below(n + 1)));
        rec.require_zero(power_commutator_residual(ctx.spec, conn, b, k, s).comps[0],
                         "power commutator k=" + std::to_string(k));
      }
    }
}

void check_thm1(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Connection conns[3] = {Connection::trivial(1), rank1_omega(n), rank2_omega(n)};
  for (int it = 0; it < 3; ++it) {
    Beltrami b = random_beltrami(rng, n);
    for (const Connection& conn : conns) {
      for (Word w : sweep_words(ctx)) {
        EValuedForm s(conn.rank, n);
        s.comps[0].add_term(w, Scalar::one());
        if (conn.rank > 1) s.comps[conn.rank - 1].add_term(w, Scalar::i());
        EValuedForm r = extension_residual(ctx.spec, conn, b, s);
        for (const Form& f : r.comps) rec.require_zero(f, "extension residual");
        if (rec.status == CheckStatus::Fail) return;
      }
    }
  }
}

void check_cor3(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 3; ++it) {
    Beltrami b = random_beltrami(rng, n);
    VectorForm pv = b.vector_form();
    VectorForm br = fn_bracket(ctx.spec, pv, pv);
    VectorForm corr = contract_into(br, pv) - contract_into(pv, br);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      Form lhs = exp_contraction(-pv, exterior_d(ctx.spec, exp_contraction(pv, a)));
      Form rhs = exterior_d(ctx.spec, a) - gen_lie_d(ctx.spec, pv, a) -
                 contract(Scalar::rational(1, 2) * br, a) -
                 contract(Scalar::rational(1, 6) * corr, a);
      rec.require_zero(lhs - rhs, "conjugated d");
      if (rec.status == CheckStatus::Fail) return;
    }
  }
}

void check_cor4(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 3; ++it) {
    Beltrami b = random_beltrami(rng, n);
    VectorForm pv = b.vector_form();
    AbcParts parts = abc_decompose(fn_bracket(ctx.spec, pv, pv));
    VectorForm mc = maurer_cartan(ctx.spec, b);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      Form lhs = exp_contraction(-pv, exterior_d(ctx.spec, exp_contraction(pv, a)));
      Form mu_comm = d_component(ctx.spec, contract(pv, a), DPart::Mu) -
                     contract(pv, d_component(ctx.spec, a, DPart::Mu));
      Form del_comm = d_component(ctx.spec, contract(pv, a), DPart::Del) -
                      contract(pv, d_component(ctx.spec, a, DPart::Del));
      Form rhs = exterior_d(ctx.spec, a) + mu_comm + del_comm -
                 contract(Scalar::rational(1, 2) * (parts.b + parts.c), a) + contract(mc, a);
      rec.require_zero(lhs - rhs, "MC-operator form of the conjugation");
      if (rec.status == CheckStatus::Fail) return;
    }
  }
}

void check_mc_reduction(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  bool integrable = nijenhuis(ctx.spec).is_zero();
  for (int it = 0; it < 8; ++it) {
    Beltrami b = random_beltrami(rng, n);
    VectorForm mc = maurer_cartan(ctx.spec, b);
    int p = 0, q = 0;
    bool anti = false;
    rec.require(mc.homogeneous(&p, &q, &anti), "MC must be homogeneous");
    if (!mc.is_zero()) rec.require(p == 0 && q == 2 && !anti, "MC type (0,2)⊗T^{1,0}");
    if (integrable) {
      VectorForm pv = b.vector_form();
      VectorForm reduced =
          vf_dbar(ctx.spec, pv) -
          Scalar::rational(1, 2) * fn_bracket(ctx.spec, pv, pv);
      rec.require_zero(mc - reduced, "integrable MC reduction");
    }
  }
}

// ------------------------------------------------------------ decomposition

void check_lemma8(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Connection conns[2] = {Connection::trivial(1), rank1_omega(n)};
  for (int k = 2; k <= 4; ++k)
    for (int it = 0; it < 2; ++it) {
      Beltrami b = random_beltrami(rng, n);
      for (const Connection& conn : conns)
        for (DPart part : kDParts) {
          EValuedForm s(1, n);
          s.comps[0] = random_form(rng, n, static_cast<int>(rng.below(n + 1)),
                                   static_cast<int>(rng.below(n + 1)));
          rec.require_zero(
              power_commutator_residual_part(ctx.spec, conn, b, part, k, s).comps[0],
              std::string("typewise powers, part ") + dpart_name(part));
        }
    }
}

void check_thm4(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  Connection conns[2] = {rank1_omega(n), rank2_omega(n)};
  for (int it = 0; it < 2; ++it) {
    Beltrami b = random_beltrami(rng, n);
    for (const Connection& conn : conns)
      for (Word w : sweep_words(ctx)) {
        EValuedForm s(conn.rank, n);
        s.comps[0].add_term(w, Scalar::one());
        if (conn.rank > 1) s.comps[1].add_term(w, Scalar::rational(1, 2));
        for (DPart part : kDParts) {
          EValuedForm r = decomposed_extension_residual_conn(ctx.spec, conn, b, part, s);
          for (const Form& f : r.comps)
            rec.require_zero(f, std::string("connection split, part ") + dpart_name(part));
        }
        if (rec.status == CheckStatus::Fail) return;
      }
  }
}

void check_cor5(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 3; ++it) {
    Beltrami b = random_beltrami(rng, n);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      Form total(n);
      for (DPart part : kDParts) {
        Form r = decomposed_extension_residual(ctx.spec, b, part, a);
        rec.require_zero(r, std::string("typewise residual, part ") + dpart_name(part));
        total += r;
      }
      EValuedForm s(1, n);
      s.comps[0] = a;
      Form full = extension_residual(ctx.spec, Connection::trivial(1), b, s).comps[0];
      rec.require_zero(total - full, "parts must sum to the full residual");
      if (rec.status == CheckStatus::Fail) return;
    }
  }
}

// ---------------------------------------------------------------- ochain

void check_lemma6(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, n);
    VectorForm pv = b.vector_form(), pbv = b.bar_vector_form();
    VectorForm o3 = identity_endo(n) -
                    block_vf(n, b.bar_matrix() * b.matrix(), true, true) + pbv;
    for (uint32_t k = 0; k < n; ++k) {
      Form tk = Form::theta(n, k), tkb = Form::theta(n, n + k);
      rec.require_zero(exp_contraction(pv, contract(o3, tk)) - exp_contraction(pv, tk),
                       "holomorphic row");
      rec.require_zero(exp_contraction(pv, contract(o3, tkb)) - tkb - contract(pbv, tkb),
                       "antiholomorphic row");
    }
  }
}

void check_lemma9(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    VectorForm row = block_vf(n, ds.transition().inv_anti, true, true) -
                     block_vf(n, b.bar_matrix() * ds.transition().inv_holo, true, false);
    for (uint32_t k = 0; k < n; ++k) {
      Form tkb = Form::theta(n, n + k);
      rec.require_zero(ds.exp_pair(contract(row, tkb)) - tkb, "inverse row reproduces θ^k̄");
    }
  }
}

void check_lemma12(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 3; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    VectorForm pv = b.vector_form();
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(exp_contraction(-pv, ds.exp_pair(a)) - finv_apply(ds.o3_endo(), a),
                       "first composition");
      rec.require_zero(
          ds.exp_pair_inverse(exp_contraction(pv, a)) - finv_apply(ds.o1_endo(), a),
          "second composition");
      if (rec.status == CheckStatus::Fail) return;
    }
  }
}

void check_lemma18(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    for (int p = 0; p <= static_cast<int>(n); ++p)
      for (int q = 0; q <= static_cast<int>(n); ++q) {
        if (p + q > ctx.max_degree) continue;
        Form a = random_form(rng, n, p, q);
        Form image = ds.exp_pair(a);
        rec.require(ds.exp_pair_inverse(image) == a, "explicit inverse (left)");
        rec.require(ds.exp_pair(ds.exp_pair_inverse(a)) == a, "explicit inverse (right)");
        if (!image.is_zero()) {
          Form def = ds.to_deformed(image);
          int pp, qq;
          rec.require(def.homogeneous(&pp, &qq) && pp == p && qq == q,
                      "image type (p,q) under J_φ");
        }
      }
  }
}

void check_real_operator(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    Form a = random_form(rng, n, static_cast<int>(rng.below(n + 1)),
                         static_cast<int>(rng.below(n + 1)));
    rec.require_zero(conjugate(ds.exp_pair(a)) - ds.exp_pair(conjugate(a)),
                     "commutes with conjugation");
  }
}

void check_finv_nonadditive(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Matrix holo(2 * n, 2 * n), anti(2 * n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    holo.at(i, i) = Scalar::one();
    anti.at(n + i, n + i) = Scalar::one();
  }
  Form mixed = wedge(Form::theta(n, 0), Form::theta(n, n));  // θ^1∧θ^1̄
  rec.require(finv_apply(holo + anti, mixed) == mixed, "identity acts trivially");
  rec.require(finv_apply(holo, mixed).is_zero() && finv_apply(anti, mixed).is_zero(),
              "split parts annihilate the witness");
  rec.require(finv_apply(holo + anti, mixed) !=
                  finv_apply(holo, mixed) + finv_apply(anti, mixed),
              "non-additivity witness");
  for (uint32_t c = 0; c < 2 * n; ++c) {
    Form one = Form::theta(n, c);
    rec.require(finv_apply(holo + anti, one) == finv_apply(holo, one) + finv_apply(anti, one),
                "additive on 1-forms");
  }
}

void check_basis_independence(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    VectorForm inv_vf = endo_vector_form(n, ds.transition().phi_inv);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(
          contract(inv_vf, a) - ds.to_base(contract(inv_vf, ds.to_deformed(a))),
          "coefficients act the same in both coframes");
    }
  }
}

void check_weighted_row(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, n);
    TransitionMatrix tr = build_transition(b);
    Matrix pbar = b.bar_matrix();
    VectorForm weighted = block_vf(n, tr.inv_anti * pbar, true, false);
    VectorForm anti_endo = block_vf(n, Matrix::identity(n) - pbar * b.matrix(), true, true);
    VectorForm pbv = b.bar_vector_form();
    for (uint32_t k = 0; k < n; ++k) {
      Form tkb = Form::theta(n, n + k);
      rec.require_zero(contract(weighted, contract(anti_endo, tkb)) - contract(pbv, tkb),
                       "weighted contraction row");
    }
  }
}

void check_thm3(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 2; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      rec.require_zero(exterior_d(ctx.spec, ds.exp_pair(a)) - ds.exp_pair(ds.o_chain(a)),
                       "d∘e = e∘(O1 O2 O3)");
      if (rec.status == CheckStatus::Fail) return;
    }
  }
}

void check_thm2(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 2; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    for (Word w : sweep_words(ctx)) {
      Form a = basis_form(n, w);
      Form sum(n);
      for (DPart part : kDParts) {
        Form piece = ds.o_chain_part(a, part);
        sum += piece;
        rec.require_zero(ds.native_component(part, ds.exp_pair(a)) - ds.exp_pair(piece),
                         std::string("partwise identity ") + dpart_name(part));
      }
      rec.require_zero(sum - ds.o_chain(a), "parts resolve the chain");
      if (rec.status == CheckStatus::Fail) return;
    }
  }
}

// ------------------------------------------------------------ applications

void check_prop2(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  std::vector<Beltrami> flats = mc_flat_beltramis(ctx, rng, 8);
  if (flats.empty()) {
    rec.status = CheckStatus::Skip;
    rec.reason = "no MC-flat Beltrami differential found";
    return;
  }
  std::vector<Form> omegas;
  Form top(n);
  top.add_term((1u << n) - 1u, Scalar::one());
  omegas.push_back(top);
  omegas.push_back(Scalar(mpq_class(1, 2), mpq_class(1)) * top);
  for (const auto& [name, f] : ctx.manifest.forms) {
    int p, q;
    if (f.homogeneous(&p, &q) && p == static_cast<int>(n) && q == 0 && !f.is_zero())
      omegas.push_back(f);
  }
  for (const Beltrami& b : flats) {
    DeformedStructure ds(ctx.spec, b);
    for (const Form& omega : omegas)
      rec.require(n0_closedness_predicate(ds, omega) == n0_closed_native(ds, omega),
                  "dual-route disagreement");
  }
}

void check_thm5(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  std::vector<Beltrami> flats = mc_flat_beltramis(ctx, rng, 8);
  Form top(n);
  top.add_term((1u << n) - 1u, Scalar::one());
  int admitted = 0;
  for (const Beltrami& b : flats) {
    DeformedStructure ds(ctx.spec, b);
    bool pred;
    try {
      pred = dolbeault_class_predicate(ds, top);
    } catch (const Error&) {
      continue;  // preconditions reject Ω on this frame
    }
    rec.require(pred == dolbeault_class_native(ds, top), "dual-route disagreement");
    ++admitted;
  }
  if (admitted == 0) {
    rec.status = CheckStatus::Skip;
    rec.reason = "preconditions admit no instance on this frame";
  }
}

void check_thm6(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 3; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    for (int q = 0; q <= static_cast<int>(n); ++q) {
      for (Word w : words_of_bidegree(n, static_cast<int>(n), q)) {
        Form xi(n);
        xi.add_term(w, random_small_nonzero(rng));
        rec.require(nq_closedness_predicate(ds, xi) == nq_closed_native(ds, xi),
                    "dual-route disagreement");
      }
      Form xi = random_form(rng, n, static_cast<int>(n), q);
      rec.require(nq_closedness_predicate(ds, xi) == nq_closed_native(ds, xi),
                  "dual-route disagreement (random form)");
    }
  }
}

void check_projection_rows(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  for (int it = 0; it < 4; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure ds(ctx.spec, b);
    VectorForm c_vf = block_vf(n, ds.transition().inv_anti, true, true);
    VectorForm d_vf = weighted_phibar(ds);
    Matrix outer = Matrix::identity(2 * n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        outer.at(n + i, n + j) = ds.transition().inv_anti.at(i, j);
    for (Word w : words_of_bidegree(n, static_cast<int>(n), 1)) {
      Form theta = basis_form(n, w);
      rec.require_zero(
          project(finv_apply(ds.o1_endo(), theta), static_cast<int>(n), 1) -
              contract(c_vf, theta),
          "(n,1) row");
    }
    for (Word w : words_of_bidegree(n, static_cast<int>(n) - 1, 2)) {
      Form xi = basis_form(n, w);
      Form full = finv_apply(ds.o1_endo(), xi);
      rec.require_zero(project(full, static_cast<int>(n), 1) +
                           contract(c_vf, contract(d_vf, xi)),
                       "(n-1,2) → (n,1) row");
      rec.require_zero(project(full, static_cast<int>(n) - 1, 2) - finv_apply(outer, xi),
                       "(n-1,2) row");
    }
  }
}

void check_integrable_reduction(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  if (!nijenhuis(ctx.spec).is_zero()) {
    rec.status = CheckStatus::Skip;
    rec.reason = "frame is not integrable";
    return;
  }
  Rng rng(ctx.seed ^ fnv1a(rec.name));
  std::vector<Beltrami> flats = mc_flat_beltramis(ctx, rng, 6);
  Form top(n);
  top.add_term((1u << n) - 1u, Scalar::one());
  for (const Beltrami& b : flats) {
    DeformedStructure ds(ctx.spec, b);
    rec.require_zero(ds.abc().b, "B(φ,φ) vanishes on integrable frames");
    Form reduced = d_component(ctx.spec, top, DPart::DelBar) +
                   d_component(ctx.spec, contract(ds.phi_vf(), top), DPart::Del);
    rec.require_zero(n0_closedness_condition(ds, top) - reduced, "reduced condition");
  }
}

// -------------------------------------------------------------- cohomology

void check_cohomology_dimensions(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  bool abelian = true;
  for (uint32_t g = 0; g < n && abelian; ++g)
    if (!ctx.spec.dtheta(g).is_zero()) abelian = false;
  auto binom = [](int m, int k) {
    if (k < 0 || k > m) return 0L;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
    return r;
  };
  for (int p = 0; p <= static_cast<int>(n); ++p)
    for (int q = 0; q <= static_cast<int>(n); ++q) {
      MuBarCohomology mb = mu_bar_cohomology(ctx.spec, p, q);
      DolbeaultCohomology dol = dolbeault_cohomology(ctx.spec, p, q);
      int full = static_cast<int>(words_of_bidegree(n, p, q).size());
      rec.require(0 <= dol.dim && dol.dim <= mb.dim && mb.dim <= full,
                  "dimension monotonicity");
      rec.require(dol.dim_mubar == mb.dim, "layer dimensions agree");
      for (const Form& r : mb.representatives)
        rec.require_zero(d_component(ctx.spec, r, DPart::MuBar), "representative closure");
      for (const Form& r : dol.representatives)
        rec.require_zero(d_component(ctx.spec, r, DPart::MuBar),
                         "Dolbeault representative closure");
      // second route for the layer dimension: column minus rank counting
      CochainBasis cb = cochain_basis(ctx.spec, p, q);
      CochainBasis above = cochain_basis(ctx.spec, p + 1, q - 2);
      int alt = full - static_cast<int>(cb.mubar_out.rank()) -
                static_cast<int>(above.mubar_out.rank());
      rec.require(mb.dim == alt, "rank route disagrees");
      if (abelian)
        rec.require(dol.dim == binom(static_cast<int>(n), p) * binom(static_cast<int>(n), q),
                    "torus dimensions");
    }
}

void check_induced_welldefined(const SuiteContext& ctx, CheckRecord& rec) {
  uint32_t n = ctx.spec.n();
  for (int p = 0; p <= static_cast<int>(n); ++p)
    for (int q = 0; q <= static_cast<int>(n); ++q) {
      try {
        dolbeault_cohomology(ctx.spec, p, q);
      } catch (const Error& e) {
        rec.require(false, e.what());
        return;
      }
    }
}

std::vector<CheckDef> build_registry() {
  return {
      {"validate/frame_integrity", "validate", "d2_split", check_frame_integrity},
      {"validate/canonical_words", "validate", "canonical_form", check_canonical_words},
      {"validate/projection_resolution", "validate", "bidegree_projection",
       check_projection_resolution},
      {"validate/nijenhuis_quarter", "validate", "nijenhuis", check_nijenhuis_quarter},
      {"bracket/contract_general_agreement", "bracket", "contraction_defs",
       check_contract_general},
      {"bracket/anticommutation", "bracket", "commutator7", check_anticommutation},
      {"bracket/lemma17_containment", "bracket", "lemma17", check_lemma17},
      {"bracket/two_expansions", "bracket", "fnbracket", check_two_expansions},
      {"bracket/lemma5_commutators", "bracket", "lemma5", check_lemma5},
      {"bracket/lemma11_commutator", "bracket", "lemma11", check_lemma11},
      {"bracket/lemma3_commute", "bracket", "lemma3", check_lemma3},
      {"bracket/corollary2", "bracket", "corollary2", check_corollary2},
      {"bracket/lemma7_mixed_degree", "bracket", "lemma7", check_lemma7},
      {"bracket/four_type_split", "bracket", "type_split", check_four_split},
      {"bracket/dbar_contraction", "bracket", "dbar_i_phi", check_dbar_contraction},
      {"bracket/tian_todorov", "bracket", "tian_todorov", check_tian_todorov},
      {"extension/prop1_powers", "extension", "prop1", check_prop1},
      {"extension/thm1_connections", "extension", "thm1", check_thm1},
      {"extension/cor3_exterior_d", "extension", "cor3", check_cor3},
      {"extension/cor4_mc_operator", "extension", "cor4", check_cor4},
      {"extension/mc_reduction", "extension", "mcequation", check_mc_reduction},
      {"decomposition/lemma8_powers", "decomposition", "lemma8", check_lemma8},
      {"decomposition/thm4_connection_split", "decomposition", "thm4", check_thm4},
      {"decomposition/cor5_typewise", "decomposition", "cor5", check_cor5},
      {"ochain/lemma6_coframe_rows", "ochain", "lemma6", check_lemma6},
      {"ochain/lemma9_inverse_row", "ochain", "lemma9", check_lemma9},
      {"ochain/lemma12_compositions", "ochain", "lemma12", check_lemma12},
      {"ochain/lemma18_bijection", "ochain", "lemma18", check_lemma18},
      {"ochain/real_operator", "ochain", "real_operator", check_real_operator},
      {"ochain/finv_nonadditive", "ochain", "remark2", check_finv_nonadditive},
      {"ochain/coefficient_basis_independence", "ochain", "basis_independence", check_basis_independence},
      {"ochain/weighted_contraction_row", "ochain", "remark1", check_weighted_row},
      {"ochain/thm3_conjugation", "ochain", "thm3", check_thm3},
      {"ochain/thm2_native_parts", "ochain", "thm2", check_thm2},
      {"applications/prop2_dual_route", "applications", "prop2", check_prop2},
      {"applications/thm5_dual_route", "applications", "thm5", check_thm5},
      {"applications/thm6_dual_route", "applications", "thm6", check_thm6},
      {"applications/projection_rows", "applications", "projection_rows", check_projection_rows},
      {"applications/integrable_reduction", "applications", "prop2_integrable",
       check_integrable_reduction},
      {"cohomology/dimensions", "cohomology", "mubar_dolbeault", check_cohomology_dimensions},
      {"cohomology/induced_welldefined", "cohomology", "null_homotopy",
       check_induced_welldefined},
  };
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "validate", "bracket", "extension", "decomposition", "ochain", "applications",
      "cohomology"};
  return names;
}

Report run_suites(const Manifest& manifest, const std::vector<std::string>& suites,
                  uint64_t seed, int max_degree) {
  FrameSpec spec = manifest.to_spec();
  SuiteContext ctx{spec, manifest, seed, max_degree};
  Report report;
  report.suite = suites.size() == 1 ? suites[0] : "custom";
  report.seed = seed;
  report.n = manifest.n;
  report.max_degree = max_degree;
  auto wanted = [&](const std::string& s) {
    for (const std::string& w : suites)
      if (w == s || w == "all") return true;
    return false;
  };
  for (const CheckDef& def : check_registry()) {
    if (!wanted(def.suite)) continue;
    CheckRecord rec;
    rec.name = def.name;
    rec.suite = def.suite;
    rec.anchor = def.anchor;
    auto start = std::chrono::steady_clock::now();
    try {
      def.run(ctx, rec);
    } catch (const Error& e) {
      if (e.code() == Errc::SingularTransition) {
        rec.status = CheckStatus::Skip;
        rec.reason = e.what();
      } else {
        rec.status = CheckStatus::Fail;
        rec.reason = e.what();
      }
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    report.checks.push_back(std::move(rec));
  }
  report.sort_checks();
  return report;
}

Report run_suite(const Manifest& manifest, const std::string& suite, uint64_t seed,
                 int max_degree) {
  bool known = suite == "all";
  for (const std::string& s : suite_names()) known = known || s == suite;
  if (!known) fail(Errc::ParseError, "unknown suite '" + suite + "'");
  Report r = run_suites(manifest, {suite}, seed, max_degree);
  r.suite = suite;
  return r;
}

}  // namespace acx
