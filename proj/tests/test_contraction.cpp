#include "acx/contraction.hpp"
#include "acx/fixtures.hpp"
#include "acx/random.hpp"
#include "doctest.h"

using namespace acx;

namespace {

Form th(uint32_t n, std::initializer_list<uint32_t> codes, Scalar c = Scalar::one()) {
  return Form::monomial(n, std::vector<uint32_t>(codes), c);
}

VectorForm single(uint32_t n, std::initializer_list<uint32_t> word, uint32_t vec,
                  Scalar c = Scalar::one()) {
  VectorForm out(n);
  Form f = Form::monomial(n, std::vector<uint32_t>(word), c);
  for (const auto& [w, s] : f.terms()) out.add(w, vec, s);
  return out;
}

// Lemma-17-style three-term bracket for decomposable (0,1)(T^{1,0}) inputs;
// written independently of fn_bracket as a cross-check.
VectorForm bracket_three_term(const FrameSpec& spec, const VectorForm& phi,
                              const VectorForm& psi) {
  VectorForm out(spec.n());
  for (const auto& [k1, c1] : phi.terms) {
    Form rho(spec.n());
    rho.add_term(k1.first, c1);
    VectorField X = VectorField::basis(spec.n(), k1.second);
    for (const auto& [k2, c2] : psi.terms) {
      Form tau(spec.n());
      tau.add_term(k2.first, c2);
      VectorField Y = VectorField::basis(spec.n(), k2.second);
      VectorField br = vector_bracket(spec, X, Y);
      Form rt = wedge(rho, tau);
      for (const auto& [g, c] : br.coeff)
        for (const auto& [w, s] : rt.terms()) out.add(w, g, s * c);
      Form mid = wedge(rho, lie_derivative_form(spec, X, tau));
      for (const auto& [w, s] : mid.terms()) out.add(w, k2.second, s);
      Form last = wedge(lie_derivative_form(spec, Y, rho), tau);
      for (const auto& [w, s] : last.terms()) out.add(w, k1.second, -s);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("interior product basics") {
  uint32_t n = 2;
  VectorField e1 = VectorField::basis(n, 0);
  CHECK(interior(e1, Form::theta(n, 0)) == Form::unit(n));
  CHECK(interior(e1, Form::theta(n, 3)).is_zero());
  CHECK(interior(e1, th(n, {0, 1})) == Form::theta(n, 1));
  VectorField e2b = VectorField::basis(n, idx_anti(n, 2));
  CHECK(interior(e2b, th(n, {0, 3})) == Scalar(-1) * Form::theta(n, 0));

  // anti-derivation rule
  Rng rng(3);
  FrameSpec spec = fixtures::hybrid3();
  for (int it = 0; it < 20; ++it) {
    VectorField x(3);
    x.add(rng.below(6), random_small_nonzero(rng));
    int p = static_cast<int>(rng.below(2)), q = static_cast<int>(rng.below(2));
    Form a = random_form(rng, 3, p, q);
    Form b = random_form(rng, 3, static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2)));
    int sgn = (p + q) % 2 ? -1 : 1;
    CHECK(interior(x, wedge(a, b)) ==
          wedge(interior(x, a), b) + Scalar(sgn) * wedge(a, interior(x, b)));
  }
}

TEST_CASE("contraction by vector-valued forms") {
  uint32_t n = 2;
  VectorForm rho = single(n, {idx_anti(n, 1)}, 0);  // θ1b ⊗ e1
  CHECK(contract(rho, Form::theta(n, 0)) == Form::theta(n, idx_anti(n, 1)));
  CHECK(contract(rho, th(n, {0, 1})) == th(n, {1, 2}, Scalar(-1)));

  // identity endomorphism scales by total degree
  VectorForm eye(n);
  for (uint32_t c = 0; c < 2 * n; ++c) eye.add(1u << c, c, Scalar::one());
  for (Word w = 0; w < (1u << (2 * n)); ++w) {
    Form a(n);
    a.add_term(w, Scalar::one());
    CHECK(contract(eye, a) == Scalar(word_degree(w)) * a);
  }
}

TEST_CASE("permutation-sum contraction agrees with the wedge form") {
  uint32_t n = 3;
  CHECK(contract_general(VectorForm(n), Form::theta(n, 0)).is_zero());

  // decomposable sweep: words of degree <= 2 against every basis form
  for (Word rw = 0; rw < (1u << (2 * n)); ++rw) {
    if (word_degree(rw) > 2) continue;
    for (uint32_t vec = 0; vec < 2 * n; ++vec) {
      VectorForm rho(n);
      rho.add(rw, vec, Scalar::rational(1, 2));
      for (Word aw = 0; aw < (1u << (2 * n)); ++aw) {
        Form a(n);
        a.add_term(aw, Scalar::one());
        CHECK(contract(rho, a) == contract_general(rho, a));
      }
    }
  }

  // and on random non-decomposable data
  Rng rng(5);
  for (int it = 0; it < 10; ++it) {
    VectorForm rho = random_vector_form(rng, n, static_cast<int>(rng.below(2)),
                                        static_cast<int>(rng.below(2)), rng.below(2) == 0);
    Form a = random_form(rng, n, static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)));
    CHECK(contract(rho, a) == contract_general(rho, a));
  }
}

TEST_CASE("exponential contraction") {
  uint32_t n = 3;
  Scalar t = Scalar::rational(1, 2);
  VectorForm phi = single(n, {idx_anti(n, 1)}, 0, t);  // t·θ1b ⊗ e1

  Rng rng0(9);
  Form a = random_form(rng0, n, 1, 1);
  CHECK(exp_contraction(VectorForm(n), a) == a);

  CHECK(exp_contraction(phi, Form::theta(n, 0)) ==
        Form::theta(n, 0) + t * Form::theta(n, idx_anti(n, 1)));
  CHECK(exp_contraction(phi, th(n, {0, 1})) == th(n, {0, 1}) - t * th(n, {1, 3}));

  // inverse and type guard
  Rng rng(11);
  for (int it = 0; it < 15; ++it) {
    Beltrami b = random_beltrami(rng, n);
    VectorForm pv = b.vector_form();
    Form f = random_form(rng, n, static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)));
    CHECK(exp_contraction(-pv, exp_contraction(pv, f)) == f);
  }
  VectorForm bad = single(n, {idx_holo(n, 1)}, 0);
  CHECK_THROWS_AS(exp_contraction(bad, a), Error);
}

TEST_CASE("bracket vanishes on the torus and on the diagonal family") {
  FrameSpec f0 = fixtures::torus(2);
  Rng rng(13);
  for (int it = 0; it < 10; ++it) {
    VectorForm phi = random_vector_form(rng, 2, 0, 1, false);
    VectorForm psi = random_vector_form(rng, 2, 0, 1, false);
    CHECK(fn_bracket(f0, phi, psi).is_zero());
  }

  FrameSpec f2 = fixtures::mubar3();
  VectorForm phi_t = single(3, {idx_anti(3, 1)}, 0, Scalar::rational(1, 2));
  CHECK(fn_bracket(f2, phi_t, phi_t).is_zero());
}

TEST_CASE("bracket: two expansions and the three-term form agree") {
  Rng rng(17);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 6; ++it) {
      VectorForm phi = random_vector_form(rng, n, 0, 1, false);
      VectorForm psi = random_vector_form(rng, n, 0, 1, false);
      VectorForm five = fn_bracket(spec, phi, psi);
      CHECK(five == fn_bracket_collected(spec, phi, psi));
      CHECK(five == bracket_three_term(spec, phi, psi));
      // Lemma 17 containment: decomposition must not leak
      CHECK_NOTHROW(abc_decompose(five));
      // graded antisymmetry for degree-1 arguments
      CHECK(five == fn_bracket(spec, psi, phi));
    }
  }
}

TEST_CASE("bracket decomposition and error path") {
  AbcParts z = abc_decompose(VectorForm(3));
  CHECK(z.a.is_zero());
  CHECK(z.b.is_zero());
  CHECK(z.c.is_zero());

  FrameSpec f2 = fixtures::mubar3();
  VectorForm phi_t = single(3, {idx_anti(3, 1)}, 0, Scalar::rational(1, 2));
  AbcParts parts = abc_decompose(fn_bracket(f2, phi_t, phi_t));
  CHECK(parts.a.is_zero());
  CHECK(parts.b.is_zero());
  CHECK(parts.c.is_zero());

  VectorForm leak = single(3, {0, 1}, 0);  // (2,0) ⊗ T^{1,0}
  CHECK_THROWS_AS(abc_decompose(leak), Error);

  // hybrid3 has a nonzero bracket with all the right types
  FrameSpec hy = fixtures::hybrid3();
  Rng rng(19);
  for (int it = 0; it < 10; ++it) {
    VectorForm phi = random_vector_form(rng, 3, 0, 1, false);
    VectorForm psi = random_vector_form(rng, 3, 0, 1, false);
    AbcParts p = abc_decompose(fn_bracket(hy, phi, psi));
    int pp, qq;
    bool anti;
    CHECK((p.a.is_zero() || (p.a.homogeneous(&pp, &qq, &anti) && pp == 0 && qq == 2 && !anti)));
    CHECK((p.b.is_zero() || (p.b.homogeneous(&pp, &qq, &anti) && pp == 1 && qq == 1 && !anti)));
    CHECK((p.c.is_zero() || (p.c.homogeneous(&pp, &qq, &anti) && pp == 0 && qq == 2 && anti)));
  }
}

TEST_CASE("contraction commutators sorted by type") {
  Rng rng(23);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 4; ++it) {
      VectorForm A = random_vector_form(rng, n, 0, 2, false);
      VectorForm B = random_vector_form(rng, n, 1, 1, false);
      VectorForm C = random_vector_form(rng, n, 0, 2, true);
      VectorForm xi = random_vector_form(rng, n, 0, 1, false);
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        Form a(n);
        a.add_term(w, Scalar::one());
        CHECK(contract(A, contract(xi, a)) == contract(xi, contract(A, a)));
        CHECK(contract(B, contract(xi, a)) - contract(xi, contract(B, a)) ==
              -contract(contract_into(xi, B), a));
        CHECK(contract(C, contract(xi, a)) - contract(xi, contract(C, a)) ==
              contract(contract_into(C, xi), a));
      }
    }
  }
}

TEST_CASE("bracket contraction commutator (three-space form)") {
  Rng rng(29);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 3; ++it) {
      VectorForm phi = random_vector_form(rng, n, 0, 1, false);
      VectorForm psi = random_vector_form(rng, n, 0, 1, false);
      VectorForm xi = random_vector_form(rng, n, 0, 1, false);
      VectorForm br = fn_bracket(spec, phi, psi);
      AbcParts parts = abc_decompose(br);
      VectorForm rhs_arg = contract_into(parts.c, xi) - contract_into(xi, parts.b);
      VectorForm rhs_arg_raw = contract_into(br, xi) - contract_into(xi, br);
      CHECK(rhs_arg == rhs_arg_raw);
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        Form a(n);
        a.add_term(w, Scalar::one());
        CHECK(contract(br, contract(xi, a)) - contract(xi, contract(br, a)) ==
              contract(rhs_arg, a));
      }
    }
  }
}

TEST_CASE("mixed contraction with a corrected argument commutes") {
  Rng rng(31);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    uint32_t n = spec.n();
    for (int it = 0; it < 3; ++it) {
      VectorForm phi = random_vector_form(rng, n, 0, 1, false);
      VectorForm xi = random_vector_form(rng, n, 0, 1, false);
      VectorForm psi = random_vector_form(rng, n, 0, 2, false) +
                       random_vector_form(rng, n, 1, 1, false) +
                       random_vector_form(rng, n, 0, 2, true);
      VectorForm arg = contract_into(psi, xi) - contract_into(xi, psi);
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        Form a(n);
        a.add_term(w, Scalar::one());
        CHECK(contract(phi, contract(arg, a)) == contract(arg, contract(phi, a)));
      }
    }
  }
}

TEST_CASE("anticommutation residual vanishes") {
  Rng rng(37);
  uint32_t n = 3;
  FrameSpec spec = fixtures::mubar3();
  (void)spec;
  for (int it = 0; it < 6; ++it) {
    for (int q = 1; q <= 2; ++q)
      for (int s = 1; s <= 2; ++s) {
        VectorForm phi = random_vector_form(rng, n, 0, q, false);
        VectorForm psi = random_vector_form(rng, n, 0, s, false);
        for (Word w = 0; w < (1u << (2 * n)); ++w) {
          Form a(n);
          a.add_term(w, Scalar::one());
          CHECK(anticommutation_residual(phi, psi, a).is_zero());
        }
      }
  }
  VectorForm bad = single(n, {idx_holo(n, 1)}, 0);
  CHECK_THROWS_AS(anticommutation_residual(bad, bad, Form::unit(n)), Error);
}

TEST_CASE("matrix pictures of double contraction") {
  // i_φ φ̄ has the coefficient matrix φ̄·φ, and i_φ̄ φ the matrix φ·φ̄
  Rng rng(41);
  uint32_t n = 3;
  for (int it = 0; it < 10; ++it) {
    Beltrami b = random_beltrami(rng, n);
    Matrix m = b.matrix(), mb = b.bar_matrix();
    Matrix prod_ab = mb * m;  // acts on θ^{j̄}
    VectorForm lhs = contract_into(b.vector_form(), b.bar_vector_form());
    VectorForm expect(n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) expect.add(1u << (n + j), n + i, prod_ab.at(i, j));
    CHECK(lhs == expect);

    Matrix prod_ba = m * mb;
    VectorForm lhs2 = contract_into(b.bar_vector_form(), b.vector_form());
    VectorForm expect2(n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) expect2.add(1u << j, i, prod_ba.at(i, j));
    CHECK(lhs2 == expect2);
  }
}

TEST_CASE("extended dbar on vector forms") {
  FrameSpec f2 = fixtures::mubar3();
  uint32_t n = 3;
  // [∂̄, i_φ] = i_{∂̄φ} for φ ∈ A^{0,q}(T^{1,0})
  Rng rng(43);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t sn = spec.n();
    for (int it = 0; it < 3; ++it) {
      for (int q = 1; q <= 2; ++q) {
        VectorForm phi = random_vector_form(rng, sn, 0, q, false);
        VectorForm dphi = vf_dbar(spec, phi);
        // graded commutator with |i_φ| = q-1:
        // [∂̄, i_φ] = ∂̄∘i_φ - (-1)^{q-1} i_φ∘∂̄ = i_{∂̄φ}
        int sgn = ((q - 1) & 1) ? -1 : 1;
        for (Word w = 0; w < (1u << (2 * sn)); ++w) {
          Form a(sn);
          a.add_term(w, Scalar::one());
          Form lhs = d_component(spec, contract(phi, a), DPart::DelBar) -
                     Scalar(sgn) * contract(phi, d_component(spec, a, DPart::DelBar));
          CHECK(lhs == contract(dphi, a));
        }
      }
    }
  }
  // the extension rejects wrong types
  CHECK_THROWS_AS(vf_dbar(f2, single(n, {idx_holo(n, 1)}, 0)), Error);
}

TEST_CASE("connections: Leibniz, components, examples") {
  FrameSpec f0 = fixtures::torus(2);
  uint32_t n = 2;
  Connection triv = Connection::trivial(1);
  Connection c1;
  c1.rank = 1;
  c1.omega = {{Form::theta(n, 0)}};

  EValuedForm one(1, n);
  one.comps[0] = Form::unit(n);
  CHECK(nabla_apply(f0, c1, one).comps[0] == Form::theta(n, 0));
  EValuedForm t2(1, n);
  t2.comps[0] = Form::theta(n, 1);
  CHECK(nabla_apply(f0, c1, t2).comps[0] == th(n, {0, 1}));

  // ω = 0 reduces to componentwise d
  FrameSpec f2 = fixtures::mubar3();
  Rng rng(47);
  for (int it = 0; it < 5; ++it) {
    EValuedForm s(1, 3);
    s.comps[0] = random_form(rng, 3, static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)));
    CHECK(nabla_apply(f2, Connection::trivial(1), s).comps[0] == exterior_d(f2, s.comps[0]));
    // type components sum to the full connection
    Connection c2;
    c2.rank = 1;
    c2.omega = {{random_form(rng, 3, 1, 0) + random_form(rng, 3, 0, 1)}};
    EValuedForm total(1, 3);
    for (DPart part : kDParts) total += nabla_component(f2, c2, part, s);
    CHECK(total == nabla_apply(f2, c2, s));
    // Leibniz against scalar wedge
    Form a = random_form(rng, 3, 1, 1);
    EValuedForm as = s;
    as.comps[0] = wedge(a, s.comps[0]);
    EValuedForm lhs = nabla_apply(f2, c2, as);
    Form da = exterior_d(f2, a);
    EValuedForm rhs(1, 3);
    rhs.comps[0] = wedge(da, s.comps[0]) + wedge(a, nabla_apply(f2, c2, s).comps[0]);
    CHECK(lhs == rhs);
  }

  EValuedForm wrong(2, n);
  CHECK_THROWS_AS(nabla_apply(f0, triv, wrong), Error);
}

TEST_CASE("generalized Lie derivative and its bracket commutator") {
  FrameSpec f0 = fixtures::torus(2);
  Rng rng(53);
  // vanishes identically on the torus with ∇ = d
  for (int it = 0; it < 5; ++it) {
    VectorForm phi = random_vector_form(rng, 2, 0, 1, false);
    Form a = random_form(rng, 2, static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)));
    CHECK(gen_lie_d(f0, phi, a).is_zero());
  }

  // worked single-term case on the μ̄ frame: i_φ dθ^1 = 0 but
  // d(i_φ θ^1) = t·dθ^1̄ = t·θ^2∧θ^3, so L_φ θ^1 = -t·θ^2∧θ^3
  FrameSpec f2 = fixtures::mubar3();
  Scalar t = Scalar::rational(1, 2);
  VectorForm phi_t = single(3, {idx_anti(3, 1)}, 0, t);
  Form expect = contract(phi_t, exterior_d(f2, Form::theta(3, 0))) -
                exterior_d(f2, contract(phi_t, Form::theta(3, 0)));
  CHECK(gen_lie_d(f2, phi_t, Form::theta(3, 0)) == expect);
  CHECK(expect == Scalar(-1) * t * th(3, {1, 2}));

  // Corollary-style commutator with ∇ = d and with a nonzero connection
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    Connection conn;
    conn.rank = 2;
    conn.omega = {{Form(n), Form::theta(n, 0)}, {Form(n), Form(n)}};
    for (int it = 0; it < 3; ++it) {
      VectorForm phi = random_vector_form(rng, n, 0, 1, false);
      VectorForm psi = random_vector_form(rng, n, 0, 1, false);
      VectorForm br = fn_bracket(spec, phi, psi);
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        EValuedForm s(2, n);
        s.comps[0].add_term(w, Scalar::one());
        s.comps[1].add_term(w, Scalar(2));
        EValuedForm lhs = gen_lie(spec, phi, conn, ev_contract(psi, s)) -
                          ev_contract(psi, gen_lie(spec, phi, conn, s));
        CHECK(lhs == ev_contract(br, s));
      }
    }
  }
}

TEST_CASE("mixed-degree Lie commutator formula") {
  Rng rng(59);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    Connection conn;
    conn.rank = 1;
    conn.omega = {{Form::theta(n, 0) + Form::theta(n, n)}};
    for (int it = 0; it < 2; ++it) {
      for (int dp = 1; dp <= 2; ++dp)
        for (int ds = 1; ds <= 2; ++ds) {
          // decomposable mixed-type arguments
          Word wp = 0, ws = 0;
          while (word_degree(wp) != dp) wp = static_cast<Word>(rng.below(1u << (2 * n)));
          while (word_degree(ws) != ds) ws = static_cast<Word>(rng.below(1u << (2 * n)));
          VectorForm phi(n), psi(n);
          phi.add(wp, static_cast<uint32_t>(rng.below(2 * n)), random_small_nonzero(rng));
          psi.add(ws, static_cast<uint32_t>(rng.below(2 * n)), random_small_nonzero(rng));
          VectorForm br = fn_bracket(spec, phi, psi);
          VectorForm ipsi_phi = contract_into(psi, phi);
          int sgn = ((dp * (ds - 1)) & 1) ? -1 : 1;
          for (Word w = 0; w < (1u << (2 * n)); ++w) {
            EValuedForm s(1, n);
            s.comps[0].add_term(w, Scalar::one());
            EValuedForm lhs = gen_lie(spec, phi, conn, ev_contract(psi, s)) -
                              Scalar(sgn) * ev_contract(psi, gen_lie(spec, phi, conn, s));
            EValuedForm rhs = ev_contract(br, s) -
                              Scalar(sgn) * gen_lie(spec, ipsi_phi, conn, s);
            CHECK(lhs == rhs);
          }
        }
    }
  }
}

TEST_CASE("type-split commutator identities with d") {
  Rng rng(61);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 2; ++it) {
      VectorForm phi = random_vector_form(rng, n, 0, 1, false);
      VectorForm psi = random_vector_form(rng, n, 0, 1, false);
      AbcParts parts = abc_decompose(fn_bracket(spec, phi, psi));
      auto op = [&](DPart part, const Form& f) { return d_component(spec, f, part); };
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        Form a(n);
        a.add_term(w, Scalar::one());
        auto four = [&](DPart part) {
          return -op(part, contract(phi, contract(psi, a))) -
                 contract(psi, contract(phi, op(part, a))) +
                 contract(psi, op(part, contract(phi, a))) +
                 contract(phi, op(part, contract(psi, a)));
        };
        CHECK(four(DPart::Del) == contract(parts.a, a));
        CHECK(four(DPart::Mu) == contract(parts.b, a) + contract(parts.c, a));
        CHECK(four(DPart::DelBar).is_zero());
        CHECK(four(DPart::MuBar).is_zero());
      }
    }
  }
}

TEST_CASE("top-degree bracket contraction identities") {
  Rng rng(67);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    Form omega(n);
    omega.add_term((1u << n) - 1u, random_small_nonzero(rng));  // multiple of θ^1∧…∧θ^n
    for (int it = 0; it < 4; ++it) {
      VectorForm phi = random_vector_form(rng, n, 0, 1, false);
      VectorForm psi = random_vector_form(rng, n, 0, 1, false);
      VectorForm br = fn_bracket(spec, phi, psi);
      AbcParts parts = abc_decompose(br);
      auto del = [&](const Form& f) { return d_component(spec, f, DPart::Del); };
      auto mu = [&](const Form& f) { return d_component(spec, f, DPart::Mu); };
      Form pp = contract(phi, contract(psi, omega));
      Form lhs = contract(br, omega);
      Form rhs = -mu(pp) + contract(phi, del(contract(psi, omega))) - del(pp) +
                 contract(psi, del(contract(phi, omega)));
      CHECK(lhs == rhs);
      CHECK(contract(parts.c, omega).is_zero());
      CHECK(contract(parts.b, omega) == -mu(pp));
      CHECK(contract(parts.a, omega) ==
            contract(phi, del(contract(psi, omega))) - del(pp) +
                contract(psi, del(contract(phi, omega))));
    }
  }
}
