#include "acx/deformation.hpp"
#include "acx/fixtures.hpp"
#include "acx/random.hpp"
#include "doctest.h"

using namespace acx;

namespace {

Form th(uint32_t n, std::initializer_list<uint32_t> codes, Scalar c = Scalar::one()) {
  return Form::monomial(n, std::vector<uint32_t>(codes), c);
}

// n×n coefficient block as a vector-valued 1-form; row/col flags choose the
// T^{0,1} value slot and the antiholomorphic coframe slot.
VectorForm vf_block(uint32_t n, const Matrix& m, bool row_anti, bool col_anti) {
  VectorForm out(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      out.add(1u << (col_anti ? n + j : j), row_anti ? n + i : i, m.at(i, j));
  return out;
}

// Independent route for e^{i_φ|i_φ̄}: apply e^{i_φ}/e^{i_φ̄} factorwise.
Form exp_pair_oracle(const DeformedStructure& ds, const Form& a) {
  uint32_t n = ds.base().n();
  VectorForm pv = ds.phi_vf(), pb = ds.phibar_vf();
  Form out(n);
  for (const auto& [w, c] : a.terms()) {
    Form piece = c * Form::unit(n);
    for (uint32_t code : word_indices(w)) {
      // on a single coframe factor the series stops after one contraction
      Form theta = Form::theta(n, code);
      Form factor = idx_is_anti(n, code) ? theta + contract(pb, theta)
                                         : exp_contraction(pv, theta);
      piece = wedge(piece, factor);
    }
    out += piece;
  }
  return out;
}

}  // namespace

TEST_CASE("transition matrix blocks") {
  // φ = 0 gives the identity
  TransitionMatrix t0 = build_transition(Beltrami::zero(2));
  CHECK(t0.phi == Matrix::identity(4));
  CHECK(t0.phi_inv == Matrix::identity(4));

  // n = 1, φ = t: the holomorphic inverse block is 1/(1-t·t̄)
  Matrix m(1, 1);
  m.at(0, 0) = Scalar::rational(1, 2);
  TransitionMatrix t = build_transition(Beltrami(m));
  CHECK(t.inv_holo.at(0, 0) == Scalar::rational(4, 3));
  CHECK(t.det == Scalar::rational(3, 4));

  // t = i is singular: t·t̄ = 1
  Matrix mi(1, 1);
  mi.at(0, 0) = Scalar::i();
  CHECK_THROWS_AS(build_transition(Beltrami(mi)), Error);

  // random blocks satisfy the inverse identities (asserted inside)
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    Beltrami b = random_beltrami(rng, 3);
    TransitionMatrix tr = build_transition(b);
    CHECK(tr.phi * tr.phi_inv == Matrix::identity(6));
  }
}

TEST_CASE("compatibility antisymmetry predicate") {
  CHECK(compatibility_antisymmetry(Beltrami::zero(2)));
  Matrix m(2, 2);
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(-1);
  CHECK(compatibility_antisymmetry(Beltrami(m)));
  Matrix d(1, 1);
  d.at(0, 0) = Scalar::rational(1, 2);
  CHECK(!compatibility_antisymmetry(Beltrami(d)));
}

TEST_CASE("deformed structure: coframe, duality, structure constants") {
  FrameSpec f2 = fixtures::mubar3();
  Scalar t = Scalar::rational(1, 2);
  DeformedStructure ds(f2, fixtures::phi_t(3, t));

  CHECK(ds.coframe_phi(0) == Form::theta(3, 0) + t * Form::theta(3, 3));
  CHECK(ds.coframe_phi(1) == Form::theta(3, 1));

  // identity deformation reproduces the base
  DeformedStructure id(f2, Beltrami::zero(3));
  Rng rng(5);
  for (int it = 0; it < 5; ++it) {
    Form a = random_form(rng, 3, static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)));
    CHECK(id.exp_pair(a) == a);
    CHECK(id.to_deformed(a) == a);
    for (DPart part : kDParts) CHECK(id.native_component(part, a) == d_component(f2, a, part));
  }

  // round trip between the coframes
  for (int it = 0; it < 10; ++it) {
    Beltrami b = random_beltrami(rng, 3);
    DeformedStructure d(f2, b);
    Form a = random_form(rng, 3, static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)));
    CHECK(d.to_base(d.to_deformed(a)) == a);
    CHECK(d.exp_pair_inverse(d.exp_pair(a)) == a);
    // conjugation commutes with the coframe change
    CHECK(d.to_deformed(conjugate(a)) == conjugate(d.to_deformed(a)));
  }

  // J_φ-type split of dθ^1_φ: ∂_φ picks t·θ^2∧θ^3, μ̄_φ picks θ^2̄∧θ^3̄
  Form theta1_phi = ds.coframe_phi(0);
  CHECK(ds.native_component(DPart::Del, theta1_phi) == t * th(3, {1, 2}));
  CHECK(ds.native_component(DPart::MuBar, theta1_phi) == th(3, {4, 5}));
  CHECK(ds.native_component(DPart::Mu, theta1_phi).is_zero());
  CHECK(ds.native_component(DPart::DelBar, theta1_phi).is_zero());

  // native parts always sum to d
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, 3);
    DeformedStructure d(f2, b);
    Form a = random_form(rng, 3, static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)));
    Form sum(3);
    for (DPart part : kDParts) sum += d.native_component(part, a);
    CHECK(sum == exterior_d(f2, a));
  }
}

TEST_CASE("extended exponential operator") {
  FrameSpec f2 = fixtures::mubar3();
  Scalar t = Scalar::rational(1, 2);
  DeformedStructure ds(f2, fixtures::phi_t(3, t));

  CHECK(ds.exp_pair(th(3, {0, 1, 2})) == wedge(ds.coframe_phi(0), th(3, {1, 2})));

  Rng rng(7);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 4; ++it) {
      DeformedStructure d(spec, random_beltrami(rng, n));
      for (int p = 0; p <= static_cast<int>(n); ++p)
        for (int q = 0; q <= static_cast<int>(n); ++q) {
          Form a = random_form(rng, n, p, q);
          Form image = d.exp_pair(a);
          // factorwise oracle agrees
          CHECK(image == exp_pair_oracle(d, a));
          // type is preserved in the deformed sense
          if (!image.is_zero()) {
            auto [pp, qq] = d.deformed_bidegree(image);
            CHECK(pp == p);
            CHECK(qq == q);
          }
          // real operator
          CHECK(conjugate(image) == d.exp_pair(conjugate(a)));
        }
    }
  }
}

TEST_CASE("simultaneous contraction: identity, non-additivity, basis independence") {
  uint32_t n = 2;
  FrameSpec kt = fixtures::kodaira_thurston();
  Matrix eye = Matrix::identity(2 * n);
  Rng rng(11);
  Form a = random_form(rng, n, 1, 1);
  CHECK(finv_apply(eye, a) == a);

  // I' and I'' each annihilate the mixed word but their sum keeps it
  Matrix holo(2 * n, 2 * n), anti(2 * n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    holo.at(i, i) = Scalar::one();
    anti.at(n + i, n + i) = Scalar::one();
  }
  Form mixed = th(n, {0, 2});  // θ^1∧θ^1̄
  CHECK(finv_apply(holo + anti, mixed) == mixed);
  CHECK(finv_apply(holo, mixed).is_zero());
  CHECK(finv_apply(anti, mixed).is_zero());
  CHECK(finv_apply(holo + anti, mixed) != finv_apply(holo, mixed) + finv_apply(anti, mixed));

  // additive on 1-forms
  for (uint32_t c = 0; c < 2 * n; ++c) {
    Form one = Form::theta(n, c);
    CHECK(finv_apply(holo + anti, one) == finv_apply(holo, one) + finv_apply(anti, one));
  }

  // vector-form entry point matches the matrix entry point
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, n);
    DeformedStructure d(kt, b);
    Form f = random_form(rng, n, 1, 1);
    CHECK(finv_apply(endo_vector_form(n, d.o3_endo()), f) == finv_apply(d.o3_endo(), f));
  }

  // coefficient-matrix contraction acts identically in either coframe
  FrameSpec f2 = fixtures::mubar3();
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, 3);
    DeformedStructure d(f2, b);
    VectorForm inv_vf = endo_vector_form(3, d.transition().phi_inv);
    Form f = random_form(rng, 3, static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)));
    CHECK(contract(inv_vf, f) == d.to_base(contract(inv_vf, d.to_deformed(f))));
  }
}

TEST_CASE("coframe contraction identities") {
  FrameSpec f2 = fixtures::mubar3();
  Rng rng(13);
  for (int it = 0; it < 8; ++it) {
    Beltrami b = random_beltrami(rng, 3);
    uint32_t n = 3;
    Matrix pm = b.matrix(), pb = b.bar_matrix();
    TransitionMatrix tr = build_transition(b);
    VectorForm pv = b.vector_form(), pbv = b.bar_vector_form();
    VectorForm phibar_phi = vf_block(n, pb * pm, true, true);
    // O3-style endomorphism I - φ̄·φ + φ̄ as a vector form
    VectorForm eye(n);
    for (uint32_t c = 0; c < 2 * n; ++c) eye.add(1u << c, c, Scalar::one());
    VectorForm o3 = eye - phibar_phi + pbv;

    DeformedStructure ds(f2, b);
    for (uint32_t k = 0; k < n; ++k) {
      Form tk = Form::theta(n, k);
      // e^{i_φ}((I - φ̄·φ + φ̄)⌟θ^k) = e^{i_φ}(θ^k) = θ^k + i_φθ^k
      CHECK(exp_contraction(pv, contract(o3, tk)) == exp_contraction(pv, tk));
      CHECK(exp_contraction(pv, tk) == tk + contract(pv, tk));
      // e^{i_φ}((I - φ̄·φ + φ̄)⌟θ^k̄) = (I + φ̄)⌟θ^k̄
      Form tkb = Form::theta(n, n + k);
      CHECK(exp_contraction(pv, contract(o3, tkb)) == tkb + contract(pbv, tkb));
      // θ^j̄ = e^{i_φ|i_φ̄}((-φ̄(I'-φφ̄)^{-1} + (I''-φ̄φ)^{-1})⌟θ^j̄)
      VectorForm row = vf_block(n, tr.inv_anti, true, true) -
                       vf_block(n, pb * tr.inv_holo, true, false);
      CHECK(ds.exp_pair(contract(row, tkb)) == tkb);
      // (I''-φ̄φ)^{-1}·φ̄ ⌟ ((I''-φ̄φ)⌟θ^ī) = φ̄⌟θ^ī
      VectorForm weighted = vf_block(n, tr.inv_anti * pb, true, false);
      VectorForm anti_endo = vf_block(n, Matrix::identity(n) - pb * pm, true, true);
      CHECK(contract(weighted, contract(anti_endo, tkb)) == contract(pbv, tkb));
    }
  }
}

TEST_CASE("composition identities for the two exponentials") {
  FrameSpec f2 = fixtures::mubar3();
  Rng rng(17);
  for (int it = 0; it < 6; ++it) {
    Beltrami b = random_beltrami(rng, 3);
    DeformedStructure ds(f2, b);
    VectorForm pv = b.vector_form();
    for (Word w = 0; w < (1u << 6); ++w) {
      Form a(3);
      a.add_term(w, Scalar::one());
      // e^{-i_φ}∘e^{i_φ|i_φ̄} = (I - φ̄·φ + φ̄) under simultaneous contraction
      CHECK(exp_contraction(-pv, ds.exp_pair(a)) == finv_apply(ds.o3_endo(), a));
      // inverse-isomorphism ∘ e^{i_φ} = (I' + (I''-φ̄φ)^{-1} - φ̄(I'-φφ̄)^{-1})
      CHECK(ds.exp_pair_inverse(exp_contraction(pv, a)) == finv_apply(ds.o1_endo(), a));
    }
  }
}

TEST_CASE("Maurer-Cartan form") {
  FrameSpec f0 = fixtures::torus(2);
  Rng rng(19);
  for (int it = 0; it < 8; ++it) CHECK(maurer_cartan(f0, random_beltrami(rng, 2)).is_zero());

  FrameSpec f2 = fixtures::mubar3();
  CHECK(maurer_cartan(f2, fixtures::phi_t(3, Scalar::rational(1, 2))).is_zero());

  // MC lands in A^{0,2}(T^{1,0}) and matches the conjugation route:
  // e^{-i_φ}∘d∘e^{i_φ} = d + [μ,i_φ] + [∂,i_φ] - i_{(1/2)(B+C)} + i_{MC}
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 3; ++it) {
      Beltrami b = random_beltrami(rng, n);
      VectorForm pv = b.vector_form();
      VectorForm mc = maurer_cartan(spec, b);
      int p, q;
      bool anti;
      CHECK(mc.homogeneous(&p, &q, &anti));
      if (!mc.is_zero()) {
        CHECK(p == 0);
        CHECK(q == 2);
        CHECK(!anti);
      }
      AbcParts parts = abc_decompose(fn_bracket(spec, pv, pv));
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        Form a(n);
        a.add_term(w, Scalar::one());
        Form lhs = exp_contraction(-pv, exterior_d(spec, exp_contraction(pv, a)));
        Form mu_comm = d_component(spec, contract(pv, a), DPart::Mu) -
                       contract(pv, d_component(spec, a, DPart::Mu));
        Form del_comm = d_component(spec, contract(pv, a), DPart::Del) -
                        contract(pv, d_component(spec, a, DPart::Del));
        Form rhs = exterior_d(spec, a) + mu_comm + del_comm -
                   contract(Scalar::rational(1, 2) * (parts.b + parts.c), a) + contract(mc, a);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("extension residual with connections") {
  Rng rng(23);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    Connection conns[3];
    conns[0] = Connection::trivial(1);
    conns[1].rank = 1;
    conns[1].omega = {{Form::theta(n, 0) + Scalar::rational(1, 2) * Form::theta(n, n)}};
    conns[2].rank = 2;
    conns[2].omega = {{Form(n), Form::theta(n, 0)}, {Form(n), Form(n)}};
    for (int it = 0; it < 2; ++it) {
      Beltrami b = random_beltrami(rng, n);
      for (const Connection& conn : conns) {
        for (Word w = 0; w < (1u << (2 * n)); ++w) {
          EValuedForm s(conn.rank, n);
          s.comps[0].add_term(w, Scalar::one());
          if (conn.rank > 1) s.comps[1].add_term(w, Scalar::i());
          CHECK(extension_residual(spec, conn, b, s).is_zero());
        }
      }
    }
  }
}

TEST_CASE("power commutator residuals") {
  Rng rng(29);
  FrameSpec spec = fixtures::hybrid3();
  Connection conn = Connection::trivial(1);
  Connection cw;
  cw.rank = 1;
  cw.omega = {{Form::theta(3, 0)}};
  for (int k = 1; k <= 5; ++k) {
    for (int it = 0; it < 3; ++it) {
      Beltrami b = random_beltrami(rng, 3);
      Form a = random_form(rng, 3, static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)));
      EValuedForm s(1, 3);
      s.comps[0] = a;
      CHECK(power_commutator_residual(spec, conn, b, k, s).is_zero());
      CHECK(power_commutator_residual(spec, cw, b, k, s).is_zero());
      for (DPart part : kDParts)
        CHECK(power_commutator_residual_part(spec, conn, b, part, k, s).is_zero());
    }
  }
}

TEST_CASE("typewise extension residuals") {
  Rng rng(31);
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    Connection cw;
    cw.rank = 2;
    cw.omega = {{Form::theta(n, n), Form::theta(n, 0)}, {Form(n), Form::theta(n, 1 % n)}};
    for (int it = 0; it < 2; ++it) {
      Beltrami b = random_beltrami(rng, n);
      for (Word w = 0; w < (1u << (2 * n)); ++w) {
        Form a(n);
        a.add_term(w, Scalar::one());
        Form total(n);
        for (DPart part : kDParts) {
          Form r = decomposed_extension_residual(spec, b, part, a);
          CHECK(r.is_zero());
          total += r;
        }
        // the four parts assemble the full residual with ∇ = d
        EValuedForm s(1, n);
        s.comps[0] = a;
        Form full = extension_residual(spec, Connection::trivial(1), b, s).comps[0];
        CHECK(total == full);
        // connection version
        EValuedForm s2(2, n);
        s2.comps[0] = a;
        s2.comps[1].add_term(w, Scalar::rational(1, 2));
        for (DPart part : kDParts)
          CHECK(decomposed_extension_residual_conn(spec, cw, b, part, s2).is_zero());
      }
    }
  }
}

TEST_CASE("operator chain against the deformed-frame differentials") {
  FrameSpec f2 = fixtures::mubar3();
  Scalar t = Scalar::rational(1, 2);
  DeformedStructure ds(f2, fixtures::phi_t(3, t));

  // worked example: a = θ^1∧θ^2∧θ^3
  Form a = th(3, {0, 1, 2});
  Form da_exp = exterior_d(f2, ds.exp_pair(a));
  CHECK(da_exp == th(3, {1, 2, 4, 5}));
  CHECK(ds.o_chain_part(a, DPart::DelBar).is_zero());
  CHECK(ds.exp_pair(ds.o_chain_part(a, DPart::MuBar)) == da_exp);

  // φ = 0: chain reduces to d and its parts
  DeformedStructure id(f2, Beltrami::zero(3));
  Rng rng(37);
  for (int it = 0; it < 4; ++it) {
    Form f = random_form(rng, 3, static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)));
    CHECK(id.o_chain(f) == exterior_d(f2, f));
  }

  // conjugation identity and partwise match on every fixture
  for (const auto& [name, spec] : fixtures::all_valid()) {
    CAPTURE(name);
    uint32_t n = spec.n();
    for (int it = 0; it < 2; ++it) {
      DeformedStructure d(spec, random_beltrami(rng, n));
      for (int p = 0; p <= static_cast<int>(n); ++p)
        for (int q = 0; q <= static_cast<int>(n); ++q) {
          Form f = random_form(rng, n, p, q);
          CHECK(exterior_d(spec, d.exp_pair(f)) == d.exp_pair(d.o_chain(f)));
          Form sum(n);
          for (DPart part : kDParts) {
            Form piece = d.o_chain_part(f, part);
            sum += piece;
            CHECK(d.native_component(part, d.exp_pair(f)) == d.exp_pair(piece));
          }
          CHECK(sum == d.o_chain(f));
        }
    }
  }
}
