#include "acx/deformation.hpp"

namespace acx {

Beltrami::Beltrami(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) fail(Errc::RangeError, "Beltrami matrix must be square");
}

VectorForm Beltrami::vector_form() const {
  uint32_t nn = n();
  VectorForm out(nn);
  for (uint32_t i = 0; i < nn; ++i)
    for (uint32_t j = 0; j < nn; ++j) out.add(1u << (nn + j), i, m_.at(i, j));
  return out;
}

VectorForm Beltrami::bar_vector_form() const {
  uint32_t nn = n();
  VectorForm out(nn);
  for (uint32_t i = 0; i < nn; ++i)
    for (uint32_t j = 0; j < nn; ++j) out.add(1u << j, nn + i, m_.at(i, j).conj());
  return out;
}

TransitionMatrix build_transition(const Beltrami& phi) {
  uint32_t n = phi.n();
  const Matrix& p = phi.matrix();
  Matrix pbar = phi.bar_matrix();
  Matrix id = Matrix::identity(n);
  Matrix holo = id - p * pbar;  // I' - φ·φ̄
  Matrix anti = id - pbar * p;  // I'' - φ̄·φ
  TransitionMatrix t;
  t.det = holo.det();
  if (t.det.is_zero()) fail(Errc::SingularTransition, "det(I' - φ·φ̄) = 0");
  t.inv_holo = holo.inverse();
  t.inv_anti = anti.inverse();
  t.phi = Matrix(2 * n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    t.phi.at(i, i) = Scalar::one();
    t.phi.at(n + i, n + i) = Scalar::one();
    for (uint32_t j = 0; j < n; ++j) {
      t.phi.at(i, n + j) = p.at(i, j);
      t.phi.at(n + i, j) = pbar.at(i, j);
    }
  }
  Matrix top_right = p * t.inv_anti;
  Matrix bottom_left = pbar * t.inv_holo;
  t.phi_inv = Matrix(2 * n, 2 * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      t.phi_inv.at(i, j) = t.inv_holo.at(i, j);
      t.phi_inv.at(i, n + j) = -top_right.at(i, j);
      t.phi_inv.at(n + i, j) = -bottom_left.at(i, j);
      t.phi_inv.at(n + i, n + j) = t.inv_anti.at(i, j);
    }
  // exactness checks on the block identities
  Matrix prod = t.phi * t.phi_inv;
  if (!(prod == Matrix::identity(2 * n))) fail(Errc::Internal, "Φ·Φ^{-1} != I");
  prod = t.phi_inv * t.phi;
  if (!(prod == Matrix::identity(2 * n))) fail(Errc::Internal, "Φ^{-1}·Φ != I");
  if (!(t.inv_holo * p == p * t.inv_anti)) fail(Errc::Internal, "inverse block identity failed");
  if (!(t.inv_holo - p * t.inv_anti * pbar == id)) fail(Errc::Internal, "inverse block identity failed");
  return t;
}

bool compatibility_antisymmetry(const Beltrami& phi) {
  uint32_t n = phi.n();
  const Matrix& p = phi.matrix();
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (!(p.at(i, j) == -p.at(j, i))) return false;
  // with φ antisymmetric, φ̄ = -φ* and the two determinant expressions agree
  Matrix id = Matrix::identity(n);
  Scalar d1 = (id - p * phi.bar_matrix()).det();
  Scalar d2 = (id + p * phi.bar_matrix().transpose()).det();
  if (!(d1 == d2)) fail(Errc::Internal, "determinant consistency failed");
  return true;
}

Matrix endo_matrix_from_vector_form(const VectorForm& endo) {
  uint32_t d = 2 * endo.n;
  Matrix e(d, d);
  for (const auto& [k, c] : endo.terms) {
    if (word_degree(k.first) != 1)
      fail(Errc::TypeLeak, "endomorphism terms must be 1-form ⊗ vector");
    uint32_t beta = word_indices(k.first)[0];
    e.at(k.second, beta) += c;
  }
  return e;
}

VectorForm endo_vector_form(uint32_t n, const Matrix& e) {
  VectorForm out(n);
  for (uint32_t a = 0; a < 2 * n; ++a)
    for (uint32_t b = 0; b < 2 * n; ++b) out.add(1u << b, a, e.at(a, b));
  return out;
}

Form finv_apply(const Matrix& endo, const Form& a) {
  uint32_t n = a.n();
  Form out(n);
  for (const auto& [w, c] : a.terms()) {
    Form piece = c * Form::unit(n);
    for (uint32_t code : word_indices(w)) {
      Form image(n);
      for (uint32_t b = 0; b < 2 * n; ++b) image.add_term(1u << b, endo.at(code, b));
      piece = wedge(piece, image);
      if (piece.is_zero()) break;
    }
    out += piece;
  }
  return out;
}

Form finv_apply(const VectorForm& endo, const Form& a) {
  return finv_apply(endo_matrix_from_vector_form(endo), a);
}

namespace {

Scalar eval_one_form(const Form& f, const VectorField& x) {
  Scalar out;
  for (const auto& [w, c] : f.terms()) {
    if (word_degree(w) != 1) fail(Errc::Internal, "pairing needs a 1-form");
    uint32_t code = word_indices(w)[0];
    auto it = x.coeff.find(code);
    if (it != x.coeff.end()) out += c * it->second;
  }
  return out;
}

}  // namespace

DeformedStructure::DeformedStructure(FrameSpec base, Beltrami phi)
    : base_(std::move(base)), phi_(std::move(phi)) {
  if (phi_.n() != base_.n()) fail(Errc::RangeError, "Beltrami dimension != frame dimension");
  base_.ensure_valid();
  trans_ = build_transition(phi_);
  uint32_t n = base_.n();

  phi_vf_ = phi_.vector_form();
  phibar_vf_ = phi_.bar_vector_form();
  bracket_ = fn_bracket(base_, phi_vf_, phi_vf_);
  abc_ = abc_decompose(bracket_);
  mc_ = maurer_cartan(base_, phi_vf_);

  // O1 = I' + (I''-φ̄φ)^{-1} - φ̄·(I'-φφ̄)^{-1}, O3 = I - φ̄·φ + φ̄  (row form)
  Matrix pbar = phi_.bar_matrix();
  o1_ = Matrix(2 * n, 2 * n);
  o3_ = Matrix(2 * n, 2 * n);
  Matrix neg_low = pbar * trans_.inv_holo;
  Matrix anti = Matrix::identity(n) - pbar * phi_.matrix();
  for (uint32_t i = 0; i < n; ++i) {
    o1_.at(i, i) = Scalar::one();
    o3_.at(i, i) = Scalar::one();
    for (uint32_t j = 0; j < n; ++j) {
      o1_.at(n + i, n + j) = trans_.inv_anti.at(i, j);
      o1_.at(n + i, j) = -neg_low.at(i, j);
      o3_.at(n + i, n + j) = anti.at(i, j);
      o3_.at(n + i, j) = pbar.at(i, j);
    }
  }

  // structure constants in the deformed frame
  std::vector<Form> dtheta_phi(n, Form(n));
  for (uint32_t i = 0; i < n; ++i)
    dtheta_phi[i] = to_deformed(exterior_d(base_, coframe_phi(i)));
  spec_phi_ = FrameSpec(n, dtheta_phi);
  spec_phi_.ensure_valid();

  // duality θ^α_φ(e_{φ,β}) = δ^α_β
  for (uint32_t a = 0; a < 2 * n; ++a)
    for (uint32_t b = 0; b < 2 * n; ++b) {
      Scalar v = eval_one_form(coframe_phi(a), frame_phi(b));
      if (!(v == (a == b ? Scalar::one() : Scalar::zero())))
        fail(Errc::Internal, "deformed frame duality failed");
    }
}

Form DeformedStructure::coframe_phi(uint32_t code) const {
  uint32_t d = 2 * base_.n();
  if (code >= d) fail(Errc::IndexOutOfRange, "coframe index");
  Form out(base_.n());
  for (uint32_t b = 0; b < d; ++b) out.add_term(1u << b, trans_.phi.at(code, b));
  return out;
}

VectorField DeformedStructure::frame_phi(uint32_t code) const {
  uint32_t d = 2 * base_.n();
  if (code >= d) fail(Errc::IndexOutOfRange, "frame index");
  VectorField out(base_.n());
  for (uint32_t r = 0; r < d; ++r) out.add(r, trans_.phi_inv.at(r, code));
  return out;
}

Form DeformedStructure::to_deformed(const Form& base_form) const {
  return finv_apply(trans_.phi_inv, base_form);
}
Form DeformedStructure::to_base(const Form& deformed_form) const {
  return finv_apply(trans_.phi, deformed_form);
}

Form DeformedStructure::exp_pair(const Form& a) const { return finv_apply(trans_.phi, a); }
Form DeformedStructure::exp_pair_inverse(const Form& a) const {
  return finv_apply(trans_.phi_inv, a);
}

Form DeformedStructure::native_component(DPart part, const Form& a) const {
  return to_base(d_component(spec_phi_, to_deformed(a), part));
}

std::pair<int, int> DeformedStructure::deformed_bidegree(const Form& a) const {
  int p = 0, q = 0;
  if (!to_deformed(a).homogeneous(&p, &q))
    fail(Errc::Internal, "form is not J_φ-homogeneous");
  return {p, q};
}

Form DeformedStructure::o2_apply(const Form& a) const {
  Form out = exterior_d(base_, a);
  // [μ, i_φ] + [∂, i_φ]
  out += d_component(base_, contract(phi_vf_, a), DPart::Mu) -
         contract(phi_vf_, d_component(base_, a, DPart::Mu));
  out += d_component(base_, contract(phi_vf_, a), DPart::Del) -
         contract(phi_vf_, d_component(base_, a, DPart::Del));
  out -= contract(Scalar::rational(1, 2) * (abc_.b + abc_.c), a);
  out += contract(mc_, a);
  return out;
}

Form DeformedStructure::o_chain(const Form& a) const {
  return finv_apply(o1_, o2_apply(finv_apply(o3_, a)));
}

Form DeformedStructure::o_chain_part(const Form& a, DPart part) const {
  int p = 0, q = 0;
  if (!a.homogeneous(&p, &q)) fail(Errc::RangeError, "o_chain_part needs a homogeneous input");
  auto [dp, dq] = dpart_shift(part);
  return project(o_chain(a), p + dp, q + dq);
}

DeformedStructure deform_structure(const FrameSpec& spec, const Beltrami& phi) {
  return DeformedStructure(spec, phi);
}

VectorForm maurer_cartan(const FrameSpec& spec, const VectorForm& phi_vf) {
  VectorForm br = fn_bracket(spec, phi_vf, phi_vf);
  AbcParts abc = abc_decompose(br);
  VectorForm corr = contract_into(br, phi_vf) - contract_into(phi_vf, br);
  return vf_dbar(spec, phi_vf) - Scalar::rational(1, 2) * abc.a - Scalar::rational(1, 6) * corr;
}

VectorForm maurer_cartan(const FrameSpec& spec, const Beltrami& phi) {
  return maurer_cartan(spec, phi.vector_form());
}

EValuedForm extension_residual(const FrameSpec& spec, const Connection& conn, const Beltrami& phi,
                               const EValuedForm& s) {
  VectorForm pv = phi.vector_form();
  VectorForm br = fn_bracket(spec, pv, pv);
  VectorForm corr = contract_into(br, pv) - contract_into(pv, br);
  EValuedForm lhs =
      ev_exp_contraction(-pv, nabla_apply(spec, conn, ev_exp_contraction(pv, s)));
  EValuedForm rhs = nabla_apply(spec, conn, s) - gen_lie(spec, pv, conn, s) -
                    ev_contract(Scalar::rational(1, 2) * br, s) -
                    ev_contract(Scalar::rational(1, 6) * corr, s);
  return lhs - rhs;
}

namespace {

EValuedForm pow_contract(const VectorForm& v, int k, const EValuedForm& s) {
  EValuedForm out = s;
  for (int i = 0; i < k; ++i) out = ev_contract(v, out);
  return out;
}

}  // namespace

EValuedForm power_commutator_residual(const FrameSpec& spec, const Connection& conn,
                                      const Beltrami& phi, int k, const EValuedForm& s) {
  if (k < 1) fail(Errc::RangeError, "power must be >= 1");
  VectorForm pv = phi.vector_form();
  VectorForm br = fn_bracket(spec, pv, pv);
  VectorForm corr = contract_into(br, pv) - contract_into(pv, br);
  EValuedForm lhs = nabla_apply(spec, conn, pow_contract(pv, k, s)) -
                    pow_contract(pv, k, nabla_apply(spec, conn, s));
  EValuedForm com1 = nabla_apply(spec, conn, ev_contract(pv, s)) -
                     ev_contract(pv, nabla_apply(spec, conn, s));
  EValuedForm rhs = Scalar(k) * pow_contract(pv, k - 1, com1);
  if (k >= 2)
    rhs -= Scalar::rational(static_cast<long>(k) * (k - 1), 2) *
           pow_contract(pv, k - 2, ev_contract(br, s));
  if (k >= 3)
    rhs -= Scalar::rational(static_cast<long>(k) * (k - 1) * (k - 2), 6) *
           pow_contract(pv, k - 3, ev_contract(corr, s));
  return lhs - rhs;
}

EValuedForm gen_lie_nabla_part(const FrameSpec& spec, const VectorForm& rho,
                               const Connection& conn, DPart part, const EValuedForm& s) {
  int deg = rho.form_degree();
  EValuedForm first = ev_contract(rho, nabla_component(spec, conn, part, s));
  EValuedForm second = nabla_component(spec, conn, part, ev_contract(rho, s));
  return first + Scalar((deg & 1) ? -1 : 1) * second;
}

EValuedForm power_commutator_residual_part(const FrameSpec& spec, const Connection& conn,
                                           const Beltrami& phi, DPart part, int k,
                                           const EValuedForm& s) {
  if (k < 1) fail(Errc::RangeError, "power must be >= 1");
  VectorForm pv = phi.vector_form();
  VectorForm br = fn_bracket(spec, pv, pv);
  AbcParts abc = abc_decompose(br);
  auto D = [&](const EValuedForm& x) { return nabla_component(spec, conn, part, x); };
  EValuedForm lhs = D(pow_contract(pv, k, s)) - pow_contract(pv, k, D(s));
  EValuedForm com1 = D(ev_contract(pv, s)) - ev_contract(pv, D(s));
  EValuedForm rhs = Scalar(k) * pow_contract(pv, k - 1, com1);
  if (k >= 2) {
    VectorForm quad(spec.n());
    if (part == DPart::Mu) quad = abc.b + abc.c;
    if (part == DPart::Del) quad = abc.a;
    if (!quad.is_zero())
      rhs -= Scalar::rational(static_cast<long>(k) * (k - 1), 2) *
             pow_contract(pv, k - 2, ev_contract(quad, s));
  }
  if (k >= 3 && part == DPart::Mu) {
    VectorForm corr = contract_into(abc.c, pv) - contract_into(pv, abc.b);
    rhs -= Scalar::rational(static_cast<long>(k) * (k - 1) * (k - 2), 6) *
           pow_contract(pv, k - 3, ev_contract(corr, s));
  }
  return lhs - rhs;
}

Form decomposed_extension_residual(const FrameSpec& spec, const Beltrami& phi, DPart part,
                                   const Form& a) {
  VectorForm pv = phi.vector_form();
  VectorForm br = fn_bracket(spec, pv, pv);
  AbcParts abc = abc_decompose(br);
  Form lhs = exp_contraction(-pv, d_component(spec, exp_contraction(pv, a), part));
  Form rhs = d_component(spec, a, part) - gen_lie_part(spec, pv, part, a);
  if (part == DPart::Del) rhs -= contract(Scalar::rational(1, 2) * abc.a, a);
  if (part == DPart::Mu) {
    rhs -= contract(Scalar::rational(1, 2) * (abc.b + abc.c), a);
    VectorForm corr = contract_into(abc.c, pv) - contract_into(pv, abc.b);
    rhs -= contract(Scalar::rational(1, 6) * corr, a);
  }
  return lhs - rhs;
}

EValuedForm decomposed_extension_residual_conn(const FrameSpec& spec, const Connection& conn,
                                               const Beltrami& phi, DPart part,
                                               const EValuedForm& s) {
  VectorForm pv = phi.vector_form();
  VectorForm br = fn_bracket(spec, pv, pv);
  AbcParts abc = abc_decompose(br);
  EValuedForm lhs = ev_exp_contraction(
      -pv, nabla_component(spec, conn, part, ev_exp_contraction(pv, s)));
  EValuedForm rhs = nabla_component(spec, conn, part, s) -
                    gen_lie_nabla_part(spec, pv, conn, part, s);
  if (part == DPart::Del) rhs -= ev_contract(Scalar::rational(1, 2) * abc.a, s);
  if (part == DPart::Mu) {
    rhs -= ev_contract(Scalar::rational(1, 2) * (abc.b + abc.c), s);
    VectorForm corr = contract_into(abc.c, pv) - contract_into(pv, abc.b);
    rhs -= ev_contract(Scalar::rational(1, 6) * corr, s);
  }
  return lhs - rhs;
}

}  // namespace acx
