#include "acx/cohomology.hpp"

#include <algorithm>

namespace acx {

std::vector<Word> words_of_bidegree(uint32_t n, int p, int q) {
  std::vector<Word> out;
  if (p < 0 || q < 0 || p > static_cast<int>(n) || q > static_cast<int>(n)) return out;
  for (Word w = 0; w < (1u << (2 * n)); ++w)
    if (word_holo_degree(n, w) == p && word_anti_degree(n, w) == q) out.push_back(w);
  std::sort(out.begin(), out.end(), lex_less_word);
  return out;
}

namespace {

std::vector<Scalar> coords_of(const Form& f, const std::vector<Word>& basis) {
  std::vector<Scalar> v(basis.size());
  size_t seen = 0;
  for (size_t i = 0; i < basis.size(); ++i) {
    v[i] = f.coeff(basis[i]);
    if (!v[i].is_zero()) ++seen;
  }
  if (seen != f.size()) fail(Errc::Internal, "form leaves the expected bidegree space");
  return v;
}

Form form_of(uint32_t n, const std::vector<Word>& basis, const std::vector<Scalar>& v) {
  Form f(n);
  for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v[i]);
  return f;
}

Matrix op_matrix(const FrameSpec& spec, DPart part, const std::vector<Word>& src,
                 const std::vector<Word>& dst) {
  Matrix m(static_cast<uint32_t>(dst.size()), static_cast<uint32_t>(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    Form a(spec.n());
    a.add_term(src[j], Scalar::one());
    Form img = d_component(spec, a, part);
    std::vector<Scalar> col = coords_of(img, dst);
    for (size_t i = 0; i < dst.size(); ++i) m.at(static_cast<uint32_t>(i), static_cast<uint32_t>(j)) = col[i];
  }
  return m;
}

Matrix columns(const std::vector<std::vector<Scalar>>& cols, uint32_t dim) {
  Matrix m(dim, static_cast<uint32_t>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (uint32_t i = 0; i < dim; ++i) m.at(i, static_cast<uint32_t>(j)) = cols[j][i];
  return m;
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

/// Solves A x = b exactly; returns false when inconsistent.
bool solve(const Matrix& a, const std::vector<Scalar>& b, std::vector<Scalar>* x) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (uint32_t i = 0; i < a.rows(); ++i) {
    for (uint32_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<uint32_t> pivots = aug.rref();
  for (uint32_t p : pivots)
    if (p == a.cols()) return false;
  if (x) {
    x->assign(a.cols(), Scalar());
    for (size_t r = 0; r < pivots.size(); ++r) (*x)[pivots[r]] = aug.at(static_cast<uint32_t>(r), a.cols());
  }
  return true;
}

/// Greedy quotient basis: picks the kernel vectors that enlarge the span of
/// the image columns, in order (deterministic, lexicographic pivoting).
std::vector<std::vector<Scalar>> quotient_basis(const std::vector<std::vector<Scalar>>& kernel,
                                                const std::vector<std::vector<Scalar>>& image,
                                                uint32_t dim) {
  std::vector<std::vector<Scalar>> picked;
  std::vector<std::vector<Scalar>> span = image;
  Matrix base = columns(span, dim);
  uint32_t rank = base.rank();
  for (const auto& v : kernel) {
    std::vector<std::vector<Scalar>> trial = span;
    trial.push_back(v);
    Matrix m = columns(trial, dim);
    if (m.rank() > rank) {
      picked.push_back(v);
      span = std::move(trial);
      ++rank;
    }
  }
  return picked;
}

struct Layer {
  std::vector<Word> words;
  std::vector<std::vector<Scalar>> kernel;  // of μ̄ out
  std::vector<std::vector<Scalar>> image;   // of μ̄ in
  std::vector<std::vector<Scalar>> quotient;
};

Layer build_layer(const FrameSpec& spec, int p, int q) {
  Layer l;
  l.words = words_of_bidegree(spec.n(), p, q);
  uint32_t dim = static_cast<uint32_t>(l.words.size());
  std::vector<Word> below = words_of_bidegree(spec.n(), p - 1, q + 2);
  std::vector<Word> above = words_of_bidegree(spec.n(), p + 1, q - 2);
  Matrix out = op_matrix(spec, DPart::MuBar, l.words, below);
  Matrix in = op_matrix(spec, DPart::MuBar, above, l.words);
  l.kernel = out.kernel_basis();
  for (uint32_t j = 0; j < in.cols(); ++j) {
    std::vector<Scalar> col(dim);
    for (uint32_t i = 0; i < dim; ++i) col[i] = in.at(i, j);
    if (!all_zero(col)) l.image.push_back(std::move(col));
  }
  // μ̄² = 0: the image must sit inside the kernel
  for (const auto& col : l.image) {
    Form f = form_of(spec.n(), l.words, col);
    if (!d_component(spec, f, DPart::MuBar).is_zero())
      fail(Errc::InducedMapIllDefined, "μ̄ image escapes ker μ̄");
  }
  l.quotient = quotient_basis(l.kernel, l.image, dim);
  return l;
}

}  // namespace

CochainBasis cochain_basis(const FrameSpec& spec, int p, int q) {
  CochainBasis b;
  b.p = p;
  b.q = q;
  b.words = words_of_bidegree(spec.n(), p, q);
  b.mubar_out = op_matrix(spec, DPart::MuBar, b.words, words_of_bidegree(spec.n(), p - 1, q + 2));
  b.delbar_out = op_matrix(spec, DPart::DelBar, b.words, words_of_bidegree(spec.n(), p, q + 1));
  return b;
}

MuBarCohomology mu_bar_cohomology(const FrameSpec& spec, int p, int q) {
  spec.ensure_valid();
  Layer l = build_layer(spec, p, q);
  MuBarCohomology out;
  out.p = p;
  out.q = q;
  out.dim = static_cast<int>(l.quotient.size());
  for (const auto& v : l.quotient) out.representatives.push_back(form_of(spec.n(), l.words, v));
  return out;
}

DolbeaultCohomology dolbeault_cohomology(const FrameSpec& spec, int p, int q) {
  spec.ensure_valid();
  uint32_t n = spec.n();
  Layer cur = build_layer(spec, p, q);
  Layer nxt = build_layer(spec, p, q + 1);
  Layer prv = q > 0 ? build_layer(spec, p, q - 1) : Layer{};

  auto delbar_of = [&](const std::vector<Word>& words, const std::vector<Scalar>& v,
                       const std::vector<Word>& target) {
    Form f = form_of(n, words, v);
    return coords_of(d_component(spec, f, DPart::DelBar), target);
  };

  // ∂̄ maps ker μ̄ into ker μ̄ and im μ̄ into im μ̄ (checked exactly)
  for (const auto& v : cur.kernel) {
    Form f = form_of(n, cur.words, v);
    if (!d_component(spec, d_component(spec, f, DPart::DelBar), DPart::MuBar).is_zero())
      fail(Errc::InducedMapIllDefined, "∂̄ does not preserve ker μ̄");
  }
  Matrix nxt_image = columns(nxt.image, static_cast<uint32_t>(nxt.words.size()));
  for (const auto& v : cur.image) {
    std::vector<Scalar> w = delbar_of(cur.words, v, nxt.words);
    if (!solve(nxt_image, w, nullptr))
      fail(Errc::InducedMapIllDefined, "∂̄ does not preserve im μ̄");
  }

  // induced map on the quotient bases
  auto induced = [&](const Layer& from, const Layer& to) {
    std::vector<std::vector<Scalar>> gens = to.image;
    for (const auto& qv : to.quotient) gens.push_back(qv);
    Matrix basis = columns(gens, static_cast<uint32_t>(to.words.size()));
    Matrix m(static_cast<uint32_t>(to.quotient.size()), static_cast<uint32_t>(from.quotient.size()));
    for (size_t j = 0; j < from.quotient.size(); ++j) {
      std::vector<Scalar> w = delbar_of(from.words, from.quotient[j], to.words);
      std::vector<Scalar> x;
      if (!solve(basis, w, &x)) fail(Errc::InducedMapIllDefined, "class has no quotient expression");
      for (size_t i = 0; i < to.quotient.size(); ++i)
        m.at(static_cast<uint32_t>(i), static_cast<uint32_t>(j)) = x[to.image.size() + i];
    }
    return m;
  };

  Matrix ind_out = induced(cur, nxt);
  Matrix ind_in = q > 0 ? induced(prv, cur)
                        : Matrix(static_cast<uint32_t>(cur.quotient.size()), 0);

  // induced ∂̄² vanishes on the μ̄-classes
  if (q > 0) {
    Matrix sq = ind_out * ind_in;
    for (uint32_t i = 0; i < sq.rows(); ++i)
      for (uint32_t j = 0; j < sq.cols(); ++j)
        if (!sq.at(i, j).is_zero()) fail(Errc::InducedMapIllDefined, "induced ∂̄² is nonzero");
  }

  DolbeaultCohomology out;
  out.p = p;
  out.q = q;
  out.dim_mubar = static_cast<int>(cur.quotient.size());

  std::vector<std::vector<Scalar>> ker_ind = ind_out.kernel_basis();
  std::vector<std::vector<Scalar>> im_ind;
  for (uint32_t j = 0; j < ind_in.cols(); ++j) {
    std::vector<Scalar> col(ind_in.rows());
    for (uint32_t i = 0; i < ind_in.rows(); ++i) col[i] = ind_in.at(i, j);
    if (!all_zero(col)) im_ind.push_back(std::move(col));
  }
  std::vector<std::vector<Scalar>> reps =
      quotient_basis(ker_ind, im_ind, static_cast<uint32_t>(cur.quotient.size()));
  out.dim = static_cast<int>(reps.size());
  for (const auto& r : reps) {
    // expand through the quotient basis back to a form
    std::vector<Scalar> v(cur.words.size());
    for (size_t k = 0; k < cur.quotient.size(); ++k)
      for (size_t i = 0; i < v.size(); ++i) v[i] += r[k] * cur.quotient[k][i];
    out.representatives.push_back(form_of(n, cur.words, v));
  }
  return out;
}

VectorForm weighted_phibar(const DeformedStructure& ds) {
  uint32_t n = ds.base().n();
  Matrix m = ds.beltrami().bar_matrix() * ds.transition().inv_holo;
  VectorForm out(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) out.add(1u << j, n + i, m.at(i, j));
  return out;
}

namespace {

void require_top_holomorphic(const DeformedStructure& ds, const Form& f, int q_expect) {
  int p = 0, q = 0;
  if (f.is_zero()) return;
  if (!f.homogeneous(&p, &q) || p != static_cast<int>(ds.base().n()) ||
      (q_expect >= 0 && q != q_expect))
    fail(Errc::PreconditionViolation, "input form has the wrong bidegree");
}

}  // namespace

Form n0_closedness_condition(const DeformedStructure& ds, const Form& omega) {
  require_top_holomorphic(ds, omega, 0);
  if (!ds.mc().is_zero()) fail(Errc::MCViolation, "Beltrami differential is not MC-flat");
  const FrameSpec& spec = ds.base();
  Form g1 = d_component(spec, omega, DPart::DelBar) +
            d_component(spec, contract(ds.phi_vf(), omega), DPart::Del) -
            Scalar::rational(1, 2) * contract(ds.abc().b, omega);
  Form g2 = contract(weighted_phibar(ds), d_component(spec, omega, DPart::MuBar));
  return g1 - g2;
}

bool n0_closedness_predicate(const DeformedStructure& ds, const Form& omega) {
  return n0_closedness_condition(ds, omega).is_zero();
}

bool n0_closed_native(const DeformedStructure& ds, const Form& omega) {
  return ds.native_component(DPart::DelBar, ds.exp_pair(omega)).is_zero();
}

Form dolbeault_class_condition(const DeformedStructure& ds, const Form& omega) {
  require_top_holomorphic(ds, omega, 0);
  if (!ds.mc().is_zero()) fail(Errc::MCViolation, "Beltrami differential is not MC-flat");
  const FrameSpec& spec = ds.base();
  uint32_t n = spec.n();
  if (!d_component(spec, omega, DPart::MuBar).is_zero())
    fail(Errc::PreconditionViolation, "μ̄Ω != 0: Ω defines no μ̄-class");
  // [∂̄Ω] must vanish in H^{n,1}_μ̄, i.e. ∂̄Ω lies in im(μ̄: A^{n+1,-1} → A^{n,1})
  Form dbar_omega = d_component(spec, omega, DPart::DelBar);
  std::vector<Word> target = words_of_bidegree(n, n, 1);
  Matrix in = op_matrix(spec, DPart::MuBar, words_of_bidegree(n, n + 1, -1), target);
  std::vector<Scalar> rhs(target.size());
  for (size_t i = 0; i < target.size(); ++i) rhs[i] = dbar_omega.coeff(target[i]);
  if (!solve(in, rhs, nullptr))
    fail(Errc::PreconditionViolation, "∂̄Ω not in im μ̄: [[Ω]] is no Dolbeault class");
  return d_component(spec, contract(ds.phi_vf(), omega), DPart::Del) -
         Scalar::rational(1, 2) * contract(ds.abc().b, omega);
}

bool dolbeault_class_predicate(const DeformedStructure& ds, const Form& omega) {
  return dolbeault_class_condition(ds, omega).is_zero();
}

bool dolbeault_class_native(const DeformedStructure& ds, const Form& omega) {
  // in A^{n,*}_φ the incoming μ̄_φ is trivial, so the class conditions are
  // plain closedness under μ̄_φ and ∂̄_φ
  Form image = ds.exp_pair(omega);
  return ds.native_component(DPart::MuBar, image).is_zero() &&
         ds.native_component(DPart::DelBar, image).is_zero();
}

Form nq_closedness_condition(const DeformedStructure& ds, const Form& xi) {
  require_top_holomorphic(ds, xi, -1);
  const FrameSpec& spec = ds.base();
  uint32_t n = spec.n();
  // (I - φ̄·φ)Finv: identity on the holomorphic slots, I''-φ̄φ on the rest
  Matrix shrink = Matrix::identity(2 * n);
  Matrix anti = Matrix::identity(n) - ds.beltrami().bar_matrix() * ds.beltrami().matrix();
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) shrink.at(n + i, n + j) = anti.at(i, j);
  Form inner = finv_apply(shrink, xi);

  const VectorForm& pv = ds.phi_vf();
  Form t1 = d_component(spec, inner, DPart::DelBar) +
            d_component(spec, contract(pv, inner), DPart::Del) -
            contract(pv, d_component(spec, inner, DPart::Del)) -
            Scalar::rational(1, 2) * contract(ds.abc().b + ds.abc().c, inner);
  Form t2 = contract(weighted_phibar(ds),
                     d_component(spec, inner, DPart::MuBar) + contract(ds.mc(), inner));
  // outer (I' + (I''-φ̄φ)^{-1})Finv
  Matrix outer = Matrix::identity(2 * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) outer.at(n + i, n + j) = ds.transition().inv_anti.at(i, j);
  return finv_apply(outer, t1 - t2);
}

bool nq_closedness_predicate(const DeformedStructure& ds, const Form& xi) {
  return nq_closedness_condition(ds, xi).is_zero();
}

bool nq_closed_native(const DeformedStructure& ds, const Form& xi) {
  return ds.native_component(DPart::DelBar, ds.exp_pair(xi)).is_zero();
}

}  // namespace acx
