#pragma once

#include "acx/contraction.hpp"
#include "acx/matrix.hpp"

namespace acx {

/// Beltrami differential φ = φ^i_{j̄} θ^{j̄}⊗e_i given by its n×n
/// coefficient matrix (row index i, column index j).
class Beltrami {
 public:
  Beltrami() = default;
  explicit Beltrami(Matrix entries);
  static Beltrami zero(uint32_t n) { return Beltrami(Matrix(n, n)); }

  uint32_t n() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Matrix bar_matrix() const { return m_.conj(); }
  VectorForm vector_form() const;
  VectorForm bar_vector_form() const;

 private:
  Matrix m_;
};

/// Block transition data for a structure-generating Beltrami differential.
struct TransitionMatrix {
  Matrix phi;       // 2n x 2n, rows give θ_φ in the base coframe
  Matrix phi_inv;   // exact block inverse
  Matrix inv_holo;  // (I' - φ·φ̄)^{-1}
  Matrix inv_anti;  // (I'' - φ̄·φ)^{-1}
  Scalar det;       // det(I' - φ·φ̄)
};

/// Throws SingularTransition when det(I' - φ·φ̄) = 0.
TransitionMatrix build_transition(const Beltrami& phi);

/// φ^i_{j̄} = -φ^j_{ī} (the condition for J and J_φ to share a compatible
/// metric); when it holds, det(I'-φφ̄) = det(I'+φφ*) is asserted as well.
bool compatibility_antisymmetry(const Beltrami& phi);

/// Endomorphism-valued 1-forms are handled through their 2n x 2n coefficient
/// matrix E with E⌟θ^α = Σ_β E(α,β) θ^β.
Matrix endo_matrix_from_vector_form(const VectorForm& endo);
VectorForm endo_vector_form(uint32_t n, const Matrix& e);

/// Simultaneous contraction: applies E⌟ to every coframe factor of every
/// monomial.  Additive on 1-forms only (not in E).
Form finv_apply(const Matrix& endo, const Form& a);
Form finv_apply(const VectorForm& endo, const Form& a);

/// Base frame + Beltrami differential + everything derived: the deformed
/// (co)frame, the same exterior algebra re-expressed in it, and the operator
/// data entering the extension formulas.
class DeformedStructure {
 public:
  DeformedStructure(FrameSpec base, Beltrami phi);

  const FrameSpec& base() const { return base_; }
  const Beltrami& beltrami() const { return phi_; }
  const TransitionMatrix& transition() const { return trans_; }
  /// Structure data of the same algebra written in the deformed frame.
  const FrameSpec& spec_phi() const { return spec_phi_; }

  Form coframe_phi(uint32_t code) const;       // θ^code_φ in the base coframe
  VectorField frame_phi(uint32_t code) const;  // e_{φ,code} in the base frame

  Form to_deformed(const Form& base_form) const;
  Form to_base(const Form& deformed_form) const;

  /// e^{i_φ|i_φ̄}: basiswise substitution θ^α ↦ θ^α_φ.
  Form exp_pair(const Form& a) const;
  Form exp_pair_inverse(const Form& a) const;

  /// μ_φ / ∂_φ / ∂̄_φ / μ̄_φ computed natively through spec_phi and mapped
  /// back to the base coframe.
  Form native_component(DPart part, const Form& a) const;
  std::pair<int, int> deformed_bidegree(const Form& a) const;

  /// O₂ = d + [μ,i_φ] + [∂,i_φ] - i_{(1/2)(B+C)} + i_{MC}.
  Form o2_apply(const Form& a) const;
  Form o_chain(const Form& a) const;
  Form o_chain_part(const Form& a, DPart part) const;

  const VectorForm& phi_vf() const { return phi_vf_; }
  const VectorForm& phibar_vf() const { return phibar_vf_; }
  const VectorForm& bracket_phiphi() const { return bracket_; }
  const AbcParts& abc() const { return abc_; }
  const VectorForm& mc() const { return mc_; }
  const Matrix& o1_endo() const { return o1_; }
  const Matrix& o3_endo() const { return o3_; }

 private:
  FrameSpec base_;
  Beltrami phi_;
  TransitionMatrix trans_;
  FrameSpec spec_phi_;
  VectorForm phi_vf_, phibar_vf_, bracket_, mc_;
  AbcParts abc_;
  Matrix o1_, o3_;
};

DeformedStructure deform_structure(const FrameSpec& spec, const Beltrami& phi);

/// MC(φ) = ∂̄φ - (1/2)A(φ,φ) - (1/3!)(i_{[φ,φ]}φ - i_φ[φ,φ]).
VectorForm maurer_cartan(const FrameSpec& spec, const Beltrami& phi);
VectorForm maurer_cartan(const FrameSpec& spec, const VectorForm& phi_vf);

/// e^{-i_φ}∘∇∘e^{i_φ}(s) minus its closed form
/// ∇ - L^∇_φ - i_{(1/2)[φ,φ]} - i_{(1/3!)(i_{[φ,φ]}φ - i_φ[φ,φ])}; zero.
EValuedForm extension_residual(const FrameSpec& spec, const Connection& conn, const Beltrami& phi,
                               const EValuedForm& s);

/// [∇, i_φ^k]s minus k·i^{k-1}[∇,i_φ]s and the two correction terms; zero.
EValuedForm power_commutator_residual(const FrameSpec& spec, const Connection& conn,
                                      const Beltrami& phi, int k, const EValuedForm& s);
/// Same per type component of ∇ (the power form of the decomposition).
EValuedForm power_commutator_residual_part(const FrameSpec& spec, const Connection& conn,
                                           const Beltrami& phi, DPart part, int k,
                                           const EValuedForm& s);

/// Typewise conjugation identities e^{-i_φ}∘D∘e^{i_φ} for D ∈ {μ,∂,∂̄,μ̄};
/// returns LHS - RHS applied to a.
Form decomposed_extension_residual(const FrameSpec& spec, const Beltrami& phi, DPart part,
                                   const Form& a);
/// Connection version with D the type component of ∇.
EValuedForm decomposed_extension_residual_conn(const FrameSpec& spec, const Connection& conn,
                                               const Beltrami& phi, DPart part,
                                               const EValuedForm& s);

/// L^{D}_ρ for the type component D of a connection.
EValuedForm gen_lie_nabla_part(const FrameSpec& spec, const VectorForm& rho,
                               const Connection& conn, DPart part, const EValuedForm& s);

}  // namespace acx
