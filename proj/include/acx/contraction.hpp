#pragma once

#include <vector>

#include "acx/frame.hpp"
#include "acx/vectorform.hpp"

namespace acx {

/// i_ρ on scalar forms: ρ⌟a = Σ c · θ^w ∧ (e_γ ⌟ a) over the stored terms.
Form contract(const VectorForm& rho, const Form& a);

/// Same contraction through the normalized permutation-sum definition; kept
/// as an independent route and pinned equal to `contract` by tests.
Form contract_general(const VectorForm& rho, const Form& a);

/// i_ρ applied to the form slot of a vector-valued form.
VectorForm contract_into(const VectorForm& rho, const VectorForm& tau);

/// e^{i_φ} = Σ (1/k!) i_φ^k for φ ∈ A^{0,1}(T^{1,0}); the sum truncates at
/// the holomorphic degree of the input.
Form exp_contraction(const VectorForm& phi, const Form& a);

/// Frölicher–Nijenhuis bracket, extended bilinearly over stored terms from
/// the five-term formula on decomposables ρ⊗X, τ⊗Y.
VectorForm fn_bracket(const FrameSpec& spec, const VectorForm& phi, const VectorForm& psi);
/// Second expansion of the same bracket with coefficients pre-collected per
/// frame vector; must agree with fn_bracket on homogeneous inputs.
VectorForm fn_bracket_collected(const FrameSpec& spec, const VectorForm& phi,
                                const VectorForm& psi);

struct AbcParts {
  VectorForm a;  // A^{0,2}(T^{1,0}) component
  VectorForm b;  // A^{1,1}(T^{1,0}) component
  VectorForm c;  // A^{0,2}(T^{0,1}) component
};
/// Splits an element of A^{0,2}(T^{1,0}) ⊕ A^{1,1}(T^{1,0}) ⊕ A^{0,2}(T^{0,1});
/// throws TypeLeak when a term lies outside the three spaces.
AbcParts abc_decompose(const VectorForm& v);

/// ∂̄ of a frame vector from the bracket constants: ∂̄e = Σ θ^{j̄} ⊗ [e_{j̄}, e]^{1,0}.
VectorForm dbar_vector(const FrameSpec& spec, uint32_t code);
/// Extended Cauchy-Riemann operator on A^{0,p}(T^{1,0}):
/// ∂̄(ρ⊗Y) = ∂̄ρ⊗Y + (-1)^p ρ∧∂̄Y.
VectorForm vf_dbar(const FrameSpec& spec, const VectorForm& v);

/// i_φ i_ψ a − (-1)^{(q+1)(s+1)} i_ψ i_φ a for φ ∈ A^{0,q}(T^{1,0}),
/// ψ ∈ A^{0,s}(T^{1,0}); identically zero.
Form anticommutation_residual(const VectorForm& phi, const VectorForm& psi, const Form& a);

/// Connection on a trivial rank-r bundle: ∇s = ds + ω·s with an invariant
/// matrix of degree-1 forms.
struct Connection {
  uint32_t rank = 1;
  std::vector<std::vector<Form>> omega;  // rank x rank, possibly empty for ω=0

  static Connection trivial(uint32_t rank_) {
    Connection c;
    c.rank = rank_;
    return c;
  }
  const Form* entry(uint32_t i, uint32_t j) const {
    if (omega.empty()) return nullptr;
    return &omega[i][j];
  }
};

struct EValuedForm {
  std::vector<Form> comps;

  EValuedForm() = default;
  explicit EValuedForm(uint32_t rank, uint32_t n) : comps(rank, Form(n)) {}
  uint32_t rank() const { return static_cast<uint32_t>(comps.size()); }
  bool is_zero() const {
    for (const auto& f : comps)
      if (!f.is_zero()) return false;
    return true;
  }
  EValuedForm& operator+=(const EValuedForm& o);
  EValuedForm& operator-=(const EValuedForm& o);
  friend EValuedForm operator+(EValuedForm a, const EValuedForm& b) { return a += b; }
  friend EValuedForm operator-(EValuedForm a, const EValuedForm& b) { return a -= b; }
  friend EValuedForm operator*(const Scalar& c, const EValuedForm& s) {
    EValuedForm out = s;
    for (auto& f : out.comps) f = c * f;
    return out;
  }
  friend bool operator==(const EValuedForm& a, const EValuedForm& b) { return a.comps == b.comps; }
};

EValuedForm nabla_apply(const FrameSpec& spec, const Connection& conn, const EValuedForm& s);
/// Type component of ∇; ω contributes only to the Del/DelBar rows.
EValuedForm nabla_component(const FrameSpec& spec, const Connection& conn, DPart part,
                            const EValuedForm& s);
EValuedForm ev_contract(const VectorForm& rho, const EValuedForm& s);
EValuedForm ev_exp_contraction(const VectorForm& phi, const EValuedForm& s);

/// Generalized Lie derivative L^∇_ρ = i_ρ∘∇ + (-1)^{|ρ|} ∇∘i_ρ.
EValuedForm gen_lie(const FrameSpec& spec, const VectorForm& rho, const Connection& conn,
                    const EValuedForm& s);
/// Scalar trivial-bundle case with ∇ = d.
Form gen_lie_d(const FrameSpec& spec, const VectorForm& rho, const Form& a);
/// L^D_ρ for one type component D of d.
Form gen_lie_part(const FrameSpec& spec, const VectorForm& rho, DPart part, const Form& a);

}  // namespace acx
