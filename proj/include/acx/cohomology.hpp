#pragma once

#include <vector>

#include "acx/deformation.hpp"
#include "acx/matrix.hpp"

namespace acx {

/// Basis words of A^{p,q} in lexicographic index order (the pivot order for
/// every quotient computation).
std::vector<Word> words_of_bidegree(uint32_t n, int p, int q);

/// Ordered (p,q)-basis together with the exact matrices of μ̄ and ∂̄ out of it.
struct CochainBasis {
  int p = 0, q = 0;
  std::vector<Word> words;
  Matrix mubar_out;   // μ̄ : A^{p,q} -> A^{p-1,q+2}
  Matrix delbar_out;  // ∂̄ : A^{p,q} -> A^{p,q+1}
};
CochainBasis cochain_basis(const FrameSpec& spec, int p, int q);

struct MuBarCohomology {
  int p = 0, q = 0;
  int dim = 0;
  std::vector<Form> representatives;
};
/// ker(μ̄)/im(μ̄) on invariant forms, exact over the Gaussian rationals.
MuBarCohomology mu_bar_cohomology(const FrameSpec& spec, int p, int q);

struct DolbeaultCohomology {
  int p = 0, q = 0;
  int dim_mubar = 0;
  int dim = 0;
  std::vector<Form> representatives;
};
/// H^q of (H^{p,*}_μ̄, ∂̄).  The induced map is re-verified exactly: ∂̄ must
/// map ker μ̄ into ker μ̄ and im μ̄ into im μ̄, and the induced ∂̄² must
/// vanish; a failure throws InducedMapIllDefined.
DolbeaultCohomology dolbeault_cohomology(const FrameSpec& spec, int p, int q);

/// φ̄·(I' - φ·φ̄)^{-1} as an element of A^{1,0}(T^{0,1}).
VectorForm weighted_phibar(const DeformedStructure& ds);

/// Closedness condition for e^{i_φ|i_φ̄}(Ω), Ω ∈ A^{n,0}, MC(φ) = 0:
/// (∂̄Ω + ∂(φ⌟Ω) - (1/2)B(φ,φ)⌟Ω) - φ̄(I'-φφ̄)^{-1}⌟μ̄Ω.
Form n0_closedness_condition(const DeformedStructure& ds, const Form& omega);
bool n0_closedness_predicate(const DeformedStructure& ds, const Form& omega);
/// Native route: ∂̄_φ(e^{i_φ|i_φ̄}Ω) = 0 through the deformed frame.
bool n0_closed_native(const DeformedStructure& ds, const Form& omega);

/// Dolbeault-class condition ∂(φ⌟Ω) - (1/2)B(φ,φ)⌟Ω for [[Ω]] with
/// μ̄Ω = 0 and ∂̄Ω ∈ im μ̄; preconditions are checked.
Form dolbeault_class_condition(const DeformedStructure& ds, const Form& omega);
bool dolbeault_class_predicate(const DeformedStructure& ds, const Form& omega);
bool dolbeault_class_native(const DeformedStructure& ds, const Form& omega);

/// (n,q)-form condition of the unreduced chain (no MC hypothesis).
Form nq_closedness_condition(const DeformedStructure& ds, const Form& xi);
bool nq_closedness_predicate(const DeformedStructure& ds, const Form& xi);
bool nq_closed_native(const DeformedStructure& ds, const Form& xi);

}  // namespace acx
