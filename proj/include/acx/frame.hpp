#pragma once

#include <map>
#include <vector>

#include "acx/form.hpp"
#include "acx/vectorform.hpp"

namespace acx {

/// Invariant section of the complexified tangent bundle: constant
/// coefficients on the frame vectors e_1..e_n, e_1̄..e_n̄.
struct VectorField {
  uint32_t n = 0;
  std::map<uint32_t, Scalar> coeff;  // frame index code -> coefficient

  VectorField() = default;
  explicit VectorField(uint32_t n_) : n(n_) {}
  static VectorField basis(uint32_t n, uint32_t code) {
    VectorField v(n);
    v.coeff.emplace(code, Scalar::one());
    return v;
  }

  bool is_zero() const { return coeff.empty(); }
  void add(uint32_t code, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeff.find(code);
    if (it == coeff.end()) {
      coeff.emplace(code, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }
  VectorField& operator+=(const VectorField& o) {
    for (const auto& [k, c] : o.coeff) add(k, c);
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(const Scalar& s, const VectorField& v) {
    VectorField out(v.n);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : v.coeff) out.coeff.emplace(k, s * c);
    return out;
  }
  VectorField operator-() const { return Scalar(-1) * *this; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a += -b; }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.n == b.n && a.coeff == b.coeff;
  }

  VectorField conj() const {
    VectorField out(n);
    for (const auto& [k, c] : coeff) out.coeff.emplace(idx_conj(n, k), c.conj());
    return out;
  }
  /// J acts on the complexified frame by ±i on the (1,0)/(0,1) parts.
  VectorField apply_J() const {
    VectorField out(n);
    for (const auto& [k, c] : coeff)
      out.coeff.emplace(k, (idx_is_anti(n, k) ? -Scalar::i() : Scalar::i()) * c);
    return out;
  }
  VectorField part(bool anti) const {
    VectorField out(n);
    for (const auto& [k, c] : coeff)
      if (idx_is_anti(n, k) == anti) out.coeff.emplace(k, c);
    return out;
  }
  std::string str() const;
};

enum class DPart { Mu, Del, DelBar, MuBar };
inline const char* dpart_name(DPart p) {
  switch (p) {
    case DPart::Mu: return "mu";
    case DPart::Del: return "del";
    case DPart::DelBar: return "delbar";
    case DPart::MuBar: return "mubar";
  }
  return "?";
}
/// Bidegree shift of each component of d.
inline std::pair<int, int> dpart_shift(DPart p) {
  switch (p) {
    case DPart::Mu: return {2, -1};
    case DPart::Del: return {1, 0};
    case DPart::DelBar: return {0, 1};
    case DPart::MuBar: return {-1, 2};
  }
  return {0, 0};
}
constexpr DPart kDParts[4] = {DPart::Mu, DPart::Del, DPart::DelBar, DPart::MuBar};

struct ValidationEntry {
  uint32_t gamma;  // holomorphic coframe index code
  Form residual;   // d(dθ^γ)
};
struct ValidationReport {
  bool pass = false;
  bool degrees_ok = false;
  std::vector<ValidationEntry> entries;  // one per holomorphic generator
  const Form* first_failure() const {
    for (const auto& e : entries)
      if (!e.residual.is_zero()) return &e.residual;
    return nullptr;
  }
};

/// Frame data: complex dimension n and the table dθ^γ for the holomorphic
/// coframe, each a form of total degree 2.  Conjugates and bracket constants
/// are derived; the structure is valid when d∘d vanishes on the generators.
class FrameSpec {
 public:
  FrameSpec() = default;
  FrameSpec(uint32_t n, std::vector<Form> dtheta_holo);

  uint32_t n() const { return n_; }
  uint32_t dim() const { return 2 * n_; }
  /// dθ^code for any coframe index (antiholomorphic by conjugation).
  const Form& dtheta(uint32_t code) const { return dtheta_[code]; }
  /// [e_a, e_b] from the bracket constants c^γ_{ab} = -(dθ^γ)(e_a, e_b).
  const VectorField& bracket_basis(uint32_t a, uint32_t b) const;
  bool bracket_sign_flip(uint32_t a, uint32_t b) const { return a > b; }

  ValidationReport validate() const;
  void ensure_valid() const;

 private:
  uint32_t n_ = 0;
  std::vector<Form> dtheta_;                       // size 2n
  std::vector<std::vector<VectorField>> bracket_;  // upper triangle a<b
  VectorField zero_field_;
};

ValidationReport validate_frame(const FrameSpec& spec);

Form exterior_d(const FrameSpec& spec, const Form& a);
Form d_component(const FrameSpec& spec, const Form& a, DPart part);

/// Contraction of an invariant vector field (an anti-derivation).
Form interior(const VectorField& X, const Form& a);

VectorField vector_bracket(const FrameSpec& spec, const VectorField& X, const VectorField& Y);

/// Cartan formula i_X d + d i_X on invariant forms.
Form lie_derivative_form(const FrameSpec& spec, const VectorField& X, const Form& a);

/// Nijenhuis tensor N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] assembled
/// as a vector-valued 2-form from the bracket constants.
VectorForm nijenhuis(const FrameSpec& spec);

}  // namespace acx
