#pragma once

#include <map>
#include <utility>

#include "acx/form.hpp"

namespace acx {

/// Sparse vector-valued form Σ c·θ^w ⊗ e_γ over a fixed frame.  Keys pair a
/// canonical word with the frame index carrying the value.
struct VectorForm {
  uint32_t n = 0;
  std::map<std::pair<Word, uint32_t>, Scalar> terms;

  VectorForm() = default;
  explicit VectorForm(uint32_t n_) : n(n_) {}

  bool is_zero() const { return terms.empty(); }
  void add(Word w, uint32_t vec, const Scalar& c) {
    if (c.is_zero()) return;
    if ((w >> (2 * n)) || vec >= 2 * n) fail(Errc::IndexOutOfRange, "vector form term out of range");
    auto key = std::make_pair(w, vec);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  VectorForm& operator+=(const VectorForm& o) {
    if (n == 0) n = o.n;
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
  }
  friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }
  friend VectorForm operator*(const Scalar& s, const VectorForm& v) {
    VectorForm out(v.n);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : v.terms) out.terms.emplace(k, s * c);
    return out;
  }
  VectorForm operator-() const { return Scalar(-1) * *this; }
  friend VectorForm operator-(VectorForm a, const VectorForm& b) { return a += -b; }
  friend bool operator==(const VectorForm& a, const VectorForm& b) {
    return a.n == b.n && a.terms == b.terms;
  }
  friend bool operator!=(const VectorForm& a, const VectorForm& b) { return !(a == b); }

  /// True when all words share one (p,q) and all values one of T^{1,0}/T^{0,1}.
  bool homogeneous(int* p, int* q, bool* value_anti) const {
    bool first = true;
    int pp = 0, qq = 0;
    bool anti = false;
    for (const auto& [k, c] : terms) {
      int wp = word_holo_degree(n, k.first), wq = word_anti_degree(n, k.first);
      bool va = idx_is_anti(n, k.second);
      if (first) {
        pp = wp;
        qq = wq;
        anti = va;
        first = false;
      } else if (wp != pp || wq != qq || va != anti) {
        return false;
      }
    }
    if (p) *p = pp;
    if (q) *q = qq;
    if (value_anti) *value_anti = anti;
    return true;
  }
  int form_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms) {
      int wd = word_degree(k.first);
      if (d < 0) d = wd;
      if (d != wd) fail(Errc::Internal, "vector form not degree-homogeneous");
    }
    return d < 0 ? 0 : d;
  }

  std::string str() const;
};

/// c·θ^w ⊗ e_γ built from a scalar form.
VectorForm tensor(const Form& f, uint32_t vec);
/// Form part attached to a fixed frame vector.
Form value_component(const VectorForm& v, uint32_t vec);
VectorForm vf_conjugate(const VectorForm& v);
/// Wedge of a scalar form into the form slot: a∧(θ^w⊗e) = (a∧θ^w)⊗e.
VectorForm wedge_vf(const Form& a, const VectorForm& v);
VectorForm vf_project(const VectorForm& v, int p, int q, bool value_anti);

}  // namespace acx
