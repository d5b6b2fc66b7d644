#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "acx/errors.hpp"
#include "acx/scalar.hpp"

namespace acx {

/// Coframe indices are encoded as 0..2n-1: holomorphic θ^k ↦ k-1,
/// antiholomorphic θ^k̄ ↦ n+k-1.  The canonical monomial order (all
/// holomorphic ascending, then all antiholomorphic ascending) is then just
/// ascending encoded order, and a monomial is a bitmask over 2n slots.
using Word = uint32_t;

constexpr uint32_t kMaxDim = 15;  // complex dimension bound for the bitmask layout

inline uint32_t idx_holo(uint32_t n, uint32_t k) {
  if (k < 1 || k > n) fail(Errc::RangeError, "holomorphic index out of range");
  return k - 1;
}
inline uint32_t idx_anti(uint32_t n, uint32_t k) {
  if (k < 1 || k > n) fail(Errc::RangeError, "antiholomorphic index out of range");
  return n + k - 1;
}
inline bool idx_is_anti(uint32_t n, uint32_t code) { return code >= n; }
inline uint32_t idx_value(uint32_t n, uint32_t code) { return code < n ? code + 1 : code - n + 1; }
inline uint32_t idx_conj(uint32_t n, uint32_t code) { return code < n ? code + n : code - n; }
std::string idx_name(uint32_t n, uint32_t code);
uint32_t idx_parse(uint32_t n, const std::string& text);

inline int word_degree(Word w) { return __builtin_popcount(w); }
inline int word_holo_degree(uint32_t n, Word w) {
  return __builtin_popcount(w & ((1u << n) - 1u));
}
inline int word_anti_degree(uint32_t n, Word w) { return __builtin_popcount(w >> n); }

/// Sign of merging two disjoint canonical words (number of transpositions
/// needed to interleave b into a).  Returns 0 if the words overlap.
int wedge_word_sign(Word a, Word b);

/// Removes index `code` from `w`; sign is (-1)^{position of code in w}.
/// Returns false when the index is absent.
bool interior_word(Word w, uint32_t code, Word* out, int* sign);

/// Conjugate word: swap holomorphic and antiholomorphic halves; the
/// re-sorted result picks up (-1)^{p·q}.
void conj_word(uint32_t n, Word w, Word* out, int* sign);

std::vector<uint32_t> word_indices(Word w);
Word word_from_indices_sorted(const std::vector<uint32_t>& idx);

/// Lexicographic comparison of the index sequences (used where a
/// deterministic pivot order is required).
bool lex_less_word(Word a, Word b);

/// Sparse element of the complexified exterior algebra over a fixed
/// 2n-element coframe.  Stored words are canonical and zero coefficients are
/// pruned eagerly, so equality is plain map equality.
class Form {
 public:
  Form() = default;
  explicit Form(uint32_t n) : n_(n) {
    if (n > kMaxDim) fail(Errc::RangeError, "dimension too large");
  }

  static Form unit(uint32_t n) {
    Form f(n);
    f.add_term(0, Scalar::one());
    return f;
  }
  static Form theta(uint32_t n, uint32_t code);
  /// Builds coeff·θ^{i1}∧…∧θ^{ik} from an arbitrary index sequence,
  /// canonicalizing with the permutation sign (zero if an index repeats).
  static Form monomial(uint32_t n, const std::vector<uint32_t>& codes, const Scalar& coeff);

  uint32_t n() const { return n_; }
  uint32_t dim() const { return 2 * n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  Scalar coeff(Word w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(Word w, const Scalar& c);

  /// True when every stored word has the same (p,q); reports it.
  bool homogeneous(int* p, int* q) const;
  int max_total_degree() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form operator-() const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& c, const Form& f);
  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  std::string str() const;

 private:
  uint32_t n_ = 0;
  std::map<Word, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);
Form conjugate(const Form& a);
Form project(const Form& a, int p, int q);
/// Splits into homogeneous (p,q) pieces (zero pieces omitted).
std::vector<std::pair<std::pair<int, int>, Form>> bigraded_parts(const Form& a);

/// Evaluation of a word on a tuple of basis vectors under the determinant
/// convention: ±1 if the tuple is a permutation of the word's indices
/// (no repetitions), else 0.
int eval_word_on_basis(Word w, const std::vector<uint32_t>& codes);

}  // namespace acx
