#include "acx/form.hpp"

#include <algorithm>
#include <sstream>

namespace acx {

std::string idx_name(uint32_t n, uint32_t code) {
  std::string s = std::to_string(idx_value(n, code));
  if (idx_is_anti(n, code)) s += "bar";
  return s;
}

uint32_t idx_parse(uint32_t n, const std::string& text) {
  std::string body = text;
  bool anti = false;
  if (body.size() > 3 && body.substr(body.size() - 3) == "bar") {
    anti = true;
    body = body.substr(0, body.size() - 3);
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::ParseError, "bad coframe index '" + text + "'");
  unsigned long k = std::stoul(body);
  if (k < 1 || k > n) fail(Errc::RangeError, "coframe index '" + text + "' out of 1.." + std::to_string(n));
  return anti ? idx_anti(n, k) : idx_holo(n, k);
}

int wedge_word_sign(Word a, Word b) {
  if (a & b) return 0;
  int inversions = 0;
  Word bb = b;
  while (bb) {
    uint32_t j = __builtin_ctz(bb);
    bb &= bb - 1;
    // indices of a strictly above j must move past j
    inversions += __builtin_popcount(a & ~((2u << j) - 1u));
  }
  return (inversions & 1) ? -1 : 1;
}

bool interior_word(Word w, uint32_t code, Word* out, int* sign) {
  Word bit = 1u << code;
  if (!(w & bit)) return false;
  int pos = __builtin_popcount(w & (bit - 1u));
  *out = w & ~bit;
  *sign = (pos & 1) ? -1 : 1;
  return true;
}

void conj_word(uint32_t n, Word w, Word* out, int* sign) {
  Word lo = w & ((1u << n) - 1u);
  Word hi = w >> n;
  *out = hi | (lo << n);
  int p = __builtin_popcount(lo), q = __builtin_popcount(hi);
  *sign = ((p * q) & 1) ? -1 : 1;
}

std::vector<uint32_t> word_indices(Word w) {
  std::vector<uint32_t> out;
  while (w) {
    out.push_back(__builtin_ctz(w));
    w &= w - 1;
  }
  return out;
}

Word word_from_indices_sorted(const std::vector<uint32_t>& idx) {
  Word w = 0;
  for (uint32_t c : idx) w |= 1u << c;
  return w;
}

bool lex_less_word(Word a, Word b) {
  auto ia = word_indices(a), ib = word_indices(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

Form Form::theta(uint32_t n, uint32_t code) {
  Form f(n);
  if (code >= 2 * n) fail(Errc::IndexOutOfRange, "coframe index " + std::to_string(code));
  f.add_term(1u << code, Scalar::one());
  return f;
}

Form Form::monomial(uint32_t n, const std::vector<uint32_t>& codes, const Scalar& coeff) {
  Form f(n);
  Word w = 0;
  int sgn = 1;
  for (uint32_t c : codes) {
    if (c >= 2 * n) fail(Errc::IndexOutOfRange, "coframe index " + std::to_string(c));
    Word bit = 1u << c;
    if (w & bit) return f;  // repeated factor
    sgn *= wedge_word_sign(w, bit);
    w |= bit;
  }
  f.add_term(w, coeff * Scalar(sgn));
  return f;
}

void Form::add_term(Word w, const Scalar& c) {
  if (c.is_zero()) return;
  if (n_ == 0 && w != 0) fail(Errc::IndexOutOfRange, "term on zero-dimensional frame");
  if (w >> (2 * n_)) fail(Errc::IndexOutOfRange, "word exceeds frame dimension");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Form::homogeneous(int* p, int* q) const {
  bool first = true;
  int pp = 0, qq = 0;
  for (const auto& [w, c] : terms_) {
    int wp = word_holo_degree(n_, w), wq = word_anti_degree(n_, w);
    if (first) {
      pp = wp;
      qq = wq;
      first = false;
    } else if (wp != pp || wq != qq) {
      return false;
    }
  }
  if (p) *p = pp;
  if (q) *q = qq;
  return true;
}

int Form::max_total_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, word_degree(w));
  return d;
}

Form& Form::operator+=(const Form& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != n_ && !o.terms_.empty())
    fail(Errc::IndexOutOfRange, "mixing forms over different frames");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != n_ && !o.terms_.empty())
    fail(Errc::IndexOutOfRange, "mixing forms over different frames");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Form Form::operator-() const {
  Form out(n_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Form operator*(const Scalar& c, const Form& f) {
  Form out(f.n_);
  if (c.is_zero()) return out;
  for (const auto& [w, s] : f.terms_) out.terms_.emplace(w, c * s);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) fail(Errc::IndexOutOfRange, "wedge over different frames");
  Form out(a.n());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      int sgn = wedge_word_sign(wa, wb);
      if (sgn == 0) continue;
      out.add_term(wa | wb, Scalar(sgn) * ca * cb);
    }
  }
  return out;
}

Form conjugate(const Form& a) {
  Form out(a.n());
  for (const auto& [w, c] : a.terms()) {
    Word cw;
    int sgn;
    conj_word(a.n(), w, &cw, &sgn);
    out.add_term(cw, Scalar(sgn) * c.conj());
  }
  return out;
}

Form project(const Form& a, int p, int q) {
  Form out(a.n());
  if (p < 0 || q < 0) return out;
  for (const auto& [w, c] : a.terms()) {
    if (word_holo_degree(a.n(), w) == p && word_anti_degree(a.n(), w) == q) out.add_term(w, c);
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, Form>> bigraded_parts(const Form& a) {
  std::map<std::pair<int, int>, Form> acc;
  for (const auto& [w, c] : a.terms()) {
    auto key = std::make_pair(word_holo_degree(a.n(), w), word_anti_degree(a.n(), w));
    auto it = acc.find(key);
    if (it == acc.end()) it = acc.emplace(key, Form(a.n())).first;
    it->second.add_term(w, c);
  }
  return {acc.begin(), acc.end()};
}

int eval_word_on_basis(Word w, const std::vector<uint32_t>& codes) {
  if (static_cast<int>(codes.size()) != word_degree(w)) return 0;
  Word seen = 0;
  for (uint32_t c : codes) {
    Word bit = 1u << c;
    if (!(w & bit) || (seen & bit)) return 0;
    seen |= bit;
  }
  // parity of the permutation sorting `codes` ascending
  int sgn = 1;
  std::vector<uint32_t> v = codes;
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) {
        std::swap(v[i], v[j]);
        sgn = -sgn;
      }
    }
  }
  return sgn;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (uint32_t code : word_indices(w)) os << "*t" << idx_name(n_, code);
  }
  return os.str();
}

}  // namespace acx
