#include <algorithm>
#include <vector>

#include "acx/form.hpp"
#include "acx/random.hpp"
#include "doctest.h"

using namespace acx;

namespace {

Form th(uint32_t n, std::initializer_list<uint32_t> codes, Scalar c = Scalar::one()) {
  return Form::monomial(n, std::vector<uint32_t>(codes), c);
}

// Independent sign oracle: count inversions of the index sequence directly.
int inversion_sign(const std::vector<uint32_t>& seq) {
  int sgn = 1;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) sgn = -sgn;
  return sgn;
}

}  // namespace

TEST_CASE("scalar arithmetic is an exact field") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    Scalar a = random_small_scalar(rng), b = random_small_scalar(rng),
           c = random_small_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one());
  }
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::from_strings("2/4", "0") == Scalar::rational(1, 2));
  CHECK_THROWS_AS(Scalar::from_strings("1/0", "0"), Error);
  CHECK_THROWS_AS(Scalar::from_strings("zz", "0"), Error);
}

TEST_CASE("wedge basics") {
  uint32_t n = 2;
  Form t1 = Form::theta(n, idx_holo(n, 1));
  Form t2 = Form::theta(n, idx_holo(n, 2));
  CHECK(wedge(t1, t1).is_zero());
  CHECK(wedge(t1, t2) == th(n, {0, 1}));
  CHECK(wedge(t2, t1) == th(n, {0, 1}, Scalar(-1)));

  // (θ1+θ2b) ∧ (θ2+θ1b) expands with the canonical-order signs
  Form a = t1 + Form::theta(n, idx_anti(n, 2));
  Form b = t2 + Form::theta(n, idx_anti(n, 1));
  Form expect = th(n, {0, 1}) + th(n, {0, 2}) - th(n, {1, 3}) - th(n, {2, 3});
  CHECK(wedge(a, b) == expect);
}

TEST_CASE("wedge is graded commutative and associative") {
  uint32_t n = 3;
  Rng rng(11);
  for (int it = 0; it < 30; ++it) {
    int p1 = static_cast<int>(rng.below(3)), q1 = static_cast<int>(rng.below(2));
    int p2 = static_cast<int>(rng.below(2)), q2 = static_cast<int>(rng.below(2));
    Form a = random_form(rng, n, p1, q1);
    Form b = random_form(rng, n, p2, q2);
    Form c = random_form(rng, n, 1, 0);
    int sgn = ((p1 + q1) * (p2 + q2)) % 2 ? -1 : 1;
    CHECK(wedge(a, b) == Scalar(sgn) * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("repeated index kills a monomial, permutation sign tracked") {
  uint32_t n = 3;
  CHECK(Form::monomial(n, {0, 2, 0}, Scalar::one()).is_zero());

  std::vector<uint32_t> base = {0, 2, 4, 5};
  Form canon = Form::monomial(n, base, Scalar::one());
  std::vector<uint32_t> perm = base;
  std::sort(perm.begin(), perm.end());
  int guard = 0;
  do {
    Form built = Form::monomial(n, perm, Scalar::one());
    CHECK(built == Scalar(inversion_sign(perm)) * canon);
  } while (std::next_permutation(perm.begin(), perm.end()) && ++guard < 30);
}

TEST_CASE("conjugation is an involution exchanging bidegrees") {
  uint32_t n = 2;
  CHECK(conjugate(Form::theta(n, idx_holo(n, 1))) == Form::theta(n, idx_anti(n, 1)));

  Form f = Scalar(mpq_class(1), mpq_class(1)) * th(n, {idx_holo(n, 1), idx_anti(n, 2)});
  // conj((1+i)·θ1∧θ2b) = (1-i)·θ1b∧θ2 = -(1-i)·θ2∧θ1b
  Form expect = Scalar(mpq_class(-1), mpq_class(1)) * th(n, {idx_holo(n, 2), idx_anti(n, 1)});
  CHECK(conjugate(f) == expect);

  Rng rng(3);
  for (int it = 0; it < 40; ++it) {
    Form a = random_form(rng, 3, static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)));
    CHECK(conjugate(conjugate(a)) == a);
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) CHECK(conjugate(project(a, p, q)) == project(conjugate(a), q, p));
  }
}

TEST_CASE("projection is idempotent and resolves the identity") {
  uint32_t n = 3;
  Form mix = th(n, {0, 4}) + th(n, {0, 1});
  CHECK(project(mix, 1, 1) == th(n, {0, 4}));
  CHECK(project(mix, 4, 3).is_zero());

  Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    Form a(n);
    for (Word w = 0; w < (1u << (2 * n)); ++w)
      if (rng.below(3) == 0) a.add_term(w, random_small_scalar(rng));
    Form sum(n);
    for (int p = 0; p <= static_cast<int>(n); ++p)
      for (int q = 0; q <= static_cast<int>(n); ++q) {
        Form piece = project(a, p, q);
        CHECK(project(piece, p, q) == piece);
        sum += piece;
      }
    CHECK(sum == a);
  }
}

TEST_CASE("index names round-trip") {
  uint32_t n = 3;
  for (uint32_t code = 0; code < 2 * n; ++code) CHECK(idx_parse(n, idx_name(n, code)) == code);
  CHECK_THROWS_AS(idx_parse(3, "4bar"), Error);
  CHECK_THROWS_AS(idx_parse(3, "0"), Error);
  CHECK_THROWS_AS(idx_parse(3, "x"), Error);
}

TEST_CASE("out-of-range words are rejected") {
  CHECK_THROWS_AS(Form::theta(2, 5), Error);
  CHECK_THROWS_AS(Form::monomial(2, {0, 4}, Scalar::one()), Error);
  Form a = Form::theta(2, 0);
  Form b = Form::theta(3, 0);
  CHECK_THROWS_AS(wedge(a, b), Error);
}

TEST_CASE("word evaluation under the determinant convention") {
  // θ0∧θ1 evaluated on (e1,e0) is -1, on (e0,e1) is +1, else 0
  Word w = 0b11;
  CHECK(eval_word_on_basis(w, {0, 1}) == 1);
  CHECK(eval_word_on_basis(w, {1, 0}) == -1);
  CHECK(eval_word_on_basis(w, {0, 0}) == 0);
  CHECK(eval_word_on_basis(w, {0, 2}) == 0);
}
