#include "acx/random.hpp"

namespace acx {

Scalar random_small_scalar(Rng& rng) {
  switch (rng.below(9)) {
    case 0: return Scalar(0);
    case 1: return Scalar(1);
    case 2: return Scalar(-1);
    case 3: return Scalar::rational(1, 2);
    case 4: return Scalar::rational(-1, 2);
    case 5: return Scalar(2);
    case 6: return Scalar(-2);
    case 7: return Scalar::i();
    default: return Scalar::rational(1, 2) * Scalar::i();
  }
}

Scalar random_small_nonzero(Rng& rng) {
  Scalar s;
  do {
    s = random_small_scalar(rng);
  } while (s.is_zero());
  return s;
}

Form random_form(Rng& rng, uint32_t n, int p, int q) {
  Form out(n);
  for (Word w = 0; w < (1u << (2 * n)); ++w) {
    if (word_holo_degree(n, w) != p || word_anti_degree(n, w) != q) continue;
    if (rng.below(2) == 0) continue;
    out.add_term(w, random_small_scalar(rng));
  }
  return out;
}

VectorForm random_vector_form(Rng& rng, uint32_t n, int p, int q, bool value_anti) {
  VectorForm out(n);
  for (Word w = 0; w < (1u << (2 * n)); ++w) {
    if (word_holo_degree(n, w) != p || word_anti_degree(n, w) != q) continue;
    for (uint32_t g = 0; g < n; ++g) {
      if (rng.below(3) != 0) continue;
      out.add(w, value_anti ? n + g : g, random_small_scalar(rng));
    }
  }
  return out;
}

Beltrami random_beltrami(Rng& rng, uint32_t n) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix m(n, n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) m.at(i, j) = random_small_scalar(rng);
    Beltrami b(m);
    Matrix holo = Matrix::identity(n) - m * b.bar_matrix();
    if (!holo.det().is_zero()) return b;
  }
  fail(Errc::Internal, "could not draw an invertible transition");
}

}  // namespace acx
