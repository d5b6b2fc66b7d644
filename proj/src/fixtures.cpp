#include "acx/fixtures.hpp"

namespace acx::fixtures {

FrameSpec torus(uint32_t n) { return FrameSpec(n, std::vector<Form>(n, Form(n))); }

FrameSpec mubar3() {
  std::vector<Form> dt(3, Form(3));
  dt[0] = Form::monomial(3, {idx_anti(3, 2), idx_anti(3, 3)}, Scalar::one());
  return FrameSpec(3, dt);
}

FrameSpec kodaira_thurston() {
  std::vector<Form> dt(2, Form(2));
  dt[1] = Form::monomial(2, {idx_holo(2, 1), idx_anti(2, 1)}, Scalar::one());
  return FrameSpec(2, dt);
}

FrameSpec hybrid3() {
  std::vector<Form> dt(3, Form(3));
  dt[0] = Form::monomial(3, {idx_holo(3, 2), idx_holo(3, 3)}, Scalar::one()) +
          Form::monomial(3, {idx_anti(3, 2), idx_anti(3, 3)}, Scalar::one());
  return FrameSpec(3, dt);
}

FrameSpec solvable3() {
  std::vector<Form> dt(3, Form(3));
  dt[0] = Form::monomial(3, {idx_holo(3, 1), idx_holo(3, 3)}, Scalar::one());
  dt[1] = Form::monomial(3, {idx_holo(3, 2), idx_holo(3, 3)}, Scalar(-2));
  return FrameSpec(3, dt);
}

FrameSpec mixed3() {
  std::vector<Form> dt(3, Form(3));
  dt[0] = Form::monomial(3, {idx_anti(3, 2), idx_anti(3, 3)}, Scalar::one());
  dt[1] = Form::monomial(3, {idx_holo(3, 2), idx_holo(3, 3)}, Scalar::one());
  return FrameSpec(3, dt);
}

FrameSpec invalid_d2() {
  std::vector<Form> dt(2, Form(2));
  dt[0] = Form::monomial(2, {idx_anti(2, 1), idx_anti(2, 2)}, Scalar::one());
  dt[1] = Form::monomial(2, {idx_holo(2, 1), idx_anti(2, 1)}, Scalar::one());
  return FrameSpec(2, dt);
}

Beltrami phi_t(uint32_t n, const Scalar& t) { return phi_diag(n, 1, t); }

Beltrami phi_diag(uint32_t n, uint32_t k, const Scalar& t) {
  Matrix m(n, n);
  m.at(k - 1, k - 1) = t;
  return Beltrami(m);
}

std::vector<std::pair<std::string, FrameSpec>> all_valid() {
  return {
      {"torus2", torus(2)},           {"torus3", torus(3)},
      {"mubar3", mubar3()},           {"kodaira_thurston", kodaira_thurston()},
      {"hybrid3", hybrid3()},         {"solvable3", solvable3()},
      {"mixed3", mixed3()},
  };
}

}  // namespace acx::fixtures
