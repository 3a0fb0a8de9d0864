#include "spinor_inv/lorentz.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace spinv {

Mat4 generator(int rho, int sigma) {
  if (rho == sigma) {
    throw std::domain_error("generator requires rho != sigma");
  }
  const Mat4& a = gamma(rho);
  const Mat4& b = gamma(sigma);
  return 0.25 * (a * b - b * a);
}

Mat4 algebra_matrix(const LieAlgebraElement& a) {
  Mat4 m = Mat4::Zero();
  for (std::size_t k = 0; k < kGeneratorPairs.size(); ++k) {
    if (a.omega[k] != 0.0) {
      m += a.omega[k] * generator(kGeneratorPairs[k][0], kGeneratorPairs[k][1]);
    }
  }
  return m;
}

Mat4 exp_element(const LieAlgebraElement& a) {
  const Mat4 m = algebra_matrix(a);
  return m.exp();
}

LieAlgebraElement random_element(std::uint64_t seed, double scale) {
  if (!(scale > 0.0) || scale > kMaxSampleScale) {
    throw std::domain_error("sampler scale must lie in (0, 3], got " + std::to_string(scale));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  LieAlgebraElement a;
  for (double& w : a.omega) w = dist(rng);
  return a;
}

Mat4 random_proper_orthochronous(std::uint64_t seed, double scale) {
  return exp_element(random_element(seed, scale));
}

Mat4 random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  LieAlgebraElement a;
  for (std::size_t k = 3; k < 6; ++k) a.omega[k] = dist(rng);
  return exp_element(a);
}

Mat4 discrete(Discrete name) {
  const cplx i(0.0, 1.0);
  switch (name) {
    case Discrete::P: return special(Special::G0);
    case Discrete::CT: return -i * special(Special::G05);
    case Discrete::CPT: return -i * special(Special::G5);
  }
  throw std::invalid_argument("unknown discrete map");
}

Discrete parse_discrete(std::string_view name) {
  if (name == "P") return Discrete::P;
  if (name == "CT") return Discrete::CT;
  if (name == "CPT") return Discrete::CPT;
  throw std::invalid_argument("unknown discrete map '" + std::string(name) + "'");
}

Spinor apply_antiunitary(Antiunitary name, const Spinor& psi) {
  const cplx i(0.0, 1.0);
  const Spinor conj = psi.conjugate();
  switch (name) {
    case Antiunitary::T: return special(Special::C) * conj;
    case Antiunitary::Cconj: return i * gamma(2) * conj;
    case Antiunitary::CP: return i * special(Special::C5) * conj;
  }
  throw std::invalid_argument("unknown antiunitary map");
}

}  // namespace spinv
