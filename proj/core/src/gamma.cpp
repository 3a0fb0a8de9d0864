#include "spinor_inv/gamma.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace spinv {
namespace {

using Mat2 = Eigen::Matrix<cplx, 2, 2>;

Mat4 block(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  m << a, b, c, d;
  return m;
}

struct Tables {
  std::array<Mat4, 4> gammas;
  Mat4 c, c5, g5, g0, g05;
  std::array<Mat4, 4> projectors;

  Tables() {
    const cplx i(0.0, 1.0);
    Mat2 id = Mat2::Identity();
    Mat2 zero = Mat2::Zero();
    Mat2 s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -i, i, 0;
    s3 << 1, 0, 0, -1;
    gammas[0] = block(id, zero, zero, -id);
    gammas[1] = block(zero, s1, -s1, zero);
    gammas[2] = block(zero, s2, -s2, zero);
    gammas[3] = block(zero, s3, -s3, zero);
    c = i * gammas[1] * gammas[3];
    g5 = i * gammas[0] * gammas[1] * gammas[2] * gammas[3];
    c5 = c * g5;
    g0 = gammas[0];
    g05 = gammas[0] * g5;
    const Mat4 one = Mat4::Identity();
    projectors[0] = 0.5 * (one + g0);
    projectors[1] = 0.5 * (one - g0);
    projectors[2] = 0.5 * (one - g5);
    projectors[3] = 0.5 * (one + g5);
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const Mat4& gamma(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::domain_error("gamma index must be in 0..3, got " + std::to_string(mu));
  }
  return tables().gammas[static_cast<std::size_t>(mu)];
}

double metric(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) {
    throw std::domain_error("metric indices must be in 0..3");
  }
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

const Mat4& special(Special name) {
  const Tables& t = tables();
  switch (name) {
    case Special::C: return t.c;
    case Special::C5: return t.c5;
    case Special::G5: return t.g5;
    case Special::G0: return t.g0;
    case Special::G05: return t.g05;
  }
  throw std::invalid_argument("unknown special matrix");
}

Special parse_special(std::string_view name) {
  if (name == "C") return Special::C;
  if (name == "C5") return Special::C5;
  if (name == "G5") return Special::G5;
  if (name == "G0") return Special::G0;
  if (name == "G05") return Special::G05;
  throw std::invalid_argument("unknown special matrix '" + std::string(name) +
                              "' (expected C, C5, G5, G0, G05)");
}

const Mat4& projector(Projector kind) {
  return tables().projectors[static_cast<std::size_t>(kind)];
}

Projector parse_projector(std::string_view name) {
  if (name == "Pplus") return Projector::Pplus;
  if (name == "Pminus") return Projector::Pminus;
  if (name == "PL") return Projector::PL;
  if (name == "PR") return Projector::PR;
  throw std::invalid_argument("unknown projector '" + std::string(name) +
                              "' (expected Pplus, Pminus, PL, PR)");
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace spinv
