#include "spinor_inv/forms.hpp"

#include <Eigen/SVD>

#include <stdexcept>
#include <string>

namespace spinv {

cplx bilinear(BilinearKind kind, const Spinor& psi, const Spinor& phi) {
  const Mat4& m = special(kind == BilinearKind::C ? Special::C : Special::C5);
  return (psi.transpose() * m * phi)(0, 0);
}

cplx sesquilinear(SesquilinearKind kind, const Spinor& psi, const Spinor& phi) {
  const Mat4& m = special(kind == SesquilinearKind::G0 ? Special::G0 : Special::G05);
  return (psi.adjoint() * m * phi)(0, 0);
}

cplx form(FormKind kind, const Spinor& psi, const Spinor& phi) {
  switch (kind) {
    case FormKind::C: return bilinear(BilinearKind::C, psi, phi);
    case FormKind::C5: return bilinear(BilinearKind::C5, psi, phi);
    case FormKind::G0: return sesquilinear(SesquilinearKind::G0, psi, phi);
    case FormKind::G05: return sesquilinear(SesquilinearKind::G05, psi, phi);
  }
  return {};
}

std::string_view form_kind_name(FormKind kind) {
  switch (kind) {
    case FormKind::C: return "C";
    case FormKind::C5: return "C5";
    case FormKind::G0: return "G0";
    case FormKind::G05: return "G05";
  }
  return "";
}

FormKind parse_form_kind(std::string_view name) {
  for (FormKind k : {FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05}) {
    if (form_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown form '" + std::string(name) + "' (expected C, C5, G0 or G05)");
}

const Mat4& form_matrix(FormKind kind) {
  switch (kind) {
    case FormKind::C: return special(Special::C);
    case FormKind::C5: return special(Special::C5);
    case FormKind::G0: return special(Special::G0);
    case FormKind::G05: return special(Special::G05);
  }
  throw std::invalid_argument("unknown form kind");
}

namespace {

Mat4 defect_matrix(FormKind kind, const Mat4& x) {
  const Mat4& m = form_matrix(kind);
  const bool bilinear_kind = kind == FormKind::C || kind == FormKind::C5;
  return (bilinear_kind ? Mat4(x.transpose()) : Mat4(x.adjoint())) * m + m * x;
}

// Real coordinates of a complex 4x4 matrix: real parts then imaginary parts.
Eigen::VectorXd real_coordinates(const Mat4& m) {
  Eigen::VectorXd v(32);
  for (int i = 0; i < 16; ++i) {
    v(i) = m(i / 4, i % 4).real();
    v(16 + i) = m(i / 4, i % 4).imag();
  }
  return v;
}

}  // namespace

double infinitesimal_defect(FormKind kind, const Mat4& x) { return max_abs(defect_matrix(kind, x)); }

int invariance_algebra_dimension(const std::vector<FormKind>& kinds, double tol) {
  if (kinds.empty()) return 32;
  // Columns: images of the 32 real basis directions under every condition.
  Eigen::MatrixXd a(32 * static_cast<Eigen::Index>(kinds.size()), 32);
  for (int b = 0; b < 32; ++b) {
    Mat4 x = Mat4::Zero();
    x((b % 16) / 4, b % 4) = b < 16 ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      a.block(32 * static_cast<Eigen::Index>(k), b, 32, 1) = real_coordinates(defect_matrix(kinds[k], x));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol) ++rank;
  }
  return 32 - rank;
}

int real_rank(const std::vector<Mat4>& mats, double tol) {
  if (mats.empty()) return 0;
  Eigen::MatrixXd a(32, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = real_coordinates(mats[j]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol) ++rank;
  }
  return rank;
}

}  // namespace spinv
