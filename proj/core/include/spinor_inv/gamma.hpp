#pragma once

/// \file
/// Dirac-representation gamma matrices, the derived sandwich matrices and
/// the energy and chirality projectors.

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace spinv {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Spinor = Eigen::Matrix<cplx, 4, 1>;

/// Absolute tolerance for identities between constant matrices.
inline constexpr double kConstTol = 1e-12;

/// gamma^mu in the Dirac representation; throws std::domain_error for mu
/// outside 0..3.
const Mat4& gamma(int mu);

/// Minkowski metric g^{mu nu} with signature (+,-,-,-).
double metric(int mu, int nu);

enum class Special { C, C5, G5, G0, G05 };

/// C = i gamma^1 gamma^3, C5 = C gamma^5, G5 = gamma^5, G0 = gamma^0,
/// G05 = gamma^0 gamma^5.
const Mat4& special(Special name);

/// Parses "C", "C5", "G5", "G0", "G05"; throws std::invalid_argument.
Special parse_special(std::string_view name);

enum class Projector { Pplus, Pminus, PL, PR };

/// P+- = (I +- gamma^0)/2, P_L = (I - gamma^5)/2, P_R = (I + gamma^5)/2.
const Mat4& projector(Projector kind);

/// Parses "Pplus", "Pminus", "PL", "PR"; throws std::invalid_argument.
Projector parse_projector(std::string_view name);

/// Largest entry modulus of m.
double max_abs(const Mat4& m);

}  // namespace spinv
