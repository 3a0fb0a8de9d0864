#pragma once

/// \file
/// The four pointwise Lorentz invariant forms on pairs of spinors.

#include "spinor_inv/gamma.hpp"

#include <string_view>
#include <vector>

namespace spinv {

enum class BilinearKind { C, C5 };
enum class SesquilinearKind { G0, G05 };

/// psi^T M phi with M = C or C gamma^5.
cplx bilinear(BilinearKind kind, const Spinor& psi, const Spinor& phi);

/// psi^dagger M phi with M = gamma^0 or gamma^0 gamma^5.
cplx sesquilinear(SesquilinearKind kind, const Spinor& psi, const Spinor& phi);

/// All four forms in the order C, C5, G0, G05.
enum class FormKind { C, C5, G0, G05 };
cplx form(FormKind kind, const Spinor& psi, const Spinor& phi);

/// "C", "C5", "G0", "G05"; parse_form_kind throws std::invalid_argument.
std::string_view form_kind_name(FormKind kind);
FormKind parse_form_kind(std::string_view name);

/// The form's matrix: C, C gamma^5, gamma^0 or gamma^0 gamma^5.
const Mat4& form_matrix(FormKind kind);

/// Largest entry of X^T M + M X (bilinear) or X^dagger M + M X
/// (sesquilinear); zero iff exp(t X) preserves the form for all real t.
double infinitesimal_defect(FormKind kind, const Mat4& x);

/// Real dimension of the Lie algebra of matrices preserving every listed
/// form infinitesimally. An empty list gives 32.
int invariance_algebra_dimension(const std::vector<FormKind>& kinds, double tol = 1e-10);

/// Rank of the matrices viewed as vectors in R^32, by SVD with an absolute
/// threshold.
int real_rank(const std::vector<Mat4>& mats, double tol = 1e-10);

}  // namespace spinv
