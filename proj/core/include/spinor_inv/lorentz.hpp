#pragma once

/// \file
/// Spinor representation of the proper orthochronous Lorentz group and the
/// discrete parity/time-reversal/charge-conjugation maps.

#include "spinor_inv/gamma.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace spinv {

/// Coefficients omega_{rho sigma} ordered as (01, 02, 03, 12, 13, 23).
struct LieAlgebraElement {
  std::array<double, 6> omega{};
};

/// Index pairs matching the LieAlgebraElement ordering.
inline constexpr std::array<std::array<int, 2>, 6> kGeneratorPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Samplers never exceed this boost rapidity.
inline constexpr double kMaxSampleScale = 3.0;

/// S^{rho sigma} = [gamma^rho, gamma^sigma] / 4; throws std::domain_error
/// when rho == sigma or an index is out of range.
Mat4 generator(int rho, int sigma);

/// The algebra element sum_{rho<sigma} omega_{rho sigma} S^{rho sigma}.
Mat4 algebra_matrix(const LieAlgebraElement& a);

/// exp of algebra_matrix(a) by Pade scaling and squaring.
Mat4 exp_element(const LieAlgebraElement& a);

/// Coefficients drawn uniformly in [-scale, scale]; deterministic per seed.
/// Throws std::domain_error unless 0 < scale <= kMaxSampleScale.
LieAlgebraElement random_element(std::uint64_t seed, double scale = 1.0);

/// exp_element(random_element(seed, scale)).
Mat4 random_proper_orthochronous(std::uint64_t seed, double scale = 1.0);

/// A random spatial rotation (only the 12, 13, 23 coefficients, angles in
/// [-pi, pi]).
Mat4 random_rotation(std::uint64_t seed);

enum class Discrete { P, CT, CPT };

/// S(P) = gamma^0, S(CT) = -i gamma^0 gamma^5, S(CPT) = -i gamma^5.
Mat4 discrete(Discrete name);
Discrete parse_discrete(std::string_view name);

enum class Antiunitary { T, Cconj, CP };

/// T: psi -> C psi*, Cconj: psi -> i gamma^2 psi*, CP: psi -> i C gamma^5 psi*.
Spinor apply_antiunitary(Antiunitary name, const Spinor& psi);

}  // namespace spinv
