#pragma once

/// \file
/// Non-relativistic spin-1/2 invariants used as reduction targets: the
/// two-qubit concurrence, the three-qubit polynomials J1..J5 and s2.

#include "spinor_inv/gamma.hpp"

#include <cstdint>
#include <vector>

namespace spinv {

/// 2^n complex coefficients, row-major over qubits with the last index
/// fastest (same convention as StateTensor).
class QubitTensor {
 public:
  QubitTensor() = default;
  /// Throws std::invalid_argument unless coefficients.size() == 2^particles
  /// and particles >= 1.
  QubitTensor(int particles, std::vector<cplx> coefficients);

  int particles() const { return n_; }
  std::size_t size() const { return c_.size(); }
  const std::vector<cplx>& coefficients() const { return c_; }
  cplx operator[](std::size_t flat) const { return c_[flat]; }
  /// Throws std::invalid_argument unless n == 2.
  cplx at(int a, int b) const;
  /// Throws std::invalid_argument unless n == 3.
  cplx at(int a, int b, int c) const;
  QubitTensor scaled(cplx lambda) const;

 private:
  int n_ = 0;
  std::vector<cplx> c_;
};

/// Complex Gaussian coefficients, normalized; deterministic per seed.
/// Throws std::domain_error unless 1 <= n <= 8.
QubitTensor random_qubits(int particles, std::uint64_t seed);

/// psi_00 psi_11 - psi_01 psi_10. Throws std::invalid_argument unless n == 2.
cplx wootters_concurrence(const QubitTensor& t);

/// J1 is the squared norm, J2..J4 are the printed differences plus J1^2
/// (first, second and third qubit singled out) and J5 the Kempe sextic.
/// Throws std::invalid_argument unless n == 3 and 1 <= k <= 5.
cplx kempe_J(int k, const QubitTensor& t);

/// The printed four-block (3,1) expansion. Throws std::invalid_argument
/// unless n == 3.
cplx s2(const QubitTensor& t);

}  // namespace spinv
