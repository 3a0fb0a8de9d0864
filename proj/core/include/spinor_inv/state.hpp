#pragma once

/// \file
/// Multiparticle spinor state tensors, local operations and the catalog of
/// worked example states.

#include "spinor_inv/gamma.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinv {

/// 4^n complex coefficients psi_{j k l ...}. Flat storage is row-major over
/// particle order A, B, C, ... with the last index fastest.
class StateTensor {
 public:
  StateTensor() = default;

  /// Throws std::invalid_argument unless coefficients.size() == 4^particles
  /// and particles >= 1.
  StateTensor(int particles, std::vector<cplx> coefficients);

  static StateTensor zeros(int particles);

  int particles() const { return n_; }
  std::size_t size() const { return c_.size(); }
  const std::vector<cplx>& coefficients() const { return c_; }
  const cplx* data() const { return c_.data(); }
  cplx operator[](std::size_t flat) const { return c_[flat]; }

  /// Coefficient at a multi-index (one entry per particle, each 0..3).
  cplx at(std::span<const int> index) const;

  /// sqrt(sum |psi|^2).
  double norm() const;
  StateTensor scaled(cplx lambda) const;
  StateTensor normalized() const;
  StateTensor conjugated() const;

  /// Two-particle state as the 4x4 matrix Psi_{AB}; throws unless n == 2.
  Mat4 as_matrix() const;
  static StateTensor from_matrix(const Mat4& psi);

  /// Exchanges two particle labels.
  StateTensor swapped(int a, int b) const;

 private:
  int n_ = 0;
  std::vector<cplx> c_;
};

/// 4^n.
std::size_t tensor_size(int particles);

/// Flat offset of a multi-index.
std::size_t flat_index(std::span<const int> index);

/// Multi-index of a flat offset.
std::vector<int> multi_index(std::size_t flat, int particles);

/// Single nonzero coefficient 1 at the given indices; throws
/// std::domain_error for an empty list or an index outside 0..3.
StateTensor basis_state(const std::vector<int>& indices);

/// Outer product of the spinors; throws std::domain_error when empty.
StateTensor product_state(const std::vector<Spinor>& spinors);

/// Complex Gaussian coefficients, normalized; deterministic per seed.
/// Throws std::domain_error unless 1 <= n <= 4.
StateTensor random_state(int particles, std::uint64_t seed);

/// A normalized random spinor; deterministic per seed.
Spinor random_spinor(std::uint64_t seed);

/// psi'_{..j..} = sum_m M_{jm} psi_{..m..} on the chosen particle; throws
/// std::out_of_range for a bad particle.
StateTensor apply_local(const StateTensor& state, int particle, const Mat4& m);

/// apply_local with a projector; the result is generally unnormalized.
StateTensor project_local(const StateTensor& state, int particle, Projector kind);

/// Maximum coefficient-wise distance.
double max_distance(const StateTensor& a, const StateTensor& b);

/// One magnitude the source states for an example state.
struct ExpectedValue {
  std::string invariant;
  double magnitude;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  StateTensor state;
  std::vector<ExpectedValue> expected;
};

/// Throws std::out_of_range listing the available names when unknown.
const CatalogEntry& catalog_state(std::string_view name);

/// Catalog names in a stable order (two-particle states first).
std::vector<std::string> catalog_names();

}  // namespace spinv
