#pragma once

/// \file
/// Reductions of the Dirac invariants on states confined to one local
/// energy subspace (P+ or P-) or one chirality (P_L or P_R) per particle,
/// compared with non-relativistic qubit polynomials.

#include "spinor_inv/catalog.hpp"
#include "spinor_inv/nr_limit.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spinv {

enum class Block { Plus, Minus, Left, Right };

/// "P+", "P-", "L" or "R".
std::string_view block_name(Block b);
/// Accepts the block_name spellings; throws std::invalid_argument.
Block parse_block(std::string_view text);

/// Embeds qubit amplitudes into the chosen block of each particle. P+ uses
/// spinor indices {0,1}, P- uses {2,3}. L and R place amplitude a on index b
/// and -a (L) or +a (R) on index b + 2. Throws std::invalid_argument on a
/// length mismatch.
StateTensor embed_qubits(const QubitTensor& q, const std::vector<Block>& blocks);

/// A non-relativistic target polynomial.
struct ReductionTarget {
  std::string label;
  FormStatus status = FormStatus::Printed;
  std::function<cplx(const QubitTensor&)> fn;
  /// Modulus the fitted constant must have.
  double magnitude = 1.0;
};

/// Printed targets (and reconciled ones where a printed target fails) for
/// energy-block reductions. Names without an entry reduce to zero.
const std::vector<ReductionTarget>& reduction_targets(std::string_view name);

/// Names with at least one nonzero target, for the given particle count.
std::vector<std::string> reducible_names(int particles);

struct ReductionReport {
  std::string name;
  std::string target;  // "0" for the zero target
  FormStatus status = FormStatus::Printed;
  std::vector<Block> blocks;
  cplx constant = 0.0;    // least-squares c in value = c * target
  double residual = 0.0;  // max |value - c * target|
  double expected_magnitude = 0.0;
  bool passed = false;
};

/// Fits the named invariant against a target on n_states scaled random
/// qubit states embedded in the given blocks. target == nullptr selects
/// the zero target. Passing needs residual < tol and, for a nonzero
/// target, |c| within tol of the expected magnitude.
ReductionReport reduce(std::string_view name, const std::vector<Block>& blocks,
                       const ReductionTarget* target, int n_states = 30, std::uint64_t seed = 0,
                       double tol = 1e-8);

/// Reports for every target of the name (or the zero target when none).
std::vector<ReductionReport> reduce_energy_subspace(std::string_view name, const std::vector<Block>& blocks,
                                                    int n_states = 30, std::uint64_t seed = 0,
                                                    double tol = 1e-8);

/// Names asserted to vanish on chirality-projected states: the named
/// (2,2), (3,1) and (3,3) indicators, excluding products of the (2,0)
/// polynomials with other factors.
std::vector<std::string> weyl_null_names(int particles);

}  // namespace spinv
