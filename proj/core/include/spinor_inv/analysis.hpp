#pragma once

/// \file
/// Weight-vector balancedness tests and numeric span ranks of invariant
/// families.

#include "spinor_inv/state.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spinv {

/// Eigenvalue of gamma^1 gamma^2 on basis spinor j, divided by i: +1 for
/// j in {1,3}, -1 for j in {0,2}. Throws std::domain_error outside 0..3.
int index_weight(int j);

struct WeightSystem {
  int particles = 0;
  std::vector<std::size_t> support;        // flat indices, ascending
  std::vector<std::vector<int>> weights;   // one per support element
};

/// Support is every coefficient with |c| > support_epsilon * max|c|.
/// Throws std::domain_error for a zero state or a negative epsilon.
WeightSystem weight_vectors(const StateTensor& s, double support_epsilon = 1e-10);

/// Zero lies in the convex hull of the weights. Decided exactly with a
/// rational phase-one simplex (Bland's rule). Throws std::domain_error when
/// the list is empty or ragged.
bool is_balanced(const std::vector<std::vector<int>>& weights);
bool is_balanced(const WeightSystem& w);

/// Zero lies in the affine hull of the weights: exact rank test of the
/// augmented system over the rationals.
bool is_affinely_balanced(const std::vector<std::vector<int>>& weights);
bool is_affinely_balanced(const WeightSystem& w);

/// Randomized local-frame sweep. Each frame applies an independent random
/// spatial rotation to every particle and re-runs both tests. It can only
/// strengthen a "not semistable" reading; it never proves semistability.
struct FrameSweep {
  int frames = 0;
  int unbalanced = 0;           // frames where the rotated support is not balanced
  int affinely_unbalanced = 0;  // frames where it is not affinely balanced
};

FrameSweep frame_sweep(const StateTensor& s, int frames = 50, std::uint64_t seed = 0,
                       double support_epsilon = 1e-10);

struct RankReport {
  int rank = 0;
  int n_states = 0;
  std::vector<double> singular_values;  // descending
  double smallest_retained = 0.0;
  double largest_discarded = 0.0;  // 0 when nothing is discarded
};

/// Rank of the |names| x n_states matrix of values on random states, with
/// singular values above tol_rel * sigma_max retained. n_states = 0 selects
/// 3 * |names|. Throws std::invalid_argument on mixed particle counts or
/// n_states < 2 * |names|, and UnknownInvariant for a bad name.
RankReport numeric_rank(const std::vector<std::string>& names, int n_states = 0, std::uint64_t seed = 0,
                        double tol_rel = 1e-8);

}  // namespace spinv
