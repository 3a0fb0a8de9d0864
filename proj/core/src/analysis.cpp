#include "spinor_inv/analysis.hpp"

#include "spinor_inv/catalog.hpp"
#include "spinor_inv/lorentz.hpp"
#include "spinor_inv/parallel.hpp"

#include <Eigen/SVD>
#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spinv {
namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

void check_weights(const std::vector<std::vector<int>>& w) {
  if (w.empty()) throw std::domain_error("empty weight system");
  for (const auto& v : w) {
    if (v.size() != w.front().size()) throw std::domain_error("weight vectors of different lengths");
  }
}

std::vector<std::vector<int>> distinct(const std::vector<std::vector<int>>& w) {
  std::set<std::vector<int>> s(w.begin(), w.end());
  return {s.begin(), s.end()};
}

// Rank by fraction-exact Gaussian elimination.
int exact_rank(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int index_weight(int j) {
  if (j < 0 || j > 3) throw std::domain_error("spinor index must be 0..3");
  return (j == 1 || j == 3) ? 1 : -1;
}

WeightSystem weight_vectors(const StateTensor& s, double support_epsilon) {
  if (support_epsilon < 0.0) throw std::domain_error("support epsilon must be nonnegative");
  double peak = 0.0;
  for (const auto& c : s.coefficients()) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) throw std::domain_error("zero state has empty support");
  WeightSystem w;
  w.particles = s.particles();
  for (std::size_t f = 0; f < s.size(); ++f) {
    if (std::abs(s[f]) <= support_epsilon * peak) continue;
    const auto idx = multi_index(f, s.particles());
    std::vector<int> v;
    for (int j : idx) v.push_back(index_weight(j));
    w.support.push_back(f);
    w.weights.push_back(std::move(v));
  }
  return w;
}

bool is_balanced(const std::vector<std::vector<int>>& weights) {
  check_weights(weights);
  const auto w = distinct(weights);
  const std::size_t n = w.front().size();
  const std::size_t k = w.size();
  // Constraints: sum_j lambda_j w_j[i] = 0 (i < n), sum_j lambda_j = 1.
  // Tableau over columns [lambda (k) | artificial (m) | rhs], one
  // artificial per row; phase one minimizes the artificial sum.
  const std::size_t m = n + 1;
  const std::size_t cols = k + m + 1;
  Matrix t(m, std::vector<mpq_class>(cols, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i][j] = w[j][i];
  }
  for (std::size_t j = 0; j < k; ++j) t[n][j] = 1;
  t[n][cols - 1] = 1;
  for (std::size_t i = 0; i < m; ++i) t[i][k + i] = 1;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  // Reduced costs of the phase-one objective (minimize sum of artificials).
  auto reduced_cost = [&](std::size_t col) {
    mpq_class c = col >= k && col < k + m ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= k && basis[i] < k + m) c -= t[i][col];
    }
    return c;
  };

  for (;;) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t col = 0; col + 1 < cols; ++col) {
      if (reduced_cost(col) < 0) {
        enter = col;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const mpq_class ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot occur in phase one
    const mpq_class piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  mpq_class objective = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= k && basis[i] < k + m) objective += t[i][cols - 1];
  }
  return objective == 0;
}

bool is_balanced(const WeightSystem& w) { return is_balanced(w.weights); }

bool is_affinely_balanced(const std::vector<std::vector<int>>& weights) {
  check_weights(weights);
  const auto w = distinct(weights);
  const std::size_t n = w.front().size();
  Matrix a(n + 1, std::vector<mpq_class>(w.size(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) a[i][j] = w[j][i];
  }
  for (std::size_t j = 0; j < w.size(); ++j) a[n][j] = 1;
  Matrix aug = a;
  for (std::size_t i = 0; i <= n; ++i) aug[i].push_back(i == n ? 1 : 0);
  return exact_rank(a) == exact_rank(aug);
}

bool is_affinely_balanced(const WeightSystem& w) { return is_affinely_balanced(w.weights); }

FrameSweep frame_sweep(const StateTensor& s, int frames, std::uint64_t seed, double support_epsilon) {
  FrameSweep out;
  out.frames = frames;
  for (int f = 0; f < frames; ++f) {
    StateTensor r = s;
    for (int p = 0; p < s.particles(); ++p) {
      const std::uint64_t sub = seed * 1000003ULL + static_cast<std::uint64_t>(f) * 16ULL + static_cast<std::uint64_t>(p);
      r = apply_local(r, p, random_rotation(sub));
    }
    const WeightSystem w = weight_vectors(r, support_epsilon);
    if (!is_balanced(w)) ++out.unbalanced;
    if (!is_affinely_balanced(w)) ++out.affinely_unbalanced;
  }
  return out;
}

RankReport numeric_rank(const std::vector<std::string>& names, int n_states, std::uint64_t seed, double tol_rel) {
  if (names.empty()) throw std::invalid_argument("numeric_rank needs at least one name");
  const int particles = invariant(names.front()).particles;
  for (const auto& n : names) {
    if (invariant(n).particles != particles) throw std::invalid_argument("names mix particle counts");
  }
  const int rows = static_cast<int>(names.size());
  if (n_states == 0) n_states = 3 * rows;
  if (n_states < 2 * rows) throw std::invalid_argument("numeric_rank needs n_states >= 2 * |names|");

  Eigen::MatrixXcd m(rows, n_states);
  parallel_for(static_cast<std::size_t>(n_states), [&](std::size_t k) {
    const StateTensor s = random_state(particles, seed + k);
    Evaluator ev(s);
    for (int i = 0; i < rows; ++i) m(i, static_cast<Eigen::Index>(k)) = ev(names[static_cast<std::size_t>(i)]);
  });
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  RankReport r;
  r.n_states = n_states;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r.singular_values.push_back(sv(i));
  const double cut = tol_rel * (sv.size() ? sv(0) : 0.0);
  for (double v : r.singular_values) {
    if (v > cut) {
      ++r.rank;
      r.smallest_retained = v;
    } else if (r.largest_discarded == 0.0) {
      r.largest_discarded = v;
    }
  }
  return r;
}

}  // namespace spinv
