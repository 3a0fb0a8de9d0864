#include "spinor_inv/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace spinv {
namespace {

double norm2(const QubitTensor& q) {
  double n = 0.0;
  for (const auto& z : q.coefficients()) n += std::norm(z);
  return n;
}

ReductionTarget printed(std::string label, std::function<cplx(const QubitTensor&)> fn) {
  return {std::move(label), FormStatus::Printed, std::move(fn), 1.0};
}

ReductionTarget reconciled(std::string label, std::function<cplx(const QubitTensor&)> fn) {
  return {std::move(label), FormStatus::Reconciled, std::move(fn), 1.0};
}

cplx J(int k, const QubitTensor& q) { return kempe_J(k, q); }

const std::map<std::string, std::vector<ReductionTarget>, std::less<>>& targets() {
  static const std::map<std::string, std::vector<ReductionTarget>, std::less<>> t = [] {
    std::map<std::string, std::vector<ReductionTarget>, std::less<>> m;
    auto conc = [](const QubitTensor& q) { return wootters_concurrence(q); };
    auto conc2 = [](const QubitTensor& q) { return cplx(std::norm(wootters_concurrence(q))); };
    m["I1"] = {printed("C", conc)};
    m["|I1|^2"] = {printed("|C|^2", conc2)};
    m["R1"] = {printed("|C|^2", conc2)};
    m["R4"] = {printed("|C|^2", conc2)};
    m["T1"] = {printed("2|C|^2", [](const QubitTensor& q) { return 2.0 * std::norm(wootters_concurrence(q)); })};
    m["I1*N1"] = {printed("C*J1", [](const QubitTensor& q) { return wootters_concurrence(q) * norm2(q); })};
    m["N1"] = {printed("J1", [](const QubitTensor& q) { return cplx(norm2(q)); })};

    m["V1"] = {printed("J1", [](const QubitTensor& q) { return J(1, q); })};
    m["B03_1"] = {printed("J2-J1^2", [](const QubitTensor& q) { return J(2, q) - J(1, q) * J(1, q); })};
    m["D03_1"] = {printed("J3-J1^2", [](const QubitTensor& q) { return J(3, q) - J(1, q) * J(1, q); })};
    m["Z03_1"] = {printed("J4-J1^2", [](const QubitTensor& q) { return J(4, q) - J(1, q) * J(1, q); })};
    m["B21_1"] = {printed("J2-J3-J4+J1^2",
                          [](const QubitTensor& q) { return J(2, q) - J(3, q) - J(4, q) + J(1, q) * J(1, q); })};
    m["D21_1"] = {printed("J3-J2-J4+J1^2",
                          [](const QubitTensor& q) { return J(3, q) - J(2, q) - J(4, q) + J(1, q) * J(1, q); })};
    m["Z21_1"] = {printed("J4-J3-J2+J1^2",
                          [](const QubitTensor& q) { return J(4, q) - J(3, q) - J(2, q) + J(1, q) * J(1, q); })};
    m["B12_1"] = {printed("-J2+J1^2", [](const QubitTensor& q) { return -J(2, q) + J(1, q) * J(1, q); })};
    m["D12_1"] = {printed("-J3+J1^2", [](const QubitTensor& q) { return -J(3, q) + J(1, q) * J(1, q); })};
    m["Z12_1"] = {printed("-J4+J1^2", [](const QubitTensor& q) { return -J(4, q) + J(1, q) * J(1, q); })};
    m["X12A_1"] = {printed("J4-J3", [](const QubitTensor& q) { return J(4, q) - J(3, q); }),
                   reconciled("J4-J2", [](const QubitTensor& q) { return J(4, q) - J(2, q); })};
    m["X12B_1"] = {printed("J2-J3", [](const QubitTensor& q) { return J(2, q) - J(3, q); }),
                   reconciled("J4-J3", [](const QubitTensor& q) { return J(4, q) - J(3, q); })};
    m["X12C_1"] = {printed("J2-J4", [](const QubitTensor& q) { return J(2, q) - J(4, q); }),
                   reconciled("J2-J3", [](const QubitTensor& q) { return J(2, q) - J(3, q); })};
    auto is2 = [](const QubitTensor& q) { return cplx(0.0, 1.0) * s2(q); };
    m["Z1"] = {printed("i*s2", is2)};
    m["D1"] = {printed("i*s2", is2)};
    m["B1"] = {printed("i*s2", is2)};
    m["K1"] = {printed("J5-J1^3", [](const QubitTensor& q) { return J(5, q) - std::pow(J(1, q), 3); })};
    m["W1"] = {printed("-2/3*J5+1/2*(J2+J3+J4)*J1-5/6*J1^3", [](const QubitTensor& q) {
      return -2.0 / 3.0 * J(5, q) + 0.5 * (J(2, q) + J(3, q) + J(4, q)) * J(1, q) -
             5.0 / 6.0 * std::pow(J(1, q), 3);
    })};
    return m;
  }();
  return t;
}

}  // namespace

std::string_view block_name(Block b) {
  switch (b) {
    case Block::Plus: return "P+";
    case Block::Minus: return "P-";
    case Block::Left: return "L";
    case Block::Right: return "R";
  }
  return "";
}

Block parse_block(std::string_view text) {
  for (Block b : {Block::Plus, Block::Minus, Block::Left, Block::Right}) {
    if (block_name(b) == text) return b;
  }
  throw std::invalid_argument("unknown block '" + std::string(text) + "' (expected P+, P-, L or R)");
}

StateTensor embed_qubits(const QubitTensor& q, const std::vector<Block>& blocks) {
  const int n = q.particles();
  if (static_cast<int>(blocks.size()) != n) {
    throw std::invalid_argument("embed_qubits needs one block per qubit");
  }
  std::vector<cplx> c(tensor_size(n), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < q.size(); ++flat) {
    // Each qubit index b fans out to one (P+/P-) or two (L/R) spinor
    // indices; enumerate the product of the choices.
    const int combos = 1 << n;
    for (int mask = 0; mask < combos; ++mask) {
      cplx amp = q[flat];
      bool valid = true;
      for (int p = 0; p < n && valid; ++p) {
        const int b = static_cast<int>((flat >> (n - 1 - p)) & 1U);
        const bool upper = (mask >> p) & 1;
        switch (blocks[static_cast<std::size_t>(p)]) {
          case Block::Plus:
            valid = !upper;
            idx[p] = b;
            break;
          case Block::Minus:
            valid = !upper;
            idx[p] = b + 2;
            break;
          case Block::Left:
            idx[p] = upper ? b + 2 : b;
            if (upper) amp = -amp;
            break;
          case Block::Right:
            idx[p] = upper ? b + 2 : b;
            break;
        }
      }
      if (valid) c[flat_index(idx)] += amp;
    }
  }
  return StateTensor(n, std::move(c));
}

const std::vector<ReductionTarget>& reduction_targets(std::string_view name) {
  static const std::vector<ReductionTarget> none;
  invariant(name);
  auto it = targets().find(name);
  return it == targets().end() ? none : it->second;
}

std::vector<std::string> reducible_names(int particles) {
  std::vector<std::string> out;
  for (const auto& n : list_names(particles)) {
    if (targets().count(n)) out.push_back(n);
  }
  return out;
}

ReductionReport reduce(std::string_view name, const std::vector<Block>& blocks, const ReductionTarget* target,
                       int n_states, std::uint64_t seed, double tol) {
  const NamedInvariant& inv = invariant(name);
  if (static_cast<int>(blocks.size()) != inv.particles) {
    throw std::invalid_argument("one block per particle is required");
  }
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::uniform_real_distribution<double> scale(0.5, 1.5);
  std::vector<cplx> values, goals;
  for (int k = 0; k < n_states; ++k) {
    const QubitTensor q = random_qubits(inv.particles, seed + static_cast<std::uint64_t>(k)).scaled(scale(rng));
    values.push_back(eval_named(inv.name, embed_qubits(q, blocks)));
    goals.push_back(target ? target->fn(q) : cplx(0.0));
  }
  ReductionReport r;
  r.name = inv.name;
  r.blocks = blocks;
  if (target) {
    r.target = target->label;
    r.status = target->status;
    r.expected_magnitude = target->magnitude;
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      num += std::conj(goals[i]) * values[i];
      den += std::norm(goals[i]);
    }
    r.constant = den > 0.0 ? num / den : cplx(0.0);
  } else {
    r.target = "0";
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    r.residual = std::max(r.residual, std::abs(values[i] - r.constant * goals[i]));
  }
  r.passed = r.residual < tol && std::abs(std::abs(r.constant) - r.expected_magnitude) < tol;
  return r;
}

std::vector<ReductionReport> reduce_energy_subspace(std::string_view name, const std::vector<Block>& blocks,
                                                    int n_states, std::uint64_t seed, double tol) {
  const auto& ts = reduction_targets(name);
  std::vector<ReductionReport> out;
  if (ts.empty()) {
    out.push_back(reduce(name, blocks, nullptr, n_states, seed, tol));
  } else {
    for (const auto& t : ts) out.push_back(reduce(name, blocks, &t, n_states, seed, tol));
  }
  return out;
}

std::vector<std::string> weyl_null_names(int particles) {
  std::vector<std::string> out;
  for (const auto& n : list_names(particles)) {
    const auto& inv = invariant(n);
    const auto [k, l] = inv.bidegree;
    const bool degree = (k == 2 && l == 2) || (k == 3 && l == 1) || (k == 3 && l == 3);
    if (!degree || inv.scope.kind == ScopeKind::NotIndicator) continue;
    const bool product_of_i = n.rfind("|I", 0) == 0 || (n[0] == 'I' && n.find('*') != std::string::npos);
    if (product_of_i) continue;
    out.push_back(n);
  }
  return out;
}

}  // namespace spinv
