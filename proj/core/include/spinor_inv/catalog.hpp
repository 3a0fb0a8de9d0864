#pragma once

/// \file
/// The named invariant polynomials of two and three Dirac particles, each
/// with a primary expression, its alternate printed forms and the set of
/// observers whose unentanglement forces it to vanish.

#include "spinor_inv/expr.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spinv {

enum class ScopeKind {
  AllParticles,  // vanishes when any observer is unentangled
  Subset,        // vanishes when any listed observer is unentangled
  NotIndicator,  // nonzero on product states
};

struct Scope {
  ScopeKind kind = ScopeKind::AllParticles;
  /// Observer indices (0 = A) for Subset. An empty subset marks a
  /// polynomial that vanishes on fully product states only.
  std::vector<int> observers;

  /// "all_particles", "subset(A,C)", "subset()" or "not_indicator".
  std::string to_string() const;
  /// Whether unentangling the given observer forces the value to zero.
  bool forces_zero(int observer, int particles) const;
};

/// Printed forms are transcribed verbatim. Reconciled forms are corrected
/// variants of printed forms that failed to match the primary expression.
enum class FormStatus { Printed, Reconciled };

std::string_view form_status_name(FormStatus s);

struct AltForm {
  std::string label;
  Expr expr;
  FormStatus status = FormStatus::Printed;
};

struct NamedInvariant {
  std::string name;
  int particles = 2;
  std::pair<int, int> bidegree{0, 0};
  std::string description;
  Expr primary;
  std::vector<AltForm> alt_forms;
  Scope scope;
};

/// Unknown invariant name; what() lists the valid names.
class UnknownInvariant : public std::out_of_range {
 public:
  explicit UnknownInvariant(std::string_view name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Throws UnknownInvariant.
const NamedInvariant& invariant(std::string_view name);
bool is_known_invariant(std::string_view name);

/// Every registered name in catalog order.
const std::vector<std::string>& all_invariant_names();

/// Names for a particle count in catalog order, optionally restricted to a
/// bidegree.
std::vector<std::string> list_names(int particles,
                                    std::optional<std::pair<int, int>> bidegree = std::nullopt);

/// Memoizing evaluator bound to one state. Not thread-safe; use one per
/// thread.
class Evaluator {
 public:
  explicit Evaluator(const StateTensor& s) : s_(&s) {}
  /// Throws UnknownInvariant, or std::invalid_argument on a particle-count
  /// mismatch.
  cplx operator()(const std::string& name);
  cplx eval(const Expr& e);
  const StateTensor& state() const { return *s_; }

 private:
  const StateTensor* s_;
  std::unordered_map<std::string, cplx> memo_;
};

cplx eval_named(std::string_view name, const StateTensor& s);

struct FormResidual {
  std::string label;
  FormStatus status = FormStatus::Printed;
  cplx value = 0.0;
  double residual = 0.0;  // relative to the primary value
};

/// Residual of every alternate form and, when transcribed, the expansion
/// oracle (label "expansion") against the primary form.
std::vector<FormResidual> alt_forms_report(std::string_view name, const StateTensor& s);

/// Maximum relative discrepancy over the printed alternate forms and the
/// expansion. Throws std::invalid_argument when the name has a single form.
double alt_forms_residual(std::string_view name, const StateTensor& s);

/// |a - b| / max(|a|, |b|), with 0 when both vanish.
double relative_difference(cplx a, cplx b);

/// Named families used by the span-dimension checks: "2p-22", "2p-31",
/// "3p-22-selected", "3p-31". Throws std::out_of_range listing the ids.
const std::vector<std::string>& family(std::string_view id);
const std::vector<std::string>& family_ids();

/// A linear relation sum_k coeff_k * name_k = 0.
struct LinearRelation {
  std::string label;
  std::vector<std::pair<int, std::string>> terms;
};

/// The twelve (3,1) relations exactly as printed.
const std::vector<LinearRelation>& printed_dependencies();
/// The twelve relations that span the numeric null space of the (3,1)
/// family with the definitions used here.
const std::vector<LinearRelation>& reconciled_dependencies();

/// |sum| / sum |terms| on one state.
double relation_residual(const LinearRelation& r, const StateTensor& s);

/// Per relation, the maximum residual over n_states random three-particle
/// states drawn from consecutive seeds starting at seed.
std::vector<double> dependency_residuals(const std::vector<LinearRelation>& relations,
                                         int n_states = 20, std::uint64_t seed = 0);

}  // namespace spinv
