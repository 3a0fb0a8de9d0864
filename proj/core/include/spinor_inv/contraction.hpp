#pragma once

/// \file
/// Tensor sandwich contractions: a small pattern language over copies of the
/// state tensor Psi and its conjugate Psi*, with C, C gamma^5, gamma^0 or
/// gamma^0 gamma^5 sandwiched between paired index slots.
///
/// Grammar (see docs/pattern-grammar.md):
///   pattern  = atom { atom } ;
///   atom     = sandwich "[" letter letter "]" | tensor "[" letter { letter } "]" ;
///   sandwich = "C" | "C5" | "g0" | "g05" ;
///   tensor   = "Psi" | "Psi*" ;
/// Every letter occurs exactly twice: once in a sandwich atom, once in a
/// tensor atom.

#include "spinor_inv/state.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinv {

enum class Sandwich { C, C5, G0, G05 };

const Mat4& sandwich_matrix(Sandwich s);
std::string_view sandwich_name(Sandwich s);

/// True for C and C5, which join two equally conjugated factors.
bool is_bilinear(Sandwich s);

/// True for C5 and G05, which change sign under parity.
bool is_parity_odd(Sandwich s);

struct SlotRef {
  int factor = 0;
  int slot = 0;
};

/// `row` receives the sandwich matrix's first index, `col` its second.
struct Pairing {
  SlotRef row;
  SlotRef col;
  Sandwich sandwich = Sandwich::C;
  char row_letter = 0;
  char col_letter = 0;
};

struct ContractionPattern {
  int particles = 0;
  std::vector<bool> conjugated;  // one entry per factor
  std::vector<Pairing> pairings;

  std::size_t factor_count() const { return conjugated.size(); }

  /// (number of Psi factors, number of Psi* factors).
  std::pair<int, int> bidegree() const;

  /// Number of parity-odd sandwiches per observer.
  std::vector<int> parity_odd_counts() const;

  /// Observers with at least one C or C5 pairing.
  std::vector<bool> bilinear_observers() const;

  /// Canonical text that parses back to an equal pattern.
  std::string to_string() const;
};

enum class PatternErrorCode {
  Syntax,
  UnknownAtom,
  SandwichArity,
  IndexCount,
  IndexInTwoSandwiches,
  IndexInTwoTensors,
  ArityMismatch,
  SlotMismatch,
  ParityViolation,
  NoTensors,
};

std::string_view pattern_error_name(PatternErrorCode code);

/// Diagnostic for a rejected pattern. `letter` is the offending index letter
/// (0 when none applies); `position` is the 0-based byte offset or -1.
class PatternError : public std::runtime_error {
 public:
  PatternError(PatternErrorCode code, std::string message, char letter, int position);
  PatternErrorCode code() const { return code_; }
  char letter() const { return letter_; }
  int position() const { return position_; }

 private:
  PatternErrorCode code_;
  char letter_;
  int position_;
};

/// Parses and validates; throws PatternError.
ContractionPattern parse_pattern(std::string_view text);

/// Reference evaluator: the full sum over index assignments. Each sandwich
/// matrix is monomial, so only row indices are enumerated (4^pairings
/// terms) and structurally zero terms are skipped. Throws
/// std::invalid_argument on a particle-count mismatch.
cplx evaluate_naive(const ContractionPattern& p, const StateTensor& s);

/// One pairwise merge of two intermediate tensors.
struct PlanStep {
  int lhs = 0;
  int rhs = 0;
  std::string contracted;  // letters summed in this step
  std::string result;      // letters of the produced tensor
  double flops = 0.0;      // 4^(letters touched)
};

/// Tensors 0..factors-1 are the Psi/Psi* copies, the following ones the
/// sandwich matrices in pairing order; step k produces tensor
/// (factors + pairings + k).
struct EvaluationPlan {
  ContractionPattern pattern;
  std::vector<std::string> leaf_letters;
  std::vector<PlanStep> steps;
  double flops = 0.0;
  double naive_flops = 0.0;  // 4^(number of letters)

  std::string describe() const;
};

/// Greedy ordering: at each step merge the pair sharing an index whose result
/// is smallest (ties: fewer flops, then lowest ids).
EvaluationPlan plan(const ContractionPattern& p);

cplx execute(const EvaluationPlan& plan, const StateTensor& s);

/// plan + execute.
cplx evaluate(const ContractionPattern& p, const StateTensor& s);

}  // namespace spinv
