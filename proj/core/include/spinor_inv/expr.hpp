#pragma once

/// \file
/// Composite invariant expressions: sums and products of contraction
/// patterns, references to other named invariants, conjugates and squared
/// moduli, with complex prefactors.

#include "spinor_inv/contraction.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

namespace spinv {

/// Resolves a named invariant during evaluation (memoization is the
/// caller's business).
using NameResolver = std::function<cplx(const std::string&)>;

/// Bidegree of a named invariant, for bidegree inference.
using BidegreeResolver = std::function<std::pair<int, int>(const std::string&)>;

class Expr {
 public:
  /// The constant zero.
  Expr();

  /// Parses and plans a pattern; throws PatternError.
  static Expr pattern(std::string_view text);

  /// Two-particle trace of a token product, e.g. "PT C P C" for
  /// Tr[Psi^T C Psi C]. Tokens: P (Psi), PT (Psi^T), Ps (Psi*), Pd
  /// (Psi^dagger) alternating with C, C5, g0, g05.
  static Expr trace(std::string_view tokens);

  static Expr named(std::string name);
  static Expr constant(cplx value);

  Expr conj() const;
  Expr abs2() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator*(cplx c, const Expr& a);

  cplx eval(const StateTensor& s, const NameResolver& resolve) const;

  /// Bidegree if homogeneous; throws std::logic_error for mixed sums.
  std::pair<int, int> bidegree(const BidegreeResolver& resolve) const;

  /// Collects the contraction patterns used directly by this expression.
  void patterns(std::vector<const EvaluationPlan*>& out) const;

  std::string to_string() const;

  /// The plan when the expression is one pattern times a constant,
  /// otherwise nullptr.
  const EvaluationPlan* single_pattern() const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Pattern text for a two-particle trace; throws std::invalid_argument for
/// unknown tokens.
std::string trace_to_pattern(std::string_view tokens);

}  // namespace spinv
