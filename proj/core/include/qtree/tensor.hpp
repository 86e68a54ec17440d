#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qtree/engine.hpp"
#include "qtree/wreath.hpp"

namespace qtree {

enum class LegKind : std::uint8_t { Algebra, Wreath, Function };

struct Leg {
  LegKind kind = LegKind::Algebra;
  int n = 0;  // word length, Function legs only

  static Leg algebra() { return {LegKind::Algebra, 0}; }
  static Leg wreath() { return {LegKind::Wreath, 0}; }
  static Leg function(int n) { return {LegKind::Function, n}; }

  auto operator<=>(const Leg&) const = default;
};

using Signature = std::vector<Leg>;

std::string to_string(const Signature& sig);

/// Multi-leg tensor element: a rational combination of tuples with one
/// entry per leg. Algebra legs hold engine monomials, Wreath legs hold
/// wreath monomials, Function legs hold length-n basis words p_w.
/// Legs never reorder implicitly and products never cross legs.
class TensorElement {
 public:
  using Tuple = std::vector<std::uint32_t>;

  TensorElement(int alphabet_size, Signature sig);

  static TensorElement from_element(const Element& e);
  static TensorElement from_wreath(const WreathElement& e);
  static TensorElement function_basis(int k, const Word& w);
  /// Unit of C(X^n): the full sum of minimal projections.
  static TensorElement function_unit(int k, int n);
  /// Empty-signature scalar; used internally when a leg map erases a leg.
  static TensorElement scalar(int k, const Rational& c);

  int alphabet_size() const { return k_; }
  const Signature& signature() const { return sig_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Tuple, Rational>>& terms() const {
    return terms_;
  }

  void add_term(const Tuple& t, const Rational& coeff);

  TensorElement operator+(const TensorElement&) const;
  TensorElement operator-(const TensorElement&) const;
  TensorElement operator-() const;
  TensorElement operator*(const Rational&) const;
  TensorElement& operator+=(const TensorElement&);
  TensorElement& operator-=(const TensorElement&);

  bool operator==(const TensorElement&) const = default;

 private:
  int k_;
  Signature sig_;
  std::vector<std::pair<Tuple, Rational>> terms_;
};

/// Outer product: signatures concatenate.
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// Leg-wise products on identical signatures; function legs multiply by
/// p_w p_w' = delta_{w,w'} p_w.
TensorElement multiply_pointwise(const TensorElement& a,
                                 const TensorElement& b);

/// Leg-wise adjoint (factor reversal on algebra and wreath legs).
TensorElement tensor_adjoint(const TensorElement& t);

struct TensorOutcome {
  TensorElement result;
  Certificate certificate;

  bool proved_zero() const { return certificate == Certificate::ProvedZero; }
};

/// Leg-wise local rewriting plus the sum-collapse rule applied within each
/// algebra or wreath leg while every other leg is held fixed.
TensorOutcome reduce_tensor(const TensorElement& t,
                            const ReductionBudget& budget = {});

/// reduce_tensor, then retries with all algebra legs refined to a common
/// depth (both pad orientations) up to the policy limit.
TensorOutcome prove_zero_tensor(const TensorElement& t,
                                const SearchPolicy& policy = {});

/// Linear map on one leg: `fn` sends a basis entry of leg i to a tensor
/// element over `codomain`; other legs pass through.
TensorElement apply_on_leg(
    const TensorElement& t, std::size_t leg, const Signature& codomain,
    const std::function<TensorElement(std::uint32_t)>& fn);

/// Linear map consuming `arity` adjacent legs starting at `leg`.
TensorElement apply_on_legs(
    const TensorElement& t, std::size_t leg, std::size_t arity,
    const Signature& codomain,
    const std::function<TensorElement(std::span<const std::uint32_t>)>& fn);

/// Multiplies adjacent algebra legs i and i+1 into a single algebra leg.
TensorElement merge_algebra_legs(const TensorElement& t, std::size_t leg);

std::string to_string(const TensorElement& t);

}  // namespace qtree
