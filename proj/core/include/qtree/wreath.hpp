#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtree/engine.hpp"

namespace qtree {

/// One symbol of the free product (*_x A) * P:
///   PGen(x,y)  -- the depth-1 magic-square generator of the P copy,
///   Nu(x, m)   -- a base-algebra monomial inside the x-th copy of A.
/// Reduced words keep every PGen(x,y) left of an adjacent Nu(x, .) with the
/// same letter (the letter-matched commutation relator, oriented PGen-first).
struct WreathSym {
  enum class Kind : std::uint8_t { PGen, Nu };
  Kind kind = Kind::PGen;
  std::uint8_t x = 0, y = 0;           // PGen(x,y); Nu uses x only
  MonId inner = Registry::kUnitMon;    // Nu payload; never the unit monomial

  static WreathSym pgen(int x, int y);
  static WreathSym nu(int x, MonId inner);

  std::string str() const;

  auto operator<=>(const WreathSym&) const = default;
};

using WMonId = std::uint32_t;
inline constexpr WMonId kUnitWMon = 0;

WMonId wmon_id(std::span<const WreathSym> symbols);
std::span<const WreathSym> wmon_factors(WMonId id);
bool wmon_less(WMonId a, WMonId b);
std::string wmon_str(WMonId id);

/// Rewrites a symbol sequence to its reduced form: magic-square pair rules
/// on PGen symbols, same-letter Nu multiplicativity, and the PGen-first
/// commutation orientation. Returns false when the word rewrites to zero.
bool wreath_normalize(std::vector<WreathSym>& symbols, std::uint64_t& steps);

/// Rational linear combination of wreath monomials.
class WreathElement {
 public:
  explicit WreathElement(int alphabet_size);
  static WreathElement zero(int k) { return WreathElement(k); }
  static WreathElement unit(int k);
  static WreathElement from_symbol(int k, const WreathSym& s);

  int alphabet_size() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<WMonId, Rational>>& terms() const {
    return terms_;
  }

  void add_term(WMonId m, const Rational& coeff);

  WreathElement operator+(const WreathElement&) const;
  WreathElement operator-(const WreathElement&) const;
  WreathElement operator-() const;
  WreathElement operator*(const WreathElement&) const;  // normalized product
  WreathElement operator*(const Rational&) const;
  WreathElement& operator+=(const WreathElement&);
  WreathElement& operator-=(const WreathElement&);

  bool operator==(const WreathElement&) const = default;

 private:
  int k_;
  std::vector<std::pair<WMonId, Rational>> terms_;
};

struct WreathOutcome {
  WreathElement result;
  Certificate certificate;

  bool proved_zero() const { return certificate == Certificate::ProvedZero; }
};

/// Symbol-local rewriting plus sum collapse (full PGen rows/columns drop to
/// the unit; base-algebra collapse groups inside Nu payloads).
WreathOutcome wreath_reduce(const WreathElement& x,
                            const ReductionBudget& budget = {});

WreathOutcome wreath_prove_zero(const WreathElement& x,
                                const ReductionBudget& budget = {});

WreathElement wreath_adjoint(const WreathElement& x);

std::string to_string(const WreathElement& x);

namespace detail {
std::vector<LegCollapseSlot> collapse_slots_wreath(WMonId m);
}

}  // namespace qtree
