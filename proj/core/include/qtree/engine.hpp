#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtree/rational.hpp"
#include "qtree/words.hpp"

namespace qtree {

using GenId = std::uint32_t;
using MonId = std::uint32_t;
using WordId = std::uint32_t;

/// One projection generator a[u,v], indexed by an equal-length word pair.
/// The depth-0 pair a[e,e] is the algebra unit and is never stored inside
/// a monomial.
struct Generator {
  Word row, col;

  Generator(Word r, Word c);
  int depth() const { return static_cast<int>(row.size()); }
  std::string str() const;

  auto operator<=>(const Generator&) const = default;
};

/// Process-wide interner for words, generators, monomials and wreath
/// monomials. Reduction revisits identical submonomials constantly, so
/// factor sequences are stored once and handled by id. Insertion is
/// guarded by a mutex; ids and references stay valid forever.
class Registry {
 public:
  static Registry& instance();

  WordId word_id(const Word& w);
  const Word& word(WordId id) const;

  GenId gen_id(const Generator& g);
  const Generator& generator(GenId id) const;
  int gen_depth(GenId id) const;

  static constexpr MonId kUnitMon = 0;
  MonId mon_id(std::span<const GenId> factors);
  std::span<const GenId> factors(MonId id) const;
  int degree(MonId id) const;

  /// Canonical generator order: depth, then row word, then column word.
  bool gen_less(GenId a, GenId b) const;
  /// Canonical monomial order: factor count, then factor-wise generator order.
  bool mon_less(MonId a, MonId b) const;

  std::string mon_str(MonId id) const;

 private:
  Registry();
  struct Impl;
  Impl* impl_;
};

enum class Certificate { ProvedZero, Irreducible, BudgetExhausted };

const char* to_string(Certificate c);

struct ReductionBudget {
  std::uint64_t max_steps = 1'000'000;
};

struct SearchPolicy {
  ReductionBudget budget{};
  /// prove_zero refines up to (max generator depth + extra_depth).
  int extra_depth = 1;
};

/// Exact-rational linear combination of monomials in the generators.
/// Terms are kept in canonical monomial order with no zero coefficients;
/// monomials themselves may be unreduced (parse does not rewrite).
class Element {
 public:
  explicit Element(int alphabet_size);

  static Element zero(int k) { return Element(k); }
  static Element unit(int k);
  static Element from_generator(int k, const Generator& g);

  /// Builds c * (f_1 ... f_r). Depth-0 factors are dropped; no other
  /// rewriting is applied.
  static Element monomial(int k, std::span<const GenId> factors,
                          const Rational& coeff = 1);

  int alphabet_size() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  const std::vector<std::pair<MonId, Rational>>& terms() const { return terms_; }
  int max_depth() const;
  int max_degree() const;

  void add_term(MonId m, const Rational& coeff);

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;  // bilinear product, then reduce
  Element operator*(const Rational& c) const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);

  bool operator==(const Element& rhs) const = default;

 private:
  int k_;
  std::vector<std::pair<MonId, Rational>> terms_;
};

struct ReductionOutcome {
  Element result;
  Certificate certificate;
  std::vector<std::string> trace;

  bool proved_zero() const { return certificate == Certificate::ProvedZero; }
};

/// Rewrites x to a fixpoint of the rule set (unit elision, idempotents,
/// prefix absorption/orthogonality, row/column sum collapse) or until the
/// budget runs out.
ReductionOutcome reduce(const Element& x, const ReductionBudget& budget = {});

/// Depth-d expansion: each factor a[u,v] of depth m < d becomes
/// sum over t in X^{d-m} of a[u·0^{d-m}, v·t]. Equal to x modulo the
/// relations; the result is depth-homogeneous at d.
Element refine(const Element& x, int depth);
/// Mirror expansion padding the column word and summing over row suffixes.
Element refine_cols(const Element& x, int depth);

/// Semi-decision procedure: collapse-first reduction, then refinement to a
/// common depth (both orientations) at increasing depths. Never certifies a
/// nonzero element (soundness is cross-checked against the oracles).
ReductionOutcome prove_zero(const Element& x, const SearchPolicy& policy = {});

/// Involutive anti-automorphism: reverses factor order; generators are
/// self-adjoint and coefficients rational.
Element adjoint(const Element& x);

/// Canonical rendering, parseable by parse_element.
std::string to_string(const Element& x);

namespace detail {

/// Local rewriting of one factor sequence (unit elision, idempotent merge,
/// prefix absorption/orthogonality). Returns false when the monomial
/// rewrites to zero. Rule applications are counted into `steps`.
bool normalize_factors(std::vector<GenId>& factors, std::uint64_t& steps);

/// One potential application point of the sum-collapse rule inside a single
/// monomial-like entry. Entries whose slots share `context` and cover every
/// letter with one common coefficient collapse to `replacement`.
struct LegCollapseSlot {
  std::string context;  // masked-entry identity bytes
  int letter;           // the varying last letter
  bool vanished;        // replacement rewrote to zero
  std::uint32_t replacement = 0;  // MonId or WMonId, per entry kind
};

std::vector<LegCollapseSlot> collapse_slots_monomial(MonId m);

}  // namespace detail

/// Multiplicative-linear extension of a generator assignment; the engine's
/// realization of the universal property. `image` maps GenId -> T.
template <class T, class Image, class Mul, class Add, class Scale>
T substitute(const Element& x, const Image& image, const T& unit, Mul mul,
             Add add, Scale scale) {
  auto& reg = Registry::instance();
  T acc = scale(Rational(0), unit);
  for (const auto& [mon, coeff] : x.terms()) {
    T prod = unit;
    for (GenId g : reg.factors(mon)) prod = mul(prod, image(g));
    acc = add(acc, scale(coeff, prod));
  }
  return acc;
}

}  // namespace qtree
