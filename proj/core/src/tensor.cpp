#include "qtree/tensor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtree {

namespace {

bool entry_less(const Leg& leg, std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  switch (leg.kind) {
    case LegKind::Algebra:
      return Registry::instance().mon_less(a, b);
    case LegKind::Wreath:
      return wmon_less(a, b);
    case LegKind::Function:
      return Registry::instance().word(a) < Registry::instance().word(b);
  }
  return false;
}

struct TupleLess {
  const Signature* sig;
  bool operator()(const TensorElement::Tuple& a,
                  const TensorElement::Tuple& b) const {
    for (std::size_t i = 0; i < sig->size(); ++i) {
      if (a[i] != b[i]) return entry_less((*sig)[i], a[i], b[i]);
    }
    return false;
  }
};

std::string entry_str(const Leg& leg, std::uint32_t e) {
  switch (leg.kind) {
    case LegKind::Algebra:
      return Registry::instance().mon_str(e);
    case LegKind::Wreath:
      return wmon_str(e);
    case LegKind::Function:
      return "p[" + Registry::instance().word(e).str() + "]";
  }
  return "?";
}

}  // namespace

std::string to_string(const Signature& sig) {
  std::string s;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) s += " ox ";
    switch (sig[i].kind) {
      case LegKind::Algebra: s += "A"; break;
      case LegKind::Wreath: s += "W"; break;
      case LegKind::Function: s += "C(X^" + std::to_string(sig[i].n) + ")"; break;
    }
  }
  return s;
}

TensorElement::TensorElement(int alphabet_size, Signature sig)
    : k_(alphabet_size), sig_(std::move(sig)) {
  if (alphabet_size < 2 || alphabet_size > 10) {
    throw std::invalid_argument("alphabet size must be in [2, 10]");
  }
}

TensorElement TensorElement::from_element(const Element& e) {
  TensorElement t(e.alphabet_size(), {Leg::algebra()});
  for (const auto& [m, c] : e.terms()) t.terms_.emplace_back(Tuple{m}, c);
  return t;
}

TensorElement TensorElement::from_wreath(const WreathElement& e) {
  TensorElement t(e.alphabet_size(), {Leg::wreath()});
  for (const auto& [m, c] : e.terms()) t.terms_.emplace_back(Tuple{m}, c);
  return t;
}

TensorElement TensorElement::function_basis(int k, const Word& w) {
  TensorElement t(k, {Leg::function(static_cast<int>(w.size()))});
  t.terms_.emplace_back(Tuple{Registry::instance().word_id(w)}, 1);
  return t;
}

TensorElement TensorElement::function_unit(int k, int n) {
  TensorElement t(k, {Leg::function(n)});
  for (const Word& w : enumerate_words(Alphabet(k), n)) {
    t.add_term(Tuple{Registry::instance().word_id(w)}, 1);
  }
  return t;
}

TensorElement TensorElement::scalar(int k, const Rational& c) {
  TensorElement t(k, Signature{});
  if (c != 0) t.terms_.emplace_back(Tuple{}, c);
  return t;
}

void TensorElement::add_term(const Tuple& t, const Rational& coeff) {
  if (coeff == 0) return;
  if (t.size() != sig_.size()) {
    throw std::invalid_argument("tuple arity does not match signature");
  }
  TupleLess less{&sig_};
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), t,
      [&](const auto& term, const Tuple& key) { return less(term.first, key); });
  if (it != terms_.end() && it->first == t) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {t, coeff});
  }
}

TensorElement TensorElement::operator+(const TensorElement& rhs) const {
  TensorElement out = *this;
  out += rhs;
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  if (sig_ != rhs.sig_ || k_ != rhs.k_) {
    throw std::invalid_argument("signature mismatch");
  }
  for (const auto& [t, c] : rhs.terms_) add_term(t, c);
  return *this;
}

TensorElement TensorElement::operator-(const TensorElement& rhs) const {
  TensorElement out = *this;
  out -= rhs;
  return out;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  if (sig_ != rhs.sig_ || k_ != rhs.k_) {
    throw std::invalid_argument("signature mismatch");
  }
  for (const auto& [t, c] : rhs.terms_) add_term(t, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(k_, sig_);
  for (const auto& [t, c] : terms_) out.terms_.emplace_back(t, -c);
  return out;
}

TensorElement TensorElement::operator*(const Rational& c) const {
  TensorElement out(k_, sig_);
  if (c == 0) return out;
  for (const auto& [t, coeff] : terms_) out.terms_.emplace_back(t, coeff * c);
  return out;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("alphabet size mismatch");
  }
  Signature sig = a.signature();
  sig.insert(sig.end(), b.signature().begin(), b.signature().end());
  TensorElement out(a.alphabet_size(), std::move(sig));
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      TensorElement::Tuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add_term(t, ca * cb);
    }
  }
  return out;
}

namespace {

// leg-wise product of two entries; false when the product vanishes
bool entry_product(const Leg& leg, std::uint32_t a, std::uint32_t b,
                   std::uint32_t& out, std::uint64_t& steps) {
  switch (leg.kind) {
    case LegKind::Algebra: {
      auto& reg = Registry::instance();
      auto fa = reg.factors(a);
      auto fb = reg.factors(b);
      std::vector<GenId> f(fa.begin(), fa.end());
      f.insert(f.end(), fb.begin(), fb.end());
      if (!detail::normalize_factors(f, steps)) return false;
      out = reg.mon_id(f);
      return true;
    }
    case LegKind::Wreath: {
      auto fa = wmon_factors(a);
      auto fb = wmon_factors(b);
      std::vector<WreathSym> f(fa.begin(), fa.end());
      f.insert(f.end(), fb.begin(), fb.end());
      if (!wreath_normalize(f, steps)) return false;
      out = wmon_id(f);
      return true;
    }
    case LegKind::Function:
      if (a != b) return false;  // orthogonal minimal projections
      out = a;
      return true;
  }
  return false;
}

}  // namespace

TensorElement multiply_pointwise(const TensorElement& a,
                                 const TensorElement& b) {
  if (a.signature() != b.signature() ||
      a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("signature mismatch in pointwise product");
  }
  TensorElement out(a.alphabet_size(), a.signature());
  std::uint64_t steps = 0;
  TensorElement::Tuple t(a.signature().size());
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      bool alive = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!entry_product(a.signature()[i], ta[i], tb[i], t[i], steps)) {
          alive = false;
          break;
        }
      }
      if (alive) out.add_term(t, ca * cb);
    }
  }
  return reduce_tensor(out).result;
}

TensorElement tensor_adjoint(const TensorElement& t) {
  auto& reg = Registry::instance();
  TensorElement out(t.alphabet_size(), t.signature());
  for (const auto& [tup, c] : t.terms()) {
    TensorElement::Tuple r = tup;
    for (std::size_t i = 0; i < r.size(); ++i) {
      switch (t.signature()[i].kind) {
        case LegKind::Algebra: {
          auto f = reg.factors(r[i]);
          std::vector<GenId> rev(f.rbegin(), f.rend());
          r[i] = reg.mon_id(rev);
          break;
        }
        case LegKind::Wreath: {
          WreathElement w(t.alphabet_size());
          w.add_term(r[i], 1);
          r[i] = wreath_adjoint(w).terms()[0].first;
          break;
        }
        case LegKind::Function:
          break;
      }
    }
    out.add_term(r, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// reduction

namespace {

using TTermMap =
    std::map<TensorElement::Tuple, Rational, TupleLess>;

struct TCandidate {
  std::vector<TensorElement::Tuple> members;
  Rational coeff;
  bool vanished = false;
  TensorElement::Tuple replacement;
  std::string context;
};

bool tcandidate_less(const Signature& sig, const TCandidate& a,
                     const TCandidate& b) {
  if (a.vanished != b.vanished) return a.vanished;
  if (!a.vanished && a.replacement != b.replacement) {
    return TupleLess{&sig}(a.replacement, b.replacement);
  }
  return a.context < b.context;
}

bool find_tensor_collapse(int k, const Signature& sig, const TTermMap& acc,
                          TCandidate& best) {
  struct Entry {
    detail::LegCollapseSlot slot;
    Rational coeff;
    TensorElement::Tuple tuple;
    std::size_t leg;
  };
  std::map<std::string, std::vector<Entry>> buckets;
  for (const auto& [tuple, coeff] : acc) {
    for (std::size_t i = 0; i < sig.size(); ++i) {
      std::vector<detail::LegCollapseSlot> slots;
      if (sig[i].kind == LegKind::Algebra) {
        slots = detail::collapse_slots_monomial(tuple[i]);
      } else if (sig[i].kind == LegKind::Wreath) {
        slots = detail::collapse_slots_wreath(tuple[i]);
      } else {
        continue;
      }
      for (auto& slot : slots) {
        std::string key = "L" + std::to_string(i) + "|" + slot.context + "|";
        for (std::size_t j = 0; j < tuple.size(); ++j) {
          if (j == i) continue;
          key += entry_str(sig[j], tuple[j]) + ";";
        }
        buckets[key].push_back(Entry{std::move(slot), coeff, tuple, i});
      }
    }
  }
  bool found = false;
  for (const auto& [context, entries] : buckets) {
    if (entries.size() != static_cast<std::size_t>(k)) continue;
    bool complete = true;
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (const auto& e : entries) {
      if (e.slot.letter >= k || seen[e.slot.letter] ||
          e.coeff != entries[0].coeff) {
        complete = false;
        break;
      }
      seen[e.slot.letter] = true;
    }
    if (!complete) continue;
    TCandidate cand;
    cand.coeff = entries[0].coeff;
    for (const auto& e : entries) cand.members.push_back(e.tuple);
    cand.vanished = entries[0].slot.vanished;
    if (!cand.vanished) {
      cand.replacement = entries[0].tuple;
      cand.replacement[entries[0].leg] = entries[0].slot.replacement;
    }
    cand.context = context;
    if (!found || tcandidate_less(sig, cand, best)) {
      best = std::move(cand);
      found = true;
    }
  }
  return found;
}

// leg-wise local normalization of a term; false when it vanishes
bool normalize_tuple(const Signature& sig, TensorElement::Tuple& t,
                     std::uint64_t& steps) {
  auto& reg = Registry::instance();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (sig[i].kind == LegKind::Algebra) {
      auto f = reg.factors(t[i]);
      std::vector<GenId> fs(f.begin(), f.end());
      if (!detail::normalize_factors(fs, steps)) return false;
      t[i] = reg.mon_id(fs);
    } else if (sig[i].kind == LegKind::Wreath) {
      auto f = wmon_factors(t[i]);
      std::vector<WreathSym> fs(f.begin(), f.end());
      if (!wreath_normalize(fs, steps)) return false;
      t[i] = wmon_id(fs);
    }
  }
  return true;
}

}  // namespace

TensorOutcome reduce_tensor(const TensorElement& t,
                            const ReductionBudget& budget) {
  std::uint64_t steps = 0;
  TTermMap acc{TupleLess{&t.signature()}};
  for (const auto& [tuple, c] : t.terms()) {
    TensorElement::Tuple tt = tuple;
    if (normalize_tuple(t.signature(), tt, steps)) {
      auto [it, inserted] = acc.emplace(tt, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  bool exhausted = false;
  while (true) {
    if (steps > budget.max_steps) {
      exhausted = true;
      break;
    }
    TCandidate cand;
    if (!find_tensor_collapse(t.alphabet_size(), t.signature(), acc, cand))
      break;
    for (const auto& m : cand.members) acc.erase(m);
    if (!cand.vanished) {
      auto [it, inserted] = acc.emplace(cand.replacement, cand.coeff);
      if (!inserted) {
        it->second += cand.coeff;
        if (it->second == 0) acc.erase(it);
      }
    }
    ++steps;
  }
  TensorElement result(t.alphabet_size(), t.signature());
  for (const auto& [tuple, c] : acc) result.add_term(tuple, c);
  Certificate cert = exhausted ? Certificate::BudgetExhausted
                     : result.is_zero() ? Certificate::ProvedZero
                                        : Certificate::Irreducible;
  return {std::move(result), cert};
}

TensorOutcome prove_zero_tensor(const TensorElement& t,
                                const SearchPolicy& policy) {
  TensorOutcome best = reduce_tensor(t, policy.budget);
  if (best.proved_zero()) return best;
  bool exhausted = best.certificate == Certificate::BudgetExhausted;

  // refine every algebra leg to a common depth and retry
  auto& reg = Registry::instance();
  int max_depth = 1;
  bool has_algebra_leg = false;
  for (const auto& [tuple, c] : t.terms()) {
    for (std::size_t i = 0; i < t.signature().size(); ++i) {
      if (t.signature()[i].kind != LegKind::Algebra) continue;
      has_algebra_leg = true;
      for (GenId g : reg.factors(tuple[i])) {
        max_depth = std::max(max_depth, reg.gen_depth(g));
      }
    }
  }
  if (has_algebra_leg) {
    for (int depth = max_depth; depth <= max_depth + policy.extra_depth;
         ++depth) {
      for (bool pad_rows : {true, false}) {
        TensorElement refined(t.alphabet_size(), t.signature());
        for (const auto& [tuple, c] : t.terms()) {
          TensorElement piece = TensorElement::scalar(t.alphabet_size(), c);
          for (std::size_t i = 0; i < t.signature().size(); ++i) {
            TensorElement leg_elem(t.alphabet_size(),
                                   Signature{t.signature()[i]});
            if (t.signature()[i].kind == LegKind::Algebra) {
              auto f = reg.factors(tuple[i]);
              Element mono =
                  Element::monomial(t.alphabet_size(),
                                    std::vector<GenId>(f.begin(), f.end()));
              Element expanded = pad_rows ? refine(mono, depth)
                                          : refine_cols(mono, depth);
              leg_elem = TensorElement::from_element(expanded);
            } else {
              leg_elem.add_term({tuple[i]}, 1);
            }
            piece = tensor_product(piece, leg_elem);
          }
          refined += piece;
        }
        TensorOutcome attempt = reduce_tensor(refined, policy.budget);
        if (attempt.proved_zero()) return attempt;
        exhausted |= attempt.certificate == Certificate::BudgetExhausted;
        if (attempt.result.terms().size() < best.result.terms().size()) {
          best = std::move(attempt);
        }
      }
    }
  }
  best.certificate =
      exhausted ? Certificate::BudgetExhausted : Certificate::Irreducible;
  return best;
}

TensorElement apply_on_legs(
    const TensorElement& t, std::size_t leg, std::size_t arity,
    const Signature& codomain,
    const std::function<TensorElement(std::span<const std::uint32_t>)>& fn) {
  if (leg + arity > t.signature().size()) {
    throw std::invalid_argument("leg range out of bounds");
  }
  Signature sig(t.signature().begin(), t.signature().begin() + leg);
  sig.insert(sig.end(), codomain.begin(), codomain.end());
  sig.insert(sig.end(), t.signature().begin() + leg + arity,
             t.signature().end());
  TensorElement out(t.alphabet_size(), sig);
  for (const auto& [tuple, c] : t.terms()) {
    TensorElement frag =
        fn(std::span<const std::uint32_t>(tuple.data() + leg, arity));
    if (frag.signature() != codomain) {
      throw std::invalid_argument("leg map produced a mismatched signature");
    }
    for (const auto& [ft, fc] : frag.terms()) {
      TensorElement::Tuple nt(tuple.begin(), tuple.begin() + leg);
      nt.insert(nt.end(), ft.begin(), ft.end());
      nt.insert(nt.end(), tuple.begin() + leg + arity, tuple.end());
      out.add_term(nt, c * fc);
    }
  }
  return out;
}

TensorElement apply_on_leg(
    const TensorElement& t, std::size_t leg, const Signature& codomain,
    const std::function<TensorElement(std::uint32_t)>& fn) {
  return apply_on_legs(
      t, leg, 1, codomain,
      [&fn](std::span<const std::uint32_t> e) { return fn(e[0]); });
}

TensorElement merge_algebra_legs(const TensorElement& t, std::size_t leg) {
  if (leg + 2 > t.signature().size() ||
      t.signature()[leg].kind != LegKind::Algebra ||
      t.signature()[leg + 1].kind != LegKind::Algebra) {
    throw std::invalid_argument("merge_algebra_legs needs two algebra legs");
  }
  auto& reg = Registry::instance();
  return apply_on_legs(
      t, leg, 2, {Leg::algebra()},
      [&](std::span<const std::uint32_t> e) {
        TensorElement out(t.alphabet_size(), {Leg::algebra()});
        auto fa = reg.factors(e[0]);
        auto fb = reg.factors(e[1]);
        std::vector<GenId> f(fa.begin(), fa.end());
        f.insert(f.end(), fb.begin(), fb.end());
        std::uint64_t steps = 0;
        if (detail::normalize_factors(f, steps)) {
          out.add_term({reg.mon_id(f)}, 1);
        }
        return out;
      });
}

std::string to_string(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [tuple, c] : t.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    std::string body;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) body += " ox ";
      body += entry_str(t.signature()[i], tuple[i]);
    }
    if (body.empty()) body = "1";
    if (mag != 1) {
      s += to_string(mag) + "*" + body;
    } else {
      s += body;
    }
  }
  return s;
}

}  // namespace qtree
