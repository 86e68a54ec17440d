#include "qtree/wreath.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qtree {

WreathSym WreathSym::pgen(int x, int y) {
  WreathSym s;
  s.kind = Kind::PGen;
  s.x = static_cast<std::uint8_t>(x);
  s.y = static_cast<std::uint8_t>(y);
  return s;
}

WreathSym WreathSym::nu(int x, MonId inner) {
  WreathSym s;
  s.kind = Kind::Nu;
  s.x = static_cast<std::uint8_t>(x);
  s.inner = inner;
  return s;
}

std::string WreathSym::str() const {
  if (kind == Kind::PGen) {
    return "q[" + std::to_string(x) + "," + std::to_string(y) + "]";
  }
  return "nu[" + std::to_string(x) + "](" +
         Registry::instance().mon_str(inner) + ")";
}

namespace {

struct WreathRegistry {
  mutable std::shared_mutex mu;
  std::deque<std::vector<WreathSym>> mons;
  std::map<std::vector<WreathSym>, WMonId> index;

  WreathRegistry() {
    mons.emplace_back();
    index.emplace(std::vector<WreathSym>{}, kUnitWMon);
  }

  static WreathRegistry& instance() {
    static WreathRegistry reg;
    return reg;
  }
};

bool wsym_less(const WreathSym& a, const WreathSym& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.x != b.x) return a.x < b.x;
  if (a.kind == WreathSym::Kind::PGen) return a.y < b.y;
  return Registry::instance().mon_less(a.inner, b.inner);
}

struct WMonLess {
  bool operator()(WMonId a, WMonId b) const { return wmon_less(a, b); }
};

using WTermMap = std::map<WMonId, Rational, WMonLess>;

void accumulate(WTermMap& acc, WMonId m, const Rational& c) {
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

WMonId wmon_id(std::span<const WreathSym> symbols) {
  auto& reg = WreathRegistry::instance();
  std::vector<WreathSym> key(symbols.begin(), symbols.end());
  std::unique_lock lock(reg.mu);
  auto it = reg.index.find(key);
  if (it != reg.index.end()) return it->second;
  WMonId id = static_cast<WMonId>(reg.mons.size());
  reg.mons.push_back(key);
  reg.index.emplace(std::move(key), id);
  return id;
}

std::span<const WreathSym> wmon_factors(WMonId id) {
  auto& reg = WreathRegistry::instance();
  std::shared_lock lock(reg.mu);
  return reg.mons[id];
}

bool wmon_less(WMonId a, WMonId b) {
  if (a == b) return false;
  auto fa = wmon_factors(a);
  auto fb = wmon_factors(b);
  if (fa.size() != fb.size()) return fa.size() < fb.size();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i] != fb[i]) return wsym_less(fa[i], fb[i]);
  }
  return false;
}

std::string wmon_str(WMonId id) {
  auto fs = wmon_factors(id);
  if (fs.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "*";
    s += fs[i].str();
  }
  return s;
}

bool wreath_normalize(std::vector<WreathSym>& f, std::uint64_t& steps) {
  auto& reg = Registry::instance();
  std::size_t i = 0;
  auto backtrack = [&i] { i = i > 0 ? i - 1 : 0; };
  while (f.size() >= 2 && i + 1 < f.size()) {
    using K = WreathSym::Kind;
    // virtual adjacency: q[x,z] commutes past nu[x](m), so in
    // q[x,z] nu[x](m) q[x',z'] the outer pair interacts directly
    if (i + 2 < f.size() && f[i].kind == K::PGen &&
        f[i + 1].kind == K::Nu && f[i].x == f[i + 1].x &&
        f[i + 2].kind == K::PGen) {
      const bool rows = f[i].x == f[i + 2].x;
      const bool cols = f[i].y == f[i + 2].y;
      if (rows != cols) {
        ++steps;
        return false;
      }
      if (rows && cols) {
        f.erase(f.begin() + i + 2);
        ++steps;
        backtrack();
        continue;
      }
    }
    WreathSym& a = f[i];
    WreathSym& b = f[i + 1];
    if (a.kind == K::PGen && b.kind == K::PGen) {
      if (a.x == b.x && a.y == b.y) {
        f.erase(f.begin() + i + 1);
        ++steps;
        backtrack();
      } else if (a.x == b.x || a.y == b.y) {
        ++steps;
        return false;  // same row or same column, distinct partner
      } else {
        ++i;
      }
    } else if (a.kind == K::Nu && b.kind == K::Nu && a.x == b.x) {
      auto fa = reg.factors(a.inner);
      auto fb = reg.factors(b.inner);
      std::vector<GenId> prod(fa.begin(), fa.end());
      prod.insert(prod.end(), fb.begin(), fb.end());
      ++steps;
      if (!detail::normalize_factors(prod, steps)) return false;
      a.inner = reg.mon_id(prod);
      f.erase(f.begin() + i + 1);
      backtrack();
    } else if (a.kind == K::Nu && b.kind == K::PGen && a.x == b.x) {
      std::swap(f[i], f[i + 1]);
      ++steps;
      backtrack();
    } else {
      ++i;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// WreathElement

WreathElement::WreathElement(int alphabet_size) : k_(alphabet_size) {
  if (alphabet_size < 2 || alphabet_size > 10) {
    throw std::invalid_argument("alphabet size must be in [2, 10]");
  }
}

WreathElement WreathElement::unit(int k) {
  WreathElement e(k);
  e.terms_.emplace_back(kUnitWMon, 1);
  return e;
}

WreathElement WreathElement::from_symbol(int k, const WreathSym& s) {
  WreathElement e(k);
  if (s.kind == WreathSym::Kind::Nu && s.inner == Registry::kUnitMon) {
    return unit(k);
  }
  e.terms_.emplace_back(wmon_id({&s, 1}), 1);
  return e;
}

void WreathElement::add_term(WMonId m, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const auto& t, WMonId id) { return wmon_less(t.first, id); });
  if (it != terms_.end() && it->first == m) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {m, coeff});
  }
}

WreathElement WreathElement::operator+(const WreathElement& rhs) const {
  WreathElement out = *this;
  out += rhs;
  return out;
}

WreathElement& WreathElement::operator+=(const WreathElement& rhs) {
  if (k_ != rhs.k_) throw std::invalid_argument("alphabet size mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

WreathElement WreathElement::operator-(const WreathElement& rhs) const {
  WreathElement out = *this;
  out -= rhs;
  return out;
}

WreathElement& WreathElement::operator-=(const WreathElement& rhs) {
  if (k_ != rhs.k_) throw std::invalid_argument("alphabet size mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

WreathElement WreathElement::operator-() const {
  WreathElement out(k_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

WreathElement WreathElement::operator*(const Rational& c) const {
  WreathElement out(k_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_back(m, coeff * c);
  return out;
}

WreathElement WreathElement::operator*(const WreathElement& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("alphabet size mismatch");
  WTermMap acc;
  std::uint64_t steps = 0;
  std::vector<WreathSym> fs;
  for (const auto& [ma, ca] : terms_) {
    auto fa = wmon_factors(ma);
    for (const auto& [mb, cb] : rhs.terms_) {
      auto fb = wmon_factors(mb);
      fs.assign(fa.begin(), fa.end());
      fs.insert(fs.end(), fb.begin(), fb.end());
      if (wreath_normalize(fs, steps)) accumulate(acc, wmon_id(fs), ca * cb);
    }
  }
  WreathElement out(k_);
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return wreath_reduce(out).result;
}

// ---------------------------------------------------------------------------
// reduction

namespace detail {

std::vector<LegCollapseSlot> collapse_slots_wreath(WMonId m) {
  auto& reg = Registry::instance();
  std::vector<LegCollapseSlot> out;
  auto fs = wmon_factors(m);
  std::vector<WreathSym> scratch;
  std::uint64_t steps = 0;

  auto rebuild = [&](LegCollapseSlot& slot) {
    if (wreath_normalize(scratch, steps)) {
      slot.vanished = false;
      slot.replacement = wmon_id(scratch);
    } else {
      slot.vanished = true;
    }
  };

  for (std::size_t p = 0; p < fs.size(); ++p) {
    const WreathSym sym = fs[p];
    if (sym.kind == WreathSym::Kind::PGen) {
      // full row or column of the depth-1 magic square sums to the unit
      for (int col_varies : {1, 0}) {
        LegCollapseSlot slot;
        slot.letter = col_varies ? sym.y : sym.x;
        std::vector<WreathSym> masked(fs.begin(), fs.end());
        masked.erase(masked.begin() + p);
        slot.context = wmon_str(wmon_id(masked)) + "|" + std::to_string(p) +
                       (col_varies ? "|Pc|" : "|Pr|") +
                       std::to_string(col_varies ? sym.x : sym.y);
        scratch = masked;
        rebuild(slot);
        out.push_back(std::move(slot));
      }
    } else {
      // base-algebra collapse inside the payload
      auto inner_slots = collapse_slots_monomial(sym.inner);
      for (auto& islot : inner_slots) {
        LegCollapseSlot slot;
        slot.letter = islot.letter;
        slot.context = "nu" + std::to_string(sym.x) + "@" +
                       std::to_string(p) + "{" + islot.context + "}|";
        // context must identify the rest of the word with the payload masked
        std::vector<WreathSym> masked(fs.begin(), fs.end());
        masked.erase(masked.begin() + p);
        slot.context += wmon_str(wmon_id(masked));
        if (islot.vanished) {
          slot.vanished = true;
          out.push_back(std::move(slot));
          continue;
        }
        scratch.assign(fs.begin(), fs.end());
        if (islot.replacement == Registry::kUnitMon) {
          scratch.erase(scratch.begin() + p);  // nu[x](1) = 1
        } else {
          scratch[p] = WreathSym::nu(sym.x, islot.replacement);
        }
        rebuild(slot);
        out.push_back(std::move(slot));
      }
    }
  }
  return out;
}

}  // namespace detail

namespace {

struct WCandidate {
  std::vector<WMonId> members;
  Rational coeff;
  bool vanished = false;
  WMonId replacement = kUnitWMon;
  std::string context;
};

bool wcandidate_less(const WCandidate& a, const WCandidate& b) {
  if (a.vanished != b.vanished) return a.vanished;
  if (a.replacement != b.replacement) return wmon_less(a.replacement, b.replacement);
  return a.context < b.context;
}

bool find_wreath_collapse(int k, const WTermMap& acc, WCandidate& best) {
  struct Entry {
    detail::LegCollapseSlot slot;
    Rational coeff;
    WMonId mon;
  };
  std::map<std::string, std::vector<Entry>> buckets;
  for (const auto& [mon, coeff] : acc) {
    for (auto& slot : detail::collapse_slots_wreath(mon)) {
      std::string key = slot.context;
      buckets[key].push_back(Entry{std::move(slot), coeff, mon});
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
    WCandidate cand;
    cand.coeff = entries[0].coeff;
    for (const auto& e : entries) cand.members.push_back(e.mon);
    cand.vanished = entries[0].slot.vanished;
    cand.replacement = entries[0].slot.replacement;
    cand.context = context;
    if (!found || wcandidate_less(cand, best)) {
      best = std::move(cand);
      found = true;
    }
  }
  return found;
}

}  // namespace

WreathOutcome wreath_reduce(const WreathElement& x,
                            const ReductionBudget& budget) {
  std::uint64_t steps = 0;
  WTermMap acc;
  std::vector<WreathSym> fs;
  for (const auto& [m, c] : x.terms()) {
    auto f = wmon_factors(m);
    fs.assign(f.begin(), f.end());
    if (wreath_normalize(fs, steps)) accumulate(acc, wmon_id(fs), c);
  }
  bool exhausted = false;
  while (true) {
    if (steps > budget.max_steps) {
      exhausted = true;
      break;
    }
    WCandidate cand;
    if (!find_wreath_collapse(x.alphabet_size(), acc, cand)) break;
    for (WMonId m : cand.members) acc.erase(m);
    if (!cand.vanished) accumulate(acc, cand.replacement, cand.coeff);
    ++steps;
  }
  WreathElement result(x.alphabet_size());
  for (const auto& [m, c] : acc) result.add_term(m, c);
  Certificate cert = exhausted ? Certificate::BudgetExhausted
                     : result.is_zero() ? Certificate::ProvedZero
                                        : Certificate::Irreducible;
  return {std::move(result), cert};
}

WreathOutcome wreath_prove_zero(const WreathElement& x,
                                const ReductionBudget& budget) {
  return wreath_reduce(x, budget);
}

WreathElement wreath_adjoint(const WreathElement& x) {
  auto& reg = Registry::instance();
  WreathElement out(x.alphabet_size());
  std::vector<WreathSym> fs;
  std::vector<GenId> inner;
  for (const auto& [m, c] : x.terms()) {
    auto f = wmon_factors(m);
    fs.assign(f.rbegin(), f.rend());
    for (auto& s : fs) {
      if (s.kind == WreathSym::Kind::Nu) {
        auto g = reg.factors(s.inner);
        inner.assign(g.rbegin(), g.rend());
        s.inner = reg.mon_id(inner);
      }
    }
    out.add_term(wmon_id(fs), c);
  }
  return out;
}

std::string to_string(const WreathElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    if (m == kUnitWMon) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += wmon_str(m);
    } else {
      s += to_string(mag) + "*" + wmon_str(m);
    }
  }
  return s;
}

}  // namespace qtree
