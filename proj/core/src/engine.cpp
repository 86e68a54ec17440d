#include "qtree/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qtree {

Generator::Generator(Word r, Word c) : row(std::move(r)), col(std::move(c)) {
  if (row.size() != col.size()) {
    throw std::invalid_argument("generator words must have equal length: a[" +
                                row.str() + "," + col.str() + "]");
  }
}

std::string Generator::str() const {
  return "a[" + row.str() + "," + col.str() + "]";
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::ProvedZero: return "ProvedZero";
    case Certificate::Irreducible: return "Irreducible";
    case Certificate::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Registry

struct Registry::Impl {
  mutable std::shared_mutex mu;

  std::deque<Word> words;
  std::map<Word, WordId> word_index;

  std::deque<Generator> gens;
  std::map<std::pair<Word, Word>, GenId> gen_index;

  std::deque<std::vector<GenId>> mons;
  std::map<std::vector<GenId>, MonId> mon_index;
};

Registry::Registry() : impl_(new Impl) {
  impl_->mons.emplace_back();  // kUnitMon
  impl_->mon_index.emplace(std::vector<GenId>{}, kUnitMon);
}

Registry& Registry::instance() {
  static Registry reg;
  return reg;
}

WordId Registry::word_id(const Word& w) {
  std::unique_lock lock(impl_->mu);
  auto it = impl_->word_index.find(w);
  if (it != impl_->word_index.end()) return it->second;
  WordId id = static_cast<WordId>(impl_->words.size());
  impl_->words.push_back(w);
  impl_->word_index.emplace(w, id);
  return id;
}

const Word& Registry::word(WordId id) const {
  std::shared_lock lock(impl_->mu);
  return impl_->words[id];
}

GenId Registry::gen_id(const Generator& g) {
  std::unique_lock lock(impl_->mu);
  auto key = std::make_pair(g.row, g.col);
  auto it = impl_->gen_index.find(key);
  if (it != impl_->gen_index.end()) return it->second;
  GenId id = static_cast<GenId>(impl_->gens.size());
  impl_->gens.push_back(g);
  impl_->gen_index.emplace(std::move(key), id);
  return id;
}

const Generator& Registry::generator(GenId id) const {
  std::shared_lock lock(impl_->mu);
  return impl_->gens[id];
}

int Registry::gen_depth(GenId id) const { return generator(id).depth(); }

MonId Registry::mon_id(std::span<const GenId> factors) {
  std::vector<GenId> key(factors.begin(), factors.end());
  std::unique_lock lock(impl_->mu);
  auto it = impl_->mon_index.find(key);
  if (it != impl_->mon_index.end()) return it->second;
  MonId id = static_cast<MonId>(impl_->mons.size());
  impl_->mons.push_back(key);
  impl_->mon_index.emplace(std::move(key), id);
  return id;
}

std::span<const GenId> Registry::factors(MonId id) const {
  std::shared_lock lock(impl_->mu);
  return impl_->mons[id];
}

int Registry::degree(MonId id) const {
  return static_cast<int>(factors(id).size());
}

bool Registry::gen_less(GenId a, GenId b) const {
  if (a == b) return false;
  const Generator& ga = generator(a);
  const Generator& gb = generator(b);
  if (ga.depth() != gb.depth()) return ga.depth() < gb.depth();
  if (ga.row != gb.row) return ga.row < gb.row;
  return ga.col < gb.col;
}

bool Registry::mon_less(MonId a, MonId b) const {
  if (a == b) return false;
  auto fa = factors(a);
  auto fb = factors(b);
  if (fa.size() != fb.size()) return fa.size() < fb.size();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i] != fb[i]) return gen_less(fa[i], fb[i]);
  }
  return false;
}

std::string Registry::mon_str(MonId id) const {
  auto fs = factors(id);
  if (fs.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "*";
    s += generator(fs[i]).str();
  }
  return s;
}

namespace {

struct MonLess {
  bool operator()(MonId a, MonId b) const {
    return Registry::instance().mon_less(a, b);
  }
};

using TermMap = std::map<MonId, Rational, MonLess>;

}  // namespace

namespace detail {

namespace {

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a.at(i) == b.at(i)) ++i;
  return i;
}

}  // namespace

// Local rewriting of one factor sequence:
//   R1  depth-0 factors never occur (dropped at construction),
//   R2  adjacent equal factors merge,
//   R3  for an adjacent pair, compare the row words and the column words
//       level by level up to the shorter depth m. If the rows and columns
//       stop agreeing at different levels the product is zero (insert the
//       level-j absorptions and apply the same-row/same-column rule there);
//       if both agree through level m the shorter factor is absorbed.
// Returns false when the monomial rewrites to zero.
bool normalize_factors(std::vector<GenId>& f, std::uint64_t& steps) {
  auto& reg = Registry::instance();
  std::size_t i = 0;
  while (f.size() >= 2 && i + 1 < f.size()) {
    const Generator& a = reg.generator(f[i]);
    const Generator& b = reg.generator(f[i + 1]);
    const bool a_shorter = a.depth() <= b.depth();
    const Generator& s = a_shorter ? a : b;
    const Generator& l = a_shorter ? b : a;
    const std::size_t m = s.row.size();
    const std::size_t jr = std::min(common_prefix(s.row, l.row), m);
    const std::size_t jc = std::min(common_prefix(s.col, l.col), m);
    if (jr == m && jc == m) {
      f.erase(f.begin() + (a_shorter ? i : i + 1));
      ++steps;
      if (i > 0) --i;
    } else if (jr != jc) {
      ++steps;
      return false;
    } else {
      ++i;
    }
  }
  return true;
}

}  // namespace detail

namespace {

using detail::normalize_factors;

void accumulate(TermMap& acc, MonId m, const Rational& c) {
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Element to_element(int k, const TermMap& acc) {
  Element out(k);
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

// One candidate application of the sum-collapse rule
//   sum_y a[ux,vy] -> a[u,v]   (and the row-suffix mirror).
struct CollapseCandidate {
  std::vector<MonId> members;  // the k collapsing monomials
  Rational coeff;
  bool vanished = false;  // replacement monomial rewrote to zero
  MonId replacement = Registry::kUnitMon;
  std::string context;  // deterministic tie-break
};

bool candidate_less(const CollapseCandidate& a, const CollapseCandidate& b) {
  auto& reg = Registry::instance();
  if (a.vanished != b.vanished) return a.vanished;
  if (a.replacement != b.replacement)
    return reg.mon_less(a.replacement, b.replacement);
  return a.context < b.context;
}

struct SlotEntry {
  int letter;
  Rational coeff;
  MonId mon;
};

// Finds all complete collapse groups in `acc` and returns the canonical
// smallest one, if any.
bool find_collapse(int k, const TermMap& acc, CollapseCandidate& best) {
  std::map<std::string, std::vector<std::pair<detail::LegCollapseSlot, SlotEntry>>>
      buckets;
  for (const auto& [mon, coeff] : acc) {
    for (auto& slot : detail::collapse_slots_monomial(mon)) {
      SlotEntry entry{slot.letter, coeff, mon};
      buckets[slot.context].emplace_back(std::move(slot), std::move(entry));
    }
  }

  bool found = false;
  for (const auto& [context, entries] : buckets) {
    // letters are distinct within a bucket (distinct monomials), so a
    // complete group is exactly k entries with one common coefficient
    if (entries.size() != static_cast<std::size_t>(k)) continue;
    bool complete = true;
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (const auto& [slot, e] : entries) {
      if (e.letter >= k || seen[e.letter] ||
          e.coeff != entries[0].second.coeff) {
        complete = false;
        break;
      }
      seen[e.letter] = true;
    }
    if (!complete) continue;

    CollapseCandidate cand;
    cand.coeff = entries[0].second.coeff;
    for (const auto& [slot, e] : entries) cand.members.push_back(e.mon);
    cand.vanished = entries[0].first.vanished;
    cand.replacement = entries[0].first.replacement;
    cand.context = context;
    if (!found || candidate_less(cand, best)) {
      best = std::move(cand);
      found = true;
    }
  }
  return found;
}

}  // namespace

namespace detail {

std::vector<LegCollapseSlot> collapse_slots_monomial(MonId m) {
  auto& reg = Registry::instance();
  std::vector<LegCollapseSlot> out;
  auto fs = reg.factors(m);
  std::vector<GenId> scratch;
  std::uint64_t steps = 0;
  for (std::size_t p = 0; p < fs.size(); ++p) {
    const Generator g = reg.generator(fs[p]);
    const auto d = g.row.size();
    scratch.assign(fs.begin(), fs.end());
    scratch.erase(scratch.begin() + p);
    MonId masked = reg.mon_id(scratch);
    for (int col_varies : {1, 0}) {
      const Word& fixed = col_varies ? g.row : g.col;
      Word prefix = (col_varies ? g.col : g.row).prefix(d - 1);
      LegCollapseSlot slot;
      slot.letter = col_varies ? g.col.back() : g.row.back();
      slot.context = reg.mon_str(masked) + "|" + std::to_string(p) + "|" +
                     (col_varies ? "c|" : "r|") + fixed.str() + "|" +
                     prefix.str();
      auto rebuilt = reg.factors(masked);
      scratch.assign(rebuilt.begin(), rebuilt.end());
      if (fixed.size() > 1) {
        Word parent_fixed = fixed.prefix(fixed.size() - 1);
        Generator parent = col_varies ? Generator(parent_fixed, prefix)
                                      : Generator(prefix, parent_fixed);
        scratch.insert(scratch.begin() + p, reg.gen_id(parent));
      }
      if (normalize_factors(scratch, steps)) {
        slot.vanished = false;
        slot.replacement = reg.mon_id(scratch);
      } else {
        slot.vanished = true;
      }
      out.push_back(std::move(slot));
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element

Element::Element(int alphabet_size) : k_(alphabet_size) {
  if (alphabet_size < 2 || alphabet_size > 10) {
    throw std::invalid_argument("alphabet size must be in [2, 10]");
  }
}

Element Element::unit(int k) {
  Element e(k);
  e.terms_.emplace_back(Registry::kUnitMon, 1);
  return e;
}

Element Element::from_generator(int k, const Generator& g) {
  for (std::size_t i = 0; i < g.row.size(); ++i) {
    if (g.row.at(i) >= k || g.col.at(i) >= k) {
      throw std::invalid_argument("letter out of alphabet range in " + g.str());
    }
  }
  if (g.depth() == 0) return unit(k);
  Element e(k);
  GenId id = Registry::instance().gen_id(g);
  e.terms_.emplace_back(Registry::instance().mon_id({&id, 1}), 1);
  return e;
}

Element Element::monomial(int k, std::span<const GenId> factors,
                          const Rational& coeff) {
  Element e(k);
  if (coeff == 0) return e;
  auto& reg = Registry::instance();
  std::vector<GenId> fs;
  fs.reserve(factors.size());
  for (GenId g : factors) {
    if (reg.gen_depth(g) > 0) fs.push_back(g);
  }
  e.terms_.emplace_back(reg.mon_id(fs), coeff);
  return e;
}

bool Element::is_unit() const {
  return terms_.size() == 1 && terms_[0].first == Registry::kUnitMon &&
         terms_[0].second == 1;
}

int Element::max_depth() const {
  auto& reg = Registry::instance();
  int d = 0;
  for (const auto& [m, c] : terms_) {
    for (GenId g : reg.factors(m)) d = std::max(d, reg.gen_depth(g));
  }
  return d;
}

int Element::max_degree() const {
  auto& reg = Registry::instance();
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, reg.degree(m));
  return d;
}

void Element::add_term(MonId m, const Rational& coeff) {
  if (coeff == 0) return;
  auto& reg = Registry::instance();
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [&](const auto& t, MonId id) { return reg.mon_less(t.first, id); });
  if (it != terms_.end() && it->first == m) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {m, coeff});
  }
}

Element Element::operator+(const Element& rhs) const {
  Element out = *this;
  out += rhs;
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  if (k_ != rhs.k_) throw std::invalid_argument("alphabet size mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Element Element::operator-(const Element& rhs) const {
  Element out = *this;
  out -= rhs;
  return out;
}

Element& Element::operator-=(const Element& rhs) {
  if (k_ != rhs.k_) throw std::invalid_argument("alphabet size mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator-() const {
  Element out(k_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

Element Element::operator*(const Rational& c) const {
  Element out(k_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_back(m, coeff * c);
  return out;
}

Element Element::operator*(const Element& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("alphabet size mismatch");
  auto& reg = Registry::instance();
  TermMap acc;
  std::uint64_t steps = 0;
  std::vector<GenId> fs;
  for (const auto& [ma, ca] : terms_) {
    auto fa = reg.factors(ma);
    for (const auto& [mb, cb] : rhs.terms_) {
      auto fb = reg.factors(mb);
      fs.assign(fa.begin(), fa.end());
      fs.insert(fs.end(), fb.begin(), fb.end());
      if (normalize_factors(fs, steps)) {
        accumulate(acc, reg.mon_id(fs), ca * cb);
      }
    }
  }
  Element out = to_element(k_, acc);
  return reduce(out).result;
}

// ---------------------------------------------------------------------------
// reduce / refine / prove_zero

ReductionOutcome reduce(const Element& x, const ReductionBudget& budget) {
  auto& reg = Registry::instance();
  std::uint64_t steps = 0;
  TermMap acc;
  std::vector<GenId> fs;
  for (const auto& [m, c] : x.terms()) {
    auto f = reg.factors(m);
    fs.assign(f.begin(), f.end());
    if (normalize_factors(fs, steps)) accumulate(acc, reg.mon_id(fs), c);
  }
  std::uint64_t collapses = 0;
  bool exhausted = false;
  while (true) {
    if (steps > budget.max_steps) {
      exhausted = true;
      break;
    }
    CollapseCandidate cand;
    if (!find_collapse(x.alphabet_size(), acc, cand)) break;
    for (MonId m : cand.members) acc.erase(m);
    if (!cand.vanished) accumulate(acc, cand.replacement, cand.coeff);
    ++collapses;
    ++steps;
  }
  ReductionOutcome out{to_element(x.alphabet_size(), acc),
                       Certificate::Irreducible,
                       {}};
  if (exhausted) {
    out.certificate = Certificate::BudgetExhausted;
  } else if (out.result.is_zero()) {
    out.certificate = Certificate::ProvedZero;
  }
  out.trace.push_back("local rewrites: " + std::to_string(steps - collapses));
  out.trace.push_back("sum collapses: " + std::to_string(collapses));
  return out;
}

namespace {

Word zeros(std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w = w.append(0);
  return w;
}

Element refine_impl(const Element& x, int depth, bool pad_rows) {
  if (depth < 0) throw std::invalid_argument("refine: negative depth");
  auto& reg = Registry::instance();
  Alphabet alphabet(x.alphabet_size());
  TermMap acc;
  std::uint64_t steps = 0;
  for (const auto& [m, c] : x.terms()) {
    auto fs = reg.factors(m);
    // per-factor expansion option lists
    std::vector<std::vector<GenId>> options;
    if (fs.empty()) {
      // the unit is the depth-0 generator: expand it like any other factor
      if (depth > 0) {
        std::vector<GenId> opts;
        Word pad = zeros(static_cast<std::size_t>(depth));
        for (const Word& t : enumerate_words(alphabet, depth)) {
          opts.push_back(reg.gen_id(pad_rows ? Generator(pad, t)
                                             : Generator(t, pad)));
        }
        options.push_back(std::move(opts));
      }
    } else {
      for (GenId g : fs) {
        const Generator& gen = reg.generator(g);
        int d = gen.depth();
        if (d > depth) {
          throw std::invalid_argument(
              "refine: target depth below factor depth of " + gen.str());
        }
        std::vector<GenId> opts;
        if (d == depth) {
          opts.push_back(g);
        } else {
          Word pad = zeros(static_cast<std::size_t>(depth - d));
          for (const Word& t : enumerate_words(alphabet, depth - d)) {
            opts.push_back(reg.gen_id(
                pad_rows ? Generator(gen.row.concat(pad), gen.col.concat(t))
                         : Generator(gen.row.concat(t), gen.col.concat(pad))));
          }
        }
        options.push_back(std::move(opts));
      }
    }
    // cartesian product of the options
    std::vector<GenId> pick(options.size());
    auto emit = [&](auto&& self, std::size_t i) -> void {
      if (i == options.size()) {
        std::vector<GenId> f = pick;
        if (normalize_factors(f, steps)) accumulate(acc, reg.mon_id(f), c);
        return;
      }
      for (GenId g : options[i]) {
        pick[i] = g;
        self(self, i + 1);
      }
    };
    emit(emit, 0);
  }
  return to_element(x.alphabet_size(), acc);
}

}  // namespace

Element refine(const Element& x, int depth) { return refine_impl(x, depth, true); }

Element refine_cols(const Element& x, int depth) {
  return refine_impl(x, depth, false);
}

ReductionOutcome prove_zero(const Element& x, const SearchPolicy& policy) {
  ReductionOutcome best = reduce(x, policy.budget);
  best.trace.insert(best.trace.begin(), "orientation: collapse-first");
  if (best.proved_zero()) return best;
  bool exhausted = best.certificate == Certificate::BudgetExhausted;

  int base = std::max(1, x.max_depth());
  for (int depth = base; depth <= base + policy.extra_depth; ++depth) {
    for (bool pad_rows : {true, false}) {
      ReductionOutcome attempt =
          reduce(refine_impl(x, depth, pad_rows), policy.budget);
      attempt.trace.insert(attempt.trace.begin(),
                           std::string("orientation: refine-") +
                               (pad_rows ? "rows" : "cols") + "-to-depth-" +
                               std::to_string(depth));
      if (attempt.proved_zero()) return attempt;
      exhausted |= attempt.certificate == Certificate::BudgetExhausted;
      if (attempt.result.terms().size() < best.result.terms().size()) {
        best = std::move(attempt);
      }
    }
  }
  best.certificate =
      exhausted ? Certificate::BudgetExhausted : Certificate::Irreducible;
  return best;
}

Element adjoint(const Element& x) {
  auto& reg = Registry::instance();
  Element out(x.alphabet_size());
  std::vector<GenId> fs;
  for (const auto& [m, c] : x.terms()) {
    auto f = reg.factors(m);
    fs.assign(f.rbegin(), f.rend());
    out.add_term(reg.mon_id(fs), c);
  }
  return out;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  auto& reg = Registry::instance();
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
    if (m == Registry::kUnitMon) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += reg.mon_str(m);
    } else {
      s += to_string(mag) + "*" + reg.mon_str(m);
    }
  }
  return s;
}

}  // namespace qtree
