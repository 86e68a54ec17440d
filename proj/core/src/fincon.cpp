#include "qtree/fincon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qtree/classical.hpp"
#include "qtree/hopf.hpp"
#include "qtree/linalg.hpp"
#include "qtree/parser.hpp"
#include "qtree/selfsim.hpp"
#include "qtree/suite_util.hpp"

namespace qtree {

namespace {

Element gen_elem(int k, const Generator& g) {
  return Element::from_generator(k, g);
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

std::vector<Generator> depth1_generators(int k) {
  std::vector<Generator> out;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) out.emplace_back(Word{x}, Word{y});
  }
  return out;
}

void add_commutators(RelatorSet& I) {
  const int k = I.k;
  auto gens = depth1_generators(k);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Element c = commutator(gen_elem(k, gens[i]), gen_elem(k, gens[j]));
      if (!c.is_zero()) I.relators.push_back(std::move(c));
    }
  }
}

void add_orbit_relators(RelatorSet& I, const Permutation& s) {
  const int k = I.k;
  std::set<std::string> seen;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      Element r = gen_elem(k, Generator(Word{x}, Word{y})) -
                  gen_elem(k, Generator(Word{s.apply(x)}, Word{s.apply(y)}));
      if (r.is_zero()) continue;
      Element n = -r;
      std::string key = std::min(to_string(r), to_string(n));
      if (seen.insert(key).second) I.relators.push_back(std::move(r));
    }
  }
}

}  // namespace

std::vector<Element> RelatorSet::all_relators() const {
  std::vector<Element> out = relators;
  for (const Generator& g : vanishing) out.push_back(gen_elem(k, g));
  return out;
}

RelatorSet RelatorSet::zero(int k) { return {"zero", k, 1, {}, {}, false}; }

RelatorSet RelatorSet::trivial_group(int k) {
  RelatorSet I{"trivial", k, 1, {}, {}, true};
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x != y) I.vanishing.emplace_back(Word{x}, Word{y});
    }
  }
  return I;
}

RelatorSet RelatorSet::full_symmetric(int k) {
  RelatorSet I{"full", k, 1, {}, {}, true};
  add_commutators(I);
  return I;
}

RelatorSet RelatorSet::cyclic(int k) {
  RelatorSet I{"cyclic", k, 1, {}, {}, true};
  add_commutators(I);
  Permutation c;
  c.image.resize(k);
  for (int x = 0; x < k; ++x) c.image[x] = static_cast<std::uint8_t>((x + 1) % k);
  add_orbit_relators(I, c);
  return I;
}

RelatorSet RelatorSet::klein() {
  RelatorSet I{"klein", 4, 1, {}, {}, true};
  add_commutators(I);
  add_orbit_relators(I, Permutation{{1, 0, 3, 2}});
  add_orbit_relators(I, Permutation{{2, 3, 0, 1}});
  return I;
}

RelatorSet RelatorSet::preset(const std::string& name, int k) {
  if (name == "zero" || name == "none") return zero(k);
  if (name == "trivial") return trivial_group(k);
  if (name == "full") return full_symmetric(k);
  if (name == "cyclic") return cyclic(k);
  if (name == "klein") {
    if (k != 4) throw std::invalid_argument("klein preset requires k = 4");
    return klein();
  }
  throw std::invalid_argument("unknown relator preset '" + name + "'");
}

RelatorSet RelatorSet::from_json(const json& j) {
  RelatorSet I;
  I.name = j.value("name", "user");
  I.k = j.value("k", 2);
  I.depth = j.value("depth", 1);
  I.classical = j.value("classical", false);
  Alphabet alphabet(I.k);
  if (j.contains("relators")) {
    for (const auto& s : j.at("relators")) {
      Element e = parse_element(s.get<std::string>(), alphabet);
      I.relators.push_back(reduce(e).result);
    }
  }
  if (j.contains("vanishing")) {
    for (const auto& pair : j.at("vanishing")) {
      I.vanishing.emplace_back(Word::parse(pair.at(0).get<std::string>()),
                               Word::parse(pair.at(1).get<std::string>()));
    }
  }
  for (const Element& r : I.relators) {
    if (r.max_depth() > I.depth) {
      throw std::invalid_argument("relator deeper than the declared depth");
    }
  }
  return I;
}

json RelatorSet::to_json() const {
  json j;
  j["name"] = name;
  j["k"] = k;
  j["depth"] = depth;
  j["classical"] = classical;
  json rs = json::array();
  for (const Element& r : relators) rs.push_back(to_string(r));
  j["relators"] = std::move(rs);
  json vs = json::array();
  for (const Generator& g : vanishing) {
    vs.push_back(json::array({g.row.str(), g.col.str()}));
  }
  j["vanishing"] = std::move(vs);
  return j;
}

// ---------------------------------------------------------------------------
// quotient slices

namespace {

/// Column indexing for the sparse elimination: one dense id per monomial.
class ColumnIndex {
 public:
  std::uint32_t id(MonId m) {
    auto [it, inserted] = index_.try_emplace(m, next_);
    if (inserted) {
      ++next_;
      reverse_.push_back(m);
    }
    return it->second;
  }

  MonId mon_of(std::uint32_t col) const { return reverse_[col]; }

  SparseVec vec(const Element& e) {
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (const auto& [m, c] : e.terms()) entries.emplace_back(id(m), c);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec v;
    v.entries = std::move(entries);
    return v;
  }

 private:
  std::map<MonId, std::uint32_t> index_;
  std::vector<MonId> reverse_;
  std::uint32_t next_ = 0;
};

/// Bounded slice of the ideal generated by the restriction images of the
/// relators. Rows are generated lazily in a deterministic order and the
/// target is re-reduced after every batch, so easy memberships exit early.
class QuotientSlice {
 public:
  QuotientSlice(const RelatorSet& I, const QuotientBounds& bounds)
      : I_(I), bounds_(bounds) {}

  // membership of e in the slice
  bool contains(const Element& e, std::uint64_t* rows_used = nullptr) {
    Element reduced = reduce(e).result;
    if (reduced.is_zero()) return true;

    // base images rho_w(r), |w| <= bound
    std::vector<Element> bases;
    std::set<GenId> universe;
    collect_gens(reduced, universe);
    for (int len = 0; len <= bounds_.max_word_len; ++len) {
      for (const Word& w : enumerate_words(Alphabet(I_.k), len)) {
        for (const Element& r : I_.all_relators()) {
          Element base = reduce(rho_word_closed_form(w, r)).result;
          if (base.is_zero()) continue;
          collect_gens(base, universe);
          bases.push_back(std::move(base));
        }
      }
    }
    std::vector<GenId> cof(universe.begin(), universe.end());
    std::sort(cof.begin(), cof.end(), [](GenId a, GenId b) {
      return Registry::instance().gen_less(a, b);
    });

    ColumnIndex cols;
    SparseVec target = cols.vec(reduced);
    RowEchelon ech;
    std::uint64_t rows = 0;
    auto feed = [&](const Element& row) {
      if (row.is_zero()) return false;
      ++rows;
      ech.add(cols.vec(row));
      return rows >= bounds_.max_rows;
    };
    auto solved = [&] { return ech.residual(target).empty(); };

    // batch 0: the bases themselves
    for (const Element& b : bases) {
      if (feed(b)) break;
    }
    if (solved()) {
      if (rows_used) *rows_used = rows;
      return true;
    }
    // batch 1: one-sided degree-1 cofactors
    if (bounds_.cofactor_degree >= 1 && rows < bounds_.max_rows) {
      for (const Element& b : bases) {
        for (GenId g : cof) {
          Element m = Element::monomial(I_.k, {&g, 1});
          if (feed(m * b) || feed(b * m)) break;
        }
        if (rows >= bounds_.max_rows) break;
      }
      if (solved()) {
        if (rows_used) *rows_used = rows;
        return true;
      }
    }
    // batch 2: two-sided degree-(1,1) cofactors
    if (bounds_.cofactor_degree >= 2 && rows < bounds_.max_rows) {
      for (const Element& b : bases) {
        for (GenId gl : cof) {
          Element ml = Element::monomial(I_.k, {&gl, 1});
          Element left = ml * b;
          if (left.is_zero()) continue;
          for (GenId gr : cof) {
            Element mr = Element::monomial(I_.k, {&gr, 1});
            if (feed(left * mr)) break;
          }
          if (rows >= bounds_.max_rows) break;
        }
        if (solved()) break;
        if (rows >= bounds_.max_rows) break;
      }
    }
    if (rows_used) *rows_used = rows;
    return solved();
  }

 private:
  static void collect_gens(const Element& e, std::set<GenId>& out) {
    auto& reg = Registry::instance();
    for (const auto& [m, c] : e.terms()) {
      for (GenId g : reg.factors(m)) out.insert(g);
    }
  }

  const RelatorSet& I_;
  QuotientBounds bounds_;
};

}  // namespace

ReductionOutcome quotient_reduce(const Element& e, const RelatorSet& I,
                                 const QuotientBounds& bounds) {
  ReductionOutcome base = prove_zero(e);
  if (base.proved_zero()) return base;
  if (I.is_zero_ideal()) {
    return base;  // the zero ideal: membership is plain reduction to zero
  }
  QuotientSlice slice(I, bounds);
  std::uint64_t rows = 0;
  bool member = slice.contains(e, &rows);
  Certificate cert = member ? Certificate::ProvedZero
                     : rows >= bounds.max_rows ? Certificate::BudgetExhausted
                                               : Certificate::Irreducible;
  ReductionOutcome out{
      member ? Element::zero(e.alphabet_size()) : base.result, cert, {}};
  out.trace.push_back("slice rows: " + std::to_string(rows));
  return out;
}

// ---------------------------------------------------------------------------
// coideal witnesses

std::optional<CoidealWitness> find_coideal_witness(const Element& relator,
                                                   const RelatorSet& I) {
  const int k = I.k;
  auto& reg = Registry::instance();
  TensorElement d = delta(relator);
  if (d.is_zero()) return CoidealWitness{};

  int max_left_degree = 0;
  for (const auto& [tuple, c] : d.terms()) {
    max_left_degree =
        std::max(max_left_degree, static_cast<int>(reg.factors(tuple[0]).size()));
  }

  // depth-slice ideal: rows m * r * m' with deg(m) + deg(r) + deg(m')
  // bounded by the largest leg degree
  RowEchelon ideal;
  ColumnIndex cols;
  std::vector<Element> rels = I.all_relators();
  std::vector<GenId> gens;
  for (const Generator& g : depth1_generators(k)) {
    gens.push_back(reg.gen_id(g));
  }
  for (const Element& r : rels) {
    Element rr = reduce(r).result;
    if (rr.is_zero()) continue;
    int dr = rr.max_degree();
    if (dr <= max_left_degree) ideal.add(cols.vec(rr));
    if (dr + 1 <= max_left_degree) {
      for (GenId g : gens) {
        Element m = Element::monomial(k, {&g, 1});
        ideal.add(cols.vec(m * rr));
        ideal.add(cols.vec(rr * m));
      }
    }
    if (dr + 2 <= max_left_degree) {
      for (GenId gl : gens) {
        Element ml = Element::monomial(k, {&gl, 1});
        for (GenId gr : gens) {
          Element mr = Element::monomial(k, {&gr, 1});
          ideal.add(cols.vec(ml * rr * mr));
        }
      }
    }
  }

  // split every left leg into ideal part + complement residual
  CoidealWitness witness;
  std::map<MonId, Element> right_by_left;  // t_mu
  for (const auto& [tuple, c] : d.terms()) {
    Element right = Element::monomial(
        k, std::vector<GenId>(reg.factors(tuple[1]).begin(),
                              reg.factors(tuple[1]).end()), c);
    auto [it, inserted] = right_by_left.try_emplace(tuple[0], right);
    if (!inserted) it->second += right;
  }
  std::map<std::uint32_t, Element> complement_groups;  // h_beta by column

  for (auto& [left_mon, t] : right_by_left) {
    Element left = Element::monomial(
        k, std::vector<GenId>(reg.factors(left_mon).begin(),
                              reg.factors(left_mon).end()));
    SparseVec residual = ideal.reduce_fully(cols.vec(left));
    Element gamma(k);
    for (const auto& [col, coeff] : residual.entries) {
      gamma.add_term(cols.mon_of(col), coeff);
    }
    Element iota = left - gamma;
    if (!iota.is_zero()) witness.left_in_ideal.emplace_back(iota, t);
    for (const auto& [col, coeff] : residual.entries) {
      auto [it, inserted] = complement_groups.try_emplace(col, t * coeff);
      if (!inserted) it->second += t * coeff;
    }
  }

  for (auto& [col, h] : complement_groups) {
    Element hr = reduce(h).result;
    if (hr.is_zero()) continue;
    if (!ideal.residual(cols.vec(hr)).empty()) {
      return std::nullopt;  // not a coideal at this bound
    }
    Element beta(k);
    beta.add_term(cols.mon_of(col), 1);
    witness.right_in_ideal.emplace_back(beta, hr);
  }
  return witness;
}

// ---------------------------------------------------------------------------
// woronowicz suite

VerificationReport verify_woronowicz_ideal(const RelatorSet& I,
                                           const SuiteConfig& cfg,
                                           ZeroCorpus* corpus) {
  SuiteRunner run("woronowicz-ideal", cfg, corpus);
  const int k = cfg.k;

  if (I.is_zero_ideal()) {
    run.check_exact("zero-ideal", true, "I = 0", "trivially a Woronowicz ideal");
    return run.take();
  }

  QuotientBounds leg_bounds;
  leg_bounds.max_word_len = cfg.wmax;
  leg_bounds.cofactor_degree = k == 2 ? 2 : 1;

  std::vector<Element> rels = I.all_relators();
  for (std::size_t ri = 0; ri < rels.size(); ++ri) {
    const Element& i_rel = rels[ri];
    const std::string rname = "r" + std::to_string(ri);

    auto witness = find_coideal_witness(i_rel, I);
    if (!witness) {
      IdentityResult miss;
      miss.name = "witness/" + rname;
      miss.lhs = clip_expr(to_string(i_rel));
      miss.rhs = "coideal decomposition";
      miss.certificate = ReportCert::Unverified;
      run.record(std::move(miss));
      continue;
    }

    // the decomposition is exact by construction; re-check it
    {
      TensorElement rebuilt(k, {Leg::algebra(), Leg::algebra()});
      for (const auto& [s, t] : witness->left_in_ideal) {
        rebuilt += tensor_product(TensorElement::from_element(s),
                                  TensorElement::from_element(t));
      }
      for (const auto& [u, v] : witness->right_in_ideal) {
        rebuilt += tensor_product(TensorElement::from_element(u),
                                  TensorElement::from_element(v));
      }
      run.check_zero("witness-exact/" + rname, delta(i_rel), rebuilt);
    }

    // each ideal-side leg certifies against the depth slice
    {
      bool ok = true;
      QuotientBounds depth_slice{0, 2, leg_bounds.max_rows};
      for (const auto& [s, t] : witness->left_in_ideal) {
        ok = ok && quotient_reduce(s, I, depth_slice).proved_zero();
      }
      for (const auto& [u, v] : witness->right_in_ideal) {
        ok = ok && quotient_reduce(v, I, depth_slice).proved_zero();
      }
      run.check_exact("witness-legs-in-ideal/" + rname, ok,
                      "s_j, v_j", "depth-slice ideal members");
    }

    for (int len = 0; len <= cfg.wmax; ++len) {
      for (const Word& w : enumerate_words(Alphabet(k), len)) {
        const std::string tag = rname + "/w" + (len ? w.str() : std::string("e"));

        // comultiplication factorization through the restrictions
        if (len > 0) {
          TensorElement lhs = delta(rho_word(w, i_rel));
          TensorElement rhs(k, {Leg::algebra(), Leg::algebra()});
          TensorElement di = delta(i_rel);
          auto& reg = Registry::instance();
          for (const Word& y : enumerate_words(Alphabet(k), len)) {
            TensorElement mapped(k, {Leg::algebra(), Leg::algebra()});
            for (const auto& [tuple, c] : di.terms()) {
              Element left = rho_word(
                  y, Element::monomial(
                         k, std::vector<GenId>(reg.factors(tuple[0]).begin(),
                                               reg.factors(tuple[0]).end())));
              Element right = rho_word(
                  w, Element::monomial(
                         k, std::vector<GenId>(reg.factors(tuple[1]).begin(),
                                               reg.factors(tuple[1]).end())));
              mapped += tensor_product(TensorElement::from_element(left),
                                       TensorElement::from_element(right)) *
                        c;
            }
            TensorElement projector = tensor_product(
                TensorElement::from_element(Element::unit(k)),
                TensorElement::from_element(gen_elem(k, Generator(y, w))));
            rhs += multiply_pointwise(projector, mapped);
          }
          run.check_zero("factorization/" + tag, lhs, rhs);
        }

        // leg-wise kill: every summand has a tensor factor in the ideal
        {
          bool ok = true;
          for (const Word& y : enumerate_words(Alphabet(k), len)) {
            for (const auto& [s, t] : witness->left_in_ideal) {
              if (!quotient_reduce(rho_word(y, s), I, leg_bounds)
                       .proved_zero()) {
                ok = false;
              }
            }
            for (const auto& [u, v] : witness->right_in_ideal) {
              Element right = gen_elem(k, Generator(y, w)) * rho_word(w, v);
              if (!quotient_reduce(right, I, leg_bounds).proved_zero()) {
                ok = false;
              }
            }
            if (!ok) break;
          }
          run.check_exact("leg-kill/" + tag, ok,
                          "(q ox q)(Delta(rho_w(i)))", "0");
        }

        // antipode stability: kappa(rho_w(i)) decomposes over the slice
        if (len > 0) {
          Element ki = antipode(i_rel);
          Element lhs = antipode(rho_word(w, i_rel));
          Element rhs(k);
          for (const Word& z : enumerate_words(Alphabet(k), len)) {
            rhs += gen_elem(k, Generator(w, z)) * rho_word(z, ki);
          }
          run.check_zero("kappa-stability/" + tag, lhs, rhs);
        }
      }
    }

    {
      Element ki = antipode(i_rel);
      bool in_ideal =
          quotient_reduce(ki, I, QuotientBounds{0, 2, leg_bounds.max_rows})
              .proved_zero();
      run.check_exact("kappa-in-ideal/" + rname, in_ideal, "kappa(i)",
                      "depth-slice ideal member");
    }
  }
  return run.take();
}

// ---------------------------------------------------------------------------
// free wreath product maps

WreathElement pi_map(const Element& e) {
  const int k = e.alphabet_size();
  auto& reg = Registry::instance();
  WreathElement out(k);
  std::vector<WreathSym> symbols;
  std::uint64_t steps = 0;
  for (const auto& [mon, c] : e.terms()) {
    symbols.clear();
    for (GenId gid : reg.factors(mon)) {
      const Generator& g = reg.generator(gid);
      int x = g.row.at(0), y = g.col.at(0);
      symbols.push_back(WreathSym::pgen(x, y));
      if (g.depth() > 1) {
        GenId tail = reg.gen_id(
            Generator(g.row.suffix_from(1), g.col.suffix_from(1)));
        symbols.push_back(WreathSym::nu(x, reg.mon_id({&tail, 1})));
      }
    }
    std::vector<WreathSym> fs = symbols;
    if (wreath_normalize(fs, steps)) out.add_term(wmon_id(fs), c);
  }
  return out;
}

Element phi_map(const WreathElement& e) {
  const int k = e.alphabet_size();
  auto& reg = Registry::instance();
  Element out(k);
  for (const auto& [mon, c] : e.terms()) {
    Element prod = Element::unit(k);
    for (const WreathSym& s : wmon_factors(mon)) {
      if (s.kind == WreathSym::Kind::PGen) {
        prod = prod * gen_elem(k, Generator(Word{s.x}, Word{s.y}));
      } else {
        Element inner = Element::monomial(
            k, std::vector<GenId>(reg.factors(s.inner).begin(),
                                  reg.factors(s.inner).end()));
        prod = prod * sigma(s.x, inner);
      }
    }
    out += prod * c;
  }
  return out;
}

namespace {

// wreath comultiplication of a single symbol, as a [W, W] tensor
TensorElement wreath_delta_sym(int k, const WreathSym& s) {
  TensorElement out(k, {Leg::wreath(), Leg::wreath()});
  auto& reg = Registry::instance();
  if (s.kind == WreathSym::Kind::PGen) {
    for (int z = 0; z < k; ++z) {
      WreathSym l = WreathSym::pgen(s.x, z);
      WreathSym r = WreathSym::pgen(z, s.y);
      out.add_term({wmon_id({&l, 1}), wmon_id({&r, 1})}, 1);
    }
    return out;
  }
  Element inner = Element::monomial(
      k, std::vector<GenId>(reg.factors(s.inner).begin(),
                            reg.factors(s.inner).end()));
  TensorElement di = delta(inner);
  std::uint64_t steps = 0;
  for (const auto& [tuple, c] : di.terms()) {
    for (int z = 0; z < k; ++z) {
      std::vector<WreathSym> left;
      if (tuple[0] != Registry::kUnitMon) {
        left.push_back(WreathSym::nu(s.x, tuple[0]));
      }
      left.push_back(WreathSym::pgen(s.x, z));
      std::vector<WreathSym> right;
      if (tuple[1] != Registry::kUnitMon) {
        right.push_back(WreathSym::nu(z, tuple[1]));
      }
      std::vector<WreathSym> lf = left, rf = right;
      if (!wreath_normalize(lf, steps) || !wreath_normalize(rf, steps)) {
        continue;
      }
      out.add_term({wmon_id(lf), wmon_id(rf)}, c);
    }
  }
  return out;
}

TensorElement wreath_delta_monomial(int k, WMonId mon) {
  TensorElement acc(k, {Leg::wreath(), Leg::wreath()});
  acc.add_term({kUnitWMon, kUnitWMon}, 1);
  for (const WreathSym& s : wmon_factors(mon)) {
    acc = multiply_pointwise(acc, wreath_delta_sym(k, s));
  }
  return acc;
}

}  // namespace

TensorElement wreath_delta(const WreathElement& e) {
  const int k = e.alphabet_size();
  TensorElement out(k, {Leg::wreath(), Leg::wreath()});
  for (const auto& [mon, c] : e.terms()) {
    out += wreath_delta_monomial(k, mon) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// wreath suites

namespace {

std::vector<Generator> generators_up_to(int k, int depth) {
  std::vector<Generator> out;
  for (int n = 1; n <= depth; ++n) {
    for (const Word& u : enumerate_words(Alphabet(k), n)) {
      for (const Word& v : enumerate_words(Alphabet(k), n)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

TensorElement pi_on_legs(const TensorElement& t) {
  const int k = t.alphabet_size();
  auto& reg = Registry::instance();
  auto fn = [k, &reg](std::uint32_t mon) {
    Element m = Element::monomial(
        k, std::vector<GenId>(reg.factors(mon).begin(),
                              reg.factors(mon).end()));
    return TensorElement::from_wreath(pi_map(m));
  };
  TensorElement out = apply_on_leg(t, 0, {Leg::wreath()}, fn);
  return apply_on_leg(out, 1, {Leg::wreath()}, fn);
}

}  // namespace

VerificationReport verify_wreath_iso(const RelatorSet& I,
                                     const SuiteConfig& cfg,
                                     ZeroCorpus* corpus) {
  SuiteRunner run("wreath-iso", cfg, corpus);
  const int k = cfg.k;
  auto& reg = Registry::instance();

  // (i) the pi images satisfy the defining relations
  for (const Generator& g : generators_up_to(k, cfg.d)) {
    WreathElement b = pi_map(gen_elem(k, g));
    run.check_zero("pi-idempotent/" + g.str(), b * b, b);
    run.check_zero("pi-selfadjoint/" + g.str(), wreath_adjoint(b), b);
  }
  for (int x = 0; x < k; ++x) {
    WreathElement sum = WreathElement::zero(k);
    for (int y = 0; y < k; ++y) {
      sum += pi_map(gen_elem(k, Generator(Word{x}, Word{y})));
    }
    run.check_zero("pi-row-sum/x" + std::to_string(x), sum,
                   WreathElement::unit(k));
  }
  for (const Generator& g : generators_up_to(k, cfg.d - 1)) {
    for (int w = 0; w < k; ++w) {
      WreathElement row = WreathElement::zero(k);
      WreathElement col = WreathElement::zero(k);
      for (int z = 0; z < k; ++z) {
        row += pi_map(gen_elem(k, Generator(g.row.append(w), g.col.append(z))));
        col += pi_map(gen_elem(k, Generator(g.row.append(z), g.col.append(w))));
      }
      WreathElement expected = pi_map(gen_elem(k, g));
      run.check_zero("pi-square-row/" + g.str() + "/w" + std::to_string(w),
                     row, expected);
      run.check_zero("pi-square-col/" + g.str() + "/w" + std::to_string(w),
                     col, expected);
    }
  }

  // (ii) phi kills the commutation relators
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      for (const Generator& g : generators_up_to(k, std::max(1, cfg.d - 1))) {
        Element nu_img = sigma(x, gen_elem(k, g));
        Element p_img = gen_elem(k, Generator(Word{x}, Word{y}));
        run.check_zero("phi-relator/x" + std::to_string(x) + ",y" +
                           std::to_string(y) + "/" + g.str(),
                       nu_img * p_img, p_img * nu_img);
      }
    }
  }

  // (iii) mutual inverses on generators
  for (const Generator& g : generators_up_to(k, cfg.d)) {
    Element a = gen_elem(k, g);
    run.check_zero("phi-pi/" + g.str(), phi_map(pi_map(a)), a);
  }
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      WreathElement p =
          WreathElement::from_symbol(k, WreathSym::pgen(x, y));
      run.check_zero("pi-phi/q" + std::to_string(x) + std::to_string(y),
                     pi_map(phi_map(p)), p);
    }
    for (const Generator& g : generators_up_to(k, std::max(1, cfg.d - 1))) {
      GenId gid = reg.gen_id(g);
      WreathElement nu = WreathElement::from_symbol(
          k, WreathSym::nu(x, reg.mon_id({&gid, 1})));
      run.check_zero("pi-phi/nu" + std::to_string(x) + "/" + g.str(),
                     pi_map(phi_map(nu)), nu);
    }
  }

  // (iv) comultiplication compatibility on generators
  for (const Generator& g : generators_up_to(k, cfg.d)) {
    Element a = gen_elem(k, g);
    TensorElement lhs = wreath_delta(pi_map(a));
    TensorElement rhs = pi_on_legs(delta(a));
    run.check_zero("comult-compat/" + g.str(), lhs, rhs);
  }

  // classical shadow: indicator span rank matches the constrained counts
  if (I.classical || I.is_zero_ideal()) {
    SubgroupSpec P = I.is_zero_ideal() ? SubgroupSpec::full(k)
                                       : SubgroupSpec::by_name(I.name, k);
    std::uint64_t order = P.elements().size();
    for (int n = 1; n <= std::min(cfg.d, 3); ++n) {
      std::uint64_t expected = gp_count(order, k, n);
      if (expected > 2000) break;
      std::vector<Portrait> group = enumerate_gp(P, n);
      bool ok = group.size() == expected &&
                indicator_span_rank(k, n, group) == group.size();
      run.check_exact("classical-shadow/n" + std::to_string(n), ok,
                      "indicator span rank",
                      std::to_string(expected));
    }
  }
  return run.take();
}

VerificationReport verify_wreath_comult(const RelatorSet& I,
                                        const SuiteConfig& cfg,
                                        ZeroCorpus* corpus) {
  SuiteRunner run("wreath-comult", cfg, corpus);
  const int k = cfg.k;
  auto& reg = Registry::instance();

  // comultiplication respects the commutation relator: apply it to the two
  // un-normalized symbol orders
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      for (const Generator& g : generators_up_to(k, std::max(1, cfg.d - 1))) {
        GenId gid = reg.gen_id(g);
        WreathSym nu = WreathSym::nu(x, reg.mon_id({&gid, 1}));
        WreathSym p = WreathSym::pgen(x, y);
        std::vector<WreathSym> nupg{nu, p};
        std::vector<WreathSym> pgnu{p, nu};
        WreathElement lhs(k), rhs(k);
        lhs.add_term(wmon_id(nupg), 1);
        rhs.add_term(wmon_id(pgnu), 1);
        run.check_zero("comult-relator/x" + std::to_string(x) + ",y" +
                           std::to_string(y) + "/" + g.str(),
                       wreath_delta(lhs), wreath_delta(rhs));
      }
    }
  }

  // coassociativity on the wreath generators
  auto wreath_delta_on_leg = [k](const TensorElement& t, std::size_t leg) {
    return apply_on_leg(t, leg, {Leg::wreath(), Leg::wreath()},
                        [k](std::uint32_t mon) {
                          WreathElement e(k);
                          e.add_term(mon, 1);
                          return wreath_delta(e);
                        });
  };
  auto coassoc = [&](const std::string& name, const WreathElement& e) {
    TensorElement d = wreath_delta(e);
    run.check_zero("coassoc/" + name, wreath_delta_on_leg(d, 0),
                   wreath_delta_on_leg(d, 1));
  };
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      coassoc("q" + std::to_string(x) + std::to_string(y),
              WreathElement::from_symbol(k, WreathSym::pgen(x, y)));
    }
    for (const Generator& g : generators_up_to(k, std::max(1, cfg.d - 1))) {
      GenId gid = reg.gen_id(g);
      coassoc("nu" + std::to_string(x) + "/" + g.str(),
              WreathElement::from_symbol(
                  k, WreathSym::nu(x, reg.mon_id({&gid, 1}))));
    }
  }

  // block matrix conditions
  {
    // a^X (a^X)^T = 1 = (a^X)^T a^X
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        WreathElement lhs = WreathElement::zero(k);
        WreathElement rhs = WreathElement::zero(k);
        for (int z = 0; z < k; ++z) {
          lhs += WreathElement::from_symbol(k, WreathSym::pgen(x, z)) *
                 WreathElement::from_symbol(k, WreathSym::pgen(y, z));
          rhs += WreathElement::from_symbol(k, WreathSym::pgen(z, x)) *
                 WreathElement::from_symbol(k, WreathSym::pgen(z, y));
        }
        WreathElement expected =
            x == y ? WreathElement::unit(k) : WreathElement::zero(k);
        run.check_zero("aX-unitary/" + std::to_string(x) + "," +
                           std::to_string(y),
                       lhs, expected);
        run.check_zero("aXT-unitary/" + std::to_string(x) + "," +
                           std::to_string(y),
                       rhs, expected);
      }
    }

    // depth-n generator block: a, b, c with ab = ba = 1 and c = (a^T)^{-1}
    const int n = std::max(1, std::min(cfg.d - 1, 2));
    std::vector<Word> words = enumerate_words(Alphabet(k), n);
    auto A = [&](const Word& u, int x, const Word& v, int y) {
      GenId gid = reg.gen_id(Generator(u, v));
      return WreathElement::from_symbol(k, WreathSym::nu(x, reg.mon_id({&gid, 1}))) *
             WreathElement::from_symbol(k, WreathSym::pgen(x, y));
    };
    auto B = [&](const Word& u, int x, const Word& v, int y) {
      GenId gid = reg.gen_id(Generator(v, u));
      return WreathElement::from_symbol(k, WreathSym::pgen(y, x)) *
             WreathElement::from_symbol(k, WreathSym::nu(y, reg.mon_id({&gid, 1})));
    };
    auto C = [&](const Word& u, int x, const Word& v, int y) {
      GenId gid = reg.gen_id(Generator(u, v));
      return WreathElement::from_symbol(k, WreathSym::pgen(x, y)) *
             WreathElement::from_symbol(k, WreathSym::nu(x, reg.mon_id({&gid, 1})));
    };
    for (const Word& u : words) {
      for (int x = 0; x < k; ++x) {
        for (const Word& v : words) {
          for (int y = 0; y < k; ++y) {
            WreathElement ab = WreathElement::zero(k);
            WreathElement ba = WreathElement::zero(k);
            WreathElement atc = WreathElement::zero(k);
            WreathElement cat = WreathElement::zero(k);
            for (const Word& z : words) {
              for (int t = 0; t < k; ++t) {
                ab += A(u, x, z, t) * B(z, t, v, y);
                ba += B(u, x, z, t) * A(z, t, v, y);
                atc += A(z, t, u, x) * C(z, t, v, y);
                cat += C(z, t, u, x) * A(z, t, v, y);
              }
            }
            WreathElement expected = (u == v && x == y)
                                         ? WreathElement::unit(k)
                                         : WreathElement::zero(k);
            std::string tag = u.str() + std::to_string(x) + "," + v.str() +
                              std::to_string(y);
            run.check_zero("block-ab/" + tag, ab, expected);
            run.check_zero("block-ba/" + tag, ba, expected);
            run.check_zero("block-aTc/" + tag, atc, expected);
            run.check_zero("block-caT/" + tag, cat, expected);
          }
        }
      }
    }
  }
  (void)I;
  return run.take();
}

}  // namespace qtree
