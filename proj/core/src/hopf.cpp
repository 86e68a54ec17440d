#include "qtree/hopf.hpp"

#include "qtree/classical.hpp"
#include "qtree/rng.hpp"
#include "qtree/selfsim.hpp"
#include "qtree/suite_util.hpp"

namespace qtree {

FunctionElement FunctionElement::basis(int k, const Word& w) {
  return {k, static_cast<int>(w.size()), {{w, Rational(1)}}};
}

FunctionElement FunctionElement::unit(int k, int n) {
  FunctionElement f{k, n, {}};
  for (const Word& w : enumerate_words(Alphabet(k), n)) {
    f.terms.emplace_back(w, 1);
  }
  return f;
}

namespace {

// Delta on a single generator, as a two-leg tensor.
TensorElement delta_gen(int k, GenId id) {
  auto& reg = Registry::instance();
  const Generator& g = reg.generator(id);
  TensorElement out(k, {Leg::algebra(), Leg::algebra()});
  for (const Word& w : enumerate_words(Alphabet(k), g.depth())) {
    GenId left = reg.gen_id(Generator(g.row, w));
    GenId right = reg.gen_id(Generator(w, g.col));
    out.add_term({reg.mon_id({&left, 1}), reg.mon_id({&right, 1})}, 1);
  }
  return out;
}

TensorElement delta_monomial(int k, MonId mon) {
  auto& reg = Registry::instance();
  TensorElement acc(k, {Leg::algebra(), Leg::algebra()});
  acc.add_term({Registry::kUnitMon, Registry::kUnitMon}, 1);
  for (GenId g : reg.factors(mon)) {
    acc = multiply_pointwise(acc, delta_gen(k, g));
  }
  return acc;
}

}  // namespace

TensorElement delta(const Element& x) {
  TensorElement out(x.alphabet_size(), {Leg::algebra(), Leg::algebra()});
  for (const auto& [mon, c] : x.terms()) {
    out += delta_monomial(x.alphabet_size(), mon) * c;
  }
  return out;
}

TensorElement delta_on_leg(const TensorElement& t, std::size_t leg) {
  int k = t.alphabet_size();
  return apply_on_leg(t, leg, {Leg::algebra(), Leg::algebra()},
                      [k](std::uint32_t mon) { return delta_monomial(k, mon); });
}

Rational counit(const Element& x) {
  auto& reg = Registry::instance();
  Rational total = 0;
  for (const auto& [mon, c] : x.terms()) {
    bool diagonal = true;
    for (GenId g : reg.factors(mon)) {
      const Generator& gen = reg.generator(g);
      if (gen.row != gen.col) {
        diagonal = false;
        break;
      }
    }
    if (diagonal) total += c;
  }
  return total;
}

Element antipode(const Element& x) {
  auto& reg = Registry::instance();
  Element out(x.alphabet_size());
  std::vector<GenId> fs;
  for (const auto& [mon, c] : x.terms()) {
    auto f = reg.factors(mon);
    fs.clear();
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      const Generator& g = reg.generator(*it);
      fs.push_back(reg.gen_id(Generator(g.col, g.row)));
    }
    out.add_term(reg.mon_id(fs), c);
  }
  return out;
}

TensorElement antipode_on_leg(const TensorElement& t, std::size_t leg) {
  auto& reg = Registry::instance();
  int k = t.alphabet_size();
  return apply_on_leg(t, leg, {Leg::algebra()}, [&reg, k](std::uint32_t mon) {
    auto f = reg.factors(mon);
    std::vector<GenId> fs;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      const Generator& g = reg.generator(*it);
      fs.push_back(reg.gen_id(Generator(g.col, g.row)));
    }
    TensorElement out(k, {Leg::algebra()});
    out.add_term({reg.mon_id(fs)}, 1);
    return out;
  });
}

TensorElement gamma(int n, const FunctionElement& f) {
  auto& reg = Registry::instance();
  TensorElement out(f.k, {Leg::algebra(), Leg::function(n)});
  for (const auto& [w, c] : f.terms) {
    if (static_cast<int>(w.size()) != n) {
      throw std::invalid_argument("gamma: basis word length mismatch");
    }
    for (const Word& w2 : enumerate_words(Alphabet(f.k), n)) {
      GenId g = reg.gen_id(Generator(w, w2));
      out.add_term({reg.mon_id({&g, 1}), reg.word_id(w2)}, c);
    }
  }
  return out;
}

TensorElement inject_on_leg(const TensorElement& t, std::size_t leg, int n) {
  if (t.signature()[leg].kind != LegKind::Function) {
    throw std::invalid_argument("inject_on_leg: not a function leg");
  }
  int m = t.signature()[leg].n;
  if (m > n) throw std::invalid_argument("inject_on_leg: m > n");
  auto& reg = Registry::instance();
  int k = t.alphabet_size();
  return apply_on_leg(t, leg, {Leg::function(n)},
                      [&reg, k, m, n](std::uint32_t wid) {
                        const Word w = reg.word(wid);
                        TensorElement out(k, {Leg::function(n)});
                        for (const Word& w2 :
                             enumerate_words(Alphabet(k), n - m)) {
                          out.add_term({reg.word_id(w.concat(w2))}, 1);
                        }
                        return out;
                      });
}

// ---------------------------------------------------------------------------
// suites

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

void check_coassoc(SuiteRunner& run, const std::string& name,
                   const Element& x) {
  TensorElement d = delta(x);
  TensorElement lhs = delta_on_leg(d, 0);
  TensorElement rhs = delta_on_leg(d, 1);
  run.check_zero(name, lhs, rhs);
}

}  // namespace

VerificationReport verify_cqg_axioms(const SuiteConfig& cfg,
                                     ZeroCorpus* corpus) {
  SuiteRunner run("cqg-axioms", cfg, corpus);
  auto& reg = Registry::instance();
  const int k = cfg.k;

  for (const Generator& g : generators_up_to(k, cfg.d)) {
    check_coassoc(run, "coassoc/" + g.str(),
                  Element::from_generator(k, g));
  }
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    Element m = random_monomial(rng, k, cfg.d, cfg.g);
    check_coassoc(run, "coassoc/random-" + std::to_string(i), m);
  }

  // matrix unitarity: sum_w a[u,w]a[v,w] = delta_{u,v} 1 and the transpose
  for (int n = 1; n <= cfg.d; ++n) {
    for (const Word& u : enumerate_words(Alphabet(k), n)) {
      for (const Word& v : enumerate_words(Alphabet(k), n)) {
        Element row_sum(k), col_sum(k);
        for (const Word& w : enumerate_words(Alphabet(k), n)) {
          row_sum += Element::from_generator(k, Generator(u, w)) *
                     Element::from_generator(k, Generator(v, w));
          col_sum += Element::from_generator(k, Generator(w, u)) *
                     Element::from_generator(k, Generator(w, v));
        }
        Element expected =
            u == v ? Element::unit(k) : Element::zero(k);
        run.check_zero("unitarity/a.aT/" + u.str() + "," + v.str(), row_sum,
                       expected);
        run.check_zero("unitarity/aT.a/" + u.str() + "," + v.str(), col_sum,
                       expected);
      }
    }
  }
  (void)reg;
  return run.take();
}

VerificationReport verify_hopf_laws(const SuiteConfig& cfg,
                                    ZeroCorpus* corpus) {
  SuiteRunner run("hopf-laws", cfg, corpus);
  const int k = cfg.k;
  for (const Generator& g : generators_up_to(k, cfg.d)) {
    Element a = Element::from_generator(k, g);
    TensorElement d = delta(a);

    // counit laws: (eps ox id) Delta = id = (id ox eps) Delta
    Element left(k), right(k);
    auto& reg = Registry::instance();
    for (const auto& [tuple, c] : d.terms()) {
      Element l = Element::monomial(
          k, std::vector<GenId>(reg.factors(tuple[0]).begin(),
                                reg.factors(tuple[0]).end()));
      Element r = Element::monomial(
          k, std::vector<GenId>(reg.factors(tuple[1]).begin(),
                                reg.factors(tuple[1]).end()));
      left += r * (counit(l) * c);
      right += l * (counit(r) * c);
    }
    run.check_zero("counit/left/" + g.str(), left, a);
    run.check_zero("counit/right/" + g.str(), right, a);

    // antipode laws: m(kappa ox id) Delta = eps(a) 1 = m(id ox kappa) Delta
    Element lhs_l = Element::zero(k), lhs_r = Element::zero(k);
    {
      TensorElement ka = antipode_on_leg(d, 0);
      TensorElement merged = merge_algebra_legs(ka, 0);
      for (const auto& [tuple, c] : merged.terms()) {
        lhs_l += Element::monomial(
                     k, std::vector<GenId>(reg.factors(tuple[0]).begin(),
                                           reg.factors(tuple[0]).end())) *
                 c;
      }
      TensorElement ak = antipode_on_leg(d, 1);
      TensorElement merged2 = merge_algebra_legs(ak, 0);
      for (const auto& [tuple, c] : merged2.terms()) {
        lhs_r += Element::monomial(
                     k, std::vector<GenId>(reg.factors(tuple[0]).begin(),
                                           reg.factors(tuple[0]).end())) *
                 c;
      }
    }
    Element expected = Element::unit(k) * counit(a);
    run.check_zero("antipode/left/" + g.str(), lhs_l, expected);
    run.check_zero("antipode/right/" + g.str(), lhs_r, expected);
  }
  return run.take();
}

VerificationReport verify_coaction(const SuiteConfig& cfg,
                                   ZeroCorpus* corpus) {
  SuiteRunner run("coaction", cfg, corpus);
  const int k = cfg.k;
  auto& reg = Registry::instance();

  for (int n = 1; n <= cfg.d; ++n) {
    // coaction identity on every basis projection
    for (const Word& w : enumerate_words(Alphabet(k), n)) {
      TensorElement gw = gamma(n, FunctionElement::basis(k, w));
      TensorElement lhs = delta_on_leg(gw, 0);
      // (id ox gamma_n): expand the function leg
      TensorElement rhs = apply_on_leg(
          gw, 1, {Leg::algebra(), Leg::function(n)},
          [k, n, &reg](std::uint32_t wid) {
            return gamma(n, FunctionElement::basis(k, reg.word(wid)));
          });
      run.check_zero("coaction-identity/n" + std::to_string(n) + "/p" +
                         w.str(),
                     lhs, rhs);
    }

    // algebraic span identity: sum_u gamma_n(p_u)(a[u,v] ox 1) = 1 ox p_v
    for (const Word& v : enumerate_words(Alphabet(k), n)) {
      TensorElement lhs(k, {Leg::algebra(), Leg::function(n)});
      for (const Word& u : enumerate_words(Alphabet(k), n)) {
        TensorElement gu = gamma(n, FunctionElement::basis(k, u));
        TensorElement mult = tensor_product(
            TensorElement::from_element(
                Element::from_generator(k, Generator(u, v))),
            TensorElement::function_unit(k, n));
        lhs += multiply_pointwise(gu, mult);
      }
      TensorElement rhs = tensor_product(
          TensorElement::from_element(Element::unit(k)),
          TensorElement::function_basis(k, v));
      run.check_zero("span-identity/n" + std::to_string(n) + "/p" + v.str(),
                     lhs, rhs);
    }
  }

  // compatibility gamma_n . i_{m,n} = (id ox i_{m,n}) . gamma_m, m < n
  for (int n = 2; n <= cfg.d; ++n) {
    for (int m = 1; m < n; ++m) {
      for (const Word& w : enumerate_words(Alphabet(k), m)) {
        FunctionElement injected{k, n, {}};
        for (const Word& w2 : enumerate_words(Alphabet(k), n - m)) {
          injected.terms.emplace_back(w.concat(w2), 1);
        }
        TensorElement lhs = gamma(n, injected);
        TensorElement rhs =
            inject_on_leg(gamma(m, FunctionElement::basis(k, w)), 1, n);
        run.check_zero("i-compat/" + std::to_string(m) + "," +
                           std::to_string(n) + "/p" + w.str(),
                       lhs, rhs);
      }
    }
  }
  return run.take();
}

VerificationReport verify_duality(const SuiteConfig& cfg) {
  SuiteRunner run("duality", cfg, nullptr);
  const int k = cfg.k;
  const int d = cfg.d;
  auto& reg = Registry::instance();

  std::vector<Portrait> group = enumerate_aut(k, d);
  std::vector<Generator> gens = generators_up_to(k, d);

  // Delta dualizes multiplication
  {
    bool ok = true;
    for (const Generator& g : gens) {
      TensorElement dg = delta(Element::from_generator(k, g));
      for (const Portrait& a : group) {
        for (const Portrait& b : group) {
          Rational lhs = 0;
          for (const auto& [tuple, c] : dg.terms()) {
            Rational left = 1, right = 1;
            for (GenId f : reg.factors(tuple[0]))
              left *= indicator_eval(reg.generator(f), a);
            for (GenId f : reg.factors(tuple[1]))
              right *= indicator_eval(reg.generator(f), b);
            lhs += c * left * right;
          }
          Rational rhs = abelian_eval(Element::from_generator(k, g),
                                      a.compose(b));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    run.check_exact("delta-dualizes-multiplication", ok,
                    "eval(Delta a, (g,h))", "eval(a, g.h)");
  }

  // antipode dualizes inversion; counit evaluates at the identity
  {
    bool ok_kappa = true, ok_eps = true;
    Portrait id(k, d);
    for (const Generator& g : gens) {
      Element a = Element::from_generator(k, g);
      Element ka = antipode(a);
      for (const Portrait& p : group) {
        if (abelian_eval(ka, p) != abelian_eval(a, p.inverse())) {
          ok_kappa = false;
          break;
        }
      }
      if (counit(a) != abelian_eval(a, id)) ok_eps = false;
      if (!ok_kappa) break;
    }
    run.check_exact("antipode-dualizes-inversion", ok_kappa,
                    "eval(kappa a, g)", "eval(a, g^-1)");
    run.check_exact("counit-evaluates-at-identity", ok_eps, "eps(a)",
                    "eval(a, id)");
  }

  // restriction dualizes sections: needs one extra level of depth
  {
    bool ok = true;
    std::vector<Portrait> big = enumerate_aut(k, d + 1);
    for (const Generator& g : generators_up_to(k, d)) {
      Element a = Element::from_generator(k, g);
      for (int x = 0; x < k && ok; ++x) {
        Element ra = rho(x, a);
        for (const Portrait& p : big) {
          if (abelian_eval(ra, p) != abelian_eval(a, p.section(Word{x}))) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) break;
    }
    run.check_exact("restriction-dualizes-section", ok, "eval(rho_x a, g)",
                    "eval(a, g|_x)");
  }
  return run.take();
}

}  // namespace qtree
