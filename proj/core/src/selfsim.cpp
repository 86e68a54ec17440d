#include "qtree/selfsim.hpp"

#include "qtree/classical.hpp"
#include "qtree/hopf.hpp"
#include "qtree/rng.hpp"
#include "qtree/suite_util.hpp"

namespace qtree {

namespace {

Element rho_gen(int k, Letter x, const Generator& g) {
  Element out(k);
  auto& reg = Registry::instance();
  for (int y = 0; y < k; ++y) {
    GenId id = reg.gen_id(Generator(Word{y}.concat(g.row), Word{x}.concat(g.col)));
    out.add_term(reg.mon_id({&id, 1}), 1);
  }
  return out;
}

Element sigma_gen(int k, Letter x, const Generator& g) {
  Element out(k);
  auto& reg = Registry::instance();
  for (int y = 0; y < k; ++y) {
    GenId id = reg.gen_id(Generator(Word{x}.concat(g.row), Word{y}.concat(g.col)));
    out.add_term(reg.mon_id({&id, 1}), 1);
  }
  return out;
}

template <class GenMap>
Element extend_multiplicatively(const Element& e, const GenMap& image) {
  auto& reg = Registry::instance();
  const int k = e.alphabet_size();
  Element out(k);
  for (const auto& [mon, c] : e.terms()) {
    Element prod = Element::unit(k);
    for (GenId g : reg.factors(mon)) prod = prod * image(reg.generator(g));
    out += prod * c;
  }
  return out;
}

}  // namespace

Element rho(Letter x, const Element& e) {
  const int k = e.alphabet_size();
  if (x < 0 || x >= k) throw std::invalid_argument("rho: letter out of range");
  return extend_multiplicatively(
      e, [k, x](const Generator& g) { return rho_gen(k, x, g); });
}

Element rho_word(const Word& w, const Element& e) {
  Element out = e;
  for (std::size_t i = w.size(); i-- > 0;) {
    out = rho(w.at(i), out);
  }
  return out;
}

Element rho_word_closed_form(const Word& w, const Element& e) {
  const int k = e.alphabet_size();
  return extend_multiplicatively(e, [&](const Generator& g) {
    Element out(k);
    auto& reg = Registry::instance();
    for (const Word& z : enumerate_words(Alphabet(k), w.size())) {
      GenId id = reg.gen_id(Generator(z.concat(g.row), w.concat(g.col)));
      out.add_term(reg.mon_id({&id, 1}), 1);
    }
    return out;
  });
}

Element sigma(Letter x, const Element& e) {
  const int k = e.alphabet_size();
  if (x < 0 || x >= k) throw std::invalid_argument("sigma: letter out of range");
  return extend_multiplicatively(
      e, [k, x](const Generator& g) { return sigma_gen(k, x, g); });
}

TensorElement psi(const TensorElement& t) {
  const Signature expected{Leg::function(1), Leg::algebra()};
  if (t.signature() != expected) {
    throw std::invalid_argument("psi expects signature [C(X), A]");
  }
  const int k = t.alphabet_size();
  auto& reg = Registry::instance();
  TensorElement out(k, {Leg::algebra(), Leg::function(1)});
  for (const auto& [tuple, c] : t.terms()) {
    const Word x = reg.word(tuple[0]);
    // per fixed p_x the map is multiplicative on the algebra leg
    TensorElement acc(k, {Leg::algebra(), Leg::function(1)});
    bool first = true;
    for (GenId gid : reg.factors(tuple[1])) {
      const Generator& g = reg.generator(gid);
      TensorElement step(k, {Leg::algebra(), Leg::function(1)});
      for (int y = 0; y < k; ++y) {
        GenId im = reg.gen_id(
            Generator(x.concat(g.row), Word{y}.concat(g.col)));
        step.add_term({reg.mon_id({&im, 1}), reg.word_id(Word{y})}, 1);
      }
      acc = first ? step : multiply_pointwise(acc, step);
      first = false;
    }
    if (first) {
      // unit algebra leg: p_x ox 1 -> sum_y a[x,y] ox p_y
      for (int y = 0; y < k; ++y) {
        GenId im = reg.gen_id(Generator(x, Word{y}));
        acc.add_term({reg.mon_id({&im, 1}), reg.word_id(Word{y})}, 1);
      }
    }
    out += acc * c;
  }
  return out;
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

}  // namespace

VerificationReport verify_restriction(const SuiteConfig& cfg,
                                      ZeroCorpus* corpus) {
  SuiteRunner run("restriction", cfg, corpus);
  const int k = cfg.k;

  // rho_x(1) = sum_y a[y,x] = 1
  for (int x = 0; x < k; ++x) {
    Element sum(k);
    for (int y = 0; y < k; ++y) {
      sum += Element::from_generator(k, Generator(Word{y}, Word{x}));
    }
    run.check_zero("rho-unit/x" + std::to_string(x), sum, Element::unit(k));
  }

  // rho images satisfy the defining relations
  for (int x = 0; x < k; ++x) {
    for (const Generator& g : generators_up_to(k, cfg.d)) {
      Element b = rho(x, Element::from_generator(k, g));
      run.check_zero("rho-idempotent/x" + std::to_string(x) + "/" + g.str(),
                     b * b, b);
      run.check_zero("rho-selfadjoint/x" + std::to_string(x) + "/" + g.str(),
                     adjoint(b), b);
    }
    // relation (sum over a full square block) maps to relation
    for (const Generator& g : generators_up_to(k, cfg.d - 1)) {
      for (int w = 0; w < k; ++w) {
        Element sum(k);
        for (int z = 0; z < k; ++z) {
          sum += rho(x, Element::from_generator(
                           k, Generator(g.row.append(w), g.col.append(z))));
        }
        run.check_zero("rho-square/x" + std::to_string(x) + "/" + g.str() +
                           "/w" + std::to_string(w),
                       sum, rho(x, Element::from_generator(k, g)));
      }
    }
  }

  // closed form vs composition for |w| <= cfg.wmax
  for (int len = 0; len <= cfg.wmax; ++len) {
    for (const Word& w : enumerate_words(Alphabet(k), len)) {
      for (const Generator& g : generators_up_to(k, cfg.d)) {
        Element a = Element::from_generator(k, g);
        run.check_zero("rho-word/" + w.str() + "/" + g.str(), rho_word(w, a),
                       rho_word_closed_form(w, a));
      }
    }
  }
  return run.take();
}

VerificationReport verify_sigma_kappa(const SuiteConfig& cfg,
                                      ZeroCorpus* corpus) {
  SuiteRunner run("sigma-kappa", cfg, corpus);
  const int k = cfg.k;
  for (int x = 0; x < k; ++x) {
    run.check_zero("sigma-unit/x" + std::to_string(x),
                   sigma(x, Element::unit(k)), Element::unit(k));
    for (const Generator& g : generators_up_to(k, cfg.d)) {
      Element a = Element::from_generator(k, g);
      run.check_zero("sigma-kappa/x" + std::to_string(x) + "/" + g.str(),
                     antipode(rho(x, antipode(a))), sigma(x, a));
    }
  }
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    Element m = random_monomial(rng, k, cfg.d, cfg.g);
    for (int x = 0; x < k; ++x) {
      run.check_zero("sigma-kappa/random-" + std::to_string(i) + "/x" +
                         std::to_string(x),
                     antipode(rho(x, antipode(m))), sigma(x, m));
    }
  }
  return run.take();
}

namespace {

// (psi ox id_A) on [F1, A, A]; psi consumes legs 0 and 1
TensorElement psi_on_first_two(const TensorElement& t) {
  const int k = t.alphabet_size();
  return apply_on_legs(
      t, 0, 2, {Leg::algebra(), Leg::function(1)},
      [k](std::span<const std::uint32_t> e) {
        TensorElement in(k, {Leg::function(1), Leg::algebra()});
        in.add_term({e[0], e[1]}, 1);
        return psi(in);
      });
}

}  // namespace

VerificationReport verify_psi_axiom(const SuiteConfig& cfg,
                                    ZeroCorpus* corpus) {
  SuiteRunner run("psi-axiom", cfg, corpus);
  const int k = cfg.k;
  auto& reg = Registry::instance();

  // unitality: psi(1_1 ox 1) = 1 ox 1_1
  {
    TensorElement lhs_in = tensor_product(
        TensorElement::function_unit(k, 1),
        TensorElement::from_element(Element::unit(k)));
    TensorElement rhs = tensor_product(
        TensorElement::from_element(Element::unit(k)),
        TensorElement::function_unit(k, 1));
    run.check_zero("psi-unital", psi(lhs_in), rhs);
  }

  auto exchange_check = [&](const std::string& name, const Element& a) {
    for (int x = 0; x < k; ++x) {
      TensorElement in = tensor_product(
          TensorElement::function_basis(k, Word{x}),
          TensorElement::from_element(a));
      // (Phi ox id_1) psi
      TensorElement lhs = delta_on_leg(psi(in), 0);
      // (id_A ox psi)(psi ox id_A)(id_1 ox Phi)
      TensorElement rhs = delta_on_leg(in, 1);       // [F1, A, A]
      rhs = psi_on_first_two(rhs);                   // [A, F1, A]
      rhs = apply_on_legs(
          rhs, 1, 2, {Leg::algebra(), Leg::function(1)},
          [k](std::span<const std::uint32_t> e) {
            TensorElement t(k, {Leg::function(1), Leg::algebra()});
            t.add_term({e[0], e[1]}, 1);
            return psi(t);
          });                                        // [A, A, F1]
      run.check_zero("psi-exchange/" + name + "/x" + std::to_string(x), lhs,
                     rhs);
    }
  };

  for (const Generator& g : generators_up_to(k, cfg.d)) {
    exchange_check(g.str(), Element::from_generator(k, g));
  }
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    exchange_check("random-" + std::to_string(i),
                   random_monomial(rng, k, cfg.d, cfg.g));
  }

  // psi determines the restriction maps: psi(1_1 ox a) = sum_x rho_x(a) ox p_x
  for (const Generator& g : generators_up_to(k, cfg.d)) {
    Element a = Element::from_generator(k, g);
    TensorElement lhs = psi(tensor_product(TensorElement::function_unit(k, 1),
                                           TensorElement::from_element(a)));
    TensorElement rhs(k, {Leg::algebra(), Leg::function(1)});
    for (int x = 0; x < k; ++x) {
      rhs += tensor_product(TensorElement::from_element(rho(x, a)),
                            TensorElement::function_basis(k, Word{x}));
    }
    run.check_zero("psi-restriction/" + g.str(), lhs, rhs);
  }
  (void)reg;
  return run.take();
}

VerificationReport verify_delta_rho(const SuiteConfig& cfg,
                                    ZeroCorpus* corpus) {
  SuiteRunner run("delta-rho", cfg, corpus);
  const int k = cfg.k;
  auto& reg = Registry::instance();

  auto lemma_check = [&](const std::string& name, const Element& a) {
    for (int len = 1; len <= cfg.wmax; ++len) {
      for (const Word& w : enumerate_words(Alphabet(k), len)) {
        TensorElement lhs = delta(rho_word(w, a));
        TensorElement rhs(k, {Leg::algebra(), Leg::algebra()});
        TensorElement da = delta(a);
        for (const Word& y : enumerate_words(Alphabet(k), len)) {
          // (1 ox a[y,w]) (rho_y ox rho_w)(Delta(a))
          TensorElement mapped(k, {Leg::algebra(), Leg::algebra()});
          for (const auto& [tuple, c] : da.terms()) {
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
              TensorElement::from_element(
                  Element::from_generator(k, Generator(y, w))));
          rhs += multiply_pointwise(projector, mapped);
        }
        run.check_zero("delta-rho/" + name + "/w" + w.str(), lhs, rhs);
      }
    }
  };

  for (const Generator& g : generators_up_to(k, cfg.d)) {
    lemma_check(g.str(), Element::from_generator(k, g));
  }
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    lemma_check("random-" + std::to_string(i),
                random_monomial(rng, k, cfg.d, cfg.g));
  }
  return run.take();
}

}  // namespace qtree
