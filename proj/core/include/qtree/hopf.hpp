#pragma once

#include "qtree/report.hpp"
#include "qtree/tensor.hpp"

namespace qtree {

/// Element of C(X^n) in the minimal-projection basis {p_w}.
struct FunctionElement {
  int k = 2;
  int n = 1;
  std::vector<std::pair<Word, Rational>> terms;

  static FunctionElement basis(int k, const Word& w);
  static FunctionElement unit(int k, int n);
};

/// Comultiplication: a[u,v] -> sum_w a[u,w] ox a[w,v], extended as a
/// homomorphism; Delta(1) = 1 ox 1.
TensorElement delta(const Element& x);

/// Comultiplication applied to one algebra leg.
TensorElement delta_on_leg(const TensorElement& t, std::size_t leg);

/// Counit: a[u,v] -> [u == v], multiplicative-linear.
Rational counit(const Element& x);

/// Coinverse: a[u,v] -> a[v,u], anti-homomorphic.
Element antipode(const Element& x);
TensorElement antipode_on_leg(const TensorElement& t, std::size_t leg);

/// Level-n coaction: p_w -> sum_{w'} a[w,w'] ox p_{w'}.
TensorElement gamma(int n, const FunctionElement& f);

/// Function-algebra injection i_{m,n}: p_w -> sum_{w'} p_{w w'}, applied to
/// a function leg.
TensorElement inject_on_leg(const TensorElement& t, std::size_t leg, int n);

/// Coassociativity, matrix unitarity (both transposes), counit and antipode
/// laws; random monomials are seeded from the config.
VerificationReport verify_cqg_axioms(const SuiteConfig& cfg,
                                     ZeroCorpus* corpus = nullptr);

/// Counit and antipode laws only (the Hopf-structure checks).
VerificationReport verify_hopf_laws(const SuiteConfig& cfg,
                                    ZeroCorpus* corpus = nullptr);

/// Coaction identity, the algebraic span identity, and the i_{m,n}
/// compatibility for all 1 <= m < n <= cfg.d.
VerificationReport verify_coaction(const SuiteConfig& cfg,
                                   ZeroCorpus* corpus = nullptr);

/// Exhaustive classical duality: Delta, antipode, counit and restrictions
/// dualize multiplication, inversion, identity and sections under the
/// indicator evaluation.
VerificationReport verify_duality(const SuiteConfig& cfg);

}  // namespace qtree
