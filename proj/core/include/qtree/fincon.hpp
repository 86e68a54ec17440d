#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtree/report.hpp"
#include "qtree/tensor.hpp"
#include "qtree/wreath.hpp"

namespace qtree {

/// Presentation of a quantum subgroup of the depth-d block: a finite relator
/// list (pre-reduced) plus an optional list of generators sent to zero.
/// The classical flag marks presentations of C(P) for a named classical P.
struct RelatorSet {
  std::string name;
  int k = 2;
  int depth = 1;
  std::vector<Element> relators;
  std::vector<Generator> vanishing;
  bool classical = false;

  bool is_zero_ideal() const { return relators.empty() && vanishing.empty(); }

  /// Relators plus the vanishing generators as single-term relators.
  std::vector<Element> all_relators() const;

  static RelatorSet zero(int k);            // I = 0, the full block
  static RelatorSet trivial_group(int k);   // off-diagonal generators vanish
  static RelatorSet full_symmetric(int k);  // depth-1 commutators
  static RelatorSet cyclic(int k);          // commutators + shift relators
  static RelatorSet klein();                // k = 4
  static RelatorSet preset(const std::string& name, int k);

  static RelatorSet from_json(const json& j);
  json to_json() const;
};

struct QuotientBounds {
  int max_word_len = 1;      // restriction words w with |w| <= bound
  int cofactor_degree = 1;   // per-side cofactor degree
  std::uint64_t max_rows = 50'000;
};

/// Membership of e in the bounded slice of the ideal generated by
/// {rho_w(r)}: builds the exact-rational span of m * rho_w(r) * m' over the
/// relevant cofactor universe and eliminates e against it. Sound for
/// membership; incomplete in general.
ReductionOutcome quotient_reduce(const Element& e, const RelatorSet& I,
                                 const QuotientBounds& bounds = {});

/// Coideal witness: Delta(i) = sum_j s_j ox t_j + sum_j u_j ox v_j with
/// every s_j and v_j in the depth-d slice of I.
struct CoidealWitness {
  std::vector<std::pair<Element, Element>> left_in_ideal;   // s_j ox t_j
  std::vector<std::pair<Element, Element>> right_in_ideal;  // u_j ox v_j
};

/// Searches for a coideal witness by exact linear algebra in the bounded
/// slice. Returns nullopt when Delta(i) visibly fails the coideal condition
/// at this bound.
std::optional<CoidealWitness> find_coideal_witness(const Element& relator,
                                                   const RelatorSet& I);

/// For each relator i and word |w| <= cfg.wmax: certifies the coideal
/// witness, the comultiplication factorization through the restriction
/// maps, the leg-wise kill under the quotient, and the antipode stability
/// of the bounded slice.
VerificationReport verify_woronowicz_ideal(const RelatorSet& I,
                                           const SuiteConfig& cfg,
                                           ZeroCorpus* corpus = nullptr);

// ---------------------------------------------------------------------------
// free wreath product

/// a[xu, yv] -> q[x,y] nu[x](a[u,v]); multiplicative-linear.
WreathElement pi_map(const Element& e);

/// nu[x](a[u,v]) -> sum_y a[xu,yv], q[x,y] -> a[x,y]; multiplicative-linear.
Element phi_map(const WreathElement& e);

/// Comultiplication of the wreath product:
///   q[x,y]    -> sum_z q[x,z] ox q[z,y]
///   nu[x](a)  -> sum_z nu[x](a_(1)) q[x,z] ox nu[z](a_(2)).
TensorElement wreath_delta(const WreathElement& e);

/// The isomorphism suite: pi preserves the defining relations, phi kills
/// the commutation relators, pi and phi are mutually inverse on generators,
/// and the comultiplications are intertwined.
VerificationReport verify_wreath_iso(const RelatorSet& I,
                                     const SuiteConfig& cfg,
                                     ZeroCorpus* corpus = nullptr);

/// Wreath comultiplication checks: the commutation relator is respected,
/// coassociativity holds on generators, and the block matrices are unitary
/// with the stated inverses.
VerificationReport verify_wreath_comult(const RelatorSet& I,
                                        const SuiteConfig& cfg,
                                        ZeroCorpus* corpus = nullptr);

}  // namespace qtree
