#pragma once

#include "qtree/report.hpp"
#include "qtree/tensor.hpp"

namespace qtree {

/// Restriction homomorphism: a[u,v] -> sum_y a[yu, xv].
Element rho(Letter x, const Element& e);

/// Composition rho_{w_1} . ... . rho_{w_n}; the empty word is the identity.
Element rho_word(const Word& w, const Element& e);

/// Closed form sum_{z in X^{|w|}} a[zu, wv], generator-wise. Used to certify
/// the composition law; not the implementation of rho_word.
Element rho_word_closed_form(const Word& w, const Element& e);

/// a[u,v] -> sum_y a[xu, yv]; equals kappa . rho_x . kappa.
Element sigma(Letter x, const Element& e);

/// Transition map on signature [C(X), A]:
///   p_x ox a[u,v] -> sum_y a[xu,yv] ox p_y,
/// multiplicative on the algebra leg within a fixed p_x.
TensorElement psi(const TensorElement& t);

/// Restriction suite: the rho images satisfy the defining relations, the
/// closed form matches the composition, and the unit identity holds.
VerificationReport verify_restriction(const SuiteConfig& cfg,
                                      ZeroCorpus* corpus = nullptr);

/// sigma_x = kappa . rho_x . kappa on all generators of depth <= cfg.d.
VerificationReport verify_sigma_kappa(const SuiteConfig& cfg,
                                      ZeroCorpus* corpus = nullptr);

/// The exchange axiom
///   (Delta ox id) psi = (id ox psi)(psi ox id)(id ox Delta)
/// plus unitality and the restriction the map induces.
VerificationReport verify_psi_axiom(const SuiteConfig& cfg,
                                    ZeroCorpus* corpus = nullptr);

/// Delta . rho_w factorization:
///   Delta(rho_w(a)) = sum_y (1 ox a[y,w]) (rho_y ox rho_w)(Delta(a)).
VerificationReport verify_delta_rho(const SuiteConfig& cfg,
                                    ZeroCorpus* corpus = nullptr);

}  // namespace qtree
