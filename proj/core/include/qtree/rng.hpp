#pragma once

#include <cstdint>
#include <vector>

#include "qtree/engine.hpp"

namespace qtree {

/// splitmix64: tiny, seedable, identical across platforms. Reports must be
/// byte-identical for a fixed seed, which rules out the standard library's
/// implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint32_t below(std::uint32_t n);  // uniform-ish in [0, n)

 private:
  std::uint64_t state_;
};

/// Random monomial with 1..max_degree factors of depth 1..max_depth.
Element random_monomial(Rng& rng, int k, int max_depth, int max_degree);

/// Random element: 1..max_terms random monomials with coefficients in
/// {-3,...,3} \ {0}.
Element random_element(Rng& rng, int k, int max_depth, int max_degree,
                       int max_terms);

}  // namespace qtree
