#include "qtree/rng.hpp"

namespace qtree {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint32_t Rng::below(std::uint32_t n) {
  return n == 0 ? 0 : static_cast<std::uint32_t>(next() % n);
}

Element random_monomial(Rng& rng, int k, int max_depth, int max_degree) {
  auto& reg = Registry::instance();
  int degree = 1 + static_cast<int>(rng.below(max_degree));
  std::vector<GenId> factors;
  for (int i = 0; i < degree; ++i) {
    int depth = 1 + static_cast<int>(rng.below(max_depth));
    Word row, col;
    for (int j = 0; j < depth; ++j) {
      row = row.append(static_cast<int>(rng.below(k)));
      col = col.append(static_cast<int>(rng.below(k)));
    }
    factors.push_back(reg.gen_id(Generator(row, col)));
  }
  return Element::monomial(k, factors);
}

Element random_element(Rng& rng, int k, int max_depth, int max_degree,
                       int max_terms) {
  Element out(k);
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int i = 0; i < terms; ++i) {
    int c = static_cast<int>(rng.below(6)) - 3;
    if (c >= 0) ++c;  // skip zero
    out += random_monomial(rng, k, max_depth, max_degree) * Rational(c);
  }
  return out;
}

}  // namespace qtree
