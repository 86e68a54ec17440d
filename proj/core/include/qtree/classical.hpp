#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtree/engine.hpp"
#include "qtree/words.hpp"

namespace qtree {

/// Bijection on {0, ..., k-1}, stored as its image array.
struct Permutation {
  std::vector<std::uint8_t> image;

  static Permutation identity(int k);
  int size() const { return static_cast<int>(image.size()); }
  int apply(int x) const { return image[x]; }
  /// (a.after(b))(x) = a(b(x))
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_valid() const;

  auto operator<=>(const Permutation&) const = default;
};

/// All k! permutations in lexicographic image order.
std::vector<Permutation> symmetric_group(int k);

/// Depth-d tree automorphism in portrait form: a permutation label at every
/// node of depth < d. Acts on words of length <= d.
class Portrait {
 public:
  Portrait(int k, int depth);  // identity

  int k() const { return k_; }
  int depth() const { return depth_; }

  const Permutation& label(const Word& node) const;
  void set_label(const Word& node, Permutation p);

  Word act(const Word& w) const;
  Portrait section(const Word& w) const;
  /// compose(g,h) acts as w -> g.act(h.act(w)).
  Portrait compose(const Portrait& other) const;
  Portrait inverse() const;

  auto operator<=>(const Portrait&) const = default;

  std::string str() const;

 private:
  std::size_t node_index(const Word& node) const;

  int k_, depth_;
  std::vector<Permutation> labels_;   // BFS order over nodes of depth < depth_
  std::vector<std::size_t> offsets_;  // offsets_[l] = first index of level l
};

/// Expected |Aut(X^[d])| from the wreath recursion N(d+1) = N(d)^k * k!.
std::uint64_t aut_count(int k, int depth);

/// All portraits of Aut(X^[d]); throws when the count exceeds the cap.
std::vector<Portrait> enumerate_aut(int k, int depth,
                                    std::uint64_t cap = 1'000'000);

/// A subgroup of Sym(X), either explicit or closed from generators.
struct SubgroupSpec {
  int k = 2;
  std::string name;
  std::vector<Permutation> generators;

  /// Closure under composition; verifies identity/inverses. Deterministic
  /// lexicographic element order.
  std::vector<Permutation> elements() const;

  static SubgroupSpec trivial(int k);
  static SubgroupSpec full(int k);
  static SubgroupSpec cyclic(int k);  // generated by (0 1 ... k-1)
  static SubgroupSpec klein();        // k = 4
  static SubgroupSpec by_name(const std::string& name, int k);
};

/// Depth-n portraits all of whose node labels lie in P.
std::vector<Portrait> enumerate_gp(const SubgroupSpec& P, int depth,
                                   std::uint64_t cap = 1'000'000);

/// |r_n(G_P)| = |P|^{(k^n - 1)/(k - 1)}.
std::uint64_t gp_count(std::uint64_t group_order, int k, int depth);

/// Indicator convention: a[u,v] evaluates to [g.act(v) == u].
int indicator_eval(const Generator& gen, const Portrait& g);

/// Multiplicative-linear extension of indicator_eval; the abelianization.
Rational abelian_eval(const Element& e, const Portrait& g);

/// 0/1 vector of the indicator monomial over a portrait list.
std::vector<Rational> indicator_vector(MonId mon,
                                       const std::vector<Portrait>& group);

/// Rank of the pointwise-product closure of {a[u,v] : |u| <= depth} over the
/// given portrait set (exact rational rank). Saturates at |group|.
std::size_t indicator_span_rank(int k, int depth,
                                const std::vector<Portrait>& group);

}  // namespace qtree
