#include "qtree/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qtree/linalg.hpp"

namespace qtree {

Permutation Permutation::identity(int k) {
  Permutation p;
  p.image.resize(k);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::after(const Permutation& other) const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t x = 0; x < image.size(); ++x)
    out.image[x] = image[other.image[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) out.image[image[x]] = x;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < image.size(); ++x)
    if (image[x] != x) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(image.size(), false);
  for (auto y : image) {
    if (y >= image.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::vector<Permutation> symmetric_group(int k) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(k);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Portrait

Portrait::Portrait(int k, int depth) : k_(k), depth_(depth) {
  if (k < 2 || depth < 0) throw std::invalid_argument("bad portrait shape");
  offsets_.resize(depth + 1, 0);
  std::size_t total = 0, level = 1;
  for (int l = 0; l < depth; ++l) {
    offsets_[l] = total;
    total += level;
    level *= k;
  }
  offsets_[depth] = total;
  labels_.assign(total, Permutation::identity(k));
}

std::size_t Portrait::node_index(const Word& node) const {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < node.size(); ++i)
    rank = rank * k_ + static_cast<std::size_t>(node.at(i));
  return offsets_[node.size()] + rank;
}

const Permutation& Portrait::label(const Word& node) const {
  if (static_cast<int>(node.size()) >= depth_)
    throw std::out_of_range("label: node at or below the leaf level");
  return labels_[node_index(node)];
}

void Portrait::set_label(const Word& node, Permutation p) {
  if (static_cast<int>(node.size()) >= depth_)
    throw std::out_of_range("set_label: node at or below the leaf level");
  if (p.size() != k_ || !p.is_valid())
    throw std::invalid_argument("set_label: not a permutation of the alphabet");
  labels_[node_index(node)] = std::move(p);
}

Word Portrait::act(const Word& w) const {
  if (static_cast<int>(w.size()) > depth_)
    throw std::out_of_range("act: word longer than portrait depth");
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out = out.append(label(w.prefix(i)).apply(w.at(i)));
  }
  return out;
}

Portrait Portrait::section(const Word& w) const {
  if (static_cast<int>(w.size()) > depth_)
    throw std::out_of_range("section: word longer than portrait depth");
  Portrait out(k_, depth_ - static_cast<int>(w.size()));
  for (int l = 0; l < out.depth_; ++l) {
    for (const Word& v : enumerate_words(Alphabet(k_), l)) {
      out.set_label(v, label(w.concat(v)));
    }
  }
  return out;
}

Portrait Portrait::compose(const Portrait& other) const {
  if (k_ != other.k_ || depth_ != other.depth_)
    throw std::invalid_argument("compose: shape mismatch");
  Portrait out(k_, depth_);
  for (int l = 0; l < depth_; ++l) {
    for (const Word& w : enumerate_words(Alphabet(k_), l)) {
      // (gh)|_w = g|_{h.w} h|_w at the label level
      out.set_label(w, label(other.act(w)).after(other.label(w)));
    }
  }
  return out;
}

Portrait Portrait::inverse() const {
  Portrait out(k_, depth_);
  for (int l = 0; l < depth_; ++l) {
    for (const Word& w : enumerate_words(Alphabet(k_), l)) {
      out.set_label(w, label(out.act(w)).inverse());
    }
  }
  return out;
}

std::string Portrait::str() const {
  std::string s = "{";
  bool first = true;
  for (int l = 0; l < depth_; ++l) {
    for (const Word& w : enumerate_words(Alphabet(k_), l)) {
      if (!first) s += ",";
      first = false;
      s += w.str() + ":";
      for (auto y : label(w).image) s += static_cast<char>('0' + y);
    }
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// enumeration

std::uint64_t aut_count(int k, int depth) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  std::uint64_t n = 1;
  for (int d = 1; d <= depth; ++d) {
    std::uint64_t nk = 1;
    for (int i = 0; i < k; ++i) nk *= n;  // overflow-safe only at desk scale
    n = nk * fact;
  }
  return n;
}

namespace {

std::vector<Portrait> enumerate_constrained(
    const std::vector<Permutation>& roots, int k, int depth,
    std::uint64_t expected, std::uint64_t cap) {
  if (expected > cap) {
    throw std::out_of_range("portrait enumeration exceeds the configured cap");
  }
  std::vector<Portrait> out;
  if (depth == 0) {
    out.emplace_back(k, 0);
    return out;
  }
  std::vector<Portrait> sections =
      enumerate_constrained(roots, k, depth - 1, 0, cap);
  // expected passed as 0 for recursive calls; recompute locally
  std::vector<std::size_t> idx(k, 0);
  for (const Permutation& root : roots) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      Portrait g(k, depth);
      g.set_label(Word{}, root);
      for (int x = 0; x < k; ++x) {
        const Portrait& sec = sections[idx[x]];
        for (int l = 0; l < depth - 1; ++l) {
          for (const Word& v : enumerate_words(Alphabet(k), l)) {
            g.set_label(Word{x}.concat(v), sec.label(v));
          }
        }
      }
      out.push_back(std::move(g));
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == sections.size()) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

}  // namespace

std::vector<Portrait> enumerate_aut(int k, int depth, std::uint64_t cap) {
  return enumerate_constrained(symmetric_group(k), k, depth,
                               aut_count(k, depth), cap);
}

// ---------------------------------------------------------------------------
// subgroups

std::vector<Permutation> SubgroupSpec::elements() const {
  std::set<Permutation> closed;
  closed.insert(Permutation::identity(k));
  for (const auto& g : generators) {
    if (g.size() != k || !g.is_valid())
      throw std::invalid_argument("subgroup generator is not a permutation");
    closed.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot(closed.begin(), closed.end());
    for (const auto& a : snapshot) {
      if (closed.insert(a.inverse()).second) grew = true;
      for (const auto& b : snapshot) {
        if (closed.insert(a.after(b)).second) grew = true;
      }
    }
  }
  return {closed.begin(), closed.end()};
}

SubgroupSpec SubgroupSpec::trivial(int k) { return {k, "trivial", {}}; }

SubgroupSpec SubgroupSpec::full(int k) {
  SubgroupSpec s{k, "full", {}};
  // adjacent transposition + k-cycle generate Sym(k)
  Permutation t = Permutation::identity(k);
  std::swap(t.image[0], t.image[1]);
  s.generators.push_back(t);
  s.generators.push_back(cyclic(k).generators[0]);
  return s;
}

SubgroupSpec SubgroupSpec::cyclic(int k) {
  SubgroupSpec s{k, "cyclic", {}};
  Permutation c;
  c.image.resize(k);
  for (int x = 0; x < k; ++x) c.image[x] = static_cast<std::uint8_t>((x + 1) % k);
  s.generators.push_back(c);
  return s;
}

SubgroupSpec SubgroupSpec::klein() {
  SubgroupSpec s{4, "klein", {}};
  s.generators.push_back(Permutation{{1, 0, 3, 2}});
  s.generators.push_back(Permutation{{2, 3, 0, 1}});
  return s;
}

SubgroupSpec SubgroupSpec::by_name(const std::string& name, int k) {
  if (name == "trivial") return trivial(k);
  if (name == "full") return full(k);
  if (name == "cyclic") return cyclic(k);
  if (name == "klein") {
    if (k != 4) throw std::invalid_argument("klein preset requires k = 4");
    return klein();
  }
  throw std::invalid_argument("unknown subgroup preset '" + name + "'");
}

std::uint64_t gp_count(std::uint64_t group_order, int k, int depth) {
  std::uint64_t nodes = 0, level = 1;
  for (int l = 0; l < depth; ++l) {
    nodes += level;
    level *= k;
  }
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < nodes; ++i) n *= group_order;
  return n;
}

std::vector<Portrait> enumerate_gp(const SubgroupSpec& P, int depth,
                                   std::uint64_t cap) {
  std::vector<Permutation> elems = P.elements();
  return enumerate_constrained(elems, P.k, depth,
                               gp_count(elems.size(), P.k, depth), cap);
}

// ---------------------------------------------------------------------------
// abelianization

int indicator_eval(const Generator& gen, const Portrait& g) {
  if (static_cast<int>(gen.row.size()) > g.depth())
    throw std::out_of_range("indicator_eval: generator deeper than portrait");
  return g.act(gen.col) == gen.row ? 1 : 0;
}

Rational abelian_eval(const Element& e, const Portrait& g) {
  auto& reg = Registry::instance();
  Rational total = 0;
  for (const auto& [mon, coeff] : e.terms()) {
    bool alive = true;
    for (GenId f : reg.factors(mon)) {
      if (!indicator_eval(reg.generator(f), g)) {
        alive = false;
        break;
      }
    }
    if (alive) total += coeff;
  }
  return total;
}

std::vector<Rational> indicator_vector(MonId mon,
                                       const std::vector<Portrait>& group) {
  auto& reg = Registry::instance();
  std::vector<Rational> v(group.size(), Rational(0));
  for (std::size_t i = 0; i < group.size(); ++i) {
    bool alive = true;
    for (GenId f : reg.factors(mon)) {
      if (!indicator_eval(reg.generator(f), group[i])) {
        alive = false;
        break;
      }
    }
    if (alive) v[i] = 1;
  }
  return v;
}

std::size_t indicator_span_rank(int k, int depth,
                                const std::vector<Portrait>& group) {
  RowEchelon ech;
  std::vector<std::vector<Rational>> pool;
  pool.push_back(std::vector<Rational>(group.size(), Rational(1)));
  std::vector<std::vector<Rational>> gens;
  for (int n = 1; n <= depth; ++n) {
    for (const Word& u : enumerate_words(Alphabet(k), n)) {
      for (const Word& v : enumerate_words(Alphabet(k), n)) {
        std::vector<Rational> vec(group.size());
        Generator g(u, v);
        for (std::size_t i = 0; i < group.size(); ++i)
          vec[i] = indicator_eval(g, group[i]);
        gens.push_back(vec);
        pool.push_back(std::move(vec));
      }
    }
  }
  for (const auto& v : pool) ech.add(SparseVec::from_dense(v));
  // pointwise-product closure: multiply by generator indicators until the
  // rank saturates
  std::size_t frontier_begin = 0;
  while (ech.rank() < group.size()) {
    std::size_t frontier_end = pool.size();
    if (frontier_begin == frontier_end) break;  // closure reached
    bool grew = false;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens) {
        std::vector<Rational> prod(group.size());
        for (std::size_t j = 0; j < group.size(); ++j)
          prod[j] = pool[i][j] * g[j];
        if (ech.add(SparseVec::from_dense(prod))) {
          pool.push_back(std::move(prod));
          grew = true;
          if (ech.rank() == group.size()) return ech.rank();
        }
      }
    }
    frontier_begin = frontier_end;
    if (!grew) break;
  }
  return ech.rank();
}

}  // namespace qtree
