#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtree {

using Letter = int;

/// Alphabet {0, ..., k-1} labelling the edges below every tree vertex.
/// Sizes outside [2, 10] are rejected: k = 1 makes every algebra trivial,
/// and single-digit letters keep the expression grammar unambiguous.
class Alphabet {
 public:
  explicit Alphabet(int size);
  int size() const { return size_; }

 private:
  int size_;
};

/// A vertex of the rooted tree: a finite word over the alphabet.
/// Letters are stored as raw byte values; the empty word is the root.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);

  /// Parses the serialized form: "e" for the empty word, digit string otherwise.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t n) const;
  bool is_prefix_of(const Word& other) const;

  Word append(Letter x) const;
  Word concat(const Word& other) const;

  std::string str() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::string letters_;
};

/// All k^n words of length n, in lexicographic order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, int n);

/// Splits w into (w_1..w_m, w_{m+1}..w_n); throws on m > |w|.
std::pair<Word, Word> split_prefix(const Word& w, std::size_t m);

}  // namespace qtree
