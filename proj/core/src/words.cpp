#include "qtree/words.hpp"

#include <stdexcept>

namespace qtree {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2 || size > 10) {
    throw std::invalid_argument("alphabet size must be in [2, 10], got " +
                                std::to_string(size));
  }
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) letters_.push_back(static_cast<char>(x));
}

Word Word::parse(std::string_view text) {
  if (text == "e") return Word{};
  if (text.empty()) throw std::invalid_argument("empty word literal");
  Word w;
  w.letters_.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid word literal '" + std::string(text) + "'");
    }
    w.letters_.push_back(static_cast<char>(c - '0'));
  }
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.letters_ = letters_.substr(0, n);
  return w;
}

Word Word::suffix_from(std::size_t n) const {
  Word w;
  w.letters_ = n <= letters_.size() ? letters_.substr(n) : std::string{};
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return letters_.size() <= other.letters_.size() &&
         other.letters_.compare(0, letters_.size(), letters_) == 0;
}

Word Word::append(Letter x) const {
  Word w = *this;
  w.letters_.push_back(static_cast<char>(x));
  return w;
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  w.letters_ += other.letters_;
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (char c : letters_) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, int n) {
  if (n < 0) throw std::invalid_argument("word length must be nonnegative");
  std::vector<Word> out;
  out.reserve(1);
  out.emplace_back();
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const Word& w : out) {
      for (int x = 0; x < alphabet.size(); ++x) next.push_back(w.append(x));
    }
    out = std::move(next);
  }
  return out;
}

std::pair<Word, Word> split_prefix(const Word& w, std::size_t m) {
  if (m > w.size()) {
    throw std::out_of_range("split_prefix: m exceeds word length");
  }
  return {w.prefix(m), w.suffix_from(m)};
}

}  // namespace qtree
