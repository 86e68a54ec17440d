#include "qtree/parser.hpp"

#include <cctype>
#include <vector>

#include "qtree/tensor.hpp"

namespace qtree {

namespace {

// Terms are kept as raw factor sequences while parsing; only depth-0
// factors are elided. No rewriting happens here.
struct RawTerm {
  Rational coeff;
  std::vector<GenId> factors;
};

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : s_(text), k_(alphabet.size()) {}

  Element parse() {
    std::vector<RawTerm> terms = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    Element out(k_);
    auto& reg = Registry::instance();
    for (const auto& t : terms) out.add_term(reg.mon_id(t.factors), t.coeff);
    return out;
  }

 private:
  std::vector<RawTerm> parse_expr() {
    std::vector<RawTerm> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    append_term(terms, sign);
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        append_term(terms, c == '-' ? -1 : 1);
      } else {
        break;
      }
    }
    return terms;
  }

  void append_term(std::vector<RawTerm>& out, int sign) {
    for (RawTerm& t : parse_term()) {
      t.coeff *= sign;
      out.push_back(std::move(t));
    }
  }

  // A term is a product of parenthesized sub-expressions, generators, units
  // and at most one leading rational.
  std::vector<RawTerm> parse_term() {
    skip_ws();
    std::vector<RawTerm> acc{{Rational(1), {}}};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) &&
        !(peek() == '1' && !is_rational_continuation())) {
      acc[0].coeff = parse_rational();
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        return acc;  // bare rational term
      }
    }
    while (true) {
      multiply(acc, parse_factor());
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    return acc;
  }

  std::vector<RawTerm> parse_factor() {
    skip_ws();
    char c = peek();
    if (c == 'a') return {parse_generator()};
    if (c == '1') {
      ++pos_;
      return {{Rational(1), {}}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return {{parse_rational(), {}}};
    }
    if (c == '(') {
      ++pos_;
      std::vector<RawTerm> inner = parse_expr();
      skip_ws();
      expect(')');
      return inner;
    }
    fail("expected 'a[', '1' or '('");
  }

  RawTerm parse_generator() {
    std::size_t at = pos_;
    expect('a');
    expect('[');
    Word row = parse_word();
    expect(',');
    Word col = parse_word();
    expect(']');
    if (row.size() != col.size()) {
      throw ParseError("unequal word lengths in a[" + row.str() + "," +
                           col.str() + "]",
                       at);
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row.at(i) >= k_ || col.at(i) >= k_) {
        throw ParseError("letter out of alphabet range in a[" + row.str() +
                             "," + col.str() + "]",
                         at);
      }
    }
    if (row.empty()) return {Rational(1), {}};
    GenId id = Registry::instance().gen_id(Generator(row, col));
    return {Rational(1), {id}};
  }

  Word parse_word() {
    skip_ws();
    if (peek() == 'e') {
      ++pos_;
      return Word{};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a word ('e' or digits)");
    return Word::parse(s_.substr(start, pos_ - start));
  }

  Rational parse_rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    Rational value{std::string(s_.substr(start, pos_ - start))};
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (pos_ == dstart) fail("expected a positive denominator");
      Rational den{std::string(s_.substr(dstart, pos_ - dstart))};
      if (den == 0) fail("zero denominator");
      value /= den;
    }
    return value;
  }

  // after '1': digits, '/' or '*digit...' mean it is a number, not the unit
  bool is_rational_continuation() {
    std::size_t p = pos_ + 1;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    if (p < s_.size() &&
        (std::isdigit(static_cast<unsigned char>(s_[p])) || s_[p] == '/'))
      return true;
    return false;
  }

  static void multiply(std::vector<RawTerm>& acc,
                       const std::vector<RawTerm>& rhs) {
    std::vector<RawTerm> out;
    out.reserve(acc.size() * rhs.size());
    for (const RawTerm& a : acc) {
      for (const RawTerm& b : rhs) {
        RawTerm t{a.coeff * b.coeff, a.factors};
        t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
        out.push_back(std::move(t));
      }
    }
    acc = std::move(out);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::string_view s_;
  int k_;
  std::size_t pos_ = 0;
};

// Small tensor front end on top of the element grammar. Legs are split on
// the `ox` keyword at term level; each leg is either p[w] or a factor chain.
class TensorParser {
 public:
  TensorParser(std::string_view text, const Alphabet& alphabet)
      : s_(text), alphabet_(alphabet) {}

  TensorElement parse() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    TensorElement acc = parse_term(negative ? -1 : 1);
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        acc += parse_term(c == '-' ? -1 : 1);
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ != s_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return acc;
  }

 private:
  TensorElement parse_term(int sign) {
    skip_ws();
    Rational coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      // possible rational prefix; '1' alone could also be a unit leg, in
      // which case the value is the same either way
      std::size_t mark = pos_;
      Rational r = parse_rational_text();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        coeff *= r;
      } else {
        pos_ = mark;  // a bare leg such as "1"
      }
    }
    TensorElement acc = parse_leg();
    while (true) {
      skip_ws();
      if (s_.compare(pos_, 2, "ox") == 0) {
        pos_ += 2;
        acc = tensor_product(acc, parse_leg());
      } else {
        break;
      }
    }
    return acc * coeff;
  }

  TensorElement parse_leg() {
    skip_ws();
    if (peek() == 'p') {
      std::size_t mark = pos_;
      ++pos_;
      skip_ws();
      if (peek() != '[') throw ParseError("expected '[' after p", pos_);
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ == s_.size()) throw ParseError("unterminated p[...]", mark);
      Word w = Word::parse(s_.substr(start, pos_ - start));
      ++pos_;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.at(i) >= alphabet_.size()) {
          throw ParseError("letter out of alphabet range in p[]", mark);
        }
      }
      return TensorElement::function_basis(alphabet_.size(), w);
    }
    // an engine leg: consume a factor chain up to 'ox', '+', '-' or end
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 &&
          (c == '+' || (c == '-' && pos_ > start) ||
           s_.compare(pos_, 2, "ox") == 0)) {
        break;
      }
      ++pos_;
    }
    std::string_view chunk = s_.substr(start, pos_ - start);
    try {
      return TensorElement::from_element(parse_element(chunk, alphabet_));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), start + err.position());
    }
  }

  Rational parse_rational_text() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    Rational value{std::string(s_.substr(start, pos_ - start))};
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (pos_ == dstart) throw ParseError("expected a denominator", pos_);
      value /= Rational{std::string(s_.substr(dstart, pos_ - dstart))};
    }
    return value;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string_view s_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

TensorElement parse_tensor(std::string_view text, const Alphabet& alphabet) {
  return TensorParser(text, alphabet).parse();
}

}  // namespace qtree
