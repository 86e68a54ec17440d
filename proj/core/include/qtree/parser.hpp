#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qtree/engine.hpp"

namespace qtree {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the expression grammar
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := [rational '*']? factor ('*' factor)* | rational
///   factor   := 'a[' word ',' word ']' | '1' | '(' expr ')'
///   word     := 'e' | digit+
///   rational := integer ['/' positive-integer]
/// Whitespace is insignificant. The result is unreduced.
Element parse_element(std::string_view text, const Alphabet& alphabet);

class TensorElement;

/// Tensor extension: `ox` separates legs, `p[w]` is a basis function.
///   texpr := ['-'] tterm (('+'|'-') tterm)*
///   tterm := [rational '*']? leg ('ox' leg)*
///   leg   := 'p[' word ']' | factor ('*' factor)*
/// Every term must produce the same leg signature.
TensorElement parse_tensor(std::string_view text, const Alphabet& alphabet);

}  // namespace qtree
