#pragma once

#include "qdga/calculus.hpp"
#include "qdga/tensor.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdga {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the expression grammar
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (('*' | '(*)' | '⊗' | juxtaposition) factor)*
///   factor := scalar | 'x'N | 'dx'N | 'd2x'N | 'd' '(' expr ')' | '(' expr ')' | '-' factor
///   scalar := N | N '/' N | 'q' | '[' N ']_q'
///
/// Every product is the tensor-algebra product, so "x1 * dx2" is pushed
/// through xi immediately and the result is canonical. `d(...)` accepts only
/// algebra elements.
Tensor parse_expression(std::string_view src, const Calculus& calc);

/// Parses an element that must lie in the algebra (grade 0).
Poly parse_algebra_element(std::string_view src, const Calculus& calc);

/// Same as parse_algebra_element but needs no xi; products are plain word
/// concatenation. Used while loading xi itself.
Poly parse_polynomial(std::string_view src, std::size_t n);

}  // namespace qdga
