#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asd {

using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Accepts "p/q" (q > 0) or an integer, with an optional leading minus.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// 2^e for any integer e.
Rational pow2(int e);

Rational make_rational(long num, long den = 1);

}  // namespace asd
