#include "asd/rational.hpp"

#include <cctype>

namespace asd {

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t end = scan_digits(text, pos);
  if (end == pos) throw ParseError("expected digits", pos);
  mpz_class num(std::string(text.substr(pos, end - pos)), 10);
  mpz_class den = 1;
  pos = end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    end = scan_digits(text, pos);
    if (end == pos) throw ParseError("expected denominator", pos);
    den = mpz_class(std::string(text.substr(pos, end - pos)), 10);
    if (den == 0) throw ParseError("zero denominator", pos);
    pos = end;
  }
  if (pos != text.size()) throw ParseError("unexpected character in rational", pos);
  Rational q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow2(int e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace asd
