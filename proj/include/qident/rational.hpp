#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace qident {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Error hierarchy.  Every failure the library can signal deliberately goes
 * through one of these, so callers can distinguish "the input violates a
 * precondition" from "the requested answer is not determined by the data
 * we hold" (truncation too short).                                         */
struct QIdentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : QIdentError {
  using QIdentError::QIdentError;
};

struct InsufficientOrderError : QIdentError {
  using QIdentError::QIdentError;
};

struct ParseError : QIdentError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : QIdentError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct UnknownIdError : QIdentError {
  using QIdentError::QIdentError;
};

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/* gcd on nonnegative rationals: the largest rational g such that both
 * arguments are integer multiples of g.  gcd(p1/q1, p2/q2) =
 * gcd(p1*q2, p2*q1) / (q1*q2).  gcd(0, x) = x by convention, so a zero
 * argument is simply "no constraint".                                      */
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  Rat aa = rat_abs(a), bb = rat_abs(b);
  if (aa == 0) return bb;
  if (bb == 0) return aa;
  Int n = gcd(numerator(aa) * denominator(bb), numerator(bb) * denominator(aa));
  return Rat(n, denominator(aa) * denominator(bb));
}

/* floor and ceil to Int, exact. */
inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r) && r < 0) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(Rat(-r)); }

/* r as a long, requiring exactness and range; used for lattice indices. */
inline std::optional<long long> rat_to_index(const Rat& r) {
  if (!rat_is_integer(r) || r < 0) return std::nullopt;
  Int n = numerator(r);
  if (n > Int(std::numeric_limits<long long>::max())) return std::nullopt;
  return n.convert_to<long long>();
}

/* Render as "p" for integers, "p/q" otherwise (q > 0 always). */
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/* Parse "p", "-p", "p/q".  Whitespace is not accepted. */
inline Rat rat_parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  std::size_t pos = 0;
  auto read_int = [&]() -> Int {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected digits in rational", start);
    return Int(text.substr(start, pos - start));
  };
  Int num = read_int();
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int();
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  return Rat(num, den);
}

}  // namespace qident
