#pragma once

/* A small expression language for ad-hoc series exploration:
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := factor (('*' | '/') factor)*
 *   factor  := q^<rat>
 *            | poch(<sign><rat>, <rat>)        one q-shifted factorial
 *            | f(<+-int>, <+-int>)             f(s1 q^|x|, s2 q^|y|)
 *            | eta(<rat>)^<rat>                one eta factor, rational power
 *            | omega(<k>)                      quadratic-factor product
 *            | R(<rat>) | S1 | S2 | T1 | T2    continued-fraction series
 *            | root(<expr>, <n>)               n-th series root
 *            | (<expr>)
 *
 * Everything evaluates over the field coefficients so that omega may mix
 * freely with the rational leaves.  Leaves are built with a small cushion
 * beyond the requested order because division and roots spend knowledge;
 * the final result is truncated back to the requested order (or to
 * whatever survived, if heavy nesting spent more than the cushion).        */

#include <cctype>
#include <string>
#include <utility>

#include "qident/cfractions.hpp"
#include "qident/qfunctions.hpp"
#include "qident/rational.hpp"
#include "qident/series.hpp"

namespace qident {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string text, Rat leaf_order)
      : text_(std::move(text)), leaf_order_(std::move(leaf_order)) {}

  QSeries<KElem> run() {
    QSeries<KElem> r = expr();
    skip_ws();
    if (pos_ != text_.size()) throw err("trailing input after expression");
    return r;
  }

 private:
  std::string text_;
  Rat leaf_order_;
  std::size_t pos_{0};

  ParseError err(const std::string& msg) const { return ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw err(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    if (start == pos_) throw err("expected a name");
    return text_.substr(start, pos_ - start);
  }

  /* Rational literal: optional sign, digits, optional /digits. */
  Rat rational(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() &&
        (text_[pos_] == '+' || text_[pos_] == '-')) {
      ++pos_;
    }
    auto digits = [&]() {
      std::size_t d = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++d;
      }
      return d;
    };
    if (digits() == 0) throw err("expected a number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (digits() == 0) throw err("expected a denominator");
    }
    return rat_parse(text_.substr(start, pos_ - start));
  }

  long long integer(bool allow_sign) {
    Rat r = rational(allow_sign);
    if (!rat_is_integer(r)) throw err("expected an integer");
    return rat_num(r).convert_to<long long>();
  }

  QSeries<KElem> expr() {
    QSeries<KElem> acc = term();
    for (;;) {
      if (eat('+')) {
        acc = s_add(acc, term());
      } else if (eat('-')) {
        acc = s_sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  QSeries<KElem> term() {
    QSeries<KElem> acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = s_mul(acc, factor());
      } else if (eat('/')) {
        acc = s_mul(acc, s_unit_inv(factor()));
      } else {
        return acc;
      }
    }
  }

  QSeries<KElem> factor() {
    skip_ws();
    if (eat('(')) {
      QSeries<KElem> inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ >= text_.size()) throw err("expected a factor");
    std::string name = ident();
    const Rat& ord = leaf_order_;
    if (name == "q") {
      expect('^');
      Rat e = rational(true);
      return s_monomial(KElem(1), e, ord + e);
    }
    if (name == "poch") {
      expect('(');
      skip_ws();
      int sign = 1;
      if (eat('-')) {
        sign = -1;
      } else {
        eat('+');
      }
      Rat a = rational(false);
      expect(',');
      Rat m = rational(false);
      expect(')');
      return series_cast<KElem>(
          pochhammer(MonomialArg{sign, a}, m, ord));
    }
    if (name == "f") {
      expect('(');
      long long x = integer(true);
      expect(',');
      long long y = integer(true);
      expect(')');
      MonomialArg a{x < 0 ? -1 : 1, Rat(x < 0 ? -x : x)};
      MonomialArg b{y < 0 ? -1 : 1, Rat(y < 0 ? -y : y)};
      return series_cast<KElem>(theta_f(a, b, ord));
    }
    if (name == "eta") {
      expect('(');
      Rat t = rational(false);
      expect(')');
      expect('^');
      Rat e = rational(true);
      return series_cast<KElem>(eta_quotient({{t, e}}, ord));
    }
    if (name == "omega") {
      expect('(');
      long long k = integer(false);
      expect(')');
      return omega(static_cast<int>(k), 1, ord);
    }
    if (name == "root") {
      expect('(');
      QSeries<KElem> base = expr();
      expect(',');
      long long n = integer(false);
      expect(')');
      if (n < 1) throw err("root index must be positive");
      return s_nth_root(base, n);
    }
    CFName cf;
    if (name == "R") {
      cf = CFName::R;
    } else if (name == "S1") {
      cf = CFName::S1;
    } else if (name == "S2") {
      cf = CFName::S2;
    } else if (name == "T1") {
      cf = CFName::T1;
    } else if (name == "T2") {
      cf = CFName::T2;
    } else {
      throw err("unknown name '" + name + "'");
    }
    expect('(');
    Rat scale = rational(false);
    expect(')');
    return series_cast<KElem>(cf_series(cf, scale, ord));
  }
};

}  // namespace detail

inline QSeries<KElem> expand_expr(const std::string& text, const Rat& order) {
  detail::ExprParser parser(text, order + 4);
  QSeries<KElem> r = parser.run();
  Rat keep = order < r.order ? order : r.order;
  return s_truncate(std::move(r), keep);
}

}  // namespace qident
