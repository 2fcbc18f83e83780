#include "newton/parser.hpp"

#include <cctype>
#include <optional>

namespace newton {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c))
      throw parse_error(std::string("expected ") + what, pos);
  }

  // unsigned integer digits
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw parse_error("expected integer", pos);
    if (pos < s.size() && s[pos] == '.')
      throw parse_error("non-Gaussian-rational literal (decimal point)", pos);
    return mpz_class(s.substr(start, pos - start));
  }

  // unsigned rational: integer ('/' integer)?
  mpq_class rational() {
    mpz_class num = integer();
    if (accept('/')) {
      mpz_class den = integer();
      if (den == 0) throw parse_error("zero denominator", pos);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }
};

struct Parser {
  Lexer lex;

  SparsePolynomial expr() {
    bool neg = false;
    if (lex.accept('-'))
      neg = true;
    else
      lex.accept('+');
    SparsePolynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (lex.accept('+'))
        acc += term();
      else if (lex.accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  SparsePolynomial term() {
    SparsePolynomial acc = factor();
    while (lex.accept('*')) acc = acc * factor();
    return acc;
  }

  SparsePolynomial factor() {
    SparsePolynomial b = base();
    if (lex.accept('^')) {
      if (lex.peek() == '-')
        throw parse_error("negative exponent", lex.pos);
      mpz_class n = lex.integer();
      if (!n.fits_uint_p()) throw parse_error("exponent too large", lex.pos);
      return b.pow(n.get_ui());
    }
    return b;
  }

  SparsePolynomial base() {
    char c = lex.peek();
    if (c == 'z') {
      ++lex.pos;
      return SparsePolynomial::monomial({1, 0}, GaussianRational(1));
    }
    if (c == 'w') {
      ++lex.pos;
      return SparsePolynomial::monomial({0, 1}, GaussianRational(1));
    }
    if (c == 'i') {
      ++lex.pos;
      return SparsePolynomial::constant(
          GaussianRational(mpq_class(0), mpq_class(1)));
    }
    if (c == '(') {
      ++lex.pos;
      SparsePolynomial inner = expr();
      lex.expect(')', "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q = lex.rational();
      if (lex.peek() == 'i') {
        ++lex.pos;
        return SparsePolynomial::constant(GaussianRational(mpq_class(0), q));
      }
      return SparsePolynomial::constant(GaussianRational(q));
    }
    throw parse_error("unexpected character", lex.pos);
  }
};

std::string render_monomial(LatticeExponent e) {
  std::string s;
  if (e.l > 0) {
    s += "z";
    if (e.l > 1) s += "^" + std::to_string(e.l);
  }
  if (e.m > 0) {
    if (!s.empty()) s += "*";
    s += "w";
    if (e.m > 1) s += "^" + std::to_string(e.m);
  }
  return s;
}

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text) {
  Parser p{Lexer{text}};
  SparsePolynomial f = p.expr();
  if (!p.lex.eof())
    throw parse_error("unexpected trailing input", p.lex.pos);
  return f;
}

std::string render(const SparsePolynomial& f) {
  if (f.is_zero()) return "0";
  // sort by (l+m, l) descending
  std::vector<std::pair<LatticeExponent, GaussianRational>> ts(
      f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    auto ka = std::make_pair(a.first.l + a.first.m, a.first.l);
    auto kb = std::make_pair(b.first.l + b.first.m, b.first.l);
    return ka > kb;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    GaussianRational coeff = c;
    bool neg = coeff.im == 0 && coeff.re < 0;
    if (!neg && coeff.re == 0 && coeff.im < 0) neg = true;
    if (neg) coeff = -coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = render_monomial(e);
    bool coeff_is_one = coeff == GaussianRational(1);
    if (mono.empty()) {
      out += to_string(coeff);
    } else if (coeff_is_one) {
      out += mono;
    } else {
      out += to_string(coeff) + "*" + mono;
    }
  }
  return out;
}

GaussianRational parse_gaussian_rational(const std::string& text) {
  // Accepts the polynomial-literal forms plus finite decimals and a
  // binary +/- between real and imaginary part, e.g. "1.5", "1-2i".
  auto parse_decimal = [](const std::string& s) -> mpq_class {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      auto slash = s.find('/');
      if (slash != std::string::npos) {
        mpq_class q(mpz_class(s.substr(0, slash)),
                    mpz_class(s.substr(slash + 1)));
        q.canonicalize();
        return q;
      }
      return mpq_class(mpz_class(s));
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class num(digits);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };

  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw error("empty value");
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

  bool neg_re = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg_re = s[i++] == '-';
  // split at a +/- that is not the leading sign
  std::size_t split = std::string::npos;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  auto piece = [&](std::string p, bool neg) -> mpq_class {
    if (p.empty()) p = "1";  // bare "i"
    mpq_class q = parse_decimal(p);
    return neg ? mpq_class(-q) : q;
  };
  if (split == std::string::npos) {
    if (s.back() == 'i')
      return GaussianRational(mpq_class(0),
                              piece(s.substr(i, s.size() - 1 - i), neg_re));
    return GaussianRational(piece(s.substr(i), neg_re));
  }
  if (s.back() != 'i') throw error("malformed complex value: " + text);
  bool neg_im = s[split] == '-';
  return GaussianRational(
      piece(s.substr(i, split - i), neg_re),
      piece(s.substr(split + 1, s.size() - 2 - split), neg_im));
}

}  // namespace newton
