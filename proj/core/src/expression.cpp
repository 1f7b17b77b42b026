#include <cctype>

#include "cfrac/errors.hpp"
#include "cfrac/parse.hpp"

namespace cfrac {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PrimeField& f, const Bindings& b) : s_(text), f_(f), b_(b) {}

  XPolynomial parse() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError("empty expression", pos_);
    XPolynomial r = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  XPolynomial expr() {
    XPolynomial r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r = r + term();
      } else if (peek('-')) {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  XPolynomial term() {
    XPolynomial r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        XPolynomial d = unary();
        if (!d.is_scalar()) throw SyntaxError("division by a non-constant", at);
        if (d.is_zero()) throw DivisionByZero("division by zero in F_" + std::to_string(f_.modulus()));
        r = r.scaled(f_.inv(d.scalar_value()));
      } else {
        return r;
      }
    }
  }

  XPolynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  XPolynomial power() {
    XPolynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw SyntaxError("expected a natural exponent", at);
      }
      std::uint64_t e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (e > (std::uint64_t{1} << 40)) throw SyntaxError("exponent too large", at);
        e = e * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      }
      if (base.degree() <= 0) return XPolynomial::from_t(pow(base.coeff(0), e));
      return pow(base, e);
    }
    return base;
  }

  XPolynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      XPolynomial r = expr();
      if (!peek(')')) throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % f_.modulus();
      }
      return XPolynomial::from_t(Polynomial::constant(f_, static_cast<std::int64_t>(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "t" || name == "T") return XPolynomial::from_t(Polynomial::variable(f_));
      if (name == "x" || name == "X") return XPolynomial::x(f_);
      auto it = b_.find(name);
      if (it == b_.end()) throw SyntaxError("unknown name '" + std::string(name) + "'", start);
      require_same_field(f_, it->second.field(), "binding");
      return XPolynomial::from_t(Polynomial::constant(f_, it->second.value()));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const PrimeField& f_;
  const Bindings& b_;
  std::size_t pos_ = 0;
};

}  // namespace

XPolynomial parse_bivariate(std::string_view text, const PrimeField& f, const Bindings& b) {
  return Parser(text, f, b).parse();
}

Polynomial parse_polynomial(std::string_view text, const PrimeField& f, const Bindings& b) {
  XPolynomial r = parse_bivariate(text, f, b);
  if (r.degree() > 0) {
    throw SyntaxError("expected a polynomial in t, found x", text.find_first_of("xX"));
  }
  return r.coeff(0);
}

FieldElement parse_constant(std::string_view text, const PrimeField& f, const Bindings& b) {
  XPolynomial r = parse_bivariate(text, f, b);
  if (!r.is_scalar()) throw SyntaxError("expected a constant", 0);
  return FieldElement::from_canonical(f, r.scalar_value());
}

Bindings parse_bindings(std::string_view text, const PrimeField& f) {
  Bindings out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t comma = text.find(',', offset);
    std::string_view item = text.substr(offset, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - offset);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw SyntaxError("expected name=value", offset);
    std::string_view name = item.substr(0, eq);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
      throw SyntaxError("bad binding name", offset);
    }
    for (char ch : name) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
        throw SyntaxError("bad binding name", offset);
      }
    }
    if (name == "t" || name == "T" || name == "x" || name == "X") {
      throw SyntaxError("cannot bind reserved name '" + std::string(name) + "'", offset);
    }
    try {
      out.insert_or_assign(std::string(name), parse_constant(item.substr(eq + 1), f, out));
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string("in binding '") + std::string(name) + "': " + e.what(),
                        offset + eq + 1 + e.position());
    }
    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }
  return out;
}

}  // namespace cfrac
