#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cfrac/bivariate.hpp"
#include "cfrac/polynomial.hpp"

namespace cfrac {

// Named constants of F_p usable inside expressions.
using Bindings = std::map<std::string, FieldElement, std::less<>>;

// Grammar: sums and differences of products of factors; a factor is an
// integer, t/T, x/X, a bound name or a parenthesised expression, optionally
// raised to a natural power with '^'. '/' divides by a nonzero constant.
// Throws SyntaxError on malformed text, DivisionByZero on '/0'.
XPolynomial parse_bivariate(std::string_view text, const PrimeField& f, const Bindings& b = {});
// As above but rejects x.
Polynomial parse_polynomial(std::string_view text, const PrimeField& f, const Bindings& b = {});
// An expression that must evaluate to a field constant.
FieldElement parse_constant(std::string_view text, const PrimeField& f, const Bindings& b = {});
// "a=1,b=2,c=2*a+1/b": each value may use names bound earlier in the list.
Bindings parse_bindings(std::string_view text, const PrimeField& f);

}  // namespace cfrac
