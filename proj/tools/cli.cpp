#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfrac/errors.hpp"
#include "cfrac/expansion.hpp"
#include "cfrac/families.hpp"
#include "cfrac/identities.hpp"
#include "cfrac/measure.hpp"
#include "cfrac/parse.hpp"
#include "cfrac/transport.hpp"
#include "fixture.hpp"

namespace cfcli {

namespace {

using namespace cfrac;

const std::vector<std::string> kWordFormats{"text", "letters", "degrees", "lcoeffs", "json", "csv"};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

// "[h; a1, a2]" or "[a1, a2]"
Word parse_word(std::string_view text, const PrimeField& f, const Bindings& b) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw SyntaxError("word must be written [a1, a2, ...]", 0);
  s = s.substr(1, s.size() - 2);
  std::optional<Polynomial> head;
  if (auto semi = s.find(';'); semi != std::string::npos) {
    head = parse_polynomial(s.substr(0, semi), f, b);
    s = s.substr(semi + 1);
  }
  std::vector<Polynomial> letters;
  if (!trim(s).empty()) {
    for (const auto& part : split_top(s, ',')) letters.push_back(parse_polynomial(part, f, b));
  }
  return Word(f, std::move(letters), std::move(head));
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const auto& part : split_top(text, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad prime list '" + text + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  return out;
}

void print_word(const Word& w, const std::string& format, std::ostream& out) {
  if (format == "text") {
    out << to_string(w) << "\n";
  } else if (format == "letters") {
    out << letters_to_string(w) << "\n";
  } else if (format == "degrees") {
    out << degrees_to_string(w.degrees()) << "\n";
  } else if (format == "lcoeffs") {
    out << coeffs_to_string(w.leading_coefficients()) << "\n";
  } else if (format == "json") {
    out << to_json(w) << "\n";
  } else {
    out << "n,degree,leading,letter\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << i + 1 << "," << w[i].degree() << "," << w[i].leading() << ",\"" << to_string(w[i]) << "\"\n";
    }
  }
}


struct FamilyOptions {
  std::string name;
  std::uint64_t r = 0;
  std::string a, b, base;

  void add_to(CLI::App* app) {
    app->add_option("--family", name, "named family: theta, robbins, robbins3, modified_robbins, gamma, annex4, example2, "
                                      "mahler, mahler_dual, schmidt, phi, fibonacci");
    app->add_option("--r", r, "power of p used by the family");
    app->add_option("--a", a, "theta parameter a");
    app->add_option("--b", b, "theta parameter b");
    app->add_option("--base", base, "schmidt base word, e.g. \"[t^2, t]\"");
  }

  bool given() const { return !name.empty(); }

  FamilySpec spec(std::uint32_t p) const {
    FamilySpec s;
    s.name = family_from_string(name);
    s.p = p;
    s.r = r;
    PrimeField f(s.prime());
    if (!a.empty()) s.a = static_cast<std::int64_t>(parse_constant(a, f).value());
    if (!b.empty()) s.b = static_cast<std::int64_t>(parse_constant(b, f).value());
    if (!base.empty()) s.base = parse_word(base, f, {});
    return s.resolved();
  }
};

// An equation to expand, with the hyperquadratic data when it comes from a family that has it.
struct Problem {
  AlgebraicEquation eq;
  std::optional<FamilyTransport> transport;
};

Problem make_problem(const std::string& equation, const std::string& bind, std::uint32_t p, const FamilyOptions& fam) {
  if (fam.given()) {
    if (!equation.empty()) throw std::invalid_argument("give either an equation or --family, not both");
    FamilySpec s = fam.spec(p);
    return {family_equation(s), family_transport(s)};
  }
  if (equation.empty()) throw std::invalid_argument("an equation or --family is required");
  if (p == 0) throw std::invalid_argument("-p is required");
  PrimeField f(p);
  return {AlgebraicEquation::parse(equation, f, bind.empty() ? Bindings{} : parse_bindings(bind, f)), std::nullopt};
}

Word expand(const Problem& pr, const std::string& engine, std::size_t count, std::size_t max_precision) {
  if (engine == "direct") return expand_root_direct(pr.eq, count);
  if (engine == "certified") {
    CertifiedOptions opts;
    opts.max_precision = max_precision;
    return expand_root_certified(pr.eq, count, opts);
  }
  if (!pr.transport) throw std::invalid_argument("the transport engine needs a family with hyperquadratic data");
  Word w = expand_hyperquadratic(pr.transport->data, count);
  return Word(w.field(), w.letters(), pr.transport->head);
}

// 1-based index of the first differing letter (0 for differing heads); nullopt if equal.
std::optional<std::size_t> first_difference(const Word& a, const Word& b) {
  if (a.head() != b.head()) return 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i] == b[i])) return i + 1;
  }
  if (a.size() != b.size()) return n + 1;
  return std::nullopt;
}

std::string comparison(const Word& reference, const Word& candidate, std::size_t wanted, bool& agree) {
  auto diff = first_difference(reference, candidate);
  agree = !diff && candidate.size() == wanted;
  if (diff) return "disagree at letter " + std::to_string(*diff);
  if (candidate.size() < wanted) return "expansion ends after " + std::to_string(candidate.size()) + " letters";
  return "agree to " + std::to_string(wanted);
}

// ---- rational

struct RationalCmd {
  std::uint32_t p = 0;
  std::string num, den, bind, format = "text";

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("rational", "continued fraction of P/Q by Euclid's algorithm");
    c->add_option("-p,--p", p, "field characteristic")->required();
    c->add_option("P", num, "numerator")->required();
    c->add_option("Q", den, "denominator")->required();
    c->add_option("--bind", bind, "named constants, e.g. a=1,b=2");
    c->add_option("--format", format)->check(CLI::IsMember(kWordFormats));
    sub = c;
  }
  int run(std::ostream& out) const {
    PrimeField f(p);
    Bindings b = bind.empty() ? Bindings{} : parse_bindings(bind, f);
    print_word(euclid_cf(parse_polynomial(num, f, b), parse_polynomial(den, f, b)), format, out);
    return kOk;
  }
  CLI::App* sub = nullptr;
};

// ---- root

struct RootCmd {
  std::uint32_t p = 0;
  std::string equation, bind, engine = "direct", format = "text";
  std::size_t count = 10;
  std::size_t max_precision = std::size_t{1} << 26;
  FamilyOptions fam;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("root", "partial quotients of the root of an algebraic equation");
    c->add_option("-p,--p", p, "field characteristic");
    c->add_option("equation", equation, "polynomial in x and t, e.g. \"x^4+x^2-t*x+1\"");
    c->add_option("-n,--count", count, "number of partial quotients");
    c->add_option("--engine", engine)->check(CLI::IsMember({"direct", "certified", "transport", "both"}));
    c->add_option("--bind", bind, "named constants, e.g. a=1,b=2,c=2*a+1/b");
    c->add_option("--format", format)->check(CLI::IsMember(kWordFormats));
    c->add_option("--max-precision", max_precision, "digit budget of the certified engine");
    fam.add_to(c);
    sub = c;
  }
  int run(std::ostream& out) const {
    Problem pr = make_problem(equation, bind, p, fam);
    if (engine != "both") {
      print_word(expand(pr, engine, count, max_precision), format, out);
      return kOk;
    }
    Word d = expand(pr, "direct", count, max_precision);
    Word c = expand(pr, "certified", count, max_precision);
    print_word(d, format, out);
    bool agree = false;
    std::string msg = comparison(d, c, d.size(), agree);
    out << "direct and certified: " << msg << "\n";
    return agree ? kOk : kDisagreement;
  }
  CLI::App* sub = nullptr;
};

// ---- verify

struct VerifyCmd {
  std::uint32_t p = 0;
  std::string engine = "auto", fixture, all_primes;
  std::size_t count = 100;
  std::size_t max_precision = std::size_t{1} << 26;
  FamilyOptions fam;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("verify", "compare a family's expansion against a reference");
    c->add_option("-p,--p", p, "field characteristic");
    c->add_option("-n,--count", count, "number of letters to compare");
    c->add_option("--engine", engine, "engine producing the expansion (auto picks transport when available)")
        ->check(CLI::IsMember({"auto", "direct", "certified", "transport"}));
    c->add_option("--fixture", fixture, "golden file with cfe/degrees/leading coefficients lines");
    c->add_option("--all-primes", all_primes, "comma separated primes, one worker each");
    c->add_option("--max-precision", max_precision, "digit budget of the certified engine");
    fam.add_to(c);
    sub = c;
  }

  // Returns the exit code; `line` receives the report.
  int verify_one(std::uint32_t prime, std::string& line) const {
    FamilySpec s = fam.spec(prime);
    Problem pr{family_equation(s), family_transport(s)};
    if (!fixture.empty()) return verify_fixture(pr, line);
    std::optional<Word> reference;
    try {
      reference = family_word(s, count);
    } catch (const UnsupportedFamily&) {
    }
    std::string eng = engine;
    if (eng == "auto") eng = reference && pr.transport ? "transport" : "certified";
    if (!reference) {
      if (eng == "direct") throw std::invalid_argument("no closed-form word; compare another engine with direct");
      reference = expand(pr, "direct", count, max_precision);
    }
    Word candidate = expand(pr, eng, count, max_precision);
    bool agree = false;
    line = comparison(*reference, candidate, count, agree);
    return agree ? kOk : kDisagreement;
  }

  int verify_fixture(const Problem& pr, std::string& line) const {
    Fixture fx = Fixture::load(fixture);
    const std::vector<std::int64_t> degrees = fx.integers("degrees");
    Word w = expand(pr, engine == "auto" ? "direct" : engine, degrees.size(), max_precision);
    if (fx.has("cfe")) {
      const std::size_t k = fx.entries("cfe");
      if (letters_to_string(w.prefix(std::min(k, w.size()))) != fx.at("cfe")) {
        line = "disagree: first " + std::to_string(k) + " partial quotients differ";
        return kDisagreement;
      }
    }
    if (degrees_to_string(w.degrees()) != fx.at("degrees")) {
      std::vector<std::int64_t> got = w.degrees();
      std::size_t i = 0;
      while (i < std::min(got.size(), degrees.size()) && got[i] == degrees[i]) ++i;
      line = "disagree: degree of letter " + std::to_string(i + 1) + " differs";
      return kDisagreement;
    }
    if (fx.has("leading coefficients")) {
      const std::size_t k = fx.entries("leading coefficients");
      auto lc = w.leading_coefficients();
      lc.resize(std::min(k, lc.size()));
      if (coeffs_to_string(lc) != fx.at("leading coefficients")) {
        line = "disagree: leading coefficients differ";
        return kDisagreement;
      }
    }
    line = "agree to " + std::to_string(degrees.size());
    return kOk;
  }

  int run(std::ostream& out) const {
    if (!fam.given()) throw std::invalid_argument("verify needs --family");
    if (all_primes.empty()) {
      std::string line;
      int code = verify_one(p, line);
      out << line << "\n";
      return code;
    }
    const std::vector<std::uint32_t> primes = parse_primes(all_primes);
    std::vector<std::string> lines(primes.size());
    std::vector<int> codes(primes.size(), kOk);
    std::vector<std::thread> workers;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      workers.emplace_back([&, k] {
        try {
          codes[k] = verify_one(primes[k], lines[k]);
        } catch (const SyntaxError& e) {
          lines[k] = std::string("error: ") + e.what();
          codes[k] = kUsage;
        } catch (const std::invalid_argument& e) {
          lines[k] = std::string("error: ") + e.what();
          codes[k] = kUsage;
        } catch (const std::exception& e) {
          lines[k] = std::string("error: ") + e.what();
          codes[k] = kMathError;
        }
      });
    }
    for (auto& w : workers) w.join();
    int code = kOk;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      out << "p=" << primes[k] << ": " << lines[k] << "\n";
      if (codes[k] != kOk && (code == kOk || codes[k] > code)) code = codes[k];
    }
    return code;
  }
  CLI::App* sub = nullptr;
};

// ---- family

struct FamilyCmd {
  std::uint32_t p = 0;
  std::size_t count = 10;
  std::size_t k_max = 2;
  std::string format = "text";
  bool equation = false;
  FamilyOptions fam;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("family", "generate a named word, polynomial or equation");
    c->add_option("-p,--p", p, "field characteristic");
    c->add_option("-n,--count", count, "letters (fibonacci: index; mahler: digits)");
    c->add_option("--k", k_max, "example2: largest k for A_k");
    c->add_option("--format", format)->check(CLI::IsMember(kWordFormats));
    c->add_flag("--equation", equation, "print the defining equation instead");
    fam.add_to(c);
    sub = c;
  }
  int run(std::ostream& out) const {
    if (!fam.given()) throw std::invalid_argument("family needs --family");
    FamilySpec s = fam.spec(p);
    if (equation) {
      out << to_string(family_equation(s)) << "\n";
      return kOk;
    }
    switch (s.name) {
      case FamilyName::fibonacci_poly:
        out << to_string(fibonacci_poly(count, PrimeField(s.p))) << "\n";
        return kOk;
      case FamilyName::mahler:
        out << to_string(mahler_series(PrimeField(s.p), s.r, count)) << "\n";
        return kOk;
      case FamilyName::example2_support: {
        Example2Support sup = example2_support(k_max, count);
        if (format == "degrees") {
          std::vector<std::int64_t> d;
          for (auto i : sup.i) {
            if (i >= sup.a.size()) throw std::invalid_argument("raise --k to cover i(n) = " + std::to_string(i));
            d.push_back(sup.a[i].degree());
          }
          out << degrees_to_string(d) << "\n";
          return kOk;
        }
        for (std::size_t k = 0; k < sup.a.size(); ++k) out << "A_" << k << " = " << to_string(sup.a[k]) << "\n";
        std::vector<std::int64_t> idx(sup.i.begin(), sup.i.end());
        out << "i " << degrees_to_string(idx) << "\n";
        return kOk;
      }
      default:
        break;
    }
    try {
      print_word(family_word(s, count), format, out);
    } catch (const UnsupportedFamily&) {
      out << to_string(family_equation(s)) << "\n";
    }
    return kOk;
  }
  CLI::App* sub = nullptr;
};

// ---- measure

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << to_double(r);
  return os.str();
}

std::string fraction(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

struct MeasureCmd {
  std::uint32_t p = 0;
  std::size_t count = 100;
  std::size_t window = 50;
  std::string equation, bind, degrees, fixture, target, format = "text";
  FamilyOptions fam;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("measure", "approximation exponent estimates from partial quotient degrees");
    c->add_option("-p,--p", p, "field characteristic");
    c->add_option("equation", equation, "expand the root of this equation with the direct engine");
    c->add_option("-n,--count", count, "number of letters");
    c->add_option("--window", window, "tail window for the limsup proxy");
    c->add_option("--bind", bind, "named constants for the equation");
    c->add_option("--degrees", degrees, "explicit degree list, e.g. \"[1, 1, 5]\"");
    c->add_option("--fixture", fixture, "take the degrees line of a golden file");
    c->add_option("--target", target, "build a degree sequence with this exponent, e.g. 3 or 8/3");
    c->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    fam.add_to(c);
    sub = c;
  }

  static Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }

  std::vector<std::int64_t> degree_data(std::optional<FamilySpec>& spec) const {
    if (!degrees.empty()) {
      Fixture fx;
      fx.lines["degrees"] = degrees;
      return fx.integers("degrees");
    }
    if (!fixture.empty()) {
      auto d = Fixture::load(fixture).integers("degrees");
      if (d.size() > count) d.resize(count);
      return d;
    }
    if (!target.empty()) return degree_sequence_for_measure(parse_rational(target), count, window).degrees;
    if (fam.given()) {
      spec = fam.spec(p);
      return family_degrees(*spec, count);
    }
    return expand(make_problem(equation, bind, p, fam), "direct", count, 0).degrees();
  }

  int run(std::ostream& out) const {
    std::optional<FamilySpec> spec;
    const std::vector<std::int64_t> d = degree_data(spec);
    MeasureEstimate m = nu_estimate(d, window);
    std::optional<Rational> closed;
    if (spec) {
      try {
        closed = nu_closed_form(*spec);
      } catch (const NoClosedForm&) {
      }
    }
    if (format == "csv") {
      out << "n,degree,ratio,nu_lower\n";
      Rational best(0);
      for (std::size_t n = 1; n <= d.size(); ++n) {
        out << n << "," << d[n - 1] << ",";
        if (n >= 2) {
          const Rational& r = m.ratios[n - 2];
          best = std::max(best, r);
          out << decimal(r) << "," << decimal(best + 2);
        } else {
          out << ",";
        }
        out << "\n";
      }
    } else if (format == "json") {
      nlohmann::ordered_json j;
      j["degrees"] = d;
      std::vector<std::string> ratios;
      for (const auto& r : m.ratios) ratios.push_back(fraction(r));
      j["ratios"] = ratios;
      j["running_sup"] = fraction(m.running_sup);
      j["tail_sup"] = fraction(m.tail_sup);
      j["window"] = m.window;
      j["nu_lower"] = fraction(m.nu_lower);
      j["record_ratio"] = fraction(m.record_ratio);
      j["record_index"] = m.record_index;
      if (closed) j["nu_closed_form"] = fraction(*closed);
      out << j.dump() << "\n";
    } else {
      out << "letters " << d.size() << "\n";
      out << "running sup " << fraction(m.running_sup) << " = " << decimal(m.running_sup) << "\n";
      out << "tail sup (last " << std::min(window, m.ratios.size()) << ") " << decimal(m.tail_sup) << "\n";
      out << "last record " << decimal(m.record_ratio) << " at letter " << m.record_index << "\n";
      out << "nu lower bound " << decimal(m.nu_lower) << "\n";
      if (closed) out << "nu closed form " << fraction(*closed) << " = " << decimal(*closed) << "\n";
    }
    return kOk;
  }
  CLI::App* sub = nullptr;
};

// ---- series

struct SeriesCmd {
  std::uint32_t p = 0;
  std::size_t precision = 20;
  std::uint64_t power = 1;
  std::string num, den = "1", root, seed, bind, rel_num, rel_den = "1", format = "text";
  bool period = false;
  FamilyOptions fam;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("series", "Laurent expansions in 1/t");
    c->add_option("-p,--p", p, "field characteristic");
    c->add_option("-n,--precision", precision, "number of digits");
    c->add_option("--num", num, "numerator of a rational function");
    c->add_option("--den", den, "denominator of a rational function");
    c->add_option("--pow", power, "raise the rational function to this power");
    c->add_option("--root", root, "equation whose root is expanded by Newton iteration");
    c->add_option("--seed", seed, "polynomial starting approximation for --root");
    c->add_option("--bind", bind, "named constants");
    c->add_option("--derivative-num", rel_num, "check root' = num(x)/den(x)");
    c->add_option("--derivative-den", rel_den, "denominator of the derivative relation");
    c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c->add_flag("--period", period, "report an eventual period of the digits");
    fam.add_to(c);
    sub = c;
  }

  int run(std::ostream& out) const {
    std::uint32_t prime = p;
    std::optional<FamilySpec> spec;
    if (fam.given()) {
      spec = fam.spec(p);
      prime = spec->p;
    }
    if (prime == 0) throw std::invalid_argument("-p is required");
    PrimeField f(prime);
    Bindings b = bind.empty() ? Bindings{} : parse_bindings(bind, f);
    std::optional<AlgebraicEquation> eq;
    std::optional<LaurentSeries> s;
    std::optional<LaurentSeries> start;
    if (!seed.empty()) {
      Polynomial sp = parse_polynomial(seed, f, b);
      start = LaurentSeries::from_polynomial(sp, static_cast<std::size_t>(std::max<std::int64_t>(sp.degree(), 0)) + 1);
    }
    if (!num.empty()) {
      s = from_rational(parse_polynomial(num, f, b), parse_polynomial(den, f, b), precision);
      if (power != 1) s = power_of(*s, power);
    } else if (!root.empty()) {
      eq = AlgebraicEquation::parse(root, f, b);
    } else if (spec && spec->name == FamilyName::mahler) {
      s = mahler_series(f, spec->r, precision);
    } else if (spec) {
      eq = family_equation(*spec);
    } else {
      throw std::invalid_argument("series needs --num, --root or --family");
    }
    if (eq) s = hensel_root(*eq, start ? *start : direct_seed(*eq), precision);
    out << (format == "json" ? to_json(*s) : to_string(*s)) << "\n";
    if (period) {
      if (auto per = detect_period(*s)) {
        out << "period " << per->period << " after " << per->preperiod << " digits\n";
      } else {
        out << "no period detected\n";
      }
    }
    if (!rel_num.empty()) {
      if (!eq) throw std::invalid_argument("--derivative-num needs --root or an equation family");
      RationalRelation rel{parse_bivariate(rel_num, f, b), parse_bivariate(rel_den, f, b)};
      const bool ok = verify_derivative_relation(*eq, rel, precision, start);
      out << "derivative relation " << (ok ? "holds" : "fails") << " to " << precision << " digits\n";
      return ok ? kOk : kDisagreement;
    }
    return kOk;
  }

  static LaurentSeries power_of(const LaurentSeries& s, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("--pow must be positive");
    const std::uint64_t p = s.field().modulus();
    if (is_power_of(e, p)) return pow_frobenius(s, e).truncated(s.precision());
    LaurentSeries acc = s;
    for (std::uint64_t k = 1; k < e; ++k) acc = acc * s;
    return acc;
  }
  CLI::App* sub = nullptr;
};

// ---- identities

Polynomial random_letter(const PrimeField& f, std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(1, max_degree);
  std::uniform_int_distribution<Coeff> any(0, f.modulus() - 1), nonzero(1, f.modulus() - 1);
  std::vector<Coeff> c(deg(rng) + 1);
  for (auto& v : c) v = any(rng);
  c.back() = nonzero(rng);
  return Polynomial(f, std::move(c));
}

struct IdentitiesCmd {
  std::size_t checks = 1000;
  std::string primes = "2,3,5,13";
  std::uint64_t seed = 1;
  std::size_t max_letters = 6;
  std::size_t max_degree = 3;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("identities", "randomized checks of the continuant identities");
    c->add_option("--checks", checks, "minimum number of identity evaluations");
    c->add_option("--primes", primes, "comma separated primes");
    c->add_option("--seed", seed, "random seed");
    c->add_option("--max-letters", max_letters)->check(CLI::Range(1, 64));
    c->add_option("--max-degree", max_degree)->check(CLI::Range(1, 64));
    sub = c;
  }
  int run(std::ostream& out) const {
    std::vector<PrimeField> fields;
    for (auto q : parse_primes(primes)) fields.emplace_back(q);
    std::mt19937_64 rng(seed);
    std::map<std::string, std::size_t> failures;
    std::size_t done = 0;
    for (std::size_t round = 0; done < checks; ++round) {
      const PrimeField& f = fields[round % fields.size()];
      std::uniform_int_distribution<std::size_t> len(1, max_letters);
      const std::size_t n = len(rng);
      std::vector<Polynomial> letters;
      for (std::size_t i = 0; i < n; ++i) letters.push_back(random_letter(f, rng, max_degree));
      std::uniform_int_distribution<Coeff> nonzero(1, f.modulus() - 1);
      FieldElement y = FieldElement::from_canonical(f, nonzero(rng));
      std::size_t split = n >= 2 ? std::uniform_int_distribution<std::size_t>(1, n - 1)(rng) : 0;
      IdentityReport rep = identity_suite(Word(f, std::move(letters)), split, y);
      for (const auto& c : rep.checks) {
        ++done;
        if (!c.passed) ++failures[c.name];
      }
    }
    std::size_t failed = 0;
    for (const auto& [name, k] : failures) failed += k;
    out << "identity checks " << done << ", failures " << failed << "\n";
    for (const auto& [name, k] : failures) out << "  " << name << ": " << k << "\n";
    return failed == 0 ? kOk : kDisagreement;
  }
  CLI::App* sub = nullptr;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions of rational and algebraic power series over F_p", "cf"};
  app.require_subcommand(1);
  RationalCmd rational;
  RootCmd root;
  VerifyCmd verify;
  FamilyCmd family;
  MeasureCmd measure;
  SeriesCmd series;
  IdentitiesCmd identities;
  rational.add(app);
  root.add(app);
  verify.add(app);
  family.add(app);
  measure.add(app);
  series.add(app);
  identities.add(app);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (rational.sub->parsed()) return rational.run(out);
    if (root.sub->parsed()) return root.run(out);
    if (verify.sub->parsed()) return verify.run(out);
    if (family.sub->parsed()) return family.run(out);
    if (measure.sub->parsed()) return measure.run(out);
    if (series.sub->parsed()) return series.run(out);
    if (identities.sub->parsed()) return identities.run(out);
  } catch (const SyntaxError& e) {
    err << "cf: syntax error at position " << e.position() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "cf: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "cf: " << e.what() << "\n";
    return kMathError;
  }
  return kUsage;
}

}  // namespace cfcli
