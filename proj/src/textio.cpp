#include "monosite/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace monosite {

namespace {

constexpr unsigned kMaxExponent = 65536;
constexpr unsigned kMaxExpandedDegree = 4096;

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

FieldDescriptor parse_field_spec(std::string_view spec) {
  if (spec == "q" || spec == "Q" || spec == "rational") return FieldDescriptor{};
  std::uint64_t p = 0, m = 1;
  const auto caret = spec.find('^');
  if (!parse_uint(spec.substr(0, caret), p) ||
      (caret != std::string_view::npos && !parse_uint(spec.substr(caret + 1), m)))
    throw Error(ErrorKind::InvalidArgument, "field spec must be q, p or p^m: '" + std::string(spec) + "'");
  if (p > UINT32_MAX || !is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (m > 64) throw Error(ErrorKind::DegreeTooLarge, "extension degree too large");
  return build_extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(m));
}

std::string format_field_spec(const FieldDescriptor& fd) {
  if (!fd.is_finite()) return "q";
  if (fd.degree == 1) return std::to_string(fd.characteristic);
  return std::to_string(fd.characteristic) + "^" + std::to_string(fd.degree);
}

std::vector<std::string> default_variables(std::size_t n) {
  std::vector<std::string> v;
  if (n <= 3) {
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(names[i]);
  } else {
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  }
  return v;
}

std::vector<std::string> parse_ring_spec(std::string_view spec) {
  std::vector<std::string> vars;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    std::string_view tok = spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    vars.emplace_back(tok);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const std::size_t n = vars.size();
  std::vector<std::string> xyz, indexed;
  const char* names[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < n && i < 3; ++i) xyz.emplace_back(names[i]);
  for (std::size_t i = 1; i <= n; ++i) indexed.push_back("x" + std::to_string(i));
  if ((n <= 3 && vars == xyz) || (n <= 9 && vars == indexed)) return vars;
  throw Error(ErrorKind::InvalidArgument,
              "ring must be declared as x | x,y | x,y,z or x1,...,xn with n <= 9: '" + std::string(spec) + "'");
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

  SparsePolynomial run() {
    skip();
    if (pos_ >= src_.size()) fail("empty input");
    SparsePolynomial r = expr();
    skip();
    if (pos_ < src_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::SyntaxError) {
    throw Error(kind, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  SparsePolynomial constant(const FieldElement& c) const {
    return SparsePolynomial::constant(ring_.field, ring_.nvars(), c);
  }

  SparsePolynomial expr() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    SparsePolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      SparsePolynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '('; }

  SparsePolynomial term() {
    SparsePolynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, factor());
      } else if (starts_factor(c)) {
        acc = multiply(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
    guard(a.degree().value_or(0) + b.degree().value_or(0));
    return a * b;
  }

  void guard(std::uint64_t degree) {
    if (degree > kMaxExpandedDegree) fail("expansion exceeds the supported degree", ErrorKind::InstanceTooLarge);
  }

  SparsePolynomial factor() {
    SparsePolynomial b = base();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (at == pos_) fail("expected exponent");
      std::uint64_t e = 0;
      if (!parse_uint(src_.substr(at, pos_ - at), e) || e > kMaxExponent) {
        pos_ = at;
        fail("exponent exceeds " + std::to_string(kMaxExponent), ErrorKind::ExponentOverflow);
      }
      if (!b.is_monomial() && !b.is_zero()) guard(e * b.degree().value_or(0));
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  SparsePolynomial base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      SparsePolynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character");
  }

  SparsePolynomial literal() {
    const std::size_t at = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    mpz_class num(std::string(src_.substr(at, pos_ - at)));
    mpz_class den = 1;
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      const std::size_t dat = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (dat == pos_) fail("expected denominator");
      den = mpz_class(std::string(src_.substr(dat, pos_ - dat)));
      if (den == 0) {
        pos_ = dat;
        fail("zero denominator");
      }
    }
    try {
      return constant(ring_.field.from_rational(mpq_class(num, den)));
    } catch (const Error&) {
      pos_ = at;
      fail("denominator divisible by the characteristic");
    }
  }

  SparsePolynomial identifier() {
    const std::size_t at = pos_;
    ++pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(at, pos_ - at);
    for (std::size_t i = 0; i < ring_.variables.size(); ++i)
      if (ring_.variables[i] == name) return SparsePolynomial::variable(ring_.field, ring_.nvars(), i);
    if (name == "t" && ring_.field.is_finite() && ring_.field.degree() > 1) return constant(ring_.field.generator());
    pos_ = at;
    fail("unknown variable '" + std::string(name) + "'", ErrorKind::UnknownVariable);
  }

  std::string_view src_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

struct Coefficient {
  bool negative = false;
  bool unit = false;
  bool compound = false;
  std::string text;
};

Coefficient describe(const Field& field, const FieldElement& c) {
  Coefficient out;
  if (!field.is_finite()) {
    mpq_class v = c.value();
    out.negative = v < 0;
    if (out.negative) v = -v;
    out.unit = v == 1;
    out.text = v.get_str();
    out.compound = v.get_den() != 1;
    return out;
  }
  const std::uint64_t p = field.characteristic();
  if (c.index() < p) {
    std::uint64_t v = c.index();
    if (p > 2 && v > p / 2) {
      out.negative = true;
      v = p - v;
    }
    out.unit = v == 1;
    out.text = std::to_string(v);
    return out;
  }
  out.text = field.format(c);
  out.compound = out.text.find(' ') != std::string::npos;
  return out;
}

}  // namespace

SparsePolynomial parse_poly(std::string_view src, const Ring& ring) {
  if (ring.variables.empty()) throw Error(ErrorKind::InvalidArgument, "ring has no variables");
  return Parser(src, ring).run();
}

Monomial parse_monomial(std::string_view src, const Ring& ring) {
  SparsePolynomial p = parse_poly(src, ring);
  if (!p.is_monomial()) throw Error(ErrorKind::InvalidArgument, "expected a single monomial: '" + std::string(src) + "'");
  return p.leading_term().first;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m.exponents[i]) continue;
    any = true;
    os << variables.at(i);
    if (m.exponents[i] > 1) os << '^' << m.exponents[i];
  }
  return any ? os.str() : "1";
}

std::string format_poly(const SparsePolynomial& P, const std::vector<std::string>& variables) {
  if (P.is_zero()) return "0";
  std::vector<std::pair<Monomial, FieldElement>> terms(P.terms().begin(), P.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.exponents > b.first.exponents; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Coefficient co = describe(P.field(), c);
    if (first) {
      if (co.negative) os << '-';
    } else {
      os << (co.negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << (co.compound && P.field().is_finite() ? "(" + co.text + ")" : co.text);
      continue;
    }
    if (!co.unit) {
      if (co.compound && P.field().is_finite()) {
        os << '(' << co.text << ')';
      } else if (co.compound) {
        os << co.text << '*';
      } else {
        os << co.text;
      }
    }
    os << format_monomial(m, variables);
  }
  return os.str();
}

std::string format_poly(const SparsePolynomial& P) { return format_poly(P, default_variables(P.nvars())); }

}  // namespace monosite
