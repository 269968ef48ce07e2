#include "monosite/fields.hpp"

#include <sstream>

#include "gf.hpp"

namespace monosite {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t FieldDescriptor::cardinality() const {
  if (!is_finite()) throw Error(ErrorKind::NotFinite, "the rational field is infinite");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) q *= characteristic;
  return q;
}

namespace {

constexpr std::uint32_t kMaxCharacteristic = std::uint32_t{1} << 31;

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw Error(ErrorKind::InstanceTooLarge, "characteristic too large");
}

}  // namespace

FieldDescriptor build_extension(std::uint32_t p, unsigned m) {
  check_prime(p);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (m > 12) throw Error(ErrorKind::DegreeTooLarge, "extension degree " + std::to_string(m) + " exceeds 12");
  if (m > gf::max_degree_for(p)) throw Error(ErrorKind::InstanceTooLarge, "field too large");
  FieldDescriptor fd;
  fd.characteristic = p;
  fd.degree = m;
  if (m == 1) {
    fd.kind = FieldKind::Prime;
  } else {
    fd.kind = FieldKind::Extension;
    fd.modulus = gf::get_field(p, m)->modulus();
  }
  return fd;
}

Field::Field() = default;

Field Field::finite(std::uint32_t p, unsigned m) {
  check_prime(p);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (m > gf::max_degree_for(p)) throw Error(ErrorKind::InstanceTooLarge, "field too large");
  Field f;
  f.engine_ = gf::get_field(p, m);
  f.fd_.characteristic = p;
  f.fd_.degree = m;
  f.fd_.kind = m == 1 ? FieldKind::Prime : FieldKind::Extension;
  if (m > 1) f.fd_.modulus = f.engine_->modulus();
  return f;
}

Field Field::from_descriptor(const FieldDescriptor& fd) {
  if (fd.kind == FieldKind::Rational) {
    if (fd.characteristic != 0 || fd.degree != 1)
      throw Error(ErrorKind::InvalidArgument, "rational field has characteristic 0 and degree 1");
    return Field();
  }
  check_prime(fd.characteristic);
  if (fd.kind == FieldKind::Prime) {
    if (fd.degree != 1) throw Error(ErrorKind::InvalidArgument, "prime field must have degree 1");
    return finite(fd.characteristic, 1);
  }
  if (fd.degree < 2 || fd.modulus.size() != fd.degree + 1 || fd.modulus.back() != 1)
    throw Error(ErrorKind::InvalidArgument, "extension modulus must be monic of the stated degree");
  for (auto c : fd.modulus)
    if (c >= fd.characteristic) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
  if (fd.degree > gf::max_degree_for(fd.characteristic)) throw Error(ErrorKind::InstanceTooLarge, "field too large");
  auto canonical = gf::get_field(fd.characteristic, fd.degree);
  Field f;
  f.fd_ = fd;
  if (canonical->modulus() == fd.modulus) {
    f.engine_ = canonical;
  } else {
    if (!gf::is_irreducible_rabin(fd.characteristic, fd.modulus))
      throw Error(ErrorKind::InvalidArgument, "extension modulus is reducible");
    f.engine_ = std::make_shared<const gf::FiniteField>(fd.characteristic, fd.modulus);
  }
  return f;
}

std::uint64_t Field::size() const {
  require_finite();
  return engine_->size();
}

void Field::require_finite() const {
  if (!is_finite()) throw Error(ErrorKind::NotFinite, "operation requires a finite field");
}

FieldElement Field::zero() const { return is_finite() ? FieldElement::finite(0) : FieldElement::rational(0); }
FieldElement Field::one() const { return is_finite() ? FieldElement::finite(1) : FieldElement::rational(1); }

FieldElement Field::from_int(std::int64_t v) const {
  if (!is_finite()) return FieldElement::rational(mpq_class(static_cast<long>(v)));
  return FieldElement::finite(engine_->from_int(v));
}

FieldElement Field::from_rational(const mpq_class& v) const {
  if (!is_finite()) return FieldElement::rational(v);
  mpz_class p = characteristic();
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
  auto n = engine_->from_int(static_cast<std::int64_t>(num.get_ui()));
  auto d = engine_->from_int(static_cast<std::int64_t>(den.get_ui()));
  return FieldElement::finite(engine_->div(n, d));
}

FieldElement Field::element(std::uint64_t index) const {
  require_finite();
  if (index >= engine_->size()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  return FieldElement::finite(index);
}

FieldElement Field::generator() const {
  require_finite();
  if (degree() < 2) throw Error(ErrorKind::InvalidArgument, "prime fields have no generator symbol");
  return FieldElement::finite(characteristic());
}

bool Field::is_zero(const FieldElement& a) const {
  return a.is_finite() ? a.index() == 0 : a.value() == 0;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (is_finite()) return FieldElement::finite(engine_->add(a.index(), b.index()));
  return FieldElement::rational(a.value() + b.value());
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (is_finite()) return FieldElement::finite(engine_->sub(a.index(), b.index()));
  return FieldElement::rational(a.value() - b.value());
}

FieldElement Field::neg(const FieldElement& a) const {
  if (is_finite()) return FieldElement::finite(engine_->neg(a.index()));
  return FieldElement::rational(-a.value());
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (is_finite()) return FieldElement::finite(engine_->mul(a.index(), b.index()));
  return FieldElement::rational(a.value() * b.value());
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (is_finite()) return FieldElement::finite(engine_->inv(a.index()));
  return FieldElement::rational(1 / a.value());
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
  if (is_finite()) return FieldElement::finite(engine_->pow(a.index(), e));
  mpq_class r = 1, base = a.value();
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return FieldElement::rational(r);
}

std::vector<FieldElement> Field::elements() const {
  require_finite();
  std::vector<FieldElement> out;
  out.reserve(engine_->size());
  for (std::uint64_t i = 0; i < engine_->size(); ++i) out.push_back(FieldElement::finite(i));
  return out;
}

std::string Field::format(const FieldElement& a) const {
  if (!is_finite()) return a.value().get_str();
  if (degree() == 1) return std::to_string(a.index());
  auto d = engine_->digits(a.index());
  std::ostringstream os;
  bool first = true;
  for (unsigned i = degree(); i-- > 0;) {
    if (!d[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i];
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

FieldElement pth_root(const Field& field, const FieldElement& c) {
  if (!field.is_finite()) throw Error(ErrorKind::CharacteristicZero, "p-th roots need positive characteristic");
  return field.pow(c, field.size() / field.characteristic());
}

}  // namespace monosite
