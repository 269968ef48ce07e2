#include "monosite/poly.hpp"

#include <algorithm>
#include <numeric>

#include "gf.hpp"

namespace monosite {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r = *this;
  for (auto& e : r.exponents) e *= k;
  return r;
}

unsigned Monomial::exponent_gcd() const {
  unsigned g = 0;
  for (auto e : exponents) g = std::gcd(g, e);
  return g;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

SparsePolynomial::SparsePolynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

SparsePolynomial SparsePolynomial::constant(const Field& field, std::size_t nvars, const FieldElement& c) {
  SparsePolynomial p(field, nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Field& field, const Monomial& m, const FieldElement& c) {
  SparsePolynomial p(field, m.nvars());
  p.add_term(m, c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Field& field, const Monomial& m) {
  return monomial(field, m, field.one());
}

SparsePolynomial SparsePolynomial::variable(const Field& field, std::size_t nvars, std::size_t i) {
  Monomial m = Monomial::one(nvars);
  m.exponents.at(i) = 1;
  return monomial(field, m);
}

std::optional<unsigned> SparsePolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool SparsePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::pair<Monomial, FieldElement> SparsePolynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading term");
  return *terms_.begin();
}

FieldElement SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::vector<Monomial> SparsePolynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

void SparsePolynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (m.nvars() != nvars_) throw Error(ErrorKind::RingMismatch, "monomial has the wrong number of variables");
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

SparsePolynomial SparsePolynomial::scaled(const FieldElement& c) const {
  SparsePolynomial r(field_, nvars_);
  if (field_.is_zero(c)) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(a, c));
  return r;
}

SparsePolynomial SparsePolynomial::operator-() const { return scaled(field_.neg(field_.one())); }

SparsePolynomial SparsePolynomial::pow(unsigned k) const {
  SparsePolynomial r = constant(field_, nvars_, field_.one());
  SparsePolynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

void require_same_ring(const SparsePolynomial& P, const SparsePolynomial& Q) {
  if (P.nvars() != Q.nvars() || !(P.field() == Q.field()))
    throw Error(ErrorKind::RingMismatch, "polynomials belong to different rings");
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_same_ring(a, b);
  SparsePolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_same_ring(a, b);
  SparsePolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, a.field_.neg(c));
  return r;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  require_same_ring(a, b);
  SparsePolynomial r(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
  return r;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
  return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

SparsePolynomial arith(const SparsePolynomial& P, const SparsePolynomial& Q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return P + Q;
    case ArithOp::Sub: return P - Q;
    case ArithOp::Mul: return P * Q;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

Monomial monomial_gcd(std::span<const Monomial> ms) {
  if (ms.empty()) throw Error(ErrorKind::EmptySet, "gcd of an empty monomial set");
  Monomial g = ms.front();
  for (const auto& m : ms.subspan(1))
    for (std::size_t i = 0; i < g.exponents.size(); ++i) g.exponents[i] = std::min(g.exponents[i], m.exponents[i]);
  return g;
}

Monomial monomial_gcd(const SparsePolynomial& P) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "monomial gcd of the zero polynomial");
  auto s = P.support();
  return monomial_gcd(std::span<const Monomial>(s));
}

bool set_relatively_prime(const SparsePolynomial& P, std::span<const Monomial> qs) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "relative primality with the zero polynomial");
  if (qs.empty()) throw Error(ErrorKind::EmptySet, "empty monomial set");
  Monomial g = monomial_gcd(qs);
  Monomial gp = monomial_gcd(P);
  if (g.nvars() != gp.nvars()) throw Error(ErrorKind::RingMismatch, "monomial has the wrong number of variables");
  for (std::size_t i = 0; i < g.exponents.size(); ++i)
    if (std::min(g.exponents[i], gp.exponents[i]) != 0) return false;
  return true;
}

bool in_frobenius_subring(const SparsePolynomial& P) {
  const std::uint32_t p = P.field().characteristic();
  if (p == 0) throw Error(ErrorKind::CharacteristicZero, "Frobenius subring needs positive characteristic");
  for (const auto& [m, c] : P.terms())
    for (auto e : m.exponents)
      if (e % p != 0) return false;
  return true;
}

namespace {

std::optional<mpz_class> integer_root(const mpz_class& v, unsigned e) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), e) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<FieldElement> coefficient_root(const Field& field, const FieldElement& c, unsigned e) {
  if (e == 1 || field.is_zero(c)) return c;
  if (!field.is_finite()) {
    const mpq_class& v = c.value();
    if (v < 0 && e % 2 == 0) return std::nullopt;
    mpz_class num = abs(v.get_num());
    auto rn = integer_root(num, e);
    auto rd = integer_root(v.get_den(), e);
    if (!rn || !rd) return std::nullopt;
    mpq_class r(*rn, *rd);
    if (v < 0) r = -r;
    return FieldElement::rational(r);
  }
  const auto& F = *field.engine();
  gf::UPoly f(e + 1, 0);
  f[0] = F.neg(c.index());
  f[e] = 1;
  std::mt19937_64 rng(0x726f6f74ULL);
  auto rs = gf::roots(F, f, rng);
  if (rs.empty()) return std::nullopt;
  return FieldElement::finite(rs.front());
}

namespace {

std::optional<SparsePolynomial> pth_root_poly(const SparsePolynomial& P) {
  const Field& field = P.field();
  const std::uint32_t p = field.characteristic();
  SparsePolynomial r(field, P.nvars());
  for (const auto& [m, c] : P.terms()) {
    Monomial mm = m;
    for (auto& e : mm.exponents) {
      if (e % p != 0) return std::nullopt;
      e /= p;
    }
    r.add_term(mm, pth_root(field, c));
  }
  return r;
}

std::uint64_t monomials_up_to(std::size_t n, unsigned d) {
  // C(n + d, n), saturating.
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    r = r * (d + i) / i;
    if (r > (std::uint64_t{1} << 40)) return r;
  }
  return r;
}

}  // namespace

std::optional<SparsePolynomial> eth_root(const SparsePolynomial& P, unsigned e) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root of the zero polynomial");
  if (e < 2) throw Error(ErrorKind::InvalidArgument, "root exponent must exceed 1");
  const Field& field = P.field();
  const std::uint32_t p = field.characteristic();
  if (p != 0 && e % p == 0) {
    auto r = pth_root_poly(P);
    if (!r) return std::nullopt;
    if (e == p) return r;
    return eth_root(*r, e / p);
  }
  const unsigned deg = *P.degree();
  if (deg % e != 0) return std::nullopt;
  auto [lm, lc] = P.leading_term();
  Monomial sm = lm;
  for (auto& x : sm.exponents) {
    if (x % e != 0) return std::nullopt;
    x /= e;
  }
  auto lroot = coefficient_root(field, lc, e);
  if (!lroot) return std::nullopt;
  SparsePolynomial S = SparsePolynomial::monomial(field, sm, *lroot);
  // e * LT(S)^(e-1)
  const FieldElement denom = field.mul(field.from_int(e), field.pow(*lroot, e - 1));
  const Monomial dm = sm.pow(e - 1);
  Monomial last = sm;
  const std::uint64_t cap = monomials_up_to(P.nvars(), deg / e) + 1;
  for (std::uint64_t it = 0;; ++it) {
    if (it > cap) throw Error(ErrorKind::InternalBound, "e-th root iteration cap exceeded");
    SparsePolynomial R = P - S.pow(e);
    if (R.is_zero()) return S;
    auto [rm, rc] = R.leading_term();
    if (!dm.divides(rm)) return std::nullopt;
    Monomial tm = rm;
    for (std::size_t i = 0; i < tm.exponents.size(); ++i) tm.exponents[i] -= dm.exponents[i];
    if (!grlex_less(tm, last)) return std::nullopt;
    S.add_term(tm, field.div(rc, denom));
    last = tm;
  }
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Largest e with monic M = S^e, S monic.
std::pair<SparsePolynomial, unsigned> monic_power(const SparsePolynomial& M) {
  for (unsigned q : prime_divisors(*M.degree())) {
    auto r = eth_root(M, q);
    if (!r) continue;
    auto [base, e] = monic_power(*r);
    return {base, e * q};
  }
  return {M, 1};
}

}  // namespace

std::optional<PurePowerWitness> pure_power(const SparsePolynomial& P) {
  if (P.is_zero() || P.is_constant()) return std::nullopt;
  const Field& field = P.field();
  const FieldElement lc = P.leading_term().second;
  SparsePolynomial M = P.scaled(field.inv(lc));
  auto [base, e] = monic_power(M);
  if (e < 2) return std::nullopt;
  if (auto c = coefficient_root(field, lc, e)) return PurePowerWitness{base.scaled(*c), e, field.one()};
  return PurePowerWitness{base, e, lc};
}

}  // namespace monosite
