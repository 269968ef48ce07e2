#include "gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <stdexcept>

namespace monosite::gf {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 21;
constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 62;
constexpr std::uint32_t kNone = 0xffffffffu;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

unsigned max_degree_for(std::uint32_t p) {
  unsigned m = 0;
  std::uint64_t q = 1;
  while (q <= kSizeLimit / p) {
    q *= p;
    ++m;
  }
  return m;
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  if (m_ < 1 || modulus_.back() != 1) throw std::invalid_argument("modulus must be monic of positive degree");
  if (m_ > max_degree_for(p_)) throw std::length_error("field too large");
  ppow_.resize(m_ + 1);
  ppow_[0] = 1;
  for (unsigned i = 1; i <= m_; ++i) ppow_[i] = ppow_[i - 1] * p_;
  q_ = ppow_[m_];
  if (m_ == 1) {
    mode_ = Mode::Prime;
    if (p_ <= (1u << 20)) {
      prime_inv_.assign(p_, 0);
      if (p_ > 1) prime_inv_[1] = 1;
      for (std::uint64_t a = 2; a < p_; ++a)
        prime_inv_[a] = static_cast<std::uint32_t>((p_ - (p_ / a) * std::uint64_t{prime_inv_[p_ % a]} % p_) % p_);
    }
  } else if (q_ <= kTableLimit) {
    mode_ = Mode::Slow;
    build_tables();
    mode_ = Mode::Table;
  } else {
    mode_ = Mode::Slow;
  }
}

void FiniteField::build_tables() {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto is_primitive = [&](Elem g) {
    if (g == 0) return false;
    for (auto r : factors)
      if (pow(g, order / r) == 1) return false;
    return true;
  };
  Elem g = 0;
  for (Elem c = p_; c < q_; ++c) {
    if (is_primitive(c)) {
      g = c;
      break;
    }
  }
  log_.assign(q_, kNone);
  exp_.assign(2 * order + 1, 0);
  const bool linear = g < 2 * std::uint64_t{p_} && g / p_ == 1;
  const std::uint32_t c0 = static_cast<std::uint32_t>(g % p_);
  std::vector<std::uint32_t> d(m_, 0), nd(m_, 0);
  d[0] = 1;
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    if (linear) {
      // x * (t + c0) on digits, reduced by the monic modulus.
      const std::uint32_t top = d[m_ - 1];
      nd[0] = 0;
      for (unsigned k = 1; k < m_; ++k) nd[k] = d[k - 1];
      for (unsigned k = 0; k < m_; ++k) {
        std::uint64_t v = nd[k] + std::uint64_t{c0} * d[k] + std::uint64_t{p_ - modulus_[k]} * top;
        nd[k] = static_cast<std::uint32_t>(v % p_);
      }
      std::swap(d, nd);
      x = from_digits(d);
    } else {
      x = slow_mul(x, g);
    }
  }
  for (std::uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
  zech_.assign(order, kNone);
  for (std::uint64_t i = 0; i < order; ++i) {
    Elem v = exp_[i];
    Elem w = (v % p_ == p_ - 1) ? v - (p_ - 1) : v + 1;
    if (w != 0) zech_[i] = log_[w];
  }
}

Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem FiniteField::slow_add(Elem a, Elem b) const {
  Elem r = 0;
  for (unsigned i = 0; i < m_ && (a | b); ++i) {
    std::uint64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * ppow_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem FiniteField::add(Elem a, Elem b) const {
  switch (mode_) {
    case Mode::Prime: {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    case Mode::Table: {
      if (p_ == 2) return a ^ b;
      if (a == 0) return b;
      if (b == 0) return a;
      std::uint32_t la = log_[a], lb = log_[b];
      if (la > lb) std::swap(la, lb);
      std::uint32_t z = zech_[lb - la];
      if (z == kNone) return 0;
      return exp_[std::uint64_t{la} + z];
    }
    case Mode::Slow:
      return slow_add(a, b);
  }
  return 0;
}

Elem FiniteField::neg(Elem a) const {
  if (a == 0) return 0;
  switch (mode_) {
    case Mode::Prime:
      return p_ - a;
    case Mode::Table:
      if (p_ == 2) return a;
      return exp_[std::uint64_t{log_[a]} + (q_ - 1) / 2];
    case Mode::Slow: {
      Elem r = 0;
      for (unsigned i = 0; i < m_ && a; ++i) {
        Elem d = a % p_;
        if (d) r += (p_ - d) * ppow_[i];
        a /= p_;
      }
      return r;
    }
  }
  return 0;
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> d(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

Elem FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  Elem r = 0;
  for (unsigned i = static_cast<unsigned>(std::min<std::size_t>(d.size(), m_)); i-- > 0;) r = r * p_ + d[i] % p_;
  return r;
}

Elem FiniteField::slow_mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t da[64], db[64], prod[128] = {};
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned k = 2 * m_ - 1; k-- > m_;) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[k - m_ + j] = (prod[k - m_ + j] + (p_ - modulus_[j]) % p_ * c) % p_;
    }
    prod[k] = 0;
  }
  Elem r = 0;
  for (unsigned i = m_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

Elem FiniteField::mul(Elem a, Elem b) const {
  switch (mode_) {
    case Mode::Prime:
      return a * b % p_;
    case Mode::Table:
      if (a == 0 || b == 0) return 0;
      return exp_[std::uint64_t{log_[a]} + log_[b]];
    case Mode::Slow:
      return slow_mul(a, b);
  }
  return 0;
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (mode_ == Mode::Table) {
    std::uint64_t order = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (e % order)) % order];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero");
  switch (mode_) {
    case Mode::Prime:
      if (!prime_inv_.empty()) return prime_inv_[a];
      return pow(a, p_ - 2);
    case Mode::Table:
      return exp_[(q_ - 1) - log_[a]];
    case Mode::Slow:
      return pow(a, q_ - 2);
  }
  return 0;
}

// ---- univariate ----

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly uadd(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0;
    Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

UPoly usub(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0;
    Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

UPoly umul(const FiniteField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

void udivmod(const FiniteField& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  trim(rem);
  const int db = udeg(b);
  if (udeg(rem) < db) {
    quo.clear();
    return;
  }
  quo.assign(rem.size() - b.size() + 1, 0);
  const Elem ilc = F.inv(b.back());
  for (int k = udeg(rem); k >= db; --k) {
    Elem c = rem[k];
    if (!c) continue;
    c = F.mul(c, ilc);
    quo[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, b[j]));
  }
  rem.resize(db);
  trim(rem);
  trim(quo);
}

UPoly umod(const FiniteField& F, UPoly a, const UPoly& b) {
  UPoly q, r;
  udivmod(F, a, b, q, r);
  return r;
}

UPoly umonic(const FiniteField& F, const UPoly& a) {
  if (a.empty()) return a;
  Elem ilc = F.inv(a.back());
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], ilc);
  return r;
}

UPoly ugcd(const FiniteField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(F, a);
}

UPoly uxgcd(const FiniteField& F, const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    UPoly q, r;
    udivmod(F, r0, r1, q, r);
    UPoly s2 = usub(F, s0, umul(F, q, s1));
    UPoly t2 = usub(F, t0, umul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  Elem ilc = F.inv(r0.back());
  auto scale = [&](UPoly& v) {
    for (auto& c : v) c = F.mul(c, ilc);
    trim(v);
  };
  scale(r0);
  scale(s0);
  scale(t0);
  s = s0;
  t = t0;
  return r0;
}

UPoly uderiv(const FiniteField& F, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), a[i]);
  trim(r);
  return r;
}

UPoly upowmod(const FiniteField& F, UPoly base, std::uint64_t e, const UPoly& mod) {
  UPoly r{1};
  r = umod(F, r, mod);
  base = umod(F, base, mod);
  while (e) {
    if (e & 1) r = umod(F, umul(F, r, base), mod);
    e >>= 1;
    if (e) base = umod(F, umul(F, base, base), mod);
  }
  return r;
}

UPoly ufrobenius(const FiniteField& F, const UPoly& base, unsigned k, const UPoly& mod) {
  UPoly r = umod(F, base, mod);
  for (unsigned i = 0; i < k; ++i) r = upowmod(F, r, F.size(), mod);
  return r;
}

bool usquarefree(const FiniteField& F, const UPoly& f) {
  UPoly d = uderiv(F, f);
  if (d.empty()) return udeg(f) <= 0;
  return udeg(ugcd(F, f, d)) == 0;
}

namespace {

UPoly random_poly(const FiniteField& F, int deg_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
  UPoly a(deg_below);
  for (auto& c : a) c = dist(rng);
  trim(a);
  return a;
}

void equal_degree(const FiniteField& F, const UPoly& g, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (udeg(g) == d) {
    out.push_back(g);
    return;
  }
  const bool even = F.characteristic() == 2;
  for (;;) {
    UPoly a = random_poly(F, udeg(g), rng);
    if (udeg(a) < 1) continue;
    UPoly b;
    if (even) {
      // trace to F_2 of a over F_{q^d}
      unsigned steps = F.degree() * static_cast<unsigned>(d);
      UPoly cur = a;
      b = a;
      for (unsigned i = 1; i < steps; ++i) {
        cur = umod(F, umul(F, cur, cur), g);
        b = uadd(F, b, cur);
      }
    } else {
      // a^((q^d-1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      UPoly norm = umod(F, a, g), cur = norm;
      for (int i = 1; i < d; ++i) {
        cur = upowmod(F, cur, F.size(), g);
        norm = umod(F, umul(F, norm, cur), g);
      }
      b = usub(F, upowmod(F, norm, (F.size() - 1) / 2, g), UPoly{1});
    }
    UPoly h = ugcd(F, g, b);
    if (udeg(h) > 0 && udeg(h) < udeg(g)) {
      UPoly q, r;
      udivmod(F, g, h, q, r);
      equal_degree(F, h, d, rng, out);
      equal_degree(F, umonic(F, q), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<UPoly> factor_squarefree(const FiniteField& F, const UPoly& f0, std::mt19937_64& rng) {
  std::vector<UPoly> out;
  UPoly f = umonic(F, f0);
  if (udeg(f) <= 0) return out;
  if (udeg(f) == 1) {
    out.push_back(f);
    return out;
  }
  const UPoly x{0, 1};
  UPoly h = umod(F, x, f);
  for (int i = 1; 2 * i <= udeg(f); ++i) {
    h = upowmod(F, h, F.size(), f);
    UPoly g = ugcd(F, f, usub(F, h, x));
    if (udeg(g) > 0) {
      equal_degree(F, g, i, rng, out);
      UPoly q, r;
      udivmod(F, f, g, q, r);
      f = umonic(F, q);
      h = umod(F, h, f);
    }
  }
  if (udeg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<Elem> roots(const FiniteField& F, const UPoly& f0, std::mt19937_64& rng) {
  std::vector<Elem> out;
  UPoly f = f0;
  trim(f);
  if (udeg(f) <= 0) return out;
  f = umonic(F, f);
  if (f[0] == 0) {
    out.push_back(0);
    while (!f.empty() && f[0] == 0) f.erase(f.begin());
  }
  if (udeg(f) >= 1) {
    const UPoly x{0, 1};
    UPoly g = ugcd(F, f, usub(F, upowmod(F, x, F.size(), f), x));
    if (udeg(g) >= 1) {
      std::vector<UPoly> lin;
      equal_degree(F, g, 1, rng, lin);
      for (auto& l : lin) out.push_back(F.neg(umonic(F, l)[0]));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- modulus search ----

bool is_irreducible_rabin(std::uint32_t p, const std::vector<std::uint32_t>& f32) {
  FiniteField Fp(p, {0, 1});
  UPoly f(f32.begin(), f32.end());
  trim(f);
  const int n = udeg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  f = umonic(Fp, f);
  const UPoly x{0, 1};
  if (ufrobenius(Fp, x, static_cast<unsigned>(n), f) != umod(Fp, x, f)) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    UPoly h = ufrobenius(Fp, x, static_cast<unsigned>(n / r), f);
    if (udeg(ugcd(Fp, f, usub(Fp, h, x))) != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned m) {
  std::vector<std::uint32_t> f(m + 1, 0);
  f[m] = 1;
  if (m == 1) return f;
  // c0 is the most significant position in the lexicographic order; c0 = 0 is never irreducible.
  f[0] = 1;
  for (;;) {
    if (is_irreducible_rabin(p, f)) return f;
    int k = static_cast<int>(m) - 1;
    while (k >= 0 && f[k] == p - 1) {
      f[k] = 0;
      --k;
    }
    if (k < 0) throw std::logic_error("no irreducible polynomial found");
    ++f[k];
  }
}

FieldPtr get_field(std::uint32_t p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto fld = std::make_shared<const FiniteField>(p, least_irreducible(p, m));
  cache.emplace(key, fld);
  return fld;
}

Elem embedding_image(const FiniteField& small, const FiniteField& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0)
    throw std::invalid_argument("no embedding between these fields");
  if (small.degree() == 1) return 0;
  static std::mutex mu;
  using Key = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  static std::map<Key, Elem> cache;
  const Key key{small.characteristic(), small.modulus(), big.modulus()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  UPoly f;
  for (auto c : small.modulus()) f.push_back(big.from_int(c));
  std::mt19937_64 rng(0x6d6f6e6fULL);
  auto rs = roots(big, f, rng);
  if (rs.empty()) throw std::logic_error("modulus has no root in extension");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, rs.front());
  return rs.front();
}

Embedding::Embedding(const FiniteField& small, const FiniteField& big) : small_(&small), big_(&big) {
  Elem theta = embedding_image(small, big);
  powers_.resize(small.degree());
  Elem cur = 1;
  for (unsigned i = 0; i < small.degree(); ++i) {
    powers_[i] = cur;
    cur = big.mul(cur, theta);
  }
}

Elem Embedding::operator()(Elem a) const {
  if (small_->degree() == 1) return a;
  Elem r = 0;
  auto d = small_->digits(a);
  for (unsigned i = 0; i < d.size(); ++i) {
    if (d[i]) r = big_->add(r, big_->mul(big_->from_int(d[i]), powers_[i]));
  }
  return r;
}

}  // namespace monosite::gf
