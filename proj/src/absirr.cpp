#include "absirr.hpp"

#include <algorithm>
#include <numeric>

namespace monosite::detail {

namespace {

using gf::Elem;
using gf::FiniteField;
using gf::UPoly;

unsigned total_degree(const GfTerms& F) {
  unsigned d = 0;
  for (const auto& [e, c] : F) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

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

// Pascal triangle mod p.
std::vector<std::vector<Elem>> binomials(const FiniteField& L, unsigned d) {
  std::vector<std::vector<Elem>> C(d + 1);
  for (unsigned n = 0; n <= d; ++n) {
    C[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) C[n][k] = L.add(C[n - 1][k - 1], C[n - 1][k]);
  }
  return C;
}

void add_into(const FiniteField& L, GfTerms& out, const Exps& e, Elem c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(e, c);
  if (inserted) return;
  it->second = L.add(it->second, c);
  if (it->second == 0) out.erase(it);
}

// x_i -> x_i + c_i * x_0 for i >= 1.
GfTerms linear_change(const FiniteField& L, const GfTerms& F, const std::vector<Elem>& c,
                      const std::vector<std::vector<Elem>>& C) {
  GfTerms out;
  const std::size_t n = c.size() + 1;
  for (const auto& [e, coef] : F) {
    Exps cur(n, 0);
    std::vector<std::uint32_t> j(n, 0);
    // Enumerate j_i in [0, e_i] for i >= 1.
    for (;;) {
      Elem v = coef;
      cur[0] = e[0];
      for (std::size_t i = 1; i < n; ++i) {
        cur[i] = j[i];
        const std::uint32_t moved = e[i] - j[i];
        cur[0] += moved;
        if (moved) v = L.mul(v, L.mul(C[e[i]][j[i]], L.pow(c[i - 1], moved)));
      }
      add_into(L, out, cur, v);
      std::size_t i = 1;
      while (i < n && j[i] == e[i]) j[i++] = 0;
      if (i == n) break;
      ++j[i];
    }
  }
  return out;
}

// x_i -> x_i + a_i for i >= 1.
GfTerms shift(const FiniteField& L, const GfTerms& F, const std::vector<Elem>& a,
              const std::vector<std::vector<Elem>>& C) {
  GfTerms out;
  const std::size_t n = a.size() + 1;
  for (const auto& [e, coef] : F) {
    Exps cur = e;
    std::vector<std::uint32_t> j(n, 0);
    for (;;) {
      Elem v = coef;
      for (std::size_t i = 1; i < n; ++i) {
        cur[i] = j[i];
        const std::uint32_t rest = e[i] - j[i];
        if (rest) v = L.mul(v, L.mul(C[e[i]][j[i]], L.pow(a[i - 1], rest)));
      }
      add_into(L, out, cur, v);
      std::size_t i = 1;
      while (i < n && j[i] == e[i]) j[i++] = 0;
      if (i == n) break;
      ++j[i];
    }
  }
  return out;
}

// Monomials in the k auxiliary variables of degree <= d, ordered by degree.
struct YBasis {
  unsigned k = 0;
  unsigned d = 0;
  std::vector<Exps> mons;
  std::vector<unsigned> deg;
  std::map<Exps, unsigned> index;
  std::vector<int> mul;

  YBasis(unsigned k_, unsigned d_) : k(k_), d(d_) {
    Exps cur(k, 0);
    for (unsigned t = 0; t <= d; ++t) gen(cur, 0, t);
    for (unsigned i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
    const std::size_t N = mons.size();
    mul.assign(N * N, -1);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (deg[i] + deg[j] > d) continue;
        Exps m = mons[i];
        for (unsigned v = 0; v < k; ++v) m[v] += mons[j][v];
        mul[i * N + j] = static_cast<int>(index.at(m));
      }
    }
  }

  void gen(Exps& cur, unsigned pos, unsigned left) {
    if (pos + 1 == k) {
      cur[pos] = left;
      unsigned t = 0;
      for (auto v : cur) t += v;
      mons.push_back(cur);
      deg.push_back(t);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      cur[pos] = v;
      gen(cur, pos + 1, left - v);
    }
  }

  std::size_t size() const { return mons.size(); }
};

using XPoly = std::vector<UPoly>;

XPoly to_xpoly(const YBasis& B, const GfTerms& F) {
  XPoly out(B.size());
  for (const auto& [e, c] : F) {
    Exps y(e.begin() + 1, e.end());
    auto& u = out[B.index.at(y)];
    if (u.size() <= e[0]) u.resize(e[0] + 1, 0);
    u[e[0]] = c;
  }
  for (auto& u : out) gf::trim(u);
  return out;
}

XPoly xmul(const FiniteField& L, const YBasis& B, const XPoly& A, const XPoly& Bp, unsigned maxY, int maxTotal) {
  const std::size_t N = B.size();
  XPoly C(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (A[i].empty()) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (Bp[j].empty() || B.deg[i] + B.deg[j] > maxY) continue;
      const int idx = B.mul[i * N + j];
      if (idx < 0) continue;
      if (maxTotal >= 0 && static_cast<int>(B.deg[idx]) > maxTotal) continue;
      C[idx] = gf::uadd(L, C[idx], gf::umul(L, A[i], Bp[j]));
    }
  }
  if (maxTotal >= 0) {
    for (std::size_t i = 0; i < N; ++i) {
      const int lim = maxTotal - static_cast<int>(B.deg[i]);
      if (lim < 0) {
        C[i].clear();
      } else if (static_cast<int>(C[i].size()) > lim + 1) {
        C[i].resize(lim + 1);
        gf::trim(C[i]);
      }
    }
  }
  return C;
}

void truncate(const YBasis& B, XPoly& X, unsigned maxTotal) {
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (B.deg[i] > maxTotal) {
      X[i].clear();
    } else if (X[i].size() > maxTotal - B.deg[i] + 1) {
      X[i].resize(maxTotal - B.deg[i] + 1);
      gf::trim(X[i]);
    }
  }
}

bool has_nonzero_derivative(const GfTerms& F, std::size_t var, std::uint32_t p) {
  for (const auto& [e, c] : F)
    if (e[var] % p != 0) return true;
  return false;
}

}  // namespace

bool irreducible_over(const FiniteField& L, const GfTerms& F0, OracleStats& stats) {
  const unsigned d = total_degree(F0);
  const std::size_t n = F0.begin()->first.size();
  const std::uint32_t p = L.characteristic();
  const auto C = binomials(L, d);

  // Make F monic of x_0-degree d with a nonzero x_0-derivative.
  GfTerms F;
  {
    std::optional<std::size_t> main;
    for (std::size_t j = 0; j < n && !main; ++j) {
      Exps pure(n, 0);
      pure[j] = d;
      if (F0.count(pure) && has_nonzero_derivative(F0, j, p)) main = j;
    }
    if (main) {
      for (const auto& [e, c] : F0) {
        Exps f = e;
        std::swap(f[0], f[*main]);
        F.emplace(f, c);
      }
    } else {
      const std::size_t k = n - 1;
      const std::uint64_t side = d + 2;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= side;
      bool found = false;
      for (std::uint64_t t = 1; t < total && !found; ++t) {
        std::vector<Elem> c(k);
        std::uint64_t r = t;
        for (std::size_t i = 0; i < k; ++i) {
          c[i] = r % side;
          r /= side;
        }
        GfTerms G = linear_change(L, F0, c, C);
        Exps pure(n, 0);
        pure[0] = d;
        if (G.count(pure) && has_nonzero_derivative(G, 0, p)) {
          F = std::move(G);
          found = true;
        }
      }
      if (!found) throw Error(ErrorKind::InternalBound, "no admissible linear change of variables");
    }
    Exps pure(n, 0);
    pure[0] = d;
    const Elem ilc = L.inv(F.at(pure));
    for (auto& [e, c] : F) c = L.mul(c, ilc);
  }

  const unsigned k = static_cast<unsigned>(n - 1);
  const YBasis B(k, d);
  const XPoly G0 = to_xpoly(B, F);

  // Squarefree specialization on a grid of D + 1 points per coordinate.
  const std::uint64_t side = std::uint64_t{d} * (d - 1) + 1;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= side;
  std::optional<std::vector<Elem>> point;
  std::vector<std::vector<Elem>> powers(k, std::vector<Elem>(d + 1));
  for (std::uint64_t t = 0; t < total && !point; ++t) {
    std::vector<Elem> a(k);
    std::uint64_t r = t;
    for (unsigned i = 0; i < k; ++i) {
      a[i] = r % side;
      r /= side;
      powers[i][0] = 1;
      for (unsigned e = 1; e <= d; ++e) powers[i][e] = L.mul(powers[i][e - 1], a[i]);
    }
    UPoly g;
    for (std::size_t idx = 0; idx < B.size(); ++idx) {
      if (G0[idx].empty()) continue;
      Elem w = 1;
      for (unsigned i = 0; i < k; ++i) w = L.mul(w, powers[i][B.mons[idx][i]]);
      if (w == 0) continue;
      UPoly term = G0[idx];
      for (auto& c : term) c = L.mul(c, w);
      g = gf::uadd(L, g, term);
    }
    if (gf::usquarefree(L, g)) point = a;
  }
  // The discriminant vanishes on the whole grid, hence identically.
  if (!point) return false;

  const XPoly G = to_xpoly(B, shift(L, F, *point, C));
  std::mt19937_64 rng(0x68656e73ULL);
  const auto factors = gf::factor_squarefree(L, G[0], rng);
  const std::size_t r = factors.size();
  if (r == 1) return true;

  // Hensel lifting modulo (Y)^(d+1).
  std::vector<UPoly> inverses(r);
  for (std::size_t i = 0; i < r; ++i) {
    UPoly cof, rem;
    gf::udivmod(L, G[0], factors[i], cof, rem);
    UPoly s, t;
    gf::uxgcd(L, cof, factors[i], s, t);
    inverses[i] = gf::umod(L, s, factors[i]);
  }
  std::vector<XPoly> H(r, XPoly(B.size()));
  for (std::size_t i = 0; i < r; ++i) H[i][0] = factors[i];
  for (unsigned lvl = 1; lvl <= d; ++lvl) {
    XPoly prod = H[0];
    for (std::size_t i = 1; i < r; ++i) prod = xmul(L, B, prod, H[i], lvl, -1);
    for (std::size_t idx = 0; idx < B.size(); ++idx) {
      if (B.deg[idx] != lvl) continue;
      UPoly e = gf::usub(L, G[idx], prod[idx]);
      if (e.empty()) continue;
      for (std::size_t i = 0; i < r; ++i) H[i][idx] = gf::umod(L, gf::umul(L, e, inverses[i]), factors[i]);
    }
  }

  // Recombination: a true factor is the truncated product of a subset.
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    unsigned degA = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) degA += static_cast<unsigned>(gf::udeg(factors[i]));
    if (2 * degA > d) continue;
    ++stats.candidates_tested;
    XPoly A, Bq;
    bool firstA = true, firstB = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) {
        A = firstA ? H[i] : xmul(L, B, A, H[i], d, static_cast<int>(degA));
        firstA = false;
      } else {
        Bq = firstB ? H[i] : xmul(L, B, Bq, H[i], d, static_cast<int>(d - degA));
        firstB = false;
      }
    }
    truncate(B, A, degA);
    truncate(B, Bq, d - degA);
    if (xmul(L, B, A, Bq, d, -1) == G) return false;
  }
  return true;
}

bool abs_irreducible_gf(const FiniteField& base, const GfTerms& F0, unsigned extension_cap, OracleStats& stats) {
  if (F0.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  const unsigned d = total_degree(F0);
  if (d == 0) throw Error(ErrorKind::PreconditionViolation, "constant polynomial");
  ++stats.irreducibility_tests;
  if (d == 1) return true;
  const std::size_t n0 = F0.begin()->first.size();

  // Drop absent variables; a common variable factor means reducible.
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < n0; ++i) {
    std::uint32_t lo = UINT32_MAX, hi = 0;
    for (const auto& [e, c] : F0) {
      lo = std::min(lo, e[i]);
      hi = std::max(hi, e[i]);
    }
    if (lo > 0) return false;
    if (hi > 0) used.push_back(i);
  }
  if (used.size() < 2) return false;
  const std::uint32_t p = base.characteristic();
  bool frobenius = true;
  for (const auto& [e, c] : F0)
    for (auto v : e)
      if (v % p) frobenius = false;
  if (frobenius) return false;

  const std::uint64_t need = std::max<std::uint64_t>(std::uint64_t{d} * (d - 1) + 1, d + 2);
  for (unsigned r : prime_divisors(d)) {
    unsigned u = r;
    for (;;) {
      std::uint64_t size = 1;
      bool big = false;
      for (unsigned i = 0; i < u && !big; ++i) {
        if (size > need) big = true;
        size *= base.size();
      }
      if (big || size >= need) break;
      u += r;
    }
    if (extension_cap && u > extension_cap)
      throw Error(ErrorKind::InstanceTooLarge, "irreducibility test needs an extension beyond the configured cap");
    const unsigned M = base.degree() * u;
    if (M > gf::max_degree_for(p)) throw Error(ErrorKind::InstanceTooLarge, "extension field too large");
    const auto L = gf::get_field(p, M);
    const gf::Embedding emb(base, *L);
    GfTerms F;
    for (const auto& [e, c] : F0) {
      Exps f(used.size());
      for (std::size_t i = 0; i < used.size(); ++i) f[i] = e[used[i]];
      F.emplace(std::move(f), emb(c));
    }
    if (!irreducible_over(*L, F, stats)) return false;
  }
  return true;
}

}  // namespace monosite::detail
