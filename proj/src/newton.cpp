#include "monosite/newton.hpp"

#include <algorithm>
#include <numeric>

namespace monosite {

NewtonSet make_newton_set(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return NewtonSet{std::move(points)};
}

NewtonSet newton_points(const SparsePolynomial& P) {
  if (P.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no Newton points");
  std::vector<LatticePoint> pts;
  for (const auto& [m, c] : P.terms()) pts.emplace_back(m.exponents.begin(), m.exponents.end());
  return make_newton_set(std::move(pts));
}

LineFit collinear(const NewtonSet& set) {
  const auto& pts = set.points;
  if (pts.empty()) throw Error(ErrorKind::EmptySet, "empty Newton set");
  if (pts.size() == 1) return SinglePoint{pts.front()};
  const std::size_t n = pts.front().size();
  const LatticePoint& p0 = pts.front();
  LatticePoint delta(n);
  std::int64_t g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    delta[i] = pts[1][i] - p0[i];
    g = std::gcd(g, delta[i]);
  }
  std::size_t lead = 0;
  while (delta[lead] == 0) ++lead;
  if (delta[lead] < 0) g = -g;
  for (auto& v : delta) v /= g;
  std::vector<std::int64_t> ks;
  ks.reserve(pts.size());
  for (const auto& q : pts) {
    std::int64_t d = q[lead] - p0[lead];
    if (d % delta[lead] != 0) return NotCollinear{};
    std::int64_t k = d / delta[lead];
    for (std::size_t i = 0; i < n; ++i)
      if (q[i] - p0[i] != k * delta[i]) return NotCollinear{};
    ks.push_back(k);
  }
  const std::int64_t kmin = *std::min_element(ks.begin(), ks.end());
  PrimitiveDirection dir;
  dir.delta = delta;
  dir.base.resize(n);
  for (std::size_t i = 0; i < n; ++i) dir.base[i] = p0[i] + kmin * delta[i];
  for (auto k : ks) dir.steps.push_back(k - kmin);
  std::sort(dir.steps.begin(), dir.steps.end());
  return dir;
}

bool joint_line_test(const SparsePolynomial& P, std::span<const Monomial> extra) {
  auto set = newton_points(P);
  for (const auto& m : extra) {
    if (m.nvars() != P.nvars()) throw Error(ErrorKind::RingMismatch, "monomial has the wrong number of variables");
    set.points.emplace_back(m.exponents.begin(), m.exponents.end());
  }
  return !std::holds_alternative<NotCollinear>(collinear(make_newton_set(std::move(set.points))));
}

std::pair<Monomial, Monomial> split_direction(const LatticePoint& delta) {
  if (std::all_of(delta.begin(), delta.end(), [](auto v) { return v == 0; }))
    throw Error(ErrorKind::ZeroDirection, "zero direction vector");
  Monomial m1 = Monomial::one(delta.size()), m2 = Monomial::one(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] > 0) m1.exponents[i] = static_cast<std::uint32_t>(delta[i]);
    if (delta[i] < 0) m2.exponents[i] = static_cast<std::uint32_t>(-delta[i]);
  }
  return {m1, m2};
}

}  // namespace monosite
