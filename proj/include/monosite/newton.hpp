#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "monosite/poly.hpp"

namespace monosite {

using LatticePoint = std::vector<std::int64_t>;

struct NewtonSet {
  // Sorted, without repetitions.
  std::vector<LatticePoint> points;
};

// Every point equals base + k * delta for some step k; the smallest step is 0.
struct PrimitiveDirection {
  LatticePoint delta;
  LatticePoint base;
  std::vector<std::int64_t> steps;

  std::int64_t max_step() const { return steps.empty() ? 0 : steps.back(); }
};

struct SinglePoint {
  LatticePoint point;
};

struct NotCollinear {};

using LineFit = std::variant<NotCollinear, SinglePoint, PrimitiveDirection>;

NewtonSet newton_points(const SparsePolynomial& P);
NewtonSet make_newton_set(std::vector<LatticePoint> points);
LineFit collinear(const NewtonSet& set);
bool joint_line_test(const SparsePolynomial& P, std::span<const Monomial> extra);
std::pair<Monomial, Monomial> split_direction(const LatticePoint& delta);

}  // namespace monosite
