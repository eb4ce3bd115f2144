#include "cablejones/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "cablejones/errors.hpp"

namespace cablejones {

namespace {

struct GaussLegendreRule {
  // Nonnegative nodes on [-1, 1] and their weights; the rule is symmetric.
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<Real, Real> legendre_pair(unsigned n, const Real& x) {
  Real prev(1, x.bits());
  Real cur = x;
  for (unsigned k = 1; k < n; ++k) {
    Real next = (x * cur * static_cast<long>(2 * k + 1) - prev * static_cast<long>(k)) /
                static_cast<long>(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, prev};
}

GaussLegendreRule build_rule(unsigned n, Real::Bits bits) {
  const Real::Bits wide = bits + 32;
  GaussLegendreRule rule;
  for (unsigned i = 1; i <= (n + 1) / 2; ++i) {
    const double guess = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    Real x = Real::from_double(guess, wide);
    Real derivative(wide);
    for (int iter = 0; iter < 200; ++iter) {
      auto [pn, pn1] = legendre_pair(n, x);
      derivative = (x * pn - pn1) * static_cast<long>(n) / (square(x) - 1);
      const Real step = pn / derivative;
      x -= step;
      if (step.is_zero() || step.exponent2() < x.exponent2() - static_cast<long>(wide) + 4) {
        auto [qn, qn1] = legendre_pair(n, x);
        derivative = (x * qn - qn1) * static_cast<long>(n) / (square(x) - 1);
        break;
      }
    }
    const Real weight = Real(2, wide) / ((1 - square(x)) * square(derivative));
    rule.nodes.push_back(x.rounded(bits));
    rule.weights.push_back(weight.rounded(bits));
  }
  return rule;
}

const GaussLegendreRule& cached_rule(unsigned n, Real::Bits bits) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, Real::Bits>, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, bits}];
  if (!slot) {
    slot = std::make_unique<GaussLegendreRule>(build_rule(n, bits));
  }
  return *slot;
}

class PanelIntegrator {
 public:
  PanelIntegrator(const std::function<Real(const Real&)>& f, const GaussLegendreRule& rule,
                  unsigned order, Real::Bits bits)
      : f_(f), rule_(rule), odd_(order % 2 == 1), bits_(bits) {}

  Real panel(const Real& lo, const Real& hi) const {
    const Real mid = (lo + hi) / 2;
    const Real half = (hi - lo) / 2;
    Real acc(bits_);
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const Real& node = rule_.nodes[i];
      if (odd_ && i + 1 == rule_.nodes.size()) {
        // Middle node of an odd-order rule (x = 0) is counted once.
        acc += rule_.weights[i] * f_(mid);
      } else {
        const Real offset = half * node;
        acc += rule_.weights[i] * (f_(mid + offset) + f_(mid - offset));
      }
    }
    return acc * half;
  }

 private:
  const std::function<Real(const Real&)>& f_;
  const GaussLegendreRule& rule_;
  bool odd_;
  Real::Bits bits_;
};

}  // namespace

QuadratureResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                           const Real& tol, const QuadratureOptions& options) {
  const Real::Bits bits = a.bits();
  if (tol.sign() <= 0) {
    throw DomainError("integrate: tolerance must be positive");
  }
  if (options.order < 2 || options.min_panels == 0) {
    throw DomainError("integrate: order >= 2 and min_panels >= 1 required");
  }
  if (a == b) {
    return {Real(bits), Real(bits), 0};
  }
  if (b < a) {
    QuadratureResult flipped = integrate(f, b.rounded(bits), a, tol, options);
    flipped.value = -flipped.value;
    return flipped;
  }

  const GaussLegendreRule& rule = cached_rule(options.order, bits);
  const PanelIntegrator integrator(f, rule, options.order, bits);
  const Real length = b - a;

  // Global refinement: split the panel with the largest coarse/fine disagreement
  // until the disagreements sum to at most tol. Ties go to the leftmost panel.
  struct Panel {
    Real lo, hi, left, right, diff;
    unsigned depth;
  };
  auto make_panel = [&](Real lo, Real hi, const Real& whole, unsigned depth) {
    const Real mid = (lo + hi) / 2;
    Real left = integrator.panel(lo, mid);
    Real right = integrator.panel(mid, hi);
    Real diff = abs(left + right - whole);
    return Panel{std::move(lo), std::move(hi), std::move(left), std::move(right), std::move(diff), depth};
  };
  auto less_urgent = [](const Panel& x, const Panel& y) {
    if (x.diff != y.diff) {
      return x.diff < y.diff;
    }
    return y.lo < x.lo;
  };

  std::vector<Panel> heap;
  for (unsigned p = 0; p < options.min_panels; ++p) {
    Real lo = a + length * static_cast<long>(p) / static_cast<long>(options.min_panels);
    Real hi = p + 1 == options.min_panels
                  ? b.rounded(bits)
                  : a + length * static_cast<long>(p + 1) / static_cast<long>(options.min_panels);
    const Real whole = integrator.panel(lo, hi);
    heap.push_back(make_panel(std::move(lo), std::move(hi), whole, 0));
  }
  std::make_heap(heap.begin(), heap.end(), less_urgent);

  auto current_error = [&] {
    Real e(bits);
    for (const auto& panel : heap) {
      e += panel.diff;
    }
    return e;
  };

  // Rounding alone limits the absolute accuracy to about 2^-bits of the result.
  Real estimate(bits);
  for (const auto& panel : heap) {
    estimate += panel.left + panel.right;
  }
  const long floor_exp = std::max(estimate.exponent2(), 0L) - static_cast<long>(bits) + 16;
  if (tol.exponent2() < floor_exp) {
    throw ConvergenceError("integrate: tolerance " + tol.to_string(3) +
                           " is below the resolution of " + std::to_string(bits) + "-bit arithmetic");
  }

  Real error = current_error();
  while (error > tol) {
    std::pop_heap(heap.begin(), heap.end(), less_urgent);
    Panel worst = std::move(heap.back());
    heap.pop_back();
    if (worst.depth + 1 >= options.max_depth || heap.size() + 2 > options.max_panels) {
      throw ConvergenceError("integrate: tolerance " + tol.to_string(3) + " not reached; estimate " +
                             error.to_string(3) + " with the worst panel near " + worst.lo.to_string(10));
    }
    const Real mid = (worst.lo + worst.hi) / 2;
    heap.push_back(make_panel(worst.lo, mid, worst.left, worst.depth + 1));
    std::push_heap(heap.begin(), heap.end(), less_urgent);
    heap.push_back(make_panel(mid, worst.hi, worst.right, worst.depth + 1));
    std::push_heap(heap.begin(), heap.end(), less_urgent);
    // Re-sum rather than update incrementally so the estimate never drifts.
    error = current_error();
  }

  // Sum left to right so the value depends only on the final partition.
  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  Real total(bits);
  for (const auto& panel : heap) {
    total += panel.left + panel.right;
  }
  const std::size_t panels = heap.size();
  return {total, error, panels};
}

}  // namespace cablejones
