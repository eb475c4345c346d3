#include "hencky/quadrature.hpp"

#include <cmath>
#include <vector>

#include "hencky/errors.hpp"

namespace hencky {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult adaptive_simpson(const ScalarFunction& f, double a, double b,
                                  const QuadratureOptions& options) {
  QuadratureResult result;
  if (a == b) return result;

  auto eval = [&](double x) {
    ++result.evaluations;
    return f(x);
  };

  // Coarse pass over a few panels sets the scale for the relative tolerance.
  constexpr int kInitialPanels = 8;
  std::vector<Panel> stack;
  double coarse = 0;
  const double h = (b - a) / kInitialPanels;
  double f_left = eval(a);
  for (int i = 0; i < kInitialPanels; ++i) {
    const double pa = a + i * h;
    const double pb = i + 1 == kInitialPanels ? b : a + (i + 1) * h;
    const double pm = 0.5 * (pa + pb);
    const double fm = eval(pm);
    const double fb = eval(pb);
    const double whole = simpson(pa, pb, f_left, fm, fb);
    coarse += whole;
    stack.push_back({pa, pb, f_left, fm, fb, whole, 0});
    f_left = fb;
  }

  const double target =
      std::max(options.relative_tolerance * std::abs(coarse), options.absolute_tolerance);
  constexpr int kMaxDepth = 60;

  double total = 0;
  double error = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    // Local share of the tolerance is proportional to the panel width.
    const double local_tol = target * std::abs((p.b - p.a) / (b - a));

    if (std::abs(delta) <= 15.0 * local_tol || p.depth >= kMaxDepth) {
      total += left + right + delta / 15.0;
      error += std::abs(delta) / 15.0;
      continue;
    }
    if (result.evaluations >= options.budget) {
      // Fold in what is left so the caller gets the best available estimate.
      double rest = left + right + delta / 15.0;
      for (const Panel& q : stack) rest += q.whole;
      // Error of the panels still on the stack is unknown; the gap covers
      // the resolved panels and the one that triggered the stop.
      const double gap = std::abs(delta) / 15.0;
      throw AccuracyError("quadrature budget exhausted before reaching tolerance", total + rest,
                          error + gap);
    }
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, p.depth + 1});
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, p.depth + 1});
  }
  result.value = total;
  result.error = error;
  return result;
}

double composite_simpson(const ScalarFunction& f, double a, double b, std::size_t panels) {
  if (panels == 0) throw DomainError("panels", "at least one panel required");
  const double h = (b - a) / static_cast<double>(panels);
  double sum = f(a) + f(b);
  for (std::size_t i = 0; i < panels; ++i) {
    sum += 4.0 * f(a + (static_cast<double>(i) + 0.5) * h);
    if (i > 0) sum += 2.0 * f(a + static_cast<double>(i) * h);
  }
  return sum * h / 6.0;
}

Extremum golden_section_maximize(const ScalarFunction& f, double a, double b, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (std::abs(b - a) > tolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace hencky
