#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace frsim::testing {

std::vector<double> naive_lower(const std::vector<double>& r, const std::vector<double>& mu) {
  const std::size_t n = mu.size();
  std::vector<double> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    double best = 1.0;
    for (std::size_t y = 0; y < n; ++y) {
      double v = 1.0 - r[x * n + y];
      if (mu[y] > v) v = mu[y];
      if (v < best) best = v;
    }
    out[x] = best;
  }
  return out;
}

std::vector<double> naive_upper(const std::vector<double>& r, const std::vector<double>& mu) {
  const std::size_t n = mu.size();
  std::vector<double> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    double best = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      double v = r[x * n + y];
      if (mu[y] < v) v = mu[y];
      if (v > best) best = v;
    }
    out[x] = best;
  }
  return out;
}

namespace {

struct Tri {
  double a, b, c;
};

double tri_at(const Tri& t, double x) {
  if (x == t.b) return 1.0;
  if (x <= t.a || x >= t.c) return 0.0;
  return x < t.b ? (x - t.a) / (t.b - t.a) : (t.c - x) / (t.c - t.b);
}

double degree(const LinguisticVariable& v, const std::string& term, double x) {
  x = std::clamp(x, v.lo(), v.hi());
  for (const Term& t : v.terms()) {
    if (t.name == term) return tri_at({t.mf.a, t.mf.b, t.mf.c}, x);
  }
  return 0.0;
}

struct Clipped {
  Tri t;
  double h;
  double at(double x) const { return std::min(h, tri_at(t, x)); }
};

}  // namespace

std::optional<double> exact_centroid(const FisConfig& config, double lower, double upper) {
  // Strength per output term (max over rules with that consequent).
  std::vector<Clipped> shapes;
  for (const Term& term : config.output().terms()) {
    double h = 0.0;
    for (const Rule& rule : config.rules()) {
      if (rule.consequent.term != term.name) continue;
      double s = 1.0;
      for (const Condition& c : rule.antecedents) {
        const LinguisticVariable& v =
            c.variable == config.lower().name() ? config.lower() : config.upper();
        s = std::min(s, degree(v, c.term, c.variable == config.lower().name() ? lower : upper));
      }
      h = std::max(h, s);
    }
    if (h > 0.0) shapes.push_back({{term.mf.a, term.mf.b, term.mf.c}, h});
  }
  if (shapes.empty()) return std::nullopt;

  const double lo = config.output().lo();
  const double hi = config.output().hi();
  std::vector<double> xs = {lo, hi};
  for (const Clipped& s : shapes) {
    xs.insert(xs.end(), {s.t.a, s.t.b, s.t.c});
    if (s.t.b > s.t.a) xs.push_back(s.t.a + s.h * (s.t.b - s.t.a));
    if (s.t.c > s.t.b) xs.push_back(s.t.c - s.h * (s.t.c - s.t.b));
  }
  auto clean = [&] {
    for (double& x : xs) x = std::clamp(x, lo, hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  clean();

  // Inside each interval every shape is linear; add the crossings of every
  // pair so the pointwise max is linear between consecutive points. Values
  // are read at the quarter points so vertical edges on the ends never count.
  auto line = [](const Clipped& s, double x0, double x1, double x) {
    const double q0 = x0 + 0.25 * (x1 - x0), q1 = x0 + 0.75 * (x1 - x0);
    const double f0 = s.at(q0), f1 = s.at(q1);
    return f0 + (f1 - f0) * (x - q0) / (q1 - q0);
  };
  const std::vector<double> base = xs;
  for (std::size_t k = 0; k + 1 < base.size(); ++k) {
    const double x0 = base[k], x1 = base[k + 1];
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      for (std::size_t j = i + 1; j < shapes.size(); ++j) {
        const double d0 = line(shapes[i], x0, x1, x0) - line(shapes[j], x0, x1, x0);
        const double d1 = line(shapes[i], x0, x1, x1) - line(shapes[j], x0, x1, x1);
        if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
          xs.push_back(x0 + (x1 - x0) * d0 / (d0 - d1));
        }
      }
    }
  }
  clean();

  double mass = 0.0;
  double moment = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double x0 = xs[k], x1 = xs[k + 1], h = x1 - x0;
    if (h <= 0.0) continue;
    double m0 = 0.0, m1 = 0.0;
    for (const Clipped& s : shapes) {
      m0 = std::max(m0, line(s, x0, x1, x0));
      m1 = std::max(m1, line(s, x0, x1, x1));
    }
    mass += 0.5 * (m0 + m1) * h;
    moment += h / 6.0 * (x0 * (2 * m0 + m1) + x1 * (m0 + 2 * m1));
  }
  if (mass <= 0.0) return std::nullopt;
  return moment / mass;
}

}  // namespace frsim::testing
