#include "distinv/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace distinv {

namespace {

constexpr int kMaxSweeps = 100;

double tolerance_for(std::initializer_list<const IntMatrix*> matrices, double requested) {
  if (requested > 0.0) return requested;
  double tol = 0.0;
  for (const IntMatrix* m : matrices) tol = std::max(tol, default_tolerance(*m));
  return tol;
}

struct TransmissionExcess {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

TransmissionExcess excess(const DistanceProfile& p) {
  TransmissionExcess e;
  std::int64_t lo = 0, hi = 0, sum = 0;
  for (int u = 0; u < p.n; ++u) {
    const std::int64_t r = p.tr[static_cast<std::size_t>(u)] - p.deg[static_cast<std::size_t>(u)];
    lo = u == 0 ? r : std::min(lo, r);
    hi = u == 0 ? r : std::max(hi, r);
    sum += r;
  }
  e.min = static_cast<double>(lo);
  e.max = static_cast<double>(hi);
  e.mean = static_cast<double>(sum) / p.n;
  return e;
}

bool all_equal(const auto& values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

// Compares spec(target) with c - spec(base) as sorted multisets.
void add_reflection(BoundReport& report, const std::string& label, const Spectrum& target, const Spectrum& base,
                    double c, double tol) {
  const int n = target.size();
  for (int i = 1; i <= n; ++i) {
    const double expected = c - base.lambda(n + 1 - i);
    const double got = target.lambda(i);
    BoundCheck chk;
    chk.name = label + " i=" + std::to_string(i);
    chk.left = got;
    chk.right = expected;
    chk.slack = std::abs(got - expected);
    chk.holds = chk.slack <= tol;
    report.checks.push_back(std::move(chk));
  }
}

}  // namespace

double default_tolerance(const IntMatrix& m) { return 1e-9 * (1.0 + m.max_norm().get_d()); }

Spectrum eigenvalues_symmetric(const IntMatrix& m, double tol) {
  if (!(tol > 0.0)) throw Error("eigenvalue tolerance must be positive");
  if (!m.symmetric()) throw Error("eigenvalues_symmetric: matrix is not symmetric");
  const int n = m.size();
  std::vector<double> a = m.to_doubles();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (off < tol * tol) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
      }
    }
  }

  Spectrum spec;
  spec.tol = tol;
  spec.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) spec.values[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(spec.values.begin(), spec.values.end());
  return spec;
}

Spectrum eigenvalues_symmetric(const IntMatrix& m) { return eigenvalues_symmetric(m, default_tolerance(m)); }

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

void BoundReport::add(std::string name, double left, double right, double tol, bool strict) {
  BoundCheck c;
  c.name = std::move(name);
  c.left = left;
  c.right = right;
  c.slack = right - left;
  c.strict = strict;
  // Within tol an equality cannot be told apart from a strict inequality.
  c.holds = strict ? left < right + tol : left <= right + tol;
  checks.push_back(std::move(c));
}

BoundReport check_extreme_bounds(const Graph& g, double tol) {
  const DistanceProfile p = distance_profile(g);
  const IntMatrix a = build(g, MatrixKind::A, p);
  const IntMatrix d = build(g, MatrixKind::D, p);
  const IntMatrix atr = build(g, MatrixKind::Atr, p);
  const IntMatrix ddeg = build(g, MatrixKind::Ddeg, p);
  tol = tolerance_for({&a, &d, &atr, &ddeg}, tol);
  const int n = g.order();
  const Spectrum sa = eigenvalues_symmetric(a, tol);
  const Spectrum sd = eigenvalues_symmetric(d, tol);
  const Spectrum satr = eigenvalues_symmetric(atr, tol);
  const Spectrum sddeg = eigenvalues_symmetric(ddeg, tol);

  BoundReport r;
  r.add("lambda_1(Atr) >= theta - lambda_n(A)", static_cast<double>(p.min_transmission()) - sa.lambda(n),
        satr.lambda(1), tol);
  r.add("lambda_1(Ddeg) >= delta - lambda_n(D)", p.min_degree() - sd.lambda(n), sddeg.lambda(1), tol);
  r.add("lambda_n(Atr) <= Theta - lambda_1(A)", satr.lambda(n),
        static_cast<double>(p.max_transmission()) - sa.lambda(1), tol);
  r.add("lambda_n(Ddeg) <= Delta - lambda_1(D)", sddeg.lambda(n), p.max_degree() - sd.lambda(1), tol);
  return r;
}

BoundReport check_weyl_sandwich(const Graph& g, int i, double tol) {
  const int n = g.order();
  if (i < 1 || i > n) throw Error("eigenvalue index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  const DistanceProfile p = distance_profile(g);
  const IntMatrix l = build(g, MatrixKind::L, p);
  const IntMatrix atr = build(g, MatrixKind::Atr, p);
  tol = tolerance_for({&l, &atr}, tol);
  const Spectrum sl = eigenvalues_symmetric(l, tol);
  const Spectrum satr = eigenvalues_symmetric(atr, tol);
  const TransmissionExcess e = excess(p);

  const std::string idx = std::to_string(i);
  BoundReport r;
  r.add("lambda_" + idx + "(L) + lambda_1(R) <= lambda_" + idx + "(Atr)", sl.lambda(i) + e.min, satr.lambda(i), tol);
  r.add("lambda_" + idx + "(Atr) <= lambda_" + idx + "(L) + lambda_n(R)", satr.lambda(i), sl.lambda(i) + e.max, tol);
  return r;
}

BoundReport check_lambda1_bracket(const Graph& g, double tol) {
  const DistanceProfile p = distance_profile(g);
  const IntMatrix atr = build(g, MatrixKind::Atr, p);
  tol = tolerance_for({&atr}, tol);
  const Spectrum satr = eigenvalues_symmetric(atr, tol);
  const TransmissionExcess e = excess(p);
  BoundReport r;
  r.add("min(tr - deg) <= lambda_1(Atr)", e.min, satr.lambda(1), tol);
  r.add("lambda_1(Atr) <= mean(tr - deg)", satr.lambda(1), e.mean, tol);
  return r;
}

BoundReport check_conductance_bracket(const Graph& g, double tol) {
  const Conductance phi = conductance(g);  // validates 2 <= n <= 20
  const DistanceProfile p = distance_profile(g);
  const IntMatrix atr = build(g, MatrixKind::Atr, p);
  tol = tolerance_for({&atr}, tol);
  const Spectrum satr = eigenvalues_symmetric(atr, tol);
  const TransmissionExcess e = excess(p);
  const double phi_value = phi.value.get_d();
  BoundReport r;
  r.add("Phi^2/(2 Delta) + min(tr - deg) < lambda_2(Atr)", phi_value * phi_value / (2.0 * p.max_degree()) + e.min,
        satr.lambda(2), tol, /*strict=*/true);
  r.add("lambda_2(Atr) <= 2 Phi + max(tr - deg)", satr.lambda(2), 2.0 * phi_value + e.max, tol);
  return r;
}

BoundReport check_shift_lemmas(const Graph& g, double tol) {
  const DistanceProfile p = distance_profile(g);
  BoundReport r;

  if (all_equal(p.deg)) {
    const IntMatrix d = build(g, MatrixKind::D, p);
    const IntMatrix ddeg = build(g, MatrixKind::Ddeg, p);
    const double t = tolerance_for({&d, &ddeg}, tol);
    add_reflection(r, "lambda_i(Ddeg) = k - lambda_{n+1-i}(D)", eigenvalues_symmetric(ddeg, t),
                   eigenvalues_symmetric(d, t), p.deg.front(), t);
  } else {
    r.notes.emplace_back("degree shift lemma not applicable: graph is not regular");
  }

  if (all_equal(p.tr)) {
    const IntMatrix a = build(g, MatrixKind::A, p);
    const IntMatrix atr = build(g, MatrixKind::Atr, p);
    const double t = tolerance_for({&a, &atr}, tol);
    add_reflection(r, "lambda_i(Atr) = r - lambda_{n+1-i}(A)", eigenvalues_symmetric(atr, t),
                   eigenvalues_symmetric(a, t), static_cast<double>(p.tr.front()), t);
  } else {
    r.notes.emplace_back("transmission shift lemma not applicable: graph is not transmission-regular");
  }
  return r;
}

std::string MomentReport::satisfied_third_form() const {
  std::string out;
  auto append = [&](bool ok, const char* name) {
    if (!ok) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  append(third_stated_holds(), "stated");
  append(third_coefficient3_holds(), "coefficient3");
  append(third_expansion_holds(), "expansion");
  return out.empty() ? "none" : out;
}

MomentReport check_moments(const Graph& g) {
  const DistanceProfile p = distance_profile(g);
  const IntMatrix atr = build(g, MatrixKind::Atr, p);
  const IntMatrix sq = atr * atr;
  const IntMatrix cube = sq * atr;
  const WienerIndices w = wiener_indices(p);

  MomentReport r;
  r.triangles = triangle_count(g);
  r.degree_weighted_wiener = w.degree_weighted;
  r.trace1 = atr.trace();
  r.wiener = static_cast<long>(w.wiener);
  r.trace2 = sq.trace();
  r.trace3 = cube.trace();

  mpz_class sum_sq = 0, sum_cube = 0;
  for (auto t : p.tr) {
    const mpz_class v = static_cast<long>(t);
    sum_sq += v * v;
    sum_cube += v * v * v;
  }
  const mpz_class six_t = 6 * static_cast<long>(r.triangles);
  const mpz_class wdeg = static_cast<long>(w.degree_weighted);
  r.second_rhs = 2 * g.edge_count() + sum_sq;
  r.third_rhs_stated = six_t + wdeg + sum_cube;
  r.third_rhs_coefficient3 = six_t + 3 * wdeg + sum_cube;
  r.third_rhs_expansion = -six_t + 3 * wdeg + sum_cube;
  return r;
}

}  // namespace distinv
