#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "distinv/graph.hpp"
#include "distinv/matrix.hpp"

namespace distinv {

/// Eigenvalues in ascending order together with the tolerance they were
/// computed to.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;

  /// 1-based, matching lambda_1 <= ... <= lambda_n.
  double lambda(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
  int size() const { return static_cast<int>(values.size()); }
};

/// 1e-9 * (1 + max |m_ij|).
double default_tolerance(const IntMatrix& m);

/// Cyclic Jacobi rotations until the off-diagonal sum of squares drops
/// below tol^2. Throws on non-symmetric input or tol <= 0.
Spectrum eigenvalues_symmetric(const IntMatrix& m, double tol);
Spectrum eigenvalues_symmetric(const IntMatrix& m);

/// One inequality left <= right (or left < right when strict).
struct BoundCheck {
  std::string name;
  double left = 0.0;
  double right = 0.0;
  double slack = 0.0;  // right - left
  bool strict = false;
  bool holds = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  std::vector<std::string> notes;  // e.g. why a lemma was not applicable

  bool all_hold() const;
  void add(std::string name, double left, double right, double tol, bool strict = false);
};

/// lambda_1(Atr) >= theta - lambda_n(A), lambda_1(Ddeg) >= delta - lambda_n(D),
/// lambda_n(Atr) <= Theta - lambda_1(A), lambda_n(Ddeg) <= Delta - lambda_1(D).
/// A negative tol selects default_tolerance over the matrices involved.
BoundReport check_extreme_bounds(const Graph& g, double tol = -1.0);

/// lambda_i(L) + min(tr - deg) <= lambda_i(Atr) <= lambda_i(L) + max(tr - deg), 1 <= i <= n.
BoundReport check_weyl_sandwich(const Graph& g, int i, double tol = -1.0);

/// min(tr - deg) <= lambda_1(Atr) <= mean(tr - deg).
BoundReport check_lambda1_bracket(const Graph& g, double tol = -1.0);

/// Phi^2 / (2 Delta) + min(tr - deg) < lambda_2(Atr) <= 2 Phi + max(tr - deg).
/// Needs 2 <= n <= 20.
BoundReport check_conductance_bracket(const Graph& g, double tol = -1.0);

/// Degree-regular: spec(Ddeg) = k - spec(D); transmission-regular:
/// spec(Atr) = r - spec(A); compared as sorted multisets. Lemmas that do
/// not apply are listed in notes.
BoundReport check_shift_lemmas(const Graph& g, double tol = -1.0);

/// Trace identities for powers of Atr, all in exact integers. The third
/// moment is compared against three candidate right-hand sides.
struct MomentReport {
  mpz_class trace1, wiener;
  mpz_class trace2, second_rhs;              // 2|E| + sum tr^2
  mpz_class trace3;
  mpz_class third_rhs_stated;                // 6|T| + Wdeg + sum tr^3
  mpz_class third_rhs_coefficient3;          // 6|T| + 3 Wdeg + sum tr^3
  mpz_class third_rhs_expansion;             // -6|T| + 3 Wdeg + sum tr^3
  std::int64_t triangles = 0;
  std::int64_t degree_weighted_wiener = 0;

  bool first_holds() const { return trace1 == wiener; }
  bool second_holds() const { return trace2 == second_rhs; }
  bool third_stated_holds() const { return trace3 == third_rhs_stated; }
  bool third_coefficient3_holds() const { return trace3 == third_rhs_coefficient3; }
  bool third_expansion_holds() const { return trace3 == third_rhs_expansion; }
  /// Name of the first third-moment form the data satisfies, or "none".
  std::string satisfied_third_form() const;
};

MomentReport check_moments(const Graph& g);

}  // namespace distinv
