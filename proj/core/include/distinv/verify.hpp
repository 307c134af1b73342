#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace distinv {

/// Outcome of one property sweep.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> info;

  bool ok() const { return failures.empty(); }
};

inline constexpr int kDefaultVerifyOrder = 7;

// n_max bounds the vertex count of every family a suite sweeps.

/// Extreme-eigenvalue bounds, lambda_1 bracket, Weyl sandwiches at every
/// index, conductance bracket and simplicity of lambda_1(Atr) over all
/// connected graphs with n <= min(n_max, 8); shift lemmas on cycles,
/// complete graphs and the Petersen graph.
SuiteResult verify_bounds(int n_max);

/// Closed-form Smith normal forms for K_n, K_{m,1} and trees against direct
/// computation, plus the tree distance determinant.
SuiteResult verify_closed_forms(int n_max);

/// Cone multigraph identity and spanning-tree counts for every connected
/// non-complete graph with n <= min(n_max, 8).
SuiteResult verify_sandpile(int n_max);

/// Exact trace identities for powers of Atr; third moment in all three
/// candidate forms.
SuiteResult verify_moments(int n_max);

std::vector<std::string_view> suite_names();
SuiteResult run_suite(std::string_view name, int n_max);

}  // namespace distinv
