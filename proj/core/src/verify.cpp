#include "distinv/verify.hpp"

#include <algorithm>
#include <map>

#include "distinv/closed_forms.hpp"
#include "distinv/exact_linalg.hpp"
#include "distinv/generators.hpp"
#include "distinv/graph6.hpp"
#include "distinv/sandpile.hpp"
#include "distinv/spectra.hpp"

namespace distinv {

namespace {

void record(SuiteResult& r, const BoundReport& report, const std::string& where) {
  for (const auto& c : report.checks) {
    ++r.checks;
    if (!c.holds) {
      r.failures.push_back(where + ": " + c.name + " (left " + std::to_string(c.left) + ", right " +
                           std::to_string(c.right) + ")");
    }
  }
}

void expect(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) r.failures.push_back(what);
}

std::vector<std::vector<Graph>> corpus(int n_max) {
  return generate_connected_graphs_up_to(std::clamp(n_max, 1, kMaxBuiltinConnectedOrder));
}

}  // namespace

SuiteResult verify_bounds(int n_max) {
  SuiteResult r;
  r.name = "bounds";
  std::size_t graphs_seen = 0;
  for (const auto& level : corpus(n_max)) {
    for (const Graph& g : level) {
      ++graphs_seen;
      const std::string where = write_graph6(g);
      record(r, check_extreme_bounds(g), where);
      record(r, check_lambda1_bracket(g), where);
      for (int i = 1; i <= g.order(); ++i) record(r, check_weyl_sandwich(g, i), where);
      if (g.order() >= 2) {
        record(r, check_conductance_bracket(g), where);
        const IntMatrix atr = build(g, MatrixKind::Atr);
        const Spectrum s = eigenvalues_symmetric(atr);
        expect(r, s.lambda(2) - s.lambda(1) > s.tol, where + ": lambda_1(Atr) is not simple");
      }
    }
  }
  r.info.push_back("connected graphs swept: " + std::to_string(graphs_seen));

  std::vector<Graph> regular;
  for (int n = 3; n <= std::min(n_max, 12); ++n) regular.push_back(graphs::cycle(n));
  for (int n = 1; n <= std::min(n_max, 8); ++n) regular.push_back(graphs::complete(n));
  if (n_max >= 10) regular.push_back(graphs::petersen());
  for (const Graph& g : regular) {
    const BoundReport shifts = check_shift_lemmas(g);
    expect(r, shifts.notes.empty(), write_graph6(g) + ": shift lemma unexpectedly not applicable");
    record(r, shifts, write_graph6(g));
  }
  r.info.push_back("regular graphs checked for shift lemmas: " + std::to_string(regular.size()));
  return r;
}

SuiteResult verify_closed_forms(int n_max) {
  SuiteResult r;
  r.name = "closed-forms";
  for (int n = 2; n <= n_max; ++n) {
    for (MatrixKind kind : {MatrixKind::L, MatrixKind::Atr, MatrixKind::Ddeg, MatrixKind::Q, MatrixKind::AtrPlus,
                            MatrixKind::DdegPlus}) {
      const SnfResult direct = snf(build(graphs::complete(n), kind));
      const SnfResult formula = snf_complete(kind, n);
      expect(r, direct == formula,
             "K_" + std::to_string(n) + " " + std::string(to_string(kind)) + ": direct " + direct.to_string() +
                 " vs formula " + formula.to_string());
    }
  }
  for (int m = 1; m + 1 <= n_max; ++m) {
    for (MatrixKind kind : {MatrixKind::Ddeg, MatrixKind::DdegPlus}) {
      const SnfResult direct = snf(build(graphs::star(m), kind));
      const SnfResult formula = snf_star(kind, m);
      expect(r, direct == formula,
             "K_{" + std::to_string(m) + ",1} " + std::string(to_string(kind)) + ": direct " + direct.to_string() +
                 " vs formula " + formula.to_string());
    }
  }
  std::size_t trees = 0;
  for (int n = 2; n <= std::min(n_max, kMaxTreeOrder); ++n) {
    const SnfResult formula = snf_tree_distance(n);
    const mpz_class det = tree_distance_determinant(n);
    for_each_tree(n, [&](const Graph& t) {
      ++trees;
      const IntMatrix d = build(t, MatrixKind::D);
      const SnfResult direct = snf(d);
      expect(r, direct == formula, write_graph6(t) + ": SNF(D) " + direct.to_string() + " vs " + formula.to_string());
      expect(r, determinant(d) == det, write_graph6(t) + ": det(D) differs from (-1)^n n 2^(n-1)");
    });
  }
  r.info.push_back("trees checked: " + std::to_string(trees));
  return r;
}

SuiteResult verify_sandpile(int n_max) {
  SuiteResult r;
  r.name = "sandpile";
  std::size_t graphs_seen = 0;
  for (const auto& level : corpus(n_max)) {
    for (const Graph& g : level) {
      if (g.complete()) continue;
      ++graphs_seen;
      const std::string where = write_graph6(g);
      const CrossCheck cc = cross_check(g);
      std::string detail;
      for (const auto& d : cc.diagnostics) detail += "; " + d;
      expect(r, cc.ok, where + ": cone identity failed" + detail);

      const SandpileResult sp = sandpile_group(g);
      const IntMatrix lh = cone_graph(g).laplacian();
      expect(r, cokernel(snf(lh)).torsion == sp.group.torsion, where + ": torsion of coker L(H) differs");
      // The spanning-tree count does not depend on which vertex is removed.
      for (int k = 0; k < g.order(); ++k) {
        expect(r, abs(determinant(lh.minor_deleting(k))) == sp.spanning_trees,
               where + ": reduction at vertex " + std::to_string(k) + " disagrees with prod f_i");
      }
    }
  }
  r.info.push_back("connected non-complete graphs swept: " + std::to_string(graphs_seen));
  return r;
}

SuiteResult verify_moments(int n_max) {
  SuiteResult r;
  r.name = "moments";
  std::map<std::string, std::size_t> third_forms;
  std::size_t graphs_seen = 0;
  for (const auto& level : corpus(n_max)) {
    for (const Graph& g : level) {
      ++graphs_seen;
      const std::string where = write_graph6(g);
      const MomentReport m = check_moments(g);
      expect(r, m.first_holds(), where + ": trace(Atr) != W");
      expect(r, m.second_holds(), where + ": trace(Atr^2) != 2|E| + sum tr^2");
      expect(r, m.third_expansion_holds(), where + ": trace(Atr^3) != -6|T| + 3 Wdeg + sum tr^3");
      ++third_forms[m.satisfied_third_form()];
    }
  }
  r.info.push_back("connected graphs swept: " + std::to_string(graphs_seen));
  for (const auto& [form, count] : third_forms) {
    r.info.push_back("third moment satisfied by [" + form + "]: " + std::to_string(count) + " graphs");
  }
  return r;
}

std::vector<std::string_view> suite_names() { return {"bounds", "closed-forms", "sandpile", "moments"}; }

SuiteResult run_suite(std::string_view name, int n_max) {
  if (name == "bounds") return verify_bounds(n_max);
  if (name == "closed-forms") return verify_closed_forms(n_max);
  if (name == "sandpile") return verify_sandpile(n_max);
  if (name == "moments") return verify_moments(n_max);
  throw Error("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace distinv
