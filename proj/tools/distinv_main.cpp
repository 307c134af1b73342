// distinv: command-line front end for the graph matrix invariant engine.
//
// Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 computation or verification failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distinv/census.hpp"
#include "distinv/exact_linalg.hpp"
#include "distinv/generators.hpp"
#include "distinv/graph6.hpp"
#include "distinv/sandpile.hpp"
#include "distinv/spectra.hpp"
#include "distinv/verify.hpp"

namespace {

using namespace distinv;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

MatrixKind cli_kind(const std::string& name) {
  auto kind = parse_matrix_kind(name);
  if (!kind || *kind == MatrixKind::R) {
    throw UsageError("unknown matrix '" + name + "' (expected A, L, Q, D, DL, DQ, Atr, AtrPlus, Ddeg, DdegPlus)");
  }
  return *kind;
}

std::vector<MatrixKind> cli_kinds(const std::string& list) {
  std::vector<MatrixKind> kinds;
  for (const auto& name : split_list(list)) kinds.push_back(cli_kind(name));
  if (kinds.empty()) throw UsageError("--matrices must name at least one matrix");
  return kinds;
}

std::vector<FingerprintMode> cli_modes(const std::string& list) {
  std::vector<FingerprintMode> modes;
  for (const auto& name : split_list(list)) {
    auto mode = parse_fingerprint_mode(name);
    if (!mode) throw UsageError("unknown mode '" + name + "' (expected spectral, invariant)");
    modes.push_back(*mode);
  }
  if (modes.empty()) throw UsageError("--modes must name at least one mode");
  return modes;
}

std::vector<Graph> load(const std::string& path) {
  std::vector<Graph> graphs = path.empty() || path == "-" ? read_graph6(std::cin) : read_graph6_file(path);
  for (const Graph& g : graphs) {
    if (!g.connected()) throw Error("input graph " + write_graph6(g) + " is not connected");
  }
  return graphs;
}

std::string join(const std::vector<mpz_class>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Smith normal forms, spectra and censuses for graph matrices"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads for censuses (default: available parallelism)")
      ->check(CLI::NonNegativeNumber);

  std::string all_kinds = "A,L,Q,D,DL,DQ,Atr,AtrPlus,Ddeg,DdegPlus";
  std::string both_modes = "spectral,invariant";

  int gen_n = 0;
  bool gen_trees = false;
  auto* gen = app.add_subcommand("gen", "Write one graph6 line per connected graph (or tree) on n vertices");
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_flag("--trees", gen_trees, "Generate free trees instead of all connected graphs");

  int census_n = 0;
  std::string census_input, census_kinds = all_kinds, census_modes = both_modes;
  auto* census = app.add_subcommand("census", "Cospectral/coinvariant mate counts as TSV");
  census->add_option("--n", census_n, "Vertex count of the built-in corpus");
  census->add_option("--input", census_input, "graph6 corpus instead of the built-in generator ('-' for stdin)");
  census->add_option("--matrices", census_kinds, "Comma-separated matrix kinds");
  census->add_option("--modes", census_modes, "Comma-separated modes: spectral, invariant");

  int trees_n = 0;
  std::string trees_kinds = all_kinds, trees_modes = both_modes;
  auto* trees = app.add_subcommand("trees", "Census over all free trees on n vertices");
  trees->add_option("--n", trees_n, "Vertex count")->required();
  trees->add_option("--matrices", trees_kinds, "Comma-separated matrix kinds");
  trees->add_option("--modes", trees_modes, "Comma-separated modes: spectral, invariant");

  std::string snf_input, snf_kind;
  auto* snf_cmd = app.add_subcommand("snf", "Invariant factors per input graph, one line each");
  snf_cmd->add_option("--input", snf_input, "graph6 file ('-' or omitted for stdin)");
  snf_cmd->add_option("--matrix", snf_kind, "Matrix kind")->required();

  std::string spec_input, spec_kind;
  bool spec_exact = false;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues (or exact characteristic polynomial) per graph");
  spectrum->add_option("--input", spec_input, "graph6 file ('-' or omitted for stdin)");
  spectrum->add_option("--matrix", spec_kind, "Matrix kind")->required();
  spectrum->add_flag("--exact", spec_exact, "Print characteristic polynomial coefficients, highest degree first");

  std::string sand_input;
  auto* sandpile = app.add_subcommand("sandpile", "Sandpile group of the cone multigraph and its spanning-tree count");
  sandpile->add_option("--input", sand_input, "graph6 file ('-' or omitted for stdin)");

  std::string suite;
  int n_max = kDefaultVerifyOrder;
  auto* verify = app.add_subcommand("verify", "Run property suites; nonzero exit on any failure");
  verify->add_option("--suite", suite, "bounds | closed-forms | sandpile | moments (default: all)")
      ->check(CLI::IsMember({"bounds", "closed-forms", "sandpile", "moments"}));
  verify->add_option("--n-max", n_max, "Largest vertex count swept")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_trees) {
        for_each_tree(gen_n, [](const Graph& t) { std::cout << write_graph6(t) << '\n'; });
      } else {
        for (const Graph& g : generate_connected_graphs(gen_n)) std::cout << write_graph6(g) << '\n';
      }
    } else if (census->parsed()) {
      CensusOptions options{cli_kinds(census_kinds), cli_modes(census_modes), jobs};
      std::vector<Graph> graphs;
      if (!census_input.empty()) {
        graphs = load(census_input);
      } else if (census_n > 0) {
        graphs = generate_connected_graphs(census_n);
      } else {
        throw UsageError("census needs --n or --input");
      }
      std::cout << run_census(graphs, options).to_tsv();
    } else if (trees->parsed()) {
      CensusOptions options{cli_kinds(trees_kinds), cli_modes(trees_modes), jobs};
      std::cout << tree_census(trees_n, options).to_tsv();
    } else if (snf_cmd->parsed()) {
      const MatrixKind kind = cli_kind(snf_kind);
      for (const Graph& g : load(snf_input)) std::cout << join(snf(build(g, kind)).diagonal(), ",") << '\n';
    } else if (spectrum->parsed()) {
      const MatrixKind kind = cli_kind(spec_kind);
      for (const Graph& g : load(spec_input)) {
        const IntMatrix m = build(g, kind);
        if (spec_exact) {
          const IntPolynomial p = charpoly(m);
          std::vector<mpz_class> high_first(p.coeffs.rbegin(), p.coeffs.rend());
          std::cout << join(high_first, " ") << '\n';
        } else {
          const Spectrum s = eigenvalues_symmetric(m);
          char buf[64];
          for (std::size_t i = 0; i < s.values.size(); ++i) {
            // Print exact zeros without a sign.
            const double v = std::abs(s.values[i]) < s.tol ? 0.0 : s.values[i];
            std::snprintf(buf, sizeof buf, "%.10f", v);
            std::cout << (i ? " " : "") << buf;
          }
          std::cout << '\n';
        }
      }
    } else if (sandpile->parsed()) {
      for (const Graph& g : load(sand_input)) {
        const SandpileResult r = sandpile_group(g);
        std::cout << r.group.to_string() << ", tau=" << r.spanning_trees.get_str() << '\n';
      }
    } else if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite.empty()) {
        for (auto s : suite_names()) names.emplace_back(s);
      } else {
        names.push_back(suite);
      }
      bool ok = true;
      for (const auto& name : names) {
        const SuiteResult r = run_suite(name, n_max);
        std::cout << r.name << '\t' << r.checks << " checks\t" << r.failures.size() << " failures\t"
                  << (r.ok() ? "PASS" : "FAIL") << '\n';
        for (const auto& line : r.info) std::cout << "  " << line << '\n';
        for (const auto& f : r.failures) std::cerr << r.name << ": " << f << '\n';
        ok = ok && r.ok();
      }
      return ok ? 0 : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
