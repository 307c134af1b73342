#include "distinv/census.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <thread>
#include <unordered_map>

#include "distinv/exact_linalg.hpp"
#include "distinv/generators.hpp"

namespace distinv {

namespace {

void put_u32(std::string& out, std::size_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

void put_integer(std::string& out, const mpz_class& v) {
  out.push_back(static_cast<char>(sgn(v) + 1));
  std::size_t count = 0;
  std::vector<unsigned char> bytes((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(bytes.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  put_u32(out, count);
  out.append(reinterpret_cast<const char*>(bytes.data()), count);
}

using Buckets = std::unordered_map<std::string, std::size_t>;

struct Slot {
  MatrixKind kind;
  FingerprintMode mode;
};

std::vector<Slot> ordered_slots(const CensusOptions& options) {
  std::vector<Slot> slots;
  for (MatrixKind kind : kAllMatrixKinds) {
    if (std::find(options.kinds.begin(), options.kinds.end(), kind) == options.kinds.end()) continue;
    for (FingerprintMode mode : {FingerprintMode::Spectral, FingerprintMode::Invariant}) {
      if (std::find(options.modes.begin(), options.modes.end(), mode) == options.modes.end()) continue;
      slots.push_back({kind, mode});
    }
  }
  return slots;
}

// One worker's partial bucket maps, one per slot.
std::vector<Buckets> bucket_range(std::span<const Graph> graphs, const std::vector<Slot>& slots, std::size_t begin,
                                  std::size_t stride) {
  std::vector<Buckets> maps(slots.size());
  for (std::size_t i = begin; i < graphs.size(); i += stride) {
    const Graph& g = graphs[i];
    const DistanceProfile profile = distance_profile(g);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      ++maps[s][fingerprint(g, slots[s].kind, slots[s].mode, profile).payload];
    }
  }
  return maps;
}

}  // namespace

std::string_view to_string(FingerprintMode mode) {
  return mode == FingerprintMode::Spectral ? "spectral" : "invariant";
}

std::optional<FingerprintMode> parse_fingerprint_mode(std::string_view name) {
  if (name == "spectral") return FingerprintMode::Spectral;
  if (name == "invariant") return FingerprintMode::Invariant;
  return std::nullopt;
}

Fingerprint fingerprint(const Graph& g, MatrixKind kind, FingerprintMode mode, const DistanceProfile& profile) {
  Fingerprint fp;
  fp.kind = kind;
  fp.mode = mode;
  fp.payload.push_back(static_cast<char>(kind));
  fp.payload.push_back(static_cast<char>(mode));
  const IntMatrix m = build(g, kind, profile);
  if (mode == FingerprintMode::Spectral) {
    const IntPolynomial p = charpoly(m);
    put_u32(fp.payload, p.coeffs.size());
    for (const auto& c : p.coeffs) put_integer(fp.payload, c);
  } else {
    const SnfResult s = snf(m);
    put_u32(fp.payload, s.factors.size());
    for (const auto& f : s.factors) put_integer(fp.payload, f);
    put_u32(fp.payload, static_cast<std::size_t>(s.zeros));
  }
  return fp;
}

Fingerprint fingerprint(const Graph& g, MatrixKind kind, FingerprintMode mode) {
  return fingerprint(g, kind, mode, distance_profile(g));
}

mpq_class CensusRow::uncertainty() const {
  if (total == 0) return 0;
  mpq_class q(static_cast<unsigned long>(mate_count), static_cast<unsigned long>(total));
  q.canonicalize();
  return q;
}

double CensusRow::uncertainty_decimal() const {
  return total == 0 ? 0.0 : static_cast<double>(mate_count) / static_cast<double>(total);
}

const CensusRow& CensusReport::row(MatrixKind kind, FingerprintMode mode) const {
  for (const auto& r : rows) {
    if (r.kind == kind && r.mode == mode) return r;
  }
  throw Error("census report has no row for " + std::string(to_string(kind)) + "/" + std::string(to_string(mode)));
}

std::string CensusReport::to_tsv(bool header) const {
  std::string out;
  if (header) out += "n\tmatrix\tmode\tmate_count\ttotal\tuncertainty_decimal\tuncertainty_rational\n";
  char decimal[32];
  for (const auto& r : rows) {
    std::snprintf(decimal, sizeof decimal, "%.6f", r.uncertainty_decimal());
    out += std::to_string(n) + '\t' + std::string(to_string(r.kind)) + '\t' + std::string(to_string(r.mode)) + '\t' +
           std::to_string(r.mate_count) + '\t' + std::to_string(r.total) + '\t' + decimal + '\t' +
           r.uncertainty().get_str() + '\n';
  }
  return out;
}

CensusReport run_census(std::span<const Graph> graphs, const CensusOptions& options) {
  CensusReport report;
  report.total = graphs.size();
  report.n = graphs.empty() ? 0 : graphs.front().order();
  for (const Graph& g : graphs) {
    if (g.order() != report.n) throw Error("census input mixes graph orders");
    if (!g.connected()) throw NotConnectedError();
  }

  const std::vector<Slot> slots = ordered_slots(options);
  std::size_t jobs = options.jobs > 0 ? static_cast<std::size_t>(options.jobs)
                                      : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, graphs.size()));

  std::vector<std::vector<Buckets>> partials(jobs);
  if (jobs == 1) {
    partials[0] = bucket_range(graphs, slots, 0, 1);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          try {
            partials[w] = bucket_range(graphs, slots, w, jobs);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t s = 0; s < slots.size(); ++s) {
    Buckets merged = std::move(partials[0][s]);
    for (std::size_t w = 1; w < jobs; ++w) {
      for (auto& [payload, count] : partials[w][s]) merged[payload] += count;
    }
    CensusRow row;
    row.kind = slots[s].kind;
    row.mode = slots[s].mode;
    row.total = graphs.size();
    row.classes = merged.size();
    for (const auto& [payload, count] : merged) {
      if (count >= 2) row.mate_count += count;
    }
    report.rows.push_back(row);
  }
  return report;
}

CensusReport tree_census(int n, const CensusOptions& options) {
  if (n < 2 || n > kMaxTreeOrder) throw Error("tree census supports 2 <= n <= " + std::to_string(kMaxTreeOrder));
  const std::vector<Graph> trees = generate_trees(n);
  return run_census(trees, options);
}

bool completeness_check(std::span<const Graph> corpus, MatrixKind kind) {
  if (corpus.empty()) throw Error("completeness check needs a nonempty corpus");
  const int n = corpus.front().order();
  const std::string target = fingerprint(graphs::complete(n), kind, FingerprintMode::Invariant).payload;
  std::size_t hits = 0;
  for (const Graph& g : corpus) {
    if (fingerprint(g, kind, FingerprintMode::Invariant).payload == target) ++hits;
  }
  return hits == 1;
}

bool completeness_check(int n, MatrixKind kind) {
  const std::vector<Graph> corpus = generate_connected_graphs(n);
  return completeness_check(corpus, kind);
}

}  // namespace distinv
