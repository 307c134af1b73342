#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "distinv/graph.hpp"
#include "distinv/matrix.hpp"

namespace distinv {

enum class FingerprintMode { Spectral, Invariant };

std::string_view to_string(FingerprintMode mode);
std::optional<FingerprintMode> parse_fingerprint_mode(std::string_view name);

/// Exact byte encoding of a graph invariant. Spectral payloads hold the
/// characteristic polynomial coefficients, invariant payloads the Smith
/// invariant factors and the number of zeros. Equal payloads mean
/// cospectral (resp. coinvariant) matrices; no hashing is involved.
struct Fingerprint {
  MatrixKind kind = MatrixKind::A;
  FingerprintMode mode = FingerprintMode::Spectral;
  std::string payload;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Graph& g, MatrixKind kind, FingerprintMode mode);
Fingerprint fingerprint(const Graph& g, MatrixKind kind, FingerprintMode mode, const DistanceProfile& profile);

struct CensusRow {
  MatrixKind kind = MatrixKind::A;
  FingerprintMode mode = FingerprintMode::Spectral;
  std::size_t mate_count = 0;  // graphs whose bucket has size >= 2
  std::size_t total = 0;
  std::size_t classes = 0;     // distinct fingerprints

  mpq_class uncertainty() const;
  double uncertainty_decimal() const;
};

struct CensusReport {
  int n = 0;
  std::size_t total = 0;
  std::vector<CensusRow> rows;  // kind enumeration order, spectral first

  const CensusRow& row(MatrixKind kind, FingerprintMode mode) const;
  std::size_t mates(MatrixKind kind, FingerprintMode mode) const { return row(kind, mode).mate_count; }

  /// Header line plus one row per (kind, mode):
  /// n, matrix, mode, mate_count, total, uncertainty_decimal, uncertainty_rational.
  std::string to_tsv(bool header = true) const;
};

struct CensusOptions {
  std::vector<MatrixKind> kinds;
  std::vector<FingerprintMode> modes{FingerprintMode::Spectral, FingerprintMode::Invariant};
  int jobs = 0;  // 0 = hardware concurrency
};

/// Buckets the graphs by fingerprint for every requested (kind, mode).
/// Input graphs must share one order, be connected and pairwise
/// non-isomorphic; the census never tests isomorphism itself.
CensusReport run_census(std::span<const Graph> graphs, const CensusOptions& options);

/// Census over all free trees on n vertices, 2 <= n <= 16.
CensusReport tree_census(int n, const CensusOptions& options);

/// True iff K_n's invariant fingerprint for kind occurs exactly once in the
/// corpus of connected graphs on n vertices.
bool completeness_check(std::span<const Graph> corpus, MatrixKind kind);
bool completeness_check(int n, MatrixKind kind);

}  // namespace distinv
