#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "verkit/cyclo.hpp"
#include "verkit/digits.hpp"
#include "verkit/grring.hpp"
#include "verkit/matrix.hpp"

namespace verkit {

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // fixed order, see check_names()
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Names of every check in report order.
const std::vector<std::string>& check_names();

struct BuildOptions {
  long max_simples = 2000;
  long fusion_samples = 200;
  std::uint64_t seed = 0;
  int invariants_depth = 12;
  bool parallel = true;
  bool verify = true;
};

struct CategoryData {
  long p = 0;
  int n = 0;
  std::vector<long> simple_labels;
  std::vector<long> projective_of;  // s(i) for each simple label i
  IntMatrix decomposition;          // rows: projective index proj_begin + r
  IntMatrix cartan;                 // projective-index order
  std::vector<Block> blocks;
  std::vector<CycloInt> fpdim_simple;
  std::vector<CycloInt> fpdim_projective;
  std::vector<long double> fpdim_simple_numeric;
  std::vector<long double> fpdim_projective_numeric;
  std::vector<std::pair<long, long>> ext1_pairs;  // a < b, p odd only
  std::shared_ptr<const FusionRing> fusion;       // null for p = 2
  VerificationReport report;

  long num_simples() const { return static_cast<long>(simple_labels.size()); }
  /// Cartan matrix in simple-label order: entry (i, j) = c(s(i), s(j)).
  IntMatrix cartan_by_simple() const;
};

/// Throws BoundExceeded when p^{n-1}(p-1) exceeds the configured bound.
CategoryData build(long p, int n, const BuildOptions& opts = {});

struct StableGr {
  Integer order;
  std::vector<Integer> factors;
};

/// Cokernel of the Cartan matrix, computed block by block.
StableGr stable_gr(long p, int n);

struct BlockDet {
  Block block;
  Integer det;
  Integer predicted;  // p^{p^{m-1}} at level m, 1 for simple projectives
};

std::vector<BlockDet> block_cartan_dets(long p, int n);

/// Runs every check, never throws.
VerificationReport verify_all(long p, int n, const BuildOptions& opts = {});

/// Whether two square matrices agree after a simultaneous permutation.
bool permutation_equivalent(const IntMatrix& a, const IntMatrix& b);

}  // namespace verkit
