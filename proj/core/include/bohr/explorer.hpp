#pragma once

// Seeded generators and the trial harness. Every trial draws from its own
// counter-based stream keyed by trial_seed(master_seed, index), turns the
// draw into an instance document and runs it through verify_instance, so a
// recorded violation replays bit-for-bit under `verify --from-file`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/linalg.hpp"
#include "bohr/posmaps.hpp"
#include "bohr/registry.hpp"
#include "bohr/rng.hpp"

namespace bohr {

// ---- generators ------------------------------------------------------------

/// Independent standard complex Gaussian entries.
ComplexMatrix random_gaussian(Index rows, Index cols, CounterRng& rng);

/// (G + G*)/2 times `scale`.
HermitianMatrix random_hermitian(Index dim, CounterRng& rng, double scale = 1.0);
HermitianMatrix random_hermitian(Index dim, std::uint64_t seed, double scale = 1.0);

/// G* G times `scale`; positive semidefinite by construction.
HermitianMatrix random_psd(Index dim, CounterRng& rng, double scale = 1.0);
HermitianMatrix random_psd(Index dim, std::uint64_t seed, double scale = 1.0);

/// X / (||X|| (1 + 1e-6)) for Gaussian X; a zero draw is redrawn.
ComplexMatrix random_contraction(Index dim, CounterRng& rng);
ComplexMatrix random_contraction(Index dim, std::uint64_t seed);

/// Orthonormalized Gaussian matrix (QR with the phases of R removed).
ComplexMatrix random_unitary(Index dim, CounterRng& rng);
ComplexMatrix random_unitary(Index dim, std::uint64_t seed);

/// `count` Gaussian Kraus operators rescaled so that phi(I) <= I.
PositiveMap random_subunital_map(Index in_dim, Index out_dim, std::size_t count, CounterRng& rng);

/// A_i = U P_i M with U unitary, P_i the coordinate projections onto n
/// disjoint contiguous blocks and M Gaussian, so A_i* A_j = 0 for i != j.
std::vector<ComplexMatrix> random_orthogonal_family(Index dim, Index n, CounterRng& rng);
std::vector<ComplexMatrix> random_orthogonal_family(Index dim, Index n, std::uint64_t seed);

/// A_i = rank_one(e_i, x) where e_i are the first n columns of `basis`
/// (orthonormal columns assumed).
std::vector<ComplexMatrix> rank_one_family(const ComplexMatrix& basis, Index n,
                                           const ComplexVector& x);

// ---- search ----------------------------------------------------------------

inline constexpr double kEqualityBand = kEqBand;

enum class MapFamily { mixed, contraction, kraus, identity };

MapFamily parse_map_family(const std::string& name);
std::string to_string(MapFamily family);

struct TrialConfig {
  std::uint64_t master_seed = 0;
  std::size_t trials = 1000;
  std::vector<Index> dims;
  std::vector<double> r_grid;
  std::vector<Index> n_grid;
  std::string target;
  bool allow_out_of_range = false;
  /// Fixed coefficients; when empty each trial draws log-uniform in [0.1, 10].
  std::vector<double> alpha;
  MapFamily maps = MapFamily::mixed;
  /// Multiply generated operators by 10^k, k in {-2, 0, 2}.
  bool scale_diversity = true;
  double tol_scale = 1.0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Violations beyond this many are listed without their instance.
  std::size_t max_recorded_instances = 25;
};

struct Violation {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double min_gap = 0.0;
  std::optional<json> instance;
};

struct SearchReport {
  TrialConfig config;
  std::size_t total = 0;
  std::vector<Violation> violations;  // sorted by trial index
  double min_gap_overall = 0.0;
  std::size_t near_equality_count = 0;
  std::size_t precondition_failures = 0;
};

/// Targets run_search can draw instances for.
const std::vector<std::string>& search_targets();

/// The target's in-hypothesis grids with the given seed and trial count.
TrialConfig default_config(const std::string& target, std::uint64_t master_seed,
                           std::size_t trials = 1000);

/// Instance document for one trial (includes "inequality", "r", "seed").
json generate_instance(const TrialConfig& config, std::uint64_t seed);

/// Throws InputError for an unknown target, empty grids, trials == 0, or
/// fixed alpha whose length disagrees with the n grid.
SearchReport run_search(const TrialConfig& config);

json search_report_to_json(const SearchReport& report);

}  // namespace bohr
