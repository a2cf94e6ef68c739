#include "bohr/explorer.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace bohr {

// ---- generators ------------------------------------------------------------

ComplexMatrix random_gaussian(Index rows, Index cols, CounterRng& rng) {
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index k = 0; k < cols; ++k) g(i, k) = rng.complex_gaussian();
  }
  return g;
}

HermitianMatrix random_hermitian(Index dim, CounterRng& rng, double scale) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  return hermitize(g * scale);
}

HermitianMatrix random_hermitian(Index dim, std::uint64_t seed, double scale) {
  CounterRng rng(seed);
  return random_hermitian(dim, rng, scale);
}

HermitianMatrix random_psd(Index dim, CounterRng& rng, double scale) {
  if (dim < 1) throw InputError("random_psd: dim must be positive");
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  return hermitize(g.adjoint() * g * scale);
}

HermitianMatrix random_psd(Index dim, std::uint64_t seed, double scale) {
  CounterRng rng(seed);
  return random_psd(dim, rng, scale);
}

ComplexMatrix random_contraction(Index dim, CounterRng& rng) {
  if (dim < 1) throw InputError("random_contraction: dim must be positive");
  for (;;) {
    const ComplexMatrix x = random_gaussian(dim, dim, rng);
    const double norm = operator_norm(x);
    if (norm > 0.0) return x / (norm * (1.0 + 1e-6));
  }
}

ComplexMatrix random_contraction(Index dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_contraction(dim, rng);
}

ComplexMatrix random_unitary(Index dim, CounterRng& rng) {
  const ComplexMatrix z = random_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& packed = qr.matrixQR();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = packed(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

ComplexMatrix random_unitary(Index dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_unitary(dim, rng);
}

PositiveMap random_subunital_map(Index in_dim, Index out_dim, std::size_t count, CounterRng& rng) {
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix unit = ComplexMatrix::Zero(out_dim, out_dim);
  for (std::size_t k = 0; k < std::max<std::size_t>(count, 1); ++k) {
    kraus.push_back(random_gaussian(out_dim, in_dim, rng));
    unit += kraus.back() * kraus.back().adjoint();
  }
  const double top = eigenvalues(hermitize(unit))(out_dim - 1);
  const double s = 1.0 / std::sqrt(top * (1.0 + 1e-6));
  for (auto& v : kraus) v *= s;
  return PositiveMap(std::move(kraus));
}

std::vector<ComplexMatrix> random_orthogonal_family(Index dim, Index n, CounterRng& rng) {
  if (n < 1 || n > dim) {
    throw InputError("random_orthogonal_family: need 1 <= n <= dim (n = " + std::to_string(n) +
                     ", dim = " + std::to_string(dim) + ")");
  }
  const ComplexMatrix u = random_unitary(dim, rng);
  const ComplexMatrix m = random_gaussian(dim, dim, rng);

  std::vector<ComplexMatrix> family;
  Index start = 0;
  for (Index i = 0; i < n; ++i) {
    const Index len = dim / n + (i < dim % n ? 1 : 0);
    // U P_i M keeps only the block's columns of U and rows of M.
    family.push_back(u.middleCols(start, len) * m.middleRows(start, len));
    start += len;
  }
  return family;
}

std::vector<ComplexMatrix> random_orthogonal_family(Index dim, Index n, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_orthogonal_family(dim, n, rng);
}

std::vector<ComplexMatrix> rank_one_family(const ComplexMatrix& basis, Index n,
                                           const ComplexVector& x) {
  if (n < 1 || n > basis.cols()) throw InputError("rank_one_family: need 1 <= n <= columns");
  std::vector<ComplexMatrix> family;
  for (Index i = 0; i < n; ++i) family.push_back(rank_one(basis.col(i), x));
  return family;
}

// ---- search ----------------------------------------------------------------

MapFamily parse_map_family(const std::string& name) {
  if (name == "mixed") return MapFamily::mixed;
  if (name == "contraction") return MapFamily::contraction;
  if (name == "kraus") return MapFamily::kraus;
  if (name == "identity") return MapFamily::identity;
  throw InputError("unknown map family '" + name +
                   "' (expected mixed, contraction, kraus or identity)");
}

std::string to_string(MapFamily family) {
  switch (family) {
    case MapFamily::mixed: return "mixed";
    case MapFamily::contraction: return "contraction";
    case MapFamily::kraus: return "kraus";
    case MapFamily::identity: return "identity";
  }
  return "mixed";
}

const std::vector<std::string>& search_targets() {
  static const std::vector<std::string> targets{
      "vasic_keckic", "bohr_scalar",     "bohr_pair",         "field_bohr", "unitalize",
      "congruence_bohr", "hansen", "convexity_chain", "orthogonal_family", "jensen"};
  return targets;
}

TrialConfig default_config(const std::string& target, std::uint64_t master_seed,
                           std::size_t trials) {
  TrialConfig c;
  c.master_seed = master_seed;
  c.trials = trials;
  c.target = target;
  c.dims = {1, 2, 3, 4, 5, 6};
  c.n_grid = {1, 2, 3, 4};
  if (target == "vasic_keckic") {
    c.r_grid = {1.25, 1.5, 2.0, 3.0, 4.0};
    c.n_grid = {1, 2, 3, 4, 5, 6};
  } else if (target == "bohr_scalar" || target == "bohr_pair") {
    c.r_grid = {1.25, 1.5, 2.0, 3.0};
  } else if (target == "orthogonal_family") {
    c.r_grid = {2.5, 3.0, 3.5, 4.0};
  } else {
    c.r_grid = {1.1, 1.5, 2.0};
  }
  return c;
}

namespace {

template <class T>
const T& pick(const std::vector<T>& grid, CounterRng& rng) {
  return grid[rng.below(grid.size())];
}

double draw_scale(const TrialConfig& c, CounterRng& rng) {
  static constexpr std::array<double, 3> kScales{1e-2, 1.0, 1e2};
  return c.scale_diversity ? kScales[rng.below(kScales.size())] : 1.0;
}

std::vector<double> draw_alpha(const TrialConfig& c, Index n, CounterRng& rng) {
  if (!c.alpha.empty()) return c.alpha;
  std::vector<double> alpha;
  for (Index i = 0; i < n; ++i) alpha.push_back(rng.log_uniform(0.1, 10.0));
  return alpha;
}

PositiveMap draw_map(const TrialConfig& c, Index dim, CounterRng& rng) {
  MapFamily family = c.maps;
  if (family == MapFamily::mixed) {
    family = rng.below(2) == 0 ? MapFamily::contraction : MapFamily::kraus;
  }
  switch (family) {
    case MapFamily::identity: return PositiveMap::identity(dim);
    case MapFamily::contraction: return congruence_map(random_contraction(dim, rng));
    default: return random_subunital_map(dim, dim, 1 + rng.below(3), rng);
  }
}

json matrices_json(const std::vector<ComplexMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

void validate(const TrialConfig& c) {
  const auto& targets = search_targets();
  if (std::find(targets.begin(), targets.end(), c.target) == targets.end()) {
    throw InputError("unknown search target '" + c.target + "'");
  }
  if (c.trials < 1) throw InputError("trials must be at least 1");
  if (c.dims.empty() || c.r_grid.empty() || c.n_grid.empty()) {
    throw InputError("grids must be nonempty");
  }
  for (Index d : c.dims) {
    if (d < 1) throw InputError("dims must be positive");
  }
  for (Index n : c.n_grid) {
    if (n < 1) throw InputError("n grid entries must be positive");
    if (!c.alpha.empty() && static_cast<std::size_t>(n) != c.alpha.size()) {
      throw InputError("fixed alpha has " + std::to_string(c.alpha.size()) +
                       " values but the n grid contains " + std::to_string(n));
    }
  }
  for (double r : c.r_grid) {
    if (!std::isfinite(r)) throw InputError("r grid entries must be finite");
  }
  for (double a : c.alpha) {
    if (!std::isfinite(a) || a <= 0.0) throw InputError("alpha values must be positive");
  }
  if (c.target == "orthogonal_family" && !c.alpha.empty()) {
    const Index smallest = *std::min_element(c.dims.begin(), c.dims.end());
    if (static_cast<Index>(c.alpha.size()) > smallest) {
      throw InputError("fixed alpha longer than the smallest dim for orthogonal_family");
    }
  }
  if (!(c.tol_scale > 0.0)) throw InputError("tol_scale must be positive");
}

struct TrialOutcome {
  bool failed_precondition = false;
  bool holds = true;
  bool near_equality = false;
  double min_gap = 0.0;
  std::uint64_t seed = 0;
  std::optional<json> instance;
};

TrialOutcome run_trial(const TrialConfig& c, std::size_t index) {
  TrialOutcome out;
  out.seed = trial_seed(c.master_seed, index);
  json instance = generate_instance(c, out.seed);
  const VerifyOptions opts{c.allow_out_of_range, c.tol_scale};
  try {
    const VerificationResult res = verify_instance(c.target, instance, {}, opts);
    out.holds = res.holds;
    out.near_equality = res.near_equality;
    out.min_gap = res.min_gap;
    if (!res.holds) out.instance = std::move(instance);
  } catch (const PreconditionError&) {
    out.failed_precondition = true;
  }
  return out;
}

}  // namespace

json generate_instance(const TrialConfig& c, std::uint64_t seed) {
  CounterRng rng(seed);
  const Index dim = pick(c.dims, rng);
  const double r = pick(c.r_grid, rng);
  const Index n = pick(c.n_grid, rng);
  const std::string& t = c.target;

  json inst{{"inequality", t}, {"r", r}, {"seed", seed}};

  if (t == "vasic_keckic") {
    json z = json::array();
    for (Index i = 0; i < n; ++i) z.push_back(complex_to_json(rng.complex_gaussian() * draw_scale(c, rng)));
    inst["z"] = std::move(z);
    inst["alpha"] = draw_alpha(c, n, rng);
  } else if (t == "bohr_scalar") {
    inst["z"] = complex_to_json(rng.complex_gaussian() * draw_scale(c, rng));
    inst["w"] = complex_to_json(rng.complex_gaussian() * draw_scale(c, rng));
  } else if (t == "bohr_pair") {
    inst["A"] = matrix_to_json(random_gaussian(dim, dim, rng) * draw_scale(c, rng));
    inst["B"] = matrix_to_json(random_gaussian(dim, dim, rng) * draw_scale(c, rng));
  } else if (t == "field_bohr" || t == "unitalize") {
    const std::vector<double> alpha = draw_alpha(c, n, rng);
    json entries = json::array();
    for (Index i = 0; i < n; ++i) {
      const double mu = rng.log_uniform(0.5, 2.0);
      const HermitianMatrix a = random_psd(dim, rng, draw_scale(c, rng));
      entries.push_back(json{{"mu", mu},
                             {"alpha", alpha[static_cast<std::size_t>(i)]},
                             {"A", matrix_to_json(a.matrix())},
                             {"phi", map_to_json(draw_map(c, dim, rng))}});
    }
    inst["entries"] = std::move(entries);
  } else if (t == "congruence_bohr" || t == "convexity_chain") {
    std::vector<ComplexMatrix> xs;
    std::vector<ComplexMatrix> as;
    for (Index i = 0; i < n; ++i) {
      xs.push_back(random_contraction(dim, rng));
      as.push_back(random_psd(dim, rng, draw_scale(c, rng)).matrix());
    }
    inst["X"] = matrices_json(xs);
    inst["A"] = matrices_json(as);
    inst["alpha"] = draw_alpha(c, n, rng);
  } else if (t == "hansen") {
    inst["X"] = matrix_to_json(random_contraction(dim, rng));
    inst["A"] = matrix_to_json(random_psd(dim, rng, draw_scale(c, rng)).matrix());
  } else if (t == "orthogonal_family") {
    const Index m = std::min(n, dim);
    std::vector<ComplexMatrix> family = random_orthogonal_family(dim, m, rng);
    const double s = draw_scale(c, rng);
    for (auto& a : family) a *= s;
    inst["A"] = matrices_json(family);
    inst["alpha"] = draw_alpha(c, m, rng);
  } else if (t == "jensen") {
    // t^2 is operator convex on the whole line, so it gets indefinite operands.
    const bool square = r == 2.0;
    json entries = json::array();
    for (Index i = 0; i < n; ++i) {
      const double mu = rng.log_uniform(0.5, 2.0);
      const double beta = c.alpha.empty() ? rng.log_uniform(0.1, 10.0)
                                          : c.alpha[static_cast<std::size_t>(i)];
      const double s = draw_scale(c, rng);
      const HermitianMatrix a = square ? random_hermitian(dim, rng, s) : random_psd(dim, rng, s);
      entries.push_back(json{{"mu", mu},
                             {"beta", beta},
                             {"A", matrix_to_json(a.matrix())},
                             {"phi", map_to_json(draw_map(c, dim, rng))}});
    }
    inst["entries"] = std::move(entries);
    inst["function"] = square ? "square" : "power";
  } else {
    throw InputError("unknown search target '" + t + "'");
  }
  return inst;
}

SearchReport run_search(const TrialConfig& config) {
  validate(config);

  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.trials) return;
      try {
        outcomes[i] = run_trial(config, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.trials));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SearchReport report;
  report.config = config;
  report.total = config.trials;
  report.min_gap_overall = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    TrialOutcome& o = outcomes[i];
    if (o.failed_precondition) {
      ++report.precondition_failures;
      continue;
    }
    report.min_gap_overall = std::min(report.min_gap_overall, o.min_gap);
    if (o.near_equality) ++report.near_equality_count;
    if (!o.holds) {
      Violation v{i, o.seed, o.min_gap, std::nullopt};
      if (report.violations.size() < config.max_recorded_instances) v.instance = std::move(o.instance);
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

json search_report_to_json(const SearchReport& report) {
  const TrialConfig& c = report.config;
  json dims = json::array();
  for (Index d : c.dims) dims.push_back(d);
  json ns = json::array();
  for (Index n : c.n_grid) ns.push_back(n);

  json violations = json::array();
  for (const auto& v : report.violations) {
    json entry{{"trial", v.trial}, {"seed", v.seed}, {"min_gap_eigenvalue", v.min_gap}};
    if (v.instance) entry["instance"] = *v.instance;
    violations.push_back(std::move(entry));
  }
  const bool finite = std::isfinite(report.min_gap_overall);
  return json{{"target", c.target},
              {"master_seed", c.master_seed},
              {"trials", c.trials},
              {"dims", std::move(dims)},
              {"r_grid", c.r_grid},
              {"n_grid", std::move(ns)},
              {"alpha", c.alpha},
              {"maps", to_string(c.maps)},
              {"allow_out_of_range", c.allow_out_of_range},
              {"scale_diversity", c.scale_diversity},
              {"tol_scale", c.tol_scale},
              {"total", report.total},
              {"violation_count", report.violations.size()},
              {"violations", std::move(violations)},
              {"min_gap_overall", finite ? json(report.min_gap_overall) : json(nullptr)},
              {"near_equality_count", report.near_equality_count},
              {"precondition_failures", report.precondition_failures}};
}

}  // namespace bohr
