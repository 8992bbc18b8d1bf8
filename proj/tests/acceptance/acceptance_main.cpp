// Acceptance checks. Each criterion prints one PASS/FAIL line; thresholds are
// fixed here and never read from the command line.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chanent/circuit/clifford_sampler.h"
#include "chanent/circuit/ensemble.h"
#include "chanent/common/parallel.h"
#include "chanent/common/rational.h"
#include "chanent/common/rng.h"
#include "chanent/domainwall/domainwall.h"
#include "chanent/oracle/dense_state.h"
#include "chanent/oracle/twirl.h"
#include "chanent/replica/lattice.h"
#include "chanent/replica/perm.h"
#include "chanent/replica/weingarten.h"
#include "chanent/runner/analysis.h"
#include "chanent/stabilizer/mixed_state.h"
#include "chanent/toy/toy_qudit.h"

namespace {

using namespace chanent;
using circuit::Architecture;
using circuit::EnsembleOptions;
using circuit::EnsembleResult;
using circuit::NoiseModel;
using circuit::Partition;
using stabilizer::Region;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed sub-checks; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) failed_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& text) { notes_ << (notes_.str().empty() ? "" : "; ") << text; }

  Outcome outcome() const {
    std::ostringstream out;
    out << checks_ - failures_ << "/" << checks_ << " checks";
    if (!notes_.str().empty()) out << "; " << notes_.str();
    if (failures_ > 0) out << "; failed: " << failed_.str();
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream failed_;
  std::ostringstream notes_;
};

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

unsigned g_workers = 0;

EnsembleResult ensemble(const Architecture& arch, double p, int d, std::size_t t_max,
                        const std::vector<Partition>& partitions, std::size_t n_traj,
                        std::uint64_t seed, bool mutual = true,
                        std::vector<circuit::TrajectoryRecord>* records = nullptr) {
  EnsembleOptions options;
  options.trajectory.d = d;
  options.trajectory.t_max = t_max;
  options.trajectory.observables.mutual = mutual;
  options.n_traj = n_traj;
  options.base_seed = seed;
  options.workers = g_workers == 0 ? default_worker_count() : g_workers;
  return circuit::ensemble_average(arch, NoiseModel::defaults_for(arch, p), partitions, options, records);
}

// 1. Exact large-t closed forms.
Outcome criterion_1() {
  Checker check;
  constexpr std::size_t kMaxN = 50;
  constexpr std::size_t kMaxL = 40;
  for (int di : {2, 3, 5}) {
    const Rational d = di;
    for (const Rational& p : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
      const std::string tag = "d=" + std::to_string(di) + " p=" + to_string(p);
      const auto u = domainwall::hanging_u(kMaxN, d, p);
      const auto v = domainwall::boundary_v(kMaxN, d, p);
      for (std::size_t n = 0; n <= kMaxN; ++n) {
        const long k = static_cast<long>(n);
        check.expect(u[n] == pow(d, -2 * k), tag + " u_" + std::to_string(n));
        check.expect(v[n].first == pow(d, -(2 * k + 1)), tag + " v_" + std::to_string(n));
        check.expect(v[n].second == pow(d, -2 * k), tag + " v'_" + std::to_string(n));
      }
      for (std::size_t L = 2; L <= kMaxL; L += 2) {
        const long l = static_cast<long>(L);
        check.expect(domainwall::attached_w(L, d, p) == (1 - pow(1 - p, l)) / pow(d, l),
                     tag + " w L=" + std::to_string(L));
        check.expect(domainwall::z_bb_large_t(L, d, p) == pow(d, -l), tag + " Z_bb L=" + std::to_string(L));
      }
    }
  }
  return check.outcome();
}

// 2. Weingarten tables: exact defining identity and large-D Moebius limit.
Outcome criterion_2() {
  Checker check;
  for (std::size_t q = 1; q <= 5; ++q) {
    for (int D : {4, 9, 25}) {
      const std::string tag = "Q=" + std::to_string(q) + " D=" + std::to_string(D);
      if (static_cast<std::size_t>(D) >= q) {
        check.expect(replica::verify_weingarten(replica::weingarten(q, D)), tag + " identity");
      } else {
        // Below Q rows the Gram matrix is singular and no table exists.
        bool threw = false;
        try {
          replica::weingarten(q, D);
        } catch (const std::domain_error&) {
          threw = true;
        }
        check.expect(threw, tag + " singular Gram not reported");
      }
    }
  }
  const Rational D = 10000;
  double worst = 0.0;
  for (std::size_t q = 1; q <= 5; ++q) {
    const auto table = replica::weingarten(q, D);
    for (const auto& [type, value] : table.values()) {
      std::size_t dist = 0;
      for (std::size_t len : type) dist += len - 1;
      const double scaled = to_double(value * pow(D, static_cast<long>(q + dist)));
      const long m = replica::moebius(type);
      const bool sign_ok = (scaled > 0) == (dist % 2 == 0) && (m > 0) == (dist % 2 == 0);
      check.expect(sign_ok, "sign Q=" + std::to_string(q));
      const double rel = std::abs(scaled / static_cast<double>(m) - 1.0);
      worst = std::max(worst, rel);
      check.expect(rel < 0.01, "Moeb Q=" + std::to_string(q) + " rel " + fmt(rel));
    }
  }
  check.note("worst large-D rel dev " + fmt(worst));
  return check.outcome();
}

// 3. Spin model (exact rationals) vs two-copy twirl vs Haar Monte Carlo.
Outcome criterion_3() {
  Checker check;
  constexpr double kRelTol = 1e-10;
  constexpr double kSigmas = 3.0;
  constexpr double kRoundoff = 1e-12;  // zero-variance observables
  constexpr std::size_t kSamples = 100000;
  const std::size_t L = 4;
  const auto arch = Architecture::brickwork(L, true);
  const Region half = Region::range(L, 0, L / 2);
  const replica::Perm sw = replica::Perm::from_cycles(2, "(12)"), id(2);
  double worst_rel = 0.0, worst_sigma = 0.0;
  std::uint64_t seed = 100;
  for (std::size_t t : {1u, 2u}) {
    for (const Rational& p : {Rational(0), Rational(3, 10)}) {
      for (auto top : {oracle::TopBoundary::kBB, oracle::TopBoundary::kBA}) {
        const std::string tag = "t=" + std::to_string(t) + " p=" + to_string(p) + " " + oracle::to_string(top);
        auto lattice = replica::SpinLattice::from_architecture(arch, t, 2);
        lattice.set_top(oracle::swap_region(top, half), sw, id);
        const double exact =
            to_double(replica::brute_force_partition(lattice, replica::WeightKind::kDepolarizingExact, 2, p));
        const double twirl = oracle::two_copy_twirl_average(arch, t, 2, p, top, half);
        const double rel = std::abs(twirl / exact - 1.0);
        worst_rel = std::max(worst_rel, rel);
        check.expect(rel <= kRelTol, tag + " twirl rel " + fmt(rel));
        oracle::MonteCarloOptions mc_options;
        mc_options.workers = g_workers;
        const auto mc = oracle::mc_replica_average(arch, t, 2, to_double(p), oracle::purity_observable(top, half),
                                                   kSamples, ++seed, mc_options);
        for (double reference : {exact, twirl}) {
          const double delta = std::abs(mc.mean - reference);
          const bool ok = delta <= kSigmas * mc.stderr_ || delta <= kRoundoff;
          if (delta > kRoundoff) worst_sigma = std::max(worst_sigma, delta / mc.stderr_);
          check.expect(ok, tag + " MC " + fmt(mc.mean) + " vs " + fmt(reference));
        }
      }
    }
  }
  check.note("worst twirl rel " + fmt(worst_rel) + ", worst MC sigma " + fmt(worst_sigma));
  return check.outcome();
}

// 4. Stabilizer integers vs dense density matrices on random Clifford+trace circuits.
Outcome criterion_4() {
  Checker check;
  constexpr std::size_t kCircuits = 500;
  constexpr std::size_t kL = 6;
  constexpr std::size_t kMaxDepth = 10;
  constexpr double kTraceProb = 0.2;
  constexpr double kTol = 1e-9;
  const double log2 = std::log(2.0);
  double worst = 0.0;
  std::vector<Region> regions;
  for (std::size_t cut = 1; cut < kL; ++cut) regions.push_back(Region::range(kL, 0, cut));
  regions.emplace_back(kL, std::initializer_list<std::size_t>{0, 2, 5});
  regions.emplace_back(kL, std::initializer_list<std::size_t>{1, 4});
  for (std::size_t c = 0; c < kCircuits; ++c) {
    const auto arch = Architecture::brickwork(kL, c % 2 == 0);
    const std::size_t depth = 1 + c % kMaxDepth;
    CounterRng rng(derive_stream_key(4004, c));
    auto stab = stabilizer::MixedStabilizerState::product_state(kL, 2);
    auto dense = oracle::DenseState::product_state(kL, 2);
    for (std::size_t layer = 1; layer <= depth; ++layer) {
      for (const auto& block : arch.layer_blocks(layer)) {
        const auto gate = circuit::sample_random_clifford(2, 2, rng);
        stab.apply(gate, block);
        dense.apply_unitary(oracle::clifford_unitary(gate), block);
        if (rng.bernoulli(kTraceProb)) {
          stab.apply_trace(block);
          dense.apply_trace(block);
        }
      }
    }
    dense.check_invariants();
    const std::string tag = "circuit " + std::to_string(c);
    auto record = [&](double dense_value, double stab_value, const std::string& what) {
      const double err = std::abs(dense_value - stab_value);
      worst = std::max(worst, err);
      check.expect(err <= kTol, tag + " " + what + " err " + fmt(err));
    };
    record(oracle::renyi_entropy(dense.matrix(), 1.0), stab.total_entropy_dits() * log2, "S_total");
    for (const Region& a : regions) {
      const Region b = a.complement();
      record(oracle::renyi_entropy(dense.reduced(a), 1.0), stab.entropy_dits(a) * log2, "S_A");
      const double mi = stab.mutual_information_dits(a, b) * log2;
      record(oracle::renyi_mutual(dense, a, b, 1.0), mi, "I");
      record(oracle::renyi_mutual(dense, a, b, 2.0), mi, "I_2");
      record(oracle::op_ee(dense, a, 2.0), stab.operator_entanglement_dits(a) * log2, "op_ee");
      record(oracle::log_negativity(dense, a), stab.log_negativity_bits(a) * log2, "log_neg");
    }
  }
  check.note("worst abs err " + fmt(worst));
  return check.outcome();
}

// 5. Unitary dynamics saturate to the volume law 2|A|.
Outcome criterion_5() {
  Checker check;
  constexpr std::size_t kL = 64, kA = 32, kTraj = 200, kTMax = 128, kPlateauFrom = 64;
  constexpr double kTarget = 2.0 * kA, kTol = 2.0;
  const auto arch = Architecture::brickwork(kL, true);
  const auto result = ensemble(arch, 0.0, 2, kTMax, {Partition::prefix(kL, kA)}, kTraj, 5005);
  const auto& series = result.find("mutual", Partition::prefix(kL, kA).label);
  double plateau = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    if (result.times[i] < kPlateauFrom) continue;
    plateau += series.mean[i];
    ++count;
  }
  plateau /= static_cast<double>(count);
  check.note("plateau " + fmt(plateau) + " dits over t in [" + std::to_string(kPlateauFrom) + "," +
             std::to_string(kTMax) + "]");
  check.expect(std::abs(plateau - kTarget) <= kTol, "plateau off 64 by more than 2 dits");
  return check.outcome();
}

// 6. Peaks of the mutual information follow an area law at L = 256.
Outcome criterion_6() {
  Checker check;
  constexpr std::size_t kL = 256, kTraj = 400;
  constexpr double kPeakSpread = 0.10;
  constexpr double kCurveTol = 0.05;
  constexpr std::size_t kSkipLayers = 3;
  const auto arch = Architecture::brickwork(kL, true);
  std::vector<Partition> partitions;
  for (std::size_t a : {16u, 32u, 64u, 128u}) partitions.push_back(Partition::prefix(kL, a));
  std::uint64_t seed = 6000;
  for (double p : {0.05, 0.1}) {
    const auto result = ensemble(arch, p, 2, 64, partitions, kTraj, ++seed);
    double lo = 1e300, hi = 0.0;
    std::string peaks;
    for (const auto& part : partitions) {
      const auto peak = runner::series_peak(result, result.find("mutual", part.label));
      lo = std::min(lo, peak.mean);
      hi = std::max(hi, peak.mean);
      peaks += (peaks.empty() ? "" : " ") + fmt(peak.mean);
    }
    const double spread = hi / lo - 1.0;
    check.note("p=" + fmt(p) + " peaks {" + peaks + "} spread " + fmt(spread));
    check.expect(spread < kPeakSpread, "p=" + fmt(p) + " peak spread " + fmt(spread));
  }
  const std::vector<Partition> pair{Partition::prefix(kL, 64), Partition::prefix(kL, 128)};
  const auto result = ensemble(arch, 0.01, 2, 128, pair, kTraj, ++seed);
  const auto& s64 = result.find("mutual", pair[0].label);
  const auto& s128 = result.find("mutual", pair[1].label);
  // The growth phase (up to the peak of the larger region) is reported
  // separately for diagnosis; the check covers the full curve.
  const std::size_t peak_t = runner::series_peak(result, s128).t;
  double worst = 0.0, worst_growth = 0.0;
  std::size_t worst_t = 0;
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    if (result.times[i] <= kSkipLayers) continue;
    const double scale = std::max(s64.mean[i], s128.mean[i]);
    const double rel = scale > 0 ? std::abs(s64.mean[i] - s128.mean[i]) / scale : 0.0;
    if (rel > worst) worst = rel, worst_t = result.times[i];
    if (result.times[i] <= peak_t) worst_growth = std::max(worst_growth, rel);
  }
  check.note("p=0.01 worst curve rel dev " + fmt(worst) + " at t=" + std::to_string(worst_t) +
             " (up to the peak at t=" + std::to_string(peak_t) + ": " + fmt(worst_growth) + ")");
  check.expect(worst <= kCurveTol, "p=0.01 curves differ by " + fmt(worst));
  return check.outcome();
}

// 7. Boundary-only noise: peak mutual information grows linearly with |A|.
Outcome criterion_7() {
  Checker check;
  constexpr std::size_t kL = 128, kTraj = 50, kTMax = 3 * kL;
  constexpr double kMinR2 = 0.95;
  const auto arch = Architecture::boundary_noise(kL);
  std::vector<Partition> partitions;
  const std::vector<double> sizes{8, 16, 32, 48, 64};
  for (double a : sizes) partitions.push_back(Partition::prefix(kL, static_cast<std::size_t>(a)));
  const auto result = ensemble(arch, 1.0, 2, kTMax, partitions, kTraj, 7007);
  std::vector<double> peaks;
  for (const auto& part : partitions) peaks.push_back(runner::series_peak(result, result.find("mutual", part.label)).mean);
  const auto fit = runner::linear_regression(sizes, peaks);
  std::string text;
  for (double v : peaks) text += (text.empty() ? "" : " ") + fmt(v);
  check.note("peaks {" + text + "} slope " + fmt(fit.slope) + " R2 " + fmt(fit.r_squared));
  check.expect(fit.slope > 0.0, "slope not positive");
  check.expect(fit.r_squared > kMinR2, "R2 " + fmt(fit.r_squared));
  return check.outcome();
}

// 8. Time for S_total to reach 0.95 L tracks t* = log d / -log(1-p).
Outcome criterion_8() {
  Checker check;
  constexpr std::size_t kL = 64, kTraj = 20;
  constexpr double kFactor = 3.0;
  const auto arch = Architecture::brickwork(kL, true);
  std::uint64_t seed = 8000;
  for (int d : {2, 3, 5}) {
    for (double p : {0.05, 0.1, 0.2}) {
      const double t_star = domainwall::thermalization_time(d, p);
      const auto t_max = static_cast<std::size_t>(std::ceil(8 * t_star)) + 16;
      const auto result = ensemble(arch, p, d, t_max, {}, kTraj, ++seed, false);
      const auto t95 = runner::first_crossing(result, result.find("S_total"), 0.95 * kL);
      const std::string tag = "d=" + std::to_string(d) + " p=" + fmt(p);
      if (!t95) {
        check.expect(false, tag + " never reached 0.95 L");
        continue;
      }
      const double ratio = static_cast<double>(*t95) / t_star;
      check.note(tag + " t95/t*=" + fmt(ratio));
      check.expect(ratio <= kFactor && ratio >= 1.0 / kFactor, tag + " ratio " + fmt(ratio));
    }
  }
  return check.outcome();
}

// 9. Initial growth of the ensemble mutual information at d = 2.
Outcome criterion_9() {
  Checker check;
  constexpr std::size_t kL = 64, kA = 32, kTraj = 400;
  constexpr double kRelTol = 0.25;
  const double reference = 2.0 * std::log(5.0 / 4.0);  // nats per layer
  const auto arch = Architecture::brickwork(kL, true);
  const Partition half = Partition::prefix(kL, kA);
  std::uint64_t seed = 9000;
  for (double p : {0.01, 0.05, 0.1}) {
    const double t_star = domainwall::thermalization_time(2, p);
    const auto window = static_cast<std::size_t>(std::min(4.0, std::floor(t_star / 2.0)));
    const auto result = ensemble(arch, p, 2, window, {half}, kTraj, ++seed);
    const auto& series = result.find("mutual", half.label);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < result.times.size(); ++i) {
      x.push_back(static_cast<double>(result.times[i]));
      y.push_back(series.mean[i] * std::log(2.0));
    }
    const double slope = runner::linear_regression(x, y).slope;
    const double rel = slope / reference - 1.0;
    const std::string tag = "p=" + fmt(p) + " over " + std::to_string(window) + " layers";
    check.note(tag + " slope " + fmt(slope) + " (" + fmt(100 * rel) + "%)");
    check.expect(std::abs(rel) <= kRelTol, tag + " slope " + fmt(slope));
  }
  return check.outcome();
}

// 10. Area-law ratio u_0 u_{L/2} / u_{L/4}^2 stays bounded in L.
Outcome criterion_10() {
  Checker check;
  constexpr double kMaxSpread = 10.0;
  const double d = 2.0, p = 0.1;
  const auto t = static_cast<std::size_t>(std::ceil(3.0 * domainwall::thermalization_time(d, p)));
  double lo = 1e300, hi = 0.0;
  for (std::size_t L = 16; L <= 200; L += 4) {
    const double r = domainwall::area_law_ratio(L, t, d, p);
    check.expect(std::isfinite(r) && r > 0, "L=" + std::to_string(L) + " ratio " + fmt(r));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  check.note("t=" + std::to_string(t) + " ratio range [" + fmt(lo) + ", " + fmt(hi) + "]");
  check.expect(hi / lo < kMaxSpread, "max/min " + fmt(hi / lo));
  return check.outcome();
}

// 11. One-qudit identities, large-d limits and trajectory Monte Carlo.
Outcome criterion_11() {
  Checker check;
  constexpr double kTol = 1e-12;
  constexpr double kSigmas = 3.0;
  constexpr std::size_t kSamples = 100000;
  using toy::ToyParams;
  for (int d : {2, 3, 5}) {
    const double log_d = std::log(static_cast<double>(d));
    for (double n : {2.0, 3.0}) {
      const std::string tag = "d=" + std::to_string(d) + " n=" + fmt(n);
      const auto full = toy::trajectory_setup_entropies({d, 1.0, 1, n});
      check.expect(std::abs(full.quenched - log_d) < kTol && std::abs(full.annealed - log_d) < kTol,
                   tag + " p=1 t=1");
      const auto start = toy::trajectory_setup_entropies({d, 0.4, 0, n});
      check.expect(std::abs(start.quenched) < kTol && std::abs(start.annealed) < kTol, tag + " t=0");
      check.expect(std::abs(toy::renyi_channel_setup({d, 0.4, 0, n})) < kTol, tag + " channel t=0");
      check.expect(std::abs(toy::vn_channel_setup({d, 1.0, 1, n}) - log_d) < kTol, tag + " vN p=1");
      for (std::size_t t : {1u, 2u, 5u}) {
        const double q = std::pow(0.7, static_cast<double>(t));
        const ToyParams params{d, 0.3, t, n};
        // Closed forms of the two setups.
        const double quenched = (1 - q) * log_d;
        const double annealed = std::log(q + (1 - q) / std::pow(d, n - 1)) / (1 - n);
        const double l1 = q + (1 - q) / d, l2 = (1 - q) / d;
        const double renyi = std::log(std::pow(l1, n) + (d - 1) * std::pow(l2, n)) / (1 - n);
        const auto e = toy::trajectory_setup_entropies(params);
        check.expect(std::abs(e.quenched - quenched) < kTol, tag + " quenched");
        check.expect(std::abs(e.annealed - annealed) < kTol, tag + " annealed");
        check.expect(std::abs(toy::renyi_channel_setup(params) - renyi) < kTol, tag + " channel");
        // Large-d forms: n t log(1-p) / (1-n) and t log(1-p) / (1-n).
        const double lead = static_cast<double>(t) * std::log(0.7) / (1 - n);
        check.expect(std::abs(toy::renyi_channel_setup_large_d(params) - n * lead) < kTol, tag + " large-d channel");
        check.expect(std::abs(toy::annealed_large_d(params) - lead) < kTol, tag + " large-d annealed");
        // Gap between averaging before and after the logarithm.
        for (double p : {0.05, 0.3, 0.7, 0.95}) {
          const auto g = toy::trajectory_setup_entropies({d, p, t, n});
          check.expect(std::abs(g.quenched - g.annealed) > 0.0, tag + " gap zero at p=" + fmt(p));
        }
      }
      double previous = 1e300;
      for (double p : {0.9, 0.99, 0.999, 0.9999}) {
        const auto g = toy::trajectory_setup_entropies({d, p, 2, n});
        const double gap = std::abs(g.quenched - g.annealed);
        check.expect(gap < previous, tag + " gap not shrinking toward p=1");
        previous = gap;
      }
      check.expect(previous < 1e-6, tag + " gap at p=0.9999 " + fmt(previous));
    }
  }
  // Convergence to the large-d forms: the error falls roughly like 1/d.
  for (double n : {2.0, 3.0}) {
    const ToyParams small{1000, 0.3, 3, n}, big{1000000, 0.3, 3, n};
    const double err_small = std::abs(toy::renyi_channel_setup(small) - toy::renyi_channel_setup_large_d(small));
    const double err_big = std::abs(toy::renyi_channel_setup(big) - toy::renyi_channel_setup_large_d(big));
    check.expect(err_big < 1e-5 && err_big < err_small / 100, "Renyi large-d convergence n=" + fmt(n));
  }
  {
    const ToyParams small{1000, 0.3, 3, 2.0}, big{1000000, 0.3, 3, 2.0};
    const double err_small = std::abs(toy::vn_channel_setup(small) - toy::vn_channel_setup_large_d(small));
    const double err_big = std::abs(toy::vn_channel_setup(big) - toy::vn_channel_setup_large_d(big));
    check.expect(err_big < 1e-4 && err_big < err_small / 100, "vN large-d convergence");
  }
  std::uint64_t seed = 1100;
  double worst_sigma = 0.0;
  for (int d : {2, 3}) {
    for (double p : {0.1, 0.5}) {
      const ToyParams params{d, p, 3, 2.0};
      const auto mc = toy::trajectory_monte_carlo(params, kSamples, ++seed);
      const double exact = toy::trajectory_setup_entropies(params).quenched;
      const double sigma = std::abs(mc.mean - exact) / mc.stderr_;
      worst_sigma = std::max(worst_sigma, sigma);
      check.expect(sigma <= kSigmas, "MC d=" + std::to_string(d) + " p=" + fmt(p) + " sigma " + fmt(sigma));
    }
  }
  check.note("worst MC sigma " + fmt(worst_sigma));
  return check.outcome();
}

// 12. The per-layer growth bound holds on every trajectory of every 1D setup.
Outcome criterion_12() {
  Checker check;
  constexpr std::size_t kL = 32, kTraj = 1000, kTMax = 32;
  const std::vector<Partition> partitions{Partition::prefix(kL, 8), Partition::prefix(kL, 16),
                                          Partition::complement_of("A={3 9 20}", Region(kL, {3, 9, 20}))};
  const std::vector<std::pair<std::string, Architecture>> setups{
      {"periodic", Architecture::brickwork(kL, true)},
      {"open", Architecture::brickwork(kL, false)},
      {"boundary", Architecture::boundary_noise(kL)}};
  std::uint64_t seed = 12000;
  std::size_t total = 0;
  for (const auto& [name, arch] : setups) {
    for (double p : {0.0, 0.1, 0.5}) {
      std::vector<circuit::TrajectoryRecord> records;
      ensemble(arch, p, 2, kTMax, partitions, kTraj, seed, true, &records);
      seed += kTraj;
      std::size_t violations = 0;
      for (const auto& record : records) {
        for (std::size_t k = 0; k < partitions.size(); ++k) {
          if (!circuit::check_small_increment(record, partitions, k)) ++violations;
        }
      }
      total += records.size();
      check.expect(violations == 0, name + " p=" + fmt(p) + ": " + std::to_string(violations) + " violations");
    }
  }
  check.note(std::to_string(total) + " trajectories");
  return check.outcome();
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double max_seconds;  // 0 when no runtime bound applies
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"closed-form recursions", criterion_1, 1.0},
      {"Weingarten validity", criterion_2, 30.0},
      {"three-way replica consistency", criterion_3, 600.0},
      {"stabilizer vs dense equivalence", criterion_4, 300.0},
      {"pure-dynamics plateau", criterion_5, 120.0},
      {"area law of peaks", criterion_6, 0.0},
      {"volume law with boundary-only noise", criterion_7, 0.0},
      {"thermalization timescale", criterion_8, 0.0},
      {"small-t slope", criterion_9, 0.0},
      {"area-law ratio diagnostic", criterion_10, 1.0},
      {"toy-model identities", criterion_11, 0.0},
      {"small-increment bound", criterion_12, 0.0},
  };
  return list;
}

bool run_one(std::size_t index) {
  const auto& c = criteria().at(index - 1);
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string timing = fmt(seconds) + " s";
  if (c.max_seconds > 0) {
    timing += " (limit " + fmt(c.max_seconds) + " s)";
    if (seconds >= c.max_seconds) outcome.pass = false;
  }
  std::cout << "criterion " << index << " [" << c.name << "]: " << (outcome.pass ? "PASS" : "FAIL") << " - "
            << outcome.detail << " - " << timing << std::endl;
  return outcome.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<std::size_t> selected;
  app.add_option("--criterion", selected, "Criterion number(s); all when omitted")
      ->check(CLI::Range(std::size_t{1}, criteria().size()));
  app.add_option("--workers", g_workers, "Worker threads (0 = hardware concurrency)");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (std::size_t i = 1; i <= criteria().size(); ++i) selected.push_back(i);
  }
  bool all = true;
  for (std::size_t index : selected) all = run_one(index) && all;
  return all ? 0 : 1;
}
