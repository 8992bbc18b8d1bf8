#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "chanent/circuit/clifford_sampler.h"
#include "chanent/circuit/ensemble.h"
#include "chanent/common/rational.h"
#include "chanent/common/rng.h"
#include "chanent/domainwall/domainwall.h"
#include "chanent/oracle/twirl.h"
#include "chanent/replica/weingarten.h"
#include "chanent/runner/config.h"
#include "chanent/runner/runner.h"
#include "chanent/stabilizer/mixed_state.h"
#include "chanent/toy/toy_qudit.h"

namespace py = pybind11;
using namespace py::literals;

namespace {

using chanent::Rational;
using chanent::stabilizer::MixedStabilizerState;
using chanent::stabilizer::Region;

// Exact values cross the boundary as "num/den" strings; the Python package
// turns them into fractions.Fraction.
std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(chanent::to_string(v));
  return out;
}

Region region(const MixedStabilizerState& state, const std::vector<std::size_t>& sites) {
  return Region(state.size(), sites);
}

py::dict ensemble(std::size_t L, double p, std::size_t t_max, std::size_t n_traj, std::uint64_t seed, int d,
                  const std::vector<std::size_t>& partitions, bool periodic, unsigned workers) {
  using namespace chanent::circuit;
  const auto arch = Architecture::brickwork(L, periodic);
  std::vector<Partition> parts;
  for (std::size_t a : partitions) parts.push_back(Partition::prefix(L, a));
  if (parts.empty()) parts.push_back(Partition::prefix(L, L / 2));
  EnsembleOptions options;
  options.trajectory.d = d;
  options.trajectory.t_max = t_max;
  options.n_traj = n_traj;
  options.base_seed = seed;
  options.workers = workers;
  const auto result = ensemble_average(arch, NoiseModel::defaults_for(arch, p), parts, options);
  py::dict series;
  for (const auto& s : result.series) {
    const std::string key = s.partition.empty() ? s.observable : s.observable + ":" + s.partition;
    series[py::str(key)] = py::dict("mean"_a = s.mean, "stderr"_a = s.stderr_);
  }
  return py::dict("times"_a = result.times, "n_traj"_a = result.n_traj, "series"_a = series);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement dynamics of random quantum channels";
  m.attr("__version__") = chanent::runner::code_version();

  py::register_exception<chanent::runner::ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<MixedStabilizerState>(m, "StabilizerState")
      .def_static("product_state", &MixedStabilizerState::product_state, "n"_a, "d"_a = 2)
      .def_static("maximally_mixed", &MixedStabilizerState::maximally_mixed, "n"_a, "d"_a = 2)
      .def_property_readonly("size", &MixedStabilizerState::size)
      .def_property_readonly("d", &MixedStabilizerState::dim)
      .def_property_readonly("rank", &MixedStabilizerState::rank)
      .def(
          "apply_random_clifford",
          [](MixedStabilizerState& s, const std::vector<std::size_t>& sites, std::uint64_t seed) {
            chanent::CounterRng rng(chanent::derive_stream_key(seed, 0));
            s.apply(chanent::circuit::sample_random_clifford(s.dim(), sites.size(), rng), sites);
          },
          "sites"_a, "seed"_a)
      .def("apply_trace", [](MixedStabilizerState& s, const std::vector<std::size_t>& sites) { s.apply_trace(sites); },
           "sites"_a)
      .def("total_entropy", &MixedStabilizerState::total_entropy_dits)
      .def("entropy", [](const MixedStabilizerState& s, const std::vector<std::size_t>& a) {
        return s.entropy_dits(region(s, a));
      }, "a"_a)
      .def("mutual_information", [](const MixedStabilizerState& s, const std::vector<std::size_t>& a,
                                    const std::vector<std::size_t>& b) {
        return s.mutual_information_dits(region(s, a), region(s, b));
      }, "a"_a, "b"_a)
      .def("operator_entanglement", [](const MixedStabilizerState& s, const std::vector<std::size_t>& a) {
        return s.operator_entanglement_dits(region(s, a));
      }, "a"_a)
      .def("log_negativity", [](const MixedStabilizerState& s, const std::vector<std::size_t>& a) {
        return s.log_negativity_bits(region(s, a));
      }, "a"_a);

  m.def("simulate", &ensemble, "L"_a, "p"_a, "t_max"_a, "n_traj"_a = 1, "seed"_a = 0, "d"_a = 2,
        "partitions"_a = std::vector<std::size_t>{}, "periodic"_a = true, "workers"_a = 1,
        "Ensemble-averaged S_total and mutual information (dits) on a brickwork chain.");

  m.def(
      "weingarten",
      [](std::size_t q, const std::string& dimension) {
        const auto table = chanent::replica::weingarten(q, chanent::parse_rational(dimension));
        std::vector<std::pair<std::vector<std::size_t>, std::string>> out;
        for (const auto& [type, value] : table.values()) out.emplace_back(type, chanent::to_string(value));
        return out;
      },
      "q"_a, "dimension"_a, "Weingarten values keyed by cycle type.");
  m.def("moebius", py::overload_cast<const chanent::replica::CycleType&>(&chanent::replica::moebius), "cycle_type"_a);

  m.def("hanging_u", [](std::size_t n, const std::string& d, const std::string& p) {
    return to_strings(chanent::domainwall::hanging_u(n, chanent::parse_rational(d), chanent::parse_rational(p)));
  }, "n"_a, "d"_a, "p"_a);
  m.def("attached_w", [](std::size_t L, const std::string& d, const std::string& p) {
    return chanent::to_string(chanent::domainwall::attached_w(L, chanent::parse_rational(d), chanent::parse_rational(p)));
  }, "L"_a, "d"_a, "p"_a);
  m.def("z_bb_large_t", [](std::size_t L, const std::string& d, const std::string& p) {
    return chanent::to_string(chanent::domainwall::z_bb_large_t(L, chanent::parse_rational(d), chanent::parse_rational(p)));
  }, "L"_a, "d"_a, "p"_a);
  m.def("thermalization_time", &chanent::domainwall::thermalization_time, "d"_a, "p"_a);
  m.def("area_law_ratio", &chanent::domainwall::area_law_ratio, "L"_a, "t"_a, "d"_a, "p"_a);
  m.def("mutual_info_small_t", [](double d, double p, std::size_t L, std::size_t t, bool corrected) {
    return chanent::domainwall::mutual_info_small_t({d, p, L, t}, corrected);
  }, "d"_a, "p"_a, "L"_a, "t"_a, "d2_corrected"_a = false);

  m.def("renyi_channel_setup", [](int d, double p, std::size_t t, double n) {
    return chanent::toy::renyi_channel_setup({d, p, t, n});
  }, "d"_a, "p"_a, "t"_a, "n"_a = 2.0);
  m.def("vn_channel_setup", [](int d, double p, std::size_t t) {
    return chanent::toy::vn_channel_setup({d, p, t, 2.0});
  }, "d"_a, "p"_a, "t"_a);
  m.def("trajectory_setup_entropies", [](int d, double p, std::size_t t, double n) {
    const auto e = chanent::toy::trajectory_setup_entropies({d, p, t, n});
    return py::make_tuple(e.quenched, e.annealed);
  }, "d"_a, "p"_a, "t"_a, "n"_a = 2.0, "(quenched, annealed) entropies in nats.");

  m.def(
      "two_copy_twirl_average",
      [](std::size_t L, std::size_t depth, int d, const std::string& p, const std::string& top,
         const std::vector<std::size_t>& a) {
        const auto arch = chanent::circuit::Architecture::brickwork(L, true);
        return chanent::oracle::two_copy_twirl_average(arch, depth, d, chanent::parse_rational(p),
                                                       chanent::oracle::parse_top_boundary(top), Region(L, a));
      },
      "L"_a, "depth"_a, "d"_a, "p"_a, "top"_a, "a"_a, "Exact averaged two-copy swap expectation on a periodic chain.");

  m.def(
      "run_config",
      [](const std::string& config_json) {
        const auto json = chanent::runner::Json::parse(config_json);
        const auto report = chanent::runner::run(chanent::runner::parse_config(json));
        return py::dict("dir"_a = report.dir.string(), "files"_a = report.files, "summary"_a = report.summary.dump(),
                        "passed"_a = report.passed);
      },
      "config_json"_a, "Runs one experiment config (JSON text) and returns its report.");
  m.def(
      "reproduce",
      [](const std::string& figure, const std::string& out_dir, bool quick, std::uint64_t seed) {
        chanent::runner::ReproduceOptions options;
        options.out_dir = out_dir;
        options.quick = quick;
        options.seed = seed;
        const auto report = chanent::runner::reproduce(figure, options);
        return py::dict("dir"_a = report.dir.string(), "files"_a = report.files, "summary"_a = report.summary.dump());
      },
      "figure"_a, "out_dir"_a, "quick"_a = true, "seed"_a = 1);
}
