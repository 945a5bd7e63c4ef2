#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dscdma/app/commands.hpp"
#include "dscdma/app/scenario_file.hpp"
#include "dscdma/error.hpp"
#include "dscdma/oracle.hpp"
#include "dscdma/outage.hpp"

namespace py = pybind11;
using namespace dscdma;

namespace {

NormalizedPowers powers_from(double omega0, const std::vector<std::tuple<double, double, double>>& interferers)
{
    NormalizedPowers pw{omega0, {}};
    for (const auto& [omega, m, p] : interferers) pw.interferers.push_back({omega, m, p});
    return pw;
}

py::dict to_dict(const SpatialAverage& avg)
{
    py::list gamma, outage, se_outage, tc, se_tc;
    for (const auto& p : avg.points) {
        gamma.append(p.gamma_db);
        outage.append(p.outage.mean);
        se_outage.append(p.outage.std_error);
        tc.append(p.tc.mean);
        se_tc.append(p.tc.std_error);
    }
    py::dict d;
    d["gamma_db"] = gamma;
    d["outage"] = outage;
    d["se_outage"] = se_outage;
    d["tc"] = tc;
    d["se_tc"] = se_tc;
    d["active_interferers"] = avg.active_interferers.mean;
    d["realizations"] = avg.points.empty() ? 0 : avg.points.front().outage.count;
    d["lambda_mode"] = std::string(to_string(avg.lambda_mode));
    return d;
}

ExperimentSpec spec_from(const std::string& scenario, std::optional<std::uint64_t> seed,
                         std::optional<std::size_t> realizations, unsigned threads)
{
    ExperimentSpec spec = app::parse_scenario(scenario).spec;
    if (seed) spec.seed = *seed;
    if (realizations) spec.realizations = *realizations;
    spec.threads = threads;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Nakagami outage and transmission capacity of DS-CDMA ad hoc networks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InfeasiblePacking>(m, "InfeasiblePacking", PyExc_RuntimeError);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);

    m.def(
        "conditional_outage",
        [](double omega0, const std::vector<std::tuple<double, double, double>>& interferers,
           double beta, int m0, double gamma_inv) {
            return conditional_outage({powers_from(omega0, interferers), beta, m0, gamma_inv});
        },
        py::arg("omega0"), py::arg("interferers"), py::arg("beta"), py::arg("m0"),
        py::arg("gamma_inv"),
        "Closed-form outage for normalized powers. interferers: list of (omega, m, p).");

    m.def(
        "simulate_outage",
        [](double omega0, const std::vector<std::tuple<double, double, double>>& interferers,
           double beta, double m0, double gamma_inv, std::uint64_t trials, std::uint64_t seed) {
            const auto r = simulate_outage(powers_from(omega0, interferers), m0, beta, gamma_inv,
                                           trials, seed);
            return py::make_tuple(r.estimate, r.ci99_halfwidth);
        },
        py::arg("omega0"), py::arg("interferers"), py::arg("beta"), py::arg("m0"),
        py::arg("gamma_inv"), py::arg("trials") = 100000, py::arg("seed") = 1,
        "Fading simulation; returns (estimate, 99% CI half-width).");

    m.def(
        "spatial_average_outage",
        [](const std::string& scenario, std::optional<std::uint64_t> seed,
           std::optional<std::size_t> realizations, unsigned threads) {
            const ExperimentSpec spec = spec_from(scenario, seed, realizations, threads);
            SpatialAverage avg;
            {
                py::gil_scoped_release release;
                avg = spatial_average_outage(spec);
            }
            return to_dict(avg);
        },
        py::arg("scenario") = "", py::arg("seed") = py::none(),
        py::arg("realizations") = py::none(), py::arg("threads") = 0,
        "Mean outage per Gamma for a scenario document (key = value lines).");

    m.def(
        "transmission_capacity",
        [](const std::string& scenario, std::optional<std::uint64_t> seed,
           std::optional<std::size_t> realizations, unsigned threads) {
            const ExperimentSpec spec = spec_from(scenario, seed, realizations, threads);
            SpatialAverage avg;
            {
                py::gil_scoped_release release;
                avg = transmission_capacity(spec);
            }
            return to_dict(avg);
        },
        py::arg("scenario") = "", py::arg("seed") = py::none(),
        py::arg("realizations") = py::none(), py::arg("threads") = 0);

    m.def(
        "table1_csv",
        [](const std::string& scenario, std::optional<std::uint64_t> seed,
           std::optional<std::size_t> realizations, unsigned threads) {
            const ExperimentSpec spec = spec_from(scenario, seed, realizations, threads);
            py::gil_scoped_release release;
            return app::table1(spec).to_string();
        },
        py::arg("scenario") = "", py::arg("seed") = py::none(),
        py::arg("realizations") = py::none(), py::arg("threads") = 0);

    m.def(
        "resolve_scenario",
        [](const std::string& scenario) {
            return app::format_scenario(app::parse_scenario(scenario));
        },
        py::arg("scenario"), "Every key with its resolved value.");
}
