#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dscdma/montecarlo.hpp"

namespace dscdma::app {

/// A parsed scenario document: the experiment plus the sweep definition.
struct ScenarioFile {
    ExperimentSpec spec;
    SweepParameter sweep_parameter = SweepParameter::GuardRadius;
    std::vector<double> sweep_values{1.0 / 6.0, 5.0 / 24.0, 1.0 / 4.0, 7.0 / 24.0, 1.0 / 3.0};

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

/// Parses "key = value" lines. Blank lines and lines starting with '#' are
/// ignored; numbers may be written as fractions such as 1/12; lists are
/// comma separated. Unknown or repeated keys throw ParseError.
ScenarioFile parse_scenario(std::string_view text);

ScenarioFile load_scenario(const std::string& path);

/// Every key with its resolved value, at full precision so that
/// parse_scenario(format_scenario(f)) == f.
std::string format_scenario(const ScenarioFile& file);

LambdaMode parse_lambda_mode(std::string_view text);

}  // namespace dscdma::app
