#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dscdma/app/scenario_file.hpp"
#include "dscdma/montecarlo.hpp"

namespace dscdma::app {

/// Header plus numeric rows; printed with 6 significant digits.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_string() const;
};

CsvTable outage_table(const ExperimentSpec& spec);
CsvTable tc_table(const ExperimentSpec& spec);
CsvTable sweep_table(const ScenarioFile& file);

/// One row of the reference outage table.
struct Table1Row {
    double effective_gain;
    double alpha;
    double r_ex;
    double r_g;
};

/// The 16 rows, G_e slowest and r_g fastest.
std::vector<Table1Row> table1_rows();

/// Applies a row to `base` (Gamma = 10 dB; everything else taken from base).
ExperimentSpec table1_spec(const ExperimentSpec& base, const Table1Row& row,
                           ReceiverLocation location);

/// Columns G_e, alpha, r_ex, r_g, eps_c, se_c, eps_p, se_p.
CsvTable table1(const ExperimentSpec& base);

struct OracleInstance {
    NormalizedPowers powers;
    int m0 = 1;
    double beta = 1.0;
    double gamma_inv = 0.0;
};

/// Random small instance: M in 1..5, m_i in {1, 2, 3.5}, p_i in {0.3, 0.5, 1},
/// m0 in {1, 2, 3}.
OracleInstance random_instance(std::uint64_t seed, std::uint64_t index);

struct OracleCheck {
    CsvTable table;  ///< instance, m0, M, closed_form, oracle, ci99, pass
    int passed = 0;
    int instances = 0;
};

OracleCheck oracle_check(std::uint64_t seed, int instances, std::uint64_t trials, unsigned workers);

/// Passing bar for oracle-check: at least 95% of instances inside the CI.
bool oracle_check_ok(const OracleCheck& check) noexcept;

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kValidationError = 2,
    kInfeasible = 3,
    kOracleMismatch = 4,
};

struct RunOptions {
    std::string command;
    std::optional<std::string> scenario_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> realizations;
    std::optional<unsigned> threads;
    std::optional<std::string> lambda_mode;
    std::optional<std::string> out_dir;
    std::uint64_t trials = 1'000'000;
    int instances = 20;
};

/// Runs one subcommand. Without an output directory the CSV goes to `out`;
/// with one, <command>.csv and <command>.meta are written there.
int run(const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace dscdma::app
