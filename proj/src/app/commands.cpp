#include "dscdma/app/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "dscdma/error.hpp"
#include "dscdma/oracle.hpp"
#include "dscdma/outage.hpp"

#ifndef DSCDMA_VERSION
#define DSCDMA_VERSION "unknown"
#endif

namespace dscdma::app {

std::string CsvTable::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    char buf[32];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.6g", row[i]);
            if (i) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

CsvTable outage_table(const ExperimentSpec& spec)
{
    const SpatialAverage avg = spatial_average_outage(spec);
    CsvTable t{{"gamma_db", "outage", "se", "realizations"}, {}};
    for (const auto& p : avg.points)
        t.rows.push_back({p.gamma_db, p.outage.mean, p.outage.std_error,
                          static_cast<double>(p.outage.count)});
    return t;
}

CsvTable tc_table(const ExperimentSpec& spec)
{
    const SpatialAverage avg = transmission_capacity(spec);
    CsvTable t{{"gamma_db", "tc", "se_tc", "outage", "se_outage", "active_interferers"}, {}};
    for (const auto& p : avg.points)
        t.rows.push_back({p.gamma_db, p.tc.mean, p.tc.std_error, p.outage.mean,
                          p.outage.std_error, avg.active_interferers.mean});
    return t;
}

CsvTable sweep_table(const ScenarioFile& file)
{
    const SweepTable table = sweep(file.spec, file.sweep_parameter, file.sweep_values);
    CsvTable t{{std::string(to_string(file.sweep_parameter)), "gamma_db", "tc", "se_tc", "outage",
                "se_outage", "active_interferers"},
               {}};
    for (const auto& row : table.rows)
        for (const auto& p : row.result.points)
            t.rows.push_back({row.value, p.gamma_db, p.tc.mean, p.tc.std_error, p.outage.mean,
                              p.outage.std_error, row.result.active_interferers.mean});
    return t;
}

std::vector<Table1Row> table1_rows()
{
    std::vector<Table1Row> rows;
    for (double ge : {1.0, 48.0})
        for (double alpha : {3.0, 4.0})
            for (double r_ex : {0.0, 1.0 / 12.0})
                for (double r_g : {1.0 / 12.0, 1.0 / 4.0}) rows.push_back({ge, alpha, r_ex, r_g});
    return rows;
}

ExperimentSpec table1_spec(const ExperimentSpec& base, const Table1Row& row,
                           ReceiverLocation location)
{
    ExperimentSpec spec = base;
    spec.channel.effective_gain = row.effective_gain;
    spec.channel.chip_mode = ChipMode::ConstantEffectiveGain;
    spec.channel.alpha = row.alpha;
    spec.scenario.r_ex = row.r_ex;
    spec.scenario.r_g = row.r_g;
    spec.location = location;
    spec.gamma_db = {10.0};
    return spec;
}

CsvTable table1(const ExperimentSpec& base)
{
    CsvTable t{{"G_e", "alpha", "r_ex", "r_g", "eps_c", "se_c", "eps_p", "se_p"}, {}};
    for (const auto& row : table1_rows()) {
        const auto c = spatial_average_outage(table1_spec(base, row, ReceiverLocation::Center));
        const auto p = spatial_average_outage(table1_spec(base, row, ReceiverLocation::Perimeter));
        t.rows.push_back({row.effective_gain, row.alpha, row.r_ex, row.r_g,
                          c.points[0].outage.mean, c.points[0].outage.std_error,
                          p.points[0].outage.mean, p.points[0].outage.std_error});
    }
    return t;
}

OracleInstance random_instance(std::uint64_t seed, std::uint64_t index)
{
    Engine rng = make_stream(seed, index, StreamPurpose::Instance);
    auto pick = [&](std::initializer_list<double> options) {
        std::uniform_int_distribution<std::size_t> d(0, options.size() - 1);
        return options.begin()[d(rng)];
    };
    std::uniform_real_distribution<double> u(0.0, 1.0);

    OracleInstance inst;
    inst.m0 = static_cast<int>(pick({1.0, 2.0, 3.0}));
    inst.beta = std::pow(10.0, (u(rng) * 6.0 - 3.0) / 10.0);
    inst.gamma_inv = std::pow(10.0, -(5.0 + u(rng) * 15.0) / 10.0);
    inst.powers.omega0 = 1.0;
    const int mobiles = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int k = 0; k < mobiles; ++k) {
        const double omega = std::pow(10.0, -1.5 * u(rng));
        inst.powers.interferers.push_back({omega, pick({1.0, 2.0, 3.5}), pick({0.3, 0.5, 1.0})});
    }
    return inst;
}

OracleCheck oracle_check(std::uint64_t seed, int instances, std::uint64_t trials, unsigned workers)
{
    OracleCheck check;
    check.instances = instances;
    check.table.header = {"instance", "m0", "M", "closed_form", "oracle", "ci99", "pass"};
    for (int k = 0; k < instances; ++k) {
        const OracleInstance inst = random_instance(seed, static_cast<std::uint64_t>(k));
        const double exact =
            conditional_outage({inst.powers, inst.beta, inst.m0, inst.gamma_inv});
        const OracleResult sim =
            simulate_outage(inst.powers, inst.m0, inst.beta, inst.gamma_inv, trials,
                            substream_seed(seed, static_cast<std::uint64_t>(k),
                                           StreamPurpose::Oracle),
                            workers);
        const bool pass = sim.covers(exact);
        check.passed += pass ? 1 : 0;
        check.table.rows.push_back({static_cast<double>(k), static_cast<double>(inst.m0),
                                    static_cast<double>(inst.powers.interferers.size()), exact,
                                    sim.estimate, sim.ci99_halfwidth, pass ? 1.0 : 0.0});
    }
    return check;
}

bool oracle_check_ok(const OracleCheck& check) noexcept
{
    return check.passed * 20 >= check.instances * 19;
}

namespace {

void emit(const RunOptions& o, const ScenarioFile& file, const std::string& csv,
          std::ostream& out)
{
    if (!o.out_dir) {
        out << csv;
        return;
    }
    std::filesystem::create_directories(*o.out_dir);
    const std::filesystem::path dir(*o.out_dir);
    std::ofstream(dir / (o.command + ".csv"), std::ios::binary) << csv;
    std::ofstream meta(dir / (o.command + ".meta"), std::ios::binary);
    meta << "# command: " << o.command << '\n'
         << "# code_version: " << DSCDMA_VERSION << '\n'
         << format_scenario(file);
}

}  // namespace

int run(const RunOptions& o, std::ostream& out, std::ostream& err)
{
    try {
        ScenarioFile file = o.scenario_path ? load_scenario(*o.scenario_path) : ScenarioFile{};
        if (o.seed) file.spec.seed = *o.seed;
        if (o.realizations) file.spec.realizations = *o.realizations;
        if (o.threads) file.spec.threads = *o.threads;
        if (o.lambda_mode) file.spec.lambda_mode = parse_lambda_mode(*o.lambda_mode);

        if (o.command == "oracle-check") {
            if (o.instances < 1 || o.trials < 1)
                throw ValidationError("oracle-check needs at least one instance and trial");
            const unsigned workers = file.spec.threads ? file.spec.threads : 1;
            const OracleCheck check = oracle_check(file.spec.seed, o.instances, o.trials, workers);
            emit(o, file, check.table.to_string(), out);
            err << check.passed << "/" << check.instances << " instances within the 99% CI\n";
            return oracle_check_ok(check) ? kOk : kOracleMismatch;
        }

        file.spec.validate();
        std::string csv;
        if (o.command == "outage")
            csv = outage_table(file.spec).to_string();
        else if (o.command == "tc")
            csv = tc_table(file.spec).to_string();
        else if (o.command == "sweep")
            csv = sweep_table(file).to_string();
        else if (o.command == "table1")
            csv = table1(file.spec).to_string();
        else
            throw ValidationError("unknown command '" + o.command + "'");
        emit(o, file, csv, out);
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InfeasiblePacking& e) {
        err << "infeasible packing: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        err << "invalid scenario: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::domain_error& e) {
        err << "invalid scenario: " << e.what() << '\n';
        return kValidationError;
    }
}

}  // namespace dscdma::app
