#include "dscdma/app/scenario_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dscdma/error.hpp"

namespace dscdma::app {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Thrown by the value parsers; turned into a ParseError with key and line.
struct BadValue {
    std::string what;
};

double plain_number(std::string_view s)
{
    s = trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw BadValue{"not a number: '" + std::string(s) + "'"};
    return v;
}

double number(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return plain_number(s);
    const double den = plain_number(s.substr(slash + 1));
    if (den == 0.0) throw BadValue{"zero denominator"};
    return plain_number(s.substr(0, slash)) / den;
}

template <class Int>
Int integer(std::string_view s)
{
    s = trim(s);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw BadValue{"not an integer: '" + std::string(s) + "'"};
    return v;
}

std::vector<double> number_list(std::string_view s)
{
    std::vector<double> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(number(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

bool boolean(std::string_view s)
{
    if (s == "true") return true;
    if (s == "false") return false;
    throw BadValue{"expected true or false, got '" + std::string(s) + "'"};
}

template <class E>
E choice(std::string_view s, std::initializer_list<std::pair<std::string_view, E>> options)
{
    std::string names;
    for (const auto& [name, value] : options) {
        if (s == name) return value;
        names += names.empty() ? "" : "|";
        names += name;
    }
    throw BadValue{"expected " + names + ", got '" + std::string(s) + "'"};
}

SweepParameter sweep_parameter(std::string_view s)
{
    return choice<SweepParameter>(s, {{"tx_distance", SweepParameter::TxDistance},
                                      {"r_g", SweepParameter::GuardRadius},
                                      {"r_ex", SweepParameter::ExclusionRadius},
                                      {"M", SweepParameter::Mobiles},
                                      {"gamma_db", SweepParameter::Gamma}});
}

using Setter = std::function<void(ScenarioFile&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters()
{
    static const std::map<std::string, Setter, std::less<>> table{
        {"r_net", [](ScenarioFile& f, std::string_view v) { f.spec.scenario.r_net = number(v); }},
        {"M", [](ScenarioFile& f, std::string_view v) { f.spec.scenario.mobiles = integer<int>(v); }},
        {"r_ex", [](ScenarioFile& f, std::string_view v) { f.spec.scenario.r_ex = number(v); }},
        {"r_g", [](ScenarioFile& f, std::string_view v) { f.spec.scenario.r_g = number(v); }},
        {"tx_distance",
         [](ScenarioFile& f, std::string_view v) { f.spec.scenario.tx_distance = number(v); }},
        {"receiver",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.location = choice<ReceiverLocation>(
                 v, {{"center", ReceiverLocation::Center},
                     {"perimeter", ReceiverLocation::Perimeter}});
         }},
        {"perimeter_tx",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.perimeter_direction = choice<PerimeterDirection>(
                 v, {{"inward", PerimeterDirection::Inward},
                     {"outward", PerimeterDirection::Outward}});
         }},
        {"alpha", [](ScenarioFile& f, std::string_view v) { f.spec.channel.alpha = number(v); }},
        {"sigma_s_db",
         [](ScenarioFile& f, std::string_view v) { f.spec.channel.sigma_s_db = number(v); }},
        {"shadowing_parameter",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.channel.shadowing_parameter = choice<ShadowingParameter>(
                 v, {{"std", ShadowingParameter::StdDev},
                     {"variance", ShadowingParameter::Variance}});
         }},
        {"beta_db", [](ScenarioFile& f, std::string_view v) { f.spec.channel.beta_db = number(v); }},
        {"m0", [](ScenarioFile& f, std::string_view v) { f.spec.channel.m0 = integer<int>(v); }},
        {"m_i", [](ScenarioFile& f, std::string_view v) { f.spec.channel.m_i = number(v); }},
        {"p_active",
         [](ScenarioFile& f, std::string_view v) { f.spec.scenario.p_active = number(v); }},
        {"G_e",
         [](ScenarioFile& f, std::string_view v) { f.spec.channel.effective_gain = number(v); }},
        {"G",
         [](ScenarioFile& f, std::string_view v) { f.spec.channel.processing_gain = number(v); }},
        {"chip_mode",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.channel.chip_mode = choice<ChipMode>(
                 v, {{"constant", ChipMode::ConstantEffectiveGain},
                     {"random_offset", ChipMode::RandomOffset}});
         }},
        {"power_ratio",
         [](ScenarioFile& f, std::string_view v) { f.spec.channel.power_ratio = number(v); }},
        {"snr_reference",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.channel.snr_reference = choice<SnrReference>(
                 v, {{"unit", SnrReference::UnitDistance}, {"link", SnrReference::ReferenceLink}});
         }},
        {"d0",
         [](ScenarioFile& f, std::string_view v) { f.spec.channel.reference_distance = number(v); }},
        {"clamp_near_field",
         [](ScenarioFile& f, std::string_view v) { f.spec.channel.clamp_near_field = boolean(v); }},
        {"exclusion_around_receiver",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.scenario.exclusion_around_receiver = boolean(v);
         }},
        {"retry_cap",
         [](ScenarioFile& f, std::string_view v) {
             f.spec.scenario.retry_cap = integer<std::size_t>(v);
         }},
        {"gamma_db", [](ScenarioFile& f, std::string_view v) { f.spec.gamma_db = number_list(v); }},
        {"realizations",
         [](ScenarioFile& f, std::string_view v) { f.spec.realizations = integer<std::size_t>(v); }},
        {"seed", [](ScenarioFile& f, std::string_view v) { f.spec.seed = integer<std::uint64_t>(v); }},
        {"lambda_mode",
         [](ScenarioFile& f, std::string_view v) { f.spec.lambda_mode = parse_lambda_mode(v); }},
        {"sweep_parameter",
         [](ScenarioFile& f, std::string_view v) { f.sweep_parameter = sweep_parameter(v); }},
        {"sweep_values",
         [](ScenarioFile& f, std::string_view v) { f.sweep_values = number_list(v); }},
    };
    return table;
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num_list(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + num(values[i]);
    return out;
}

}  // namespace

LambdaMode parse_lambda_mode(std::string_view text)
{
    try {
        return choice<LambdaMode>(text, {{"weighted", LambdaMode::Weighted},
                                         {"count", LambdaMode::Count},
                                         {"interferers", LambdaMode::Interferers}});
    } catch (const BadValue& e) {
        throw ParseError("lambda_mode: " + e.what, "lambda_mode", 0);
    }
}

ScenarioFile parse_scenario(std::string_view text)
{
    ScenarioFile file;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value",
                             std::string(line), line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                             key, line_no);
        }
        if (!seen.insert(key).second) {
            throw ParseError("line " + std::to_string(line_no) + ": repeated key '" + key + "'",
                             key, line_no);
        }
        try {
            it->second(file, value);
        } catch (const BadValue& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + key + ": " + e.what, key,
                             line_no);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), key, line_no);
        }
    }
    return file;
}

ScenarioFile load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path, "", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string format_scenario(const ScenarioFile& file)
{
    const ExperimentSpec& s = file.spec;
    const NetworkScenario& n = s.scenario;
    const ChannelParams& c = s.channel;
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

    std::ostringstream out;
    out << "r_net = " << num(n.r_net) << '\n'
        << "M = " << n.mobiles << '\n'
        << "r_ex = " << num(n.r_ex) << '\n'
        << "r_g = " << num(n.r_g) << '\n'
        << "tx_distance = " << num(n.tx_distance) << '\n'
        << "receiver = " << (s.location == ReceiverLocation::Center ? "center" : "perimeter") << '\n'
        << "perimeter_tx = "
        << (s.perimeter_direction == PerimeterDirection::Inward ? "inward" : "outward") << '\n'
        << "p_active = " << num(n.p_active) << '\n'
        << "exclusion_around_receiver = " << flag(n.exclusion_around_receiver) << '\n'
        << "retry_cap = " << n.retry_cap << '\n'
        << "alpha = " << num(c.alpha) << '\n'
        << "sigma_s_db = " << num(c.sigma_s_db) << '\n'
        << "shadowing_parameter = "
        << (c.shadowing_parameter == ShadowingParameter::StdDev ? "std" : "variance") << '\n'
        << "beta_db = " << num(c.beta_db) << '\n'
        << "m0 = " << c.m0 << '\n'
        << "m_i = " << num(c.m_i) << '\n'
        << "G_e = " << num(c.effective_gain) << '\n'
        << "G = " << num(c.processing_gain) << '\n'
        << "chip_mode = "
        << (c.chip_mode == ChipMode::ConstantEffectiveGain ? "constant" : "random_offset") << '\n'
        << "power_ratio = " << num(c.power_ratio) << '\n'
        << "snr_reference = "
        << (c.snr_reference == SnrReference::UnitDistance ? "unit" : "link") << '\n'
        << "d0 = " << num(c.reference_distance) << '\n'
        << "clamp_near_field = " << flag(c.clamp_near_field) << '\n'
        << "gamma_db = " << num_list(s.gamma_db) << '\n'
        << "realizations = " << s.realizations << '\n'
        << "seed = " << s.seed << '\n'
        << "lambda_mode = " << to_string(s.lambda_mode) << '\n'
        << "sweep_parameter = " << to_string(file.sweep_parameter) << '\n'
        << "sweep_values = " << num_list(file.sweep_values) << '\n';
    return out.str();
}

}  // namespace dscdma::app
