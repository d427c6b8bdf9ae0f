// Command-line front end: validate scenarios, print thresholds, classify the
// regime, run seeded simulations, sweep grids, and self-verify the closed
// forms against their enumeration oracles.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "banknet/banknet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParams = 1; // structural/restriction/domain problem
constexpr int kExitIo = 2;     // unreadable input, unwritable output, bad usage
constexpr int kExitInternal = 3; // invariant violation, verify mismatch

struct Options {
    std::string scenario_path;
    std::string format = "json";
    std::string output;
    std::string sweep_spec;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::string insured; // "", "true", "false"
    bool intervene = false;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--scenario", o.scenario_path, "scenario JSON file")
        ->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", o.output, "write the report here instead of stdout");
    cmd->add_option("--seed", o.seed, "override the scenario seed");
    cmd->add_option("--trials", o.trials, "override the scenario trial count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--insured", o.insured, "force counter-party cover on or off")
        ->check(CLI::IsMember({"true", "false"}));
    cmd->add_flag("--intervene", o.intervene,
                  "stabilize banks with >= r failed neighbors by injecting I");
}

// Commands past `validate` need a scenario that clears every restriction.
void require_valid(const banknet::ModelParams& mp)
{
    const banknet::ValidationReport rep = banknet::validate_params(mp);
    if (rep.all_pass) return;
    std::string failed;
    for (const auto& rc : rep.restrictions)
        if (!rc.pass) failed += (failed.empty() ? "" : ", ") + ("eq" + std::to_string(rc.id));
    throw banknet::invalid_params("scenario fails restriction(s): " + failed);
}

void emit(const banknet::Json& report, const std::string& csv, const Options& o)
{
    if (o.format == "csv")
        banknet::write_output(csv, o.output);
    else
        banknet::write_output(report.dump(2) + "\n", o.output);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ring-network banking model"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* c_validate = app.add_subcommand(
        "validate", "evaluate the six parameter restrictions");
    CLI::App* c_thresholds = app.add_subcommand(
        "thresholds", "break-even debt levels and probability thresholds");
    CLI::App* c_classify =
        app.add_subcommand("classify", "equilibrium regime and welfare flags");
    CLI::App* c_simulate =
        app.add_subcommand("simulate", "seeded Monte Carlo of shock cascades");
    CLI::App* c_verify = app.add_subcommand(
        "verify", "closed forms versus enumeration oracles and identities");
    CLI::App* c_sweep =
        app.add_subcommand("sweep", "regime/threshold grid over p and r");
    for (CLI::App* c :
         {c_validate, c_thresholds, c_classify, c_simulate, c_verify, c_sweep})
        add_common(c, opt);
    c_sweep->add_option("--sweep", opt.sweep_spec,
                        "grid spec, e.g. \"p=0:0.001:0.01,r=1..3\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitIo;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        banknet::Scenario sc = banknet::load_scenario(opt.scenario_path);
        if (chosen->count("--seed")) sc.seed = opt.seed;
        if (chosen->count("--trials")) sc.trials = opt.trials;
        const banknet::ModelParams& mp = sc.params;

        if (chosen == c_validate) {
            const banknet::ValidationReport rep = banknet::validate_params(mp);
            banknet::Json j = banknet::make_report("validate", sc.seed);
            j["params"] = banknet::json_of(mp);
            j.update(banknet::json_of(rep));
            emit(j, banknet::csv_of(rep, sc.seed), opt);
            return rep.all_pass ? kExitOk : kExitParams;
        }

        if (chosen == c_thresholds) {
            require_valid(mp);
            const banknet::ThresholdSet t = banknet::compute_thresholds(mp);
            banknet::Json j = banknet::make_report("thresholds", sc.seed);
            j["params"] = banknet::json_of(mp);
            j["thresholds"] = banknet::json_of(t);
            j["thresholds_above_one"] = banknet::thresholds_above_one(t);
            emit(j, banknet::csv_of(t, sc.seed), opt);
            return kExitOk;
        }

        if (chosen == c_classify) {
            require_valid(mp);
            const banknet::ThresholdSet t = banknet::compute_thresholds(mp);
            const banknet::RegimeReport rep = banknet::classify_regime(mp, t);
            const banknet::WelfareGains g = banknet::welfare_gains(mp, t);
            banknet::Json j = banknet::make_report("classify", sc.seed);
            j["params"] = banknet::json_of(mp);
            j.update(banknet::json_of(rep));
            j["welfare"] =
                banknet::Json{{"private_deviation_gain", g.private_deviation_gain},
                              {"social_gain", g.social_gain}};
            emit(j, banknet::csv_of(rep, sc.seed), opt);
            return kExitOk;
        }

        if (chosen == c_simulate) {
            require_valid(mp);
            bool insured = 4 * mp.r >= mp.n; // the model's own cover rule
            if (opt.insured == "true") insured = true;
            if (opt.insured == "false") insured = false;
            const banknet::MCReport rep = banknet::monte_carlo(
                mp, sc.trials, sc.seed, insured, opt.intervene);
            banknet::Json j = banknet::make_report("simulate", sc.seed);
            j["params"] = banknet::json_of(mp);
            j["report"] = banknet::json_of(rep);
            emit(j, banknet::csv_of(rep), opt);
            return kExitOk;
        }

        if (chosen == c_verify) {
            require_valid(mp);
            const auto checks = banknet::run_verify_suite(mp);
            bool all = true;
            for (const auto& c : checks) all = all && c.pass;
            banknet::Json j = banknet::make_report("verify", sc.seed);
            j["params"] = banknet::json_of(mp);
            j.update(banknet::json_of(checks));
            emit(j, banknet::csv_of(checks, sc.seed), opt);
            return all ? kExitOk : kExitInternal;
        }

        // sweep
        const banknet::SweepSpec spec = banknet::parse_sweep(opt.sweep_spec);
        const auto rows = banknet::run_sweep(mp, spec);
        banknet::Json j = banknet::make_report("sweep", sc.seed);
        j["params"] = banknet::json_of(mp);
        j["rows"] = banknet::json_of(rows);
        emit(j, banknet::csv_of(rows, sc.seed), opt);
        return kExitOk;
    } catch (const banknet::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const banknet::invalid_params& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParams;
    } catch (const banknet::degenerate_model& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParams;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}
