// Command-line front end: flag parsing and config-file layering only.
// All behavior lives in the fairga library so it stays testable.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <CLI11.hpp>

#include "fairga/experiment.hpp"

namespace {

bool parse_value(const std::string& s, double& out) {
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_value(const std::string& s, int& out) {
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_value(const std::string& s, std::uint64_t& out) {
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_value(const std::string& s, std::string& out) {
    out = s;
    return true;
}

bool parse_value(const std::string& s, std::filesystem::path& out) {
    out = s;
    return true;
}

// Options that may also come from a config file. The file only fills in
// flags the command line left untouched, so the command line always wins.
class KeyedOptions {
public:
    template <typename T>
    void add(CLI::App* cmd, const std::string& flag, const std::string& key, T& var,
             const std::string& desc) {
        CLI::Option* opt = cmd->add_option(flag, var, desc);
        entries_[key] = {opt, [&var](const std::string& s) { return parse_value(s, var); }};
    }

    /// Applies file pairs to unset options. Returns an error message, or
    /// empty on success.
    std::string apply_file(const std::map<std::string, std::string>& kv) const {
        for (const auto& [key, value] : kv) {
            const auto it = entries_.find(key);
            if (it == entries_.end()) return "unknown config key '" + key + "'";
            if (it->second.opt->count() > 0) continue;
            if (!it->second.apply(value))
                return "bad value for config key '" + key + "': '" + value + "'";
        }
        return {};
    }

private:
    struct Entry {
        CLI::Option* opt = nullptr;
        std::function<bool(const std::string&)> apply;
    };
    std::map<std::string, Entry> entries_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Flat "key = value" lines; '#' starts a comment; blank lines are ignored.
std::optional<std::map<std::string, std::string>> load_config_file(const std::string& path,
                                                                   std::string& err) {
    std::ifstream is(path);
    if (!is) {
        err = "cannot read config file '" + path + "'";
        return std::nullopt;
    }
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        const auto stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            err = "config line " + std::to_string(lineno) + " is not 'key = value'";
            return std::nullopt;
        }
        const auto key = trim(stripped.substr(0, eq));
        const auto value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            err = "config line " + std::to_string(lineno) + " has an empty key";
            return std::nullopt;
        }
        kv[std::string(key)] = std::string(value);
    }
    return kv;
}

struct ExperimentCli {
    fairga::ExperimentSpec spec;
    std::string algorithm;
    std::string config_path;
    KeyedOptions keyed;
};

void add_experiment_flags(CLI::App* cmd, ExperimentCli& st, bool with_threshold) {
    cmd->add_option("--config", st.config_path, "Config file with flat key = value lines");
    auto& k = st.keyed;
    k.add(cmd, "--algorithm", "algorithm", st.algorithm, "Engine selection: fairga, ga, or both");
    k.add(cmd, "--objective", "objective", st.spec.objective,
          "Benchmark objective: berlich or schwefel");
    k.add(cmd, "--s-max", "s-max", st.spec.config.s_max, "Maximum population size");
    k.add(cmd, "--l-min", "l-min", st.spec.config.l_min,
          "Minimum chromosome lifetime in iterations");
    k.add(cmd, "--s-dispose", "s-dispose", st.spec.config.s_dispose,
          "Maximum discards per iteration");
    k.add(cmd, "--r-rampup", "r-rampup", st.spec.config.r_rampup,
          "Ramp-up seeding rate as a fraction of s-max per iteration");
    k.add(cmd, "--n-max", "n-max", st.spec.config.n_max, "Total iterations per run");
    k.add(cmd, "--crossover-rate", "crossover-rate", st.spec.config.crossover_rate,
          "Crossover probability");
    k.add(cmd, "--mutation-rate", "mutation-rate", st.spec.config.mutation_rate,
          "Per-chromosome mutation probability");
    k.add(cmd, "--replicates", "replicates", st.spec.replicates, "Number of replicates");
    k.add(cmd, "--seed", "seed", st.spec.seed_base, "Seed base; replicate i uses seed + i");
    k.add(cmd, "--out", "out", st.spec.output_dir, "Output directory for CSV files");
    if (with_threshold)
        k.add(cmd, "--threshold", "threshold", st.spec.threshold,
              "Relative tolerance of the reached-optimum test");
}

int dispatch_experiment(ExperimentCli& st, bool is_compare) {
    if (!st.config_path.empty()) {
        std::string err;
        const auto kv = load_config_file(st.config_path, err);
        if (!kv) {
            std::cerr << "error: " << err << '\n';
            return fairga::cli::kExitConfig;
        }
        if (const auto msg = st.keyed.apply_file(*kv); !msg.empty()) {
            std::cerr << "error: " << msg << '\n';
            return fairga::cli::kExitConfig;
        }
    }
    const auto algo = fairga::algorithm_by_name(st.algorithm);
    if (!algo) {
        std::cerr << "error: unknown algorithm '" << st.algorithm << "'\n";
        return fairga::cli::kExitConfig;
    }
    st.spec.algorithm = *algo;
    return is_compare ? fairga::cli::compare(st.spec, std::cout, std::cerr)
                      : fairga::cli::run(st.spec, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"FairGA experiment harness: a GA that guarantees every chromosome a minimum "
                 "lifetime, a conventional GA baseline, and a product-lifetime resource-flow "
                 "model"};
    app.require_subcommand(1);

    ExperimentCli run_cli;
    run_cli.algorithm = "fairga";
    CLI::App* run_cmd =
        app.add_subcommand("run", "Run replicates and write per-iteration trace CSVs");
    add_experiment_flags(run_cmd, run_cli, false);

    ExperimentCli cmp_cli;
    cmp_cli.algorithm = "both";
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare", "Run both engines on identical seeds and report cost to the optimum");
    add_experiment_flags(cmp_cmd, cmp_cli, true);

    fairga::FlowModelParams flow;
    bool as_csv = false;
    std::string flow_config;
    KeyedOptions flow_keyed;
    CLI::App* sus_cmd = app.add_subcommand(
        "sustainability", "Evaluate the resource-flow model with and without lifetime extension");
    sus_cmd->add_option("--config", flow_config, "Config file with flat key = value lines");
    sus_cmd->add_flag("--csv", as_csv, "Emit full-precision CSV instead of the text table");
    flow_keyed.add(sus_cmd, "--res-r", "res-r", flow.res_r, "Resource per product unit");
    flow_keyed.add(sus_cmd, "--prod-vol", "prod-vol", flow.prod_vol, "Products in use");
    flow_keyed.add(sus_cmd, "--recy-r", "recy-r", flow.recy_r,
                   "Fraction of retired products recycled");
    flow_keyed.add(sus_cmd, "--res-rec", "res-rec", flow.res_rec,
                   "Fraction of resource recovered from recycled products");
    flow_keyed.add(sus_cmd, "--life-0", "life-0", flow.life_0, "Baseline product lifetime");
    flow_keyed.add(sus_cmd, "--life-r", "life-r", flow.life_r,
                   "Lifetime extension factor (>= 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return fairga::cli::kExitConfig;
    }

    try {
        if (run_cmd->parsed()) return dispatch_experiment(run_cli, false);
        if (cmp_cmd->parsed()) return dispatch_experiment(cmp_cli, true);
        if (sus_cmd->parsed()) {
            if (!flow_config.empty()) {
                std::string err;
                const auto kv = load_config_file(flow_config, err);
                if (!kv) {
                    std::cerr << "error: " << err << '\n';
                    return fairga::cli::kExitConfig;
                }
                if (const auto msg = flow_keyed.apply_file(*kv); !msg.empty()) {
                    std::cerr << "error: " << msg << '\n';
                    return fairga::cli::kExitConfig;
                }
            }
            return fairga::cli::sustainability(flow, as_csv, std::cout, std::cerr);
        }
    } catch (const fairga::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return fairga::cli::kExitConfig;
    }
    return fairga::cli::kExitOk;
}
