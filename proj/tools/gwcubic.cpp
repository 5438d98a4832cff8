// gwcubic: exact counts of rational plane curves with prescribed contact
// orders to a smooth plane cubic.
//
// Exit codes: 0 success, 1 self-test failure, 2 invalid input, 3 requested
// count is the non-enumerative profile (the invariant is still printed).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwcubic/cubic_oracle.hpp"
#include "gwcubic/enumerate.hpp"
#include "gwcubic/errors.hpp"
#include "gwcubic/invariant_engine.hpp"
#include "gwcubic/kontsevich.hpp"
#include "gwcubic/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace gwcubic;

namespace {

constexpr int kExitSelfTestFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNonEnumerative = 3;

struct RunConfig {
    int degree = 0;
    std::string alpha_text;
    std::string beta_text;
    std::string gamma_text;
    bool has_alpha = false;
    bool has_beta = false;
    bool has_gamma = false;
    std::string cache_path;
    std::string format = "plain";
    int max_degree = 1;
    std::uint64_t seed = kOracleDefaultSeed;
    int jobs = 1;
};

std::optional<std::string> effective_cache_path(const RunConfig& cfg) {
    if (!cfg.cache_path.empty()) return cfg.cache_path;
    if (const char* env = std::getenv("GWCUBIC_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

void load_cache_if_present(InvariantEngine& engine, const std::optional<std::string>& path) {
    if (path && std::filesystem::exists(*path)) engine.table().load_file(*path);
}

void save_cache(InvariantEngine& engine, const std::optional<std::string>& path) {
    if (path) engine.table().save_file(*path);
}

json count_to_json(int d, const ContactSeq& alpha, const ContactSeq& beta, const CountResult& r) {
    json row;
    row["d"] = d;
    row["alpha"] = alpha.str();
    row["beta"] = beta.str();
    row["N"] = r.enumerative ? json(r.n_value->str()) : json(nullptr);
    row["I"] = r.i_value.str();
    row["enumerative"] = r.enumerative;
    return row;
}

int run_count(const RunConfig& cfg, InvariantEngine& engine, const ContactSeq& alpha,
              const ContactSeq& beta) {
    CountResult r = engine.enumerative_count(cfg.degree, alpha, beta);
    if (cfg.format == "json") {
        std::cout << count_to_json(cfg.degree, alpha, beta, r).dump(2) << '\n';
    } else if (cfg.format == "tsv") {
        std::cout << "d\talpha\tbeta\tN\tI\tenumerative\n"
                  << cfg.degree << '\t' << alpha.str() << '\t' << beta.str() << '\t'
                  << (r.enumerative ? r.n_value->str() : "-") << '\t' << r.i_value.str() << '\t'
                  << (r.enumerative ? "yes" : "no") << '\n';
    } else {
        if (r.enumerative) {
            std::cout << "N = " << r.n_value->str() << '\n';
        } else {
            std::cout << "N is not enumerative for (alpha, beta) = (0, e_{3d}); "
                         "only the invariant is known\n";
        }
        std::cout << "I = " << r.i_value.str() << '\n'
                  << "enumerative = " << (r.enumerative ? "yes" : "no") << '\n';
    }
    return r.enumerative ? 0 : kExitNonEnumerative;
}

int run_invariant(const RunConfig& cfg, InvariantEngine& engine, const ContactSeq& alpha,
                  const ContactSeq& beta) {
    Rational value = engine.invariant(cfg.degree, alpha, beta);
    if (cfg.format == "json") {
        json row;
        row["d"] = cfg.degree;
        row["alpha"] = alpha.str();
        row["beta"] = beta.str();
        row["I"] = value.str();
        std::cout << row.dump(2) << '\n';
    } else if (cfg.format == "tsv") {
        std::cout << "d\talpha\tbeta\tI\n"
                  << cfg.degree << '\t' << alpha.str() << '\t' << beta.str() << '\t' << value.str()
                  << '\n';
    } else {
        std::cout << "I = " << value.str() << '\n';
    }
    return 0;
}

int run_table(const RunConfig& cfg, InvariantEngine& engine) {
    auto rows = full_table(engine, cfg.degree, cfg.jobs);
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& row : rows) out.push_back(count_to_json(cfg.degree, row.alpha, row.beta, row.result));
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (cfg.format == "tsv") {
        std::cout << "d\talpha\tbeta\tN\tI\tenumerative\n";
        for (const auto& row : rows) {
            std::cout << cfg.degree << '\t' << row.alpha.str() << '\t' << row.beta.str() << '\t'
                      << (row.result.enumerative ? row.result.n_value->str() : "-") << '\t'
                      << row.result.i_value.str() << '\t'
                      << (row.result.enumerative ? "yes" : "no") << '\n';
        }
        return 0;
    }
    for (const auto& row : rows) {
        std::cout << "alpha=(" << row.alpha.str() << ") beta=(" << row.beta.str() << ") ";
        if (row.result.enumerative) {
            std::cout << "N=" << row.result.n_value->str();
        } else {
            std::cout << "N=non-enumerative";
        }
        std::cout << " I=" << row.result.i_value.str() << '\n';
    }
    return 0;
}

int run_selftest_cmd(const RunConfig& cfg, InvariantEngine& engine) {
    SelfTestReport report = run_selftests(engine, cfg.max_degree, cfg.seed, cfg.jobs);
    for (const auto& item : report.items) {
        std::cout << (item.pass ? "PASS" : "FAIL") << ' ' << item.name << " (" << item.checked
                  << " instances)";
        if (!item.pass) std::cout << " first failure: " << item.detail;
        std::cout << '\n';
    }
    return report.all_pass() ? 0 : kExitSelfTestFailure;
}

int run_oracle_tangents(const RunConfig& cfg, bool on_curve) {
    const CubicForm cubic = CubicForm::default_cubic();
    ProjPoint p = on_curve ? default_on_curve_point() : sample_point_off_curve(cubic, cfg.seed);
    int count = tangent_count_from_point(cubic, p, cfg.seed);
    if (cfg.format == "json") {
        json row;
        row["count"] = count;
        row["point"] = {p.x.str(), p.y.str(), p.z.str()};
        row["on_curve"] = on_curve;
        std::cout << row.dump(2) << '\n';
    } else {
        std::cout << count << '\n';
    }
    return 0;
}

int run_oracle_flexes(const RunConfig& cfg) {
    int count = flex_count(CubicForm::default_cubic(), cfg.seed);
    if (cfg.format == "json") {
        json row;
        row["count"] = count;
        std::cout << row.dump(2) << '\n';
    } else {
        std::cout << count << '\n';
    }
    return 0;
}

ContactSeq parse_seq_flag(const std::string& text, const char* flag) {
    try {
        return ContactSeq::parse(text);
    } catch (const InvalidSequence& e) {
        throw InvalidInput(std::string(flag) + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts of rational plane curves with prescribed contacts to a smooth cubic"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool with_seqs) {
        cmd->add_option("--cache", cfg.cache_path, "cache file path (default: $GWCUBIC_CACHE)");
        cmd->add_option("--format", cfg.format, "output format: plain|json|tsv")
            ->check(CLI::IsMember({"plain", "json", "tsv"}));
        cmd->add_option("--seed", cfg.seed, "seed for the oracle's rational sampler");
        cmd->add_option("--jobs", cfg.jobs, "worker threads for table/selftest (default 1)")
            ->check(CLI::PositiveNumber);
        if (with_seqs) {
            cmd->add_option("--alpha", cfg.alpha_text, "assigned contact orders, e.g. \"1,0,2\"");
            cmd->add_option("--beta", cfg.beta_text, "unassigned contact orders");
            cmd->add_option("--gamma", cfg.gamma_text, "merged profile; shorthand for alpha empty");
        }
    };

    CLI::App* count_cmd = app.add_subcommand("count", "enumerative count N_d(alpha,beta)");
    count_cmd->add_option("-d,--degree", cfg.degree, "curve degree")->required();
    add_common(count_cmd, true);

    CLI::App* inv_cmd = app.add_subcommand("invariant", "twisted invariant I_d(alpha,beta)");
    inv_cmd->add_option("-d,--degree", cfg.degree, "curve degree")->required();
    add_common(inv_cmd, true);

    CLI::App* table_cmd = app.add_subcommand("table", "all counts of one degree");
    table_cmd->add_option("-d,--degree", cfg.degree, "curve degree")->required();
    add_common(table_cmd, false);

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the consistency suites");
    selftest_cmd->add_option("--max-degree", cfg.max_degree, "largest degree to exercise")
        ->check(CLI::PositiveNumber);
    add_common(selftest_cmd, false);

    CLI::App* cache_cmd = app.add_subcommand("cache", "manage the invariant cache file");
    CLI::App* cache_save = cache_cmd->add_subcommand("save", "write (normalize) the cache file");
    CLI::App* cache_load = cache_cmd->add_subcommand("load", "validate and read the cache file");
    CLI::App* cache_stats = cache_cmd->add_subcommand("stats", "print the cache entry count");
    cache_cmd->require_subcommand(1);
    for (CLI::App* sub : {cache_save, cache_load, cache_stats}) add_common(sub, false);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "desk-scale geometric validation");
    CLI::App* oracle_tangents = oracle_cmd->add_subcommand("tangents", "tangent lines through a point");
    bool opt_generic = false, opt_on_curve = false;
    oracle_tangents->add_flag("--generic", opt_generic, "sample a generic point off the cubic");
    oracle_tangents->add_flag("--on-curve", opt_on_curve, "use a rational point on the cubic");
    CLI::App* oracle_flexes = oracle_cmd->add_subcommand("flexes", "flex count of the cubic");
    oracle_cmd->require_subcommand(1);
    add_common(oracle_tangents, false);
    add_common(oracle_flexes, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        InvariantEngine engine;
        const auto cache = effective_cache_path(cfg);

        if (count_cmd->parsed() || inv_cmd->parsed()) {
            if (cfg.degree < 1) throw InvalidInput("degree must be >= 1");
            ContactSeq alpha = parse_seq_flag(cfg.alpha_text, "--alpha");
            ContactSeq beta = parse_seq_flag(cfg.beta_text, "--beta");
            if (!cfg.gamma_text.empty()) {
                if (!cfg.alpha_text.empty() || !cfg.beta_text.empty()) {
                    throw InvalidInput("--gamma excludes --alpha/--beta");
                }
                alpha = ContactSeq{};
                beta = parse_seq_flag(cfg.gamma_text, "--gamma");
            }
            load_cache_if_present(engine, cache);
            int rc = count_cmd->parsed() ? run_count(cfg, engine, alpha, beta)
                                         : run_invariant(cfg, engine, alpha, beta);
            save_cache(engine, cache);
            return rc;
        }
        if (table_cmd->parsed()) {
            if (cfg.degree < 1) throw InvalidInput("degree must be >= 1");
            load_cache_if_present(engine, cache);
            int rc = run_table(cfg, engine);
            save_cache(engine, cache);
            return rc;
        }
        if (selftest_cmd->parsed()) {
            load_cache_if_present(engine, cache);
            int rc = run_selftest_cmd(cfg, engine);
            if (rc == 0) save_cache(engine, cache);
            return rc;
        }
        if (cache_cmd->parsed()) {
            if (!cache) throw InvalidInput("cache commands need --cache or $GWCUBIC_CACHE");
            if (cache_load->parsed() || cache_stats->parsed()) {
                engine.table().load_file(*cache);
                std::cout << engine.table().size() << " entries\n";
                return 0;
            }
            load_cache_if_present(engine, cache);
            engine.table().save_file(*cache);
            std::cout << "saved " << engine.table().size() << " entries\n";
            return 0;
        }
        if (oracle_tangents->parsed()) {
            if (opt_generic == opt_on_curve) {
                throw InvalidInput("oracle tangents requires exactly one of --generic/--on-curve");
            }
            return run_oracle_tangents(cfg, opt_on_curve);
        }
        if (oracle_flexes->parsed()) {
            return run_oracle_flexes(cfg);
        }
        throw InvalidInput("unknown command");
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}
