#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "repfact/claims.hpp"
#include "repfact/dfao.hpp"
#include "repfact/factorize.hpp"
#include "repfact/numeration.hpp"
#include "repfact/synthesis.hpp"
#include "repfact/word.hpp"

namespace {

repfact::SequenceId parse_sequence(const std::string& name) {
    using repfact::SequenceId;
    if (name == "fibonacci") return SequenceId::fibonacci;
    if (name == "thue_morse") return SequenceId::thue_morse;
    if (name == "regular_paperfolding") return SequenceId::regular_paperfolding;
    if (name == "rudin_shapiro") return SequenceId::rudin_shapiro;
    throw CLI::ValidationError("--seq", "unknown sequence '" + name + "'");
}

int cmd_claims_list() {
    for (const auto& info : repfact::claims::enumerate_claims()) {
        std::cout << info.id << "\n    " << info.description << "\n";
        auto defaults = repfact::claims::claim_defaults(info.id);
        if (!defaults.empty()) {
            std::cout << "    defaults:";
            for (const auto& [key, value] : defaults) {
                std::cout << " " << key << "=" << value;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_one_claim(const std::string& id, const repfact::claims::Params& overrides,
                  const std::string& report_path, bool quiet) {
    auto report = repfact::claims::run_claim(id, overrides);
    std::string json = report.to_json();
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::app);
        if (!out) {
            std::cerr << "cannot open report file " << report_path << "\n";
            return 2;
        }
        out << json << "\n";
    }
    if (!quiet) std::cout << json << "\n";
    std::cerr << (report.pass ? "PASS " : "FAIL ") << id << "  ("
              << report.runtime_seconds << " s)\n";
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"repetition factorizations of automatic sequences"};
    app.require_subcommand(1);

    // claims
    auto* claims = app.add_subcommand("claims", "run or list registered claim checks");
    claims->require_subcommand(1);
    claims->add_subcommand("list", "list claims with descriptions and defaults");

    auto* run = claims->add_subcommand("run", "run one claim (or all) and report");
    std::string claim_id;
    std::string report_path;
    bool run_all = false;
    bool quiet = false;
    std::optional<std::int64_t> bound;
    std::vector<std::string> sets;
    run->add_option("id", claim_id, "claim id (see 'claims list')");
    run->add_flag("--all", run_all, "run every registered claim");
    run->add_option("--bound", bound, "override the claim's main bound");
    run->add_option("--set", sets, "override any parameter as key=value")
        ->expected(-1);
    run->add_option("--report", report_path, "append JSON reports to this file");
    run->add_flag("--quiet", quiet, "suppress report bodies on stdout");

    // widths
    auto* widths = app.add_subcommand("widths", "profile factors of a named sequence");
    std::string seq_name;
    std::size_t prefix_len = 0, max_len = 0;
    widths->add_option("--seq", seq_name, "sequence id")->required();
    widths->add_option("--prefix", prefix_len, "prefix length to generate")->required();
    widths->add_option("--max-len", max_len, "longest factor to profile")->required();

    // synth
    auto* synth = app.add_subcommand("synth", "guess a DFAO from a named oracle");
    std::string oracle_id;
    std::uint64_t synth_bound = 0;
    std::string out_path;
    synth->add_option("--oracle", oracle_id,
                      "oracle id: tm-width, fib-width, rp-width, rsrf, "
                      "tm-rep<1..7>, fib-rep<1..3>, rp-rep<1..10>")
        ->required();
    synth->add_option("--bound", synth_bound, "training bound (0 = oracle default)");
    synth->add_option("--out", out_path, "write the machine to this file");

    // pf
    auto* pf = app.add_subcommand("pf", "build a finite paperfolding word");
    std::string instructions;
    bool profile = false;
    pf->add_option("--instructions", instructions,
                   "unfolding instructions over +/- (e.g. -+++)")
        ->required();
    pf->add_flag("--profile", profile, "print the word's width profile");

    CLI11_PARSE(app, argc, argv);

    try {
        if (claims->parsed()) {
            if (claims->get_subcommand("list")->parsed()) return cmd_claims_list();

            repfact::claims::Params overrides;
            if (bound) overrides["bound"] = *bound;
            for (const auto& kv : sets) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "--set expects key=value, got '" << kv << "'\n";
                    return 2;
                }
                overrides[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            }
            if (run_all) {
                int worst = 0;
                for (const auto& info : repfact::claims::enumerate_claims()) {
                    worst = std::max(worst,
                                     run_one_claim(info.id, overrides, report_path, quiet));
                }
                return worst;
            }
            if (claim_id.empty()) {
                std::cerr << "claims run needs a claim id or --all\n";
                return 2;
            }
            return run_one_claim(claim_id, overrides, report_path, quiet);
        }

        if (widths->parsed()) {
            auto id = parse_sequence(seq_name);
            repfact::Word w = repfact::sequence_prefix(id, prefix_len);
            std::cout << "# i\tn\tsw\tlw\ttotal\tunique\n";
            repfact::profile_all_factors(
                w, std::min(max_len, w.size()),
                [&](std::size_t i, std::size_t n, const repfact::WidthProfile& p) {
                    std::cout << i << '\t' << n << '\t' << p.sw << '\t' << p.lw << '\t'
                              << p.total.str() << '\t' << (p.unique ? 1 : 0) << '\n';
                });
            return 0;
        }

        if (synth->parsed()) {
            using repfact::DigitOrder;
            using repfact::FactorWidths;
            using repfact::NumerationSystem;
            using repfact::OracleSpec;
            using repfact::SequenceId;
            using repfact::Word;

            OracleSpec oracle;
            std::unique_ptr<FactorWidths> fw;
            std::vector<bool> dp;

            auto pair_oracle = [&](SequenceId id, NumerationSystem numeration,
                                   std::uint64_t default_bound, int width_cap) {
                std::uint64_t bound_used = synth_bound ? synth_bound : default_bound;
                Word w = repfact::sequence_prefix(
                    id, static_cast<std::size_t>(2 * bound_used));
                fw = std::make_unique<FactorWidths>(
                    w, FactorWidths::Options{
                           .max_len = static_cast<std::size_t>(bound_used)});
                oracle.arity = 2;
                oracle.numeration = numeration;
                oracle.training_bound = bound_used;
                FactorWidths* table = fw.get();
                if (width_cap == 0) {
                    oracle.eval = [table](std::span<const std::uint64_t> args) {
                        return static_cast<int>(
                            table->sw(static_cast<std::size_t>(args[0]),
                                      static_cast<std::size_t>(args[1])));
                    };
                } else {
                    oracle.eval = [table, width_cap](std::span<const std::uint64_t> args) {
                        auto sw = table->sw(static_cast<std::size_t>(args[0]),
                                            static_cast<std::size_t>(args[1]));
                        return (sw >= 1 && sw <= static_cast<std::size_t>(width_cap))
                                   ? 1
                                   : 0;
                    };
                }
            };

            const auto base2 = NumerationSystem::base_k_system(2, DigitOrder::msd);
            const auto zeck = NumerationSystem::zeckendorf(DigitOrder::msd);
            oracle.id = oracle_id;
            if (oracle_id == "tm-width") {
                pair_oracle(SequenceId::thue_morse, base2, 512, 0);
            } else if (oracle_id == "fib-width") {
                pair_oracle(SequenceId::fibonacci, zeck, 376, 0);
            } else if (oracle_id == "rp-width") {
                pair_oracle(SequenceId::regular_paperfolding, base2, 512, 0);
            } else if (oracle_id == "rsrf") {
                std::uint64_t bound_used = synth_bound ? synth_bound : 16384;
                Word rs = repfact::sequence_prefix(
                    SequenceId::rudin_shapiro, static_cast<std::size_t>(bound_used));
                dp = repfact::capped_prefix_factorizable(rs, 8);
                oracle.arity = 1;
                oracle.numeration = base2;
                oracle.training_bound = bound_used;
                oracle.eval = [&dp](std::span<const std::uint64_t> args) {
                    return dp[static_cast<std::size_t>(args[0])] ? 1 : 0;
                };
            } else if (oracle_id.rfind("tm-rep", 0) == 0) {
                pair_oracle(SequenceId::thue_morse, base2, 512,
                            std::stoi(oracle_id.substr(6)));
            } else if (oracle_id.rfind("fib-rep", 0) == 0) {
                pair_oracle(SequenceId::fibonacci, zeck, 376,
                            std::stoi(oracle_id.substr(7)));
            } else if (oracle_id.rfind("rp-rep", 0) == 0) {
                pair_oracle(SequenceId::regular_paperfolding, base2, 512,
                            std::stoi(oracle_id.substr(6)));
            } else {
                std::cerr << "unknown oracle '" << oracle_id << "'\n";
                return 2;
            }

            repfact::Dfao m = repfact::minimize(repfact::guess_dfao(oracle));
            std::vector<std::string> provenance = {
                "oracle: " + oracle.id,
                "training bound: " + std::to_string(oracle.training_bound),
                "suffix depth: default",
                "states: " + std::to_string(m.state_count()),
            };
            std::string text = repfact::serialize(m, false, provenance);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "cannot open " << out_path << "\n";
                    return 2;
                }
                out << text;
            }
            std::cerr << "guessed " << m.state_count() << "-state machine\n";
            return 0;
        }

        if (pf->parsed()) {
            auto u = repfact::UnfoldingInstructions::from_string(instructions);
            repfact::Word w = repfact::paperfolding_word(u);
            std::cout << "word (" << w.size() << " symbols): " << w.to_string() << "\n";
            if (profile && !w.empty()) {
                auto prof = repfact::width_profile(w);
                std::cout << "sw=" << prof.sw << " lw=" << prof.lw
                          << " total=" << prof.total.str()
                          << " unique=" << (prof.unique ? 1 : 0) << "\n";
                for (const auto& [width, count] : prof.counts) {
                    std::cout << "  width " << width << ": " << count.str() << "\n";
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
