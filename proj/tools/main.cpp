#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "goalsel/errors.hpp"
#include "goalsel/generator.hpp"
#include "goalsel/kb.hpp"
#include "goalsel/postulates.hpp"
#include "goalsel/report.hpp"
#include "goalsel/semantics.hpp"

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string tiebreak = "pr";
    std::size_t max_args = 10000;
    std::size_t max_extensions = 1000000;
    std::size_t fuzz = 0;
    std::uint64_t seed = 1;
};

goalsel::SelectOptions select_options(const Options& opt) {
    goalsel::SelectOptions s;
    s.build.max_arguments = opt.max_args;
    s.limits.max_extensions = opt.max_extensions;
    s.tiebreak = opt.tiebreak == "lo" ? goalsel::TieBreak::location_first
                                      : goalsel::TieBreak::precision_first;
    return s;
}

// Stops after the attack filter; args/attacks/export-dot do not need the
// exponential extension enumeration.
goalsel::SelectionReport framework_report(const goalsel::KnowledgeBase& kb, const Options& opt) {
    goalsel::SelectOptions s = select_options(opt);
    goalsel::SelectionReport report;
    report.args = goalsel::build_all(kb, s.build);
    report.diagnostics = report.args.diagnostics;
    goalsel::Framework af = goalsel::make_framework(report.args, kb);
    report.attacks_pre = af.attacks;
    report.attacks_post = goalsel::successful_filter(af, report.args, kb, s.tiebreak).attacks;
    return report;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw goalsel::Error("cannot open file '" + opt.output + "'");
    out << text;
}

void warn(const goalsel::SelectionReport& report) {
    for (const std::string& d : report.diagnostics) std::cerr << "warning: " << d << "\n";
}

int run_verify(const Options& opt) {
    if (opt.fuzz > 0) {
        std::mt19937_64 rng(opt.seed);
        std::size_t failures = 0;
        std::size_t skipped = 0;
        for (std::size_t i = 0; i < opt.fuzz; ++i) {
            goalsel::KnowledgeBase kb = goalsel::random_kb(rng);
            goalsel::SelectionReport report;
            try {
                report = goalsel::select(kb, select_options(opt));
            } catch (const goalsel::LimitError&) {
                // An instance past the enumeration caps proves nothing either
                // way; note it and move on.
                ++skipped;
                continue;
            }
            goalsel::PostulateReport postulates =
                goalsel::verify_extensions(report.conflict_free_family, report.args, kb);
            if (!postulates.pass()) {
                ++failures;
                std::cerr << "postulate failure on generated instance " << i << " (seed "
                          << opt.seed << ")\n"
                          << goalsel::postulates_text(postulates, report);
            }
        }
        std::cout << opt.fuzz << " generated instance(s), " << failures << " failure(s), "
                  << skipped << " skipped\n";
        return failures == 0 ? 0 : 1;
    }

    goalsel::KnowledgeBase kb = goalsel::load_spec_file(opt.input);
    goalsel::SelectionReport report = goalsel::select(kb, select_options(opt));
    warn(report);
    goalsel::PostulateReport postulates =
        goalsel::verify_extensions(report.conflict_free_family, report.args, kb);
    emit(opt, opt.format == "json" ? goalsel::postulates_json(postulates, report)
                                   : goalsel::postulates_text(postulates, report));
    return postulates.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"selects compatible goal sets from uncertain plan knowledge"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("input", opt.input, "agent spec JSON file")->required();
        cmd->add_option("-o,--output", opt.output, "write output to a file instead of stdout");
        cmd->add_option("--max-args", opt.max_args, "argument construction cap");
        cmd->add_option("--max-extensions", opt.max_extensions, "extension enumeration cap");
        cmd->add_option("--tiebreak", opt.tiebreak, "strength tie-break clause order")
            ->check(CLI::IsMember({"pr", "lo"}));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* check = app.add_subcommand("check", "validate a spec and echo its canonical form");
    check->add_option("input", opt.input, "agent spec JSON file")->required();
    check->add_option("-o,--output", opt.output, "write output to a file instead of stdout");

    CLI::App* args_cmd = app.add_subcommand("args", "list arguments with intervals and strengths");
    add_common(args_cmd);
    add_format(args_cmd);

    CLI::App* attacks_cmd = app.add_subcommand("attacks", "list typed attacks before and after the filter");
    add_common(attacks_cmd);
    add_format(attacks_cmd);

    CLI::App* select_cmd = app.add_subcommand("select", "run the full goal selection pipeline");
    add_common(select_cmd);
    add_format(select_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check the rationality postulates");
    verify_cmd->add_option("input", opt.input, "agent spec JSON file");
    verify_cmd->add_option("-o,--output", opt.output, "write output to a file instead of stdout");
    verify_cmd->add_option("--max-args", opt.max_args, "argument construction cap");
    verify_cmd->add_option("--max-extensions", opt.max_extensions, "extension enumeration cap");
    verify_cmd->add_option("--tiebreak", opt.tiebreak, "strength tie-break clause order")
        ->check(CLI::IsMember({"pr", "lo"}));
    add_format(verify_cmd);
    verify_cmd->add_option("--fuzz", opt.fuzz, "verify N randomly generated specs instead");
    verify_cmd->add_option("--seed", opt.seed, "random seed for --fuzz");

    CLI::App* dot_cmd = app.add_subcommand("export-dot", "emit the filtered framework as Graphviz");
    add_common(dot_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            goalsel::KnowledgeBase kb = goalsel::load_spec_file(opt.input);
            emit(opt, goalsel::serialize(kb));
            return 0;
        }
        if (args_cmd->parsed()) {
            goalsel::KnowledgeBase kb = goalsel::load_spec_file(opt.input);
            goalsel::SelectionReport report;
            report.args = goalsel::build_all(kb, select_options(opt).build);
            report.diagnostics = report.args.diagnostics;
            warn(report);
            emit(opt, opt.format == "json" ? goalsel::arguments_json(report, kb)
                                           : goalsel::arguments_text(report, kb));
            return 0;
        }
        if (attacks_cmd->parsed()) {
            goalsel::KnowledgeBase kb = goalsel::load_spec_file(opt.input);
            goalsel::SelectionReport report = framework_report(kb, opt);
            warn(report);
            emit(opt, opt.format == "json" ? goalsel::attacks_json(report)
                                           : goalsel::attacks_text(report));
            return 0;
        }
        if (select_cmd->parsed()) {
            goalsel::KnowledgeBase kb = goalsel::load_spec_file(opt.input);
            goalsel::SelectionReport report = goalsel::select(kb, select_options(opt));
            warn(report);
            emit(opt, opt.format == "json" ? goalsel::selection_json(report, kb)
                                           : goalsel::selection_text(report, kb));
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (opt.fuzz == 0 && opt.input.empty()) {
                std::cerr << "error: verify needs an input file or --fuzz N\n";
                return 2;
            }
            return run_verify(opt);
        }
        if (dot_cmd->parsed()) {
            goalsel::KnowledgeBase kb = goalsel::load_spec_file(opt.input);
            goalsel::SelectionReport report = framework_report(kb, opt);
            warn(report);
            emit(opt, goalsel::export_dot(report));
            return 0;
        }
    } catch (const goalsel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
