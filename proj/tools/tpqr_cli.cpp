// Command-line front end: builds the two algebras for a triple (p,q,r), runs
// the verification suites and emits deterministic JSON reports.
//
// Exit codes: 0 success / all checks pass, 1 domain error or failed check,
// 2 usage error.

#include "tpqr/errors.hpp"
#include "tpqr/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

using tpqr::report::Json;

struct Options {
    tpqr::Triple triple;
    std::string side = "fukaya";
    std::string suite = "all";
    std::string word;
    std::string cycle;
    std::string out_path;
    bool timing = false;
};

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long value = std::stol(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("list", "malformed integer '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw CLI::ValidationError("list", "empty list");
    return out;
}

int emit(const Options& opt, Json report, std::chrono::steady_clock::time_point started,
         int exit_code) {
    if (opt.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    const std::string text = report.dump(2) + "\n";
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "tpqr: cannot open output file " << opt.out_path << "\n";
            return 2;
        }
        file << text;
    } else {
        std::cout << text;
    }
    return exit_code;
}

void warn_large_triple(const tpqr::Triple& t) {
    if (t.p > 50 || t.q > 50 || t.r > 50)
        std::cerr << "tpqr: warning: chain length above 50; basis sizes grow quadratically and"
                     " builds will be slow\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the surfaces Y_{p,q,r}"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--timing", opt.timing, "append wall-clock timing to the report");

    auto add_triple = [&opt](CLI::App* cmd) {
        cmd->add_option("--p", opt.triple.p, "chain length p")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--q", opt.triple.q, "chain length q")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--r", opt.triple.r, "chain length r")->required()->check(CLI::PositiveNumber);
    };
    auto add_out = [&opt](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write the JSON report to a file instead of stdout");
    };

    CLI::App* build = app.add_subcommand("build", "emit one side's algebra as JSON");
    add_triple(build);
    build->add_option("--side", opt.side, "fukaya | sheaf")
        ->check(CLI::IsMember({"fukaya", "sheaf"}));
    add_out(build);

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    add_triple(check);
    check->add_option("--suite", opt.suite, "dims | assoc | iso | euler | serre | square | all")
        ->check(CLI::IsMember({"dims", "assoc", "iso", "euler", "serre", "square", "all"}));
    add_out(check);

    CLI::App* mutate = app.add_subcommand("mutate", "apply a mutation word to the collection");
    add_triple(mutate);
    mutate->add_option("--word", opt.word, "comma-separated signed slots, e.g. 1,-2,3")->required();
    add_out(mutate);

    CLI::App* k0 = app.add_subcommand("k0", "cokernel invariants of I - S");
    add_triple(k0);
    add_out(k0);

    CLI::App* dual = app.add_subcommand("dual", "dual cycle of a cyclic self-intersection sequence");
    dual->add_option("--cycle", opt.cycle, "comma-separated entries, e.g. 3,2,2")->required();
    add_out(dual);

    CLI::App* triangle = app.add_subcommand("triangle", "triangle cycle of the dual cusp");
    add_triple(triangle);
    add_out(triangle);

    CLI::App* classes = app.add_subcommand("classes", "named divisor classes and cycle class ledger");
    add_triple(classes);
    add_out(classes);

    const auto started = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "build" || command == "check" || command == "mutate" || command == "k0" ||
            command == "triangle" || command == "classes")
            warn_large_triple(opt.triple);
        if (command == "build") return emit(opt, tpqr::report::build_report(opt.triple, opt.side), started, 0);
        if (command == "check") {
            tpqr::report::CheckOutcome outcome = tpqr::report::check_report(opt.triple, opt.suite);
            return emit(opt, std::move(outcome.json), started, outcome.all_passed ? 0 : 1);
        }
        if (command == "mutate") {
            std::vector<int> word;
            for (long w : parse_long_list(opt.word)) {
                if (w == 0) throw CLI::ValidationError("--word", "slot 0 is not valid");
                word.push_back(static_cast<int>(w));
            }
            return emit(opt, tpqr::report::mutate_report(opt.triple, word), started, 0);
        }
        if (command == "k0") return emit(opt, tpqr::report::k0_report(opt.triple), started, 0);
        if (command == "dual")
            return emit(opt, tpqr::report::dual_report(parse_long_list(opt.cycle)), started, 0);
        if (command == "triangle") return emit(opt, tpqr::report::triangle_report(opt.triple), started, 0);
        if (command == "classes") return emit(opt, tpqr::report::classes_report(opt.triple), started, 0);
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "tpqr: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json error;
        error["schema"] = tpqr::report::kSchema;
        error["tool"] = Json{{"name", "tpqr"}, {"version", tpqr::report::kToolVersion}};
        error["command"] = command;
        Json detail;
        if (dynamic_cast<const tpqr::NotHyperbolicError*>(&e)) detail["type"] = "NotHyperbolic";
        else if (dynamic_cast<const tpqr::NotACycleError*>(&e)) detail["type"] = "NotACycleOfRationalCurves";
        else if (dynamic_cast<const tpqr::ConfigMismatchError*>(&e)) detail["type"] = "ConfigMismatch";
        else if (dynamic_cast<const tpqr::NotInvertibleError*>(&e)) detail["type"] = "NotInvertible";
        else if (dynamic_cast<const std::out_of_range*>(&e)) detail["type"] = "OutOfRange";
        else detail["type"] = "Internal";
        detail["message"] = e.what();
        error["error"] = std::move(detail);
        const std::string text = error.dump(2) + "\n";
        if (!opt.out_path.empty()) {
            std::ofstream file(opt.out_path, std::ios::binary);
            file << text;
        } else {
            std::cout << text;
        }
        return 1;
    }
}
