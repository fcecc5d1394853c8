// hopfcat — exact verdicts on filtered presentations loaded from model files.
//
// Exit codes: 0 every check passed, 1 at least one check failed,
// 2 the invocation or the model file was unusable.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "hopfcat/run.hpp"

namespace {

struct GlobalOpts {
    int degree = 4;
    std::string out;
    std::string format = "json";
    int threads = 0;
    bool serial = false;
    bool timing = false;
};

int emit(const hopfcat::RunResult& result, const GlobalOpts& opts, double elapsed_ms) {
    hopfcat::Json report = result.report;
    if (opts.timing) report["timing_ms"] = elapsed_ms;
    const std::string rendered = hopfcat::render_report(report, opts.format);
    if (opts.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream os(opts.out, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return 2;
        }
        os << rendered;
    }
    return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure checks for filtered cocommutative presentations"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--degree", opts.degree, "truncation degree for model files without one")
        ->capture_default_str()
        ->check(CLI::Range(2, 64));
    app.add_option("--out", opts.out, "write the report here instead of stdout");
    app.add_option("--format", opts.format, "report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", opts.threads, "worker threads for parallel mode");
    app.add_flag("--serial", opts.serial, "run every kernel on one thread");
    app.add_flag("--timing", opts.timing, "add wall-clock timing to the report");

    // Each subcommand records a closure; positionals bind to these slots.
    std::string model_path, arg1, arg2, arg3, lemma = "five";
    std::function<hopfcat::RunResult(const hopfcat::Model&)> action;

    auto add_model = [&](CLI::App* sub) {
        sub->fallthrough();  // let --degree etc. appear after the subcommand
        sub->add_option("model", model_path, "model file")->required();
    };

    CLI::App* axioms = app.add_subcommand("check-axioms", "run the full axiom sweep on one object");
    add_model(axioms);
    axioms->add_option("object", arg1, "hopf section name")->required();
    axioms->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_check_axioms(m, model_path, arg1);
        };
    });

    CLI::App* dec = app.add_subcommand("decompose", "split an object into primitive and grouplike parts");
    add_model(dec);
    dec->add_option("object", arg1, "hopf section name")->required();
    dec->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_decompose(m, model_path, arg1);
        };
    });

    CLI::App* tor = app.add_subcommand("torsion", "audit the torsion-theory splitting of one object");
    add_model(tor);
    tor->add_option("object", arg1, "hopf section name")->required();
    tor->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_torsion(m, model_path, arg1);
        };
    });

    CLI::App* fac = app.add_subcommand("factorize", "factor a morphism through its kernel quotient");
    add_model(fac);
    fac->add_option("morphism", arg1, "morphism section name")->required();
    fac->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_factorize(m, model_path, arg1);
        };
    });

    CLI::App* ses = app.add_subcommand("verify-ses", "audit a short exact sequence i, p and optional section s");
    add_model(ses);
    ses->add_option("i", arg1, "inclusion morphism")->required();
    ses->add_option("p", arg2, "projection morphism")->required();
    ses->add_option("s", arg3, "section of p");
    ses->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_verify_ses(m, model_path, arg1, arg2, arg3);
        };
    });

    CLI::App* dia = app.add_subcommand("verify-diagram", "check a morphism of split sequences against a lemma");
    add_model(dia);
    dia->add_option("diagram", arg1, "diagram section name")->required();
    dia->add_option("--lemma", lemma, "which conclusion to check")
        ->capture_default_str()
        ->check(CLI::IsMember({"five", "surjectivity"}));
    dia->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_verify_diagram(m, model_path, arg1, lemma);
        };
    });

    CLI::App* zero = app.add_subcommand("zero-hom", "certify that enveloping -> group-algebra maps are trivial");
    add_model(zero);
    zero->add_option("source", arg1, "enveloping-algebra object")->required();
    zero->add_option("target", arg2, "group-algebra object")->required();
    zero->callback([&] {
        action = [&](const hopfcat::Model& m) {
            return hopfcat::run_zero_hom(m, model_path, arg1, arg2);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (opts.serial) hopfcat::set_default_exec_mode(hopfcat::ExecMode::Serial);
    hopfcat::set_thread_count(opts.threads);

    try {
        const auto t0 = std::chrono::steady_clock::now();
        const hopfcat::Model model = hopfcat::load_model(model_path, opts.degree);
        const hopfcat::RunResult result = action(model);
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return emit(result, opts, ms);
    } catch (const hopfcat::HopfError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
