#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace gainswitch;

int main(int argc, char** argv) {
    CLI::App app{"Switching equivalence, spectra and class counts of mixed and gain graphs"};
    app.require_subcommand(1);

    cli::Options opt;
    bool pretty = false;
    int max_enum = -1;
    std::vector<std::string> files;

    auto add_common = [&](CLI::App* sub, int arity) {
        sub->add_option("files", files, arity == 1 ? "input .gg file" : "two input .gg files")
            ->required()
            ->expected(arity)
            ->check(CLI::ExistingFile);
        sub->add_option("--tol", opt.tol, "numerical tolerance")->check(CLI::PositiveNumber);
        sub->add_flag("--faces", opt.require_faces, "require and validate 'f' lines");
        sub->add_option("--max-enum", max_enum, "cap for exhaustive enumerations (edges or vertices)")
            ->check(CLI::Range(1, 40));
        sub->add_option("--max-aut", opt.aut_cap, "vertex cap for automorphism search")->check(CLI::Range(1, 16));
        sub->add_flag("--json-pretty", pretty, "indent the JSON report");
        return sub;
    };
    auto* equiv = add_common(app.add_subcommand("equiv", "decide switching equivalence"), 2);
    auto* spec = add_common(app.add_subcommand("spectrum", "Hermitian spectrum and characteristic polynomial"), 1);
    auto* census = add_common(app.add_subcommand("census", "switching class sizes and counts"), 1);
    auto* classify = add_common(app.add_subcommand("classify", "balanced / negative / imaginary verdicts"), 1);
    auto* iso = add_common(app.add_subcommand("iso", "decide switching isomorphism"), 2);
    auto* product = add_common(app.add_subcommand("product", "Cartesian product"), 2);
    product->add_option("-o,--output", opt.output, "write the product .gg here");
    auto* aut = add_common(app.add_subcommand("aut", "automorphism group"), 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::kInvalid;
    }
    if (max_enum > 0) opt.set_max_enum(max_enum);

    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    auto report = cli::run_guarded(name, files, [&]() -> cli::Report {
        if (sub == equiv) return cli::cmd_equiv(files[0], files[1], opt);
        if (sub == spec) return cli::cmd_spectrum(files[0], opt);
        if (sub == census) return cli::cmd_census(files[0], opt);
        if (sub == classify) return cli::cmd_classify(files[0], opt);
        if (sub == iso) return cli::cmd_iso(files[0], files[1], opt);
        if (sub == product) return cli::cmd_product(files[0], files[1], opt);
        return cli::cmd_aut(files[0], opt);
    });
    (void)aut;
    std::cout << report.to_json().dump(pretty ? 2 : -1) << "\n";
    return report.exit_code;
}
