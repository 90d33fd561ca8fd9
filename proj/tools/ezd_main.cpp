#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ezd/report.hpp"

namespace {

std::optional<ezd::MonomialOrder> order_opt(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return ezd::parse_order(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact zero-divisor toolkit for artinian local rings"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string order;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--order", order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex", "grlex"}));

    std::string file, x_src, y_src, xs_src, mod_src, check = "all", mode = "pairs", pool = "linear", dir;
    std::size_t len = 1, max_results = 0;

    auto* analyze = app.add_subcommand("analyze", "Ring invariants and classification");
    analyze->add_option("file", file)->required();

    auto* pair = app.add_subcommand("pair", "Exact zero-divisor pair test");
    pair->add_option("file", file)->required();
    pair->add_option("--x", x_src)->required();
    pair->add_option("--mod", mod_src);

    auto* seq = app.add_subcommand("seq", "Sequence test with optional extra checks");
    seq->add_option("file", file)->required();
    seq->add_option("--xs", xs_src)->required();
    seq->add_option("--check", check)->check(CLI::IsMember({"minimal", "permutable", "strong", "all", "none"}));

    auto* koszul = app.add_subcommand("koszul", "Koszul homology rank-and-freeness criterion");
    koszul->add_option("file", file)->required();
    koszul->add_option("--xs", xs_src)->required();

    auto* tor = app.add_subcommand("tor", "Periodic Tor dimensions against R/(mod)");
    tor->add_option("file", file)->required();
    tor->add_option("--x", x_src)->required();
    tor->add_option("--y", y_src)->required();
    tor->add_option("--mod", mod_src);

    auto* srch = app.add_subcommand("search", "Search a candidate pool for pairs or sequences");
    srch->add_option("file", file)->required();
    srch->add_option("--mode", mode)->check(CLI::IsMember({"pairs", "sequences", "minimal", "strong"}));
    srch->add_option("--len", len);
    srch->add_option("--pool", pool)->check(CLI::IsMember({"linear", "all"}));
    srch->add_option("--max-results", max_results);

    auto* census = app.add_subcommand("census", "Run the consistency census over a directory of ring files");
    census->add_option("dir", dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        auto ord = order_opt(order);
        ezd::Json report;
        int exit_code = 0;
        if (analyze->parsed())
            report = ezd::cmd_analyze(file, ord);
        else if (pair->parsed())
            report = ezd::cmd_pair(file, x_src, mod_src, ord);
        else if (seq->parsed())
            report = ezd::cmd_seq(file, xs_src, check, ord);
        else if (koszul->parsed())
            report = ezd::cmd_koszul(file, xs_src, ord);
        else if (tor->parsed())
            report = ezd::cmd_tor(file, x_src, y_src, mod_src, ord);
        else if (srch->parsed())
            report = ezd::cmd_search(file, mode, len, pool, ord, max_results);
        else if (census->parsed()) {
            report = ezd::cmd_census(dir);
            if (!report["all_consistent"].get<bool>()) exit_code = 3;
        }
        std::fputs(ezd::render_report(report, format).c_str(), stdout);
        return exit_code;
    } catch (const ezd::Error& e) {
        ezd::Json err;
        err["schema_version"] = ezd::kSchemaVersion;
        err["error"] = ezd::error_kind_name(e.kind());
        err["message"] = e.what();
        std::fputs(ezd::render_report(err, format).c_str(), stdout);
        return e.is_guard() ? 2 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
