// gzeta: generalized weighted zeta functions of digraphs, computed exactly.
//
//   gzeta info FILE
//   gzeta zeta FILE [--form hashimoto|ihara|both]
//   gzeta series FILE [--order N]
//   gzeta primes FILE [--max-len L]
//   gzeta verify [FILE] [--random --trials T --seed S]
//   gzeta symmetrize FILE
//
// Global flags: --preset NAME [--q RAT], --order N, --machine, --max-enum COUNT.

#include "gzeta/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    using namespace gzeta;
    CLI::App app{"Exact generalized weighted zeta functions of finite digraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string preset_name, q_text;
    std::size_t order = kDefaultSeriesOrder;
    std::size_t max_enum = kDefaultEnumerationLimit;
    bool machine = false;
    app.add_option("--preset", preset_name, "Weight preset: ihara, bowen-lanford, sato, mizuno-sato, bartholdi");
    app.add_option("--q", q_text, "Rational q for the bartholdi preset (upsilon = 1 - q)");
    app.add_option("--order", order, "Series truncation order")->check(CLI::PositiveNumber);
    app.add_flag("--machine", machine, "Emit key=value lines");
    app.add_option("--max-enum", max_enum, "Limit on candidate sections for brute-force enumeration");

    std::string file;
    auto* info = app.add_subcommand("info", "Vertex/arc counts, arc classification, c_a(t) table");
    info->add_option("file", file, "Digraph file")->required();

    std::string form = "both";
    auto* zeta = app.add_subcommand("zeta", "Hashimoto and Ihara expressions of Z");
    zeta->add_option("file", file, "Digraph file")->required();
    zeta->add_option("--form", form, "hashimoto, ihara or both")
        ->check(CLI::IsMember({"hashimoto", "ihara", "both"}));

    auto* series = app.add_subcommand("series", "N_m table and Z coefficients");
    series->add_option("file", file, "Digraph file")->required();

    std::size_t max_len = 6;
    auto* primes = app.add_subcommand("primes", "Prime cycles and the Euler product check");
    primes->add_option("file", file, "Digraph file")->required();
    primes->add_option("--max-len", max_len, "Longest prime period to list")->check(CLI::PositiveNumber);

    bool random = false;
    cli::RandomVerifyOptions rv;
    auto* verify = app.add_subcommand("verify", "Run every identity check");
    verify->add_option("file", file, "Digraph file");
    verify->add_flag("--random", random, "Check seeded random digraphs instead of a file");
    verify->add_option("--trials", rv.trials, "Number of random digraphs");
    verify->add_option("--seed", rv.seed, "Random seed");

    auto* symm = app.add_subcommand("symmetrize", "Symmetric digraph of an undirected graph file");
    symm->add_option("file", file, "Undirected graph file (edge lines)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cli::GlobalOptions g;
        g.order = order;
        g.max_enum = max_enum;
        g.machine = machine;
        if (!preset_name.empty()) {
            g.weights.preset = parse_preset(preset_name);
            if (!g.weights.preset) throw std::invalid_argument("unknown preset '" + preset_name + "'");
        }
        if (!q_text.empty()) g.weights.q = parse_rational(q_text);

        cli::CommandResult result;
        if (*verify && random) {
            VerifyOptions v;
            v.order = order;
            v.max_enum = max_enum;
            result = cli::cmd_verify_random(g, v, rv);
        } else {
            if (file.empty()) throw std::invalid_argument("a digraph file is required (or --random)");
            const cli::DigraphFile f = cli::parse_digraph_file(read_file(file));
            if (*info) {
                result = cli::cmd_info(f, g);
            } else if (*zeta) {
                const auto z = form == "hashimoto" ? cli::ZetaForm::hashimoto
                               : form == "ihara"   ? cli::ZetaForm::ihara
                                                   : cli::ZetaForm::both;
                result = cli::cmd_zeta(f, g, z);
            } else if (*series) {
                result = cli::cmd_series(f, g);
            } else if (*primes) {
                result = cli::cmd_primes(f, g, max_len);
            } else if (*verify) {
                VerifyOptions v;
                v.order = order;
                v.max_enum = max_enum;
                result = cli::cmd_verify(f, g, v);
            } else {
                result = cli::cmd_symmetrize(f);
            }
        }
        std::cout << result.text;
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
