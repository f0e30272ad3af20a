// summa: batch driver for the arithmetic-series verification families.
//
// Exit status: 0 all asserted invariants hold, 2 an assertion failed,
// 3 configuration / environment error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "summa/errors.hpp"
#include "summa/harness.hpp"

namespace {

struct CliState {
    summa::RunConfig config;
    std::string format = "csv";
    std::string tail = "analytic_halfweight";
};

void add_report_options(CLI::App* cmd, CliState& st) {
    cmd->add_option("--out", st.config.output_path, "report file (default: stdout)");
    cmd->add_option("--format", st.format, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CliState st;
    bool list = false;

    CLI::App app{"summa: deterministic checks of summatory-function identities,\n"
                 "unit-cell transforms, and zero-sum expansions"};
    app.require_subcommand(0, 1);
    app.add_flag("--list", list, "print the formula-to-command coverage map and exit");

    CLI::App* sieve = app.add_subcommand("sieve", "build an arithmetic table and report "
                                                  "its nonzero count and summatory value");
    sieve->add_option("--kind", st.config.kind, "table kind");
    sieve->add_option("--N", st.config.n_sieve, "sieve size");
    add_report_options(sieve, st);

    CLI::App* zeros = app.add_subcommand("zeros", "scan critical-line zero ordinates and "
                                                  "write the text cache");
    zeros->add_option("--T", st.config.t_zeros, "scan height (14 < T <= 1000)");
    zeros->add_option("--precision", st.config.zero_precision, "ordinate precision");
    zeros->add_option("--out", st.config.cache_out, "cache file to write")->required();
    zeros->add_option("--format", st.format, "stdout report format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* volterra = app.add_subcommand("verify-volterra",
                                            "renewal identity D = F + (1/y) int D");
    volterra->add_option("--kind", st.config.kind, "table kind");
    volterra->add_option("--w", st.config.w, "weight");
    volterra->add_option("--samples", st.config.sample_count, "number of sampled y");
    volterra->add_option("--seed", st.config.seed, "sampler seed");
    volterra->add_option("--y", st.config.y, "evaluate one fixed y instead of sampling");
    volterra->add_option("--N", st.config.n_sieve, "sieve size / sampling range");
    add_report_options(volterra, st);

    CLI::App* neumann = app.add_subcommand("verify-neumann",
                                           "iterated-kernel series vs direct evaluation");
    neumann->add_option("--kind", st.config.kind, "table kind");
    neumann->add_option("--w", st.config.w, "weight");
    neumann->add_option("--y", st.config.y, "evaluation point");
    neumann->add_option("--K", st.config.k_partial, "series depth");
    neumann->add_option("--mesh", st.config.mesh, "quadrature mesh nodes");
    neumann->add_option("--N", st.config.n_sieve, "sieve size");
    add_report_options(neumann, st);

    CLI::App* bvp = app.add_subcommand("verify-bvp", "integrated two-point check, both "
                                                     "sign variants (Moebius kind)");
    bvp->add_option("--w", st.config.w, "weight (>= 1)");
    bvp->add_option("--x", st.config.x, "evaluation point");
    bvp->add_option("--samples", st.config.sample_count, "sample count (overrides --x)");
    bvp->add_option("--seed", st.config.seed, "sampler seed");
    bvp->add_option("--N", st.config.n_sieve, "sieve size / sampling range");
    add_report_options(bvp, st);

    CLI::App* integrals = app.add_subcommand("verify-integrals",
                                             "forward unit-cell transforms with "
                                             "certified truncation tails");
    integrals->add_option("--theorem", st.config.theorem, "family selector: 21, 31, or 32")
        ->required();
    integrals->add_option("--s", st.config.s_re, "Re s");
    integrals->add_option("--s-im", st.config.s_im, "Im s");
    integrals->add_option("--k-cells", st.config.quadrature.k_cells, "unit cells summed");
    integrals->add_option("--tail", st.tail,
                          "tail handling: analytic_halfweight or geometric_bound")
        ->check(CLI::IsMember({"analytic_halfweight", "geometric_bound"}));
    integrals->add_option("--tail-tol", st.config.tail_tol, "tail certificate budget");
    add_report_options(integrals, st);

    CLI::App* residues = app.add_subcommand("verify-residues",
                                            "series vs residue expansions over zeros");
    residues->add_option("--theorem", st.config.theorem, "family selector: 1, 2, or 33")
        ->required();
    residues->add_option("--y", st.config.y, "evaluation point (families 1 and 2)");
    residues->add_option("--x", st.config.x, "evaluation point (family 33)");
    residues->add_option("--w", st.config.w, "weight (family 1)");
    residues->add_option("--K-zeros", st.config.truncation.k_zeros, "zero-sum cutoff");
    residues->add_option("--K-trivial", st.config.truncation.k_trivial,
                         "trivial-zero cutoff");
    residues->add_option("--tail-tol", st.config.tail_tol,
                         "series tail budget (family 33)");
    residues->add_option("--zeros", st.config.zeros_path, "zero cache to load");
    residues->add_option("--precision", st.config.zero_precision, "zero precision");
    residues->add_option("--N", st.config.n_sieve, "sieve size");
    add_report_options(residues, st);

    CLI::App* identities = app.add_subcommand("report-identities",
                                              "archived identity comparisons (findings)");
    identities->add_option("--which", st.config.which, "selector: 16, 19, or 112")
        ->required();
    identities->add_option("--x", st.config.x, "evaluation point");
    identities->add_option("--w", st.config.w, "weight (selector 16)");
    identities->add_option("--kind", st.config.kind, "table kind (selector 16)");
    identities->add_option("--N", st.config.n_sieve, "sieve size");
    add_report_options(identities, st);

    CLI::App* divergence = app.add_subcommand("divergence",
                                              "monotone growth of weighted zero sums");
    divergence->add_option("--m", st.config.m_power, "ordinate exponent offset (>= 1)");
    divergence->add_option("--T", st.config.t_zeros, "partial-sum height");
    divergence->add_option("--y", st.config.y, "weight base (> 1)");
    divergence->add_option("--zeros", st.config.zeros_path, "zero cache to load");
    divergence->add_option("--precision", st.config.zero_precision, "zero precision");
    add_report_options(divergence, st);

    CLI::App* decay = app.add_subcommand("decay-exponent",
                                         "observed power-law exponent of |D_w| (finding)");
    decay->add_option("--kind", st.config.kind, "table kind");
    decay->add_option("--w", st.config.w, "weight");
    decay->add_option("--y-min", st.config.y_min, "grid start (> 1)");
    decay->add_option("--y-max", st.config.y_max, "grid end");
    decay->add_option("--points", st.config.points, "grid points");
    decay->add_option("--N", st.config.n_sieve, "sieve size");
    add_report_options(decay, st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (list) {
        std::cout << summa::command_listing();
        return 0;
    }
    const auto chosen = app.get_subcommands();
    if (chosen.empty()) {
        std::cout << app.help();
        return 0;
    }

    try {
        st.config.command = chosen.front()->get_name();
        st.config.format = summa::report_format_from_name(st.format);
        st.config.quadrature.tail_method = summa::tail_method_from_name(st.tail);
        st.config.quadrature.tail_tol = st.config.tail_tol;

        const summa::RunResult result = summa::run(st.config);
        if (st.config.output_path.empty())
            summa::write_report(result.rows, st.config.format, std::cout);
        else
            summa::write_report_file(result.rows, st.config.format, st.config.output_path);
        return result.exit_code;
    } catch (const summa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
