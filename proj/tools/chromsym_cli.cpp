// chromsym: exact symmetric-function calculator and theorem verifier.
//
// Subcommands: expand, scalar, omega, chromatic, verify.
// Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
// 3 domain error, 4 resource cap exceeded, 5 internal error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "chromsym/classify.hpp"
#include "chromsym/expr.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/symfunc.hpp"

namespace {

using namespace chromsym;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitResourceError = 4;
constexpr int kExitInternalError = 5;

BasisName basis_option(const std::string& b) {
    if (b.size() != 1) throw std::domain_error("unknown basis: " + b);
    return basis_from_letter(b[0]);
}

void print_function(const SymFunc& f, BasisName basis, const std::string& format) {
    if (format == "json")
        std::cout << symfunc_to_json(f, basis).dump() << "\n";
    else
        std::cout << print_symfunc(f, basis) << "\n";
}

int print_report(const VerificationReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.to_json().dump() << "\n";
    } else {
        std::cout << "scope: " << report.scope << "\n"
                  << "instances: " << report.instances << "\n"
                  << "failures: " << report.failures.size() << "\n";
        for (const auto& f : report.failures) std::cout << "  " << f << "\n";
        std::cout << "elapsed_ms: " << report.elapsed_ms << "\n"
                  << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic symmetric function calculator"};
    app.require_subcommand(1);

    std::string expr_text, expr_text2, graph_text;
    std::string basis = "p";
    std::string format = "text";
    std::string which;
    int max_size = 8;
    int max_n = -1;
    int graph_cap = 5;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_basis = [&](CLI::App* cmd) {
        cmd->add_option("--basis", basis, "Target basis")
            ->check(CLI::IsMember({"e", "h", "m", "p", "s"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "Expand an expression in a basis");
    expand->add_option("expr", expr_text, "Expression")->required();
    add_basis(expand);
    add_format(expand);

    CLI::App* scalar = app.add_subcommand("scalar", "Hall scalar product of two expressions");
    scalar->add_option("expr1", expr_text, "First expression")->required();
    scalar->add_option("expr2", expr_text2, "Second expression")->required();

    CLI::App* omega_cmd = app.add_subcommand("omega", "Apply the omega involution");
    omega_cmd->add_option("expr", expr_text, "Expression")->required();
    add_basis(omega_cmd);
    add_format(omega_cmd);

    CLI::App* chrom = app.add_subcommand("chromatic", "Chromatic symmetric function of a graph");
    chrom->add_option("graph", graph_text, "Graph expression (K5, G(4; 1-2), unions with +)")
        ->required();
    ChromaticCaps caps;
    chrom->add_option("--edge-cap", caps.edge_cap, "Edge cap for the edge-subset expansion");
    chrom->add_option("--vertex-cap", caps.vertex_cap,
                      "Vertex cap for the stable-partition fallback");
    add_basis(chrom);
    add_format(chrom);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("which", which, "One of: ppositive, skew, bases, identities")
        ->required()
        ->check(CLI::IsMember({"ppositive", "skew", "bases", "identities"}));
    verify->add_option("--max-size", max_size, "Maximum skew diagram size");
    verify->add_option("--max-n", max_n, "Maximum partition size / degree");
    verify->add_option("--graph-cap", graph_cap, "Maximum graph vertex count");
    add_format(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) {
            print_function(evaluate(*parse_expression(expr_text)), basis_option(basis), format);
        } else if (scalar->parsed()) {
            const SymFunc f = evaluate(*parse_expression(expr_text));
            const SymFunc g = evaluate(*parse_expression(expr_text2));
            std::cout << rational_to_string(scalar_product(f, g)) << "\n";
        } else if (omega_cmd->parsed()) {
            print_function(omega(evaluate(*parse_expression(expr_text))), basis_option(basis),
                           format);
        } else if (chrom->parsed()) {
            print_function(chromatic_sym(parse_graph(graph_text), caps), basis_option(basis),
                           format);
        } else if (verify->parsed()) {
            VerificationReport report;
            if (which == "ppositive") report = verify_ppositive(max_size);
            else if (which == "skew") report = verify_skew_theorem(max_size);
            else if (which == "bases")
                report = verify_bases_theorem(max_n < 0 ? 5 : max_n, graph_cap);
            else report = verify_basis_identities(max_n < 0 ? 10 : max_n);
            return print_report(report, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResourceError;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return 0;
}
