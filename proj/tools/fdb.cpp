// fdb: command-line front end. Every subcommand is a thin wrapper around
// one library call with JSON (default) or pretty output.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fdb/cm.hpp"
#include "fdb/colour.hpp"
#include "fdb/hopf.hpp"
#include "fdb/json_io.hpp"
#include "fdb/partitions.hpp"
#include "fdb/poly.hpp"
#include "fdb/series.hpp"
#include "fdb/words.hpp"

namespace {

using fdb::json_io::json;

int env_max_grade()
{
    const char* raw = std::getenv("FDB_MAX_GRADE");
    if (raw == nullptr || *raw == '\0')
        return 0;
    try {
        int value = std::stoi(raw);
        if (value < 1)
            throw fdb::DomainError("FDB_MAX_GRADE must be a positive integer");
        return value;
    } catch (const std::exception&) {
        throw fdb::DomainError("FDB_MAX_GRADE must be a positive integer");
    }
}

int cap_or(int fallback)
{
    int grade = env_max_grade();
    return grade > 0 ? grade : fallback;
}

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw fdb::ParseError("cannot open input file " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw fdb::ParseError(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw fdb::ParseError("cannot open output file " + path);
    out << text << "\n";
}

struct Options {
    std::string format = "json";
    std::string out = "-";

    void emit(const json& j, const std::string& pretty) const
    {
        write_output(out, format == "json" ? j.dump(2) : pretty);
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Faa di Bruno Hopf algebra toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "pretty"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "Output path, - for stdout")
        ->capture_default_str();

    int n = 0, m = 0, k = 0, degree = 0, upto = 0;
    std::string route = "closed";
    std::string suite;
    std::string file_f, file_g;

    auto* compose_cmd = app.add_subcommand("compose", "Compose two series files");
    compose_cmd->add_option("f", file_f, "Outer series JSON")->required();
    compose_cmd->add_option("g", file_g, "Inner series JSON")->required();

    auto* revert_cmd = app.add_subcommand("revert", "Lagrange reversion of a series file");
    revert_cmd->add_option("f", file_f, "Series JSON")->required();

    auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct of a_n");
    coproduct_cmd->add_option("--n", n, "Generator index")->required();

    auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of a_n");
    antipode_cmd->add_option("--n", n, "Generator index")->required();

    auto* primitives_cmd =
        app.add_subcommand("primitives", "Basis of primitives of a degree");
    primitives_cmd->add_option("--degree", degree, "Degree")->required();

    auto* delta_cop_cmd = app.add_subcommand(
        "delta-coproduct", "Coproduct of delta_n in Connes-Moscovici coordinates");
    delta_cop_cmd->add_option("--n", n, "Index")->required();
    delta_cop_cmd->add_option("--route", route, "subst or closed")
        ->check(CLI::IsMember({"subst", "closed"}))
        ->capture_default_str();

    auto* delta_to_a_cmd =
        app.add_subcommand("delta-to-a", "delta_n expressed in the a-coordinates");
    delta_to_a_cmd->add_option("--n", n, "Index")->required();

    auto* gamma_cmd = app.add_subcommand("gamma", "Gamma_n in the shuffle basis");
    gamma_cmd->add_option("--n", n, "Index")->required();
    gamma_cmd->add_option("--route", route, "closed or recursive")
        ->check(CLI::IsMember({"closed", "recursive"}))
        ->capture_default_str();

    auto* bracket_cmd =
        app.add_subcommand("bracket", "Commutator [b'_n, b'_m] in the graded dual");
    bracket_cmd->add_option("--n", n, "First index")->required();
    bracket_cmd->add_option("--m", m, "Second index")->required();

    auto* bell_cmd = app.add_subcommand("bell", "Symbolic Bell polynomial B_{n,k}");
    bell_cmd->add_option("--n", n, "n")->required();
    bell_cmd->add_option("--k", k, "k")->required();

    auto* stirling_cmd =
        app.add_subcommand("stirling", "Stirling number of the second kind");
    stirling_cmd->add_option("--n", n, "n")->required();
    stirling_cmd->add_option("--k", k, "k")->required();

    auto* partitions_cmd = app.add_subcommand("partitions", "Partitions of {1..n}");
    partitions_cmd->add_option("--n", n, "Ground-set size")->required();

    auto* cardinality_cmd = app.add_subcommand(
        "cardinality", "Partial sums of the partition-groupoid cardinality");
    cardinality_cmd->add_option("--upto", upto, "Last ground-set size")->required();

    auto* nseries_compose_cmd =
        app.add_subcommand("nseries-compose", "Compose two N-series files");
    nseries_compose_cmd->add_option("f", file_f, "Outer N-series JSON")->required();
    nseries_compose_cmd->add_option("g", file_g, "Inner N-series JSON")->required();

    auto* nseries_revert_cmd =
        app.add_subcommand("nseries-revert", "Multivariate Lagrange reversion");
    nseries_revert_cmd->add_option("f", file_f, "N-series JSON")->required();

    auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
    check_cmd->add_option("--suite", suite, "hopf, gamma or nseries")
        ->check(CLI::IsMember({"hopf", "gamma", "nseries"}))
        ->required();
    check_cmd->add_option("--upto", upto, "Size bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compose_cmd->parsed()) {
            fdb::ExpSeries f = fdb::json_io::series_from_json(read_json(file_f));
            fdb::ExpSeries g = fdb::json_io::series_from_json(read_json(file_g));
            fdb::ExpSeries h = fdb::compose(f, g);
            opt.emit(fdb::json_io::to_json(h), h.to_string());
        } else if (revert_cmd->parsed()) {
            fdb::ExpSeries f = fdb::json_io::series_from_json(read_json(file_f));
            fdb::ExpSeries g = fdb::revert(f);
            opt.emit(fdb::json_io::to_json(g), g.to_string());
        } else if (coproduct_cmd->parsed()) {
            fdb::TensorElement t = fdb::coproduct(n);
            opt.emit(fdb::json_io::to_json(t), t.to_string());
        } else if (antipode_cmd->parsed()) {
            fdb::Polynomial s = fdb::antipode(n);
            opt.emit(fdb::json_io::to_json(s), s.to_string());
        } else if (primitives_cmd->parsed()) {
            auto basis = fdb::primitive_space(degree, cap_or(6));
            json outute = json::array();
            std::string pretty;
            for (const auto& p : basis) {
                out_basis.push_back(fdb::json_io::to_json(p));
                pretty += (pretty.empty() ? "" : "\n") + p.to_string();
            }
            json out = {{"degree", degree},
                        {"dimension", basis.size()},
                        {"basis", std::move(out_basis)}};
            opt.emit(out, pretty.empty() ? "(empty)" : pretty);
        } else if (delta_cop_cmd->parsed()) {
            fdb::TensorElement t =
                route == "closed"
                    ? fdb::coproduct_delta_closed(n, cap_or(fdb::kDeltaCoproductCap))
                    : fdb::coproduct_delta(n, cap_or(fdb::kDeltaCoproductCap));
            opt.emit(fdb::json_io::to_json(t), t.to_string());
        } else if (delta_to_a_cmd->parsed()) {
            fdb::Polynomial p = fdb::delta_in_a(n);
            opt.emit(fdb::json_io::to_json(p), p.to_string());
        } else if (gamma_cmd->parsed()) {
            fdb::WordElement g = route == "recursive"
                                     ? fdb::gamma_recursive(n, cap_or(fdb::kGammaCap))
                                     : fdb::gamma_closed(n, cap_or(fdb::kGammaCap));
            opt.emit(fdb::json_io::to_json(g), g.to_string());
        } else if (bracket_cmd->parsed()) {
            int cap = std::max(n + m, fdb::kDualGradeCap);
            fdb::DualFunctional b = fdb::bracket(fdb::DualFunctional::b_prime(n, cap),
                                                 fdb::DualFunctional::b_prime(m, cap));
            opt.emit(fdb::json_io::to_json(b), b.to_string());
        } else if (bell_cmd->parsed()) {
            fdb::Polynomial b = fdb::bell_partial(n, k);
            opt.emit(fdb::json_io::to_json(b), b.to_string());
        } else if (stirling_cmd->parsed()) {
            fdb::Int value = fdb::stirling2(n, k);
            json out = {{"n", n}, {"k", k}, {"value", fdb::to_string(value)}};
            opt.emit(out, fdb::to_string(value));
        } else if (partitions_cmd->parsed()) {
            auto parts = fdb::enumerate_partitions(n, cap_or(fdb::kPartitionCap));
            json out = json::array();
            std::string pretty;
            for (const auto& p : parts) {
                out.push_back(fdb::json_io::to_json(p));
                pretty += (pretty.empty() ? "" : "\n") + p.to_string();
            }
            opt.emit(out, pretty);
        } else if (cardinality_cmd->parsed()) {
            fdb::Rational sum = fdb::groupoid_cardinality(upto);
            double decimal = fdb::to_double(sum);
            double target = std::exp(std::exp(1.0) - 1.0);
            json out = {{"upto", upto},
                        {"sum", fdb::to_string(sum)},
                        {"decimal", decimal},
                        {"error_vs_e_to_e_minus_1", std::abs(decimal - target)}};
            opt.emit(out, fdb::to_string(sum) + " ~ " + std::to_string(decimal));
        } else if (nseries_compose_cmd->parsed()) {
            fdb::NSeries f = fdb::json_io::nseries_from_json(read_json(file_f));
            fdb::NSeries g = fdb::json_io::nseries_from_json(read_json(file_g));
            fdb::NSeries h = fdb::nseries_compose(f, g);
            opt.emit(fdb::json_io::to_json(h), fdb::json_io::to_json(h).dump());
        } else if (nseries_revert_cmd->parsed()) {
            fdb::NSeries f = fdb::json_io::nseries_from_json(read_json(file_f));
            fdb::NSeries g = fdb::nseries_revert(f);
            opt.emit(fdb::json_io::to_json(g), fdb::json_io::to_json(g).dump());
        } else if (check_cmd->parsed()) {
            fdb::CheckReport report;
            if (suite == "hopf")
                report = fdb::check_hopf_axioms(upto);
            else if (suite == "gamma")
                report = fdb::check_gamma_suite(upto);
            else
                report = fdb::check_nseries_suite(upto);
            json out = {{"suite", suite}, {"ok", report.ok}, {"detail", report.detail}};
            opt.emit(out, (report.ok ? "ok: " : "FAIL: ") + report.detail);
            return report.ok ? 0 : 1;
        }
    } catch (const fdb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
