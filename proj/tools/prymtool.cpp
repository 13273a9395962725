// prymtool: batch front end for Klein-covering Prym computations.
//
// Subcommands: classify-subgroups, normalize, prym, invert, verify, roundtrip.
// JSON in, JSON out; see README for the schemas. Exit codes: 0 success,
// 1 parse error, 2 domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "prym/json_io.hpp"

namespace {

using prym::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

struct Options {
    std::string input = "-";
    std::string output = "-";
    double tolerance = 1e-9;
    std::string case_override;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_input = true) {
    if (needs_input) cmd->add_option("-i,--input", opt.input, "input file, or - for stdin");
    cmd->add_option("-o,--output", opt.output, "output file, or - for stdout");
    cmd->add_option("--tolerance", opt.tolerance, "membership / comparison tolerance");
    cmd->add_option("--case", opt.case_override, "expected case: iso or non-iso")
        ->check(CLI::IsMember({"iso", "non-iso"}));
}

void check_case(const Options& opt, prym::MarkingKind kind) {
    if (opt.case_override.empty()) return;
    const bool want_iso = opt.case_override == "iso";
    const bool is_iso = kind == prym::MarkingKind::pair_partition;
    if (want_iso != is_iso) throw std::invalid_argument("input case does not match --case");
}

void check_case(const Options& opt, prym::PrymCase kind) {
    check_case(opt, kind == prym::PrymCase::isotropic ? prym::MarkingKind::pair_partition
                                                      : prym::MarkingKind::triple);
}

// Accepts a full configuration, or a bare normalized {"b", "marking_kind"}.
struct ParsedInput {
    prym::MarkedConfiguration configuration;
    prym::NormalizedConfiguration normalized;
};

ParsedInput parse_configuration_input(const Json& j, double tol) {
    ParsedInput p;
    if (j.is_object() && j.contains("b") && !j.contains("points") && !j.contains("configuration")) {
        p.normalized = prym::normalized_from_json(j);
        p.configuration = prym::embed(p.normalized);
    } else {
        p.configuration = prym::configuration_from_json(j);
        p.normalized = prym::normalize(p.configuration, tol);
    }
    return p;
}

int run_classify(const Options& opt) {
    const auto subgroups = prym::enumerate_klein_subgroups();
    int isotropic = 0;
    Json list = Json::array();
    for (const auto& g : subgroups) {
        isotropic += g.isotropic ? 1 : 0;
        list.push_back(prym::to_json(g));
    }
    Json out{{"total", subgroups.size()},
             {"isotropic", isotropic},
             {"non_isotropic", subgroups.size() - isotropic},
             {"subgroups", list}};
    write_output(opt.output, out);
    return 0;
}

int run_normalize(const Options& opt, const Json& in) {
    const auto parsed = parse_configuration_input(in, opt.tolerance);
    check_case(opt, parsed.normalized.kind);
    Json out = prym::to_json(parsed.normalized);
    out["configuration"] = prym::to_json(prym::embed(parsed.normalized));
    write_output(opt.output, out);
    return 0;
}

int run_prym(const Options& opt, const Json& in) {
    const auto parsed = parse_configuration_input(in, opt.tolerance);
    check_case(opt, parsed.normalized.kind);
    const auto result = prym::prym_forward(parsed.normalized);
    write_output(opt.output, prym::to_json(result));
    return 0;
}

int run_invert(const Options& opt, const Json& in) {
    const auto P = prym::period_matrix_from_json(
        in.is_object() && in.contains("period_matrix") ? in["period_matrix"] : in);
    const auto cfg = prym::prym_inverse(P, opt.tolerance);
    check_case(opt, cfg.kind);
    Json out = prym::to_json(cfg);
    out["configuration"] = prym::to_json(prym::embed(cfg));
    write_output(opt.output, out);
    return 0;
}

int run_verify(const Options& opt, const Json& in) {
    const auto P = prym::period_matrix_from_json(
        in.is_object() && in.contains("period_matrix") ? in["period_matrix"] : in);
    const auto result = prym::reconstruct_prym_result(P);
    check_case(opt, result.kind);
    write_output(opt.output, prym::to_json(prym::verify_prym(result, opt.tolerance)));
    return 0;
}

int run_roundtrip(const Options& opt, const Json& in) {
    const auto parsed = parse_configuration_input(in, opt.tolerance);
    check_case(opt, parsed.normalized.kind);
    const auto forward = prym::prym_forward(parsed.normalized);
    const auto inverse = prym::prym_inverse(forward.torus, opt.tolerance);
    const bool verdict =
        prym::equivalent(parsed.configuration, prym::embed(inverse), opt.tolerance);
    double b_err = 0.0;
    for (int i = 0; i < 3; ++i)
        b_err = std::max(b_err, std::abs(parsed.normalized.b[i] - inverse.b[i]));
    Json out{{"input", prym::to_json(parsed.configuration)},
             {"normalized", prym::to_json(parsed.normalized)},
             {"forward", prym::to_json(forward)},
             {"inverse", prym::to_json(inverse)},
             {"equivalent", verdict},
             {"max_b_error", b_err}};
    write_output(opt.output, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Klein coverings of genus-2 curves: Prym period matrices and their inverses"};
    app.require_subcommand(1);

    Options opt;
    auto* classify = app.add_subcommand("classify-subgroups",
                                        "enumerate the 35 Klein subgroups of the 2-torsion");
    add_common(classify, opt, false);
    auto* normalize = app.add_subcommand("normalize", "canonical form of a marked configuration");
    add_common(normalize, opt);
    auto* prym_cmd = app.add_subcommand("prym", "forward Prym map: configuration -> period matrix");
    add_common(prym_cmd, opt);
    auto* invert = app.add_subcommand("invert", "inverse Prym map: period matrix -> configuration");
    add_common(invert, opt);
    auto* verify = app.add_subcommand("verify", "certificate report for a period matrix");
    add_common(verify, opt);
    auto* roundtrip = app.add_subcommand("roundtrip", "forward, inverse and equivalence verdict");
    add_common(roundtrip, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(opt);

        Json in;
        try {
            in = Json::parse(read_input(opt.input));
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 1;
        }

        if (normalize->parsed()) return run_normalize(opt, in);
        if (prym_cmd->parsed()) return run_prym(opt, in);
        if (invert->parsed()) return run_invert(opt, in);
        if (verify->parsed()) return run_verify(opt, in);
        if (roundtrip->parsed()) return run_roundtrip(opt, in);
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        if (what.rfind("bad input", 0) == 0) {
            std::cerr << "parse error: " << what << "\n";
            return 1;
        }
        std::cerr << "domain error: " << what << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
