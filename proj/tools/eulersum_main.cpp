#include "eulersum/calculus.hpp"
#include "eulersum/sums.hpp"
#include "eulersum/table.hpp"
#include "eulersum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            if (start < text.size()) {
                out.push_back(text.substr(start));
            }
            break;
        }
        if (end > start) {
            out.push_back(text.substr(start, end - start));
        }
        start = end + 1;
    }
    return out;
}

int run_compute(const std::string& kind, const std::vector<std::int64_t>& args, bool json) {
    nlohmann::ordered_json record;
    std::string value;
    if (kind == "rho") {
        if (args.size() != 2) {
            throw std::invalid_argument("compute rho takes exactly two arguments: a b");
        }
        const std::int64_t result = eulersum::alternating_sign_sum(args[0], args[1]);
        value = std::to_string(result);
        record = {{"kind", "rho"}, {"a", args[0]}, {"b", args[1]}, {"value", result}};
    } else {
        if (args.size() != 3) {
            throw std::invalid_argument("compute " + kind +
                                        " takes exactly three arguments: p a b");
        }
        if (args[0] < 0) {
            throw std::invalid_argument("compute: p must be nonnegative");
        }
        const unsigned p = static_cast<unsigned>(args[0]);
        const eulersum::Rational result =
            kind == "T" ? eulersum::apostol_dedekind_sum(p, args[1], args[2])
                        : eulersum::generalized_dedekind_sum(p, args[1], args[2]);
        value = result.str();
        record = {{"kind", kind}, {"p", p}, {"a", args[1]}, {"b", args[2]}, {"value", value}};
    }
    std::cout << value << "\n";
    if (json) {
        std::cout << record.dump() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& identities_csv, const eulersum::verify::SweepConfig& config,
               const std::string& out_path) {
    std::vector<std::string> labels = split_list(identities_csv);
    if (labels.empty()) {
        labels = eulersum::verify::identity_labels();
    }
    for (const auto& label : labels) {
        if (!eulersum::verify::is_identity_label(label)) {
            throw std::invalid_argument("unknown identity \"" + label + "\"");
        }
    }

    const auto reports = eulersum::verify::run_identities(labels, config);
    const std::string json = eulersum::verify::reports_to_json(reports);

    bool any_failure = false;
    if (out_path == "-") {
        std::cout << json << "\n";
        for (const auto& rep : reports) {
            any_failure = any_failure || !rep.ok();
        }
    } else {
        for (const auto& rep : reports) {
            std::cout << rep.identity << ": " << rep.instances << " instances, "
                      << rep.failures.size() << " failures\n";
            for (const auto& f : rep.failures) {
                std::cout << "  FAIL " << f.params << " lhs=" << f.lhs << " rhs=" << f.rhs
                          << "\n";
            }
            any_failure = any_failure || !rep.ok();
        }
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                throw std::invalid_argument("cannot write to \"" + out_path + "\"");
            }
            out << json << "\n";
        }
    }
    return any_failure ? kExitIdentityFailure : kExitOk;
}

int run_table(const std::string& p_list_text, const std::string& pairs_text,
              const std::string& format, const std::string& out_path) {
    const auto p_list = eulersum::parse_p_list(p_list_text);
    const auto pairs = eulersum::parse_pair_list(pairs_text);
    const auto rows = eulersum::make_table_rows(p_list, pairs);

    std::ostringstream body;
    if (format == "csv") {
        eulersum::write_table_csv(body, rows);
    } else {
        eulersum::write_table_json(body, rows);
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw std::invalid_argument("cannot write to \"" + out_path + "\"");
        }
        out << body.str();
    }
    return kExitOk;
}

int run_fourier(std::int64_t p, const std::string& x_text, unsigned long terms, bool json) {
    if (p < 0) {
        throw std::invalid_argument("fourier: p must be nonnegative");
    }
    const eulersum::Rational x = eulersum::Rational::from_string(x_text);
    const eulersum::FourierApproximation approx =
        eulersum::fourier_report(static_cast<unsigned>(p), x, terms);
    if (json) {
        nlohmann::ordered_json record = {{"p", approx.p},
                                         {"x", approx.x.str()},
                                         {"terms", approx.terms},
                                         {"approx", approx.value},
                                         {"exact", approx.exact.str()},
                                         {"abs_error", approx.abs_error()}};
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "approx=" << format_double(approx.value) << " exact=" << approx.exact.str()
                  << " abs_error=" << format_double(approx.abs_error()) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dedekind-type sums over quasi-periodic Euler functions"};
    app.require_subcommand(1);

    // compute
    std::string compute_kind;
    std::vector<std::int64_t> compute_args;
    bool compute_json = false;
    auto* compute = app.add_subcommand("compute", "Print one exact sum value");
    compute->add_option("kind", compute_kind, "T, S or rho")
        ->required()
        ->check(CLI::IsMember({"T", "S", "rho"}));
    compute->add_option("args", compute_args, "p a b (T, S) or a b (rho)")->expected(2, 3);
    compute->add_flag("--json", compute_json, "Also print a JSON record");

    // verify
    eulersum::verify::SweepConfig config;
    std::string identities_csv;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Sweep identities and report failures");
    verify->add_option("--identities", identities_csv, "Comma-separated identity labels");
    verify->add_option("--p-max", config.p_max, "Largest p in the sweeps");
    verify->add_option("--a-max", config.a_max, "Largest a in the sweeps");
    verify->add_option("--b-max", config.b_max, "Largest b (defaults to --a-max)");
    verify->add_option("--q-max", config.q_max, "Largest q in the distribution sweep");
    verify->add_option("--fourier-terms", config.fourier_terms, "Partial-sum length");
    verify->add_option("--seed", config.seed, "Seed for randomized instances");
    verify->add_option("--parallelism", config.parallelism, "Worker thread count");
    verify->add_option("--out", verify_out, "Write the JSON report here ('-' for stdout)");

    // table
    std::string p_list_text;
    std::string pairs_text;
    std::string table_format = "json";
    std::string table_out;
    auto* table = app.add_subcommand("table", "Emit sum/reciprocity rows as JSON or CSV");
    table->add_option("--p-list", p_list_text, "p values, e.g. 1..5 or 0,2,4");
    table->add_option("--pairs", pairs_text, "Pairs a:b, comma separated");
    table->add_option("--format", table_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", table_out, "Output path (default stdout)");

    // fourier
    std::int64_t fourier_p = 0;
    std::string fourier_x;
    unsigned long fourier_terms = 10000;
    bool fourier_json = false;
    auto* fourier = app.add_subcommand("fourier", "Partial sine-series value vs exact");
    fourier->add_option("p", fourier_p, "Function order")->required();
    fourier->add_option("x", fourier_x, "Evaluation point, e.g. 1/3")->required();
    fourier->add_option("--terms", fourier_terms, "Partial-sum length");
    fourier->add_flag("--json", fourier_json, "Print a JSON record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            return run_compute(compute_kind, compute_args, compute_json);
        }
        if (verify->parsed()) {
            return run_verify(identities_csv, config, verify_out);
        }
        if (table->parsed()) {
            return run_table(p_list_text, pairs_text, table_format, table_out);
        }
        if (fourier->parsed()) {
            return run_fourier(fourier_p, fourier_x, fourier_terms, fourier_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
