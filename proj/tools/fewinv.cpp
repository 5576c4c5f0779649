#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fewinv/bijections.hpp"
#include "fewinv/enumerate.hpp"
#include "fewinv/json_io.hpp"
#include "fewinv/mahonian.hpp"
#include "fewinv/notation.hpp"
#include "fewinv/verify.hpp"

namespace {

using namespace fewinv;
using nlohmann::json;

// exit codes: 0 pass, 1 verification failure, 2 usage error, 3 precondition violation
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_default(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0')
        return fallback;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw UsageError(std::string(name) + ": not an integer");
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file: " + path);
    out << content;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// ---------------------------------------------------------------- table ----

std::string render_table(const MahonianTable& table, const std::string& format) {
    std::ostringstream out;
    if (format == "text") {
        for (int n = 0; n <= table.n_max(); ++n) {
            const auto& row = table.row(n);
            for (size_t k = 0; k < row.size(); ++k)
                out << (k > 0 ? " " : "") << row[k];
            out << "\n";
        }
    } else if (format == "csv") {
        for (int n = 0; n <= table.n_max(); ++n) {
            out << n;
            for (const Int& value : table.row(n))
                out << "," << value;
            out << "\n";
        }
    } else {
        json rows = json::array();
        for (int n = 0; n <= table.n_max(); ++n) {
            json row = json::array();
            for (const Int& value : table.row(n))
                row.push_back(value.str());
            rows.push_back(std::move(row));
        }
        out << json{{"n_max", table.n_max()}, {"rows", std::move(rows)}}.dump(2) << "\n";
    }
    return out.str();
}

// --------------------------------------------------------------- series ----

std::string render_series(const IntegerSeries& s, const std::string& format) {
    std::ostringstream out;
    if (format == "text") {
        for (int n = 0; n <= s.order(); ++n)
            out << (n > 0 ? "," : "") << s.coefficient(n);
        out << "\n";
    } else if (format == "csv") {
        out << "n,coefficient\n";
        for (int n = 0; n <= s.order(); ++n)
            out << n << "," << s.coefficient(n) << "\n";
    } else {
        out << series_to_json(s).dump(2) << "\n";
    }
    return out.str();
}

IntegerSeries build_series(const std::string& name, const std::string& method, int order) {
    const std::string m = lowercase(method);
    if (name == "R") {
        if (m.empty() || m == "product")
            return r_series(order, RConstruction::product);
        if (m == "inverse-of-one-minus-m" || m == "inverse-m")
            return r_series(order, RConstruction::inverse_one_minus_m);
        if (m == "divisor-recursion")
            return r_series(order, RConstruction::divisor_recursion);
        throw UsageError("unknown method for R: " + method);
    }
    if (name == "M") {
        if (!m.empty())
            throw UsageError("M takes no --method");
        return m_series(order);
    }
    if (name == "C") {
        if (!m.empty())
            throw UsageError("C takes no --method");
        return catalan_series(order);
    }
    if (name.size() >= 2 && name[0] == 'S') {
        int i = 0;
        try {
            size_t used = 0;
            i = std::stoi(name.substr(1), &used);
            if (used != name.size() - 1 || i < 0)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("unknown series name: " + name);
        }
        if (m.empty() || m == "diagonal-of-dp" || m == "dp")
            return subdiagonal_series(i, order, SubdiagonalMethod::dp_diagonal);
        if (m == "catalan-shift")
            return subdiagonal_series(i, order, SubdiagonalMethod::catalan_shift);
        if (m == "via-r")
            return subdiagonal_series(i, order, SubdiagonalMethod::via_r);
        throw UsageError("unknown method for " + name + ": " + method);
    }
    throw UsageError("unknown series name: " + name + " (expected S<i>, R, M or C)");
}

// --------------------------------------------------------------- verify ----

std::string render_report(const VerificationReport& report, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        json checks = json::array();
        for (const CheckResult& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"parameters", c.parameters},
                                  {"status", c.passed ? "pass" : "fail"},
                                  {"witness", c.witness}});
        out << json{{"checks", std::move(checks)},
                    {"passed", report.passed_count()},
                    {"failed", report.failed_count()}}
                   .dump(2)
            << "\n";
    } else if (format == "csv") {
        out << "status,name,parameters,witness\n";
        for (const CheckResult& c : report.checks)
            out << (c.passed ? "pass" : "fail") << ",\"" << c.name << "\",\"" << c.parameters
                << "\",\"" << c.witness << "\"\n";
    } else {
        for (const CheckResult& c : report.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.parameters.empty())
                out << " (" << c.parameters << ")";
            if (!c.passed && !c.witness.empty())
                out << " witness: " << c.witness;
            out << "\n";
        }
        out << report.passed_count() << " of " << report.checks.size() << " checks passed\n";
    }
    return out.str();
}

// ---------------------------------------------------------------- apply ----

bool looks_like_json(const std::string& element) {
    return !element.empty() && element.front() == '{';
}

SignedTuple read_signed_tuple(const std::string& element) {
    if (looks_like_json(element))
        return signed_tuple_from_json(json::parse(element));
    return parse_signed_tuple(element);
}

MarkedPair read_marked_pair(const std::string& element) {
    if (looks_like_json(element))
        return marked_pair_from_json(json::parse(element));
    return parse_marked_pair(element);
}

GoodPair read_good_pair(const std::string& element) {
    if (looks_like_json(element))
        return good_pair_from_json(json::parse(element));
    return parse_good_pair(element);
}

int run_apply(const std::string& map, const std::string& element, int i, bool twice,
              const std::string& format, const std::string& output) {
    std::ostringstream out;
    bool round_trip_ok = true;
    if (map == "phi" || map == "psi") {
        if (map == "phi") {
            const SignedTuple t = read_signed_tuple(element);
            const SignedTuple image = phi(t);
            out << (format == "json" ? signed_tuple_to_json(image).dump()
                                     : format_signed_tuple(image))
                << "\n";
            if (twice) {
                const SignedTuple back = phi(image);
                out << (format == "json" ? signed_tuple_to_json(back).dump()
                                         : format_signed_tuple(back))
                    << "\n";
                round_trip_ok = back == t;
            }
        } else {
            const MarkedPair p = read_marked_pair(element);
            const MarkedPair image = psi(p);
            out << (format == "json" ? marked_pair_to_json(image).dump()
                                     : format_marked_pair(image))
                << "\n";
            if (twice) {
                const MarkedPair back = psi(image);
                out << (format == "json" ? marked_pair_to_json(back).dump()
                                         : format_marked_pair(back))
                    << "\n";
                round_trip_ok = back == p;
            }
        }
        write_output(output, out.str());
        if (!round_trip_ok) {
            std::cerr << "error: applying the involution twice did not return the input\n";
            return kExitVerificationFailure;
        }
        return kExitOk;
    }
    if (twice)
        throw UsageError("--twice applies only to the involutions phi and psi");
    if (map == "theta") {
        const GoodPair g = theta(read_marked_pair(element));
        out << (format == "json" ? good_pair_to_json(g).dump() : format_good_pair(g)) << "\n";
    } else if (map == "theta-inv") {
        const MarkedPair p = theta_inverse(read_good_pair(element));
        out << (format == "json" ? marked_pair_to_json(p).dump() : format_marked_pair(p)) << "\n";
    } else if (map == "factor") {
        const Permutation p = parse_permutation(element);
        const Factorization f = factor_few_inversions(p, i);
        if (format == "json") {
            out << json{{"sigma", f.sigma.values()}, {"tau", f.tau.values()}}.dump() << "\n";
        } else {
            // print the suffix in the letters of the input permutation
            out << format_permutation(f.sigma) << " | ";
            for (int v : f.tau.values()) {
                if (v + f.sigma.size() > 9)
                    throw std::domain_error("factor: suffix letter above 9; use --format json");
                out << static_cast<char>('0' + v + f.sigma.size());
            }
            out << "\n";
        }
    } else if (map == "mblocks") {
        const auto blocks = m_block_factorization(parse_composition(element));
        if (format == "json") {
            json j = json::array();
            for (const Composition& b : blocks)
                j.push_back(b.parts());
            out << j.dump() << "\n";
        } else {
            for (size_t b = 0; b < blocks.size(); ++b)
                out << (b > 0 ? " | " : "") << format_composition(blocks[b]);
            out << "\n";
        }
    } else if (map == "cut") {
        const CutResult c = cut(parse_composition(element));
        if (format == "json")
            out << json{{"head", c.head.decreasing_parts()}, {"tail", c.tail.parts()}}.dump()
                << "\n";
        else
            out << format_partition(c.head) << ";" << format_composition(c.tail) << "\n";
    } else {
        throw UsageError("unknown map: " + map +
                         " (expected phi, psi, theta, theta-inv, factor, mblocks or cut)");
    }
    write_output(output, out.str());
    return kExitOk;
}

// ------------------------------------------------------------ enumerate ----

int run_enumerate(const std::string& set, int n, std::optional<std::int64_t> k,
                  std::optional<int> bound, const std::string& format,
                  const std::string& output) {
    std::vector<std::string> lines;
    json elements = json::array();
    std::optional<Int> signed_sum;

    auto emit = [&](const std::string& compact, json j) {
        lines.push_back(compact);
        elements.push_back(std::move(j));
    };

    if (set == "Snk") {
        if (!k.has_value())
            throw UsageError("Snk needs both n and k");
        for (const Permutation& p :
             enumerate_with_inversions(n, *k, bound.value_or(kPermutationOracleBound)))
            emit(format_permutation(p), p.values());
    } else if (set == "Cn") {
        for (const Permutation& p : enumerate_catalan_set(n, bound.value_or(kPermutationOracleBound)))
            emit(format_permutation(p), p.values());
    } else if (set == "Rn") {
        signed_sum = Int(0);
        for (const SignedTuple& t : enumerate_signed_tuples(n, bound.value_or(kSignedTupleBound))) {
            *signed_sum += t.sign();
            emit(format_signed_tuple(t), signed_tuple_to_json(t));
        }
    } else if (set == "Tn") {
        signed_sum = Int(0);
        for (const MarkedPair& p : enumerate_marked_pairs(n, bound.value_or(kMarkedPairBound))) {
            *signed_sum += p.sign();
            emit(format_marked_pair(p), marked_pair_to_json(p));
        }
    } else if (set == "goodpairs") {
        signed_sum = Int(0);
        for (const GoodPair& g : enumerate_good_pairs(n, bound.value_or(kGoodPairBound))) {
            *signed_sum += g.sign();
            emit(format_good_pair(g), good_pair_to_json(g));
        }
    } else if (set == "fixphi") {
        for (const Composition& m : phi_fixed_points(n, bound.value_or(kSignedTupleBound)))
            emit(format_composition(m), m.parts());
    } else {
        throw UsageError("unknown set: " + set +
                         " (expected Snk, Cn, Rn, Tn, goodpairs or fixphi)");
    }

    std::ostringstream out;
    if (format == "json") {
        json j{{"set", set}, {"n", n}, {"count", lines.size()}, {"elements", std::move(elements)}};
        if (k.has_value())
            j["k"] = *k;
        if (signed_sum.has_value())
            j["signed_sum"] = signed_sum->str();
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "element\n";
        for (const std::string& line : lines)
            out << "\"" << line << "\"\n";
    } else {
        for (const std::string& line : lines)
            out << line << "\n";
        out << "count " << lines.size() << "\n";
        if (signed_sum.has_value())
            out << "signed sum " << *signed_sum << "\n";
    }
    write_output(output, out.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Mahonian tables, generating functions and bijections for permutations "
                 "with few inversions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output;
    int order = -1;
    int bound = -1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--order", order, "truncation order (default: FEWINV_ORDER or built-in)");
    app.add_option("--bound", bound, "enumeration bound (default: FEWINV_BOUND or built-in)");
    app.add_option("--output", output, "write to file instead of stdout");

    auto* cmd_table = app.add_subcommand("table", "print the inversion-count triangle");
    int n_max = 0;
    cmd_table->add_option("n_max", n_max, "largest row")->required()->check(CLI::NonNegativeNumber);
    cmd_table->fallthrough();

    auto* cmd_series = app.add_subcommand("series", "print a generating function");
    std::string series_name;
    std::string method;
    cmd_series->add_option("name", series_name, "S<i>, R, M or C")->required();
    cmd_series->add_option("--method", method,
                           "S<i>: diagonal-of-dp|catalan-shift|via-r; "
                           "R: product|inverse-of-one-minus-m|divisor-recursion");
    cmd_series->fallthrough();

    auto* cmd_verify = app.add_subcommand("verify", "run identity/bijection checks");
    std::string suite = "all";
    cmd_verify
        ->add_option("--suite", suite, "which checks to run")
        ->check(CLI::IsMember({"all", "series-identities", "involutions", "factorization",
                               "counts"}));
    cmd_verify->fallthrough();

    auto* cmd_apply = app.add_subcommand("apply", "apply a bijection to one element");
    std::string map_name;
    std::string element;
    int diag_index = 0;
    bool twice = false;
    cmd_apply->add_option("map", map_name, "phi|psi|theta|theta-inv|factor|mblocks|cut")
        ->required();
    cmd_apply->add_option("element", element, "compact or JSON notation")->required();
    cmd_apply->add_option("--i", diag_index, "diagonal index for factor (default 0)");
    cmd_apply->add_flag("--twice", twice, "also print the involution round trip");
    cmd_apply->fallthrough();

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list a combinatorial set");
    std::string set_name;
    int set_n = 0;
    std::int64_t set_k = -1;
    cmd_enumerate->add_option("set", set_name, "Snk|Cn|Rn|Tn|goodpairs|fixphi")->required();
    cmd_enumerate->add_option("n", set_n, "weight / size")->required()->check(CLI::NonNegativeNumber);
    auto* k_option = cmd_enumerate->add_option("k", set_k, "inversion count (Snk only)");
    cmd_enumerate->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_table->parsed()) {
            write_output(output, render_table(MahonianTable(n_max), format));
            return kExitOk;
        }
        if (cmd_series->parsed()) {
            const int effective = order >= 0 ? order : env_default("FEWINV_ORDER", 64);
            write_output(output, render_series(build_series(series_name, method, effective), format));
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            VerifyOptions options;
            options.series_order = order >= 0 ? order : env_default("FEWINV_ORDER", options.series_order);
            const int b = bound >= 0 ? bound : env_default("FEWINV_BOUND", -1);
            if (b >= 0) {
                options.involution_max = b;
                options.factorization_max = b;
                options.counts_max = b;
            }
            VerificationReport report;
            if (suite == "all")
                report = verify_all(options);
            else if (suite == "series-identities")
                report = verify_series_identities(options);
            else if (suite == "involutions")
                report = verify_involutions(options);
            else if (suite == "factorization")
                report = verify_factorization(options);
            else
                report = verify_counts(options);
            write_output(output, render_report(report, format));
            return report.all_passed() ? kExitOk : kExitVerificationFailure;
        }
        if (cmd_apply->parsed()) {
            try {
                return run_apply(map_name, element, diag_index, twice, format, output);
            } catch (const UsageError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitPrecondition;
            } catch (const std::domain_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitPrecondition;
            } catch (const std::logic_error& e) {
                // a falsified identity, not a bad input
                std::cerr << "error: " << e.what() << "\n";
                return kExitVerificationFailure;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitPrecondition;
            }
        }
        if (cmd_enumerate->parsed()) {
            std::optional<std::int64_t> k;
            if (k_option->count() > 0)
                k = set_k;
            std::optional<int> b;
            if (bound >= 0)
                b = bound;
            else if (env_default("FEWINV_BOUND", -1) >= 0)
                b = env_default("FEWINV_BOUND", -1);
            try {
                return run_enumerate(set_name, set_n, k, b, format, output);
            } catch (const UsageError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage; // above bounds / malformed set parameters
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
