#include "qil/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qil/errors.hpp"
#include "qil/generator.hpp"
#include "qil/oracle.hpp"
#include "qil/poly_io.hpp"
#include "qil/qild.hpp"

namespace qil {

namespace {

nlohmann::ordered_json to_json(const QILDecomposition& d, const std::vector<std::string>& names) {
    nlohmann::ordered_json j;
    j["nvars"] = d.nvars;
    j["content"] = coef_to_string(d.content);
    j["monomial"] = d.monomial;
    j["p0"] = poly_to_string(d.p0, names);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : d.factors) {
        nlohmann::ordered_json jf;
        jf["type"] = f.type;
        jf["poly"] = poly_to_string(f.poly, {"y"});
        arr.push_back(std::move(jf));
    }
    j["factors"] = std::move(arr);
    return j;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    for (const auto& p : parts)
        if (p.empty()) throw invalid_input("empty name in variable list");
    return parts;
}

std::vector<int> parse_int_list(const std::string& s, size_t count, const char* what) {
    auto parts = split_csv(s);
    if (parts.size() != count) throw invalid_input(std::string(what) + " needs " +
                                                   std::to_string(count) + " comma-separated values");
    std::vector<int> vals;
    for (const auto& p : parts) {
        try {
            vals.push_back(std::stoi(p));
        } catch (const std::exception&) {
            throw invalid_input(std::string(what) + ": bad integer '" + p + "'");
        }
    }
    return vals;
}

std::string type_string(const std::vector<int64_t>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

} // namespace

int run_cli(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"q-integer linear decomposition over Z[q,q^-1]"};
    std::string algorithm = "newton";
    app.add_option("--algorithm", algorithm, "Decomposition algorithm")
        ->check(CLI::IsMember({"newton", "bivariate", "oracle"}));
    bool linearity_only = false;
    app.add_flag("--linearity-only", linearity_only,
                 "Only report whether the input is q-integer-linear");
    bool do_verify = false;
    app.add_flag("--verify", do_verify, "Re-expand the result and check every invariant");
    bool json_out = false;
    app.add_flag("--json", json_out, "Emit the decomposition as JSON");
    std::string vars_csv;
    app.add_option("--vars", vars_csv, "Comma-separated variable names fixing the order");
    int bench = 0;
    app.add_option("--bench", bench, "Repeat the decomposition this many times and report time");
    uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for --generate");
    std::string generate;
    app.add_option("--generate", generate,
                   "Generate a benchmark instance 'n,m,d0,d' instead of reading input");
    std::string input_file;
    app.add_option("file", input_file, "Input file (default: standard input)");

    std::vector<const char*> argv;
    argv.push_back("qild");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        MultiPoly p(0);
        std::vector<std::string> names;
        if (!generate.empty()) {
            const auto v = parse_int_list(generate, 4, "--generate");
            std::mt19937_64 rng(seed);
            p = bench_instance(v[0], v[1], v[2], v[3], rng);
            names = default_var_names(p.nvars());
            out << "input: " << poly_to_string(p, names) << "\n";
        } else {
            std::string text;
            if (!input_file.empty()) {
                std::ifstream f(input_file);
                if (!f) {
                    err << "cannot open file: " << input_file << "\n";
                    return 1;
                }
                std::stringstream ss;
                ss << f.rdbuf();
                text = ss.str();
            } else {
                text = read_stdin();
            }
            if (!vars_csv.empty()) {
                names = split_csv(vars_csv);
                p = parse_poly(text, names);
            } else {
                std::tie(p, names) = parse_poly_infer(text);
            }
        }

        if (linearity_only) {
            LinearityWitness w;
            const bool lin = is_q_integer_linear(p, &w);
            out << "q-integer-linear: " << (lin ? "true" : "false") << "\n";
            if (!lin) out << "witness: " << w.detail << "\n";
            return 0;
        }

        auto run_algo = [&]() {
            if (algorithm == "newton") return decompose_newton(p);
            if (algorithm == "bivariate") return decompose_bivariate_iter(p);
            return brute_force_decompose(p);
        };

        const QILDecomposition d = run_algo();
        double bench_total = 0.0;
        if (bench > 0) {
            const auto t0 = std::chrono::steady_clock::now();
            for (int i = 0; i < bench; ++i) (void)run_algo();
            bench_total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }

        if (do_verify) {
            std::string reason;
            if (!verify(p, d, &reason)) {
                err << "verification failed: " << reason << "\n";
                return 2;
            }
        }

        if (json_out) {
            out << to_json(d, names).dump(2) << "\n";
        } else {
            out << "content: " << coef_to_string(d.content) << "\n";
            out << "monomial: " << monomial_to_string(d.monomial, names) << "\n";
            out << "p0: " << poly_to_string(d.p0, names) << "\n";
            out << "factors: " << d.factors.size() << "\n";
            for (const auto& f : d.factors)
                out << "  " << type_string(f.type) << ": " << poly_to_string(f.poly, {"y"}) << "\n";
        }
        if (do_verify) out << "verify: ok\n";
        if (bench > 0)
            out << "bench: runs=" << bench << " total=" << bench_total
                << "s avg=" << bench_total / bench << "s\n";
        return 0;
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const zero_polynomial& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const empty_input& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_input& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qil
