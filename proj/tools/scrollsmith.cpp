// scrollsmith: exact-arithmetic toolkit for rational scrolls with
// prescribed isolated singularities inside cubic fourfolds.
//
// Subcommands: construct | verify | reference-example | dims | foursquare.
// Exit codes: 0 pass, 1 verification fail, 2 infeasible budget,
// 3 search failure, 64 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "scrollsmith/certificates.hpp"
#include "scrollsmith/reference_lambda.hpp"

using namespace scrollsmith;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSearchFailed = 3;
constexpr int kExitUsage = 64;

void render_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                out << prefix << k << ":\n";
                render_text(v, out, prefix + "  ");
            } else {
                out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        size_t idx = 0;
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out << prefix << "- [" << idx << "]\n";
                render_text(v, out, prefix + "  ");
            } else {
                out << prefix << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
            ++idx;
        }
    } else {
        out << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::ostringstream ss;
    render_text(j, ss);
    return ss.str();
}

void emit(const Json& j, const std::string& format, const std::string& out_path) {
    std::string payload = render(j, format);
    if (out_path.empty())
        std::cout << payload;
    else
        write_file_atomic(out_path, payload);
}

std::vector<uint64_t> parse_primes(const std::string& csv) {
    std::vector<uint64_t> primes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        uint64_t p = std::stoull(item);
        if (p < 2) throw CLI::ValidationError("--primes", "not a prime: " + item);
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw CLI::ValidationError("--primes", "not a prime: " + item);
        primes.push_back(p);
    }
    if (primes.empty()) throw CLI::ValidationError("--primes", "empty prime list");
    return primes;
}

void require_odd_characteristic(const std::vector<uint64_t>& primes) {
    for (uint64_t p : primes)
        if (p == 2 || p == 3)
            throw CLI::ValidationError("--primes",
                                       "characteristic " + std::to_string(p) +
                                           " unsupported (polarization divides by 6)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for singular rational scrolls in cubic fourfolds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a scroll with at least r singular pairs");
    int c_r = 0, c_v = 0;
    uint64_t c_seed = 0;
    std::string c_primes = "31", c_out = ".";
    c_cmd->add_option("--r", c_r, "singularity budget")->required();
    c_cmd->add_option("--v", c_v, "scroll type (1, v)")->required();
    c_cmd->add_option("--seed", c_seed, "PRNG seed (SplitMix64)");
    c_cmd->add_option("--primes", c_primes, "verification primes, comma separated");
    c_cmd->add_option("--out", c_out, "output directory for lambda.json and report.json");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "full certificate for a projection matrix");
    std::string v_lambda, v_primes = "31", v_out;
    uint64_t v_seed = 0;
    int v_u = 1;
    int64_t v_r = -1;
    v_cmd->add_option("--lambda", v_lambda, "projection matrix JSON file")->required();
    v_cmd->add_option("--u", v_u, "scroll type parameter u");
    v_cmd->add_option("--r", v_r, "require at least this many singular pairs");
    v_cmd->add_option("--seed", v_seed, "PRNG seed for the cubic search");
    v_cmd->add_option("--primes", v_primes, "verification primes, comma separated");
    v_cmd->add_option("--out", v_out, "certificate output file (default stdout)");

    // reference-example
    auto* p_cmd = app.add_subcommand("reference-example",
                                     "verify the shipped degree-9 eight-node projection");
    std::string p_primes = "31", p_out, p_dump;
    uint64_t p_seed = 0;
    p_cmd->add_option("--seed", p_seed, "PRNG seed for the cubic search");
    p_cmd->add_option("--primes", p_primes, "verification primes, comma separated");
    p_cmd->add_option("--out", p_out, "certificate output file (default stdout)");
    p_cmd->add_option("--dump-lambda", p_dump, "also write the reference matrix JSON here");

    // dims
    auto* d_cmd = app.add_subcommand("dims", "dimension and codimension formula table");
    int64_t d_D = 0, d_N = 0, d_r = -1, d_j = -1, d_u = -1;
    std::string d_out;
    d_cmd->add_option("--D", d_D, "scroll degree")->required();
    d_cmd->add_option("--N", d_N, "ambient projective dimension")->required();
    d_cmd->add_option("--r", d_r, "singularity count for the stratum bound");
    d_cmd->add_option("--j", d_j, "incidence stratum index");
    d_cmd->add_option("--u", d_u, "scroll type parameter u");
    d_cmd->add_option("--out", d_out, "output file (default stdout)");

    // foursquare
    auto* f_cmd = app.add_subcommand("foursquare", "chain-size plans realizing a budget");
    int f_r = 0, f_v = 0;
    std::string f_out;
    f_cmd->add_option("--r", f_r, "singularity budget")->required();
    f_cmd->add_option("--v", f_v, "scroll type (1, v)")->required();
    f_cmd->add_option("--out", f_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_cmd) {
            if (c_r < 0 || c_v < 4)
                throw CLI::ValidationError("construct", "requires r >= 0 and v >= 4");
            auto primes = parse_primes(c_primes);
            auto res = construct_scroll(c_r, c_v, c_seed, primes);
            std::filesystem::create_directories(c_out);
            Json lam = matrix_to_json(res.lambda.lambda);
            Json rep = construct_result_to_json(res);
            rep["command"] = Json{{"name", "construct"}, {"r", c_r},      {"v", c_v},
                                  {"seed", c_seed},      {"primes", primes}};
            auto dir = std::filesystem::path(c_out);
            write_file_atomic((dir / "lambda.json").string(), lam.dump(2) + "\n");
            write_file_atomic((dir / "report.json").string(), rep.dump(2) + "\n");
            if (format == "text") std::cout << render(rep, format);
            std::cout << "wrote " << (dir / "lambda.json").string() << " and "
                      << (dir / "report.json").string() << "\n";
            for (const auto& r : res.reports)
                std::cout << "p=" << r.prime << ": pairs=" << r.pair_count()
                          << " distinct=" << r.distinct_point_count()
                          << " clearance=" << (r.clearance ? "true" : "false") << "\n";
            return kExitPass;
        }
        if (*v_cmd) {
            auto primes = parse_primes(v_primes);
            require_odd_characteristic(primes);
            Json lam = json_parse(read_file(v_lambda));
            ExactMatrix m = matrix_from_json(lam.contains("matrix") ? lam.at("matrix") : lam);
            if (m.rows() < 5 || m.cols() < 4) throw Error("lambda matrix too small");
            ScrollSpec spec{v_u, static_cast<int>(m.rows()) - 2 - v_u,
                            static_cast<int>(m.cols()) - 1};
            spec.validate();
            VerifyOptions opt;
            opt.primes = primes;
            opt.seed = v_seed;
            if (v_r >= 0) opt.expect_min_pairs = v_r;
            Json cert = run_verify(ProjectionMatrix(spec, std::move(m)), opt);
            emit(cert, format, v_out);
            return cert.at("verdict") == "PASS" ? kExitPass : kExitFail;
        }
        if (*p_cmd) {
            auto primes = parse_primes(p_primes);
            require_odd_characteristic(primes);
            if (!p_dump.empty())
                write_file_atomic(p_dump,
                                  matrix_to_json(reference_projection().lambda).dump(2) + "\n");
            Json cert = run_reference_example(p_seed, primes);
            emit(cert, format, p_out);
            return cert.at("verdict") == "PASS" ? kExitPass : kExitFail;
        }
        if (*d_cmd) {
            Json table;
            try {
                table = dims_table(d_D, d_N, d_r >= 0 ? std::optional<int64_t>(d_r) : std::nullopt,
                                   d_j >= 0 ? std::optional<int64_t>(d_j) : std::nullopt,
                                   d_u >= 1 ? std::optional<int64_t>(d_u) : std::nullopt);
            } catch (const Error& e) {
                // the formulas refuse out-of-range inputs
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            emit(table, format, d_out);
            return kExitPass;
        }
        if (*f_cmd) {
            Json table;
            try {
                table = foursquare_table(f_r, f_v);
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            emit(table, format, f_out);
            return table.at("feasible").get<bool>() ? kExitPass : kExitInfeasible;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PlanInfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const SearchFailedError& e) {
        std::cerr << "search failed: " << e.what() << "\n";
        return kExitSearchFailed;
    } catch (const BadReductionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
