// dsum: compute Apostol-Bernoulli / Frobenius-Euler polynomials and
// Dedekind-type sums, and run exact identity-verification campaigns.
//
// Exit codes: 0 success, 1 identity failure, 2 usage or grid error,
// 3 parameter collision, 4 bad sequence input.

#include "dsum/appell.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/errors.hpp"
#include "dsum/io.hpp"
#include "dsum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dsum;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kIdentityFailure = 1, kUsage = 2, kCollision = 3, kBadInput = 4 };

// Exceptions carrying an exit code out of a subcommand.
struct CliExit {
    int code;
    std::string message;
};

bool unicode_terminal() {
    if (!isatty(STDOUT_FILENO)) return false;
    for (const char* var : {"LC_ALL", "LC_CTYPE", "LANG"}) {
        if (const char* v = std::getenv(var); v && *v) {
            const std::string s(v);
            return s.find("UTF-8") != std::string::npos || s.find("utf8") != std::string::npos ||
                   s.find("UTF8") != std::string::npos || s.find("utf-8") != std::string::npos;
        }
    }
    return false;
}

// "q^12" -> "q¹²" for terminal display.
std::string prettify(const std::string& s) {
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            while (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) out += sup[s[++i] - '0'];
        } else if (s[i] == '*' && i + 1 < s.size() && s[i + 1] == 'q') {
            // 2*q -> 2q
        } else {
            out += s[i];
        }
    }
    return out;
}

struct Output {
    std::string format = "human";

    void value(const std::string& canonical, nlohmann::ordered_json meta) const {
        if (format == "json") {
            meta["value"] = canonical;
            std::cout << meta.dump() << "\n";
        } else {
            std::cout << (unicode_terminal() ? prettify(canonical) : canonical) << "\n";
        }
    }
};

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw CliExit{kUsage, std::string("--") + flag + ": " + e.what()};
    }
}

// "a/b", a cyclotomic JSON object, or "zeta:n:k" for zeta_n^k.
CycloNum parse_scalar_flag(const std::string& text, const char* flag) {
    try {
        if (text.rfind("zeta:", 0) == 0) {
            const auto rest = text.substr(5);
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("expected zeta:n:k");
            return zeta_pow(std::stoll(rest.substr(0, colon)), std::stoll(rest.substr(colon + 1)));
        }
        return io::parse_cyclonum(text);
    } catch (const std::exception& e) {
        throw CliExit{kUsage, std::string("--") + flag + ": " + e.what()};
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliExit{kBadInput, "cannot read '" + path.string() + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A family descriptor or a path to a sequence file.
PeriodicSeq resolve_sequence(const std::string& seq, long long n, std::uint64_t seed,
                             const std::optional<std::string>& c0) {
    try {
        const bool looks_like_file = seq.find('/') != std::string::npos || seq.ends_with(".json") || fs::exists(seq);
        if (looks_like_file) {
            PeriodicSeq C = io::parse_sequence(read_file(seq));
            if (n != 0 && C.n() != n)
                throw CliExit{kBadInput, "sequence file has n = " + std::to_string(C.n()) + " but --n is " +
                                             std::to_string(n)};
            return C;
        }
        auto desc = SequenceDescriptor::parse(seq);
        if (c0) desc.c0 = Rational::parse(*c0);
        if (n < 2) throw CliExit{kUsage, "--n >= 2 is required with a family descriptor"};
        return family(desc, n, seed);
    } catch (const CliExit&) {
        throw;
    } catch (const std::exception& e) {
        throw CliExit{kBadInput, "bad sequence '" + seq + "': " + e.what()};
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliExit{kUsage, "cannot write '" + out_path + "'"};
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Apostol-Bernoulli, Frobenius-Euler and Dedekind-type sum calculator"};
    app.require_subcommand(1);
    Output output;
    app.add_option("--format", output.format, "Output format for computed values")
        ->check(CLI::IsMember({"human", "json"}));

    // poly
    auto* poly = app.add_subcommand("poly", "Apostol-Bernoulli polynomial B_m(q, lambda)");
    long long poly_m = 0;
    std::string poly_lambda = "1";
    bool classical = false;
    poly->add_option("--m", poly_m, "Index m >= 0")->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--lambda", poly_lambda, "lambda as a/b");
    poly->add_flag("--classical", classical, "Classical Bernoulli polynomial (lambda = 1)");

    // hpoly
    auto* hpoly = app.add_subcommand("hpoly", "Frobenius-Euler polynomial H_m^{(p)}(q, lambda, gamma)");
    long long h_m = 0, h_p = 0;
    std::string h_lambda, h_gamma;
    hpoly->add_option("--m", h_m, "Index m >= 0")->required()->check(CLI::NonNegativeNumber);
    hpoly->add_option("--p", h_p, "Integer power p")->required();
    hpoly->add_option("--lambda", h_lambda, "lambda: a/b, zeta:n:k or cyclotomic JSON")->required();
    hpoly->add_option("--gamma", h_gamma, "gamma: a/b, zeta:n:k or cyclotomic JSON")->required();

    // esum
    auto* esum = app.add_subcommand("esum", "Dedekind-type sum E_{m,n}^{r,p}(q, lambda; C)");
    long long e_m = 1, e_n = 0, e_r = 0, e_p = 0;
    std::string e_lambda = "1", e_seq;
    std::optional<std::string> e_at, e_c0;
    std::uint64_t e_seed = 0;
    esum->add_option("--m", e_m, "m >= 1")->required()->check(CLI::PositiveNumber);
    esum->add_option("--n", e_n, "Period n >= 2 (taken from the file for sequence files)");
    esum->add_option("--r", e_r, "Integer r");
    esum->add_option("--p", e_p, "Integer p");
    esum->add_option("--lambda", e_lambda, "lambda: a/b, zeta:n:k or cyclotomic JSON");
    esum->add_option("--seq", e_seq, "Family (delta, ramanujan, fourier-dedekind:a=3, ...) or sequence file")
        ->required();
    esum->add_option("--c0", e_c0, "C_0 for the Dedekind weight families");
    esum->add_option("--at", e_at, "Evaluate at q = a/b");
    esum->add_option("--seed", e_seed, "Seed for random:<i> sequences");

    // vsum
    auto* vsum = app.add_subcommand("vsum", "Power sum V_n^{(k)}(lambda) over totatives");
    long long v_n = 2, v_k = 0;
    std::string v_lambda = "1";
    vsum->add_option("--n", v_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    vsum->add_option("--k", v_k, "k >= 0")->required()->check(CLI::NonNegativeNumber);
    vsum->add_option("--lambda", v_lambda, "lambda as a/b");

    // ramanujan
    auto* raman = app.add_subcommand("ramanujan", "Ramanujan sum c_n(k)");
    long long c_n = 1, c_k = 0;
    raman->add_option("--n", c_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    raman->add_option("--k", c_k, "Integer k")->required();

    // interp
    auto* interp = app.add_subcommand("interp", "Interpolation polynomial C^{(r)}(q)");
    long long i_n = 0, i_r = 0;
    std::string i_seq, i_method = "dft";
    std::optional<std::string> i_c0;
    std::uint64_t i_seed = 0;
    interp->add_option("--seq", i_seq, "Family or sequence file")->required();
    interp->add_option("--n", i_n, "Period n >= 2");
    interp->add_option("--r", i_r, "Integer r");
    interp->add_option("--c0", i_c0, "C_0 for the Dedekind weight families");
    interp->add_option("--method", i_method, "dft (coefficient formula) or lagrange")
        ->check(CLI::IsMember({"dft", "lagrange"}));
    interp->add_option("--seed", i_seed, "Seed for random:<i> sequences");

    // verify
    auto* verify = app.add_subcommand("verify", "Run an identity-verification campaign");
    std::string vf_identity, vf_grid, vf_out, vf_format = "json";
    std::optional<std::string> vf_campaign;
    int vf_workers = 0;
    std::optional<std::uint64_t> vf_seed;
    verify->add_option("--identity", vf_identity, "prop1|prop2|mult|section4|moebius|gseries|all")
        ->required()
        ->check(CLI::IsMember({"prop1", "prop2", "mult", "section4", "moebius", "gseries", "all"}));
    verify->add_option("--grid", vf_grid, "Grid spec JSON file (default: acceptance grid)");
    verify->add_option("--out", vf_out, "Report path (default: $DSUM_OUT_DIR/<campaign>.<ext> or stdout)");
    verify->add_option("--format", vf_format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--workers", vf_workers, "Worker threads (0 = all, 1 = serial reference)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", vf_seed, "Seed for random sequences (overrides the grid file)");
    verify->add_option("--campaign", vf_campaign, "Campaign name in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*poly) {
            Rational lambda = parse_rational_flag(poly_lambda, "lambda");
            if (classical) {
                if (!lambda.is_one() && poly->count("--lambda")) throw CliExit{kUsage, "--classical implies lambda = 1"};
                lambda = Rational(1);
            }
            const RPoly B = apostol_bernoulli(static_cast<std::size_t>(poly_m), lambda);
            output.value(to_string(B), {{"m", poly_m}, {"lambda", lambda.str()}});
            return kOk;
        }
        if (*hpoly) {
            const CycloNum lambda = parse_scalar_flag(h_lambda, "lambda");
            const CycloNum gamma = parse_scalar_flag(h_gamma, "gamma");
            const CPoly H = frobenius_euler(static_cast<std::size_t>(h_m), h_p, lambda, gamma);
            output.value(to_string(H), {{"m", h_m}, {"p", h_p}});
            return kOk;
        }
        if (*esum) {
            const PeriodicSeq C = resolve_sequence(e_seq, e_n, e_seed, e_c0);
            const CycloNum lambda = parse_scalar_flag(e_lambda, "lambda");
            const CPoly E = e_sum(ESumParams{e_m, e_r, e_p, lambda, C});
            nlohmann::ordered_json meta{{"m", e_m}, {"n", C.n()}, {"r", e_r}, {"p", e_p}, {"seq", e_seq}};
            if (e_at) {
                const CycloNum q0(parse_rational_flag(*e_at, "at"));
                const CycloNum v = E(q0);
                meta["at"] = *e_at;
                output.value(v.to_rational() ? v.to_rational()->str() : v.json(), meta);
            } else {
                output.value(to_string(E), meta);
            }
            return kOk;
        }
        if (*vsum) {
            const Rational lambda = parse_rational_flag(v_lambda, "lambda");
            output.value(v_sum(v_n, v_k, lambda).str(), {{"n", v_n}, {"k", v_k}, {"lambda", lambda.str()}});
            return kOk;
        }
        if (*raman) {
            output.value(ramanujan_sum(c_n, c_k).str(), {{"n", c_n}, {"k", c_k}});
            return kOk;
        }
        if (*interp) {
            const PeriodicSeq C = resolve_sequence(i_seq, i_n, i_seed, i_c0);
            const CPoly f = i_method == "dft" ? interp_poly(dft_inverse(C), i_r) : lagrange_oracle(C, i_r);
            output.value(to_string(f), {{"n", C.n()}, {"r", i_r}, {"method", i_method}});
            return kOk;
        }
        if (*verify) {
            std::vector<GridSpec> grids;
            std::optional<std::size_t> mutation;
            const std::uint64_t seed = vf_seed.value_or(0);
            if (vf_identity == "all") {
                if (!vf_grid.empty()) throw CliExit{kUsage, "--grid cannot be combined with --identity all"};
                for (Identity id : all_identities()) grids.push_back(default_grid(id, seed));
            } else if (vf_grid.empty()) {
                grids.push_back(default_grid(parse_identity(vf_identity), seed));
            } else {
                std::string text;
                try {
                    text = read_file(vf_grid);
                } catch (const CliExit& e) {
                    throw CliExit{kUsage, e.message};
                }
                auto file = io::parse_grid(text, parse_identity(vf_identity));
                if (vf_seed) file.spec.seed = *vf_seed;
                grids.push_back(file.spec);
                mutation = file.mutation_case;
            }
#ifndef DSUM_TEST_HOOKS
            if (mutation) throw CliExit{kUsage, "'mutation_case' is only honored by test builds"};
#endif
            std::vector<IdentityCase> cases;
            for (const auto& g : grids) {
                RunOptions opt;
                opt.workers = vf_workers;
                opt.perturb_case = mutation;
                auto part = run_grid(g, opt);
                cases.insert(cases.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            }
            const std::string campaign =
                vf_campaign.value_or(grids.size() == 1 ? grids.front().campaign : std::string("acceptance-all"));
            const std::string text = vf_format == "csv" ? io::report_csv(cases) : io::report_json(campaign, cases);

            std::string out_path = vf_out;
            if (out_path.empty()) {
                if (const char* dir = std::getenv("DSUM_OUT_DIR"); dir && *dir)
                    out_path = (fs::path(dir) / (campaign + "." + vf_format)).string();
            }
            write_output(text, out_path);
            const Summary s = summarize(cases);
            std::cerr << campaign << ": " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
            return s.fail == 0 ? kOk : kIdentityFailure;
        }
    } catch (const CliExit& e) {
        std::cerr << "dsum: " << e.message << "\n";
        return e.code;
    } catch (const ParameterCollision& e) {
        std::cerr << "dsum: parameter collision: " << e.what() << "\n";
        return kCollision;
    } catch (const InvalidPower& e) {
        std::cerr << "dsum: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidGrid& e) {
        std::cerr << "dsum: grid error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "dsum: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "dsum: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
