// blowup: construct pencils, search blow-up ranks, verify counterexamples.
//
// Exit codes: 0 success, 1 usage or input format error, 2 infeasible search
// or violated precondition, 3 file I/O error, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "blowup/construct.hpp"
#include "blowup/io.hpp"

using namespace blowup;

namespace {

enum Exit { ok = 0, usage = 1, infeasible = 2, io_error = 3, internal = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOpts {
    std::uint64_t seed = 0;
    std::uint64_t budget = 10000;
    std::uint64_t cap = std::uint64_t{1} << 24;
    int threads = 0;

    SearchConfig config() const { return SearchConfig{cap, budget, seed, threads, Exec::parallel}; }
    json to_json() const { return json{{"seed", seed}, {"budget", budget}, {"cap", cap}}; }
};

void add_search_opts(CLI::App* cmd, SearchOpts& o) {
    cmd->add_option("--seed", o.seed, "Seed for random mode");
    cmd->add_option("--budget", o.budget, "Samples for random mode");
    cmd->add_option("--cap", o.cap, "Largest exhaustive tuple count");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) throw IoError("cannot write " + out);
}

json theorem2_conditions(const Instance& inst) {
    const std::uint64_t qd = checked_pow(inst.q, inst.d).value_or(0);
    return json{{"n_at_least_q_pow_d_plus_1", qd != 0 && inst.n >= qd + 1},
                {"q_at_most_log_d_of_n_minus_1", theorem2_log_condition(inst.q, inst.d, inst.n)}};
}

json report_header(const char* command, const Field& f) {
    return json{{"tool_version", kToolVersion}, {"command", command}, {"field", field_to_json(*f)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blow-up rank toolkit for linear matrices over finite fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // construct
    auto* construct = app.add_subcommand("construct", "Write a space file for a known instance");
    construct->require_subcommand(1);
    std::string out;
    std::uint32_t p = 2, k = 1;
    std::size_t d = 2, n = 0;
    auto* thm = construct->add_subcommand("theorem2", "Frobenius pencil of size q^d padded to n x n");
    thm->add_option("--p", p, "Field characteristic")->required();
    thm->add_option("--k", k, "Field degree");
    thm->add_option("--d", d, "Blow-up size")->required();
    thm->add_option("--n", n, "Pencil size")->required();
    thm->add_option("--out", out, "Output path (default stdout)");
    auto* remark = construct->add_subcommand("remark-f2", "The 7 x 7 pencil over GF(2)");
    remark->add_option("--out", out, "Output path (default stdout)");

    // blowup-rank / verify
    std::string space_path, mode_name = "exhaustive";
    SearchOpts sopts;
    auto* brank = app.add_subcommand("blowup-rank", "Maximum rank of L(A_1..A_m) over d x d matrices");
    brank->add_option("--space", space_path, "Space file")->required();
    brank->add_option("--d", d, "Blow-up size")->required()->check(CLI::PositiveNumber);
    brank->add_option("--mode", mode_name, "exhaustive | normalized | random")
        ->check(CLI::IsMember({"exhaustive", "normalized", "random"}));
    add_search_opts(brank, sopts);

    auto* verify = app.add_subcommand("verify", "Decide whether the blow-up rank is a multiple of d");
    verify->add_option("--space", space_path, "Space file")->required();
    verify->add_option("--d", d, "Blow-up size")->required()->check(CLI::PositiveNumber);
    verify->add_option("--mode", mode_name, "exhaustive | normalized | random")
        ->check(CLI::IsMember({"exhaustive", "normalized", "random"}));
    add_search_opts(verify, sopts);

    // census / higman
    std::string poly_text;
    auto* census = app.add_subcommand("census", "Check that f(A) is singular for every d x d tuple");
    census->add_option("--poly", poly_text, "Polynomial, e.g. \"T1^4 - T1\"")->required();
    census->add_option("--p", p, "Field characteristic")->required();
    census->add_option("--k", k, "Field degree");
    census->add_option("--d", d, "Matrix size")->required()->check(CLI::PositiveNumber);
    add_search_opts(census, sopts);

    std::size_t verify_d = 0, pad = 0;
    auto* higman = app.add_subcommand("higman", "Linearize a polynomial");
    higman->add_option("--poly", poly_text, "Polynomial")->required();
    higman->add_option("--p", p, "Field characteristic")->required();
    higman->add_option("--k", k, "Field degree");
    higman->add_option("--verify-d", verify_d, "Check the rank identity exhaustively at this d");
    higman->add_option("--pad", pad, "Also emit the pencil padded with a t0 I_r tail");
    add_search_opts(higman, sopts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*thm) {
            Field f = FieldSpec::make(p, k);
            LinearMatrix l = construct_theorem2(f, d, n);
            Instance inst = theorem2_instance(f, d, n);
            if (!theorem2_log_condition(inst.q, d, n))
                std::cerr << "note: q <= log_d(n - 1) does not hold for this instance\n";
            json j = space_to_json(l, inst);
            j["tool_version"] = kToolVersion;
            emit(j, out);
        } else if (*remark) {
            json j = space_to_json(construct_remark_f2(), remark_f2_instance());
            j["tool_version"] = kToolVersion;
            emit(j, out);
        } else if (*brank || *verify) {
            SpaceFile sf = space_from_json(read_json_file(space_path));
            const SearchMode mode = parse_search_mode(mode_name).value();
            const SearchConfig cfg = sopts.config();
            const Field& f = sf.pencil.field();
            if (*brank) {
                json j = report_header("blowup-rank", f);
                j["space"] = space_to_json(sf.pencil, sf.instance);
                j["parameters"] = sopts.to_json();
                j["parameters"]["d"] = d;
                j["parameters"]["mode"] = mode_name;
                j["certificate"] = certificate_to_json(blowup_rank(sf.pencil, d, mode, cfg));
                emit(j, "");
            } else {
                Instance inst = sf.instance.value_or(Instance{});
                auto report = verify_counterexample(sf.pencil, d, mode, cfg, inst.shape);
                json j = counterexample_to_json(report, inst);
                j["command"] = "verify";
                j["space"] = space_to_json(sf.pencil, sf.instance);
                j["parameters"] = sopts.to_json();
                j["parameters"]["d"] = d;
                j["parameters"]["mode"] = mode_name;
                if (inst.kind == "theorem2") j["theorem2_conditions"] = theorem2_conditions(inst);
                emit(j, "");
            }
        } else if (*census) {
            Field f = FieldSpec::make(p, k);
            NcPoly poly = ncpoly_parse(poly_text, f);
            json j = report_header("census", f);
            j["poly"] = poly.to_string();
            j["parameters"] = sopts.to_json();
            j["parameters"]["d"] = d;
            j["census"] = census_to_json(singular_census(poly, d, sopts.config()));
            emit(j, "");
        } else if (*higman) {
            Field f = FieldSpec::make(p, k);
            NcPoly poly = ncpoly_parse(poly_text, f);
            LinearMatrix lf = higman_linearize(poly);
            json j = report_header("higman", f);
            j["poly"] = poly.to_string();
            j["ell"] = lf.rows();
            j["pencil"] = space_to_json(lf);
            if (pad > 0) j["padded"] = space_to_json(pad_pencil(lf, pad));
            if (verify_d > 0) {
                j["parameters"] = sopts.to_json();
                j["verification"] = higman_verification_to_json(verify_higman(lf, poly, verify_d, sopts.config()));
            }
            emit(j, "");
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << "  " << poly_text << "\n  "
                  << std::string(std::min(e.position(), poly_text.size()), ' ') << "^\n";
        return usage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const SearchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return infeasible;
    } catch (const std::invalid_argument& e) {
        // FieldError, bad construction parameters, nonconstant-f requirements.
        std::cerr << "error: " << e.what() << "\n";
        return infeasible;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return ok;
}
