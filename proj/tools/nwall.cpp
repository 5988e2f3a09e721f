#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nw/cf.hpp"
#include "nw/io.hpp"
#include "nw/verify.hpp"

namespace {

using nw::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_moduli(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    if (out.empty()) throw UsageError("no modulus given");
    return out;
}

std::uint64_t parse_single_modulus(const std::string& s) {
    auto m = parse_moduli(s);
    if (m.size() != 1) throw UsageError("this command takes exactly one modulus");
    return m[0];
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s, const char* what) {
    auto pos = s.find(':', 1);  // skip a leading minus sign
    if (pos == std::string::npos) throw UsageError(std::string(what) + " must look like a:b");
    std::int64_t a = std::stoll(s.substr(0, pos));
    std::int64_t b = std::stoll(s.substr(pos + 1));
    if (a > b) throw UsageError(std::string(what) + " has a > b");
    return {a, b};
}

nw::BiSequence parse_seq(const std::string& s) {
    if (s == "paperfolding") return nw::BiSequence::paperfolding();
    if (s.rfind("level:", 0) == 0) return nw::BiSequence::level(std::stoi(s.substr(6)));
    if (s.rfind("file:", 0) == 0) return nw::BiSequence::from_file(s.substr(5));
    throw UsageError("unknown sequence spec '" + s + "' (paperfolding | level:<s> | file:<path>)");
}

// command-line polynomials are comma-separated coefficients, highest first
nw::Poly parse_poly(const std::string& s, const nw::PrimeField& f) {
    std::vector<std::int64_t> coeffs;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) coeffs.push_back(std::stoll(tok));
    if (coeffs.empty()) throw UsageError("empty polynomial");
    std::reverse(coeffs.begin(), coeffs.end());
    return nw::Poly(f, coeffs);
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

void write_json(const std::string& out_path, const Json& j) {
    write_text(out_path, j.dump() + "\n");
}

nw::WallStrategy parse_strategy(const std::string& s) {
    if (s == "hybrid") return nw::WallStrategy::hybrid;
    if (s == "oracle") return nw::WallStrategy::oracle;
    throw UsageError("strategy must be hybrid or oracle");
}

void merge_report(nw::VerificationReport& into, const nw::VerificationReport& from) {
    if (into.suite.empty()) {
        into = from;
        return;
    }
    into.checks_run += from.checks_run;
    into.failure_count += from.failure_count;
    for (const auto& fail : from.failures) {
        if (into.failures.size() < nw::VerificationReport::kMaxStoredFailures)
            into.failures.push_back(fail);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"number walls, continued fractions and Littlewood-type infima over prime fields"};
    app.require_subcommand(1);

    std::string modulus_str = "3";
    std::string seq_str = "paperfolding";
    std::string cols_str = "-20:20";
    std::string strategy_str = "hybrid";
    std::string out_path;
    std::string format = "json";
    int rows = 20;

    auto add_shared = [&](CLI::App* cmd, bool with_region) {
        cmd->add_option("--modulus", modulus_str, "prime modulus (comma list where allowed)");
        cmd->add_option("--seq", seq_str, "paperfolding | level:<s> | file:<path>");
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        if (with_region) {
            cmd->add_option("--rows", rows, "number of wall rows J");
            cmd->add_option("--cols", cols_str, "column range k0:k1");
            cmd->add_option("--strategy", strategy_str, "hybrid | oracle");
        }
    };

    auto* cmd_gen = app.add_subcommand("gen", "generate a wall region dump");
    add_shared(cmd_gen, true);
    cmd_gen->add_option("--format", format, "json | csv");

    auto* cmd_render = app.add_subcommand("render", "generate a wall region and write a P6 pixmap");
    add_shared(cmd_render, true);

    auto* cmd_windows = app.add_subcommand("windows", "scan a wall region for windows");
    add_shared(cmd_windows, true);

    auto* cmd_cf = app.add_subcommand("cf", "continued fraction expansion of Gamma_m");
    add_shared(cmd_cf, false);
    std::int64_t cf_m = 1;
    int cf_precision = 64;
    bool cf_raw = false;
    cmd_cf->add_option("-m,--m", cf_m, "series shift m");
    cmd_cf->add_option("--precision", cf_precision, "truncation precision K");
    cmd_cf->add_flag("--raw", cf_raw, "skip the leading-coefficient normalization");

    auto* cmd_lw = app.add_subcommand("littlewood", "bounded-degree Littlewood-type infimum");
    add_shared(cmd_lw, false);
    std::string p_str = "1,0";
    int max_deg = 12;
    std::string mode_str = "fast";
    int lw_precision = 0;
    cmd_lw->add_option("--p", p_str, "polynomial p, coefficients highest first (1,0 = t)");
    cmd_lw->add_option("--max-deg", max_deg, "degree bound D for the witness search");
    cmd_lw->add_option("--mode", mode_str, "fast | slow");
    cmd_lw->add_option("--precision", lw_precision, "series precision (default 2D + 4 deg p + 16)");

    auto* cmd_verify = app.add_subcommand("verify", "run an identity suite");
    add_shared(cmd_verify, true);
    std::string suite = "wxyz";
    std::string m_range_str = "-10:10";
    int n_max = 9;
    int fe_precision = 64;
    cmd_verify->add_option("--suite", suite,
                           "abcd | wxyz | wxyz-int | approx | funceq | geometry | frame | "
                           "obstruction");
    cmd_verify->add_option("--m-range", m_range_str, "index range a:b");
    cmd_verify->add_option("--n-max", n_max, "maximal order n");
    cmd_verify->add_option("--precision", fe_precision, "truncation precision (funceq)");

    auto* cmd_trace = app.add_subcommand("trace", "trace the window inducement chain from a seed");
    add_shared(cmd_trace, true);
    std::string corner_str = "2,3";
    int depth = 8;
    bool empty_seed = false;
    cmd_trace->add_option("--corner", corner_str, "seed window corner j,k");
    cmd_trace->add_option("--depth", depth, "maximal number of induced children to follow");
    cmd_trace->add_flag("--empty", empty_seed, "seed is an empty window (four nonzero cells)");

    auto* cmd_scan = app.add_subcommand("scan-t2m1",
                                        "scan convergent denominators for t^2-1 divisibility");
    add_shared(cmd_scan, false);
    std::string scan_range_str = "-50:50";
    int scan_deg = 60;
    cmd_scan->add_option("--m-range", scan_range_str, "series shift range a:b");
    cmd_scan->add_option("--max-deg", scan_deg, "maximal denominator degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_gen) || app.got_subcommand(cmd_render) ||
            app.got_subcommand(cmd_windows)) {
            std::uint64_t l = parse_single_modulus(modulus_str);
            nw::PrimeField f(l);
            nw::BiSequence seq = parse_seq(seq_str);
            auto [c0, c1] = parse_range(cols_str, "--cols");
            nw::WallRegion region = nw::generate(seq, f, rows, static_cast<int>(c0),
                                                 static_cast<int>(c1), parse_strategy(strategy_str));
            if (app.got_subcommand(cmd_gen)) {
                if (format == "json") {
                    write_json(out_path, nw::wall_to_json(region));
                } else if (format == "csv") {
                    write_text(out_path, nw::wall_to_csv(region));
                } else {
                    throw UsageError("format must be json or csv");
                }
            } else if (app.got_subcommand(cmd_render)) {
                if (out_path.empty()) throw UsageError("render requires --out");
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open output file " + out_path);
                nw::write_ppm(region, out);
            } else {
                write_json(out_path, nw::windows_to_json(region, nw::scan_windows(region)));
            }
            return 0;
        }

        if (app.got_subcommand(cmd_cf)) {
            std::uint64_t l = parse_single_modulus(modulus_str);
            nw::PrimeField f(l);
            nw::BiSequence seq = parse_seq(seq_str);
            nw::ConvergentSequence cs = nw::cf_expand(seq, f, cf_m, cf_precision);
            if (!cf_raw) nw::normalize_convergents(cs, seq, f);
            Json j;
            j["modulus"] = l;
            j["seq"] = seq.describe();
            j["m"] = cf_m;
            j["precision"] = cs.precision_used;
            j["valid_prefix"] = cs.valid_prefix;
            Json items = Json::array();
            for (const auto& item : cs.items) {
                Json ji;
                ji["h"] = item.h;
                ji["q"] = item.q;
                ji["a_coeffs"] = nw::poly_coeffs_json(item.partial);
                ji["p_coeffs"] = nw::poly_coeffs_json(item.num);
                ji["q_coeffs"] = nw::poly_coeffs_json(item.den);
                items.push_back(std::move(ji));
            }
            j["items"] = std::move(items);
            write_json(out_path, j);
            return 0;
        }

        if (app.got_subcommand(cmd_lw)) {
            std::uint64_t l = parse_single_modulus(modulus_str);
            nw::PrimeField f(l);
            nw::BiSequence seq = parse_seq(seq_str);
            nw::Poly p = parse_poly(p_str, f);
            if (p.degree() < 1) throw UsageError("--p must be nonconstant");
            int K = lw_precision > 0 ? lw_precision : 2 * max_deg + 4 * p.degree() + 16;
            int inner = K / p.degree() + 2;
            nw::Laurent gamma = nw::compose_series(nw::series_slice(seq, f, 1, inner), p, K);
            nw::LittlewoodMode mode;
            if (mode_str == "fast") {
                mode = nw::LittlewoodMode::fast;
            } else if (mode_str == "slow") {
                mode = nw::LittlewoodMode::slow;
            } else {
                throw UsageError("mode must be fast or slow");
            }
            nw::LittlewoodResult res = nw::brute_force_littlewood(gamma, p, max_deg, mode);
            Json j;
            j["modulus"] = l;
            j["seq"] = seq.describe();
            j["p"] = p_str;
            j["max_deg"] = max_deg;
            j["mode"] = mode_str;
            j["precision"] = K;
            j["min_exp"] = res.min_exp;
            j["witness_coeffs"] = nw::poly_coeffs_json(res.witness);
            j["candidates"] = res.candidates_checked;
            write_json(out_path, j);
            return 0;
        }

        if (app.got_subcommand(cmd_verify)) {
            std::vector<std::uint64_t> moduli = parse_moduli(modulus_str);
            auto [m_lo, m_hi] = parse_range(m_range_str, "--m-range");
            nw::VerificationReport report;
            if (suite == "abcd") {
                report = nw::verify_doubling_recurrences(moduli, m_lo, m_hi, n_max);
            } else if (suite == "wxyz") {
                report = nw::verify_hankel_doubling(moduli, m_lo, m_hi, n_max, false);
            } else if (suite == "wxyz-int") {
                report = nw::verify_hankel_doubling(moduli, m_lo, m_hi, n_max, true);
            } else if (suite == "approx") {
                report = nw::verify_approximant_convergents(moduli, m_lo, m_hi, n_max);
            } else if (suite == "funceq") {
                report = nw::verify_functional_equations(moduli, m_lo, m_hi, fe_precision);
            } else if (suite == "geometry" || suite == "frame" || suite == "obstruction") {
                nw::BiSequence seq = parse_seq(seq_str);
                auto [c0, c1] = parse_range(cols_str, "--cols");
                for (std::uint64_t l : moduli) {
                    nw::PrimeField f(l);
                    nw::WallRegion region =
                        nw::generate(seq, f, rows, static_cast<int>(c0), static_cast<int>(c1),
                                     parse_strategy(strategy_str));
                    nw::VerificationReport one;
                    if (suite == "geometry") {
                        one = nw::verify_window_geometry(region);
                    } else if (suite == "frame") {
                        one = nw::verify_frame_and_sufficiency(region);
                    } else {
                        one = nw::check_obstruction(region);
                    }
                    merge_report(report, one);
                }
            } else {
                throw UsageError("unknown suite '" + suite + "'");
            }
            write_json(out_path, nw::report_to_json(report));
            return report.passed() ? 0 : 1;
        }

        if (app.got_subcommand(cmd_trace)) {
            std::uint64_t l = parse_single_modulus(modulus_str);
            nw::PrimeField f(l);
            nw::BiSequence seq = parse_seq(seq_str);
            auto [c0, c1] = parse_range(cols_str, "--cols");
            nw::WallRegion region = nw::generate(seq, f, rows, static_cast<int>(c0),
                                                 static_cast<int>(c1), parse_strategy(strategy_str));
            auto comma = corner_str.find(',');
            if (comma == std::string::npos) throw UsageError("--corner must look like j,k");
            int jc = std::stoi(corner_str.substr(0, comma));
            int kc = std::stoi(corner_str.substr(comma + 1));
            std::optional<nw::Window> seed;
            if (empty_seed) {
                seed = nw::Window{jc, kc, 0, false};
            } else {
                for (const auto& w : nw::scan_windows(region)) {
                    if (w.j_corner == jc && w.k_corner == kc) {
                        seed = w;
                        break;
                    }
                }
                if (!seed) throw UsageError("no window with the given corner in the region");
            }
            nw::InducementChain chain = nw::trace_inducement(region, *seed, depth);
            Json j;
            j["modulus"] = l;
            j["seed"] = Json{{"j_corner", jc}, {"k_corner", kc}, {"size", seed->size}};
            switch (chain.stopped) {
                case nw::InducementChain::Stop::no_child: j["stopped"] = "no_child"; break;
                case nw::InducementChain::Stop::out_of_region: j["stopped"] = "out_of_region"; break;
                case nw::InducementChain::Stop::depth_reached: j["stopped"] = "depth_reached"; break;
                default: j["stopped"] = "none"; break;
            }
            Json links = Json::array();
            for (const auto& link : chain.links) {
                Json jl;
                jl["j_corner"] = link.window.j_corner;
                jl["k_corner"] = link.window.k_corner;
                jl["size"] = link.window.size;
                jl["predicted_size"] = link.predicted_size;
                jl["predicted_q"] = nw::poly_coeffs_json(link.predicted_q);
                jl["verified"] = link.verified;
                links.push_back(std::move(jl));
            }
            j["links"] = std::move(links);
            write_json(out_path, j);
            return 0;
        }

        if (app.got_subcommand(cmd_scan)) {
            std::uint64_t l = parse_single_modulus(modulus_str);
            nw::PrimeField f(l);
            nw::BiSequence seq = parse_seq(seq_str);
            auto [m_lo, m_hi] = parse_range(scan_range_str, "--m-range");
            auto violations = nw::scan_t2_minus_1(seq, f, m_lo, m_hi, scan_deg);
            Json j;
            j["modulus"] = l;
            j["seq"] = seq.describe();
            j["m_range"] = Json::array({m_lo, m_hi});
            j["deg_max"] = scan_deg;
            Json arr = Json::array();
            for (const auto& violation : violations) {
                Json jv;
                jv["m"] = violation.m;
                jv["h"] = violation.h;
                jv["q"] = violation.q;
                jv["q_coeffs"] = nw::poly_coeffs_json(violation.den);
                arr.push_back(std::move(jv));
            }
            j["violations"] = std::move(arr);
            write_json(out_path, j);
            return violations.empty() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
