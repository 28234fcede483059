#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pslat/chain.hpp"
#include "pslat/classify.hpp"
#include "pslat/errors.hpp"
#include "pslat/lattice.hpp"

namespace {

// Exit codes, stable across releases:
//   0 success (and "Inside" for member)
//   1 "Outside" for member, or a failed verification verdict
//   2 malformed input: expression syntax, state syntax, bad flags
//   3 resource cap exceeded (PSLAT_DD_CAP)
//   4 domain errors: negative state entries, non-GHZ-diagonal X data
enum ExitCode : int { kOk = 0, kOutside = 1, kBadInput = 2, kResource = 3, kDomain = 4 };

using pslat::Vec8;

Vec8 parse_state(const std::string& csv) {
    std::array<std::string, pslat::kDim> parts;
    std::stringstream ss(csv);
    std::string item;
    std::size_t count = 0;
    while (std::getline(ss, item, ',')) {
        if (count >= pslat::kDim) throw std::invalid_argument("expected 8 comma-separated entries");
        parts[count++] = item;
    }
    if (count != pslat::kDim) throw std::invalid_argument("expected 8 comma-separated entries");
    return pslat::vec8_from_strings(parts);
}

std::array<pslat::Rat, 4> parse_quad(const std::string& csv) {
    std::array<pslat::Rat, 4> quad;
    std::stringstream ss(csv);
    std::string item;
    std::size_t count = 0;
    while (std::getline(ss, item, ',')) {
        if (count >= 4) throw std::invalid_argument("expected 4 comma-separated entries");
        quad[count++] = pslat::parse_rational(item);
    }
    if (count != 4) throw std::invalid_argument("expected 4 comma-separated entries");
    return quad;
}

pslat::XState parse_xstate(const std::string& text) {
    std::array<std::string, 3> groups;
    std::stringstream ss(text);
    std::string item;
    std::size_t count = 0;
    while (std::getline(ss, item, ';')) {
        if (count >= 3) throw std::invalid_argument("expected a;b;c groups");
        groups[count++] = item;
    }
    if (count != 3) throw std::invalid_argument("expected a;b;c groups");
    pslat::XState x;
    x.a = parse_quad(groups[0]);
    x.b = parse_quad(groups[1]);
    x.c = parse_quad(groups[2]);
    return x;
}

void emit_json(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output path: " + path);
        out << j.dump(2) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact polyhedral engine for the partial-separability lattice of "
                 "three-qubit GHZ-diagonal states"};
    app.require_subcommand(1);

    std::string expr_text, state_text, xstate_text, output_path;
    long max_n = 100;
    std::string mode = "replay";

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a lattice expression to a cone");
    cmd_eval->add_option("expr", expr_text, "expression, e.g. \"A|(B&C)\" or \"f^2(A)\"")
        ->required();
    cmd_eval->add_option("-o,--output", output_path, "write the cone JSON here instead of stdout");

    auto* cmd_member = app.add_subcommand("member", "certified membership of a state in a cone");
    cmd_member->add_option("--state", state_text, "8 comma-separated rationals")->required();
    cmd_member->add_option("--expr", expr_text, "lattice expression")->required();

    auto* cmd_classify = app.add_subcommand("classify", "18-cone partial-separability profile");
    cmd_classify->add_option("--state", state_text, "8 comma-separated rationals")->required();
    cmd_classify->add_option("-o,--output", output_path, "write the profile JSON here");

    auto* cmd_chain = app.add_subcommand("chain", "verify the strict chain up to a depth");
    cmd_chain->add_option("--max-n", max_n, "chain depth, at least 1")->required();
    cmd_chain->add_option("--mode", mode, "full (double description) or replay (certificates)")
        ->check(CLI::IsMember({"full", "replay"}));

    auto* cmd_verify = app.add_subcommand(
        "paper-verify", "replay both inductions and emit the certified report");
    cmd_verify->add_option("--max-n", max_n, "verify n = 0..max_n (default 100)");
    cmd_verify->add_option("-o,--output", output_path, "write the report JSON here");

    auto* cmd_convert =
        app.add_subcommand("convert", "convert between spectrum and X-matrix form");
    auto* state_opt = cmd_convert->add_option("--state", state_text, "spectrum to X form");
    auto* xstate_opt =
        cmd_convert->add_option("--xstate", xstate_text, "X form \"a1,..,a4;b1,..;c1,..\"");
    state_opt->excludes(xstate_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    const pslat::BaseCones& base = pslat::BaseCones::standard();

    if (cmd_eval->parsed()) {
        const pslat::Cone cone = pslat::eval(pslat::parse(expr_text), base);
        if (output_path.empty()) {
            std::cerr << "rays: " << cone.generators().size() << "\n"
                      << "facets: " << cone.facets().size() << "\n";
        } else {
            std::cout << "rays: " << cone.generators().size() << "\n"
                      << "facets: " << cone.facets().size() << "\n";
        }
        emit_json(cone.to_json(), output_path);
        return kOk;
    }

    if (cmd_member->parsed()) {
        const Vec8 p = parse_state(state_text);
        const pslat::Certificate cert = pslat::member(p, pslat::eval(pslat::parse(expr_text), base));
        const bool inside = pslat::is_inside(cert);
        std::cout << (inside ? "Inside" : "Outside") << "\n";
        std::cout << pslat::certificate_to_json(cert).dump(2) << "\n";
        return inside ? kOk : kOutside;
    }

    if (cmd_classify->parsed()) {
        const Vec8 p = parse_state(state_text);
        emit_json(pslat::ps_profile(p).to_json(), output_path);
        return kOk;
    }

    if (cmd_chain->parsed()) {
        if (max_n < 1) {
            std::cerr << "chain: --max-n must be at least 1\n";
            return kBadInput;
        }
        bool all_ok = true;
        if (mode == "full") {
            for (const auto& link : pslat::verify_chain_small(max_n)) {
                const bool ok = link.grows && link.strict && link.rho_inside && link.rho_outside_prev;
                all_ok = all_ok && ok;
                std::cout << "n=" << link.n << " grows=" << (link.grows ? "yes" : "no")
                          << " strict=" << (link.strict ? "yes" : "no")
                          << " rho_inside=" << (link.rho_inside ? "yes" : "no")
                          << " rho_outside_prev=" << (link.rho_outside_prev ? "yes" : "no") << "\n";
            }
        } else {
            const pslat::InductionReport report = pslat::merge_reports(
                pslat::replay_state_induction(max_n), pslat::replay_witness_induction(max_n));
            all_ok = report.all_ok();
            for (long n = 0; n <= max_n; ++n)
                std::cout << "n=" << n << " state=certified witness=certified"
                          << (n < max_n
                                  ? " pairing=" + pslat::to_string(report.pairing_values[n])
                                  : "")
                          << "\n";
        }
        std::cout << (all_ok ? "chain verified" : "chain verification FAILED") << "\n";
        return all_ok ? kOk : kOutside;
    }

    if (cmd_verify->parsed()) {
        if (max_n < 0) {
            std::cerr << "paper-verify: --max-n must be nonnegative\n";
            return kBadInput;
        }
        const pslat::InductionReport report = pslat::merge_reports(
            pslat::replay_state_induction(max_n), pslat::replay_witness_induction(max_n));
        emit_json(report.to_json(), output_path);
        return report.all_ok() ? kOk : kOutside;
    }

    if (cmd_convert->parsed()) {
        if (!state_text.empty()) {
            emit_json(pslat::xstate_from_spectrum(parse_state(state_text)).to_json(), output_path);
            return kOk;
        }
        if (!xstate_text.empty()) {
            const Vec8 p = pslat::spectrum_from_xstate(parse_xstate(xstate_text));
            emit_json(pslat::vec8_to_json(p), output_path);
            return kOk;
        }
        std::cerr << "convert: need --state or --xstate\n";
        return kBadInput;
    }

    return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pslat::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const pslat::ResourceExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const pslat::NegativeEntryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const pslat::NotGhzDiagonalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const pslat::NegativeIndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
