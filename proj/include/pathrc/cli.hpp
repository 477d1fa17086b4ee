#pragma once

// Command-line front end: apply the bijection and its operators to serialized
// documents, render documents as text, enumerate the restricted
// configurations of a dominant weight, and run the verification suites.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pathrc/bijection.hpp"
#include "pathrc/io.hpp"
#include "pathrc/promotion.hpp"
#include "pathrc/verify.hpp"

namespace pathrc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_undefined = 3;
inline constexpr int exit_verification_failed = 4;

namespace detail {

/// Reads an operand: "-" is standard input, a token containing '{' is an
/// inline JSON document, anything else is a file name.
inline std::string read_operand(const std::string& spec, std::istream& in) {
    if (spec == "-") {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    if (spec.find('{') != std::string::npos) return spec;
    std::ifstream file(spec);
    if (!file) throw invalid_argument("cannot open input: " + spec);
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
}

inline const Path& as_path(const Document& d, const std::string& op) {
    if (const Path* p = std::get_if<Path>(&d)) return *p;
    throw invalid_argument(op + " expects a path document");
}

inline const RiggedConfiguration& as_rc(const Document& d, const std::string& op) {
    if (const RiggedConfiguration* rc = std::get_if<RiggedConfiguration>(&d)) return *rc;
    throw invalid_argument(op + " expects an rc document");
}

template <typename Int>
inline std::vector<Int> parse_int_list(const std::string& field, const std::string& what) {
    std::vector<Int> values;
    std::istringstream is(field);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            values.push_back(static_cast<Int>(std::stol(part)));
        } catch (const std::exception&) {
            throw invalid_argument("bad " + what + " entry: " + part);
        }
    }
    if (values.empty()) throw invalid_argument("empty " + what);
    return values;
}

}  // namespace detail

struct ComputeRequest {
    std::string op;
    std::string operand = "-";
    int index = 1;     ///< crystal operator level for f/e
    std::string perm;  ///< factor permutation for rmatrix, comma separated
};

/// Dispatches one operator application. Throws invalid_argument when the
/// document kind does not fit the operator and undefined_result (with a
/// machine-readable leading token) when the operator is undefined there.
inline Document apply_operator(const ComputeRequest& req, const Document& doc) {
    const std::string& op = req.op;
    if (op == "phi") return phi(detail::as_path(doc, op));
    if (op == "phi-inv") return phi_inv(detail::as_rc(doc, op));
    if (op == "pr") return pr(detail::as_path(doc, op));
    if (op == "prbar") return pr_bar(detail::as_rc(doc, op));
    if (op == "rho") {
        const auto slid = rho(detail::as_path(doc, op));
        if (!slid) throw undefined_result("not-in-dom-rho: the slide is undefined here");
        return *slid;
    }
    if (op == "rhobar") {
        const auto slid = rho_bar(detail::as_rc(doc, op));
        if (!slid) throw undefined_result("rhobar-not-well-defined: the slide is undefined here");
        return slid->rc;
    }
    if (op == "rmatrix")
        return r_matrix(detail::as_path(doc, op),
                        detail::parse_int_list<int>(req.perm, "permutation"));
    if (op == "rs") return rs(detail::as_path(doc, op));
    if (op == "lift") {
        if (const Path* p = std::get_if<Path>(&doc)) return lift(*p);
        return lift_bar(std::get<RiggedConfiguration>(doc));
    }
    if (op == "f" || op == "e") {
        const auto undefined = [&] {
            return undefined_result("crystal-operator-undefined: " + op + "_" +
                                    std::to_string(req.index) + " annihilates this element");
        };
        if (const Path* p = std::get_if<Path>(&doc)) {
            const auto moved = op == "f" ? f(*p, req.index) : e(*p, req.index);
            if (!moved) throw undefined();
            return *moved;
        }
        const RiggedConfiguration& rc = std::get<RiggedConfiguration>(doc);
        const auto moved = op == "f" ? f(rc, req.index) : e(rc, req.index);
        if (!moved) throw undefined();
        return *moved;
    }
    throw invalid_argument("unknown operator: " + op);
}

struct VerifyRequest {
    std::string suite = "default";  ///< "default" or "psi"
    int rank = 0;                   ///< 0 = every rank of the suite family
    long max_area = 0;              ///< 0 = no extra ceiling on shape areas
    int jobs = 1;                   ///< 0 = one thread per hardware core
    std::string mutate = "none";
    std::size_t max_discrepancies = 50;
};

inline std::vector<SuiteSpec> build_suites(const VerifyRequest& req) {
    std::vector<SuiteSpec> suites;
    if (req.suite == "default")
        suites = default_suites();
    else if (req.suite == "psi")
        suites = psi_suites();
    else
        throw invalid_argument("unknown suite: " + req.suite);
    if (req.rank > 0) {
        std::erase_if(suites, [&](const SuiteSpec& s) { return s.rank != req.rank; });
        if (suites.empty())
            throw invalid_argument("no suite at rank " + std::to_string(req.rank));
    }
    for (SuiteSpec& s : suites) {
        if (req.max_area > 0)
            std::erase_if(s.shapes, [&](const RectangleSeq& shape) {
                return total_area(shape) > req.max_area;
            });
        s.jobs = req.jobs;
        s.max_discrepancies = req.max_discrepancies;
        if (req.mutate == "tie-rule")
            s.slide.tie = TiePolicy::prefer_left;
        else if (req.mutate == "removal-cell")
            s.slide.remove_bottom_left = true;
        else if (req.mutate == "rhobar-selection")
            s.selection.pick_longest = true;
        else if (req.mutate != "none")
            throw invalid_argument("unknown mutation: " + req.mutate);
    }
    return suites;
}

inline Json report_to_json(const std::vector<SuiteSpec>& suites,
                           const std::vector<SuiteReport>& reports) {
    Json jsuites = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        Json js;
        js["rank"] = suites[i].rank;
        js["shapes"] = suites[i].shapes.size();
        js["paths"] = reports[i].paths_checked;
        Json checks = Json::array();
        for (const CheckReport& c : reports[i].checks) {
            Json jc;
            jc["name"] = c.name;
            jc["ok"] = c.discrepancies.empty();
            Json ds = Json::array();
            for (const Discrepancy& d : c.discrepancies)
                ds.push_back({{"check", d.check},
                              {"input", d.input},
                              {"expected", d.expected},
                              {"actual", d.actual}});
            jc["discrepancies"] = std::move(ds);
            ok = ok && c.discrepancies.empty();
            checks.push_back(std::move(jc));
        }
        js["checks"] = std::move(checks);
        jsuites.push_back(std::move(js));
    }
    Json j;
    j["suites"] = std::move(jsuites);
    j["ok"] = ok;
    return j;
}

inline void print_report_pretty(const std::vector<SuiteSpec>& suites,
                                const std::vector<SuiteReport>& reports, std::ostream& out) {
    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out << "suite rank=" << suites[i].rank << " shapes=" << suites[i].shapes.size()
            << " paths=" << reports[i].paths_checked << '\n';
        for (const CheckReport& c : reports[i].checks) {
            if (c.discrepancies.empty()) {
                out << "  " << c.name << ": pass\n";
                continue;
            }
            ok = false;
            out << "  " << c.name << ": FAIL (" << c.discrepancies.size() << " discrepancies)\n";
            for (const Discrepancy& d : c.discrepancies) {
                out << "    check:    " << d.check << '\n';
                out << "    input:    " << d.input << '\n';
                out << "    expected: " << d.expected << '\n';
                out << "    actual:   " << d.actual << '\n';
            }
        }
    }
    out << "verdict: " << (ok ? "PASS" : "FAIL") << '\n';
}

struct EnumerateRequest {
    int rank = 1;
    std::string shape;   ///< "2x2,1x1" header syntax
    std::string lambda;  ///< "3,1,0" comma-separated dominant weight
};

/// Runs the tool on already-split arguments (no program name). All output
/// goes to the given streams, so tests can drive it in process.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"crystal paths <-> rigged configurations toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output form for documents and reports")
        ->check(CLI::IsMember({"json", "pretty"}));

    ComputeRequest creq;
    CLI::App* compute = app.add_subcommand("compute", "apply an operator to one document");
    compute
        ->add_option("op", creq.op, "operator to apply")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "pr", "prbar", "rho", "rhobar", "rmatrix", "rs",
                               "lift", "f", "e"}));
    compute->add_option("input", creq.operand, "file, inline JSON, or - for stdin");
    compute->add_option("--index", creq.index, "crystal operator level (f/e)");
    compute->add_option("--perm", creq.perm, "factor permutation for rmatrix, e.g. 2,1");

    std::string render_operand = "-";
    CLI::App* render = app.add_subcommand("render", "print a document in the partition layout");
    render->add_option("input", render_operand, "file, inline JSON, or - for stdin");

    EnumerateRequest ereq;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list the restricted configurations of a weight");
    enumerate->add_option("--rank", ereq.rank, "rank n")->required();
    enumerate->add_option("shape", ereq.shape, "rectangle sequence, e.g. 2x2,1x1")->required();
    enumerate->add_option("lambda", ereq.lambda, "dominant weight, e.g. 3,1,0")->required();

    VerifyRequest vreq;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", vreq.suite, "suite family")
        ->check(CLI::IsMember({"default", "psi"}));
    verify->add_option("--rank", vreq.rank, "restrict to one rank");
    verify->add_option("--max-area", vreq.max_area, "drop shapes above this total area");
    verify->add_option("--jobs", vreq.jobs, "worker threads (0 = hardware cores)");
    verify->add_option("--mutate", vreq.mutate, "fault injection for sensitivity runs")
        ->check(CLI::IsMember({"none", "tie-rule", "removal-cell", "rhobar-selection"}));
    verify->add_option("--max-discrepancies", vreq.max_discrepancies,
                       "cap on reported discrepancies per check");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }

    const bool pretty = format == "pretty";
    try {
        if (app.got_subcommand(compute)) {
            const Document doc = parse_document(detail::read_operand(creq.operand, in));
            const Document result = apply_operator(creq, doc);
            if (pretty)
                out << render_pretty(result);
            else
                out << print_document(result) << '\n';
        } else if (app.got_subcommand(render)) {
            const Document doc = parse_document(detail::read_operand(render_operand, in));
            out << render_pretty(doc);
        } else if (app.got_subcommand(enumerate)) {
            const RectangleSeq shape = pathrc::detail::shape_from_header(ereq.shape);
            const std::vector<long> lambda = detail::parse_int_list<long>(ereq.lambda, "weight");
            for (const RiggedConfiguration& rc :
                 enumerate_configurations(ereq.rank, shape, lambda)) {
                if (pretty)
                    out << render_pretty(rc);
                else
                    out << print_document(Document{rc}) << '\n';
            }
        } else if (app.got_subcommand(verify)) {
            const std::vector<SuiteSpec> suites = build_suites(vreq);
            std::vector<SuiteReport> reports;
            reports.reserve(suites.size());
            for (const SuiteSpec& s : suites) reports.push_back(run_suite(s));
            bool ok = true;
            for (const SuiteReport& r : reports) ok = ok && r.ok();
            if (pretty)
                print_report_pretty(suites, reports, out);
            else
                out << report_to_json(suites, reports).dump() << '\n';
            return ok ? exit_ok : exit_verification_failed;
        }
    } catch (const undefined_result& e) {
        err << "undefined: " << e.what() << '\n';
        return exit_undefined;
    } catch (const invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "internal: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

/// argv adapter for the installed binary.
inline int run_main(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}

}  // namespace pathrc::cli
