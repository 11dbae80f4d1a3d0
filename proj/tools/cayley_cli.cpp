// Command-line front end. Talks to the library only through cayley.h.

#include "cayley/cayley.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

enum Exit { kOk = 0, kInternal = 1, kValidation = 2, kNotApplicable = 3, kUnrealizable = 4 };

int exit_for(cay_status s)
{
    switch (s) {
    case CAY_OK: return kOk;
    case CAY_NOT_APPLICABLE: return kNotApplicable;
    case CAY_UNREALIZABLE: return kUnrealizable;
    case CAY_INTERNAL: return kInternal;
    default: return kValidation;
    }
}

int report(cay_status s)
{
    std::cerr << "error: " << cay_last_error() << "\n";
    return exit_for(s);
}

struct LinkageDeleter {
    void operator()(cay_linkage* l) const { cay_linkage_free(l); }
};
using LinkagePtr = std::unique_ptr<cay_linkage, LinkageDeleter>;

struct StringDeleter {
    void operator()(char* s) const { cay_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int emit(const char* text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::fputs(text, stdout);
        return kOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kValidation;
    }
    return kOk;
}

int load(const std::string& path, LinkagePtr& out)
{
    cay_linkage* raw = nullptr;
    const cay_status s = cay_linkage_from_file(path.c_str(), &raw);
    if (s != CAY_OK) {
        return report(s);
    }
    out.reset(raw);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cayley configuration spaces of 1-dof Henneberg-I linkages"};
    app.require_subcommand(1);

    std::string path;
    std::string out_path;

    auto* check = app.add_subcommand("check", "Rigidity, Henneberg base edges, 1-path and triangle-free census");
    check->add_option("file", path, "Linkage JSON file")->required();

    std::string method = "extremes";
    double tol = 0.0;
    bool verify = false;
    auto* cspace = app.add_subcommand("cspace", "Configuration space of the base non-edge");
    cspace->add_option("file", path, "Linkage JSON file")->required();
    cspace->add_option("--method", method, "extremes, qdim or oracle")
        ->check(CLI::IsMember({"extremes", "qdim", "oracle"}));
    cspace->add_option("--tol", tol, "Absolute and collinearity tolerance");
    cspace->add_option("--out", out_path, "Write the result here instead of stdout");
    cspace->add_flag("--verify", verify, "Cross-check against the sampling oracle");

    std::size_t exhaustive = 0;
    bool all_base_edges = false;
    bool as_json = false;
    auto* classify = app.add_subcommand("classify", "Low sampling complexity");
    classify->add_option("file", path, "Linkage or graph JSON file");
    classify->add_option("--exhaustive", exhaustive, "Check every graph up to N vertices")
        ->check(CLI::Range(3, 9));
    classify->add_flag("--all-base-edges", all_base_edges, "Verdict for every base edge of G + f");
    classify->add_flag("--json", as_json, "JSON output for --exhaustive");
    classify->add_option("--out", out_path, "Write the report here instead of stdout");

    double dstar = 0.0;
    bool diagram = false;
    auto* render = app.add_subcommand("render", "SVG of a realization or of the interval diagram");
    render->add_option("file", path, "Linkage JSON file")->required();
    auto* dstar_opt = render->add_option("--dstar", dstar, "Length of the base non-edge");
    auto* diagram_opt = render->add_flag("--interval-diagram", diagram, "Number-line plot of the intervals");
    dstar_opt->excludes(diagram_opt);
    render->add_option("--out", out_path, "Write the SVG here instead of stdout");

    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 1401;
    auto* oracle = app.add_subcommand("oracle", "Brute-force realizability sweep");
    oracle->add_option("file", path, "Linkage JSON file")->required();
    oracle->add_option("--lo", lo, "Lower end of the sweep");
    oracle->add_option("--hi", hi, "Upper end of the sweep");
    oracle->add_option("--n", points, "Grid points");
    oracle->add_option("--out", out_path, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    LinkagePtr l;
    char* raw = nullptr;
    cay_status s = CAY_OK;

    if (check->parsed()) {
        if (int rc = load(path, l)) {
            return rc;
        }
        s = cay_check(l.get(), &raw);
    } else if (cspace->parsed()) {
        if (int rc = load(path, l)) {
            return rc;
        }
        cay_cspace_options opts;
        cay_cspace_options_init(&opts);
        opts.method = method == "qdim" ? CAY_METHOD_QDIM : method == "oracle" ? CAY_METHOD_ORACLE : CAY_METHOD_EXTREMES;
        opts.tol = tol;
        opts.verify = verify ? 1 : 0;
        s = cay_cspace(l.get(), &opts, &raw);
    } else if (classify->parsed()) {
        if (exhaustive > 0) {
            int agree = 0;
            s = cay_classify_exhaustive(exhaustive, as_json ? 1 : 0, &agree, &raw);
            if (s == CAY_OK) {
                OwnedString text(raw);
                return emit(text.get(), out_path);
            }
            return report(s);
        }
        if (path.empty()) {
            std::cerr << "error: classify needs a file or --exhaustive N\n";
            return kValidation;
        }
        if (int rc = load(path, l)) {
            return rc;
        }
        s = cay_classify(l.get(), all_base_edges ? 1 : 0, &raw);
    } else if (render->parsed()) {
        if (dstar_opt->count() == 0 && !diagram) {
            std::cerr << "error: render needs --dstar or --interval-diagram\n";
            return kValidation;
        }
        if (int rc = load(path, l)) {
            return rc;
        }
        s = diagram ? cay_render_intervals(l.get(), &raw) : cay_render_realization(l.get(), dstar, &raw);
    } else if (oracle->parsed()) {
        if (int rc = load(path, l)) {
            return rc;
        }
        s = cay_oracle_sweep(l.get(), lo, hi, points, &raw);
    }

    if (s != CAY_OK) {
        return report(s);
    }
    OwnedString text(raw);
    return emit(text.get(), out_path);
}
