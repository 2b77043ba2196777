#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gsm/gsm_search.hpp"
#include "gsm/jobfile.hpp"
#include "gsm/local_poly.hpp"
#include "gsm/panayi.hpp"

namespace {

// Exit codes: 0 success, 1 bad input, 2 inconclusive or bound hit,
// 3 precision or internal failure.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;
constexpr int kInternalError = 3;

struct Options {
    std::string job_path;
    std::string out_path;
    std::string catalog_path;
    long precision = 0; // 0 = keep the job's value
    long threads = 0;   // accepted for interface stability; runs are serial
};

void write_result(const Options& opt, const std::string& body) {
    if (opt.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw gsm::InvalidInput("cannot open output file: " + opt.out_path);
    out << body;
    if (!out) throw gsm::InvalidInput("cannot write output file: " + opt.out_path);
}

gsm::JobFile load_job(const Options& opt, const std::string& subcommand) {
    gsm::JobFile job = gsm::load_job_file(opt.job_path);
    if (job.command != subcommand)
        throw gsm::InvalidInput("job file has command \"" + job.command +
                                "\" but the \"" + subcommand +
                                "\" subcommand was invoked");
    if (opt.precision > 0) job.precision = opt.precision;
    return job;
}

// Inline template first, then the catalog, then the built-in families.
gsm::GenericPolynomial resolve_generic(const gsm::JobFile& job,
                                       const Options& opt) {
    if (job.has_inline_generic) return job.inline_generic;
    if (!opt.catalog_path.empty()) {
        for (const auto& g : gsm::load_catalog_file(opt.catalog_path))
            if (g.name == job.generic_name) return g;
    }
    return gsm::builtin_generic(job.generic_name);
}

int cmd_roots(const Options& opt) {
    gsm::JobFile job = load_job(opt, "roots");
    gsm::LocalField K = gsm::construct_field(job);
    gsm::PolyOverK phi = gsm::PolyOverK::from_integers(K, job.target);
    gsm::RootReport report = gsm::count_roots(phi, K, job.max_depth);
    write_result(opt, gsm::roots_result_json(job, report));
    return kOk;
}

int cmd_search(const Options& opt) {
    gsm::JobFile job = load_job(opt, "search");
    gsm::LocalField K = gsm::construct_field(job);
    gsm::GenericPolynomial generic = resolve_generic(job, opt);

    std::vector<std::vector<gsm::BigInt>> runs_params;
    if (!job.fixed_params_list.empty())
        runs_params = job.fixed_params_list;
    else
        runs_params.push_back(job.fixed_params);

    std::vector<std::pair<std::vector<gsm::BigInt>, gsm::SearchResult>> runs;
    bool exploded = false;
    for (const auto& fixed : runs_params) {
        gsm::SearchJob sj;
        sj.K = K;
        sj.F_poly = job.subfield_poly;
        sj.generic = generic;
        sj.fixed_params = fixed;
        sj.digit_bound = job.digit_bound;
        try {
            runs.emplace_back(fixed, gsm::search(sj));
        } catch (const gsm::FrontierExplosion& e) {
            // Keep what settled before the cap so the caller can inspect it.
            std::cerr << "gsmtool: " << e.what() << "\n";
            runs.emplace_back(fixed, e.partial());
            exploded = true;
            break;
        }
    }
    write_result(opt, gsm::search_result_json(job, runs));

    if (exploded) return kInconclusive;
    long root_found = 0, bound_hit = 0;
    for (const auto& [fixed, res] : runs) {
        root_found += res.root_found;
        bound_hit += res.bound_hit;
    }
    if (root_found == 0 && bound_hit > 0) return kInconclusive;
    return kOk;
}

int cmd_check(const Options& opt) {
    gsm::JobFile job = load_job(opt, "check");
    gsm::LocalField::Config cfg;
    cfg.e = job.e_hint;
    cfg.f = job.f_hint;
    cfg.residue_modulus = job.residue_modulus;
    bool ok = gsm::check_gsm_local(job.p, job.field_defining, job.candidate,
                                   job.precision, cfg);
    write_result(opt, gsm::check_result_json(job, ok));
    return kOk;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--job", opt.job_path, "Path to the JSON job file")
        ->required();
    sub->add_option("--out", opt.out_path,
                    "Write the result document here instead of stdout");
    sub->add_option("--precision", opt.precision,
                    "Override the job's p-adic working precision")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", opt.threads,
                    "Worker threads (accepted for compatibility; runs are "
                    "serial and deterministic)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--catalog", opt.catalog_path,
                    "JSON catalog of generic polynomials for name lookups");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root counting and Galois splitting model search over "
                 "p-adic fields"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* roots = app.add_subcommand(
        "roots", "Count the roots of an integer polynomial in the field");
    CLI::App* search = app.add_subcommand(
        "search", "Digit search for parameters specializing a generic "
                  "polynomial to a splitting model");
    CLI::App* check = app.add_subcommand(
        "check", "Decide whether a candidate polynomial defines the field");
    for (CLI::App* sub : {roots, search, check}) add_common(sub, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (roots->parsed()) return cmd_roots(opt);
        if (search->parsed()) return cmd_search(opt);
        return cmd_check(opt);
    } catch (const gsm::PrecisionExhausted& e) {
        std::cerr << "gsmtool: precision exhausted: " << e.what() << "\n";
        return kInternalError;
    } catch (const gsm::DepthExceeded& e) {
        std::cerr << "gsmtool: " << e.what() << "\n";
        return kInconclusive;
    } catch (const gsm::Inconclusive& e) {
        std::cerr << "gsmtool: " << e.what() << "\n";
        return kInconclusive;
    } catch (const gsm::Error& e) {
        std::cerr << "gsmtool: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "gsmtool: internal error: " << e.what() << "\n";
        return kInternalError;
    }
}
