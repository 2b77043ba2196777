#pragma once

#include <string>
#include <vector>

#include "gsm/bigint.hpp"
#include "gsm/gsm_search.hpp"
#include "gsm/local_field.hpp"
#include "gsm/panayi.hpp"

namespace gsm {

/*
 * Job documents drive the command-line tool. A job is a JSON object with
 * a shared header (prime, precision, field presentation) and one payload
 * block named after the command. Integer coefficients may be written as
 * JSON numbers or as decimal strings; results always emit decimal strings
 * so values never hit the 53-bit double ceiling.
 */
struct JobFile {
    long version = 1;
    long p = 0;
    long precision = kDefaultPrecision;
    std::vector<BigInt> field_defining;
    std::vector<long> residue_modulus; // optional GF(p) modulus, constant first
    long e_hint = 0, f_hint = 0;       // optional declared structure

    std::string command; // "roots", "search" or "check"

    // roots payload
    std::vector<BigInt> target;
    long max_depth = -1;

    // search payload
    std::string generic_name;
    GenericPolynomial inline_generic;
    bool has_inline_generic = false;
    std::vector<BigInt> fixed_params;
    std::vector<std::vector<BigInt>> fixed_params_list;
    std::vector<BigInt> subfield_poly{0, 1};
    long digit_bound = 6;

    // check payload
    std::vector<BigInt> candidate;
};

JobFile parse_job(const std::string& text);
JobFile load_job_file(const std::string& path);

/*
 * A catalog is a JSON array of generic polynomials. Each entry carries
 * name, group, arity and a template: a list over x-degrees (constant
 * first) of nested integer lists, one nesting level per parameter, where
 * the index at level i is the exponent of parameter i.
 */
std::vector<GenericPolynomial> parse_catalog(const std::string& text);
std::vector<GenericPolynomial> load_catalog_file(const std::string& path);

// Builds the field described by the job header.
LocalField construct_field(const JobFile& job);

// Result documents. All three are deterministic renderings: keys are
// sorted, integers are decimal strings and no environment data (time,
// host, versions of anything) is included, so rerunning a job yields a
// byte-identical body.
std::string roots_result_json(const JobFile& job, const RootReport& report);
std::string search_result_json(
    const JobFile& job,
    const std::vector<std::pair<std::vector<BigInt>, SearchResult>>& runs);
std::string check_result_json(const JobFile& job, bool local_gsm);

} // namespace gsm
