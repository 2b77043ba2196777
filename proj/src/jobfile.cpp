#include "gsm/jobfile.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace gsm {

namespace {

using njson = nlohmann::json; // std::map keys, so dumps sort alphabetically

BigInt get_big(const njson& v, const std::string& where) {
    if (v.is_string()) return parse_decimal(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number())
        throw InvalidInput(where + ": expected an integer, got a float");
    throw InvalidInput(where +
                       ": expected an integer or a decimal string, got " +
                       std::string(v.type_name()));
}

long get_long(const njson& v, const std::string& where) {
    BigInt b = get_big(v, where);
    if (!b.fits_slong_p())
        throw InvalidInput(where + ": value out of range: " + b.get_str());
    return b.get_si();
}

std::vector<BigInt> big_list(const njson& v, const std::string& where) {
    if (!v.is_array()) throw InvalidInput(where + ": expected a list");
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(get_big(e, where));
    return out;
}

std::vector<long> long_list(const njson& v, const std::string& where) {
    if (!v.is_array()) throw InvalidInput(where + ": expected a list");
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(get_long(e, where));
    return out;
}

void check_keys(const njson& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw InvalidInput(where + ": unknown key \"" + item.key() + "\"");
}

const njson* find(const njson& obj, const std::string& key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

long opt_long(const njson& obj, const std::string& key, long dflt,
              const std::string& where) {
    const njson* v = find(obj, key);
    return v ? get_long(*v, where + "." + key) : dflt;
}

// One template entry: nested lists, one level per parameter, index at
// level k = exponent of parameter k, integer leaves. Zero leaves drop out.
void walk_template(const njson& node, long level, long arity,
                   std::vector<long>& path, std::vector<ParamTerm>& out,
                   const std::string& where) {
    if (level == arity) {
        BigInt c = get_big(node, where);
        if (c != 0) out.push_back(ParamTerm{path, c});
        return;
    }
    if (!node.is_array())
        throw InvalidInput(where + ": nesting shallower than the arity");
    for (std::size_t i = 0; i < node.size(); ++i) {
        path.push_back(static_cast<long>(i));
        walk_template(node[i], level + 1, arity, path, out, where);
        path.pop_back();
    }
}

GenericPolynomial parse_generic(const njson& obj, const std::string& where) {
    if (!obj.is_object())
        throw InvalidInput(where + ": expected an object");
    check_keys(obj, {"name", "group", "arity", "template"}, where);
    GenericPolynomial g;
    const njson* name = find(obj, "name");
    if (!name || !name->is_string() || name->get<std::string>().empty())
        throw InvalidInput(where + ": missing or empty \"name\"");
    g.name = name->get<std::string>();
    if (const njson* group = find(obj, "group")) {
        if (!group->is_string())
            throw InvalidInput(where + ": \"group\" must be a string");
        g.group = group->get<std::string>();
    }
    const njson* ar = find(obj, "arity");
    if (!ar) throw InvalidInput(where + ": missing \"arity\"");
    g.arity = get_long(*ar, where + ".arity");
    if (g.arity < 0) throw InvalidInput(where + ": negative arity");
    const njson* tmpl = find(obj, "template");
    if (!tmpl || !tmpl->is_array())
        throw InvalidInput(where + ": missing or non-list \"template\"");
    if (tmpl->size() < 2)
        throw InvalidInput(where + ": template needs degree at least 1");
    for (std::size_t i = 0; i < tmpl->size(); ++i) {
        std::vector<ParamTerm> terms;
        std::vector<long> path;
        std::ostringstream ctx;
        ctx << where << ".template[" << i << "]";
        walk_template((*tmpl)[i], 0, g.arity, path, terms, ctx.str());
        g.coeffs.push_back(std::move(terms));
    }
    return g;
}

njson render_big_list(const std::vector<BigInt>& v) {
    njson out = njson::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

// Inverse of walk_template: rebuild the nested-list form from the terms.
njson render_template_level(const std::vector<ParamTerm>& terms, long level,
                            long arity) {
    if (level == arity) {
        BigInt c = 0;
        for (const auto& t : terms) c += t.coefficient;
        return njson(c.get_str());
    }
    long width = 1;
    for (const auto& t : terms)
        width = std::max(width, t.exponents[level] + 1);
    njson out = njson::array();
    for (long i = 0; i < width; ++i) {
        std::vector<ParamTerm> sub;
        for (const auto& t : terms)
            if (t.exponents[level] == i) sub.push_back(t);
        out.push_back(render_template_level(sub, level + 1, arity));
    }
    return out;
}

njson render_generic(const GenericPolynomial& g) {
    njson tmpl = njson::array();
    for (const auto& terms : g.coeffs)
        tmpl.push_back(render_template_level(terms, 0, g.arity));
    njson out;
    out["name"] = g.name;
    out["group"] = g.group;
    out["arity"] = g.arity;
    out["template"] = tmpl;
    return out;
}

njson job_json(const JobFile& job) {
    njson field;
    field["defining"] = render_big_list(job.field_defining);
    if (!job.residue_modulus.empty())
        field["residue_modulus"] = job.residue_modulus;
    if (job.e_hint != 0 || job.f_hint != 0)
        field["e_f_hint"] = njson::array({job.e_hint, job.f_hint});

    njson out;
    out["version"] = job.version;
    out["p"] = job.p;
    out["precision"] = job.precision;
    out["field"] = field;
    out["command"] = job.command;
    if (job.command == "roots") {
        njson r;
        r["target"] = render_big_list(job.target);
        if (job.max_depth >= 0) r["max_depth"] = job.max_depth;
        out["roots"] = r;
    } else if (job.command == "search") {
        njson s;
        if (job.has_inline_generic)
            s["generic"] = render_generic(job.inline_generic);
        else
            s["generic"] = job.generic_name;
        if (!job.fixed_params_list.empty()) {
            njson lists = njson::array();
            for (const auto& fp : job.fixed_params_list)
                lists.push_back(render_big_list(fp));
            s["fixed_params_list"] = lists;
        } else {
            s["fixed_params"] = render_big_list(job.fixed_params);
        }
        s["subfield"] = render_big_list(job.subfield_poly);
        s["digit_bound"] = job.digit_bound;
        out["search"] = s;
    } else {
        njson c;
        c["candidate"] = render_big_list(job.candidate);
        out["check"] = c;
    }
    return out;
}

njson parse_text(const std::string& text, const std::string& what) {
    try {
        return njson::parse(text);
    } catch (const njson::exception& e) {
        throw InvalidInput(what + ": " + e.what());
    }
}

} // namespace

JobFile parse_job(const std::string& text) {
    njson j = parse_text(text, "job file");
    if (!j.is_object()) throw InvalidInput("job file: expected a JSON object");
    check_keys(j, {"version", "p", "precision", "field", "command", "roots",
                   "search", "check"},
               "job");

    JobFile job;
    job.version = opt_long(j, "version", 1, "job");
    if (job.version != 1)
        throw InvalidInput("job: unsupported version " +
                           std::to_string(job.version));
    const njson* p = find(j, "p");
    if (!p) throw InvalidInput("job: missing \"p\"");
    job.p = get_long(*p, "job.p");
    job.precision = opt_long(j, "precision", kDefaultPrecision, "job");
    if (job.precision < 1) throw InvalidInput("job: precision must be >= 1");

    const njson* field = find(j, "field");
    if (!field || !field->is_object())
        throw InvalidInput("job: missing \"field\" object");
    check_keys(*field, {"defining", "residue_modulus", "e_f_hint"},
               "job.field");
    const njson* defining = find(*field, "defining");
    if (!defining) throw InvalidInput("job.field: missing \"defining\"");
    job.field_defining = big_list(*defining, "job.field.defining");
    if (const njson* rm = find(*field, "residue_modulus"))
        job.residue_modulus = long_list(*rm, "job.field.residue_modulus");
    if (const njson* ef = find(*field, "e_f_hint")) {
        std::vector<long> pair = long_list(*ef, "job.field.e_f_hint");
        if (pair.size() != 2)
            throw InvalidInput("job.field.e_f_hint: expected [e, f]");
        job.e_hint = pair[0];
        job.f_hint = pair[1];
    }

    const njson* cmd = find(j, "command");
    if (!cmd || !cmd->is_string())
        throw InvalidInput("job: missing \"command\" string");
    job.command = cmd->get<std::string>();
    if (job.command != "roots" && job.command != "search" &&
        job.command != "check")
        throw InvalidInput("job: unknown command \"" + job.command + "\"");
    for (const char* name : {"roots", "search", "check"})
        if (find(j, name) && job.command != name)
            throw InvalidInput("job: payload block \"" + std::string(name) +
                               "\" does not match the command");
    const njson* payload = find(j, job.command);
    if (!payload || !payload->is_object())
        throw InvalidInput("job: missing \"" + job.command +
                           "\" payload object");

    if (job.command == "roots") {
        check_keys(*payload, {"target", "max_depth"}, "job.roots");
        const njson* target = find(*payload, "target");
        if (!target) throw InvalidInput("job.roots: missing \"target\"");
        job.target = big_list(*target, "job.roots.target");
        job.max_depth = opt_long(*payload, "max_depth", -1, "job.roots");
        if (job.max_depth < -1)
            throw InvalidInput("job.roots: max_depth must be >= -1");
    } else if (job.command == "search") {
        check_keys(*payload,
                   {"generic", "fixed_params", "fixed_params_list", "subfield",
                    "digit_bound"},
                   "job.search");
        const njson* generic = find(*payload, "generic");
        if (!generic) throw InvalidInput("job.search: missing \"generic\"");
        if (generic->is_string()) {
            job.generic_name = generic->get<std::string>();
            if (job.generic_name.empty())
                throw InvalidInput("job.search: empty generic name");
        } else {
            job.inline_generic = parse_generic(*generic, "job.search.generic");
            job.has_inline_generic = true;
        }
        const njson* fp = find(*payload, "fixed_params");
        const njson* fpl = find(*payload, "fixed_params_list");
        if (fp && fpl)
            throw InvalidInput("job.search: fixed_params and "
                               "fixed_params_list are mutually exclusive");
        if (fp) job.fixed_params = big_list(*fp, "job.search.fixed_params");
        if (fpl) {
            if (!fpl->is_array() || fpl->empty())
                throw InvalidInput(
                    "job.search.fixed_params_list: expected a non-empty list");
            for (const auto& e : *fpl)
                job.fixed_params_list.push_back(
                    big_list(e, "job.search.fixed_params_list"));
        }
        if (const njson* sub = find(*payload, "subfield"))
            job.subfield_poly = big_list(*sub, "job.search.subfield");
        job.digit_bound = opt_long(*payload, "digit_bound", 6, "job.search");
        if (job.digit_bound < 0)
            throw InvalidInput("job.search: digit_bound must be >= 0");
    } else {
        check_keys(*payload, {"candidate"}, "job.check");
        const njson* cand = find(*payload, "candidate");
        if (!cand) throw InvalidInput("job.check: missing \"candidate\"");
        job.candidate = big_list(*cand, "job.check.candidate");
    }
    return job;
}

JobFile load_job_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open job file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_job(buf.str());
}

std::vector<GenericPolynomial> parse_catalog(const std::string& text) {
    njson j = parse_text(text, "catalog");
    if (!j.is_array()) throw InvalidInput("catalog: expected a JSON list");
    std::vector<GenericPolynomial> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::ostringstream ctx;
        ctx << "catalog[" << i << "]";
        GenericPolynomial g = parse_generic(j[i], ctx.str());
        if (!seen.insert(g.name).second)
            throw InvalidInput("catalog: duplicate name \"" + g.name + "\"");
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GenericPolynomial> load_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

LocalField construct_field(const JobFile& job) {
    LocalField::Config cfg;
    cfg.e = job.e_hint;
    cfg.f = job.f_hint;
    cfg.residue_modulus = job.residue_modulus;
    return LocalField::construct(job.p, job.field_defining, job.precision,
                                 cfg);
}

std::string roots_result_json(const JobFile& job, const RootReport& report) {
    njson out;
    out["version"] = 1;
    out["command"] = "roots";
    out["job"] = job_json(job);
    out["count"] = report.count;
    njson roots = njson::array();
    for (const auto& r : report.approximations) {
        njson e;
        e["digit_indices"] = r.digit_indices;
        e["digits"] = r.digits;
        e["residual_valuation"] = r.residual_valuation;
        roots.push_back(e);
    }
    out["roots"] = roots;
    return out.dump(2) + "\n";
}

std::string search_result_json(
    const JobFile& job,
    const std::vector<std::pair<std::vector<BigInt>, SearchResult>>& runs) {
    njson out;
    out["version"] = 1;
    out["command"] = "search";
    out["job"] = job_json(job);
    njson rr = njson::array();
    for (const auto& [fixed, res] : runs) {
        njson run;
        run["fixed_params"] = render_big_list(fixed);
        run["root_found"] = res.root_found;
        run["dead"] = res.dead;
        run["bound_hit"] = res.bound_hit;
        njson bs = njson::array();
        for (const auto& b : res.branches) {
            njson e;
            e["status"] = b.status;
            e["digit_indices"] = b.digit_indices;
            e["digits"] = b.digits;
            if (b.status == "root-found") {
                e["verified_roots"] = b.verified_roots;
                if (b.t_star) e["t_star"] = b.t_star->str();
                if (b.global_parameter)
                    e["global"] = b.global_parameter->get_str();
                if (!b.specialized.empty())
                    e["specialized"] = render_big_list(b.specialized);
            }
            bs.push_back(e);
        }
        run["branches"] = bs;
        rr.push_back(run);
    }
    out["runs"] = rr;
    return out.dump(2) + "\n";
}

std::string check_result_json(const JobFile& job, bool local_gsm) {
    njson out;
    out["version"] = 1;
    out["command"] = "check";
    out["job"] = job_json(job);
    out["local_gsm"] = local_gsm;
    return out.dump(2) + "\n";
}

} // namespace gsm
