#include "cayley/cayley.h"

#include "cayley/error.hpp"
#include "cayley/io.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct cay_linkage {
    cayley::io::LinkageFile file;
};

namespace {

thread_local std::string last_error;

cay_status fail(cay_status s, const std::string& msg)
{
    last_error = std::string(cay_status_name(s)) + ": " + msg;
    return s;
}

cay_status from_code(cayley::ErrorCode c)
{
    return static_cast<cay_status>(static_cast<int>(c) + 1);
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) {
        throw std::bad_alloc();
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
cay_status guarded(F&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const cayley::Error& e) {
        last_error = e.what();
        return from_code(e.code());
    } catch (const std::bad_alloc&) {
        return fail(CAY_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CAY_INTERNAL, std::string(e.what()));
    } catch (...) {
        return fail(CAY_INTERNAL, "unknown failure");
    }
}

} // namespace

extern "C" {

void cay_cspace_options_init(cay_cspace_options* opts)
{
    if (opts) {
        opts->method = CAY_METHOD_EXTREMES;
        opts->tol = 0.0;
        opts->verify = 0;
    }
}

cay_status cay_linkage_from_json(const char* json, cay_linkage** out)
{
    if (!json || !out) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] {
        auto* l = new cay_linkage{cayley::io::parse_linkage_file(json)};
        *out = l;
        return CAY_OK;
    });
}

cay_status cay_linkage_from_file(const char* path, cay_linkage** out)
{
    if (!path || !out) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return fail(CAY_IO_ERROR, std::string("cannot open ") + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return cay_linkage_from_json(text.str().c_str(), out);
}

void cay_linkage_free(cay_linkage* l)
{
    delete l;
}

cay_status cay_check(const cay_linkage* l, char** out_json)
{
    if (!l || !out_json) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out_json = dup(cayley::io::check_report(l->file));
        return CAY_OK;
    });
}

cay_status cay_cspace(const cay_linkage* l, const cay_cspace_options* opts, char** out_json)
{
    if (!l || !out_json) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    *out_json = nullptr;
    cay_cspace_options o;
    cay_cspace_options_init(&o);
    if (opts) {
        o = *opts;
    }
    cayley::io::CspaceRequest req;
    switch (o.method) {
    case CAY_METHOD_EXTREMES: req.method = "extremes"; break;
    case CAY_METHOD_QDIM: req.method = "qdim"; break;
    case CAY_METHOD_ORACLE: req.method = "oracle"; break;
    default: return fail(CAY_INVALID_ARGUMENT, "unknown method");
    }
    if (o.tol > 0.0) {
        req.tol.abs_tol = o.tol;
        req.tol.collinearity_tol = o.tol;
    }
    req.verify = o.verify != 0;
    return guarded([&] {
        const auto doc = cayley::io::cspace_result(l->file, req);
        if (!doc) {
            return fail(CAY_NOT_APPLICABLE, "qdim: graph is not triangle-free 1-path or the chain breaks");
        }
        *out_json = dup(*doc);
        return CAY_OK;
    });
}

cay_status cay_validate_result(const char* json)
{
    if (!json) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        cayley::io::validate_result(json);
        return CAY_OK;
    });
}

cay_status cay_classify(const cay_linkage* l, int all_base_edges, char** out_json)
{
    if (!l || !out_json) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out_json = dup(all_base_edges ? cayley::io::quantifier_report(l->file) : cayley::io::classify_report(l->file));
        return CAY_OK;
    });
}

cay_status cay_classify_exhaustive(size_t max_vertices, int as_json, int* all_agree, char** out)
{
    if (!out) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const auto s = cayley::io::classify_exhaustive(max_vertices);
        if (all_agree) {
            *all_agree = s.all_agree() ? 1 : 0;
        }
        *out = dup(as_json ? cayley::io::exhaustive_report(s) : cayley::io::exhaustive_table(s));
        return CAY_OK;
    });
}

cay_status cay_render_realization(const cay_linkage* l, double dstar, char** out_svg)
{
    if (!l || !out_svg) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    *out_svg = nullptr;
    return guarded([&] {
        const auto svg = cayley::io::render_realization(l->file, dstar);
        if (!svg) {
            return fail(CAY_UNREALIZABLE, "no realization at d* = " + cayley::io::format_double(dstar));
        }
        *out_svg = dup(*svg);
        return CAY_OK;
    });
}

cay_status cay_render_intervals(const cay_linkage* l, char** out_svg)
{
    if (!l || !out_svg) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out_svg = dup(cayley::io::render_intervals(l->file));
        return CAY_OK;
    });
}

cay_status cay_oracle_sweep(const cay_linkage* l, double lo, double hi, size_t n, char** out_json)
{
    if (!l || !out_json) {
        return fail(CAY_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out_json = dup(cayley::io::oracle_report(l->file, lo, hi, n));
        return CAY_OK;
    });
}

void cay_string_free(char* s)
{
    std::free(s);
}

const char* cay_last_error(void)
{
    return last_error.c_str();
}

const char* cay_status_name(cay_status s)
{
    switch (s) {
    case CAY_OK: return "Ok";
    case CAY_NOT_APPLICABLE: return "NotApplicable";
    case CAY_UNREALIZABLE: return "Unrealizable";
    case CAY_INVALID_ARGUMENT: return "InvalidArgument";
    case CAY_IO_ERROR: return "IoError";
    case CAY_INTERNAL: return "Internal";
    default: break;
    }
    if (s > CAY_OK && s <= CAY_SCHEMA_ERROR) {
        static thread_local std::string name;
        name = std::string(cayley::to_string(static_cast<cayley::ErrorCode>(static_cast<int>(s) - 1)));
        return name.c_str();
    }
    return "Unknown";
}

} // extern "C"
