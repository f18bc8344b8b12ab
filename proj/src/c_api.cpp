#include "tropres.h"

#include "tropres/commands.hpp"
#include "tropres/error.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct tr_context {
    std::string last_error;
};

namespace {

tr_status status_of(tropres::ErrorCode c) {
    using tropres::ErrorCode;
    switch (c) {
        case ErrorCode::InvalidInput: return TR_ERR_INVALID_INPUT;
        case ErrorCode::DegenerateConfig: return TR_ERR_DEGENERATE_CONFIG;
        case ErrorCode::EmptyCone: return TR_ERR_EMPTY_CONE;
        case ErrorCode::EmptyFactor: return TR_ERR_EMPTY_FACTOR;
        case ErrorCode::NotAFan: return TR_ERR_NOT_A_FAN;
        case ErrorCode::NotATriangulation: return TR_ERR_NOT_A_TRIANGULATION;
        case ErrorCode::NoSuchVector: return TR_ERR_NO_SUCH_VECTOR;
        case ErrorCode::EmptySpecializedResultant: return TR_ERR_EMPTY_SPECIALIZED_RESULTANT;
        case ErrorCode::NotInSubspace: return TR_ERR_NOT_IN_SUBSPACE;
        case ErrorCode::NotARidge: return TR_ERR_NOT_A_RIDGE;
        case ErrorCode::PointOnHypersurface: return TR_ERR_POINT_ON_HYPERSURFACE;
        case ErrorCode::InconsistentCycle: return TR_ERR_INCONSISTENT_CYCLE;
        case ErrorCode::Internal: return TR_ERR_INTERNAL;
    }
    return TR_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tr_status fail(tr_context* ctx, tr_status st, const std::string& msg, char** output) {
    ctx->last_error = msg;
    tropres::Json err{{"error", {{"code", tr_status_name(st)}, {"message", msg}}}};
    *output = copy_string(err.dump());
    return st;
}

}  // namespace

extern "C" {

tr_context* tr_context_new(void) { return new (std::nothrow) tr_context(); }

void tr_context_free(tr_context* ctx) { delete ctx; }

tr_status tr_run(tr_context* ctx, const char* command, const char* input, const char* options_json,
                 char** output) {
    if (!ctx || !output) return TR_ERR_USAGE;
    *output = nullptr;
    if (!command || !input) return fail(ctx, TR_ERR_USAGE, "command and input are required", output);
    try {
        tropres::Json oj = options_json ? tropres::Json::parse(options_json) : tropres::Json();
        auto opts = tropres::options_from_json(oj);
        auto in = tropres::parse_input(input, opts);
        auto out = tropres::run_command(command, in, opts);
        ctx->last_error.clear();
        *output = copy_string(out.dump());
        return *output ? TR_OK : fail(ctx, TR_ERR_INTERNAL, "out of memory", output);
    } catch (const tropres::UsageError& e) {
        return fail(ctx, TR_ERR_USAGE, e.what(), output);
    } catch (const tropres::Json::parse_error& e) {
        return fail(ctx, TR_ERR_USAGE, std::string("malformed options: ") + e.what(), output);
    } catch (const tropres::Error& e) {
        return fail(ctx, status_of(e.code()), e.what(), output);
    } catch (const std::exception& e) {
        return fail(ctx, TR_ERR_INTERNAL, e.what(), output);
    }
}

void tr_string_free(char* s) { std::free(s); }

const char* tr_last_error_message(const tr_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* tr_status_name(tr_status status) {
    switch (status) {
        case TR_OK: return "OK";
        case TR_ERR_USAGE: return "Usage";
        case TR_ERR_INVALID_INPUT: return "InvalidInput";
        case TR_ERR_DEGENERATE_CONFIG: return "DegenerateConfig";
        case TR_ERR_EMPTY_CONE: return "EmptyCone";
        case TR_ERR_EMPTY_FACTOR: return "EmptyFactor";
        case TR_ERR_NOT_A_FAN: return "NotAFan";
        case TR_ERR_NOT_A_TRIANGULATION: return "NotATriangulation";
        case TR_ERR_NO_SUCH_VECTOR: return "NoSuchVector";
        case TR_ERR_EMPTY_SPECIALIZED_RESULTANT: return "EmptySpecializedResultant";
        case TR_ERR_NOT_IN_SUBSPACE: return "NotInSubspace";
        case TR_ERR_NOT_A_RIDGE: return "NotARidge";
        case TR_ERR_POINT_ON_HYPERSURFACE: return "PointOnHypersurface";
        case TR_ERR_INCONSISTENT_CYCLE: return "InconsistentCycle";
        case TR_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

int tr_command_count(void) { return static_cast<int>(tropres::command_names().size()); }

const char* tr_command_name(int i) {
    const auto& names = tropres::command_names();
    if (i < 0 || static_cast<std::size_t>(i) >= names.size()) return nullptr;
    return names[static_cast<std::size_t>(i)].c_str();
}

}
