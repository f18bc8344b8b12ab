#ifndef TROPRES_H
#define TROPRES_H

#if defined(__GNUC__)
#define TR_API __attribute__((visibility("default")))
#else
#define TR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tr_status {
    TR_OK = 0,
    TR_ERR_USAGE,
    TR_ERR_INVALID_INPUT,
    TR_ERR_DEGENERATE_CONFIG,
    TR_ERR_EMPTY_CONE,
    TR_ERR_EMPTY_FACTOR,
    TR_ERR_NOT_A_FAN,
    TR_ERR_NOT_A_TRIANGULATION,
    TR_ERR_NO_SUCH_VECTOR,
    TR_ERR_EMPTY_SPECIALIZED_RESULTANT,
    TR_ERR_NOT_IN_SUBSPACE,
    TR_ERR_NOT_A_RIDGE,
    TR_ERR_POINT_ON_HYPERSURFACE,
    TR_ERR_INCONSISTENT_CYCLE,
    TR_ERR_INTERNAL
} tr_status;

typedef struct tr_context tr_context;

TR_API tr_context* tr_context_new(void);
TR_API void tr_context_free(tr_context* ctx);

/* Runs a command on an input document. options_json may be NULL.
   On TR_OK *output receives the result document; on a domain error it
   receives {"error": {"code": ..., "message": ...}}. Free it with
   tr_string_free. */
TR_API tr_status tr_run(tr_context* ctx, const char* command, const char* input, const char* options_json,
                 char** output);

TR_API void tr_string_free(char* s);

/* Message of the last failed tr_run on ctx; empty after success. */
TR_API const char* tr_last_error_message(const tr_context* ctx);

TR_API const char* tr_status_name(tr_status status);

TR_API int tr_command_count(void);
TR_API const char* tr_command_name(int i);

#ifdef __cplusplus
}
#endif

#endif
