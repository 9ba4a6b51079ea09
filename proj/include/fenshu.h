/* fenshu: codec and exact arithmetic for Qin-Han numeral and fraction
 * expressions. C interface of the shared library; all functions return a
 * status code, results come back as malloc'd UTF-8 strings released with
 * fen_string_free. Handles are opaque; a context is not thread-safe, use
 * one per thread. */

#ifndef FENSHU_H
#define FENSHU_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fen_ctx fen_ctx;
typedef struct fen_quantity fen_quantity;
typedef struct fen_corpus fen_corpus;

typedef enum {
    FEN_OK = 0,
    FEN_ERR_PARSE = 1,  /* malformed numeral or quantity text */
    FEN_ERR_DOMAIN = 2, /* improper value, unsupported form combination */
    FEN_ERR_UNIT = 3,   /* unknown unit, dimension mismatch */
    FEN_ERR_IO = 4,     /* file not readable */
    FEN_ERR_ARG = 5     /* null pointer or bad option string */
} fen_status;

/* ---- context ---------------------------------------------------------- */

fen_ctx* fen_ctx_new(void);
void fen_ctx_free(fen_ctx* ctx);

/* Message describing the last failure on this context. */
const char* fen_last_error(const fen_ctx* ctx);

/* Replace the builtin unit table (glyph, pinyin, dimension, ratio
 * numerator, ratio denominator, manuscript glyph, aliases; tab
 * separated). */
fen_status fen_ctx_load_units(fen_ctx* ctx, const char* path);

/* manuscript = 1 renders tens ligatures and the linker 有; 0 renders plain
 * two-character tens and 又. Default manuscript. */
fen_status fen_ctx_set_ligatures(fen_ctx* ctx, int manuscript);

/* Codepoint standing in for the 70-ligature (UTF-8, one glyph). */
fen_status fen_ctx_set_seventy(fen_ctx* ctx, const char* glyph);

/* Resolve the ambiguous 石: "capacity" or "weight", or "" to return to
 * noun-based resolution. */
fen_status fen_ctx_set_shi_dimension(fen_ctx* ctx, const char* dimension);

void fen_string_free(char* s);

/* ---- text and integers ------------------------------------------------- */

/* Variant glyphs to plain forms, ligatures to two-character tens. */
fen_status fen_normalize(fen_ctx* ctx, const char* text, char** out);

/* decimal holds the value in ASCII digits, 1..10000000. */
fen_status fen_render_integer(fen_ctx* ctx, const char* decimal, char** out);
fen_status fen_parse_integer(fen_ctx* ctx, const char* text, char** decimal_out);

/* ---- quantities --------------------------------------------------------- */

fen_status fen_parse_quantity(fen_ctx* ctx, const char* text, fen_quantity** out);

/* Compact spec: "n:金;i:3:zhu;f:5/9:zhu:B;y:1". Units by pinyin. */
fen_status fen_quantity_from_spec(fen_ctx* ctx, const char* spec, fen_quantity** out);
void fen_quantity_free(fen_quantity* q);

fen_status fen_quantity_spec(fen_ctx* ctx, const fen_quantity* q, char** out);

/* Structured view: noun, parts, fraction, exact magnitude (plain and
 * reduced), pattern category, flags. */
fen_status fen_quantity_json(fen_ctx* ctx, const fen_quantity* q, char** out);

/* form: "" keeps the quantity's own pattern, "auto" selects one, or one of
 * mono|a|b|c|d|half|third|two_thirds. zhi/you: "auto", "force",
 * "suppress". insertion (for auto form): "u", "p", "o". */
fen_status fen_render_quantity(fen_ctx* ctx, const fen_quantity* q, const char* form,
                               const char* zhi, const char* you, const char* insertion,
                               char** out);

/* Category name (mono, a1..d2, half, third, two_thirds) for one
 * expression. */
fen_status fen_classify(fen_ctx* ctx, const char* text, char** out);

/* ---- arithmetic and metrology ------------------------------------------ */

/* "162/2016" -> "9/112". */
fen_status fen_reduce(fen_ctx* ctx, const char* fraction, char** out);

/* value "1/5" (or "3" or "4147 1/5"), units by pinyin or glyph. */
fen_status fen_convert(fen_ctx* ctx, const char* value, const char* from_unit,
                       const char* to_unit, char** out);

/* ---- corpus ------------------------------------------------------------- */

fen_status fen_corpus_load(fen_ctx* ctx, const char* corpus_path,
                           const char* statements_path, fen_corpus** out);
void fen_corpus_free(fen_corpus* c);

/* Distribution tables, exact rates and the discrepancy list. */
fen_status fen_corpus_stats(fen_ctx* ctx, const fen_corpus* c, int as_json, char** out);

/* Round trip, series resolution and statement checks; *failures receives
 * the number of failed checks. */
fen_status fen_corpus_verify(fen_ctx* ctx, const fen_corpus* c, int as_json, char** out,
                             int* failures);

#ifdef __cplusplus
}
#endif

#endif
