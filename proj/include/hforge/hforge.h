/* C interface to the drawing toolkit. Every function returns HF_OK or an
 * HF_ERR_* code; on error hf_last_error() describes the failure for the
 * calling thread. Strings handed out here are heap copies: release them
 * with hf_string_free. Drawings are opaque handles released with
 * hf_drawing_free. */
#ifndef HFORGE_H
#define HFORGE_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  HF_OK = 0,
  HF_ERR_INVALID = 1,  /* bad parameters or unsupported input */
  HF_ERR_PARSE = 2,
  HF_ERR_IO = 3,
  HF_ERR_GEOMETRY = 4, /* defective drawing: identical curves, degenerate contact, ... */
  HF_ERR_LIMIT = 5,    /* search/node budget exhausted */
  HF_ERR_INTERNAL = 6
};

typedef struct hf_drawing hf_drawing;

const char* hf_last_error(void);
void hf_string_free(char* s);
void hf_drawing_free(hf_drawing* d);

/* Constructions. */
int hf_build_gnk(int n, int k, hf_drawing** out);
int hf_build_gnkt(int n, int k, int t, hf_drawing** out);
int hf_build_planar_tight(int n, hf_drawing** out);
int hf_build_spirals(int w_max, hf_drawing** out);

/* Serialization. */
int hf_drawing_parse(const char* json_text, hf_drawing** out);
int hf_drawing_json(const hf_drawing* d, char** out);

/* Reports. The verify report ends with a machine-readable summary row;
 * *passed is 1 only when every check succeeded. */
int hf_drawing_summary(const hf_drawing* d, char** out);
int hf_drawing_verify(const hf_drawing* d, char** report, int* passed);

/* Sequence encoding of an axis drawing, one line per edge. */
int hf_drawing_encode(const hf_drawing* d, char** out);

int hf_drawing_render_svg(const hf_drawing* d, int samples, char** out);

/* Largest pairwise-compatible sequence family. budget 0 means the default
 * node budget. *exact is 0 when the budget ran out; the summary and
 * witness then describe the best family found (a lower bound). */
int hf_max_family(int n, int k, unsigned long long budget, char** summary, char** witness,
                  int* exact);

/* Bound table at (n, k); pass m (decimal integer text) to include the
 * crossing scale terms, or NULL for edge bounds only. */
int hf_bounds_table(int n, int k, const char* m, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HFORGE_H */
