/* qring: representation rings of acyclic quivers, C interface.
 *
 * All functions report failure through a qr_status; the message of the most
 * recent failure on the calling thread is available from qr_last_error().
 * Strings returned through char** are allocated by the library and must be
 * released with qr_string_free(). Handles are immutable after creation and
 * may be shared between threads.
 */
#ifndef QRING_QRING_H_
#define QRING_QRING_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QRING_BUILDING)
#define QR_API __attribute__((visibility("default")))
#else
#define QR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qr_status {
  QR_OK           = 0,
  QR_ERR_INPUT    = 2, /* malformed or invalid input */
  QR_ERR_CAP      = 3, /* enumeration cap or integer range exceeded */
  QR_ERR_INTERNAL = 4  /* an internal consistency check failed */
} qr_status;

typedef enum qr_format { QR_FORMAT_TEXT = 0, QR_FORMAT_JSON = 1 } qr_format;

typedef struct qr_quiver qr_quiver;
typedef struct qr_pie    qr_pie;

QR_API const char* qr_version(void);
QR_API const char* qr_last_error(void);
QR_API void        qr_string_free(char* s);

/* Quivers. qr_quiver_from_json accepts cyclic quivers; operations that need
 * an acyclic one fail with QR_ERR_INPUT. */
QR_API qr_status qr_quiver_from_json(const char* json, qr_quiver** out);
QR_API qr_status qr_quiver_from_file(const char* path, qr_quiver** out);
QR_API void      qr_quiver_free(qr_quiver* q);
QR_API size_t    qr_quiver_num_vertices(const qr_quiver* q);
QR_API size_t    qr_quiver_num_arrows(const qr_quiver* q);
QR_API int       qr_quiver_is_acyclic(const qr_quiver* q);

/* Validation never fails on a well-formed JSON document; *valid is set to 0
 * when the report lists problems. */
QR_API qr_status qr_validate_json(const char* json, qr_format fmt, char** report, int* valid);

QR_API qr_status qr_path_count(const qr_quiver* q, const char* x, const char* y, int64_t* out);
QR_API qr_status qr_paths_report(const qr_quiver* q, const char* x, const char* y, qr_format fmt, char** out);

/* Multiplicity of P(w) in P(x) (x) P(y) for every vertex w, in vertex
 * order. len must be the vertex count. */
QR_API qr_status qr_tensor_proj(const qr_quiver* q, const char* x, const char* y, int64_t* mult, size_t len);
QR_API qr_status qr_tensor_proj_report(const qr_quiver* q, const char* x, const char* y, qr_format fmt, char** out);

/* PIE category. cap bounds the subquiver enumeration; 0 selects 2^20. */
QR_API qr_status qr_pie_build(const qr_quiver* q, uint64_t cap, qr_pie** out);
QR_API void      qr_pie_free(qr_pie* c);
QR_API size_t    qr_pie_size(const qr_pie* c);
QR_API qr_status qr_pie_object_name(const qr_pie* c, size_t i, char** out);
QR_API qr_status qr_pie_find(const qr_pie* c, const char* name, size_t* out);
QR_API qr_status qr_pie_hom(const qr_pie* c, size_t x, size_t y, int64_t* out);
QR_API qr_status qr_pie_mu(const qr_pie* c, size_t x, size_t y, int64_t* out);

/* Coefficients over the object basis; len must be qr_pie_size(c). */
QR_API qr_status qr_pie_product(const qr_pie* c, size_t x, size_t y, int64_t* coeffs, size_t len);
QR_API qr_status qr_pie_idempotent(const qr_pie* c, size_t x, int64_t* coeffs, size_t len);

/* what: "list", "mobius" or "idempotents". */
QR_API qr_status qr_pie_report(const qr_pie* c, const char* what, qr_format fmt, char** out);
QR_API qr_status qr_pie_product_report(const qr_pie* c, const char* x, const char* y, qr_format fmt, char** out);

/* Linearization of a PIE object, or of a quiver over Q given as JSON. */
QR_API qr_status qr_linearize_object_report(const qr_pie* c, const char* object, qr_format fmt, char** out);
QR_API qr_status qr_linearize_json_report(const char* json, qr_format fmt, char** out);

/* suites: comma-separated suite names, or NULL for all. *passed is set to 1
 * when every suite passed; a failing suite is not an error status. */
QR_API qr_status qr_verify_quiver(const qr_quiver* q,
                                  const char*      suites,
                                  uint64_t         seed,
                                  uint64_t         cap,
                                  qr_format        fmt,
                                  char**           report,
                                  int*             passed);
QR_API qr_status qr_verify_random(size_t      count,
                                  const char* suites,
                                  uint64_t    seed,
                                  uint64_t    cap,
                                  qr_format   fmt,
                                  char**      report,
                                  int*        passed);

#ifdef __cplusplus
}
#endif

#endif /* QRING_QRING_H_ */
