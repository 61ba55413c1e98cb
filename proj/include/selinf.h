/* C API for the selinf library: stepwise/lasso post-selection inference.
 *
 * All functions return SLF_OK (0) on success or a nonzero error code; the
 * message for the most recent failure on the calling thread is available
 * through slf_last_error(). Objects are opaque handles released with the
 * matching *_free function.
 */
#ifndef SELINF_H
#define SELINF_H

#ifdef __cplusplus
extern "C" {
#endif

#define SLF_OK 0
#define SLF_ERR_DATA 1    /* data / numeric failure */
#define SLF_ERR_USAGE 2   /* invalid argument */

#define SLF_METHOD_NAIVE (1u << 0)
#define SLF_METHOD_EXACT (1u << 1)
#define SLF_METHOD_BONFERRONI (1u << 2)
#define SLF_METHOD_SCHEFFE (1u << 3)
#define SLF_METHOD_FTEST (1u << 4)
#define SLF_METHOD_LEMMA2 (1u << 5)
#define SLF_METHOD_ALL 0x3fu

#define SLF_REF_F2_DFERR 0
#define SLF_REF_EXP_MEAN_ONE 1

#define SLF_FORMAT_TEXT 0
#define SLF_FORMAT_CSV 1
#define SLF_FORMAT_JSON 2

typedef struct slf_dataset slf_dataset;
typedef struct slf_table slf_table;

const char* slf_last_error(void);

/* ---- datasets ---- */
int slf_dataset_load_csv(const char* path, const char* response,
                         char delimiter, int normalize_names,
                         slf_dataset** out);
long slf_dataset_rows(const slf_dataset* ds);
long slf_dataset_cols(const slf_dataset* ds);
const char* slf_dataset_predictor_name(const slf_dataset* ds, long j);
void slf_dataset_free(slf_dataset* ds);

/* ---- analyses; each produces a result table ---- */
int slf_stepwise(const slf_dataset* ds, unsigned methods, long replicates,
                 unsigned long long seed, slf_table** out);
int slf_lasso(const slf_dataset* ds, int reference, slf_table** out);
int slf_bootstrap(const slf_dataset* ds, long resamples, double threshold,
                  int steps, int reference, unsigned long long seed,
                  slf_table** out);
int slf_nullsim_spacing(int n, int p, int j, long replicates, double rho,
                        unsigned long long seed, slf_table** out);
int slf_nullsim_lemma2(int n, int p, long replicates, unsigned long long seed,
                       slf_table** out);
int slf_nullsim_selection(int p, long replicates, unsigned long long seed,
                          slf_table** out);

/* ---- result tables ---- */
long slf_table_rows(const slf_table* t);
long slf_table_cols(const slf_table* t);
const char* slf_table_column_name(const slf_table* t, long col);
int slf_table_cell_is_null(const slf_table* t, long row, long col);
/* SLF_OK and *out set when the cell is numeric */
int slf_table_cell_number(const slf_table* t, long row, long col, double* out);
/* pointer valid while the table lives; NULL when the cell is not a string */
const char* slf_table_cell_string(const slf_table* t, long row, long col);
/* renders to a NUL-terminated buffer owned by the caller */
int slf_table_render(const slf_table* t, int format, int digits, char** out);
void slf_table_free(slf_table* t);
void slf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SELINF_H */
