/* synkit.h -- C interface to the synkit shared library.
 *
 * All functions that can fail return a synkit_status; SYNKIT_OK means
 * success and anything else leaves a human-readable message retrievable
 * via synkit_last_error(). Objects are opaque handles released with the
 * matching _free function; strings returned through char** out-parameters
 * are heap-allocated and released with synkit_string_free.
 */

#ifndef SYNKIT_H
#define SYNKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct synkit_aut synkit_aut;     /* a semiautomaton or an acceptor */
typedef struct synkit_words synkit_words; /* a parsed word list */

typedef enum synkit_status {
    SYNKIT_OK = 0,
    SYNKIT_ERR_PARSE = 1,  /* malformed textual input */
    SYNKIT_ERR_INPUT = 2,  /* bad argument or precondition violation */
    SYNKIT_ERR_LIMIT = 3,  /* an explicit budget was exceeded; retry bounded */
    SYNKIT_ERR_INTERNAL = 4
} synkit_status;

/* Message for the most recent failure on this thread. */
const char *synkit_last_error(void);

void synkit_string_free(char *s);
void synkit_aut_free(synkit_aut *aut);
void synkit_words_free(synkit_words *words);

/* ----- input / output ------------------------------------------------ */

synkit_status synkit_aut_parse(const char *text, synkit_aut **out);
synkit_status synkit_aut_serialize(const synkit_aut *aut, char **out);
/* DOT rendering; a constructed automaton carries its tail-state labels. */
synkit_status synkit_aut_dot(const synkit_aut *aut, char **out);

int synkit_aut_is_semiautomaton(const synkit_aut *aut);
int synkit_aut_state_count(const synkit_aut *aut);

synkit_status synkit_words_parse(const char *text, synkit_words **out);
/* Minimal acceptor of the listed words. */
synkit_status synkit_words_acceptor(const synkit_words *words, synkit_aut **out);

/* ----- analysis ------------------------------------------------------ */

/* Synchronization report plus missing-factor analysis (searched up to
 * ell_max) for a semiautomaton. out_synchronizing is 1 or 0;
 * out_falsified (optional) is set to 1 if a checked bound failed. */
synkit_status synkit_analyze(const synkit_aut *aut, long long ell_max, int as_json, char **out_report,
                             int *out_synchronizing, int *out_falsified);

/* Minimal acceptor of the reset-word language of a semiautomaton. */
synkit_status synkit_syn_recognizer(const synkit_aut *aut, synkit_aut **out);

/* Minimal acceptor of the minimal generators: of Syn(A) when given a
 * semiautomaton, of the language itself when given an ideal acceptor. */
synkit_status synkit_minimal_words(const synkit_aut *aut, synkit_aut **out);

/* Missing-factor report for a generator-set acceptor. */
synkit_status synkit_factors_report(const synkit_aut *m, long long ell_max, int as_json, char **out);

/* ----- construction -------------------------------------------------- */

/* Strongly connected synchronizing automaton whose reset words are
 * exactly the ideal generated by the (factor-free, non-unary) m. */
synkit_status synkit_construct(const synkit_aut *m, synkit_aut **out);

/* Bounded exploration of the maximal lifted automaton; text or DOT. */
synkit_status synkit_lifted(const synkit_aut *m, int depth, int as_dot, char **out);

/* ----- verification -------------------------------------------------- */

typedef enum synkit_verify_mode {
    SYNKIT_VERIFY_AUTO = 0,  /* exact, falling back to bounded on refusal */
    SYNKIT_VERIFY_EXACT = 1,
    SYNKIT_VERIFY_BOUNDED = 2
} synkit_verify_mode;

/* Checks Syn(aut) against the ideal generated by m. bound < 0 selects the
 * default 2*|shortest generator| + 6. out_ok is 1 when the property
 * holds; when it fails the detail contains a replayable counterexample. */
synkit_status synkit_verify(const synkit_aut *aut, const synkit_aut *m, synkit_verify_mode mode, long long bound,
                            int *out_ok, char **out_detail);

#ifdef __cplusplus
}
#endif

#endif /* SYNKIT_H */
