#include "synkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "synkit/io.hpp"

using namespace synkit;

struct synkit_aut {
    ParsedAut value;
    std::vector<std::string> labels;  // tail-state summaries, set by construct
};

struct synkit_words {
    Alphabet alphabet;
    std::vector<Word> words;
};

namespace {

thread_local std::string g_last_error;

synkit_status fail(synkit_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

synkit_status from_error(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Parse: return fail(SYNKIT_ERR_PARSE, e.what());
        case ErrorCode::InvalidInput: return fail(SYNKIT_ERR_INPUT, e.what());
        case ErrorCode::LimitExceeded: return fail(SYNKIT_ERR_LIMIT, e.what());
        case ErrorCode::Internal: return fail(SYNKIT_ERR_INTERNAL, e.what());
    }
    return fail(SYNKIT_ERR_INTERNAL, e.what());
}

template <typename Fn>
synkit_status guarded(Fn fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return from_error(e);
    } catch (const std::exception& e) {
        return fail(SYNKIT_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const Semiautomaton& need_semiautomaton(const synkit_aut* aut) {
    if (!std::holds_alternative<Semiautomaton>(aut->value))
        throw Error(ErrorCode::InvalidInput, "expected a complete semiautomaton (no initial/final/partial)");
    return std::get<Semiautomaton>(aut->value);
}

const Acceptor& need_acceptor(const synkit_aut* aut) {
    if (!std::holds_alternative<Acceptor>(aut->value))
        throw Error(ErrorCode::InvalidInput, "expected an acceptor (with initial and final states)");
    return std::get<Acceptor>(aut->value);
}

long long default_bound(const Acceptor& m) {
    auto w = shortest_accepted(m);
    long long len = w ? static_cast<long long>(w->size()) : 0;
    return 2 * len + 6;
}

}  // namespace

extern "C" {

const char* synkit_last_error(void) { return g_last_error.c_str(); }

void synkit_string_free(char* s) { std::free(s); }
void synkit_aut_free(synkit_aut* aut) { delete aut; }
void synkit_words_free(synkit_words* words) { delete words; }

synkit_status synkit_aut_parse(const char* text, synkit_aut** out) {
    if (!text || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        auto parsed = parse_aut(text);
        *out = new synkit_aut{std::move(parsed), {}};
        return SYNKIT_OK;
    });
}

synkit_status synkit_aut_serialize(const synkit_aut* aut, char** out) {
    if (!aut || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = dup_string(serialize_aut(aut->value));
        return SYNKIT_OK;
    });
}

synkit_status synkit_aut_dot(const synkit_aut* aut, char** out) {
    if (!aut || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = dup_string(export_dot(aut->value, aut->labels));
        return SYNKIT_OK;
    });
}

int synkit_aut_is_semiautomaton(const synkit_aut* aut) {
    return aut && std::holds_alternative<Semiautomaton>(aut->value) ? 1 : 0;
}

int synkit_aut_state_count(const synkit_aut* aut) {
    if (!aut) return 0;
    if (std::holds_alternative<Semiautomaton>(aut->value)) return std::get<Semiautomaton>(aut->value).n;
    return std::get<Acceptor>(aut->value).n;
}

synkit_status synkit_words_parse(const char* text, synkit_words** out) {
    if (!text || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        auto [alphabet, words] = parse_words(text);
        *out = new synkit_words{std::move(alphabet), std::move(words)};
        return SYNKIT_OK;
    });
}

synkit_status synkit_words_acceptor(const synkit_words* words, synkit_aut** out) {
    if (!words || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new synkit_aut{acceptor_from_words(words->alphabet, words->words), {}};
        return SYNKIT_OK;
    });
}

synkit_status synkit_analyze(const synkit_aut* aut, long long ell_max, int as_json, char** out_report,
                             int* out_synchronizing, int* out_falsified) {
    if (!aut || !out_report || !out_synchronizing) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        const Semiautomaton& a = need_semiautomaton(aut);
        SyncReport sync = sync_report(a);
        std::optional<MissingFactorReport> mf;
        if (sync.is_synchronizing) mf = analyze_missing_factors(a, ell_max);
        *out_synchronizing = sync.is_synchronizing ? 1 : 0;
        if (out_falsified) *out_falsified = mf && mf->bound_verified && !*mf->bound_verified ? 1 : 0;
        *out_report = dup_string(as_json ? format_analysis_json(sync, mf, a.alphabet)
                                         : format_analysis_text(sync, mf, a.alphabet));
        return SYNKIT_OK;
    });
}

synkit_status synkit_syn_recognizer(const synkit_aut* aut, synkit_aut** out) {
    if (!aut || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        *out = new synkit_aut{syn_recognizer(need_semiautomaton(aut)), {}};
        return SYNKIT_OK;
    });
}

synkit_status synkit_minimal_words(const synkit_aut* aut, synkit_aut** out) {
    if (!aut || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        Acceptor ideal = std::holds_alternative<Semiautomaton>(aut->value)
                             ? syn_recognizer(std::get<Semiautomaton>(aut->value))
                             : std::get<Acceptor>(aut->value);
        *out = new synkit_aut{minimal_words_recognizer(ideal), {}};
        return SYNKIT_OK;
    });
}

synkit_status synkit_factors_report(const synkit_aut* m, long long ell_max, int as_json, char** out) {
    if (!m || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        const Acceptor& acc = need_acceptor(m);
        auto hit = find_missing_factor(acc, ell_max);
        *out = dup_string(as_json ? format_factors_json(hit, ell_max, acc.alphabet)
                                  : format_factors_text(hit, ell_max, acc.alphabet));
        return SYNKIT_OK;
    });
}

synkit_status synkit_construct(const synkit_aut* m, synkit_aut** out) {
    if (!m || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        TailAutomaton t = construct_tail_automaton(need_acceptor(m));
        std::vector<std::string> labels;
        labels.reserve(t.labels.size());
        for (const auto& s : t.labels) labels.push_back(format_tail_state(s, t.automaton.alphabet));
        *out = new synkit_aut{std::move(t.automaton), std::move(labels)};
        return SYNKIT_OK;
    });
}

synkit_status synkit_lifted(const synkit_aut* m, int depth, int as_dot, char** out) {
    if (!m || !out) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        const Acceptor& acc = need_acceptor(m);
        LiftedExploration e = lifted_explore(acc, depth);
        *out = dup_string(as_dot ? format_lifted_dot(e, acc.alphabet) : format_lifted_text(e, acc.alphabet));
        return SYNKIT_OK;
    });
}

synkit_status synkit_verify(const synkit_aut* aut, const synkit_aut* m, synkit_verify_mode mode, long long bound,
                            int* out_ok, char** out_detail) {
    if (!aut || !m || !out_ok || !out_detail) return fail(SYNKIT_ERR_INPUT, "null argument");
    return guarded([&] {
        const Semiautomaton& a = need_semiautomaton(aut);
        const Acceptor& gen = need_acceptor(m);
        long long effective = bound >= 0 ? bound : default_bound(gen);
        Verdict v;
        switch (mode) {
            case SYNKIT_VERIFY_EXACT:
                v = verify_syn_equals_ideal(a, gen, VerifyMode::Exact);
                break;
            case SYNKIT_VERIFY_BOUNDED:
                v = verify_syn_equals_ideal(a, gen, VerifyMode::Bounded, effective);
                break;
            case SYNKIT_VERIFY_AUTO:
            default:
                try {
                    v = verify_syn_equals_ideal(a, gen, VerifyMode::Exact);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::LimitExceeded) throw;
                    v = verify_syn_equals_ideal(a, gen, VerifyMode::Bounded, effective);
                }
                break;
        }
        *out_ok = v.ok ? 1 : 0;
        *out_detail = dup_string(format_verdict_text(v, a.alphabet));
        return SYNKIT_OK;
    });
}

}  // extern "C"
