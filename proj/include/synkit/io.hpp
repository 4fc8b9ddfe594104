#ifndef SYNKIT_IO_HPP
#define SYNKIT_IO_HPP

#include <variant>

#include "synkit/missing_factor.hpp"
#include "synkit/reset.hpp"
#include "synkit/tail.hpp"
#include "synkit/verify.hpp"

namespace synkit {

using ParsedAut = std::variant<Semiautomaton, Acceptor>;

/// Line-oriented automaton format. Directives: `alphabet <sym>...`,
/// `states <n>`, optional `initial <q>`, optional `final <q>...`, optional
/// `partial`, then `trans <q> <sym> <p>` lines; `#` starts a comment. A
/// file with no initial/final/partial directives and a complete table is a
/// semiautomaton; anything else is an acceptor. Errors carry line numbers.
ParsedAut parse_aut(const std::string& text);

/// Canonical serialization: alphabet, states, initial, final, partial,
/// then transitions sorted by (state, letter). parse(serialize(x))
/// reproduces x; serialize(parse(t)) canonicalizes t.
std::string serialize_aut(const ParsedAut& aut);
std::string serialize_aut(const Semiautomaton& a);
std::string serialize_aut(const Acceptor& a);

/// Word list: an `alphabet` header, then one word per line ("eps" is the
/// empty word); blank lines and comments skipped.
std::pair<Alphabet, std::vector<Word>> parse_words(const std::string& text);

/// Deterministic DOT rendering; finals get double circles, parallel edges
/// merge into comma-joined labels. Optional per-state labels replace the
/// numeric ones.
std::string export_dot(const ParsedAut& aut, const std::vector<std::string>& labels = {});

std::string format_tail_state(const TailState& s, const Alphabet& alphabet);
std::string format_tail_structure(const TailStructure& ts, const Alphabet& alphabet);

/// Report rendering shared by the C API and the test suites.
std::string format_analysis_text(const SyncReport& sync, const std::optional<MissingFactorReport>& mf,
                                 const Alphabet& alphabet);
std::string format_analysis_json(const SyncReport& sync, const std::optional<MissingFactorReport>& mf,
                                 const Alphabet& alphabet);
std::string format_factors_text(const std::optional<std::pair<long long, Word>>& hit, long long ell_max,
                                const Alphabet& alphabet);
std::string format_factors_json(const std::optional<std::pair<long long, Word>>& hit, long long ell_max,
                                const Alphabet& alphabet);
std::string format_verdict_text(const Verdict& v, const Alphabet& alphabet);
std::string format_lifted_text(const LiftedExploration& e, const Alphabet& alphabet);
std::string format_lifted_dot(const LiftedExploration& e, const Alphabet& alphabet);

}  // namespace synkit

#endif  // SYNKIT_IO_HPP
