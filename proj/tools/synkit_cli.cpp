// Command-line front end; talks to the library exclusively through the C
// API in synkit.h. Exit codes: 0 success/verified, 1 property falsified or
// automaton not synchronizing, 2 input or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "synkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInputError = 2;

struct AutDeleter {
    void operator()(synkit_aut* a) const { synkit_aut_free(a); }
};
struct WordsDeleter {
    void operator()(synkit_words* w) const { synkit_words_free(w); }
};
using AutPtr = std::unique_ptr<synkit_aut, AutDeleter>;
using WordsPtr = std::unique_ptr<synkit_words, WordsDeleter>;

class CliError : public std::runtime_error {
  public:
    explicit CliError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] void raise_last_error() { throw CliError(synkit_last_error()); }

std::string take_string(char* s) {
    std::string out = s ? s : "";
    synkit_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("cannot write '" + path + "'");
    out << content;
}

AutPtr load_aut(const std::string& path) {
    synkit_aut* aut = nullptr;
    if (synkit_aut_parse(read_file(path).c_str(), &aut) != SYNKIT_OK) raise_last_error();
    return AutPtr(aut);
}

AutPtr load_words_acceptor(const std::string& path) {
    synkit_words* words = nullptr;
    if (synkit_words_parse(read_file(path).c_str(), &words) != SYNKIT_OK) raise_last_error();
    WordsPtr guard(words);
    synkit_aut* aut = nullptr;
    if (synkit_words_acceptor(words, &aut) != SYNKIT_OK) raise_last_error();
    return AutPtr(aut);
}

AutPtr load_generators(const std::string& words_path, const std::string& dfa_path) {
    if (!words_path.empty()) return load_words_acceptor(words_path);
    return load_aut(dfa_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronizing-automata toolkit: reset-word analysis and "
                 "construction of strongly connected automata from ideal generators"};
    app.require_subcommand(1);

    std::string in_path, out_path, dot_path, words_path, dfa_path;
    long long max_len = 6;
    bool as_json = false;
    int depth = 0;
    bool exact = false;
    long long bound = -1;

    auto* analyze = app.add_subcommand("analyze", "synchronization and missing-factor report for a semiautomaton");
    analyze->add_option("file", in_path)->required();
    analyze->add_option("--max-len", max_len, "missing-factor search limit");
    analyze->add_flag("--json", as_json);

    auto* syn = app.add_subcommand("syn", "write the minimal acceptor of the reset-word language");
    syn->add_option("file", in_path)->required();
    syn->add_option("--out", out_path)->required();

    auto* minwords = app.add_subcommand("minwords", "write the minimal acceptor of the minimal reset words");
    minwords->add_option("file", in_path)->required();
    minwords->add_option("--out", out_path)->required();

    auto* factors = app.add_subcommand("factors", "missing-factor search for a generator set");
    factors->add_option("file", in_path);
    factors->add_option("--words", words_path);
    factors->add_option("--max-len", max_len);
    factors->add_flag("--json", as_json);

    auto* construct = app.add_subcommand("construct", "build the tail-structure automaton of an ideal");
    construct->add_option("--words", words_path);
    construct->add_option("--dfa", dfa_path);
    construct->add_option("--out", out_path)->required();
    construct->add_option("--dot", dot_path);

    auto* lifted = app.add_subcommand("lifted", "bounded exploration of the maximal lifted automaton");
    lifted->add_option("--words", words_path)->required();
    lifted->add_option("--depth", depth)->required();
    lifted->add_option("--dot", dot_path);

    auto* verify = app.add_subcommand("verify", "check that an automaton's reset words equal a given ideal");
    verify->add_option("file", in_path)->required();
    verify->add_option("--words", words_path)->required();
    verify->add_flag("--exact", exact);
    verify->add_option("--bound", bound);

    auto* dot = app.add_subcommand("dot", "render an automaton file as DOT");
    dot->add_option("file", in_path)->required();
    dot->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            AutPtr aut = load_aut(in_path);
            char* report = nullptr;
            int synchronizing = 0;
            int falsified = 0;
            if (synkit_analyze(aut.get(), max_len, as_json ? 1 : 0, &report, &synchronizing, &falsified) != SYNKIT_OK)
                raise_last_error();
            std::cout << take_string(report);
            if (!synchronizing) {
                if (!as_json) std::cout << "not synchronizing\n";
                return kExitFalsified;
            }
            return falsified ? kExitFalsified : kExitOk;
        }
        if (syn->parsed()) {
            AutPtr aut = load_aut(in_path);
            synkit_aut* result = nullptr;
            if (synkit_syn_recognizer(aut.get(), &result) != SYNKIT_OK) raise_last_error();
            AutPtr guard(result);
            char* text = nullptr;
            if (synkit_aut_serialize(result, &text) != SYNKIT_OK) raise_last_error();
            write_file(out_path, take_string(text));
            return kExitOk;
        }
        if (minwords->parsed()) {
            AutPtr aut = load_aut(in_path);
            synkit_aut* result = nullptr;
            if (synkit_minimal_words(aut.get(), &result) != SYNKIT_OK) raise_last_error();
            AutPtr guard(result);
            char* text = nullptr;
            if (synkit_aut_serialize(result, &text) != SYNKIT_OK) raise_last_error();
            write_file(out_path, take_string(text));
            return kExitOk;
        }
        if (factors->parsed()) {
            if (in_path.empty() == words_path.empty())
                throw CliError("factors needs exactly one of <file> or --words");
            AutPtr m = load_generators(words_path, in_path);
            char* report = nullptr;
            if (synkit_factors_report(m.get(), max_len, as_json ? 1 : 0, &report) != SYNKIT_OK) raise_last_error();
            std::cout << take_string(report);
            return kExitOk;
        }
        if (construct->parsed()) {
            if (words_path.empty() == dfa_path.empty())
                throw CliError("construct needs exactly one of --words or --dfa");
            AutPtr m = load_generators(words_path, dfa_path);
            synkit_aut* result = nullptr;
            if (synkit_construct(m.get(), &result) != SYNKIT_OK) raise_last_error();
            AutPtr guard(result);
            char* text = nullptr;
            if (synkit_aut_serialize(result, &text) != SYNKIT_OK) raise_last_error();
            write_file(out_path, take_string(text));
            if (!dot_path.empty()) {
                char* dot_text = nullptr;
                if (synkit_aut_dot(result, &dot_text) != SYNKIT_OK) raise_last_error();
                write_file(dot_path, take_string(dot_text));
            }
            std::cout << "constructed " << synkit_aut_state_count(result) << " states\n";
            return kExitOk;
        }
        if (lifted->parsed()) {
            AutPtr m = load_words_acceptor(words_path);
            char* text = nullptr;
            if (synkit_lifted(m.get(), depth, 0, &text) != SYNKIT_OK) raise_last_error();
            std::cout << take_string(text);
            if (!dot_path.empty()) {
                char* dot_text = nullptr;
                if (synkit_lifted(m.get(), depth, 1, &dot_text) != SYNKIT_OK) raise_last_error();
                write_file(dot_path, take_string(dot_text));
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            AutPtr aut = load_aut(in_path);
            AutPtr m = load_words_acceptor(words_path);
            synkit_verify_mode mode = SYNKIT_VERIFY_AUTO;
            if (exact && bound >= 0) throw CliError("--exact and --bound are mutually exclusive");
            if (exact) mode = SYNKIT_VERIFY_EXACT;
            if (bound >= 0) mode = SYNKIT_VERIFY_BOUNDED;
            int ok = 0;
            char* detail = nullptr;
            if (synkit_verify(aut.get(), m.get(), mode, bound, &ok, &detail) != SYNKIT_OK) raise_last_error();
            std::cout << take_string(detail);
            return ok ? kExitOk : kExitFalsified;
        }
        if (dot->parsed()) {
            AutPtr aut = load_aut(in_path);
            char* text = nullptr;
            if (synkit_aut_dot(aut.get(), &text) != SYNKIT_OK) raise_last_error();
            write_file(out_path, take_string(text));
            return kExitOk;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
