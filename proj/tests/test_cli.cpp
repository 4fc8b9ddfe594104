// End-to-end tests of the command-line binary: exit codes and byte-level
// determinism of the outputs.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = SYNKIT_CLI_PATH;
const std::string kFixtures = SYNKIT_FIXTURES;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

int counter = 0;

RunResult run(const std::string& args) {
    std::string out_path = "/tmp/synkit_cli_test_" + std::to_string(counter++) + ".out";
    std::string cmd = kCli + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("construct then verify exits cleanly") {
    RunResult c = run("construct --words " + kFixtures + "/mwords_aa.txt --out /tmp/synkit_t_aa.aut");
    CHECK(c.exit_code == 0);
    RunResult v = run("verify /tmp/synkit_t_aa.aut --words " + kFixtures + "/mwords_aa.txt --exact");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("verified") != std::string::npos);
}

TEST_CASE("analyze reports a non-synchronizing automaton with exit 1") {
    RunResult r = run("analyze " + kFixtures + "/identity2.aut");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("not synchronizing") != std::string::npos);
}

TEST_CASE("factors finds the missing letter of M={aa}") {
    RunResult r = run("factors --words " + kFixtures + "/mwords_aa.txt --max-len 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("missing factor length: 1") != std::string::npos);
    CHECK(r.output.find("witness: b") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
    SUBCASE("analyze") {
        RunResult first = run("analyze " + kFixtures + "/cerny4.aut --json");
        RunResult second = run("analyze " + kFixtures + "/cerny4.aut --json");
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
    SUBCASE("construct") {
        RunResult a = run("construct --words " + kFixtures + "/mwords_abba.txt --out /tmp/synkit_t1.aut --dot /tmp/synkit_t1.dot");
        RunResult b = run("construct --words " + kFixtures + "/mwords_abba.txt --out /tmp/synkit_t2.aut --dot /tmp/synkit_t2.dot");
        CHECK(a.exit_code == 0);
        CHECK(b.exit_code == 0);
        CHECK(slurp("/tmp/synkit_t1.aut") == slurp("/tmp/synkit_t2.aut"));
        CHECK(slurp("/tmp/synkit_t1.dot") == slurp("/tmp/synkit_t2.dot"));
        CHECK_FALSE(slurp("/tmp/synkit_t1.aut").empty());
    }
    SUBCASE("verify") {
        run("construct --words " + kFixtures + "/mwords_abba.txt --out /tmp/synkit_t3.aut");
        RunResult a = run("verify /tmp/synkit_t3.aut --words " + kFixtures + "/mwords_abba.txt");
        RunResult b = run("verify /tmp/synkit_t3.aut --words " + kFixtures + "/mwords_abba.txt");
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("pipelines on automaton files") {
    SUBCASE("syn and minwords write canonical acceptors") {
        CHECK(run("syn " + kFixtures + "/cerny4.aut --out /tmp/synkit_syn.aut").exit_code == 0);
        CHECK(run("minwords " + kFixtures + "/cerny4.aut --out /tmp/synkit_mw.aut").exit_code == 0);
        std::string mw = slurp("/tmp/synkit_mw.aut");
        CHECK(mw.find("initial") != std::string::npos);
        // minimal words of Syn(C4) feed back into verify against C4 itself
        RunResult v = run("verify " + kFixtures + "/cerny4.aut --words /dev/null");
        CHECK(v.exit_code == 2);
    }
    SUBCASE("dot renders semiautomata") {
        CHECK(run("dot " + kFixtures + "/cerny4.aut --out /tmp/synkit_c4.dot").exit_code == 0);
        CHECK(slurp("/tmp/synkit_c4.dot").find("digraph") != std::string::npos);
    }
    SUBCASE("lifted exploration prints states") {
        RunResult r = run("lifted --words " + kFixtures + "/mwords_abba.txt --depth 2");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("(ab, b)") != std::string::npos);
        CHECK(r.output.find("(ba, a)") != std::string::npos);
    }
    SUBCASE("construct accepts a generator DFA and verify accepts a bound") {
        RunResult c = run("construct --dfa " + kFixtures + "/m_abba.aut --out /tmp/synkit_t4.aut");
        CHECK(c.exit_code == 0);
        RunResult v = run("verify /tmp/synkit_t4.aut --words /tmp/does_not_matter.txt --bound 4");
        CHECK(v.exit_code == 2);  // missing word list is an input error
        // the shortest reset word of C4 generates a proper sub-ideal of
        // Syn(C4); the languages first diverge at length 10
        std::ofstream("/tmp/synkit_w9.txt") << "alphabet a b\nbaaabaaab\n";
        RunResult v2 = run("verify " + kFixtures + "/cerny4.aut --words /tmp/synkit_w9.txt --bound 9");
        CHECK(v2.exit_code == 0);
        RunResult v3 = run("verify " + kFixtures + "/cerny4.aut --words /tmp/synkit_w9.txt --bound 10");
        CHECK(v3.exit_code == 1);
        CHECK(v3.output.find("counterexample") != std::string::npos);
    }
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("analyze " + kFixtures + "/broken.aut").exit_code == 2);
    CHECK(run("analyze /tmp/no_such_file.aut").exit_code == 2);
    CHECK(run("construct --words " + kFixtures + "/mwords_aa.txt --dfa x --out /tmp/x.aut").exit_code == 2);
    RunResult r = run("verify " + kFixtures + "/identity2.aut --words " + kFixtures + "/mwords_aa.txt --bound 6");
    CHECK(r.exit_code == 1);  // identity2 has no reset words at all
}
