#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// CTSEQ_BIN is injected by the build as the path to the ctseq executable.

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(CTSEQ_BIN) + " " + args + " 2>/dev/null";
    FILE* f = ::popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    int status = ::pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("ctseq-cli-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string operator/(const char* name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("gen prints the state count and writes a loadable file") {
    TempDir tmp;
    auto path = tmp / "catalan2.json";
    auto r = run("gen --seq catalan --p 2 --a 1 --kind auto --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "2 states\n");
    CHECK(std::filesystem::exists(path));

    auto text = [&] {
        FILE* f = fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        std::string s;
        char buf[4096];
        size_t got;
        while ((got = fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, got);
        fclose(f);
        return s;
    }();
    CHECK(text.find("\"transitions\":[[2,1],[2,0]]") != std::string::npos);
    CHECK(text.find("\"initial\":[1,1]") != std::string::npos);

    CHECK(run("eval --scheme " + path + " --n 10**100").out == "0\n");
    CHECK(run("eval --scheme " + path + " --n 1023").out == "1\n");
    CHECK(run("seq --scheme " + path + " --count 8").out == "1,1,0,1,0,0,0,1\n");
}

TEST_CASE("definitions can come from expressions and binomial sums") {
    TempDir tmp;
    auto r = run("gen --P x^-1+2+x --Q 1-x --vars x --p 2 --a 1 --kind auto");
    CHECK(r.code == 0);
    CHECK(r.out == "2 states\n");

    auto path = tmp / "cb4.json";
    auto r2 = run("gen --binsum \"1; 1,0,0,0,1,0\" --p 2 --a 2 --out " + path);
    CHECK(r2.code == 0);
    // central binomial prefix mod 4: 1, 2, 2, 0, 2, ...
    CHECK(run("seq --scheme " + path + " --count 5").out == "1,2,2,0,2\n");
}

TEST_CASE("exceeding the cap exits 2 and leaves no file behind") {
    TempDir tmp;
    auto path = tmp / "never.json";
    auto r = run("gen --seq motzkin --p 2 --a 6 --kind auto --cap 10000 --out " + path);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("crt composes residues from coprime scheme files") {
    TempDir tmp;
    auto p2 = tmp / "c2.json";
    auto p3 = tmp / "c3.json";
    CHECK(run("gen --seq catalan --p 2 --a 1 --out " + p2).code == 0);
    CHECK(run("gen --seq catalan --p 3 --a 1 --out " + p3).code == 0);
    // catalan(4) = 14 = 2 mod 6
    CHECK(run("crt --schemes " + p2 + "," + p3 + " --m 6 --n 4").out == "2\n");
    CHECK(run("crt --schemes " + p2 + "," + p3 + " --m 5 --n 4").code == 3);
    CHECK(run("crt --schemes " + p2 + "," + p2 + " --m 2 --n 4").code == 3);
}

TEST_CASE("bin2ct prints the compiled pair") {
    auto r = run("bin2ct --binsum \"1; 1,0,0,0,1,0\"");
    CHECK(r.code == 0);
    CHECK(r.out == "P = x^-1+2+x\nQ = 1\n");
}

TEST_CASE("cfinite evaluates linear recurrences") {
    auto r = run("cfinite --rec 1,1 --init 1,1 --m 1000 --n 10**100");
    CHECK(r.code == 0);
    CHECK(r.out == "875\n");
    CHECK(run("cfinite --rec 1,1 --init 1,1 --m 1000 --n 10").out == "55\n");
    CHECK(run("cfinite --rec 1,1 --init 1,1 --m 1000 --n 0").code == 3);
}

TEST_CASE("usage and parse failures exit 1") {
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("gen --seq catalan --p 2").code == 1);            // missing --a
    CHECK(run("gen --seq nosuch --p 2 --a 1").code == 1);       // unknown catalog entry
    CHECK(run("gen --p 2 --a 1").code == 1);                    // no definition
    CHECK(run("gen --seq catalan --P x --p 2 --a 1").code == 1); // two definitions
    CHECK(run("gen --P \"2x\" --p 2 --a 1").code == 1);         // bad expression
    CHECK(run("gen --seq catalan --p 2 --a 1 --kind magic").code == 1);
    CHECK(run("eval --scheme missing.json --n 5").code == 1);
    CHECK(run("eval --n 5").code == 1);
    CHECK(run("cfinite --rec 1,x --init 1,1 --m 10 --n 1").code == 1);
}

TEST_CASE("precondition violations exit 3") {
    CHECK(run("gen --seq catalan --p 6 --a 1").code == 3);  // composite p
    CHECK(run("gen --seq catalan --p 2 --a 0").code == 3);
    CHECK(run("cfinite --rec 1,1 --init 1 --m 10 --n 1").code == 3);
    CHECK(run("cfinite --rec 1,1 --init 1,1 --m 1 --n 1").code == 3);
}
