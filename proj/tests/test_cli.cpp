#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// PULAB_CLI_PATH is injected by the build as the absolute binary path.

namespace {

int run(const std::string& args) {
    const std::string cmd =
        std::string(PULAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return (status >> 8) & 0xff;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("passing run exits 0") {
    CHECK(run("verify --samples 2 --k-max 4 --n-max 4") == 0);
    CHECK(run("factorize") == 0);
    CHECK(run("spectrum --k-max 3 --n-max 3") == 0);
}

TEST_CASE("failing claim exits 1") {
    CHECK(run("verify --samples 0 --k-max 1 --n-max 1 --perturb-kappa 1.01") ==
          1);
}

TEST_CASE("invalid input exits 2") {
    CHECK(run("verify --nu2 1 --omega-cap 1") == 2);       // degenerate gap
    CHECK(run("spectrum --k-max 13") == 2);                // above the depth cap
    CHECK(run("simulate --structure bogus") == 2);
    CHECK(run("simulate --dt -1") == 2);
    CHECK(run("verify --no-such-flag") == 2);
    CHECK(run("") == 2);                                   // missing subcommand
}

TEST_CASE("seeded runs are byte-identical") {
    const std::string a = "/tmp/pulab_cli_a.json";
    const std::string b = "/tmp/pulab_cli_b.json";
    REQUIRE(run("scan --grid-c 10 --grid-p 3 --seed 7 --out " + a) == 0);
    REQUIRE(run("scan --grid-c 10 --grid-p 3 --seed 7 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    REQUIRE(run("simulate --t-max 1 --seed 9 --csv --out " + a) == 0);
    REQUIRE(run("simulate --t-max 1 --seed 9 --csv --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("json outputs carry the contract keys") {
    const std::string f = "/tmp/pulab_cli_c.json";
    REQUIRE(run("factorize --out " + f) == 0);
    const std::string s = slurp(f);
    for (const char* key :
         {"\"lambda_plus\"", "\"lambda_minus\"", "\"a1\"", "\"a2\"", "\"a3\"",
          "\"normalizable\"", "\"params\"", "\"pass\""})
        CHECK(s.find(key) != std::string::npos);
    REQUIRE(run("verify --samples 0 --k-max 1 --n-max 1 --out " + f) == 0);
    const std::string v = slurp(f);
    for (const char* key :
         {"\"checks\"", "\"name\"", "\"residual\"", "\"tolerance\"", "\"pass\""})
        CHECK(v.find(key) != std::string::npos);
}

TEST_CASE("both structures integrate the same trajectory") {
    const std::string a = "/tmp/pulab_cli_d.csv";
    const std::string b = "/tmp/pulab_cli_e.csv";
    REQUIRE(run("simulate --structure jg --t-max 1 --seed 5 --csv --out " + a) ==
            0);
    REQUIRE(run("simulate --structure j2 --t-max 1 --seed 5 --csv --out " + b) ==
            0);
    std::ifstream fa(a), fb(b);
    std::string la, lb;
    std::getline(fa, la);
    std::getline(fb, lb);
    CHECK(la == lb); // header
    int rows = 0;
    while (std::getline(fa, la) && std::getline(fb, lb)) {
        std::istringstream sa(la), sb(lb);
        std::string ca, cb;
        while (std::getline(sa, ca, ',') && std::getline(sb, cb, ',')) {
            CHECK(std::abs(std::stod(ca) - std::stod(cb)) < 1e-9);
        }
        ++rows;
    }
    CHECK(rows == 1001);
}
