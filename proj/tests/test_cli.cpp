#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("SEGRECODES_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string out_file = "cli_out_" + std::to_string(counter++) + ".txt";
    const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = (status >= 0 && (status & 0x7f) == 0) ? (status >> 8) & 0xff : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_file.c_str());
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("points subcommand") {
    auto r = run("points --kind space --s 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("q=2 s=2") != std::string::npos);
    CHECK(r.out.find("0,1") != std::string::npos);

    // Round-trip through a file and kind=file.
    CHECK(run("points --kind torus --s 3 --q 3 --out cli_torus.pts").code == 0);
    auto r2 = run("code --kind file --file cli_torus.pts --d 1 --format csv");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("3,1,4,3,2,2") != std::string::npos);
    std::remove("cli_torus.pts");
}

TEST_CASE("code subcommand formats") {
    auto text = run("code --kind space --s 2 --q 2 --d 1");
    CHECK(text.code == 0);
    CHECK(text.out.find("n=3 k=2 delta=2") != std::string::npos);

    auto csv = run("code --kind space --s 2 --q 2 --d 1 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("q,d,n,k,delta,reg") != std::string::npos);
    CHECK(csv.out.find("2,1,3,2,2,2") != std::string::npos);

    auto js = run("code --kind torus --s 3 --q 3 --d 1 --format json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"n\": 4") != std::string::npos);
    CHECK(js.out.find("\"delta\": 2") != std::string::npos);
}

TEST_CASE("segre subcommand") {
    auto r = run("segre --q 2 --x1 space:2 --x2 space:2 --d 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=9") != std::string::npos);
    CHECK(r.out.find("delta=4") != std::string::npos);
    CHECK(r.out.find("delta2=6") != std::string::npos);
    CHECK(r.out.find("status: pass") != std::string::npos);

    auto csv = run("segre --q 2 --x1 space:2 --x2 space:2 --d 1 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("2,space:2,space:2,2,2,1,3,2,2,3,2,2,9,4,4,6,2,pass") != std::string::npos);

    auto js = run("segre --q 3 --x1 torus:2 --x2 space:2 --d 1 --format json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("d = 0 verifies sizes only and exits 0") {
    auto r = run("segre --q 2 --x1 space:2 --x2 space:2 --d 0");
    CHECK(r.code == 0);
    CHECK(r.out.find("status: pass") != std::string::npos);
}

TEST_CASE("exit code 2 on bad arguments") {
    CHECK(run("segre --q 2 --x1 space:2").code == 2);           // missing --x2
    CHECK(run("segre --q 2 --x1 bogus:2 --x2 space:2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("sweep /no/such/file.json").code == 2);
}

TEST_CASE("exit code 3 with --strict when a budget is exhausted") {
    auto strict = run("segre --q 3 --x1 torus:3 --x2 torus:3 --d 1 --budget-dist 10 --strict");
    CHECK(strict.code == 3);
    // Without --strict the same run succeeds and reports the skip.
    auto loose = run("segre --q 3 --x1 torus:3 --x2 torus:3 --d 1 --budget-dist 10");
    CHECK(loose.code == 0);
    CHECK(loose.out.find("skipped") != std::string::npos);
}

TEST_CASE("sweep subcommand with cache") {
    write_file("cli_sweep.json", R"([
      {"q": 2, "x1": "space:2", "x2": "space:2", "d": 1},
      {"q": 3, "x1": "torus:2", "x2": "torus:2", "d": 1}
    ])");

    auto cold = run("sweep cli_sweep.json --cache cli_sweep.cache");
    CHECK(cold.code == 0);
    CHECK(cold.out.find("q,x1,x2") != std::string::npos);
    CHECK(cold.out.find("2,space:2,space:2") != std::string::npos);
    CHECK(cold.out.find("pass") != std::string::npos);

    // Warm rerun pulls from the cache and prints identical rows.
    auto warm = run("sweep cli_sweep.json --cache cli_sweep.cache");
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);

    auto js = run("sweep cli_sweep.json --format json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"status\": \"pass\"") != std::string::npos);

    write_file("cli_empty.json", "[]");
    CHECK(run("sweep cli_empty.json").code == 2);
    write_file("cli_garbled.json", "{not json");
    CHECK(run("sweep cli_garbled.json").code == 2);

    std::remove("cli_sweep.json");
    std::remove("cli_sweep.cache");
    std::remove("cli_empty.json");
    std::remove("cli_garbled.json");
}

TEST_CASE("selftest passes") {
    auto r = run("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}
