#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fmr/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string cli = FMR_CLI_PATH;

fs::path workdir() {
    auto dir = fs::temp_directory_path() / "fmr_cli_test";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args, const fs::path& out = {}) {
    std::string cmd = cli + " " + args;
    if (!out.empty()) cmd += " > " + out.string() + " 2>&1";
    else cmd += " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("gen then validate round trips with exit 0") {
    auto dir = workdir();
    auto f = dir / "bin.json";
    CHECK(run("gen binary --n 3 --classes 1,1,2 --s 2 --ring mod:8 -o " + f.string()) == 0);
    CHECK(run("validate " + f.string()) == 0);
    auto sf = fmr::load_system(f.string());
    CHECK(sf.sys.table() == fmr::binary_system(fmr::BaseRing::modular(8), {1, 1, 2}, 2).table());
}

TEST_CASE("validate distinguishes invalid tables from malformed files") {
    auto dir = workdir();
    auto bad = dir / "bad.json";
    write(bad, R"({"ring": {"kind": "modular", "m": 4}, "n": 2,
                   "factors": {"type": "explicit",
                               "table": [[[1,1],[2,1]], [[1,1],[1,1]]]}})");
    CHECK(run("validate " + bad.string()) == 1);
    auto garbled = dir / "garbled.json";
    write(garbled, "{nope");
    CHECK(run("validate " + garbled.string()) == 2);
    CHECK(run("validate " + (dir / "missing.json").string()) == 2);
}

TEST_CASE("iso exit codes follow the verdict") {
    auto dir = workdir();
    auto a = dir / "a.json", b = dir / "b.json", c = dir / "c.json";
    run("gen binary --n 3 --classes 1,1,1 --s 2 --ring mod:8 -o " + a.string());
    run("gen binary --n 3 --classes 1,2,3 --s 2 --ring mod:8 -o " + b.string());
    run("gen binary --n 3 --classes 1,2,2 --s 2 --ring mod:8 -o " + c.string());
    auto d = dir / "d.json";
    run("gen binary --n 3 --classes 2,1,1 --s 2 --ring mod:8 -o " + d.string());
    CHECK(run("iso " + a.string() + " " + b.string()) == 1);
    CHECK(run("iso " + c.string() + " " + d.string()) == 0);
    // s = 0 over Z/2: equal descriptors are inconclusive.
    auto e = dir / "e.json", f = dir / "f.json";
    run("gen binary --n 2 --classes 1,2 --s 0 --ring mod:2 -o " + e.string());
    run("gen binary --n 2 --classes 2,1 --s 0 --ring mod:2 -o " + f.string());
    CHECK(run("iso " + e.string() + " " + f.string()) == 3);
    CHECK(run("iso " + a.string() + " " + (dir / "missing.json").string()) == 2);
}

TEST_CASE("canon prints the descriptor and emits a JSON envelope") {
    auto dir = workdir();
    auto f = dir / "canon_in.json";
    run("gen binary --n 3 --classes 2,2,1 --s 2 --ring mod:8 -o " + f.string());
    auto out = dir / "canon_out.json";
    CHECK(run("canon " + f.string() + " --json", out) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["command"] == "canon");
    CHECK(j["verdict"] == "canonicalized");
    CHECK(j["data"]["descriptor"]["blocks"] == json::array({2, 1}));
    CHECK(j["data"]["descriptor"]["s"] == 2);
}

TEST_CASE("oracle-iso and radical on small rings") {
    auto dir = workdir();
    auto a = dir / "oa.json", b = dir / "ob.json";
    run("gen binary --n 2 --classes 1,2 --s 2 --ring mod:4 -o " + a.string());
    run("gen binary --n 2 --classes 2,1 --s 2 --ring mod:4 -o " + b.string());
    CHECK(run("oracle-iso " + a.string() + " " + b.string() + " --deterministic") == 0);
    auto t = dir / "ot.json";
    run("gen trivial --n 2 --ring mod:4 -o " + t.string());
    CHECK(run("oracle-iso " + a.string() + " " + t.string()) == 1);

    auto out = dir / "rad_out.json";
    CHECK(run("radical " + t.string() + " --json", out) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["data"]["radical_size"] == 16);
    CHECK(j["data"]["quotient_size"] == 16);

    auto out2 = dir / "dec_out.json";
    CHECK(run("decompose " + a.string() + " --json", out2) == 0);
    auto j2 = json::parse(slurp(out2));
    CHECK(j2["data"]["factor_sizes"] == json::array({2, 2}));

    // Over the limit.
    auto big = dir / "big.json";
    run("gen trivial --n 3 --ring mod:4 -o " + big.string());
    CHECK(run("radical " + big.string()) == 2);
}

TEST_CASE("probe assoc reports the seed and passes on certified input") {
    auto dir = workdir();
    auto f = dir / "probe_in.json";
    run("gen binary --n 3 --classes 1,1,2 --s 2 --ring mod:8 -o " + f.string());
    auto out = dir / "probe_out.json";
    CHECK(run("probe assoc --file " + f.string() + " --samples 200 --seed 7 --json", out) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["seed"] == 7);
    CHECK(j["verdict"] == "associative");
}
