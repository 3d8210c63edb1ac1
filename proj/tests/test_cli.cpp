#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "pcf/gen.hpp"
#include "pcf/io.hpp"

using namespace pcf;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(PCF_BIN) + " " + args + " >/dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(raw));
    return WEXITSTATUS(raw);
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/pcf_cli_") + name;
}

}  // namespace

TEST_CASE("cli exit codes") {
    // 0: success
    CHECK(run("chi --named C5") == 0);
    CHECK(run("gen --class o1p --n 8 --seed 1") == 0);
    CHECK(run("detect --named C6 --id T8") == 0);
    CHECK(run("color --named C12 --class girth12 --k 2 --seed 4") == 0);
    CHECK(run("refute --named C5 --k 2 --universe 4") == 0);

    // 1: property violation / not found
    CHECK(run("solve --named C5 --uniform --k 4") == 1);
    CHECK(run("detect --named C5 --id T8") == 1);
    CHECK(run("refute --named P4 --k 2 --universe 4") == 1);

    // 2: usage and I/O errors
    CHECK(run("chi /no/such/file") == 2);
    CHECK(run("chi --named Q9") == 2);
    CHECK(run("color --named C6 --class bogus --k 2") == 2);
    CHECK(run("solve --named C6 --no-such-flag") == 2);
    CHECK(run("") == 2);  // a subcommand is required
}

TEST_CASE("cli verify distinguishes good and bad colorings") {
    Graph c6 = gen_cycle(6);
    std::string gpath = tmp_path("c6.txt");
    write_file(gpath, emit_edge_list(c6));

    Coloring good;
    for (Vertex v : c6.vertices()) good.set(v, 1 + int(v % 3));
    std::string good_path = tmp_path("good.json");
    write_file(good_path, coloring_to_json(good));
    CHECK(run("verify " + gpath + " " + good_path) == 0);

    Coloring bad;  // proper but starved: alternating 2-coloring
    for (Vertex v : c6.vertices()) bad.set(v, 1 + int(v % 2));
    std::string bad_path = tmp_path("bad.json");
    write_file(bad_path, coloring_to_json(bad));
    CHECK(run("verify " + gpath + " " + bad_path) == 1);
}

TEST_CASE("cli budget env maps exhaustion to an I/O-style failure") {
    std::string cmd = "PCF_BUDGET=3 " + std::string(PCF_BIN) +
                      " solve --named C12 --uniform --k 2 >/dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(raw));
    CHECK(WEXITSTATUS(raw) == 2);
}

TEST_CASE("cli gen writes instance and certificate files") {
    std::string out = tmp_path("inst.txt");
    CHECK(run("gen --class girth12 --n 4 --seed 9 -o " + out) == 0);
    Graph g = parse_edge_list_string(read_file(out), out);
    CHECK(*g.girth() >= 12);
    CHECK(read_file(out + ".cert.json").find("subdivisions_per_edge") != std::string::npos);
}
