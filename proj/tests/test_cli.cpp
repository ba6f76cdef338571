#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "etri/analysis.hpp"
#include "etri/surface.hpp"

#ifndef ETRI_CLI
#error "ETRI_CLI must name the command line binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(ETRI_CLI) + " " + args + " 2>&1";
    if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | " + cmd;
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / "etri_cli_test";
    fs::create_directories(d);
    return d;
}

std::string write(const std::string& name, const std::string& text) {
    fs::path f = scratch() / name;
    std::ofstream(f) << text;
    return f.string();
}

}  // namespace

TEST_CASE("validate exit codes") {
    CHECK(run("validate 'catalog:3.19/(4,0,0,0)'").rc == 0);
    Run bad = run("validate " + write("bad.tri", "triangles: 123 124 125 134 135\n"));
    CHECK(bad.rc == 2);
    CHECK(bad.out.find("manifold_edges") != std::string::npos);
    CHECK(run("validate " + write("junk.tri", "triangles: 12\n")).rc == 2);
    CHECK(run("validate 'catalog:9.9/(9,9,9,9)'").rc != 0);
}

TEST_CASE("analyze from stdin and as json") {
    Run t = run("analyze -", "triangles: 123 124 134 234\\n");
    CHECK(t.rc == 0);
    CHECK(t.out.find("(4,0,0,0)") != std::string::npos);
    Run j = run("analyze 'catalog:2.2/(1,1,1,2)_4' --format json");
    CHECK(j.rc == 0);
    CHECK(j.out.find("\"beta4\": 1") != std::string::npos);
    CHECK(j.out.find("(1,1,1,2)_4 β4=1 β5=1") != std::string::npos);
}

TEST_CASE("builders and formulas") {
    Run b = run("build p030 --h 2 --k 1");
    CHECK(b.rc == 0);
    etri::Surface s = etri::parse_face_list(b.out.substr(b.out.find("triangles:")));
    CHECK(etri::classify(s).a6 == 4);
    CHECK(run("build p030 --h 3 --k 3").rc == 3);
    Run f = run("formula --name 030 --params h=4");
    CHECK(f.rc == 0);
    CHECK(f.out.find("N=12") != std::string::npos);
    CHECK(run("build p200 --k 2 --r 2").out.find("(2,0,0,9)_4") != std::string::npos);
}

TEST_CASE("rewrite, glue and fuller") {
    Run r = run("rewrite 'catalog:3.3/(0,2,8,0)' --kind C --site 4,9,3,2,5");
    CHECK(r.rc == 0);
    CHECK(r.out.find("(0,2,8,1)") != std::string::npos);
    Run g = run("glue 'catalog:2.3/(1,1,1,5)_5' 'catalog:2.3/(1,1,1,7)_5' --method A");
    CHECK(g.rc == 0);
    CHECK(g.out.find("(2,3,0,19)") != std::string::npos);
    Run e = run("fuller 'catalog:3.16/(2,3,0,0)' --mode edge --format json");
    CHECK(e.rc == 0);
    CHECK(e.out.find("(2,3,0,9)") != std::string::npos);
}

TEST_CASE("existence and the open cell code") {
    Run u = run("exists --type 1,0,9 --n6 4");
    CHECK(u.rc == 4);
    CHECK(u.out.find("Unknown") != std::string::npos);
    Run e = run("exists --type 2,2,2 --n6 3 --witness " + (scratch() / "w.tri").string());
    CHECK(e.rc == 0);
    CHECK(run("validate " + (scratch() / "w.tri").string()).rc == 0);
}

TEST_CASE("atlas is reproducible and its witnesses validate") {
    fs::path dir = scratch() / "witness";
    fs::remove_all(dir);
    Run a = run("atlas --max-n6 8 --enum-cap 8 --workers 2 --witness-dir " + dir.string());
    Run b = run("atlas --max-n6 8 --enum-cap 8 --workers 1");
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        etri::Surface s = etri::parse_face_list(text);
        CHECK(etri::validate(s).ok());
        // file names carry the cell, e.g. 2-2-2_5.tri
        std::string name = entry.path().stem().string();
        CHECK(name == std::to_string(etri::classify(s).a3) + "-" + std::to_string(etri::classify(s).a4) + "-" +
                           std::to_string(etri::classify(s).a5) + "_" + std::to_string(etri::classify(s).a6));
        ++files;
    }
    CHECK(files > 100);
}

TEST_CASE("export") {
    Run o = run("export 'catalog:3.19/(4,0,0,0)' --as off");
    CHECK(o.rc == 0);
    CHECK(o.out.rfind("OFF\n4 4 6\n", 0) == 0);
    CHECK(run("export 'catalog:3.19/(4,0,0,0)' --as stl").rc == 3);
}
