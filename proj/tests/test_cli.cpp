#include <doctest.h>

#include "hopfmorita/cli.hpp"
#include "hopfmorita/io.hpp"
#include "hopfmorita/morita.hpp"

#include <fstream>
#include <sstream>

using namespace hm;
using io::Json;

namespace {

const std::string fixtures = FIXTURE_DIR;
const std::string z2 = fixtures + "/z2_swap.json";

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

io::Workspace reload(const std::string& text) { return io::load_manifest_json(Json::parse(text)); }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hmtool_test_" + name);
}

// Structure-constant comparison of phi: A -> B given by images of basis
// elements, done entry by entry without the library's morphism checker.
bool is_star_isomorphism(const StarAlgebra& a, const StarAlgebra& b, const std::vector<Vec>& img) {
    const std::size_t d = a.dim;
    if (b.dim != d || img.size() != d) return false;
    auto apply = [&](const Vec& x) {
        Vec y(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) y[k] += x[i] * img[i][k];
        return y;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (apply(a.mult[i * d + j]) != b.mul(img[i], img[j])) return false;
    for (std::size_t i = 0; i < d; ++i)
        if (apply(a.star(a.basis(i))) != b.star(img[i])) return false;
    if (apply(a.unit) != b.unit) return false;
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.set_col(i, img[i]);
    return rank(m) == d;
}

}  // namespace

TEST_CASE("check exit codes follow the contract") {
    Run ok = run({"check", z2});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("passed:") != std::string::npos);

    Run bad = run({"check", fixtures + "/corrupt_antipode.json"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL Z3_bad_antipode: left antipode") != std::string::npos);

    Run parse = run({"check", fixtures + "/malformed_scalar.json"});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("1/2+q") != std::string::npos);

    CHECK(run({"check", fixtures + "/missing.json"}).code == 2);
}

TEST_CASE("json reports are machine readable") {
    Run r = run({"check", fixtures + "/corrupt_counit.json", "--format", "json"});
    CHECK(r.code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["passed"] == false);
    bool named = false;
    for (const auto& it : j["items"]) named = named || (it["name"] == "Z3_bad_counit: left counit" && it["ok"] == false);
    CHECK(named);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", z2, "--format", "xml"}).code == 2);
    CHECK(run({"compute", "pushout", z2}).code == 2);
    CHECK(run({"crossed"}).code == 2);
    CHECK(run({"groups", "--action", z2}).code == 2);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("verify runs suites deterministically") {
    Run a = run({"verify", "appendix-groups", "--seed", "0"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"verify", "appendix-groups", "--seed", "0"}).out);
    CHECK(run({"verify", "crossed-isos"}).code == 0);
    Run unknown = run({"verify", "no-such-suite"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("kernel-pic") != std::string::npos);
}

TEST_CASE("compute crossed-algebra on z2_swap is isomorphic to the M2 fixture") {
    Run r = run({"compute", "crossed-algebra", z2, "swap"});
    REQUIRE(r.code == 0);
    io::Workspace ws = reload(r.out);
    CHECK(io::check_workspace(ws).passed());
    auto c = ws.algebra("crossed");
    auto m2 = io::load_manifest(fixtures + "/m2.json").algebra("M2");
    // basis e_a (x) g in order (e1,e), (e1,t), (e2,e), (e2,t); e1 j(t) = E12
    const std::vector<Vec> img = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    CHECK(is_star_isomorphism(*c, *m2, img));
    // the swapped assignment is not multiplicative
    CHECK_FALSE(is_star_isomorphism(*c, *m2, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}));
    CHECK(ws.has(io::Kind::action, "canonical"));

    Run alias = run({"crossed", "--action", z2, "--name", "swap"});
    CHECK(alias.code == 0);
    CHECK(alias.out == r.out);
}

TEST_CASE("compute tensor of standard and its conjugate is the identity bimodule") {
    Run r = run({"compute", "tensor", z2, "standard", "conjugate_standard"});
    REQUIRE(r.code == 0);
    io::Workspace ws = reload(r.out);
    auto t = ws.bimodule("tensor");
    CHECK(t->dim == 8);
    auto id = identity_bimodule(ws.action("swap_m2"));
    IsoSearch s = find_bimodule_isomorphism(*t, *id);
    REQUIRE(s.outcome == SearchOutcome::found);
    CHECK(check_module_map(*t, *id, *s.witness).passed());

    CHECK(run({"compute", "tensor", z2, "standard", "standard"}).code == 1);
    CHECK(run({"compute", "tensor", z2, "standard", "nobody"}).code == 2);
    CHECK(run({"compute", "tensor", z2, "standard"}).code == 2);
}

TEST_CASE("compute outputs reload and --out matches stdout") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"crossed-bimodule", "standard"}, {"conjugate", "conjugate_standard"}, {"characters", "swap"}};
    for (const auto& [kind, name] : cases) {
        CAPTURE(kind);
        Run r = run({"compute", kind, z2, name});
        REQUIRE(r.code == 0);
        CHECK(io::check_workspace(reload(r.out)).passed());
        CHECK(r.out == run({"compute", kind, z2, name}).out);
    }
    Run conv = run({"compute", "convolution", z2, "sign", "sign"});
    REQUIRE(conv.code == 0);
    io::Workspace cw = reload(conv.out);
    // sign * sign is the unit twist
    CHECK(cw.twist("convolution").m == Matrix::from_rows({{1, 1}, {1, 1}}, 2));

    const auto path = temp_file("conj.json");
    CHECK(run({"compute", "conjugate", z2, "standard", "--out", path.string()}).code == 0);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == run({"compute", "conjugate", z2, "standard"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("compute gns and hat documents") {
    Run g = run({"compute", "gns", z2});
    REQUIRE(g.code == 0);
    Json j = Json::parse(g.out);
    CHECK(j["dim"] == 2);
    CHECK(j["pi"].size() == 2);
    CHECK(j["h"].size() == 2);
    CHECK(j["vacuum"].size() == 2);

    Run h = run({"compute", "hat", z2});
    REQUIRE(h.code == 0);
    Json hj = Json::parse(h.out);
    CHECK(hj["dim"] == 2);
    CHECK(hj["images"].size() == 4);
}

TEST_CASE("crossed bimodule front end") {
    Run r = run({"crossed", "--bimodule", z2, "--name", "standard"});
    REQUIRE(r.code == 0);
    io::Workspace ws = reload(r.out);
    CHECK(check_equivalence_bimodule(*ws.bimodule("crossed"), true).passed());
    // several bimodules and no --name
    CHECK(run({"crossed", "--bimodule", z2}).code == 2);
}

TEST_CASE("groups subcommands") {
    Run chars = run({"groups", "--action", z2, "--name", "swap", "enumerate-characters"});
    REQUIRE(chars.code == 0);
    io::Workspace ws = reload(chars.out);
    // Z2 has two characters and both are constant central twists
    CHECK(ws.has(io::Kind::twist, "chi0"));
    CHECK(ws.has(io::Kind::twist, "chi1"));
    CHECK_FALSE(ws.has(io::Kind::twist, "chi2"));

    const std::string sign = fixtures + "/z2_swap/sign.json";
    CHECK(run({"groups", "--action", z2, "--name", "swap", "check-twist", sign}).code == 0);

    const auto bad = temp_file("bad_twist.json");
    std::ofstream(bad) << R"({"hopf": "Z2", "algebra": "C2", "columns": [["2","1"], ["1","1"]]})";
    Run b = run({"groups", "--action", z2, "--name", "swap", "check-twist", bad.string()});
    CHECK(b.code == 1);
    CHECK(b.out.find("FAIL normalization") != std::string::npos);
    std::filesystem::remove(bad);

    Run u = run({"groups", "--action", z2, "--name", "swap", "u0-equal", sign, sign});
    CHECK(u.code == 0);
    CHECK(u.out == "equal\n");
    // sign = hat(e1 - e2) lies in the image of hat, so it is trivial in U0
    const auto unit = temp_file("unit_twist.json");
    std::ofstream(unit) << R"({"hopf": "Z2", "algebra": "C2", "columns": [["1","1"], ["1","1"]]})";
    CHECK(run({"groups", "--action", z2, "--name", "swap", "u0-equal", sign, unit.string()}).code == 0);
    std::filesystem::remove(unit);
    CHECK(run({"groups", "--action", z2, "--name", "swap", "check-twist", fixtures + "/none.json"}).code == 2);
}
