#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcenter/document.hpp"
#include "qcenter/shell.hpp"
#include "qcenter/twist.hpp"

using namespace qcenter;

namespace {

const std::string data_dir = QCENTER_DATA_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args)
    if (a.size() > 3 && a.substr(a.size() - 3) == ".qg" && a.find('/') == std::string::npos) a = data_dir + "/" + a;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

DocumentError parse_error(const std::string& text) {
  try {
    parse_document(text, "t.qg");
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("document parsed");
  return DocumentError("", 0, 0, "");
}

const char* header = "format 1\nkind hopf_structure_constants\nname x\n";

}  // namespace

TEST_CASE("every shipped document round-trips") {
  size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
    if (entry.path().extension() != ".qg") continue;
    CAPTURE(entry.path().string());
    std::string text = read_file(entry.path().string());
    CHECK(serialize(parse_document(text, entry.path().string())) == text);
    ++n;
  }
  CHECK(n >= 12);
}

TEST_CASE("shipped documents match the builders") {
  CHECK(read_file(data_dir + "/q8.qg") == serialize(group_document(quaternion_group(), false)));
  CHECK(read_file(data_dir + "/kac_paljutkin.qg") == serialize(hopf_document(build_kac_paljutkin())));
  CHECK(read_file(data_dir + "/su2.qg") == serialize(fusion_document(su2_fusion(4))));
  auto d4 = load_document(data_dir + "/d4_klein_cocycle.qg");
  auto r = realize(function_algebra(dihedral_group4()));
  CHECK(d4.omega == klein_cocycle_d4(r).omega);
  REQUIRE(d4.base_document);
  CHECK(d4.base_document->name == "D4");
}

TEST_CASE("scalar literals survive serialization") {
  auto h = build_kac_paljutkin();
  auto back = parse_document(serialize(hopf_document(h))).hopf;
  CHECK(back.mult == h.mult);
  CHECK(back.comult == h.comult);
  CHECK(back.star == h.star);
  CHECK(back.haar == h.haar);
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_error(std::string(header) + "dim 2\nmult\n  0 0 0 1/2-z4^x\nend\n");
  CHECK(e.line == 6);
  CHECK(e.col == 16);
  CHECK(std::string(e.what()).rfind("t.qg:6:16: ", 0) == 0);

  e = parse_error("format 2\n");
  CHECK(e.line == 1);
  CHECK(e.col == 8);

  e = parse_error(std::string(header) + "dim 2\nmult\n  0 0 5 1\nend\n");
  CHECK(e.line == 6);
  CHECK(e.col == 7);
  CHECK(contains(e.message, "out of range"));

  e = parse_error(std::string(header) + "dim 2\nmult\n  0 0 0 1\n");
  CHECK(e.line == 5);
  CHECK(contains(e.message, "not closed"));

  e = parse_error("format 1\nkind fusion_presentation\nname f\nlabel A 1\nunit A\nrule A A = B\n");
  CHECK(e.line == 6);
  CHECK(e.col == 12);

  e = parse_error("format 1\nkind classical_group_table\nname g\nlabels a b\ntable\n 0 1\n 1 1\nend\n");
  CHECK(contains(e.message, "group"));
}

TEST_CASE("center and chain-group commands") {
  auto q8 = cli({"center", "q8.qg"});
  CHECK(q8.code == exit_ok);
  CHECK(contains(q8.out, "(dim A, dim Lhat, dim inn) = (8, 2, 4)"));
  auto kp = cli({"--format", "structured", "center", "kac_paljutkin.qg"});
  CHECK(kp.code == exit_ok);
  CHECK(contains(kp.out, "\"Lhat\": 2"));
  auto su2 = cli({"chain-group", "su2.qg"});
  CHECK(su2.code == exit_ok);
  CHECK(contains(su2.out, "chain group: Z/2"));
  CHECK(contains(su2.out, "V1 -> 1"));
  CHECK(contains(su2.out, "degree zero: V0 V2 V4"));
  CHECK(contains(cli({"chain-group", "rep_s3.qg"}).out, "chain group: trivial"));
  CHECK(contains(cli({"chain-group", "rep_z5.qg"}).out, "chain group: Z/5"));
}

TEST_CASE("validate") {
  auto ok = cli({"validate", "f_z2.qg"});
  CHECK(ok.code == exit_ok);
  auto bad = cli({"validate", "corrupted_f_z2.qg"});
  CHECK(bad.code == exit_input_error);
  CHECK(contains(bad.err, "axiom 'counit'"));
  CHECK(cli({"center", "corrupted_f_z2.qg"}).code == exit_input_error);
  CHECK(cli({"validate", "q8_cyclic_cocycle.qg"}).code == exit_ok);
}

TEST_CASE("subgroup, coideal and twist commands") {
  auto n = cli({"normal", "s3.qg", "--subgroup", "(123)"});
  CHECK(n.code == exit_ok);
  CHECK(contains(n.out, "normal: yes"));
  auto w = cli({"wang", "s3.qg", "--subgroup", "(12)"});
  CHECK(w.code == exit_ok);
  CHECK(contains(w.out, "Wang normal: no"));
  auto z = cli({"wang", "q8.qg", "--subgroup", "-1"});
  CHECK(contains(z.out, "Wang normal: yes"));
  CHECK(cli({"normal", "s3.qg", "--subgroup", "(99)"}).code == exit_input_error);
  CHECK(cli({"normal", "kac_paljutkin.qg", "--subgroup", "x"}).code == exit_input_error);
  CHECK(cli({"coideal", "d4.qg"}).code == exit_ok);
  auto t = cli({"twist", "d4_klein_cocycle.qg"});
  CHECK(t.code == exit_ok);
  CHECK(contains(t.out, "dim Lhat before 2, after 2"));
  CHECK(cli({"inn", "kac_paljutkin.qg"}).code == exit_ok);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli({}).code == exit_input_error);
  CHECK(cli({"frobnicate"}).code == exit_input_error);
  CHECK(cli({"center"}).code == exit_input_error);
  CHECK(cli({"center", "missing.qg"}).code == exit_input_error);
  CHECK(cli({"--format", "xml", "center", "q8.qg"}).code == exit_input_error);
  auto big = cli({"--max-dim", "4", "center", "q8.qg"});
  CHECK(big.code == exit_input_error);
  CHECK(contains(big.err, "--max-dim"));
  auto help = cli({"--help"});
  CHECK(help.code == exit_ok);
  CHECK(contains(help.out, "chain-group"));
}

TEST_CASE("structured output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"--format", "structured", "--seed", "9", "coideal", "kac_paljutkin.qg"},
                                        std::vector<std::string>{"--format", "structured", "center", "d4.qg"}}) {
    auto a = cli(args), b = cli(args);
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
  }
  auto c = cli({"--format", "structured", "--seed", "10", "coideal", "kac_paljutkin.qg"});
  CHECK(c.code == exit_ok);
}

TEST_CASE("the installed binary reports exit codes") {
  std::string bin = QCENTER_CLI;
  auto run = [&](const std::string& args) {
    int status = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  CHECK(run("center " + data_dir + "/q8.qg") == 0);
  CHECK(run("validate " + data_dir + "/corrupted_f_z2.qg") == 2);
  CHECK(run("--format structured battery") == 0);
}
