// Writes the shipped documents into the directory given as the first argument.
#include <fstream>
#include <iostream>

#include "qcenter/document.hpp"
#include "qcenter/twist.hpp"

using namespace qcenter;

namespace {

bool write(const std::string& dir, const std::string& file, const QGDocument& doc) {
  std::string text = serialize(doc);
  if (serialize(parse_document(text, file)) != text) {
    std::cerr << file << ": serialization does not round-trip\n";
    return false;
  }
  std::ofstream out(dir + "/" + file, std::ios::binary);
  out << text;
  return bool(out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <data-dir>\n";
    return 2;
  }
  std::string dir = argv[1];
  bool ok = true;

  ok &= write(dir, "z4.qg", group_document(cyclic_group(4), false));
  ok &= write(dir, "s3.qg", group_document(symmetric_group3(), false));
  ok &= write(dir, "d4.qg", group_document(dihedral_group4(), false));
  ok &= write(dir, "q8.qg", group_document(quaternion_group(), false));
  ok &= write(dir, "group_algebra_s3.qg", group_document(symmetric_group3(), true));
  ok &= write(dir, "kac_paljutkin.qg", hopf_document(build_kac_paljutkin()));

  QGDocument z2 = hopf_document(function_algebra(cyclic_group(2)));
  z2.name = "F(Z2)";
  ok &= write(dir, "f_z2.qg", z2);
  QGDocument bad = z2;
  bad.name = "corrupted-F(Z2)";
  bad.notes.push_back("counit moved to the wrong basis element");
  std::swap(bad.hopf.counit[0], bad.hopf.counit[1]);
  ok &= write(dir, "corrupted_f_z2.qg", bad);

  ok &= write(dir, "su2.qg", fusion_document(su2_fusion(4)));
  ok &= write(dir, "rep_s3.qg", fusion_document(rep_s3_fusion()));
  ok &= write(dir, "rep_z5.qg", fusion_document(cyclic_fusion(5)));

  auto rd4 = realize(function_algebra(dihedral_group4()));
  auto cd4 = klein_cocycle_d4(rd4);
  ok &= write(dir, "d4_klein_cocycle.qg", cocycle_document(cd4.name, "d4.qg", cd4.omega));
  auto rq8 = realize(function_algebra(quaternion_group()));
  auto cq8 = cyclic_cocycle_q8(rq8);
  ok &= write(dir, "q8_cyclic_cocycle.qg", cocycle_document(cq8.name, "q8.qg", cq8.omega));

  return ok ? 0 : 1;
}
