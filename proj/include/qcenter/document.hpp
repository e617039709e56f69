#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcenter/builders.hpp"
#include "qcenter/fusion.hpp"

namespace qcenter {

enum class DocKind { hopf_structure_constants, classical_group_table, fusion_presentation, cocycle };
std::string to_string(DocKind k);

/// Positioned input error; what() is "source:line:col: message".
struct DocumentError : std::runtime_error {
  DocumentError(const std::string& source, size_t line, size_t col, const std::string& msg);
  std::string source;
  size_t line, col;
  std::string message;
};

struct QGDocument {
  int format_version = 1;
  DocKind kind = DocKind::hopf_structure_constants;
  std::string name;
  std::vector<std::string> notes;

  HopfData hopf;                 // hopf_structure_constants
  GroupTable group;              // classical_group_table
  bool group_algebra = false;    // classical_group_table: C[G] instead of F(G)
  FusionRing fusion;             // fusion_presentation
  std::string base;              // cocycle: path of the base document, relative to this one
  Mat omega;                     // cocycle
  std::shared_ptr<QGDocument> base_document;  // filled by load_document
};

QGDocument parse_document(std::string_view text, const std::string& source = "<input>");
/// Parses a file; a cocycle's base document is loaded relative to it.
QGDocument load_document(const std::string& path);
std::string serialize(const QGDocument& doc);

/// The Hopf data a document describes (hopf or classical kinds; the base for a cocycle).
HopfData document_hopf(const QGDocument& doc);

QGDocument hopf_document(const HopfData& h);
QGDocument group_document(const GroupTable& g, bool group_algebra);
QGDocument fusion_document(const FusionRing& f);
QGDocument cocycle_document(const std::string& name, const std::string& base, const Mat& omega);

}  // namespace qcenter
