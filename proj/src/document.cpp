#include "qcenter/document.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qcenter {

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::hopf_structure_constants: return "hopf_structure_constants";
    case DocKind::classical_group_table: return "classical_group_table";
    case DocKind::fusion_presentation: return "fusion_presentation";
    case DocKind::cocycle: return "cocycle";
  }
  return "";
}

DocumentError::DocumentError(const std::string& source, size_t line, size_t col, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      source(source),
      line(line),
      col(col),
      message(msg) {}

namespace {

struct Tok {
  std::string text;
  size_t col;
};

struct Line {
  size_t no;
  std::vector<Tok> toks;
  std::string raw;
};

class Parser {
 public:
  Parser(std::string_view text, std::string source) : source_(std::move(source)) {
    size_t no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string raw(text.substr(pos, end - pos));
      ++no;
      pos = end + 1;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      Line line{no, {}, raw};
      size_t i = 0;
      while (i < raw.size()) {
        if (raw[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
          ++i;
          continue;
        }
        size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '#') ++j;
        line.toks.push_back({raw.substr(i, j - i), i + 1});
        i = j;
      }
      if (!line.toks.empty()) lines_.push_back(std::move(line));
      if (end == text.size()) break;
    }
  }

  [[noreturn]] void fail(const Line& l, size_t col, const std::string& msg) const {
    throw DocumentError(source_, l.no, col, msg);
  }
  [[noreturn]] void fail(const Line& l, const Tok& t, const std::string& msg) const { fail(l, t.col, msg); }
  [[noreturn]] void fail_eof(const std::string& msg) const {
    size_t no = lines_.empty() ? 1 : lines_.back().no + 1;
    throw DocumentError(source_, no, 1, msg);
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() {
    if (done()) fail_eof("unexpected end of document");
    return lines_[pos_++];
  }

  void expect_count(const Line& l, size_t n) const {
    if (l.toks.size() < n) fail(l, l.raw.size() + 1, "expected " + std::to_string(n) + " fields");
    if (l.toks.size() > n) fail(l, l.toks[n], "unexpected token '" + l.toks[n].text + "'");
  }

  size_t index(const Line& l, const Tok& t, size_t bound) const {
    size_t v = 0;
    if (t.text.empty() || t.text.size() > 9) fail(l, t, "expected an index");
    for (char c : t.text) {
      if (c < '0' || c > '9') fail(l, t, "expected an index, found '" + t.text + "'");
      v = v * 10 + size_t(c - '0');
    }
    if (v >= bound) fail(l, t, "index " + t.text + " out of range (bound " + std::to_string(bound) + ")");
    return v;
  }

  CycloScalar scalar(const Line& l, const Tok& t) const {
    try {
      return CycloScalar::parse(t.text);
    } catch (const ScalarParseError& e) {
      fail(l, t.col + e.offset, std::string("bad scalar: ") + e.what());
    } catch (const std::exception& e) {
      fail(l, t, std::string("bad scalar: ") + e.what());
    }
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<Line> lines_;
  size_t pos_ = 0;
};

// Reads entry lines until "end"; calls f for each.
template <class F>
void section(Parser& p, const Line& head, F&& f) {
  while (true) {
    if (p.done()) p.fail(head, head.toks[0], "section '" + head.toks[0].text + "' is not closed by 'end'");
    const Line& l = p.next();
    if (l.toks[0].text == "end") {
      p.expect_count(l, 1);
      return;
    }
    f(l);
  }
}

void parse_hopf(Parser& p, QGDocument& doc) {
  HopfData& h = doc.hopf;
  h.name = doc.name;
  size_t d = 0;
  std::set<std::string> seen;
  std::set<std::vector<size_t>> entries;
  while (!p.done()) {
    const Line& l = p.next();
    const std::string& key = l.toks[0].text;
    if (key == "dim") {
      if (d) p.fail(l, l.toks[0], "duplicate 'dim'");
      p.expect_count(l, 2);
      d = p.index(l, l.toks[1], 1u << 12);
      if (d == 0) p.fail(l, l.toks[1], "dimension must be positive");
      h.dim = d;
      h.mult.assign(d, std::vector<Vec>(d, Vec(d)));
      h.unit = h.counit = h.haar = Vec(d);
      h.comult.assign(d, Mat(d, d));
      h.antipode = h.star = Mat(d, d);
      continue;
    }
    static const std::map<std::string, size_t> arity{{"mult", 3},     {"comult", 3}, {"unit", 1},
                                                     {"counit", 1},   {"haar", 1},   {"antipode", 2},
                                                     {"star", 2}};
    auto it = arity.find(key);
    if (it == arity.end()) p.fail(l, l.toks[0], "unknown section '" + key + "'");
    if (!d) p.fail(l, l.toks[0], "'dim' must precede the sections");
    if (!seen.insert(key).second) p.fail(l, l.toks[0], "duplicate section '" + key + "'");
    p.expect_count(l, 1);
    size_t n = it->second;
    section(p, l, [&](const Line& e) {
      p.expect_count(e, n + 1);
      std::vector<size_t> ix;
      for (size_t i = 0; i < n; ++i) ix.push_back(p.index(e, e.toks[i], d));
      std::vector<size_t> key_ix = ix;
      key_ix.insert(key_ix.begin(), it->first.size() * 100 + it->first[0]);
      if (!entries.insert(key_ix).second) p.fail(e, e.toks[0], "duplicate entry");
      CycloScalar v = p.scalar(e, e.toks[n]);
      if (key == "mult") h.mult[ix[0]][ix[1]][ix[2]] = v;
      else if (key == "comult") h.comult[ix[0]](ix[1], ix[2]) = v;
      else if (key == "unit") h.unit[ix[0]] = v;
      else if (key == "counit") h.counit[ix[0]] = v;
      else if (key == "haar") h.haar[ix[0]] = v;
      else if (key == "antipode") h.antipode(ix[1], ix[0]) = v;
      else h.star(ix[1], ix[0]) = v;
    });
  }
  if (!d) p.fail_eof("missing 'dim'");
  for (const char* s : {"mult", "unit", "comult", "counit", "antipode", "star", "haar"})
    if (!seen.count(s)) p.fail_eof(std::string("missing section '") + s + "'");
}

void parse_group(Parser& p, QGDocument& doc) {
  GroupTable& g = doc.group;
  g.name = doc.name;
  bool have_table = false;
  while (!p.done()) {
    const Line& l = p.next();
    const std::string& key = l.toks[0].text;
    if (key == "labels") {
      if (!g.labels.empty()) p.fail(l, l.toks[0], "duplicate 'labels'");
      if (l.toks.size() < 2) p.fail(l, l.raw.size() + 1, "expected labels");
      for (size_t i = 1; i < l.toks.size(); ++i) g.labels.push_back(l.toks[i].text);
    } else if (key == "algebra") {
      p.expect_count(l, 2);
      if (l.toks[1].text == "function") doc.group_algebra = false;
      else if (l.toks[1].text == "group") doc.group_algebra = true;
      else p.fail(l, l.toks[1], "expected 'function' or 'group'");
    } else if (key == "table") {
      if (g.labels.empty()) p.fail(l, l.toks[0], "'labels' must precede the table");
      if (have_table) p.fail(l, l.toks[0], "duplicate table");
      p.expect_count(l, 1);
      have_table = true;
      size_t n = g.labels.size();
      section(p, l, [&](const Line& e) {
        if (g.mult.size() == n) p.fail(e, e.toks[0], "too many table rows");
        p.expect_count(e, n);
        std::vector<size_t> row;
        for (const auto& t : e.toks) row.push_back(p.index(e, t, n));
        g.mult.push_back(std::move(row));
      });
      if (g.mult.size() != n) p.fail(l, l.toks[0], "table needs " + std::to_string(n) + " rows");
      try {
        validate_group(g);
      } catch (const std::invalid_argument& e) {
        p.fail(l, l.toks[0], e.what());
      }
    } else {
      p.fail(l, l.toks[0], "unknown keyword '" + key + "'");
    }
  }
  if (!have_table) p.fail_eof("missing 'table'");
}

void parse_fusion(Parser& p, QGDocument& doc) {
  FusionRing& f = doc.fusion;
  f.name = doc.name;
  std::map<std::string, size_t> index;
  bool have_unit = false;
  std::vector<std::pair<const Line*, size_t>> pending;  // rule lines, resolved after labels
  std::vector<Line> rule_lines, dual_lines;
  const Line* unit_line = nullptr;
  Line unit_copy;
  while (!p.done()) {
    const Line& l = p.next();
    const std::string& key = l.toks[0].text;
    if (key == "complete") {
      p.expect_count(l, 2);
      if (l.toks[1].text != "true" && l.toks[1].text != "false") p.fail(l, l.toks[1], "expected true or false");
      f.presentation_complete = l.toks[1].text == "true";
    } else if (key == "label") {
      p.expect_count(l, 3);
      if (index.count(l.toks[1].text)) p.fail(l, l.toks[1], "duplicate label '" + l.toks[1].text + "'");
      size_t dim = p.index(l, l.toks[2], 1u << 30);
      if (dim == 0) p.fail(l, l.toks[2], "dimension must be positive");
      index[l.toks[1].text] = f.labels.size();
      f.labels.push_back(l.toks[1].text);
      f.dims.push_back(int64_t(dim));
    } else if (key == "unit") {
      p.expect_count(l, 2);
      if (have_unit) p.fail(l, l.toks[0], "duplicate 'unit'");
      have_unit = true;
      unit_copy = l;
      unit_line = &unit_copy;
    } else if (key == "dual") {
      p.expect_count(l, 3);
      dual_lines.push_back(l);
    } else if (key == "rule") {
      rule_lines.push_back(l);
    } else {
      p.fail(l, l.toks[0], "unknown keyword '" + key + "'");
    }
  }
  if (f.labels.empty()) p.fail_eof("no labels");
  if (!unit_line) p.fail_eof("missing 'unit'");
  auto label = [&](const Line& l, const Tok& t) {
    auto it = index.find(t.text);
    if (it == index.end()) p.fail(l, t, "unknown label '" + t.text + "'");
    return it->second;
  };
  size_t n = f.labels.size();
  f.unit = label(*unit_line, unit_line->toks[1]);
  f.dual.resize(n);
  for (size_t i = 0; i < n; ++i) f.dual[i] = i;
  for (const auto& l : dual_lines) {
    size_t a = label(l, l.toks[1]), b = label(l, l.toks[2]);
    f.dual[a] = b;
    f.dual[b] = a;
  }
  for (const auto& l : rule_lines) {
    // rule A B = [m*]C + [m*]D ...
    if (l.toks.size() < 5 || l.toks[3].text != "=") p.fail(l, l.toks.size() > 3 ? l.toks[3].col : l.raw.size() + 1, "expected 'rule A B = C + ...'");
    size_t a = label(l, l.toks[1]), b = label(l, l.toks[2]);
    if (f.rules.count({a, b})) p.fail(l, l.toks[1], "duplicate rule");
    std::vector<uint64_t> row(n, 0);
    for (size_t i = 4; i < l.toks.size(); ++i) {
      if ((i - 4) % 2 == 1) {
        if (l.toks[i].text != "+") p.fail(l, l.toks[i], "expected '+'");
        continue;
      }
      const Tok& t = l.toks[i];
      uint64_t m = 1;
      std::string name = t.text;
      size_t star = name.find('*');
      if (star != std::string::npos) {
        Tok mt{name.substr(0, star), t.col};
        m = p.index(l, mt, 1u << 30);
        if (m == 0) p.fail(l, t, "multiplicity must be positive");
        name = name.substr(star + 1);
      }
      size_t k = label(l, Tok{name, t.col + (star == std::string::npos ? 0 : star + 1)});
      row[k] += m;
    }
    if (l.toks.size() % 2 == 0) p.fail(l, l.raw.size() + 1, "rule ends with '+'");
    f.rules[{a, b}] = std::move(row);
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    p.fail_eof(e.what());
  }
}

void parse_cocycle(Parser& p, QGDocument& doc) {
  size_t n = 0;
  bool have_matrix = false;
  while (!p.done()) {
    const Line& l = p.next();
    const std::string& key = l.toks[0].text;
    if (key == "base") {
      p.expect_count(l, 2);
      doc.base = l.toks[1].text;
    } else if (key == "size") {
      p.expect_count(l, 2);
      n = p.index(l, l.toks[1], 1u << 12);
      if (n == 0) p.fail(l, l.toks[1], "size must be positive");
    } else if (key == "matrix") {
      if (!n) p.fail(l, l.toks[0], "'size' must precede the matrix");
      p.expect_count(l, 1);
      have_matrix = true;
      doc.omega = Mat(n, n);
      size_t row = 0;
      section(p, l, [&](const Line& e) {
        if (row == n) p.fail(e, e.toks[0], "too many matrix rows");
        p.expect_count(e, n);
        for (size_t j = 0; j < n; ++j) doc.omega(row, j) = p.scalar(e, e.toks[j]);
        ++row;
      });
      if (row != n) p.fail(l, l.toks[0], "matrix needs " + std::to_string(n) + " rows");
    } else {
      p.fail(l, l.toks[0], "unknown keyword '" + key + "'");
    }
  }
  if (doc.base.empty()) p.fail_eof("missing 'base'");
  if (!have_matrix) p.fail_eof("missing 'matrix'");
}

}  // namespace

QGDocument parse_document(std::string_view text, const std::string& source) {
  Parser p(text, source);
  QGDocument doc;
  if (p.done()) p.fail_eof("empty document");
  {
    const Line& l = p.next();
    if (l.toks[0].text != "format") p.fail(l, l.toks[0], "expected 'format 1'");
    p.expect_count(l, 2);
    if (l.toks[1].text != "1") p.fail(l, l.toks[1], "unsupported format version '" + l.toks[1].text + "'");
  }
  {
    const Line& l = p.next();
    if (l.toks[0].text != "kind") p.fail(l, l.toks[0], "expected 'kind'");
    p.expect_count(l, 2);
    const std::string& k = l.toks[1].text;
    if (k == "hopf_structure_constants") doc.kind = DocKind::hopf_structure_constants;
    else if (k == "classical_group_table") doc.kind = DocKind::classical_group_table;
    else if (k == "fusion_presentation") doc.kind = DocKind::fusion_presentation;
    else if (k == "cocycle") doc.kind = DocKind::cocycle;
    else p.fail(l, l.toks[1], "unknown kind '" + k + "'");
  }
  {
    const Line& l = p.next();
    if (l.toks[0].text != "name") p.fail(l, l.toks[0], "expected 'name'");
    p.expect_count(l, 2);
    doc.name = l.toks[1].text;
  }
  while (!p.done() && p.peek().toks[0].text == "note") {
    const Line& l = p.next();
    size_t start = l.toks[0].col + 4;
    while (start < l.raw.size() && l.raw[start] == ' ') ++start;
    doc.notes.push_back(start < l.raw.size() ? l.raw.substr(start) : "");
  }
  switch (doc.kind) {
    case DocKind::hopf_structure_constants: parse_hopf(p, doc); break;
    case DocKind::classical_group_table: parse_group(p, doc); break;
    case DocKind::fusion_presentation: parse_fusion(p, doc); break;
    case DocKind::cocycle: parse_cocycle(p, doc); break;
  }
  return doc;
}

QGDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, 0, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  QGDocument doc = parse_document(ss.str(), path);
  if (doc.kind == DocKind::cocycle) {
    auto base = std::filesystem::path(path).parent_path() / doc.base;
    doc.base_document = std::make_shared<QGDocument>(load_document(base.string()));
    if (doc.base_document->kind == DocKind::cocycle || doc.base_document->kind == DocKind::fusion_presentation)
      throw DocumentError(path, 0, 0, "cocycle base must describe a quantum group");
  }
  return doc;
}

std::string serialize(const QGDocument& doc) {
  std::ostringstream o;
  o << "format " << doc.format_version << "\nkind " << to_string(doc.kind) << "\nname " << doc.name << "\n";
  for (const auto& n : doc.notes) o << "note " << n << "\n";
  switch (doc.kind) {
    case DocKind::hopf_structure_constants: {
      const HopfData& h = doc.hopf;
      size_t d = h.dim;
      o << "dim " << d << "\nmult\n";
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          for (size_t k = 0; k < d; ++k)
            if (!h.mult[i][j][k].is_zero()) o << "  " << i << " " << j << " " << k << " " << h.mult[i][j][k].str() << "\n";
      o << "end\nunit\n";
      for (size_t k = 0; k < d; ++k)
        if (!h.unit[k].is_zero()) o << "  " << k << " " << h.unit[k].str() << "\n";
      o << "end\ncomult\n";
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          for (size_t k = 0; k < d; ++k)
            if (!h.comult[i](j, k).is_zero()) o << "  " << i << " " << j << " " << k << " " << h.comult[i](j, k).str() << "\n";
      o << "end\ncounit\n";
      for (size_t k = 0; k < d; ++k)
        if (!h.counit[k].is_zero()) o << "  " << k << " " << h.counit[k].str() << "\n";
      o << "end\nantipode\n";
      for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k)
          if (!h.antipode(k, i).is_zero()) o << "  " << i << " " << k << " " << h.antipode(k, i).str() << "\n";
      o << "end\nstar\n";
      for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k)
          if (!h.star(k, i).is_zero()) o << "  " << i << " " << k << " " << h.star(k, i).str() << "\n";
      o << "end\nhaar\n";
      for (size_t k = 0; k < d; ++k)
        if (!h.haar[k].is_zero()) o << "  " << k << " " << h.haar[k].str() << "\n";
      o << "end\n";
      break;
    }
    case DocKind::classical_group_table: {
      const GroupTable& g = doc.group;
      o << "algebra " << (doc.group_algebra ? "group" : "function") << "\nlabels";
      for (const auto& l : g.labels) o << " " << l;
      o << "\ntable\n";
      for (const auto& row : g.mult) {
        o << " ";
        for (size_t x : row) o << " " << x;
        o << "\n";
      }
      o << "end\n";
      break;
    }
    case DocKind::fusion_presentation: {
      const FusionRing& f = doc.fusion;
      o << "complete " << (f.presentation_complete ? "true" : "false") << "\n";
      for (size_t i = 0; i < f.size(); ++i) o << "label " << f.labels[i] << " " << f.dims[i] << "\n";
      o << "unit " << f.labels[f.unit] << "\n";
      for (size_t i = 0; i < f.size(); ++i)
        if (f.dual[i] > i) o << "dual " << f.labels[i] << " " << f.labels[f.dual[i]] << "\n";
      for (const auto& [ij, row] : f.rules) {
        o << "rule " << f.labels[ij.first] << " " << f.labels[ij.second] << " =";
        bool first = true;
        for (size_t k = 0; k < row.size(); ++k) {
          if (!row[k]) continue;
          o << (first ? " " : " + ");
          if (row[k] > 1) o << row[k] << "*";
          o << f.labels[k];
          first = false;
        }
        o << "\n";
      }
      break;
    }
    case DocKind::cocycle: {
      size_t n = doc.omega.rows();
      o << "base " << doc.base << "\nsize " << n << "\nmatrix\n";
      for (size_t i = 0; i < n; ++i) {
        o << " ";
        for (size_t j = 0; j < n; ++j) o << " " << doc.omega(i, j).str();
        o << "\n";
      }
      o << "end\n";
      break;
    }
  }
  return o.str();
}

HopfData document_hopf(const QGDocument& doc) {
  switch (doc.kind) {
    case DocKind::hopf_structure_constants: return doc.hopf;
    case DocKind::classical_group_table: return doc.group_algebra ? group_algebra(doc.group) : function_algebra(doc.group);
    case DocKind::cocycle:
      if (!doc.base_document) throw std::invalid_argument("cocycle document without a loaded base");
      return document_hopf(*doc.base_document);
    case DocKind::fusion_presentation: break;
  }
  throw std::invalid_argument("a fusion presentation does not describe a quantum group");
}

QGDocument hopf_document(const HopfData& h) {
  QGDocument doc;
  doc.kind = DocKind::hopf_structure_constants;
  doc.name = h.name;
  doc.hopf = h;
  return doc;
}

QGDocument group_document(const GroupTable& g, bool use_group_algebra) {
  QGDocument doc;
  doc.kind = DocKind::classical_group_table;
  doc.name = g.name;
  doc.group = g;
  doc.group_algebra = use_group_algebra;
  return doc;
}

QGDocument fusion_document(const FusionRing& f) {
  QGDocument doc;
  doc.kind = DocKind::fusion_presentation;
  doc.name = f.name;
  doc.fusion = f;
  return doc;
}

QGDocument cocycle_document(const std::string& name, const std::string& base, const Mat& omega) {
  QGDocument doc;
  doc.kind = DocKind::cocycle;
  doc.name = name;
  doc.base = base;
  doc.omega = omega;
  return doc;
}

}  // namespace qcenter
