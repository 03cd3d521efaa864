#include "latwidth/io.hpp"

#include <sstream>

namespace latwidth {

namespace {

bool blank(const std::string& s) {
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

IntVec parse_row(const std::string& s, int lineno) {
  IntVec row;
  size_t i = 0;
  while (i < s.size()) {
    if (isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (s[i] == '-' || s[i] == '+') ++i;
    size_t digits = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0)
      throw ParseError(lineno, static_cast<int>(i) + 1, "expected an integer");
    row.push_back(Int(s.substr(start, i - start)));
  }
  return row;
}

} // namespace

std::vector<PolytopeDocument> parse_documents(const std::string& text) {
  std::vector<PolytopeDocument> docs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::string name;
  std::vector<IntVec> rows;
  int block_line = 0;
  auto flush = [&]() {
    if (rows.empty() && name.empty()) return;
    if (rows.empty()) throw ParseError(block_line, 1, "named block without matrix rows");
    for (const IntVec& r : rows)
      if (r.size() != rows[0].size())
        throw ParseError(block_line, 1, "matrix rows of unequal length");
    docs.push_back(PolytopeDocument{name, IntMat::from_rows(rows)});
    name.clear();
    rows.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      if (!rows.empty()) flush();
      size_t i = 1;
      while (i < line.size() && isspace(static_cast<unsigned char>(line[i]))) ++i;
      name = line.substr(i);
      block_line = lineno;
      continue;
    }
    if (rows.empty() && name.empty()) block_line = lineno;
    rows.push_back(parse_row(line, lineno));
  }
  flush();
  return docs;
}

PolytopeDocument parse_document(const std::string& text) {
  std::vector<PolytopeDocument> docs = parse_documents(text);
  if (docs.empty()) throw ParseError(1, 1, "no polytope block found");
  if (docs.size() > 1) throw ParseError(1, 1, "expected exactly one polytope block");
  return docs.front();
}

std::string format_document(const PolytopeDocument& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "# " << doc.name << "\n";
  for (int i = 0; i < doc.matrix.rows; ++i) {
    for (int j = 0; j < doc.matrix.cols; ++j) {
      if (j) os << " ";
      os << doc.matrix.at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

Polytope to_polytope(const PolytopeDocument& doc) {
  if (doc.matrix.cols == 0) throw std::invalid_argument("to_polytope: empty matrix");
  std::vector<IntVec> cols;
  for (int j = 0; j < doc.matrix.cols; ++j) cols.push_back(doc.matrix.col(j));
  return hull(cols);
}

PolytopeDocument from_polytope(const Polytope& p, const std::string& name) {
  std::vector<IntVec> cols = p.vertices;
  return PolytopeDocument{name, IntMat::from_cols(cols)};
}

} // namespace latwidth
