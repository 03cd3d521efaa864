// Text format for polytopes: one polytope per block, vertices as the columns
// of an integer matrix, rows separated by newlines and entries by whitespace.
// An optional leading "# name" line labels the block; blocks are separated by
// blank lines.
#pragma once

#include "latwidth/polytope.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace latwidth {

struct PolytopeDocument {
  std::string name; // empty when unnamed
  IntMat matrix;    // vertices as columns
  bool operator==(const PolytopeDocument&) const = default;
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                           ": " + msg),
        line(l), col(c) {}
};

std::vector<PolytopeDocument> parse_documents(const std::string& text);
PolytopeDocument parse_document(const std::string& text); // exactly one block

std::string format_document(const PolytopeDocument& doc);

Polytope to_polytope(const PolytopeDocument& doc);
PolytopeDocument from_polytope(const Polytope& p, const std::string& name = "");

} // namespace latwidth
