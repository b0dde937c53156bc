/******************************************
 pcteq

 Copyright (c) 2026 The pcteq developers

 Permission is hereby granted, free of charge, to any person obtaining a copy
 of this software and associated documentation files (the "Software"), to deal
 in the Software without restriction, including without limitation the rights
 to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
 copies of the Software, and to permit persons to whom the Software is
 furnished to do so, subject to the following conditions:

 The above copyright notice and this permission notice shall be included in
 all copies or substantial portions of the Software.

 THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
 IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
 FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
 AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
 LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
 OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
 THE SOFTWARE.
***********************************************/

#include "pcteq/formats.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "pcteq/errors.hpp"

namespace pcteq {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

long parse_long(const std::string& tok, unsigned line_no, const char* what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line_no);
  }
  if (pos != tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line_no);
  return v;
}

// Next line with content, CRLF-tolerant; returns false at EOF.
bool next_line(std::istream& in, std::string& line, unsigned& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (!blank) return true;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------------- nnf

Circuit parse_nnf(std::istream& in) {
  std::string line;
  unsigned line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError("empty .nnf input");

  auto header = tokenize(line);
  if (header.size() != 4 || header[0] != "nnf")
    throw ParseError("malformed header, expected 'nnf v e n'", line_no);
  long v = parse_long(header[1], line_no, "node count");
  long e = parse_long(header[2], line_no, "edge count");
  long n = parse_long(header[3], line_no, "variable count");
  if (v < 1 || e < 0 || n < 0) throw ParseError("negative or zero count in header", line_no);

  CircuitBuilder b(static_cast<uint32_t>(n));
  std::vector<NodeId> file_nodes;  // file index -> builder node
  file_nodes.reserve(static_cast<size_t>(v));
  long edges_seen = 0;

  auto child = [&](const std::string& tok, unsigned ln) {
    long idx = parse_long(tok, ln, "child index");
    if (idx < 0 || idx >= static_cast<long>(file_nodes.size())) {
      if (idx >= static_cast<long>(file_nodes.size()) && idx < v)
        throw ParseError("forward reference to node " + std::to_string(idx), ln);
      throw ParseError("child index " + std::to_string(idx) + " out of range", ln);
    }
    return file_nodes[static_cast<size_t>(idx)];
  };

  for (long i = 0; i < v; ++i) {
    if (!next_line(in, line, line_no))
      throw ParseError("expected " + std::to_string(v) + " node lines, got " +
                       std::to_string(i), line_no);
    auto toks = tokenize(line);
    if (toks[0] == "L") {
      if (toks.size() != 2) throw ParseError("malformed literal line", line_no);
      long lit = parse_long(toks[1], line_no, "literal");
      long var = std::labs(lit);
      if (lit == 0 || var > n)
        throw ParseError("literal " + std::to_string(lit) + " out of range for " +
                         std::to_string(n) + " variables", line_no);
      file_nodes.push_back(b.literal(static_cast<VarId>(var), lit > 0));
    } else if (toks[0] == "A") {
      if (toks.size() < 2) throw ParseError("malformed And line", line_no);
      long c = parse_long(toks[1], line_no, "child count");
      if (c < 0 || toks.size() != static_cast<size_t>(c) + 2)
        throw ParseError("And child count does not match line", line_no);
      std::vector<NodeId> ch;
      ch.reserve(static_cast<size_t>(c));
      for (long k = 0; k < c; ++k) ch.push_back(child(toks[static_cast<size_t>(k) + 2], line_no));
      edges_seen += c;
      file_nodes.push_back(c == 0 ? b.true_node() : b.conj(std::move(ch)));
    } else if (toks[0] == "O") {
      if (toks.size() < 3) throw ParseError("malformed Or line", line_no);
      long j = parse_long(toks[1], line_no, "decision variable");
      long c = parse_long(toks[2], line_no, "child count");
      if (j < 0 || j > n)
        throw ParseError("decision variable " + std::to_string(j) + " out of range", line_no);
      if (c < 0 || toks.size() != static_cast<size_t>(c) + 3)
        throw ParseError("Or child count does not match line", line_no);
      std::vector<NodeId> ch;
      ch.reserve(static_cast<size_t>(c));
      for (long k = 0; k < c; ++k) ch.push_back(child(toks[static_cast<size_t>(k) + 3], line_no));
      edges_seen += c;
      file_nodes.push_back(c == 0 ? b.false_node()
                                  : b.disj(std::move(ch), static_cast<VarId>(j)));
    } else {
      throw ParseError("unknown node line '" + toks[0] + "'", line_no);
    }
  }
  if (edges_seen != e)
    throw ParseError("header declares " + std::to_string(e) + " edges, body has " +
                     std::to_string(edges_seen), line_no);
  if (next_line(in, line, line_no)) throw ParseError("trailing content after last node", line_no);
  return b.finish(file_nodes.back());
}

Circuit parse_nnf_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_nnf(ss);
}

void write_nnf(const Circuit& c, std::ostream& out) {
  out << "nnf " << c.node_count() << ' ' << c.edge_count() << ' ' << c.n_vars() << '\n';
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: out << "A 0\n"; break;
      case NodeKind::False: out << "O 0 0\n"; break;
      case NodeKind::PosLit: out << "L " << n.var << '\n'; break;
      case NodeKind::NegLit: out << "L -" << n.var << '\n'; break;
      case NodeKind::And:
        out << "A " << n.children.size();
        for (NodeId ch : n.children) out << ' ' << ch;
        out << '\n';
        break;
      case NodeKind::Or:
        out << "O " << n.var << ' ' << n.children.size();
        for (NodeId ch : n.children) out << ' ' << ch;
        out << '\n';
        break;
    }
  }
}

std::string write_nnf_string(const Circuit& c) {
  std::ostringstream ss;
  write_nnf(c, ss);
  return ss.str();
}

// ---------------------------------------------------------------- dimacs

Cnf parse_dimacs(std::istream& in) {
  Cnf f;
  std::string line;
  unsigned line_no = 0;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<int32_t> current;

  while (next_line(in, line, line_no)) {
    auto toks = tokenize(line);
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError("malformed header, expected 'p cnf n m'", line_no);
      long n = parse_long(toks[2], line_no, "variable count");
      declared_clauses = parse_long(toks[3], line_no, "clause count");
      if (n < 0 || declared_clauses < 0) throw ParseError("negative count in header", line_no);
      f.n_vars = static_cast<uint32_t>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before 'p cnf' header", line_no);
    for (const auto& tok : toks) {
      long lit = parse_long(tok, line_no, "literal");
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::labs(lit) > static_cast<long>(f.n_vars))
          throw ParseError("literal " + std::to_string(lit) + " out of range", line_no);
        current.push_back(static_cast<int32_t>(lit));
      }
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("unterminated clause at end of input", line_no);
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses, body has " + std::to_string(f.clauses.size()), line_no);
  return f;
}

Cnf parse_dimacs_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_dimacs(ss);
}

void write_dimacs(const Cnf& f, std::ostream& out) {
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int32_t lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

std::string write_dimacs_string(const Cnf& f) {
  std::ostringstream ss;
  write_dimacs(f, ss);
  return ss.str();
}

// --------------------------------------------------------------- weights

WeightFn parse_weights(std::istream& in, uint32_t n_vars) {
  std::vector<Rational> w(n_vars, Rational(1, 2));
  std::vector<uint8_t> seen(n_vars, 0);
  std::string line;
  unsigned line_no = 0;
  while (next_line(in, line, line_no)) {
    auto toks = tokenize(line);
    if (toks[0] == "c") continue;
    if (toks[0] != "w" || toks.size() != 3)
      throw ParseError("expected 'w <var> <weight>'", line_no);
    long v = parse_long(toks[1], line_no, "variable index");
    if (v < 1 || v > static_cast<long>(n_vars))
      throw ParseError("variable " + std::to_string(v) + " out of range for " +
                       std::to_string(n_vars) + " variables", line_no);
    Rational q;
    try {
      q = rational_from_string(toks[2]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (q <= 0 || q >= 1)
      throw DomainError("line " + std::to_string(line_no) + ": weight " + toks[2] +
                        " outside the open interval (0,1)");
    if (seen[v - 1])
      std::cerr << "c WARNING: duplicate weight for variable " << v << " at line " << line_no
                << ", keeping the last value\n";
    seen[v - 1] = 1;
    w[v - 1] = std::move(q);
  }
  return WeightFn(std::move(w));
}

WeightFn parse_weights_string(const std::string& text, uint32_t n_vars) {
  std::istringstream ss(text);
  return parse_weights(ss, n_vars);
}

void write_weights(const WeightFn& w, std::ostream& out) {
  for (VarId v = 1; v <= w.n_vars(); ++v)
    out << "w " << v << ' ' << rational_to_string(w.pos(v)) << '\n';
}

std::string write_weights_string(const WeightFn& w) {
  std::ostringstream ss;
  write_weights(w, ss);
  return ss.str();
}

}  // namespace pcteq
