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

#pragma once

#include <iosfwd>
#include <string>

#include "pcteq/circuit.hpp"
#include "pcteq/cnf.hpp"
#include "pcteq/weights.hpp"

namespace pcteq {

// c2d-style .nnf dialect:
//
//   nnf v e n          header: node count, edge count, variable count
//   L l                literal leaf, l a signed variable index
//   A c i1 ... ic      And with c children (A 0 = true)
//   O j c i1 ... ic    Or with decision variable j (0 = none; O 0 0 = false)
//
// Node ids are 0-based in file order; children must reference earlier nodes.
// The root is the last node. LF and CRLF are both accepted.
Circuit parse_nnf(std::istream& in);
Circuit parse_nnf_string(const std::string& text);

void write_nnf(const Circuit& c, std::ostream& out);
std::string write_nnf_string(const Circuit& c);

// Standard DIMACS CNF: `p cnf n m` header, `c` comment lines,
// zero-terminated clauses that may span lines.
Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs_string(const std::string& text);

void write_dimacs(const Cnf& f, std::ostream& out);
std::string write_dimacs_string(const Cnf& f);

// Weight files: one `w <var> <weight>` line per variable, weight an exact
// rational `a/b` or a plain decimal (parsed exactly). Missing variables
// default to 1/2; a duplicated variable keeps the last value and emits a
// warning on stderr. `c` comment lines are allowed.
WeightFn parse_weights(std::istream& in, uint32_t n_vars);
WeightFn parse_weights_string(const std::string& text, uint32_t n_vars);

void write_weights(const WeightFn& w, std::ostream& out);
std::string write_weights_string(const WeightFn& w);

}  // namespace pcteq
