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

#include <stdexcept>
#include <string>

namespace pcteq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line` is 1-based, 0 if not tied to a line.
struct ParseError : Error {
  ParseError(const std::string& msg, unsigned line_no = 0)
      : Error(line_no ? "parse error at line " + std::to_string(line_no) + ": " + msg
                      : "parse error: " + msg),
        line(line_no) {}
  unsigned line;
};

/// A value outside its admissible domain (e.g. a literal weight not in (0,1)).
struct DomainError : Error {
  using Error::Error;
};

/// Mismatched inputs (wrong assignment length, different variable counts, ...).
struct InputError : Error {
  using Error::Error;
};

/// A circuit lacks a structural property an operation requires.
struct StructuralError : Error {
  using Error::Error;
};

/// The request exceeds a deliberate desk-scale guard (e.g. enumeration for n > 24).
struct CapabilityError : Error {
  using Error::Error;
};

}  // namespace pcteq
