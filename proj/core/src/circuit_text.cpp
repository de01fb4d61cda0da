// Copyright 2026 The qipkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qipkit/circuit_text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qip {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::size_t parse_index(const Token& tok, std::size_t line) {
  if (tok.text.empty() ||
      !std::all_of(tok.text.begin(), tok.text.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    throw ParseError(line, tok.column,
                     "expected a qubit index, got '" + tok.text + "'");
  }
  try {
    return std::stoull(tok.text);
  } catch (const std::out_of_range&) {
    throw ParseError(line, tok.column, "index '" + tok.text + "' is too large");
  }
}

Complex parse_complex(const Token& tok, std::size_t line) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin) {
    throw ParseError(line, tok.column,
                     "expected a number, got '" + tok.text + "'");
  }
  if (*end == '\0') return Complex(re, 0.0);
  if (*end != '+') {
    throw ParseError(line, tok.column + std::size_t(end - begin),
                     "expected '+' before the imaginary part");
  }
  const char* im_begin = end + 1;
  const double im = std::strtod(im_begin, &end);
  if (end == im_begin) {
    throw ParseError(line, tok.column + std::size_t(im_begin - begin),
                     "expected an imaginary part after '+'");
  }
  if (end[0] != 'i' || end[1] != '\0') {
    throw ParseError(line, tok.column + std::size_t(end - begin),
                     "imaginary part must end in 'i'");
  }
  return Complex(re, im);
}

void require_token_count(const std::vector<Token>& tokens, std::size_t want,
                         std::size_t line, const std::string& stmt) {
  if (tokens.size() < want) {
    const std::size_t col =
        tokens.empty() ? 1 : tokens.back().column + tokens.back().text.size();
    throw ParseError(line, col, stmt + ": missing argument");
  }
  if (tokens.size() > want) {
    throw ParseError(line, tokens[want].column,
                     stmt + ": unexpected token '" + tokens[want].text + "'");
  }
}

std::size_t checked_index(const Token& tok, std::size_t line,
                          std::size_t qubits) {
  const std::size_t idx = parse_index(tok, line);
  if (idx >= qubits) {
    throw ParseError(line, tok.column,
                     "qubit index " + std::to_string(idx) +
                         " out of range for " + std::to_string(qubits) +
                         " qubits");
  }
  return idx;
}

void format_complex(std::ostringstream& out, Complex z) {
  out << z.real() << '+' << z.imag() << 'i';
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t qubits = 0;
  std::vector<Gate> gates;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string keyword = lowercase(tokens[0].text);

    if (!have_header) {
      if (keyword != "qubits") {
        throw ParseError(line_no, tokens[0].column,
                         "expected 'qubits', got '" + tokens[0].text + "'");
      }
      require_token_count(tokens, 2, line_no, "qubits");
      qubits = parse_index(tokens[1], line_no);
      if (qubits == 0) {
        throw ParseError(line_no, tokens[1].column,
                         "qubit count must be positive");
      }
      have_header = true;
      continue;
    }

    if (keyword == "i" || keyword == "x" || keyword == "y" || keyword == "z" ||
        keyword == "h") {
      require_token_count(tokens, 2, line_no, keyword);
      const std::size_t target = checked_index(tokens[1], line_no, qubits);
      const GateKind kind = keyword == "i"   ? GateKind::I
                            : keyword == "x" ? GateKind::X
                            : keyword == "y" ? GateKind::Y
                            : keyword == "z" ? GateKind::Z
                                             : GateKind::H;
      gates.push_back(Gate::single(kind, target));
    } else if (keyword == "cnot") {
      require_token_count(tokens, 3, line_no, "cnot");
      const std::size_t control = checked_index(tokens[1], line_no, qubits);
      const std::size_t target = checked_index(tokens[2], line_no, qubits);
      if (control == target) {
        throw ParseError(line_no, tokens[2].column,
                         "cnot control and target must differ");
      }
      gates.push_back(Gate::cnot(control, target));
    } else if (keyword == "u2") {
      require_token_count(tokens, 6, line_no, "u2");
      const std::size_t target = checked_index(tokens[1], line_no, qubits);
      ComplexMatrix u(2, 2);
      for (std::size_t e = 0; e < 4; ++e) {
        u(e / 2, e % 2) = parse_complex(tokens[2 + e], line_no);
      }
      try {
        gates.push_back(Gate::custom2(target, std::move(u)));
      } catch (const InvariantError&) {
        throw ParseError(line_no, tokens[0].column,
                         "u2 matrix is not unitary");
      }
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "unknown gate '" + tokens[0].text + "'");
    }
  }

  if (!have_header) {
    throw ParseError(line_no + 1, 1, "missing 'qubits' header");
  }
  return Circuit(qubits, std::move(gates));
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  out.precision(17);
  out << "qubits " << c.qubits() << '\n';
  for (const Gate& g : c.gates()) {
    switch (g.kind()) {
      case GateKind::I:
        out << "i " << g.targets()[0] << '\n';
        break;
      case GateKind::X:
        out << "x " << g.targets()[0] << '\n';
        break;
      case GateKind::Y:
        out << "y " << g.targets()[0] << '\n';
        break;
      case GateKind::Z:
        out << "z " << g.targets()[0] << '\n';
        break;
      case GateKind::H:
        out << "h " << g.targets()[0] << '\n';
        break;
      case GateKind::CNOT:
        out << "cnot " << g.targets()[0] << ' ' << g.targets()[1] << '\n';
        break;
      case GateKind::U2:
        out << "u2 " << g.targets()[0];
        for (std::size_t e = 0; e < 4; ++e) {
          out << ' ';
          format_complex(out, g.matrix()(e / 2, e % 2));
        }
        out << '\n';
        break;
      case GateKind::UN:
        throw InvariantError(
            "format_circuit: custom multi-qubit gates have no text form");
    }
  }
  return out.str();
}

}  // namespace qip
