#include "pavoid/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pavoid {

namespace {

struct Line {
  int number;  // 1-based position in the original text
  std::string text;
};

std::vector<Line> nonblank_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (!blank) out.push_back({number, line});
  }
  return out;
}

std::vector<long> parse_ints(const Line& l) {
  std::vector<long> vals;
  std::istringstream in(l.text);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw std::invalid_argument("line " + std::to_string(l.number) +
                                  ": expected an integer, got \"" + tok + "\"");
    vals.push_back(v);
  }
  return vals;
}

std::vector<int> to_int_vector(const std::vector<long>& vals, int line_number) {
  std::vector<int> out;
  out.reserve(vals.size());
  for (long v : vals) {
    if (v < -1000000000L || v > 1000000000L)
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": value out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
  std::vector<Line> lines = nonblank_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty input");

  if (lines.size() == 1) {
    std::vector<int> images = to_int_vector(parse_ints(lines[0]), lines[0].number);
    try {
      return Permutation(std::move(images));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lines[0].number) +
                                  ": " + e.what());
    }
  }

  std::vector<long> header = parse_ints(lines[0]);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    throw std::invalid_argument("line " + std::to_string(lines[0].number) +
                                ": header must be two positive integers");
  long a = header[0], b = header[1];
  std::size_t body = lines.size() - 1;

  // Binary-matrix body: `a` rows, each a contiguous string of `b` characters
  // over {0,1}.  A row with interior spaces is treated as coordinates instead.
  std::string matrix_fail;
  if (static_cast<long>(body) == a) {
    bool shape_ok = true;
    std::vector<std::string> rows(body);
    for (std::size_t i = 1; i <= body && shape_ok; ++i) {
      const std::string& t = lines[i].text;
      std::size_t lo = t.find_first_not_of(" \t");
      std::size_t hi = t.find_last_not_of(" \t");
      std::string row = t.substr(lo, hi - lo + 1);
      if (static_cast<long>(row.size()) != b) {
        matrix_fail = "line " + std::to_string(lines[i].number) + ": row has " +
                      std::to_string(row.size()) + " characters, header promises " +
                      std::to_string(b);
        shape_ok = false;
      } else {
        for (char c : row)
          if (c != '0' && c != '1') {
            matrix_fail = "line " + std::to_string(lines[i].number) +
                          ": matrix entries must be 0 or 1, got '" +
                          std::string(1, c) + "'";
            shape_ok = false;
            break;
          }
      }
      if (shape_ok) rows[i - 1] = std::move(row);
    }
    if (shape_ok) {
      BinaryMatrix m(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t i = 0; i < body; ++i)
        for (long c = 0; c < b; ++c)
          if (rows[i][c] == '1') m.set(static_cast<int>(i) + 1,
                                       static_cast<int>(c) + 1, true);
      return m;
    }
  } else {
    matrix_fail = "body has " + std::to_string(body) + " rows, header promises " +
                  std::to_string(a);
  }

  // d-dimensional body: header "d n", then n lines of d coordinates.
  std::string ddim_fail;
  if (a < 2) {
    ddim_fail = "dimension " + std::to_string(a) + " is below 2";
  } else if (static_cast<long>(body) != b) {
    ddim_fail = "body has " + std::to_string(body) + " points, header promises " +
                std::to_string(b);
  } else {
    std::vector<std::vector<int>> pts;
    pts.reserve(body);
    for (std::size_t i = 1; i <= body && ddim_fail.empty(); ++i) {
      std::vector<int> coords = to_int_vector(parse_ints(lines[i]), lines[i].number);
      if (static_cast<long>(coords.size()) != a)
        ddim_fail = "line " + std::to_string(lines[i].number) + ": point has " +
                    std::to_string(coords.size()) + " coordinates, header promises " +
                    std::to_string(a);
      else
        pts.push_back(std::move(coords));
    }
    if (ddim_fail.empty()) {
      try {
        return DDimPermutation(static_cast<int>(a), std::move(pts));
      } catch (const std::invalid_argument& e) {
        ddim_fail = e.what();
      }
    }
  }

  throw std::invalid_argument("input matches no known format (as binary matrix: " +
                              matrix_fail + "; as d-dimensional permutation: " +
                              ddim_fail + ")");
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_input_text(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string emit_text(const BinaryMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 1; r <= m.rows(); ++r) out << m.row_string(r) << '\n';
  return out.str();
}

std::string emit_text(const Permutation& p) { return p.to_text() + "\n"; }

std::string emit_text(const DDimPermutation& p) { return p.to_text(); }

std::string emit_text(const ParsedInput& in) {
  return std::visit([](const auto& v) { return emit_text(v); }, in);
}

Permutation as_permutation(const ParsedInput& in) {
  if (const auto* p = std::get_if<Permutation>(&in)) return *p;
  if (const auto* m = std::get_if<BinaryMatrix>(&in))
    return Permutation::from_matrix(*m);
  const auto& dd = std::get<DDimPermutation>(in);
  if (dd.dim() != 2)
    throw std::invalid_argument("a " + std::to_string(dd.dim()) +
                                "-dimensional permutation is not planar");
  return dd.layer(2);
}

BinaryMatrix as_binary_matrix(const ParsedInput& in) {
  if (const auto* m = std::get_if<BinaryMatrix>(&in)) return *m;
  if (const auto* p = std::get_if<Permutation>(&in)) return p->matrix();
  const auto& dd = std::get<DDimPermutation>(in);
  if (dd.dim() != 2)
    throw std::invalid_argument("a " + std::to_string(dd.dim()) +
                                "-dimensional permutation is not planar");
  return dd.layer(2).matrix();
}

const char* input_kind(const ParsedInput& in) {
  if (std::holds_alternative<BinaryMatrix>(in)) return "matrix";
  if (std::holds_alternative<Permutation>(in)) return "permutation";
  return "ddim";
}

}  // namespace pavoid
