#pragma once

#include "curvebound/exact.hpp"
#include "curvebound/permgroup/perm_group.hpp"
#include "curvebound/permgroup/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace curvebound::perm {

/// Cycles of one line, 1-based, without a degree attached.
inline std::vector<std::vector<Point>> parse_cycles(std::string_view line)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
  };
  skip_space();
  if (line.substr(i) == "()")
    return cycles;
  while (i < line.size()) {
    skip_space();
    if (i == line.size())
      break;
    if (line[i] != '(')
      throw Error("expected '(' in cycle notation: " + std::string(line));
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      std::size_t start = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
        ++i;
      if (start == i)
        throw Error("expected a point in cycle notation: " + std::string(line));
      unsigned long v = std::stoul(std::string(line.substr(start, i - start)));
      if (v == 0)
        throw Error("points are numbered from 1: " + std::string(line));
      cycle.push_back(static_cast<Point>(v));
      skip_space();
      if (i < line.size() && line[i] == ',') {
        ++i;
        continue;
      }
      if (i < line.size() && line[i] == ')') {
        ++i;
        break;
      }
      throw Error("unterminated cycle: " + std::string(line));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  return Permutation::from_cycles(degree, parse_cycles(text));
}

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// One permutation per line in cycle notation. Blank lines and `#` comments
/// are ignored. An optional `degree: n` line fixes the degree; otherwise it
/// is the largest point that occurs.
inline GeneratorFile parse_generator_file(const std::string &text)
{
  std::vector<std::vector<std::vector<Point>>> lines;
  std::size_t declared = 0;
  std::size_t largest = 0;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    line = line.substr(first);
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.rfind("degree:", 0) == 0) {
      std::string value = line.substr(7);
      try {
        std::size_t used = 0;
        declared = std::stoul(value, &used);
        if (value.find_first_not_of(" \t", used) != std::string::npos || declared == 0)
          throw Error("");
      } catch (const std::exception &) {
        throw Error("line " + std::to_string(lineno) + ": malformed degree header");
      }
      continue;
    }
    try {
      lines.push_back(parse_cycles(line));
    } catch (const Error &e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
    for (const auto &c : lines.back())
      for (Point x : c)
        largest = std::max<std::size_t>(largest, x);
  }
  GeneratorFile out;
  out.degree = declared ? declared : largest;
  if (declared && largest > declared)
    throw Error("point " + std::to_string(largest) + " exceeds declared degree " + std::to_string(declared));
  for (const auto &cycles : lines)
    out.generators.push_back(Permutation::from_cycles(out.degree, cycles));
  return out;
}

inline GeneratorFile load_generator_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open generator file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_generator_file(buf.str());
}

inline PermGroup group_from_file(const GeneratorFile &file)
{
  return PermGroup::from_generators(file.degree, file.generators);
}

} // namespace curvebound::perm
