#include "bcbounds/channel_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bcbounds/bounds.hpp"

namespace bcb {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = raw.find_last_not_of(" \t\r");
    std::string trimmed = raw.substr(begin, end - begin + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    lines.push_back({number, std::move(trimmed)});
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("channel file, line " + std::to_string(line) + ": " +
                              msg);
}

std::vector<double> parse_row(const Line& line, const std::string& field,
                              std::size_t row_index) {
  std::vector<double> out;
  std::istringstream in(line.text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(line.number, field + " row " + std::to_string(row_index) +
                            ": cannot parse probability '" + tok + "'");
    }
  }
  return out;
}

TransitionMatrix rows_to_matrix(const std::vector<std::vector<double>>& rows,
                                const std::string& field,
                                const std::vector<std::size_t>& row_lines) {
  const std::size_t out_size = rows.front().size();
  std::vector<double> flat;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != out_size) {
      fail(row_lines[r], field + " row " + std::to_string(r) + ": expected " +
                             std::to_string(out_size) + " entries, got " +
                             std::to_string(rows[r].size()));
    }
    double sum = 0.0;
    for (double v : rows[r]) {
      if (v < 0.0) {
        fail(row_lines[r], field + " row " + std::to_string(r) +
                               ": negative probability");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kMassTol) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.9g", sum);
      fail(row_lines[r], field + " row " + std::to_string(r) + ": sums to " +
                             buf + ", expected 1 within 1e-12");
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return {rows.size(), out_size, std::move(flat)};
}

}  // namespace

NamedChannel parse_channel_text(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  std::string name;
  std::size_t input_size = 0;
  std::vector<std::vector<double>> y1_rows, y2_rows;
  std::vector<std::size_t> y1_lines, y2_lines;

  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    std::istringstream in(line.text);
    std::string key;
    in >> key;
    if (key == "name") {
      std::string rest;
      std::getline(in, rest);
      std::size_t b = rest.find_first_not_of(" \t");
      name = b == std::string::npos ? "" : rest.substr(b);
      ++i;
    } else if (key == "input_size") {
      long v = 0;
      if (!(in >> v) || v < 1) fail(line.number, "input_size must be a positive integer");
      input_size = static_cast<std::size_t>(v);
      ++i;
    } else if (key == "y1" || key == "y2") {
      if (input_size == 0) fail(line.number, "input_size must come before " + key);
      auto& rows = key == "y1" ? y1_rows : y2_rows;
      auto& row_lines = key == "y1" ? y1_lines : y2_lines;
      if (!rows.empty()) fail(line.number, "duplicate field " + key);
      ++i;
      for (std::size_t r = 0; r < input_size; ++r) {
        if (i >= lines.size()) {
          fail(line.number, key + ": expected " + std::to_string(input_size) +
                                " rows, file ended after " + std::to_string(r));
        }
        rows.push_back(parse_row(lines[i], key, r));
        row_lines.push_back(lines[i].number);
        ++i;
      }
    } else {
      fail(line.number, "unknown field '" + key + "'");
    }
  }
  if (input_size == 0) throw std::invalid_argument("channel file: missing input_size");
  if (y1_rows.empty()) throw std::invalid_argument("channel file: missing y1 rows");
  if (y2_rows.empty()) throw std::invalid_argument("channel file: missing y2 rows");

  BroadcastChannel ch(rows_to_matrix(y1_rows, "y1", y1_lines),
                      rows_to_matrix(y2_rows, "y2", y2_lines));
  return {std::move(name), std::move(ch)};
}

NamedChannel parse_channel_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open channel file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  NamedChannel nc = parse_channel_text(buf.str());
  if (nc.name.empty()) nc.name = path;
  return nc;
}

NamedChannel resolve_channel_spec(const std::string& spec) {
  constexpr const char* kPrefix = "bssc:";
  if (spec.rfind(kPrefix, 0) == 0) {
    const std::string arg = spec.substr(5);
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad channel shorthand '" + spec +
                                  "': expected bssc:P with P in [0,1]");
    }
    return {spec, bssc(p)};
  }
  return parse_channel_file(spec);
}

std::string format_channel(const NamedChannel& nc) {
  std::ostringstream out;
  char buf[64];
  if (!nc.name.empty()) out << "name " << nc.name << "\n";
  out << "input_size " << nc.channel.input_size() << "\n";
  for (int which = 0; which < 2; ++which) {
    const TransitionMatrix& tm = which == 0 ? nc.channel.to_y1 : nc.channel.to_y2;
    out << (which == 0 ? "y1" : "y2") << "\n";
    for (std::size_t x = 0; x < tm.input_size(); ++x) {
      for (std::size_t y = 0; y < tm.output_size(); ++y) {
        std::snprintf(buf, sizeof(buf), "%.17g", tm.prob(x, y));
        out << (y ? " " : "") << buf;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace bcb
