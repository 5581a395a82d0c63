#include <algorithm>

#include "lcg/errors.hpp"
#include "lcg/formats.hpp"

namespace lcg {

PatternFile parse_plaintext(std::string_view text) {
  PatternFile pf;
  std::vector<std::string_view> rows;
  std::vector<std::size_t> row_lines;
  std::size_t start = 0, number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '!') {
      pf.comments.emplace_back(line);
    } else {
      rows.push_back(line);
      row_lines.push_back(number);
    }
    start = end + 1;
    ++number;
  }
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
    row_lines.pop_back();
  }

  std::int64_t width = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const char ch = rows[r][c];
      if (ch == 'O') {
        pf.cells.push_back({static_cast<std::int64_t>(c), static_cast<std::int64_t>(r)});
      } else if (ch != '.') {
        throw ParseError(ParseErrorKind::InvalidCharacter, row_lines[r], c + 1,
                         std::string("expected '.' or 'O', found '") + ch + "'");
      }
    }
    width = std::max(width, static_cast<std::int64_t>(rows[r].size()));
  }
  pf.width = width;
  pf.height = static_cast<std::int64_t>(rows.size());
  std::sort(pf.cells.begin(), pf.cells.end());
  return pf;
}

std::string emit_plaintext(std::span<const Coord> cells) {
  const std::vector<Coord> nf = cells.empty() ? std::vector<Coord>{} : translation_normal_form(cells);
  if (nf.empty()) return "";
  const Box box = *bounding_box_of(nf);
  std::string out;
  std::size_t i = 0;
  for (std::int64_t y = 0; y < box.height(); ++y) {
    std::string row(static_cast<std::size_t>(box.width()), '.');
    for (; i < nf.size() && nf[i].y == y; ++i) row[static_cast<std::size_t>(nf[i].x)] = 'O';
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace lcg
