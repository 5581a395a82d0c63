#include <algorithm>
#include <cctype>
#include <limits>

#include "lcg/errors.hpp"
#include "lcg/formats.hpp"

namespace lcg {

namespace {

constexpr std::size_t kRleLineWidth = 70;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower_no_space(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, n = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.push_back({l, n++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::int64_t parse_extent(const std::string& value, std::size_t line, std::size_t col, const char* name) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      value.size() > 15) {
    throw ParseError(ParseErrorKind::MalformedHeader, line, col, std::string("bad value for ") + name);
  }
  return std::stoll(value);
}

struct Header {
  std::int64_t width = 0;
  std::int64_t height = 0;
};

Header parse_header(const Line& line) {
  Header h;
  bool have_x = false, have_y = false;
  std::size_t pos = 0;
  const std::string_view t = line.text;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string_view::npos) comma = t.size();
    const std::string_view item = t.substr(pos, comma - pos);
    const std::size_t col = pos + 1;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(ParseErrorKind::MalformedHeader, line.number, col, "expected key = value");
    }
    const std::string key = lower_no_space(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (key == "x") {
      h.width = parse_extent(value, line.number, col, "x");
      have_x = true;
    } else if (key == "y") {
      h.height = parse_extent(value, line.number, col, "y");
      have_y = true;
    } else if (key == "rule") {
      const std::string rule = lower_no_space(value);
      if (rule != "b3/s23" && rule != "23/3") {
        throw ParseError(ParseErrorKind::UnsupportedRule, line.number, col, "rule " + value + " is not B3/S23");
      }
    } else {
      throw ParseError(ParseErrorKind::MalformedHeader, line.number, col, "unknown header key '" + key + "'");
    }
    if (comma == t.size()) break;
    pos = comma + 1;
  }
  if (!have_x || !have_y) throw ParseError(ParseErrorKind::MalformedHeader, line.number, 1, "header needs x and y");
  return h;
}

// Decodes body tokens starting at lines[first]. `extent` bounds the cells when set.
std::vector<Coord> decode_body(const std::vector<Line>& lines, std::size_t first, const Header* extent) {
  std::vector<Coord> cells;
  std::int64_t x = 0, y = 0;
  std::uint64_t count = 0;
  bool have_count = false;
  std::size_t count_line = 0, count_col = 0;

  for (std::size_t li = first; li < lines.size(); ++li) {
    const Line& line = lines[li];
    for (std::size_t i = 0; i < line.text.size(); ++i) {
      const char c = line.text[i];
      const std::size_t col = i + 1;
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (!have_count) {
          count_line = line.number;
          count_col = col;
        }
        count = count * 10 + static_cast<std::uint64_t>(c - '0');
        have_count = true;
        if (count > (std::uint64_t{1} << 40)) {
          throw ParseError(ParseErrorKind::ExtentOverrun, count_line, count_col, "run count too large");
        }
        continue;
      }
      if (have_count && count == 0) {
        throw ParseError(ParseErrorKind::UnknownToken, count_line, count_col, "run count must be at least 1");
      }
      const auto n = static_cast<std::int64_t>(have_count ? count : 1);
      const bool had_count = have_count;
      count = 0;
      have_count = false;
      switch (c) {
        case 'b':
          x += n;
          if (extent && x > extent->width) {
            throw ParseError(ParseErrorKind::ExtentOverrun, line.number, col, "row longer than x");
          }
          break;
        case 'o':
          if (extent && (x + n > extent->width || y >= extent->height)) {
            throw ParseError(ParseErrorKind::ExtentOverrun, line.number, col, "live cells outside the declared box");
          }
          for (std::int64_t k = 0; k < n; ++k) cells.push_back({x + k, y});
          x += n;
          break;
        case '$':
          y += n;
          x = 0;
          break;
        case '!':
          if (had_count) throw ParseError(ParseErrorKind::UnknownToken, line.number, col, "count before '!'");
          std::sort(cells.begin(), cells.end());
          return cells;
        default:
          throw ParseError(ParseErrorKind::UnknownToken, line.number, col,
                           std::string("unexpected character '") + c + "'");
      }
    }
  }
  if (have_count) throw ParseError(ParseErrorKind::UnknownToken, count_line, count_col, "dangling run count");
  std::sort(cells.begin(), cells.end());
  return cells;
}

void append_run(std::vector<std::string>& tokens, std::int64_t n, char tag) {
  if (n <= 0) return;
  tokens.push_back(n == 1 ? std::string(1, tag) : std::to_string(n) + tag);
}

std::vector<std::string> body_tokens(std::span<const Coord> input) {
  std::vector<Coord> cells(input.begin(), input.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<std::string> tokens;
  if (cells.empty()) {
    tokens.push_back("!");
    return tokens;
  }
  const Box box = *bounding_box_of(cells);
  std::int64_t row = box.min.y;
  std::int64_t col = box.min.x;
  std::size_t i = 0;
  while (i < cells.size()) {
    const Coord c = cells[i];
    if (c.y != row) {
      append_run(tokens, c.y - row, '$');
      row = c.y;
      col = box.min.x;
    }
    append_run(tokens, c.x - col, 'b');
    std::size_t j = i;
    while (j + 1 < cells.size() && cells[j + 1].y == c.y && cells[j + 1].x == cells[j].x + 1) ++j;
    append_run(tokens, static_cast<std::int64_t>(j - i + 1), 'o');
    col = cells[j].x + 1;
    i = j + 1;
  }
  tokens.push_back("!");
  return tokens;
}

std::string join_wrapped(const std::vector<std::string>& tokens, std::size_t wrap) {
  std::string out, line;
  for (const auto& t : tokens) {
    if (wrap > 0 && !line.empty() && line.size() + t.size() > wrap) {
      out += line;
      out += '\n';
      line.clear();
    }
    line += t;
  }
  out += line;
  return out;
}

}  // namespace

PatternFile parse_rle(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  PatternFile pf;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const std::string t = trim(lines[i].text);
    if (t.empty()) continue;
    if (t.front() == '#') {
      pf.comments.push_back(t);
      continue;
    }
    break;
  }
  if (i == lines.size()) throw ParseError(ParseErrorKind::MalformedHeader, lines.back().number, 1, "missing header");
  const Header h = parse_header(lines[i]);
  pf.width = h.width;
  pf.height = h.height;
  pf.cells = decode_body(lines, i + 1, &h);
  return pf;
}

std::vector<Coord> parse_rle_body(std::string_view body) { return decode_body(split_lines(body), 0, nullptr); }

std::string emit_rle_body(std::span<const Coord> cells, std::size_t wrap) {
  return join_wrapped(body_tokens(cells), wrap);
}

std::string emit_rle(std::span<const Coord> cells) {
  const auto box = bounding_box_of(cells);
  const std::int64_t w = box ? box->width() : 0;
  const std::int64_t h = box ? box->height() : 0;
  return "x = " + std::to_string(w) + ", y = " + std::to_string(h) + "\n" + emit_rle_body(cells, kRleLineWidth);
}

PatternFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".cells") || ends_with(".txt") ? PatternFormat::Plaintext : PatternFormat::Rle;
}

PatternFile parse_pattern(std::string_view text, PatternFormat format) {
  return format == PatternFormat::Rle ? parse_rle(text) : parse_plaintext(text);
}

}  // namespace lcg
