#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matchgroup/error.hpp"
#include "matchgroup/group_table.hpp"
#include "matchgroup/lattice.hpp"
#include "matchgroup/subset.hpp"

namespace matchgroup {

using AnyGroup = std::variant<GroupTable, LatticeGroup>;

namespace detail {

/// Cursor over a single line of input with 1-based column reporting.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line = 1) : text_(text), line_(line) {}

  bool done() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }
  std::size_t column() const noexcept { return pos_ + 1; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    const char* first = text_.data() + start + (peek_at(start) == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  std::string token(std::string_view stops) {
    skip_space();
    const std::size_t start = pos_;
    while (!done() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           stops.find(text_[pos_]) == std::string_view::npos)
      ++pos_;
    if (pos_ == start) fail("expected a value");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column()); }

 private:
  char peek_at(std::size_t i) const noexcept { return i < text_.size() ? text_[i] : '\0'; }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::size_t positive_parameter(Cursor& c, const char* family) {
  const std::size_t col = c.column();
  if (!std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError(std::string("expected a number after '") + family + "'", 1, col);
  const auto v = c.integer();
  if (v < 1) throw ParseError(std::string(family) + " parameter must be positive", 1, col);
  return static_cast<std::size_t>(v);
}

inline GroupTable parse_factor(Cursor& c, std::size_t cap) {
  const std::size_t col = c.column();
  const char head = c.peek();
  if (head == '\0') c.fail("expected a group family");
  c.accept(head);
  switch (head) {
    case 'C': return make_cyclic(positive_parameter(c, "C"), cap);
    case 'D': return make_dihedral(positive_parameter(c, "D"), cap);
    case 'S': {
      const auto k = positive_parameter(c, "S");
      if (k > 5) throw ParseError("S<k> supports 1 <= k <= 5", 1, col);
      return make_symmetric(k, cap);
    }
    case 'Q': {
      const std::size_t at = c.column();
      if (c.integer() != 8) throw ParseError("only Q8 is supported", 1, at);
      return make_quaternion();
    }
    default: throw ParseError(std::string("unknown group family '") + head + "'", 1, col);
  }
}

}  // namespace detail

/// Parses the group mini-language: C<n>, D<m>, S<k>, Q8, products joined by
/// 'x' (e.g. C2xC4), or Z^<d> for the integer lattice.
inline AnyGroup parse_group_spec(std::string_view spec, std::size_t cap = kDefaultOrderCap) {
  detail::Cursor c(spec);
  c.skip_space();
  if (c.peek() == 'Z') {
    c.accept('Z');
    c.expect('^');
    const std::size_t col = c.column();
    const auto d = c.integer();
    if (d < 1) throw ParseError("lattice dimension must be positive", 1, col);
    c.skip_space();
    if (!c.done()) c.fail("unexpected trailing input");
    return LatticeGroup(static_cast<std::size_t>(d));
  }
  GroupTable g = detail::parse_factor(c, cap);
  for (;;) {
    c.skip_space();
    if (c.done()) break;
    if (!c.accept('x')) c.fail("expected 'x' or end of input");
    c.skip_space();
    g = direct_product(g, detail::parse_factor(c, cap), cap);
  }
  return g;
}

/// `{0,2,4}`; when the group carries names, names are accepted as well.
inline GroupSubset parse_subset(const GroupTable& g, std::string_view literal) {
  detail::Cursor c(literal);
  c.expect('{');
  GroupSubset s(g);
  if (c.accept('}')) {
    c.skip_space();
    if (!c.done()) c.fail("unexpected trailing input");
    return s;
  }
  do {
    c.skip_space();
    const std::size_t col = c.column();
    const std::string tok = c.token(",}");
    Element e{};
    std::int64_t index = -1;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), index);
    if (ec == std::errc() && ptr == tok.data() + tok.size()) {
      if (index < 0 || static_cast<std::size_t>(index) >= g.order())
        throw ParseError("element " + tok + " out of range for order " + std::to_string(g.order()), 1, col);
      e = static_cast<Element>(index);
    } else if (auto named = g.lookup(tok)) {
      e = *named;
    } else {
      throw ParseError("unknown element '" + tok + "'", 1, col);
    }
    if (s.contains(e)) throw ParseError("duplicate element '" + tok + "'", 1, col);
    s.insert(e);
  } while (c.accept(','));
  c.expect('}');
  c.skip_space();
  if (!c.done()) c.fail("unexpected trailing input");
  return s;
}

/// `{(0,0),(1,2)}`; in dimension 1 bare integers `{1,-2}` are accepted too.
inline LatticeSubset parse_subset(const LatticeGroup& z, std::string_view literal) {
  detail::Cursor c(literal);
  c.expect('{');
  LatticeSubset s(z);
  if (c.accept('}')) {
    c.skip_space();
    if (!c.done()) c.fail("unexpected trailing input");
    return s;
  }
  do {
    c.skip_space();
    const std::size_t col = c.column();
    LatticePoint x;
    if (c.accept('(')) {
      do x.push_back(c.integer());
      while (c.accept(','));
      c.expect(')');
    } else {
      x.push_back(c.integer());
    }
    if (x.size() != z.dimension())
      throw ParseError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                           std::to_string(z.dimension()),
                       1, col);
    if (s.contains(x)) throw ParseError("duplicate point", 1, col);
    s.insert(x);
  } while (c.accept(','));
  c.expect('}');
  c.skip_space();
  if (!c.done()) c.fail("unexpected trailing input");
  return s;
}

// Cayley-table file format
//
//   # comment
//   n: 4
//   names: e a b c          (optional, whitespace or comma separated)
//   table:
//   0 1 2 3
//   1 0 3 2
//   ...
//
// Keys may appear in any order; exactly n rows of n indices follow `table:`.

inline GroupTable read_cayley_table(std::istream& in, std::string label = "table") {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  auto is_blank = [](const std::string& s) {
    const std::size_t first = s.find_first_not_of(" \t");
    return first == std::string::npos || s[first] == '#';
  };
  auto split_values = [](std::string_view rest) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t i = 0;
    while (i < rest.size()) {
      while (i < rest.size() && (std::isspace(static_cast<unsigned char>(rest[i])) || rest[i] == ',')) ++i;
      const std::size_t start = i;
      while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i])) && rest[i] != ',') ++i;
      if (i > start) out.emplace_back(std::string(rest.substr(start, i - start)), start);
    }
    return out;
  };

  std::optional<std::size_t> n;
  std::size_t n_line = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Element>> rows;
  bool have_table = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (is_blank(line)) continue;
    const std::size_t colon = line.find(':');
    const std::size_t key_start = line.find_first_not_of(" \t");
    if (colon == std::string::npos) throw ParseError("expected 'key:'", li + 1, key_start + 1);
    std::string key = line.substr(key_start, colon - key_start);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    const std::string_view rest = std::string_view(line).substr(colon + 1);
    if (key == "n") {
      const auto vals = split_values(rest);
      if (vals.size() != 1) throw ParseError("'n' takes one integer", li + 1, colon + 2);
      std::size_t v = 0;
      const auto& s = vals[0].first;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
        throw ParseError("'n' must be a positive integer", li + 1, colon + 2 + vals[0].second);
      n = v;
      n_line = li + 1;
    } else if (key == "names") {
      for (auto& [tok, pos] : split_values(rest)) names.push_back(tok);
    } else if (key == "table") {
      if (!n) throw ParseError("'n' must precede 'table'", li + 1, key_start + 1);
      have_table = true;
      std::size_t lj = li + 1;
      while (rows.size() < *n) {
        if (lj >= lines.size()) throw ParseError("table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(*n), lj, 1);
        if (is_blank(lines[lj])) {
          ++lj;
          continue;
        }
        std::vector<Element> row;
        for (auto& [tok, pos] : split_values(lines[lj])) {
          std::uint64_t v = 0;
          auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
          if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("expected an element index, got '" + tok + "'", lj + 1, pos + 1);
          if (v >= *n) throw ParseError("index " + tok + " out of range", lj + 1, pos + 1);
          row.push_back(static_cast<Element>(v));
        }
        if (row.size() != *n)
          throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n), lj + 1, 1);
        rows.push_back(std::move(row));
        ++lj;
      }
      li = lj - 1;
    } else {
      throw ParseError("unknown key '" + key + "'", li + 1, key_start + 1);
    }
  }
  if (!n) throw ParseError("missing 'n'", lines.size() + 1, 1);
  if (!have_table) throw ParseError("missing 'table'", lines.size() + 1, 1);
  if (!names.empty() && names.size() != *n)
    throw ParseError("expected " + std::to_string(*n) + " names, got " + std::to_string(names.size()), n_line, 1);
  return GroupTable::from_cayley_table(rows, std::move(names), std::move(label));
}

inline GroupTable load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  return read_cayley_table(in, path);
}

inline void write_cayley_table(std::ostream& out, const GroupTable& g) {
  out << "# " << (g.label().empty() ? "group" : g.label()) << '\n';
  out << "n: " << g.order() << '\n';
  if (g.has_names()) {
    out << "names:";
    for (const auto& s : g.names()) out << ' ' << s;
    out << '\n';
  }
  out << "table:\n";
  for (const auto& row : g.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

inline std::string to_cayley_text(const GroupTable& g) {
  std::ostringstream os;
  write_cayley_table(os, g);
  return os.str();
}

}  // namespace matchgroup
