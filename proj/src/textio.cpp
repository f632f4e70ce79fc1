#include "locustra/textio.hpp"

#include <algorithm>
#include <set>

#include "locustra/errors.hpp"
#include "locustra/lattice.hpp"
#include "locustra/poset.hpp"

namespace locustra {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string line =
        end == std::string::npos ? text.substr(pos) : text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') out.push_back({number, std::move(line)});
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

int parse_index(const Line& line, const std::string& token, int n, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line.number, std::string("bad ") + what + " '" + token + "'");
  long value = 0;
  for (char c : token) {
    value = value * 10 + (c - '0');
    if (value > kMaxCarrier) break;
  }
  if (value >= n)
    throw ParseError(line.number, std::string(what) + " " + token + " out of range (n=" +
                                      std::to_string(n) + ")");
  return static_cast<int>(value);
}

int parse_header(const Line& line, const char* keyword) {
  const auto words = split_words(line.text);
  if (words.size() != 2 || words[0] != keyword || words[1].rfind("n=", 0) != 0)
    throw ParseError(line.number, std::string("expected '") + keyword + " n=<count>'");
  const std::string count = words[1].substr(2);
  if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line.number, "bad count '" + count + "'");
  long value = 0;
  for (char c : count) {
    value = value * 10 + (c - '0');
    if (value > kMaxCarrier * 2L) break;
  }
  if (value > kMaxCarrier)
    throw ParseError(line.number, "n=" + count + " exceeds the 64-element limit");
  return static_cast<int>(value);
}

std::vector<std::string> split_csv(const Line& line, const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string part =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    if (part.empty()) throw ParseError(line.number, "empty entry in '" + text + "'");
    parts.push_back(part);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

FiniteSpace parse_space(const std::string& text, bool complete_family) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const int n = parse_header(lines[0], "space");
  std::vector<Mask> opens;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto words = split_words(line.text);
    if (words.size() != 2 || words[0] != "open")
      throw ParseError(line.number, "expected 'open <points>' or 'open -'");
    Mask open = 0;
    if (words[1] != "-") {
      for (const std::string& token : split_csv(line, words[1])) {
        const int p = parse_index(line, token, n, "point index");
        if (mask_test(open, p)) throw ParseError(line.number, "duplicate point index " + token);
        open |= mask_bit(p);
      }
    }
    if (std::find(opens.begin(), opens.end(), open) != opens.end())
      throw ParseError(line.number, "duplicate open {" + mask_to_csv(open) + "}");
    opens.push_back(open);
  }
  if (complete_family) {
    std::set<Mask> family(opens.begin(), opens.end());
    family.insert(0);
    family.insert(mask_all(n));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> snapshot(family.begin(), family.end());
      for (std::size_t i = 0; i < snapshot.size(); ++i)
        for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
          grew |= family.insert(snapshot[i] | snapshot[j]).second;
          grew |= family.insert(snapshot[i] & snapshot[j]).second;
        }
    }
    opens.assign(family.begin(), family.end());
  }
  return FiniteSpace::from_opens(n, std::move(opens));
}

std::string write_space(const FiniteSpace& s) {
  std::string out = "space n=" + std::to_string(s.points()) + "\n";
  for (Mask u : s.opens()) out += "open " + mask_to_csv(u) + "\n";
  return out;
}

LatticeFile parse_lattice_file(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  LatticeFile out;
  out.n = parse_header(lines[0], "lattice");
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto words = split_words(line.text);
    if (words.size() != 3 || words[0] != "cover")
      throw ParseError(line.number, "expected 'cover <i> <j>'");
    const int a = parse_index(line, words[1], out.n, "element index");
    const int b = parse_index(line, words[2], out.n, "element index");
    if (std::find(out.covers.begin(), out.covers.end(), std::pair{a, b}) != out.covers.end())
      throw ParseError(line.number,
                       "duplicate cover " + words[1] + " " + words[2]);
    out.covers.emplace_back(a, b);
  }
  return out;
}

FiniteFrame parse_lattice(const std::string& text) {
  const LatticeFile file = parse_lattice_file(text);
  return frame_from_lattice(
      lattice_from_poset(poset_from_covers(file.n, file.covers)));
}

std::string write_lattice(const FinitePoset& order) {
  std::string out = "lattice n=" + std::to_string(order.size()) + "\n";
  for (auto [a, b] : order.cover_pairs())
    out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::string one_line(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '\n') {
      out += ';';
    } else {
      out += c;
    }
  }
  while (!out.empty() && out.back() == ';') out.pop_back();
  return out;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace locustra
