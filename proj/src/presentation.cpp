#include "ramikit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ramikit/errors.hpp"
#include "ramikit/validation.hpp"

namespace ramikit {

long Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name)
      return static_cast<long>(i);
  return -1;
}

std::size_t Presentation::normalize() {
  std::vector<Word> kept;
  kept.reserve(relators.size());
  for (const auto &r : relators) {
    Word c = cyclically_reduce(r);
    if (!c.empty())
      kept.push_back(std::move(c));
  }
  const std::size_t dropped = relators.size() - kept.size();
  relators = std::move(kept);
  return dropped;
}

namespace {

bool is_name_tail(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
public:
  WordParser(std::string_view text, const std::vector<std::string> &gens, std::size_t line,
             std::size_t column0)
      : text_(text), gens_(gens), line_(line), col0_(column0) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ < text_.size())
      fail(text_[pos_] == ')' ? "unbalanced ')'" : std::string("unexpected character '") + text_[pos_] + "'");
    return free_reduce(w);
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(line_, col0_ + pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Word sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')')
        return out;
      out.append(factor());
    }
  }

  Word factor() {
    Word base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        negative = text_[pos_] == '-';
        ++pos_;
      }
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (digits == pos_) {
        pos_ = start;
        fail("expected integer exponent after '^'");
      }
      if (pos_ - digits > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      long e = std::stol(std::string(text_.substr(digits, pos_ - digits)));
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  Word atom() {
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      if (pos_ >= text_.size())
        fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && is_name_tail(text_[pos_]))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const bool inverse = std::isupper(static_cast<unsigned char>(name[0]));
      name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end())
        throw UnknownGenerator(line_, col0_ + start, name);
      return {Letter{static_cast<std::uint32_t>(it - gens_.begin()), static_cast<std::int8_t>(inverse ? -1 : 1)}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string> &gens_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

bool valid_generator_name(const std::string &s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin() + 1, s.end(), is_name_tail);
}

std::string_view trim(std::string_view s, std::size_t &offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  offset += b;
  return s.substr(b, e - b);
}

} // namespace

Word parse_word(std::string_view text, const std::vector<std::string> &generators) {
  return WordParser(text, generators, 1, 1).parse();
}

KnotGroupData parse_presentation(std::string_view text, const ParseOptions &options,
                                 std::vector<std::string> *warnings) {
  auto warn = [&](const std::string &msg) {
    if (warnings)
      warnings->push_back(msg);
  };

  struct Pending {
    std::string_view body;
    std::size_t line;
    std::size_t column;
  };
  std::optional<Pending> gens_line;
  std::vector<Pending> rel_lines;
  std::optional<Pending> meridian_line, longitude_line;
  std::string label = options.label;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t col = 1;
    line = trim(line, col);
    if (line.empty())
      continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, col, "expected 'key: value'");
    std::size_t key_col = col;
    std::string key(trim(line.substr(0, colon), key_col));
    std::size_t body_col = col + colon + 1;
    std::string_view body = trim(line.substr(colon + 1), body_col);
    Pending p{body, line_no, body_col};

    if (key == "gens") {
      if (gens_line)
        throw ParseError(line_no, key_col, "duplicate 'gens' line");
      gens_line = p;
    } else if (key == "rel") {
      rel_lines.push_back(p);
    } else if (key == "meridian") {
      if (meridian_line)
        throw ParseError(line_no, key_col, "duplicate 'meridian' line");
      meridian_line = p;
    } else if (key == "longitude") {
      if (longitude_line)
        throw ParseError(line_no, key_col, "duplicate 'longitude' line");
      longitude_line = p;
    } else if (key == "label") {
      label = std::string(body);
    } else if (key == "embed") {
      // subgroup-presentation metadata; not needed to rebuild the group
    } else {
      throw ParseError(line_no, key_col, "unknown key '" + key + "'");
    }
  }
  if (!gens_line)
    throw ParseError(line_no ? line_no : 1, 1, "missing 'gens' line");

  KnotGroupData data;
  data.label = label;
  auto &pres = data.presentation;
  {
    std::istringstream in{std::string(gens_line->body)};
    std::string name;
    std::size_t search = 0;
    while (in >> name) {
      const std::size_t at = gens_line->body.find(name, search);
      search = at + name.size();
      if (!valid_generator_name(name))
        throw ParseError(gens_line->line, gens_line->column + at,
                         "invalid generator name '" + name + "'");
      if (pres.find_generator(name) >= 0)
        throw ParseError(gens_line->line, gens_line->column + at,
                         "duplicate generator '" + name + "'");
      pres.generators.push_back(name);
    }
  }
  if (pres.generators.empty())
    throw ParseError(gens_line->line, gens_line->column, "no generators declared");

  for (const auto &r : rel_lines) {
    if (r.body.empty())
      continue;
    Word w = cyclically_reduce(WordParser(r.body, pres.generators, r.line, r.column).parse());
    if (w.empty()) {
      warn("line " + std::to_string(r.line) + ": relator reduces to the identity; dropped");
      continue;
    }
    if (std::find(pres.relators.begin(), pres.relators.end(), w) != pres.relators.end()) {
      warn("line " + std::to_string(r.line) + ": duplicate relator dropped");
      continue;
    }
    pres.relators.push_back(std::move(w));
  }

  if (meridian_line)
    data.meridian = WordParser(meridian_line->body, pres.generators, meridian_line->line,
                               meridian_line->column).parse();
  else
    data.meridian = Word{Letter{0, 1}};
  if (longitude_line)
    data.longitude = WordParser(longitude_line->body, pres.generators, longitude_line->line,
                                longitude_line->column).parse();

  const ValidationReport report = validate_knot_group(data);
  if (const auto *bad = report.first_failure()) {
    const std::string msg = "knot-group validation failed: " + bad->name + " (" + bad->detail + ")";
    if (options.validation == Validation::Enforce)
      throw ValidationError(msg);
    warn(msg);
  }
  return data;
}

KnotGroupData load_presentation(const std::string &path, const ParseOptions &options,
                                std::vector<std::string> *warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ParseOptions opts = options;
  if (opts.label.empty()) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    if (auto dot = base.rfind('.'); dot != std::string::npos && dot > 0)
      base = base.substr(0, dot);
    opts.label = base;
  }
  KnotGroupData data = parse_presentation(buf.str(), opts, warnings);
  return data;
}

std::string format_word(const Word &w, const std::vector<std::string> &generators) {
  if (w.empty())
    return "1";
  std::string out;
  bool multi = std::any_of(generators.begin(), generators.end(),
                           [](const std::string &g) { return g.size() > 1; });
  for (const auto &l : w) {
    if (multi && !out.empty())
      out += ' ';
    std::string name = generators.at(l.gen);
    if (l.sign < 0)
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += name;
  }
  return out;
}

std::string format_presentation(const Presentation &pres) {
  std::string out = "gens:";
  for (const auto &g : pres.generators)
    out += " " + g;
  out += '\n';
  for (const auto &r : pres.relators)
    out += "rel: " + format_word(r, pres.generators) + "\n";
  if (pres.relators.empty())
    out += "rel:\n";
  return out;
}

std::string format_knot(const KnotGroupData &knot) {
  std::string out;
  if (!knot.label.empty())
    out += "label: " + knot.label + "\n";
  out += format_presentation(knot.presentation);
  out += "meridian: " + format_word(knot.meridian, knot.presentation.generators) + "\n";
  if (knot.longitude)
    out += "longitude: " + format_word(*knot.longitude, knot.presentation.generators) + "\n";
  return out;
}

} // namespace ramikit
