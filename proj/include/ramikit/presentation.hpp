#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramikit/word.hpp"

namespace ramikit {

/// Finitely presented group. Relators are kept cyclically reduced and nonempty.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }
  /// Index of a generator name, or -1.
  long find_generator(std::string_view name) const;

  /// Cyclically reduces every relator and drops empty ones. Returns the number dropped.
  std::size_t normalize();
};

struct KnotGroupData {
  Presentation presentation;
  Word meridian;
  std::optional<Word> longitude;
  std::string label;
};

enum class Validation { Enforce, Advisory };

struct ParseOptions {
  Validation validation = Validation::Enforce;
  /// Used when the text has no `label:` line.
  std::string label;
};

/// Parses a word over `generators`. Accepts juxtaposition, spaces, `^n`, parentheses and `1`.
Word parse_word(std::string_view text, const std::vector<std::string> &generators);

/// Parses a presentation file. Warnings (dropped relators and the like) are appended to `warnings`
/// when given. Throws ParseError, UnknownGenerator, or ValidationError under Validation::Enforce.
KnotGroupData parse_presentation(std::string_view text, const ParseOptions &options = {},
                                 std::vector<std::string> *warnings = nullptr);

KnotGroupData load_presentation(const std::string &path, const ParseOptions &options = {},
                                std::vector<std::string> *warnings = nullptr);

/// Juxtaposed names, uppercase for inverses; "1" for the empty word.
std::string format_word(const Word &w, const std::vector<std::string> &generators);

/// Round-trippable presentation file text.
std::string format_presentation(const Presentation &pres);
std::string format_knot(const KnotGroupData &knot);

} // namespace ramikit
