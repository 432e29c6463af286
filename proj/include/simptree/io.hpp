#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simptree/complex.hpp"

namespace simptree {

/// Parse failure with a 1-based input position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// How a facet chunk maps to vertices.
enum class NameMode {
  auto_detect,  ///< header comment "# names: ..." if present, else separators decide
  single_char,  ///< "xyz" is the three vertices x, y, z
  named,        ///< whitespace or '*' separates multi-character names: "x1 x2", "x1*x2"
};

struct ParseOptions {
  bool minimize = false;          ///< drop facets contained in another instead of erroring
  NameMode names = NameMode::auto_detect;
};

namespace detail {

struct Chunk {
  std::vector<std::string> tokens;
  int line = 0;
  int column = 0;       // position of the first token
  bool separated = false;  // contained a whitespace or '*' separator between tokens
};

inline bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace detail

/**
 * Parse a facet complex.
 *
 * Grammar: facets are separated by commas and newlines; '#' starts a comment
 * running to the end of the line; blank lines are ignored. Within a facet,
 * vertices are either juxtaposed single characters ("xyz") or names separated
 * by whitespace or '*' ("x1 x2 x3", "x1*x2*x3"); monomial generator lists and
 * facet lists therefore share one grammar. With NameMode::auto_detect the
 * mode is taken from a leading "# names: single" / "# names: multi" header
 * comment when present, and otherwise from whether any facet contains a
 * separator. Errors carry the 1-based line and column of the offence.
 */
inline FacetComplex parse_complex(std::string_view text, const ParseOptions& options = {}) {
  using detail::Chunk;

  std::vector<Chunk> chunks;
  NameMode declared = NameMode::auto_detect;
  bool any_content = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      // a "# names: ..." header before any facet is an explicit mode declaration
      if (!any_content && declared == NameMode::auto_detect) {
        std::string_view comment = line.substr(hash + 1);
        std::size_t b = comment.find_first_not_of(" \t");
        if (b != std::string_view::npos && comment.substr(b).starts_with("names:")) {
          std::string_view value = comment.substr(b + 6);
          std::size_t vb = value.find_first_not_of(" \t");
          std::size_t ve = value.find_last_not_of(" \t");
          if (vb != std::string_view::npos) {
            std::string_view v = value.substr(vb, ve - vb + 1);
            if (v == "single") declared = NameMode::single_char;
            if (v == "multi") declared = NameMode::named;
          }
        }
      }
      line = line.substr(0, hash);
    }

    // split the line into comma-separated chunks, keeping column positions
    std::size_t chunk_begin = 0;
    bool line_blank = line.find_first_not_of(" \t") == std::string_view::npos;
    while (!line_blank && chunk_begin <= line.size()) {
      std::size_t comma = line.find(',', chunk_begin);
      std::size_t chunk_end = comma == std::string_view::npos ? line.size() : comma;
      Chunk chunk;
      chunk.line = line_no;
      chunk.column = static_cast<int>(chunk_begin) + 1;
      std::size_t t = chunk_begin;
      while (t < chunk_end) {
        char c = line[t];
        if (c == ' ' || c == '\t' || c == '*') {
          ++t;
          continue;
        }
        if (!detail::name_char(c))
          throw ParseError(line_no, static_cast<int>(t) + 1,
                           std::string("invalid character '") + c + "'");
        std::size_t start = t;
        while (t < chunk_end && detail::name_char(line[t])) ++t;
        if (chunk.tokens.empty()) chunk.column = static_cast<int>(start) + 1;
        chunk.tokens.emplace_back(line.substr(start, t - start));
      }
      if (chunk.tokens.empty()) {
        if (comma != std::string_view::npos || !chunks.empty() || any_content)
          throw ParseError(line_no, chunk.column, "empty facet");
      } else {
        if (chunk.tokens.size() > 1) chunk.separated = true;
        any_content = true;
        chunks.push_back(std::move(chunk));
      }
      if (comma == std::string_view::npos) break;
      chunk_begin = comma + 1;
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (chunks.empty()) throw ParseError(1, 1, "empty input: no facets");

  NameMode mode = options.names;
  if (mode == NameMode::auto_detect) mode = declared;
  if (mode == NameMode::auto_detect) {
    mode = NameMode::single_char;
    for (const auto& chunk : chunks)
      if (chunk.separated) mode = NameMode::named;
  }

  // expand chunks to per-facet vertex name lists
  std::vector<std::vector<std::string>> facets;
  facets.reserve(chunks.size());
  for (const auto& chunk : chunks) {
    std::vector<std::string> names;
    for (const auto& token : chunk.tokens) {
      if (mode == NameMode::named) {
        names.push_back(token);
      } else {
        for (char c : token) names.emplace_back(1, c);
      }
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw ParseError(chunk.line, chunk.column,
                           "repeated vertex '" + names[i] + "' in facet");
    facets.push_back(std::move(names));
  }

  // construct; on duplicate/containment failures, rediscover the offending
  // facet so the error carries its position
  try {
    return FacetComplex::from_names(facets, options.minimize);
  } catch (const std::invalid_argument&) {
    // rebuild the failure with a position: find the offending pair directly
    std::vector<Bitset> sets;
    std::unordered_map<std::string, int> ids;
    for (const auto& facet : facets)
      for (const auto& name : facet) ids.emplace(name, static_cast<int>(ids.size()));
    for (const auto& facet : facets) {
      Bitset b(static_cast<int>(ids.size()));
      for (const auto& name : facet) b.set(ids.at(name));
      sets.push_back(std::move(b));
    }
    for (std::size_t j = 0; j < sets.size(); ++j)
      for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i == j) continue;
        if (sets[j] == sets[i] && i < j)
          throw ParseError(chunks[j].line, chunks[j].column, "duplicate facet");
        if (sets[j] != sets[i] && sets[j].subset_of(sets[i]))
          throw ParseError(chunks[j].line, chunks[j].column,
                           "facet is contained in another facet (not an antichain)");
      }
    throw;  // some other constructor failure; keep it
  }
}

/**
 * Canonical text form: one facet per line, vertices in id order. When any
 * vertex name has more than one character the output starts with a
 * "# names: multi" header and separates vertices with spaces, so the result
 * re-parses exactly under auto-detection even for single-vertex facets.
 */
inline std::string serialize_complex(const FacetComplex& c) {
  std::string out;
  bool compact = c.compact_names();
  if (!compact) out += "# names: multi\n";
  for (int f = 0; f < c.facet_count(); ++f) {
    c.facet(f).for_each([&](int v) {
      if (!out.empty() && out.back() != '\n' && !compact) out += ' ';
      out += c.vertex_name(v);
    });
    out += '\n';
  }
  return out;
}

}  // namespace simptree
