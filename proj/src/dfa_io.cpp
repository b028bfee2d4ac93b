#include "qcomp/dfa_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qcomp/errors.hpp"

namespace qcomp {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::size_t parse_number(std::size_t line, const Token& t) {
  std::size_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, t.column,
                     "expected a non-negative integer, got '" +
                         std::string(t.text) + "'");
  }
  return value;
}

Letter parse_letter(std::size_t line, const Token& t) {
  if (t.text.size() != 1 || t.text[0] < 'a' || t.text[0] > 'z') {
    throw ParseError(line, t.column,
                     "expected a letter a-z, got '" + std::string(t.text) + "'");
  }
  return t.text[0];
}

struct Located {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct RowSpec {
  Located where;
  std::vector<std::pair<std::size_t, Located>> images;
};

}  // namespace

std::string render_dfa(const Dfa& d) {
  std::ostringstream os;
  os << "states " << d.state_count() << '\n';
  os << "alphabet";
  for (char a : d.alphabet()) os << ' ' << a;
  os << '\n';
  os << "initial " << d.initial() << '\n';
  os << "final";
  d.finals().for_each([&](State q) { os << ' ' << q; });
  os << '\n';
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    os << "row " << d.alphabet()[i];
    for (State q : d.delta(i).images()) os << ' ' << q;
    os << '\n';
  }
  return os.str();
}

Dfa parse_dfa(std::string_view text) {
  std::optional<std::size_t> states;
  Located states_at;
  std::optional<std::string> letters;
  std::vector<Located> letter_at;
  std::optional<std::pair<std::size_t, Located>> initial;
  std::optional<std::vector<std::pair<std::size_t, Located>>> finals;
  std::map<Letter, RowSpec> rows;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view keyword = tokens[0].text;
    auto once = [&](bool already) {
      if (already) {
        throw ParseError(line_no, tokens[0].column,
                         "duplicate '" + std::string(keyword) + "' directive");
      }
    };
    auto arity = [&](std::size_t expected) {
      if (tokens.size() != expected) {
        throw ParseError(line_no, tokens[0].column,
                         "'" + std::string(keyword) + "' takes " +
                             std::to_string(expected - 1) + " argument(s)");
      }
    };
    if (keyword == "states") {
      once(states.has_value());
      arity(2);
      states = parse_number(line_no, tokens[1]);
      states_at = {line_no, tokens[1].column};
      if (*states == 0) {
        throw ParseError(line_no, tokens[1].column, "state count must be positive");
      }
    } else if (keyword == "alphabet") {
      once(letters.has_value());
      std::string seen;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Letter a = parse_letter(line_no, tokens[i]);
        if (seen.find(a) != std::string::npos) {
          throw ParseError(line_no, tokens[i].column,
                           std::string("duplicate letter '") + a + "'");
        }
        seen.push_back(a);
        letter_at.push_back({line_no, tokens[i].column});
      }
      letters = seen;
    } else if (keyword == "initial") {
      once(initial.has_value());
      arity(2);
      initial = {parse_number(line_no, tokens[1]), {line_no, tokens[1].column}};
    } else if (keyword == "final") {
      once(finals.has_value());
      finals.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        finals->push_back({parse_number(line_no, tokens[i]),
                           {line_no, tokens[i].column}});
      }
    } else if (keyword == "row") {
      if (tokens.size() < 2) {
        throw ParseError(line_no, tokens[0].column, "'row' needs a letter");
      }
      const Letter a = parse_letter(line_no, tokens[1]);
      if (rows.contains(a)) {
        throw ParseError(line_no, tokens[1].column,
                         std::string("duplicate row for letter '") + a + "'");
      }
      RowSpec spec{{line_no, tokens[1].column}, {}};
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        spec.images.push_back({parse_number(line_no, tokens[i]),
                               {line_no, tokens[i].column}});
      }
      rows.emplace(a, std::move(spec));
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "unknown directive '" + std::string(keyword) + "'");
    }
  }

  const std::size_t eof_line = line_no;
  if (!states) throw ParseError(eof_line, 1, "missing 'states' directive");
  if (!letters) throw ParseError(eof_line, 1, "missing 'alphabet' directive");
  if (!initial) throw ParseError(eof_line, 1, "missing 'initial' directive");
  if (!finals) throw ParseError(eof_line, 1, "missing 'final' directive");
  const std::size_t n = *states;

  auto check_state = [&](std::size_t q, const Located& at) {
    if (q >= n) {
      throw ParseError(at.line, at.column,
                       "state " + std::to_string(q) + " out of range 0.." +
                           std::to_string(n - 1));
    }
  };
  check_state(initial->first, initial->second);
  StateSet final_set(n);
  for (const auto& [q, at] : *finals) {
    check_state(q, at);
    final_set.insert(static_cast<State>(q));
  }

  for (const auto& [a, spec] : rows) {
    if (letters->find(a) == std::string::npos) {
      throw ParseError(spec.where.line, spec.where.column,
                       std::string("row for letter '") + a +
                           "' which is not in the alphabet");
    }
  }

  std::vector<Transformation> delta;
  for (std::size_t i = 0; i < letters->size(); ++i) {
    const char a = (*letters)[i];
    const auto it = rows.find(a);
    if (it == rows.end()) {
      throw ParseError(letter_at[i].line, letter_at[i].column,
                       std::string("no row for letter '") + a + "'");
    }
    const RowSpec& spec = it->second;
    if (spec.images.size() != n) {
      throw ParseError(spec.where.line, spec.where.column,
                       std::string("row '") + a + "' has " +
                           std::to_string(spec.images.size()) +
                           " images, expected " + std::to_string(n));
    }
    std::vector<State> images;
    images.reserve(n);
    for (const auto& [q, at] : spec.images) {
      check_state(q, at);
      images.push_back(static_cast<State>(q));
    }
    delta.emplace_back(std::move(images));
  }
  return Dfa(n, Alphabet(*letters), std::move(delta),
             static_cast<State>(initial->first), std::move(final_set));
}

Dfa read_dfa_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dfa(buffer.str());
}

void write_dfa_file(const std::filesystem::path& path, const Dfa& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << render_dfa(d);
}

}  // namespace qcomp
