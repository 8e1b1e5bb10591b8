#ifndef WREATHKIT_PRESENTATION_HPP_
#define WREATHKIT_PRESENTATION_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

namespace wreathkit {

  // <alphabet | relators>. Relators are kept in input order; duplicates are
  // allowed here and only collapse under symmetrization.
  struct Presentation {
    AlphabetPtr       alphabet;
    std::vector<Word> relators;

    Presentation() : alphabet(Alphabet::make({})) {}

    explicit Presentation(AlphabetPtr a, std::vector<Word> rels = {})
        : alphabet(std::move(a)), relators(std::move(rels)) {
      for (auto const& r : relators) {
        if (!same_alphabet(r.alphabet(), alphabet)) {
          throw AlphabetMismatch("relator over a different alphabet");
        }
      }
    }

    std::size_t num_generators() const noexcept {
      return alphabet->size();
    }

    Word word(std::string_view text) const {
      return parse_word(alphabet, text);
    }

    void add_relator(Word r) {
      if (!same_alphabet(r.alphabet(), alphabet)) {
        throw AlphabetMismatch("relator over a different alphabet");
      }
      relators.push_back(std::move(r));
    }

    friend bool operator==(Presentation const& x, Presentation const& y) {
      return same_alphabet(x.alphabet, y.alphabet) && x.relators == y.relators;
    }
  };

  inline Presentation make_presentation(std::vector<std::string>         gens,
                                        std::vector<std::string> const& relators) {
    Presentation p(Alphabet::make(std::move(gens)));
    for (auto const& r : relators) {
      p.add_relator(p.word(r));
    }
    return p;
  }

  struct ParsedPresentation {
    Presentation             presentation;
    std::vector<std::string> warnings;
  };

  // Line-oriented `.pres` format:
  //   gens <ident>+     exactly once, first non-comment line
  //   rel <word>        one relator per line
  //   # comment         (also trailing), blank lines ignored
  inline ParsedPresentation parse_presentation(std::string_view text) {
    ParsedPresentation out;
    bool               have_gens = false;
    std::size_t        line_no   = 0;
    std::size_t        pos       = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      std::string_view line = text.substr(pos, eol - pos);
      pos                   = eol + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) {
        continue;
      }
      std::size_t      kw_end  = line.find_first_of(" \t", first);
      std::string_view keyword = line.substr(first, kw_end == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : kw_end - first);
      std::size_t      rest_at = kw_end == std::string_view::npos ? line.size() : kw_end;
      std::string_view rest    = line.substr(rest_at);
      if (keyword == "gens") {
        if (have_gens) {
          throw ParseError("duplicate 'gens' line", line_no, first + 1);
        }
        std::vector<std::string> names;
        std::istringstream       in{std::string(rest)};
        for (std::string name; in >> name;) {
          if (!Alphabet::valid_name(name) || name == "eps") {
            throw ParseError("invalid generator name '" + name + "'", line_no,
                             rest_at + std::string(rest).find(name) + 1);
          }
          names.push_back(name);
        }
        try {
          out.presentation = Presentation(Alphabet::make(std::move(names)));
        } catch (InvalidArgument const& e) {
          throw ParseError(e.what(), line_no, first + 1);
        }
        have_gens = true;
      } else if (keyword == "rel") {
        if (!have_gens) {
          throw ParseError("'rel' before 'gens'", line_no, first + 1);
        }
        auto raw = detail::parse_letters(*out.presentation.alphabet, rest, line_no, rest_at + 1);
        Word w(out.presentation.alphabet, std::move(raw));
        if (!is_cyclically_reduced(w)) {
          out.warnings.push_back("line " + std::to_string(line_no)
                                 + ": relator cyclically reduced");
          w = cyclic_core(w);
        }
        out.presentation.relators.push_back(std::move(w));
      } else {
        throw ParseError("expected 'gens' or 'rel', found '" + std::string(keyword) + "'",
                         line_no, first + 1);
      }
    }
    if (!have_gens) {
      throw ParseError("missing 'gens' line");
    }
    return out;
  }

  inline ParsedPresentation read_presentation_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidArgument("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }

  inline std::string to_string(Presentation const& p) {
    std::string out = "gens";
    for (auto const& name : p.alphabet->names()) {
      out += ' ' + name;
    }
    out += '\n';
    for (auto const& r : p.relators) {
      out += "rel " + to_string(r) + '\n';
    }
    return out;
  }

}  // namespace wreathkit

#endif  // WREATHKIT_PRESENTATION_HPP_
