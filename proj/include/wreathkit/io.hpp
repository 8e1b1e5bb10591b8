#ifndef WREATHKIT_IO_HPP_
#define WREATHKIT_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cosetenum.hpp"
#include "fingrp.hpp"
#include "wlp.hpp"

// File formats:
//   .grp.json  {"names": [...], "order": n, "table": [[...]]}, names optional
//   .wlp.json  {"action": {b: perm}, "epsilon": [...], "group": <grp>,
//               "section": [...], "summands": {i: [ids]}}
// B is not stored: its table is recovered as epsilon(section(b) section(c)).

namespace wreathkit {

  using json = nlohmann::json;

  inline json group_to_json(FiniteGroup const& G) {
    json j;
    j["order"] = G.order();
    j["table"] = table_rows(G);
    if (!G.names().empty()) {
      j["names"] = G.names();
    }
    return j;
  }

  inline FiniteGroup group_from_json(json const& j) {
    try {
      auto rows = j.at("table").get<std::vector<std::vector<element_type>>>();
      if (j.at("order").get<std::size_t>() != rows.size()) {
        throw NotAGroup("order does not match the table");
      }
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      return validate_group(rows, std::move(names));
    } catch (json::exception const& e) {
      throw ParseError(std::string("malformed group file: ") + e.what());
    }
  }

  inline json wlp_to_json(WreathLikeProduct const& x) {
    json j;
    j["group"]   = group_to_json(x.W);
    j["epsilon"] = x.epsilon.image;
    j["section"] = x.section;
    json summands = json::object(), action = json::object();
    for (std::size_t i = 0; i < x.summands.size(); ++i) {
      summands[std::to_string(i)] = x.summands[i];
    }
    for (std::size_t b = 0; b < x.action.size(); ++b) {
      action[std::to_string(b)] = x.action[b];
    }
    j["summands"] = summands;
    j["action"]   = action;
    return j;
  }

  inline WreathLikeProduct wlp_from_json(json const& j) {
    try {
      WreathLikeProduct x;
      x.W        = group_from_json(j.at("group"));
      auto eps   = j.at("epsilon").get<std::vector<element_type>>();
      x.section  = j.at("section").get<std::vector<element_type>>();
      auto const nb = x.section.size();
      if (eps.size() != x.W.order() || nb == 0) {
        throw ParseError("epsilon or section has the wrong size");
      }
      for (auto s : x.section) {
        if (s >= x.W.order()) {
          throw ParseError("section entry out of range");
        }
      }
      std::vector<std::vector<element_type>> rows(nb, std::vector<element_type>(nb));
      for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t c = 0; c < nb; ++c) {
          auto v = eps[x.W.mul(x.section[b], x.section[c])];
          if (v >= nb) {
            throw ParseError("epsilon value out of range");
          }
          rows[b][c] = v;
        }
      }
      x.B       = validate_group(rows);
      x.epsilon = make_homomorphism(x.W, x.B, std::move(eps));
      auto const& s = j.at("summands");
      x.summands.resize(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto set = s.at(std::to_string(i)).get<ElementSet>();
        std::sort(set.begin(), set.end());
        x.summands[i] = std::move(set);
      }
      auto const& a = j.at("action");
      x.action.resize(nb);
      for (std::size_t b = 0; b < nb; ++b) {
        x.action[b] = a.at(std::to_string(b)).get<std::vector<std::size_t>>();
      }
      return x;
    } catch (json::exception const& e) {
      throw ParseError(std::string("malformed wreath-like product file: ") + e.what());
    }
  }

  inline json coset_table_to_json(CosetTable const& t) {
    json perms = json::array();
    if (t.closed()) {
      for (std::size_t g = 0; g < t.alphabet->size(); ++g) {
        perms.push_back(t.permutation(g));
      }
    }
    return json{{"order", t.num_cosets}, {"generator_permutations", perms}};
  }

  inline std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidArgument("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  inline json read_json_file(std::string const& path) {
    try {
      return json::parse(read_text_file(path));
    } catch (json::parse_error const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  // Canonical text for the file formats: two-space indent, trailing newline.
  inline std::string dump_file(json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace wreathkit

#endif  // WREATHKIT_IO_HPP_
