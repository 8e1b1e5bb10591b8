// wreathkit: batch verification front end. One verb per process; every run
// produces a single canonical JSON (or text) report.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wreathkit/wreathkit.hpp"

namespace wk = wreathkit;
using wk::json;

namespace {

  constexpr int exit_pass         = 0;
  constexpr int exit_fail         = 1;
  constexpr int exit_inconclusive = 2;
  constexpr int exit_usage        = 64;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("sha256 failed");
    }
    static char const hex[] = "0123456789abcdef";
    std::string       out;
    for (unsigned i = 0; i < len; ++i) {
      out += hex[digest[i] >> 4];
      out += hex[digest[i] & 15];
    }
    return out;
  }

  struct Report {
    std::string status = "pass";
    json        inputs = json::array();
    json        results = json::object();
    json        witnesses = json::object();

    void fail() {
      status = "fail";
    }
    void require(bool ok) {
      if (!ok && status == "pass") {
        status = "fail";
      }
    }
    void inconclusive() {
      if (status == "pass") {
        status = "inconclusive";
      }
    }
  };

  Report* current = nullptr;

  // Reads a file and records it in the report's inputs.
  std::string load_input(std::string const& path) {
    std::string text;
    try {
      text = wk::read_text_file(path);
    } catch (wk::InvalidArgument const& e) {
      throw UsageError(e.what());
    }
    current->inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  wk::Presentation load_presentation(std::string const& path) {
    auto text = load_input(path);
    try {
      auto parsed = wk::parse_presentation(text);
      if (!parsed.warnings.empty()) {
        current->results["parse_warnings"] = parsed.warnings;
      }
      return parsed.presentation;
    } catch (wk::ParseError const& e) {
      throw UsageError(path + ":" + e.what());
    }
  }

  std::string rat(wk::Rational const& r) {
    return wk::to_string(r);
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw UsageError("cannot write '" + path + "'");
    }
    out << text;
  }

  // Z<n>, S<n>, D<n> (order 2n), Q8, A<n>, factors joined with 'x'
  // (Z2xZ2), or a .grp.json path.
  wk::FiniteGroup parse_group_desc(std::string const& desc) {
    if (desc.size() > 9 && desc.substr(desc.size() - 9) == ".grp.json") {
      auto text = load_input(desc);
      try {
        return wk::group_from_json(json::parse(text));
      } catch (json::parse_error const& e) {
        throw UsageError(desc + ": " + e.what());
      }
    }
    wk::FiniteGroup   G;
    std::stringstream in(desc);
    std::string       tok;
    bool              first = true;
    while (std::getline(in, tok, 'x')) {
      if (tok.size() < 2) {
        throw UsageError("bad group '" + desc + "'");
      }
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n                = std::stoul(tok.substr(1), &used);
        if (used != tok.size() - 1) {
          throw std::invalid_argument("trailing");
        }
      } catch (std::exception const&) {
        throw UsageError("bad group '" + desc + "'");
      }
      wk::FiniteGroup F;
      switch (tok[0]) {
        case 'Z': F = wk::cyclic_group(n); break;
        case 'S': F = wk::symmetric_group(n); break;
        case 'D': F = wk::dihedral_group(n); break;
        case 'A': F = wk::alternating_group(n); break;
        case 'Q':
          if (n != 8) {
            throw UsageError("only Q8 is available");
          }
          F = wk::quaternion_group();
          break;
        default: throw UsageError("bad group '" + desc + "'");
      }
      if (n == 0 || n > 4096) {
        throw UsageError("bad group '" + desc + "'");
      }
      G     = first ? F : wk::direct_product(G, F);
      first = false;
    }
    return G;
  }

  // Z<n> with the given generator name, or a .pres path.
  wk::Presentation parse_factor_desc(std::string const& desc, std::string const& gen) {
    if (desc.size() > 5 && desc.substr(desc.size() - 5) == ".pres") {
      return load_presentation(desc);
    }
    if (desc.size() >= 2 && desc[0] == 'Z') {
      try {
        std::size_t used = 0;
        auto        n    = std::stoul(desc.substr(1), &used);
        if (used == desc.size() - 1 && n >= 1) {
          return wk::make_presentation({gen}, {gen + "^" + std::to_string(n)});
        }
      } catch (std::exception const&) {
      }
    }
    throw UsageError("bad factor '" + desc + "' (expected Z<n> or a .pres file)");
  }

  json ints(std::vector<wk::Integer> const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(x.str());
    }
    return out;
  }

  json class_sizes(wk::ConjugacyData const& c) {
    json out = json::array();
    for (auto const& cl : c.classes) {
      out.push_back(cl.size());
    }
    return out;
  }

  std::string text_value(json const& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  std::string render(json const& report, std::string const& format) {
    if (format == "json") {
      return report.dump() + "\n";
    }
    std::string out = "status: " + report["status"].get<std::string>() + "\n";
    for (auto const& [k, v] : report["results"].items()) {
      out += k + ": " + text_value(v) + "\n";
    }
    for (auto const& [k, v] : report["witnesses"].items()) {
      out += "witness " + k + ": " + text_value(v) + "\n";
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wreathkit: presentations, coset enumeration, and wreath-like products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wk::version));

  std::string out_path;
  std::string format = "json";
  auto        common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the report to this path");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };

  Report                report;
  std::function<void()> action;
  current = &report;

  std::size_t max_cosets = wk::default_max_cosets();
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", max_cosets, "Coset budget (default 100000 or WREATHKIT_MAX_COSETS)")
        ->check(CLI::PositiveNumber);
  };

  // sc-check
  std::string pres_file, lambda_text = "1/6";
  auto*       sc = app.add_subcommand("sc-check", "Check the metric small cancellation condition");
  sc->add_option("--lambda", lambda_text, "Bound as p/q");
  sc->add_option("file", pres_file, ".pres file")->required();
  common(sc);
  sc->callback([&] {
    action = [&] {
      wk::Rational lambda;
      try {
        lambda = wk::parse_rational(lambda_text);
      } catch (std::exception const&) {
        throw UsageError("bad --lambda '" + lambda_text + "'");
      }
      auto p   = load_presentation(pres_file);
      auto rep = wk::pieces(p);
      auto res = wk::check_small_cancellation(p, lambda);
      report.results["lambda"]            = rat(lambda);
      report.results["holds"]             = res.holds;
      report.results["symmetrized_size"]  = rep.symmetrized_size;
      report.results["max_piece_ratio"]   = rat(rep.max_ratio);
      report.results["max_piece_lengths"] = rep.max_piece;
      if (res.witness) {
        report.witnesses["piece"]          = wk::to_string(res.witness->piece);
        report.witnesses["relator"]        = wk::to_string(res.witness->relator);
        report.witnesses["other_relator"]  = wk::to_string(res.witness->other);
      }
      report.require(res.holds);
    };
  });

  // word-problem
  std::vector<std::string> words;
  auto* wp = app.add_subcommand("word-problem", "Decide words with Dehn's algorithm (needs C'(1/6))");
  wp->add_option("file", pres_file, ".pres file")->required();
  wp->add_option("--word", words, "Word to decide (repeatable)")->required();
  common(wp);
  wp->callback([&] {
    action = [&] {
      auto          p = load_presentation(pres_file);
      wk::DehnSolver solver(p);
      json          answers = json::array();
      for (auto const& text : words) {
        wk::Word w;
        try {
          w = p.word(text);
        } catch (wk::ParseError const& e) {
          throw UsageError(std::string("--word: ") + e.what());
        }
        answers.push_back({{"word", text}, {"answer", wk::to_string(solver.solve(w))},
                           {"dehn_steps", solver.last_steps()}});
      }
      report.results["answers"] = answers;
    };
  });

  // enumerate
  std::vector<std::string> subgroup;
  bool                     with_table = false;
  auto* en = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  en->add_option("file", pres_file, ".pres file")->required();
  en->add_option("--subgroup", subgroup, "Subgroup generator word (repeatable)");
  en->add_flag("--table", with_table, "Include generator permutations");
  add_budget(en);
  common(en);
  en->callback([&] {
    action = [&] {
      auto              p = load_presentation(pres_file);
      std::vector<wk::Word> H;
      for (auto const& s : subgroup) {
        H.push_back(p.word(s));
      }
      auto t = wk::todd_coxeter(p, H, max_cosets);
      report.results["max_cosets"] = max_cosets;
      report.results["closed"]     = t.closed();
      if (t.closed()) {
        report.results["index"] = t.num_cosets;
        if (H.empty()) {
          report.results["order"] = t.num_cosets;
        }
        if (with_table) {
          report.results["table"] = wk::coset_table_to_json(t);
        }
      } else {
        report.results["live_cosets_at_abort"] = t.num_cosets;
        report.inconclusive();
      }
    };
  });

  // quotient
  std::string group_out;
  auto* qu = app.add_subcommand("quotient", "Finite group of a presentation via enumeration");
  qu->add_option("file", pres_file, ".pres file")->required();
  qu->add_option("--group-out", group_out, "Write the group as .grp.json");
  add_budget(qu);
  common(qu);
  qu->callback([&] {
    action = [&] {
      auto p = load_presentation(pres_file);
      auto t = wk::todd_coxeter(p, {}, max_cosets);
      report.results["max_cosets"] = max_cosets;
      report.results["closed"]     = t.closed();
      if (!t.closed()) {
        report.inconclusive();
        return;
      }
      auto q = wk::quotient_group(t);
      auto G = wk::validate_group(wk::table_rows(q.group));
      bool relators_ok = true;
      for (auto const& r : p.relators) {
        relators_ok = relators_ok && wk::evaluate(G, q.generator_images, r) == 0;
      }
      auto conj = wk::conjugacy_data(G);
      report.results["order"]            = G.order();
      report.results["generator_images"] = q.generator_images;
      report.results["abelian"]          = G.is_abelian();
      report.results["class_sizes"]      = class_sizes(conj);
      report.results["center_order"]     = conj.center.size();
      report.results["relators_hold"]    = relators_ok;
      report.require(relators_ok);
      if (!group_out.empty()) {
        write_text_file(group_out, wk::dump_file(wk::group_to_json(G)));
      }
    };
  });

  // wreath
  std::string a_desc, b_desc, verify_file, wlp_out;
  auto*       wr = app.add_subcommand("wreath", "Build and verify A wr B, or verify a .wlp.json");
  wr->add_option("--A", a_desc, "Base group (Z2, S3, Z2xZ2, D4, Q8, A4, file.grp.json)");
  wr->add_option("--B", b_desc, "Acting group, regular action");
  wr->add_option("--verify", verify_file, "Verify this .wlp.json instead");
  wr->add_option("--wlp-out", wlp_out, "Write the product as .wlp.json");
  common(wr);
  wr->callback([&] {
    action = [&] {
      wk::WreathLikeProduct x;
      if (!verify_file.empty()) {
        auto text = load_input(verify_file);
        try {
          x = wk::wlp_from_json(json::parse(text));
        } catch (json::parse_error const& e) {
          throw UsageError(verify_file + ": " + e.what());
        }
      } else {
        if (a_desc.empty() || b_desc.empty()) {
          throw UsageError("wreath needs --A and --B, or --verify");
        }
        auto A = parse_group_desc(a_desc);
        auto B = parse_group_desc(b_desc);
        x      = wk::ordinary_wreath(A, B);
        std::size_t expected = B.order();
        for (std::size_t i = 0; i < B.order(); ++i) {
          expected *= A.order();
        }
        report.results["expected_order"] = expected;
        report.require(x.W.order() == expected);
      }
      auto check = wk::verify_wreath_like(x);
      report.results["order"]        = x.W.order();
      report.results["base_order"]   = x.base().size();
      report.results["index_size"]   = x.index_size();
      report.results["verified"]     = check.ok;
      report.results["untwisted"]    = wk::is_untwisted(x);
      if (!check.ok) {
        report.witnesses["clause"]  = check.clause;
        report.witnesses["detail"]  = check.witness;
      }
      report.require(check.ok);
      if (!wlp_out.empty()) {
        write_text_file(wlp_out, wk::dump_file(wk::wlp_to_json(x)));
      }
    };
  });

  // wgh
  std::string pres_out;
  auto*       wg = app.add_subcommand("wgh", "W(A*B, A) presentation, enumeration and wreath check");
  wg->add_option("--A", a_desc, "First factor: Z<n> or .pres")->required();
  wg->add_option("--B", b_desc, "Second factor: Z<n> or .pres")->required();
  wg->add_option("--pres-out", pres_out, "Write the presentation");
  add_budget(wg);
  common(wg);
  wg->callback([&] {
    action = [&] {
      auto fp = wk::free_product(parse_factor_desc(a_desc, "a"), parse_factor_desc(b_desc, "b"));
      auto p  = wk::wgh_presentation(fp, max_cosets);
      if (!pres_out.empty()) {
        write_text_file(pres_out, wk::to_string(p));
      }
      report.results["relators"]   = p.relators.size();
      report.results["max_cosets"] = max_cosets;
      auto t = wk::todd_coxeter(p, {}, max_cosets);
      report.results["closed"] = t.closed();
      if (!t.closed()) {
        report.inconclusive();
        return;
      }
      auto W  = wk::quotient_group(t);
      auto A  = wk::quotient_group(wk::todd_coxeter(fp.first, {}, max_cosets)).group;
      auto B  = wk::quotient_group(wk::todd_coxeter(fp.second, {}, max_cosets)).group;
      auto wr = wk::ordinary_wreath(A, B);
      auto x  = wk::wgh_wreath_structure(fp, W, max_cosets);
      auto check = wk::verify_wreath_like(x);
      bool iso   = wk::is_isomorphic(W.group, wr.W);
      report.results["order"]                   = W.group.order();
      report.results["wreath_order"]            = wr.W.order();
      report.results["isomorphic_to_wreath"]    = iso;
      report.results["wreath_like_verified"]    = check.ok;
      if (!check.ok) {
        report.witnesses["clause"] = check.clause;
        report.witnesses["detail"] = check.witness;
      }
      report.require(iso && check.ok);
    };
  });

  // f7n
  std::size_t k = 7, n = 2, m = 10;
  auto*       f7 = app.add_subcommand("f7n", "Certify the F7n relator family");
  f7->add_option("--k", k, "Letters per relator")->check(CLI::PositiveNumber);
  f7->add_option("--n", n, "Number of relators")->check(CLI::PositiveNumber);
  f7->add_option("--m", m, "Exponent")->check(CLI::PositiveNumber);
  f7->add_option("--pres-out", pres_out, "Write the presentation");
  common(f7);
  f7->callback([&] {
    action = [&] {
      auto r   = wk::verify_f7n(k, n, m);
      auto fam = wk::f7n_generators(k, n, m);
      if (!pres_out.empty()) {
        write_text_file(pres_out, wk::to_string(fam.presentation()));
      }
      report.results["c16"]             = r.c16;
      report.results["free_factor"]     = r.free_factor;
      report.results["max_piece_ratio"] = rat(r.max_ratio);
      report.results["relator_length"]  = 1 + (k - 1) * m;
      report.results["parameter_warning"] = r.warning;
      report.results["torsion_free_certificate"] =
          wk::torsion_free_certificate(fam.presentation());
      if (r.quotient_free_rank) {
        report.results["quotient_free_rank"] = *r.quotient_free_rank;
      } else {
        report.results["quotient_free_rank"] = nullptr;
      }
      if (r.witness) {
        report.witnesses["piece"] = wk::to_string(r.witness->piece);
      }
      report.require(r.c16 && r.free_factor && r.quotient_free_rank == (k - 1) * n);
    };
  });

  // cl-check
  std::size_t radius = 4;
  auto*       cl = app.add_subcommand("cl-check", "Bounded malnormality of A in A*B");
  cl->add_option("--A", a_desc, "First factor: Z<n> or .pres")->required();
  cl->add_option("--B", b_desc, "Second factor: Z<n> or .pres")->required();
  cl->add_option("--radius", radius, "Syllable length bound");
  add_budget(cl);
  common(cl);
  cl->callback([&] {
    action = [&] {
      auto fp = wk::free_product(parse_factor_desc(a_desc, "a"), parse_factor_desc(b_desc, "b"));
      auto r  = wk::check_malnormal_bounded(fp, radius, max_cosets);
      report.results["malnormal"]         = r.holds;
      report.results["verified_to_radius"] = r.radius;
      report.results["elements_checked"]  = r.checked;
      if (!r.holds) {
        report.witnesses["conjugator"] = r.witness;
      }
      report.require(r.holds);
    };
  });

  // higman
  auto* hi = app.add_subcommand("higman", "Higman group: abelianization and enumeration");
  hi->add_option("--pres-out", pres_out, "Write the presentation");
  add_budget(hi);
  common(hi);
  hi->callback([&] {
    action = [&] {
      auto p = wk::higman_presentation();
      if (!pres_out.empty()) {
        write_text_file(pres_out, wk::to_string(p));
      }
      auto ab = wk::presentation_abelianization(p);
      json rels = json::array();
      for (auto const& r : p.relators) {
        rels.push_back(wk::to_string(r));
      }
      report.results["relators"]                 = rels;
      report.results["abelianization_divisors"]  = ints(ab.divisors);
      report.results["abelianization_free_rank"] = ab.free_rank;
      report.results["max_cosets"]               = max_cosets;
      auto t = wk::todd_coxeter(p, {}, max_cosets);
      report.results["closed"] = t.closed();
      if (t.closed()) {
        report.results["order"] = t.num_cosets;
      } else {
        report.inconclusive();
      }
    };
  });

  // s0
  std::string assignment = "default";
  long long   pp_m       = 300;
  auto*       s0 = app.add_subcommand("s0", "The 44-generator presentation and its conditions");
  s0->add_option("--assignment", assignment, "default, or a file of 184 distinct exponents");
  s0->add_option("-m", pp_m, "Run bound for the y-run condition");
  s0->add_option("--pres-out", pres_out, "Write the presentation");
  common(s0);
  s0->callback([&] {
    action = [&] {
      wk::S0Params params = wk::S0Params::defaults();
      if (assignment != "default") {
        std::stringstream in(load_input(assignment));
        params.exponents.clear();
        for (long long e; in >> e;) {
          if (e < 1) {
            throw UsageError("exponents must be positive");
          }
          params.exponents.push_back(static_cast<std::size_t>(e));
        }
      }
      auto c = wk::s0_certified(params);
      if (!pres_out.empty()) {
        write_text_file(pres_out, wk::to_string(c.presentation));
      }
      auto pr = wk::pieces(c.presentation);
      auto cb = wk::check_condition_b(c.presentation);
      auto cp = wk::check_condition_pp(c.presentation, pp_m);
      report.results["generators"]       = c.presentation.num_generators();
      report.results["relators"]         = c.presentation.relators.size();
      report.results["escalations"]      = c.escalations;
      report.results["c16"]              = c.small_cancellation.holds;
      report.results["max_piece_ratio"]  = rat(pr.max_ratio);
      report.results["condition_b"]      = cb.holds;
      report.results["condition_pp"]     = cp.holds;
      report.results["condition_pp_m"]   = pp_m;
      if (c.small_cancellation.witness) {
        report.witnesses["piece"] = wk::to_string(c.small_cancellation.witness->piece);
      }
      if (cb.relator) {
        report.witnesses["condition_b_relator"] = *cb.relator;
      }
      if (cp.relator) {
        report.witnesses["condition_pp_relator"] = *cp.relator;
      }
      report.require(c.small_cancellation.holds && cb.holds && cp.holds);
    };
  });

  // pn
  std::string rn_text, xw_text;
  long long   pn_m = 1;
  auto*       pn = app.add_subcommand("pn", "Build an interleaved relator P_n");
  pn->add_option("--rn", rn_text, "Word over a1..a4")->required();
  pn->add_option("--xw", xw_text, "Word over x1..x20")->required();
  pn->add_option("-m", pn_m, "Block exponent")->required();
  pn->add_option("--pres-out", pres_out, "Write the relator as a one-relator .pres");
  common(pn);
  pn->callback([&] {
    action = [&] {
      auto        alpha = wk::s0_alphabet();
      wk::Word    rn, xw;
      try {
        rn = wk::parse_word(alpha, rn_text);
        xw = wk::parse_word(alpha, xw_text);
      } catch (wk::ParseError const& e) {
        throw UsageError(e.what());
      }
      auto        P        = wk::pn_relator(rn, xw, pn_m);
      std::size_t expected = wk::pn_expected_length(rn.size() + xw.size(),
                                                    static_cast<std::size_t>(pn_m));
      auto        cb       = wk::check_condition_b(P);
      if (!pres_out.empty()) {
        write_text_file(pres_out, wk::to_string(wk::Presentation(alpha, {P})));
      }
      report.results["length"]          = P.size();
      report.results["expected_length"] = expected;
      report.results["condition_b"]     = cb.holds;
      report.results["window"]          = cb.window;
      report.require(P.size() == expected && cb.holds);
    };
  });

  // cond-b
  auto* cb = app.add_subcommand("cond-b", "Subword condition on every relator");
  cb->add_option("file", pres_file, ".pres file")->required();
  common(cb);
  cb->callback([&] {
    action = [&] {
      auto p = load_presentation(pres_file);
      auto r = wk::check_condition_b(p);
      report.results["holds"] = r.holds;
      if (!r.holds) {
        report.witnesses["relator"]      = *r.relator;
        report.witnesses["window_start"] = *r.window_start;
        report.witnesses["window"]       = r.window;
      }
      report.require(r.holds);
    };
  });

  // cond-pp
  auto* cp = app.add_subcommand("cond-pp", "No relator contains a y-run of length m");
  cp->add_option("file", pres_file, ".pres file")->required();
  cp->add_option("-m", pp_m, "Run bound")->required();
  common(cp);
  cp->callback([&] {
    action = [&] {
      auto p = load_presentation(pres_file);
      auto r = wk::check_condition_pp(p, pp_m);
      report.results["holds"] = r.holds;
      report.results["m"]     = pp_m;
      if (!r.holds) {
        report.witnesses["relator"]  = *r.relator;
        report.witnesses["position"] = *r.window_start;
      }
      report.require(r.holds);
    };
  });

  // aut
  std::string group_desc;
  auto*       au = app.add_subcommand("aut", "Automorphisms, inner/outer split, class preservation");
  au->add_option("--group", group_desc, "Z<n>, S<n>, D<n>, Q8, A<n>, products with x, .grp.json")->required();
  common(au);
  au->callback([&] {
    action = [&] {
      auto        G = parse_group_desc(group_desc);
      auto        A = wk::automorphisms(G);
      std::size_t preserving = 0, preserving_outer = 0;
      for (auto const& a : A.all) {
        preserving += a.class_preserving;
        preserving_outer += a.class_preserving && !a.inner;
      }
      report.results["group_order"]             = G.order();
      report.results["automorphisms"]           = A.all.size();
      report.results["inner"]                   = A.inner_count;
      report.results["outer"]                   = A.outer_cosets;
      report.results["class_preserving"]        = preserving;
      report.results["class_preserving_outer"]  = preserving_outer;
      report.require(preserving_outer == 0);
    };
  });

  // chars
  auto* ch = app.add_subcommand("chars", "Characters into Q/Z");
  ch->add_option("--group", group_desc, "Group, as for aut")->required();
  common(ch);
  ch->callback([&] {
    action = [&] {
      auto G     = parse_group_desc(group_desc);
      auto chars = wk::characters(G);
      auto ab    = wk::quotient_by_normal(G, wk::derived_subgroup(G)).group.order();
      json list  = json::array();
      for (auto const& c : chars) {
        json vals = json::array();
        for (auto const& v : c.values) {
          vals.push_back(rat(v));
        }
        list.push_back(vals);
      }
      report.results["group_order"]          = G.order();
      report.results["abelianization_order"] = ab;
      report.results["count"]                = chars.size();
      report.results["characters"]           = list;
      report.require(chars.size() == ab);
    };
  });

  // psi
  auto* ps = app.add_subcommand("psi", "Phased basis maps: innerness criterion and composition law");
  ps->add_option("--group", group_desc, "Group, as for aut")->required();
  common(ps);
  ps->callback([&] {
    action = [&] {
      auto        G     = parse_group_desc(group_desc);
      auto        A     = wk::automorphisms(G);
      auto        chars = wk::characters(G);
      auto        conj  = wk::conjugacy_data(G);
      std::size_t pairs = 0, inner = 0, mismatches = 0;
      std::vector<wk::PhasedBasisMap> maps;
      for (auto const& rho : chars) {
        for (std::size_t d = 0; d < A.all.size(); ++d) {
          wk::PhasedBasisMap mp{rho, A.as_homomorphism(d)};
          // fixes every class sum: image of each class is itself with phase 0
          bool fixes = true;
          for (auto const& cls : conj.classes) {
            for (auto g : cls) {
              auto img = wk::apply(mp, g);
              fixes    = fixes && img.phase == wk::Rational(0) && wk::contains(cls, img.element);
            }
          }
          bool crit = wk::psi_is_inner(mp);
          mismatches += crit != fixes;
          inner += crit;
          ++pairs;
          maps.push_back(std::move(mp));
        }
      }
      std::size_t law_checks = 0, law_failures = 0;
      if (maps.size() <= 64) {
        for (auto const& m1 : maps) {
          for (auto const& m2 : maps) {
            auto c = wk::psi_compose(m1, m2);
            for (wk::element_type g = 0; g < G.order(); ++g) {
              ++law_checks;
              law_failures += !(wk::apply(c, g) == wk::apply(m1, wk::apply(m2, g)));
            }
          }
        }
      }
      report.results["group_order"]          = G.order();
      report.results["pairs"]                = pairs;
      report.results["inner_pairs"]          = inner;
      report.results["criterion_mismatches"] = mismatches;
      report.results["composition_checks"]   = law_checks;
      report.results["composition_failures"] = law_failures;
      report.require(mismatches == 0 && law_failures == 0);
    };
  });

  // abelianize
  auto* ab = app.add_subcommand("abelianize", "Abelian invariants via Smith normal form");
  ab->add_option("file", pres_file, ".pres file")->required();
  common(ab);
  ab->callback([&] {
    action = [&] {
      auto p = load_presentation(pres_file);
      auto a = wk::presentation_abelianization(p);
      report.results["divisors"]        = ints(a.divisors);
      report.results["free_rank"]       = a.free_rank;
      report.results["trivial"]         = wk::is_trivial(a);
      report.results["torsion_free_certificate"] = wk::torsion_free_certificate(p);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    auto parsed = app.get_subcommands();
    std::cerr << (parsed.empty() ? app.help() : parsed.front()->help());
    return exit_usage;
  }

  try {
    action();
  } catch (UsageError const& e) {
    std::cerr << "wreathkit: " << e.what() << "\n";
    return exit_usage;
  } catch (wk::Error const& e) {
    report.status           = "fail";
    report.results["error"] = e.what();
  }

  json command = json::array();
  for (int i = 1; i < argc; ++i) {
    command.push_back(argv[i]);
  }
  json out;
  out["tool"]      = "wreathkit";
  out["version"]   = wk::version;
  out["command"]   = command;
  out["inputs"]    = report.inputs;
  out["status"]    = report.status;
  out["results"]   = report.results;
  out["witnesses"] = report.witnesses;

  auto text = render(out, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
  if (report.status == "pass") {
    return exit_pass;
  }
  return report.status == "inconclusive" ? exit_inconclusive : exit_fail;
}
