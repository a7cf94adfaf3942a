#include "graphprod/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphprod/annihilator.hpp"
#include "graphprod/context_file.hpp"
#include "graphprod/howson.hpp"
#include "graphprod/ideals.hpp"
#include "graphprod/normalform.hpp"
#include "graphprod/oracle.hpp"
#include "graphprod/structure.hpp"

namespace graphprod {

  namespace {
    using json = nlohmann::json;

    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Session {
      ContextFile   file;
      bool          json_mode = false;
      std::ostream& out;

      GPContext const& ctx() const {
        return file.context;
      }

      Word word(std::string const& s) const {
        if (auto const* w = file.find_word(s)) {
          return *w;
        }
        return parse_word(ctx(), s);
      }

      std::string show(CanonicalForm const& c) const {
        return format_canonical(ctx(), c);
      }

      std::string show(Word const& w) const {
        return show(canonical(ctx(), w));
      }

      std::string vertex_list(std::vector<std::size_t> const& vs) const {
        std::string s;
        for (auto v : vs) {
          s += (s.empty() ? "" : " ") + ctx().vertex_names[v];
        }
        return s;
      }

      int emit(json const& j, std::vector<std::string> const& lines, int code) {
        if (json_mode) {
          out << j.dump() << '\n';
        } else {
          for (auto const& l : lines) {
            out << l << '\n';
          }
        }
        return code;
      }

      int verdict(std::string const& cmd,
                  bool                value,
                  std::vector<std::string> reasons = {}) {
        json j{{"command", cmd}, {"result", value}, {"reasons", reasons}};
        std::vector<std::string> lines{value ? "true" : "false"};
        lines.insert(lines.end(), reasons.begin(), reasons.end());
        return emit(j, lines, value ? exit_ok : exit_negative);
      }
    };

    std::optional<std::size_t> env_bound() {
      if (char const* s = std::getenv("GP_ORACLE_BOUND")) {
        try {
          return static_cast<std::size_t>(std::stoul(s));
        } catch (std::exception const&) {
          throw UsageError("GP_ORACLE_BOUND must be a non-negative integer");
        }
      }
      return std::nullopt;
    }

    std::size_t oracle_bound(std::optional<std::size_t> flag, std::size_t dflt) {
      if (flag) {
        return *flag;
      }
      return env_bound().value_or(dflt);
    }

    CongruenceBound parse_verify_bound(std::string const& s) {
      auto comma = s.find(',');
      if (comma == std::string::npos) {
        throw UsageError("--verify-bound expects L,S");
      }
      try {
        return CongruenceBound{std::stoul(s.substr(0, comma)),
                               std::stoul(s.substr(comma + 1))};
      } catch (std::exception const&) {
        throw UsageError("--verify-bound expects two integers L,S");
      }
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Computations in graph products of monoids", "gp"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string context_path;
    bool        json_mode = false;
    app.add_option("-c,--context", context_path, "context file")->required();
    app.add_flag("--json", json_mode, "emit JSON");

    std::vector<std::string> operands;
    auto words = [&](CLI::App* sub, int n) {
      sub->add_option("words", operands, "words or word names")
          ->expected(n)
          ->required();
    };
    auto* c_norm = app.add_subcommand("normalize", "canonical form of W");
    words(c_norm, 1);
    auto* c_eq = app.add_subcommand("eq", "is W1 = W2?");
    words(c_eq, 2);
    auto* c_mul = app.add_subcommand("mul", "canonical form of W1 W2");
    words(c_mul, 2);
    auto* c_foata = app.add_subcommand("foata", "left and right Foata forms");
    words(c_foata, 1);
    auto* c_div = app.add_subcommand("divides", "is GP[W1] inside GP[W2]?");
    words(c_div, 2);
    auto* c_wit = app.add_subcommand("witness", "C with W1 = C W2");
    words(c_wit, 2);
    auto* c_int = app.add_subcommand("intersect", "generators of GP[W1] ^ GP[W2]");
    words(c_int, 2);
    auto* c_ann = app.add_subcommand("annihilator", "generators of the annihilator");
    words(c_ann, 1);
    std::string verify_bound;
    c_ann->add_option("--verify-bound", verify_bound,
                      "check completeness against the oracle, bound L,S");
    auto*       c_check = app.add_subcommand("check", "structural checks");
    std::string property;
    c_check->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"accpl", "wln", "relcomplete", "coherent"}));
    auto* c_dec = app.add_subcommand("decompose", "split into factors");

    auto* c_oracle = app.add_subcommand("oracle", "brute force reference answers");
    c_oracle->require_subcommand(1);
    std::optional<std::size_t> bound;
    auto oracle_sub = [&](char const* name, char const* help, int n) {
      auto* s = c_oracle->add_subcommand(name, help);
      words(s, n);
      s->add_option("--bound", bound, "search bound");
      return s;
    };
    auto* o_eq  = oracle_sub("eq", "equality by rewriting", 2);
    auto* o_leq = oracle_sub("leq", "least C with W1 = C W2", 2);
    auto* o_int = oracle_sub("intersect", "elements of GP[W1] ^ GP[W2]", 2);
    auto* o_ann = oracle_sub("ann", "pairs (S, T) with S W = T W", 1);

    std::vector<char*> argv;
    std::vector<std::string> copy = args;
    for (auto& s : copy) {
      argv.push_back(s.data());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      Session     s{load_context(context_path), json_mode, out};
      auto const& ctx = s.ctx();
      auto        W   = [&](std::size_t i) { return s.word(operands.at(i)); };

      if (c_norm->parsed()) {
        auto c = canonical(ctx, W(0));
        return s.emit({{"command", "normalize"}, {"result", s.show(c)}},
                      {s.show(c)}, exit_ok);
      }
      if (c_eq->parsed()) {
        return s.verdict("eq", equal(ctx, W(0), W(1)));
      }
      if (c_mul->parsed()) {
        auto c = multiply(ctx, W(0), W(1));
        return s.emit({{"command", "mul"}, {"result", s.show(c)}}, {s.show(c)},
                      exit_ok);
      }
      if (c_foata->parsed()) {
        auto r = reduce(ctx, W(0));
        auto l = s.show(foata_left(ctx, r));
        auto g = s.show(foata_right(ctx, r));
        return s.emit({{"command", "foata"}, {"left", l}, {"right", g}},
                      {"left: " + l, "right: " + g}, exit_ok);
      }
      if (c_div->parsed()) {
        return s.verdict("divides", leq_principal(ctx, W(0), W(1)).has_value());
      }
      if (c_wit->parsed()) {
        auto c = leq_principal(ctx, W(0), W(1));
        json j{{"command", "witness"}, {"result", c ? json(s.show(*c)) : json()}};
        return s.emit(j, {c ? s.show(*c) : "none"},
                      c ? exit_ok : exit_negative);
      }
      if (c_int->parsed()) {
        auto                     r = intersect_principal(ctx, W(0), W(1));
        std::vector<std::string> lines;
        json                     gens = json::array();
        for (auto const& g : r.generators) {
          lines.push_back(s.show(g.element));
          gens.push_back(lines.back());
        }
        if (lines.empty()) {
          lines.push_back("empty");
        }
        return s.emit({{"command", "intersect"}, {"empty", r.empty},
                       {"generators", gens}},
                      lines, exit_ok);
      }
      if (c_ann->parsed()) {
        auto const               a = W(0);
        auto const               k = annihilator_generators(ctx, a);
        std::vector<std::string> lines;
        json                     pairs = json::array();
        for (auto const& p : k.pairs) {
          lines.push_back(s.show(p.left) + " ~ " + s.show(p.right));
          pairs.push_back({{"left", s.show(p.left)},
                           {"right", s.show(p.right)},
                           {"source", to_string(p.source)}});
        }
        json j{{"command", "annihilator"}, {"pairs", pairs}};
        int  code = exit_ok;
        if (!verify_bound.empty()) {
          auto const  b       = parse_verify_bound(verify_bound);
          auto const  targets = oracle_annihilator_pairs(
              ctx, k.word, oracle_bound(std::nullopt, 3));
          std::size_t reached = 0;
          for (auto const& [x, y] : targets) {
            reached += in_left_congruence(ctx, x, y, k.pairs, b).reached;
          }
          lines.push_back("verified " + std::to_string(reached) + "/"
                          + std::to_string(targets.size()));
          j["verified"] = reached;
          j["oracle_pairs"] = targets.size();
          code = reached == targets.size() ? exit_ok : exit_negative;
        }
        return s.emit(j, lines, code);
      }
      if (c_check->parsed()) {
        if (property == "accpl") {
          auto const               r = accpl_report(ctx);
          std::vector<std::string> reasons;
          for (std::size_t v = 0; v < r.vertices.size(); ++v) {
            reasons.push_back(ctx.vertex_names[v] + ": " + r.vertices[v].reason);
          }
          return s.verdict("check accpl", r.holds, reasons);
        }
        if (property == "wln") {
          auto const r = decide_wln(ctx);
          return s.verdict("check wln", r.holds, r.reasons);
        }
        if (property == "relcomplete") {
          auto const r = relative_completeness(ctx);
          return s.verdict("check relcomplete", r.holds, r.violations);
        }
        auto const               r = coherency_report(ctx);
        std::vector<std::string> reasons;
        for (std::size_t v = 0; v < r.vertices.size(); ++v) {
          auto const& x = r.vertices[v];
          reasons.push_back(ctx.vertex_names[v] + ": howson "
                            + (x.howson ? "yes" : "no") + ", finitely equated "
                            + (x.fle ? "yes" : "no") + " (" + x.reason + ")");
        }
        return s.verdict("check coherent", r.holds, reasons);
      }
      if (c_dec->parsed()) {
        auto const rc = relative_completeness(ctx);
        if (!rc.holds) {
          return s.verdict("decompose", false, rc.violations);
        }
        auto const d = direct4_partition(ctx);
        std::vector<std::size_t> fp;
        if (d.free_pair) {
          fp = {d.free_pair->first, d.free_pair->second};
        }
        std::vector<std::string> lines{
            "free-pair: " + s.vertex_list(fp),
            "restricted-direct: " + s.vertex_list(d.restricted_direct),
            "group-product: " + s.vertex_list(d.group_product)};
        for (auto& l : lines) {
          if (l.back() == ' ') {
            l.pop_back();
          }
        }
        json j{{"command", "decompose"},
               {"free_pair", s.vertex_list(fp)},
               {"restricted_direct", s.vertex_list(d.restricted_direct)},
               {"group_product", s.vertex_list(d.group_product)}};
        return s.emit(j, lines, exit_ok);
      }
      if (o_eq->parsed()) {
        auto const u = W(0), v = W(1);
        auto const n = oracle_bound(bound, std::max(u.size(), v.size()) + 2);
        return s.verdict("oracle eq", oracle_equal(ctx, u, v, n));
      }
      if (o_leq->parsed()) {
        auto const u = W(0), v = W(1);
        auto const c = oracle_leq_principal(
            ctx, u, v, oracle_bound(bound, u.size() + v.size()));
        json j{{"command", "oracle leq"},
               {"result", c ? json(format_word(ctx, *c)) : json()}};
        return s.emit(j, {c ? format_word(ctx, *c) : "none"},
                      c ? exit_ok : exit_negative);
      }
      if (o_int->parsed()) {
        auto const a = W(0), b = W(1);
        auto const zs = oracle_intersection_elements(
            ctx, a, b, oracle_bound(bound, a.size() + b.size() + 2));
        std::vector<std::string> lines;
        for (auto const& z : zs) {
          lines.push_back(format_word(ctx, z));
        }
        return s.emit({{"command", "oracle intersect"}, {"elements", lines}},
                      lines, exit_ok);
      }
      if (o_ann->parsed()) {
        auto const ps
            = oracle_annihilator_pairs(ctx, W(0), oracle_bound(bound, 3));
        std::vector<std::string> lines;
        json                     pairs = json::array();
        for (auto const& [x, y] : ps) {
          lines.push_back(format_word(ctx, x) + " ~ " + format_word(ctx, y));
          pairs.push_back({format_word(ctx, x), format_word(ctx, y)});
        }
        return s.emit({{"command", "oracle ann"}, {"pairs", pairs}}, lines,
                      exit_ok);
      }
      throw UsageError("no command given");
    } catch (ParseError const& e) {
      err << "gp: " << context_path << ": " << e.what() << '\n';
      return exit_usage;
    } catch (UsageError const& e) {
      err << "gp: " << e.what() << '\n';
      return exit_usage;
    } catch (PreconditionError const& e) {
      err << "gp: " << e.what() << '\n';
      return exit_usage;
    } catch (ContextError const& e) {
      err << "gp: " << e.what() << '\n';
      return exit_usage;
    } catch (InvariantError const& e) {
      err << "gp: internal error: " << e.what() << '\n';
      return exit_internal;
    } catch (Error const& e) {
      err << "gp: " << e.what() << '\n';
      return exit_usage;
    } catch (std::exception const& e) {
      err << "gp: internal error: " << e.what() << '\n';
      return exit_internal;
    }
  }

}  // namespace graphprod
