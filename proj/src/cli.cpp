#include "factorcenter/cli.hpp"

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "factorcenter/json_io.hpp"

namespace fc::cli {

namespace {

struct Result {
  Json body;
  int code = kOk;
};

using Handler = std::function<Result()>;

Json error_body(const std::string& kind, const std::string& message, int code) {
  return {{"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
}

Json pair_json(const Group& g, const GassmannPair& p) {
  return {{"a", to_json(p.a)},
          {"b", to_json(p.b)},
          {"isomorphic", p.isomorphic},
          {"types_a", p.types_a},
          {"types_b", p.types_b},
          {"character", character_json(g, p.certificate)}};
}

Json row_check_json(const RowCheck& r) {
  return {{"row", to_json(r.report)},
          {"mutations_rejected", r.mutations_rejected},
          {"samples", r.samples},
          {"blowdowns_matching", r.blowdowns_matching},
          {"ok", r.ok()}};
}

Json evaluation_json(const WordEvaluation& e) {
  return {{"c", to_json(e.c)},
          {"zero", e.c.is_zero()},
          {"target", to_json(e.target)},
          {"ledger", to_json(e.ledger)},
          {"trace", e.trace}};
}

std::string ledger_formula(const CenterLedger& l) {
  std::string s = "c =";
  bool first = true;
  auto term = [&](bool plus, const GSet& z, const char* prime) {
    const std::string name = z.size() == 1 ? "pt" : "Z" + std::to_string(z.size());
    s += first ? (plus ? " " : " -") : (plus ? " + " : " - ");
    s += "[" + name + prime + "]";
    first = false;
  };
  for (const auto& z : l.blowups) term(true, z, "");
  for (const auto& z : l.blowdowns) term(false, z, "'");
  return s;
}

/// Both sets over one group object; the second file may repeat the group.
std::pair<GSet, GSet> load_pair(const std::string& pa, const std::string& pb) {
  const Json ja = load_json(pa), jb = load_json(pb);
  GSet a = standalone_gset_from_json(ja);
  if (jb.is_object() && jb.contains("group") && ja.contains("group") && jb.at("group") == ja.at("group"))
    return {a, gset_from_json(jb, a.group())};
  return {a, rebase(standalone_gset_from_json(jb), a.group())};
}

Json group_or_wrapped(const Json& j) {
  if (j.is_object() && j.contains("group") && !j.contains("degree")) return j.at("group");
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gassmann equivalence, Picard lattices and factorization centers of Sarkisov links", "factorcenter"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the JSON result to this file");

  std::vector<std::pair<CLI::App*, Handler>> leaves;
  auto group = [&](const char* name, const char* desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // gassmann
  CLI::App* gassmann = group("gassmann", "Gassmann equivalence of G-sets");
  std::string set_a, set_b, group_path;
  int max_degree = 6;
  bool transitive = false;
  {
    CLI::App* check = leaf(gassmann, "check", "Compare two G-sets over the same group (exit 1 if not Gassmann)");
    check->add_option("a", set_a, "First G-set (path or inline JSON)")->required();
    check->add_option("b", set_b, "Second G-set (path or inline JSON)")->required();
    leaves.emplace_back(check, [&] {
      auto [a, b] = load_pair(set_a, set_b);
      const Character ca = fixed_point_character(a), cb = fixed_point_character(b);
      const bool gm = ca == cb;
      Result r;
      r.body = {{"gassmann", gm},
                {"isomorphic", is_isomorphic(a, b)},
                {"character_a", character_json(*a.group(), ca)},
                {"character_b", character_json(*a.group(), cb)},
                {"a", to_json(a)},
                {"b", to_json(b)}};
      r.code = gm ? kOk : kVerifiedFalse;
      return r;
    });

    CLI::App* search = leaf(gassmann, "search", "Non-isomorphic Gassmann pairs up to a degree");
    search->add_option("group", group_path, "Group (path or inline JSON)")->required();
    search->add_option("--max-degree", max_degree, "Largest set size")->capture_default_str();
    search->add_flag("--transitive", transitive, "Compare coset sets G/H only");
    leaves.emplace_back(search, [&] {
      GroupPtr g = group_from_json(group_or_wrapped(load_json(group_path)));
      auto pairs = gassmann_search(burnside_ring(g), max_degree, transitive);
      Json list = Json::array();
      std::size_t non_iso = 0;
      for (const auto& p : pairs) {
        list.push_back(pair_json(*g, p));
        if (!p.isomorphic) ++non_iso;
      }
      return Result{{{"group", to_json(*g)},
                     {"max_degree", max_degree},
                     {"transitive", transitive},
                     {"pairs", list},
                     {"count", pairs.size()},
                     {"non_isomorphic", non_iso}}};
    });
  }

  // lattice
  CLI::App* lattice = group("lattice", "Picard lattice enumeration");
  std::string kind;
  int j = 1, r = -1;
  {
    CLI::App* en = leaf(lattice, "enumerate", "Rational classes D^2 = j - 2, -K.D = j");
    en->add_option("--kind", kind, "blowup:r, quadric or quadric:r")->required();
    en->add_option("--j", j, "Anticanonical degree")->required();
    leaves.emplace_back(en, [&] {
      const ClassList c = rational_degree_classes(PicardLattice::parse(kind), j);
      return Result{{{"lattice", c.lattice}, {"j", c.j}, {"count", c.classes.size()}, {"classes", c.classes}}};
    });

    CLI::App* neg = leaf(lattice, "neg-curves", "(-1)-classes");
    auto* r_opt = neg->add_option("--r", r, "Points blown up on the plane");
    auto* k_opt = neg->add_option("--kind", kind, "blowup:r, quadric or quadric:r");
    r_opt->excludes(k_opt);
    leaves.emplace_back(neg, [&] {
      if (r < 0 && kind.empty()) throw ValidationError("neg-curves needs --r or --kind");
      const PicardLattice l = kind.empty() ? PicardLattice::blowup_p2(r) : PicardLattice::parse(kind);
      const ClassList c = neg_one_classes(l);
      return Result{{{"lattice", c.lattice}, {"count", c.classes.size()}, {"classes", c.classes}}};
    });
  }

  // surface
  CLI::App* surface = group("surface", "Galois surface models");
  std::string model_path;
  {
    CLI::App* ns = leaf(surface, "ns-char", "Character of the Galois action on NS(X)");
    ns->add_option("model", model_path, "Surface model (path or inline JSON)")->required();
    leaves.emplace_back(ns, [&] {
      const SurfaceModel s = model_from_json(load_json(model_path));
      Json body = {{"model", to_json(s)},
                   {"character", character_json(*s.galois, ns_character(s))},
                   {"picard_rank", picard_rank(s)}};
      if (s.is_large_degree()) body["virtual_ns_set"] = to_json(virtual_ns_set(s));
      return Result{body};
    });

    CLI::App* mj = leaf(surface, "mj", "Degree-j rational classes and the duality j <-> d - j (exit 1 if it fails)");
    mj->add_option("model", model_path, "Surface model (path or inline JSON)")->required();
    mj->add_option("--j", j, "Anticanonical degree")->required();
    leaves.emplace_back(mj, [&] {
      const SurfaceModel s = model_from_json(load_json(model_path));
      const GSet m = mj_set(s, j);
      const bool dual = mj_duality_check(s, j);
      return Result{{{"j", j},
                     {"dual_j", s.degree() - j},
                     {"set", to_json(m)},
                     {"character", character_json(*s.galois, fixed_point_character(m))},
                     {"duality", dual}},
                    dual ? kOk : kVerifiedFalse};
    });
  }

  // links
  CLI::App* links = group("links", "Sarkisov links and factorization centers");
  std::string word_path;
  std::size_t samples = 100, trials = 100, max_len = 12;
  std::uint64_t seed = 1;
  {
    CLI::App* c = leaf(links, "c", "Evaluate a word of moves and its factorization center");
    c->add_option("word", word_path, "Move word (path or inline JSON)")->required();
    leaves.emplace_back(c, [&] {
      const MoveWord w = word_from_json(load_json(word_path));
      return Result{evaluation_json(evaluate_word(w))};
    });

    CLI::App* table = leaf(links, "verify-table", "All delta rows, their mutations and the mu balance of every link");
    table->add_option("--samples", samples, "Galois assignments per link")->capture_default_str();
    table->add_option("--seed", seed, "Seed")->capture_default_str();
    leaves.emplace_back(table, [&] {
      const TableReport t = verify_table(samples, seed);
      Json rows = Json::array(), ls = Json::array();
      for (const auto& row : t.rows) rows.push_back(row_check_json(row));
      for (const auto& l : t.links)
        ls.push_back({{"link", l.tag.name()}, {"samples", l.samples}, {"mu_balanced", l.mu_balanced}, {"ok", l.ok()}});
      return Result{{{"rows", rows}, {"links", ls}, {"samples", samples}, {"seed", seed}, {"ok", t.ok()}},
                    t.ok() ? kOk : kVerifiedFalse};
    });

    CLI::App* loops = leaf(links, "loops", "Random loops at a model; c must vanish on each");
    loops->add_option("model", model_path, "Surface model (path or inline JSON)")->required();
    loops->add_option("--trials", trials, "Number of loops")->capture_default_str();
    loops->add_option("--seed", seed, "Seed")->capture_default_str();
    loops->add_option("--max-len", max_len, "Longest loop")->capture_default_str();
    leaves.emplace_back(loops, [&] {
      const SurfaceModel s = model_from_json(load_json(model_path));
      const LoopReport rep = loop_invariance_check(s, trials, max_len, seed);
      Json bad = Json::array();
      for (const auto& w : rep.counterexamples) bad.push_back(to_json(w));
      return Result{{{"trials", rep.trials},
                     {"zero", rep.zero},
                     {"longest", rep.longest},
                     {"total_moves", rep.total_moves},
                     {"seed", seed},
                     {"counterexamples", bad},
                     {"ok", rep.ok()}},
                    rep.ok() ? kOk : kVerifiedFalse};
    });

    CLI::App* rc = leaf(links, "rationality-center", "c(w) + [pt] for a word starting at the plane");
    rc->add_option("word", word_path, "Move word (path or inline JSON)")->required();
    leaves.emplace_back(rc, [&] {
      const MoveWord w = word_from_json(load_json(word_path));
      const WordEvaluation e = evaluate_word(w);
      return Result{{{"rationality_center", to_json(rationality_center(w))}, {"evaluation", evaluation_json(e)}}};
    });
  }

  // examples
  CLI::App* examples = group("examples", "Worked examples");
  {
    CLI::App* cubic = leaf(examples, "cubic", "Klein four centers 2+2+2 and 4+1+1 on the plane");
    leaves.emplace_back(cubic, [&] {
      const CubicSuiteReport rep = cubic_example_suite();
      const Group& g = *rep.z.group();
      return Result{{{"z", to_json(rep.z)},
                     {"z_prime", to_json(rep.z_prime)},
                     {"gassmann", rep.gassmann},
                     {"isomorphic", rep.isomorphic},
                     {"ns_character", character_json(g, rep.ns_character)},
                     {"ns_character_prime", character_json(g, rep.ns_character_prime)},
                     {"center", to_json(rep.center)},
                     {"center_prime", to_json(rep.center_prime)},
                     {"fixed_lines", rep.fixed_lines},
                     {"fixed_lines_prime", rep.fixed_lines_prime},
                     {"fixed_line_pairs", rep.fixed_line_pairs},
                     {"fixed_line_pairs_prime", rep.fixed_line_pairs_prime},
                     {"ok", rep.ok()}},
                    rep.ok() ? kOk : kVerifiedFalse};
    });

    CLI::App* chain = leaf(examples, "dp5-chain", "P2 <- dP7 -> dP8 <- dP3 -> dP5 <- dP4 -> P2");
    leaves.emplace_back(chain, [&] {
      const ChainReport rep = dp5_chain_example();
      Json body = evaluation_json(rep.evaluation);
      body["word"] = to_json(rep.word);
      body["certificate"] = ledger_formula(rep.evaluation.ledger) + (rep.evaluation.c.is_zero() ? " = 0" : " != 0");
      body["ok"] = rep.ok();
      return Result{body, rep.ok() ? kOk : kVerifiedFalse};
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_body("usage", e.what(), kValidation).dump(2) << "\n";
    return kValidation;
  }

  try {
    for (auto& [sub, handler] : leaves) {
      if (!sub->parsed()) continue;
      Result res = handler();
      if (output.empty()) {
        out << res.body.dump(2) << "\n";
      } else {
        std::ofstream f(output);
        if (!f) throw ValidationError("cannot write \"" + output + "\"");
        f << res.body.dump(2) << "\n";
      }
      return res.code;
    }
    throw ValidationError("no subcommand given");
  } catch (const ResourceError& e) {
    err << error_body("resource", e.what(), kResource).dump(2) << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    err << error_body("validation", e.what(), kValidation).dump(2) << "\n";
    return kValidation;
  } catch (const Json::exception& e) {
    err << error_body("validation", e.what(), kValidation).dump(2) << "\n";
    return kValidation;
  }
}

}  // namespace fc::cli
