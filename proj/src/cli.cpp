#include "rasp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rasp/devtools.hpp"
#include "rasp/wellsupport.hpp"

namespace rasp {

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitEmpty = 10;
constexpr int kExitError = 2;

Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ground(parse_program(buf.str()));
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits on sep at paren/brace depth zero.
std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

json atoms_json(const Interpretation& i) {
  json arr = json::array();
  for (const Atom& a : i) arr.push_back(print_atom(a));
  return arr;
}

json interpretations_json(std::vector<Interpretation> xs) {
  std::sort(xs.begin(), xs.end());
  json arr = json::array();
  for (const Interpretation& i : xs) arr.push_back(atoms_json(i));
  return arr;
}

json order_json(const PartialOrder& o) {
  json arr = json::array();
  for (const auto& [q, p] : o.pairs) arr.push_back(json::array({print_atom(q), print_atom(p)}));
  return arr;
}

json selection_json(const HeadSelection& sel) {
  json obj = json::object();
  for (const auto& [rule, idx] : sel.choice) obj[std::to_string(rule)] = idx;
  return obj;
}

json witness_json(const WsWitness& w) {
  json obj;
  obj["order"] = order_json(w.order);
  if (w.selection) obj["selection"] = selection_json(*w.selection);
  return obj;
}

std::string order_text(const PartialOrder& o) {
  std::string s;
  for (const auto& [q, p] : o.pairs) {
    if (!s.empty()) s += ", ";
    s += print_atom(q) + " < " + print_atom(p);
  }
  return s.empty() ? "(empty)" : s;
}

std::string selection_text(const HeadSelection& sel) {
  std::string s;
  for (const auto& [rule, idx] : sel.choice) {
    if (!s.empty()) s += ", ";
    s += std::to_string(rule) + " -> " + std::to_string(idx);
  }
  return s.empty() ? "(empty)" : s;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  Program p = load_program(cfg.input);
  std::vector<Interpretation> as =
      answer_sets(p, cfg.semantics, static_cast<size_t>(cfg.max_atoms));
  if (cfg.json) {
    json doc;
    doc["program"] = cfg.input;
    doc["semantics"] = to_string(cfg.semantics);
    doc["answer_sets"] = interpretations_json(as);
    out << doc.dump(2) << "\n";
  } else {
    out << "semantics: " << to_string(cfg.semantics) << "\n";
    if (as.empty()) {
      out << "no answer sets\n";
    } else {
      for (size_t k = 0; k < as.size(); ++k)
        out << "answer set " << k + 1 << ": " << print_interpretation(as[k]) << "\n";
    }
  }
  return as.empty() ? kExitEmpty : kExitFound;
}

int cmd_worldviews(const RunConfig& cfg, std::ostream& out) {
  Program p = load_program(cfg.input);
  std::vector<WorldView> wvs =
      world_views(p, cfg.semantics, static_cast<size_t>(cfg.max_atoms));
  if (cfg.json) {
    json doc;
    doc["program"] = cfg.input;
    doc["semantics"] = to_string(cfg.semantics);
    json arr = json::array();
    for (const WorldView& w : wvs) {
      json entry;
      std::vector<std::string> phi;
      for (const FormulaPtr& f : w.phi) phi.push_back(print_formula(f));
      std::sort(phi.begin(), phi.end());
      entry["phi"] = phi;
      entry["models"] = interpretations_json(w.model);
      arr.push_back(std::move(entry));
    }
    doc["world_views"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else {
    out << "semantics: " << to_string(cfg.semantics) << "\n";
    if (wvs.empty()) {
      out << "no world views\n";
    } else {
      for (size_t k = 0; k < wvs.size(); ++k) {
        out << "world view " << k + 1 << ": " << print_epistemic_model(wvs[k].model)
            << "  phi: {";
        for (size_t j = 0; j < wvs[k].phi.size(); ++j)
          out << (j ? "," : "") << print_formula(wvs[k].phi[j]);
        out << "}\n";
      }
    }
  }
  return wvs.empty() ? kExitEmpty : kExitFound;
}

int cmd_check_ws(const RunConfig& cfg, const std::string& literal, std::ostream& out) {
  Program p = load_program(cfg.input);
  json doc;
  doc["program"] = cfg.input;
  bool supported = false;
  if (is_epistemic(p)) {
    EpistemicModel a = parse_epistemic_model(literal);
    auto result = ws_check_epistemic(p, a);
    supported = result.has_value();
    if (cfg.json) {
      json members = json::array();
      for (const Interpretation& i : a) members.push_back(atoms_json(i));
      doc["epistemic_model"] = std::move(members);
      doc["well_supported"] = supported;
      if (result) {
        json wits = json::array();
        for (const auto& [i, w] : *result) {
          json entry = witness_json(w);
          entry["interpretation"] = atoms_json(i);
          wits.push_back(std::move(entry));
        }
        doc["witnesses"] = std::move(wits);
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "well-supported: " << (supported ? "yes" : "no") << "\n";
      if (result) {
        for (const auto& [i, w] : *result) {
          out << "member " << print_interpretation(i) << ": order " << order_text(w.order);
          if (w.selection) out << "; selection " << selection_text(*w.selection);
          out << "\n";
        }
      }
    }
  } else {
    Interpretation i = parse_interpretation(literal);
    std::vector<WsWitness> witnesses;
    if (cfg.all_witnesses) {
      witnesses = ws_all_witnesses(p, i);
    } else if (auto w = ws_check_disjunctive(p, i)) {
      witnesses.push_back(*w);
    }
    supported = !witnesses.empty();
    if (cfg.json) {
      doc["interpretation"] = atoms_json(i);
      doc["well_supported"] = supported;
      json wits = json::array();
      for (const WsWitness& w : witnesses) wits.push_back(witness_json(w));
      doc["witnesses"] = std::move(wits);
      out << doc.dump(2) << "\n";
    } else {
      out << "well-supported: " << (supported ? "yes" : "no") << "\n";
      for (size_t k = 0; k < witnesses.size(); ++k) {
        out << "witness " << k + 1 << ": order " << order_text(witnesses[k].order);
        if (witnesses[k].selection)
          out << "; selection " << selection_text(*witnesses[k].selection);
        out << "\n";
      }
    }
  }
  return supported ? kExitFound : kExitEmpty;
}

int cmd_compare(const RunConfig& cfg, const std::vector<std::string>& sem_names,
                std::ostream& out) {
  Program p = load_program(cfg.input);
  std::vector<SemanticsId> sems;
  for (const std::string& name : sem_names) sems.push_back(parse_semantics(name));
  bool world_view_mode = is_world_view_semantics(sems.front());
  for (const SemanticsId& s : sems) {
    if (is_world_view_semantics(s) != world_view_mode)
      throw Error("compare requires all answer-set or all world-view semantics");
  }
  size_t cap = static_cast<size_t>(cfg.max_atoms);

  std::vector<std::vector<Interpretation>> as_results;
  std::vector<std::vector<EpistemicModel>> wv_results;
  for (const SemanticsId& s : sems) {
    if (world_view_mode) {
      std::vector<EpistemicModel> ms;
      for (const WorldView& w : world_views(p, s, cap)) ms.push_back(w.model);
      std::sort(ms.begin(), ms.end());
      wv_results.push_back(std::move(ms));
    } else {
      std::vector<Interpretation> as = answer_sets(p, s, cap);
      std::sort(as.begin(), as.end());
      as_results.push_back(std::move(as));
    }
  }

  bool all_agree = true;
  json comparisons = json::array();
  std::vector<std::string> disagreement_lines;
  for (size_t a = 0; a < sems.size(); ++a) {
    for (size_t b = a + 1; b < sems.size(); ++b) {
      bool agree = world_view_mode ? wv_results[a] == wv_results[b]
                                   : as_results[a] == as_results[b];
      if (!agree) all_agree = false;
      json entry;
      entry["left"] = to_string(sems[a]);
      entry["right"] = to_string(sems[b]);
      entry["agree"] = agree;
      comparisons.push_back(std::move(entry));
      if (!agree) {
        disagreement_lines.push_back(to_string(sems[a]) + " vs " + to_string(sems[b]) +
                                     ": disagree");
      }
    }
  }

  if (cfg.json) {
    json doc;
    doc["program"] = cfg.input;
    json results = json::array();
    for (size_t k = 0; k < sems.size(); ++k) {
      json entry;
      entry["semantics"] = to_string(sems[k]);
      if (world_view_mode) {
        json arr = json::array();
        for (const EpistemicModel& m : wv_results[k]) {
          json models = json::array();
          for (const Interpretation& i : m) models.push_back(atoms_json(i));
          arr.push_back(std::move(models));
        }
        entry["world_views"] = std::move(arr);
      } else {
        entry["answer_sets"] = interpretations_json(as_results[k]);
      }
      results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    doc["comparisons"] = std::move(comparisons);
    out << doc.dump(2) << "\n";
  } else {
    for (size_t k = 0; k < sems.size(); ++k) {
      out << to_string(sems[k]) << ":";
      if (world_view_mode) {
        for (const EpistemicModel& m : wv_results[k]) out << " " << print_epistemic_model(m);
        if (wv_results[k].empty()) out << " (none)";
      } else {
        for (const Interpretation& i : as_results[k]) out << " " << print_interpretation(i);
        if (as_results[k].empty()) out << " (none)";
      }
      out << "\n";
    }
    if (disagreement_lines.empty()) {
      out << "all semantics agree\n";
    } else {
      for (const std::string& line : disagreement_lines) out << line << "\n";
    }
  }
  return all_agree ? kExitFound : kExitEmpty;
}

json report_json(const PropertyReport& r) {
  json doc;
  doc["property"] = to_string(r.property);
  doc["holds"] = r.holds;
  if (r.holds) return doc;
  json witness;
  if (r.as_witness) witness["answer_set"] = atoms_json(*r.as_witness);
  if (r.smaller_model) witness["smaller_model"] = atoms_json(*r.smaller_model);
  if (r.wv_witness) {
    json models = json::array();
    for (const Interpretation& i : *r.wv_witness) models.push_back(atoms_json(i));
    witness["world_view"] = std::move(models);
  }
  if (r.unfounded) {
    if (!r.unfounded->x.empty()) witness["unfounded"] = atoms_json(r.unfounded->x);
    if (!r.unfounded->pairs.empty()) {
      json pairs = json::array();
      for (const auto& [x, i] : r.unfounded->pairs) {
        json pj;
        pj["x"] = atoms_json(x);
        pj["i"] = atoms_json(i);
        pairs.push_back(std::move(pj));
      }
      witness["unfounded_pairs"] = std::move(pairs);
    }
  }
  doc["witness"] = std::move(witness);
  return doc;
}

void report_text(const PropertyReport& r, std::ostream& out) {
  out << to_string(r.property) << ": " << (r.holds ? "holds" : "fails");
  if (!r.holds) {
    if (r.as_witness) out << "  answer set " << print_interpretation(*r.as_witness);
    if (r.smaller_model) out << "  smaller model " << print_interpretation(*r.smaller_model);
    if (r.wv_witness) out << "  world view " << print_epistemic_model(*r.wv_witness);
    if (r.unfounded && !r.unfounded->x.empty())
      out << "  unfounded " << print_interpretation(r.unfounded->x);
    if (r.unfounded && !r.unfounded->pairs.empty()) {
      out << "  unfounded pairs";
      for (const auto& [x, i] : r.unfounded->pairs)
        out << " <" << print_interpretation(x) << "," << print_interpretation(i) << ">";
    }
  }
  out << "\n";
}

int cmd_properties(const RunConfig& cfg, std::vector<std::string> prop_names,
                   const std::string& constraint_text, std::ostream& out) {
  Program p = load_program(cfg.input);
  std::optional<Rule> constraint;
  if (!constraint_text.empty()) {
    Program cp = parse_program(constraint_text);
    if (cp.rules.size() != 1)
      throw Error("--constraint expects exactly one rule");
    constraint = cp.rules.front();
  }
  std::vector<PropertyId> props;
  if (prop_names.empty()) {
    if (is_epistemic(p)) {
      props = {PropertyId::WFN};
      if (constraint) props.push_back(PropertyId::SCM);
    } else {
      props = {PropertyId::MM, PropertyId::FN};
      if (constraint)
        props.push_back(contains_epnot(constraint->body) ? PropertyId::SCM : PropertyId::CM);
    }
  } else {
    for (const std::string& name : prop_names) props.push_back(parse_property(name));
  }

  size_t cap = static_cast<size_t>(cfg.max_atoms);
  std::vector<PropertyReport> reports;
  for (PropertyId id : props) {
    switch (id) {
      case PropertyId::MM:
        reports.push_back(check_mm(p, cfg.semantics, cap));
        break;
      case PropertyId::FN:
        reports.push_back(check_fn(p, cfg.semantics, cap));
        break;
      case PropertyId::WFN:
        reports.push_back(check_wfn(p, cfg.semantics, cap));
        break;
      case PropertyId::CM:
        if (!constraint) throw Error("property CM requires --constraint");
        reports.push_back(check_cm(p, *constraint, cfg.semantics, cap));
        break;
      case PropertyId::SCM:
        if (!constraint) throw Error("property SCM requires --constraint");
        reports.push_back(check_scm(p, *constraint, cfg.semantics, cap));
        break;
    }
  }

  bool all_hold = std::all_of(reports.begin(), reports.end(),
                              [](const PropertyReport& r) { return r.holds; });
  if (cfg.json) {
    json doc;
    doc["program"] = cfg.input;
    doc["semantics"] = to_string(cfg.semantics);
    json arr = json::array();
    for (const PropertyReport& r : reports) arr.push_back(report_json(r));
    doc["reports"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else {
    for (const PropertyReport& r : reports) report_text(r, out);
  }
  return all_hold ? kExitFound : kExitEmpty;
}

int cmd_devtools(const std::string& kind, uint32_t seed, int atoms, int rules, int max_heads,
                 int max_ep, std::ostream& out) {
  std::mt19937 rng(seed);
  Program p;
  if (kind == "simple-normal") {
    p = random_simple_normal(rng, atoms, rules);
  } else if (kind == "simple-disjunctive") {
    p = random_simple_disjunctive(rng, atoms, rules, max_heads);
  } else if (kind == "normal") {
    p = random_normal(rng, atoms, rules);
  } else if (kind == "epistemic") {
    p = random_epistemic(rng, atoms, rules, max_ep);
  } else {
    throw Error("unknown generator kind: " + kind +
                " (expected simple-normal, simple-disjunctive, normal, epistemic)");
  }
  out << print_program(p);
  return kExitFound;
}

}  // namespace

Interpretation parse_interpretation(const std::string& text) {
  std::string s = trimmed(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw Error("unbalanced braces in interpretation literal");
    s = trimmed(s.substr(1, s.size() - 2));
  }
  Interpretation out;
  if (s.empty()) return out;
  for (const std::string& part : split_top_level(s, ',')) {
    std::string token = trimmed(part);
    if (token.empty()) throw Error("empty atom in interpretation literal");
    FormulaPtr f = parse_formula(token);
    if (f->kind != Kind::Atom || contains_variables(f))
      throw Error("interpretation literals list ground atoms: " + token);
    out.insert(f->atom);
  }
  return out;
}

EpistemicModel parse_epistemic_model(const std::string& text) {
  EpistemicModel out;
  for (const std::string& part : split_top_level(trimmed(text), ';')) {
    out.push_back(parse_interpretation(part));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error("epistemic model literal must list at least one interpretation");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rational answer set and world view reference solver", "rasp"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string semantics_name = "RATIONAL";
  std::string model_literal;
  std::vector<std::string> compare_sems;
  std::vector<std::string> prop_names;
  std::string constraint_text;
  std::string gen_kind;
  uint32_t seed = 1;
  int gen_atoms = 4;
  int gen_rules = 4;
  int gen_max_heads = 3;
  int gen_max_ep = 3;

  auto add_common = [&](CLI::App* sub, bool with_semantics) {
    sub->add_option("file", cfg.input, "program file")->required();
    if (with_semantics) sub->add_option("--semantics", semantics_name, "semantics id");
    sub->add_option("--max-atoms", cfg.max_atoms, "enumeration cap")
        ->check(CLI::Range(1, 30));
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };

  CLI::App* solve = app.add_subcommand("solve", "enumerate answer sets");
  add_common(solve, true);
  CLI::App* worldviews = app.add_subcommand("worldviews", "enumerate world views");
  add_common(worldviews, true);
  CLI::App* check_ws = app.add_subcommand("check-ws", "decide well-supportedness");
  add_common(check_ws, false);
  check_ws->add_option("model", model_literal,
                       "interpretation (a,b) or epistemic model ({a};{b})")
      ->required();
  check_ws->add_flag("--all-witnesses", cfg.all_witnesses, "report every witness order");
  CLI::App* compare = app.add_subcommand("compare", "compare semantics side by side");
  add_common(compare, false);
  compare->add_option("semantics", compare_sems, "two or more semantics ids")
      ->required()
      ->expected(2, -1);
  CLI::App* properties = app.add_subcommand("properties", "run property checkers");
  add_common(properties, true);
  properties->add_option("props", prop_names, "MM, FN, WFN, CM, SCM (default by program class)");
  properties->add_option("--constraint", constraint_text, "constraint rule for CM/SCM");
  CLI::App* devtools = app.add_subcommand("devtools", "seeded random program generators");
  devtools->add_option("kind", gen_kind,
                       "simple-normal | simple-disjunctive | normal | epistemic")
      ->required();
  devtools->add_option("--seed", seed, "generator seed");
  devtools->add_option("--atoms", gen_atoms, "atom pool size")->check(CLI::Range(1, 26));
  devtools->add_option("--rules", gen_rules, "rule count")->check(CLI::Range(0, 64));
  devtools->add_option("--max-heads", gen_max_heads, "head bound")->check(CLI::Range(1, 8));
  devtools->add_option("--max-ep", gen_max_ep, "epistemic negation bound")
      ->check(CLI::Range(1, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitFound : kExitError;
  }

  try {
    cfg.semantics = parse_semantics(semantics_name);
    if (solve->parsed()) {
      cfg.command = "solve";
      return cmd_solve(cfg, out);
    }
    if (worldviews->parsed()) {
      cfg.command = "worldviews";
      return cmd_worldviews(cfg, out);
    }
    if (check_ws->parsed()) {
      cfg.command = "check-ws";
      return cmd_check_ws(cfg, model_literal, out);
    }
    if (compare->parsed()) {
      cfg.command = "compare";
      return cmd_compare(cfg, compare_sems, out);
    }
    if (properties->parsed()) {
      cfg.command = "properties";
      return cmd_properties(cfg, prop_names, constraint_text, out);
    }
    if (devtools->parsed()) {
      cfg.command = "devtools";
      return cmd_devtools(gen_kind, seed, gen_atoms, gen_rules, gen_max_heads, gen_max_ep, out);
    }
    throw Error("no command selected");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace rasp
