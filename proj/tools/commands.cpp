#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace cellcrystal::cli {

namespace {

std::vector<std::int64_t> to_vector(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::string cleaned = text;
  std::replace_if(cleaned.begin(), cleaned.end(), [](char ch) { return ch == ',' || ch == '[' || ch == ']'; }, ' ');
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

json ext_json(ExtInt v) { return v.is_finite() ? json(v.value()) : json(nullptr); }

json word_json(const Word& w) { return json(std::vector<int>(w.letters().begin(), w.letters().end())); }

json basis_json(const HBasis& b) {
  json out = json::array();
  for (const auto& v : b.vectors) out.push_back(to_vector(v.coords()));
  return out;
}

int default_height(const CellElem& x) { return std::max<int>(16, static_cast<int>(4 * x.max_abs() * x.size())); }

}  // namespace

Word resolve_word(const JobConfig& cfg) {
  if (cfg.type.empty()) throw UsageError("--type is required");
  CartanPtr cd;
  try {
    cd = cartan_data(cfg.type);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (cfg.word.empty()) return longest_word(cd);
  try {
    return Word::parse(cd, cfg.word);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

CellElem parse_element(const std::string& text, const Word& word) {
  std::vector<std::int64_t> coords;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
      if (j.contains("type") && LieType::parse(j.at("type").get<std::string>()) != word.cartan().type()) {
        throw UsageError("element type " + j.at("type").get<std::string>() + " does not match " +
                         word.cartan().type().to_string());
      }
      if (j.contains("word") && j.at("word").get<std::vector<int>>() !=
                                    std::vector<int>(word.letters().begin(), word.letters().end())) {
        throw UsageError("element word does not match " + word.to_string());
      }
      coords = j.at("coords").get<std::vector<std::int64_t>>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad element JSON: ") + e.what());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else {
    coords = parse_ints(text);
  }
  if (static_cast<int>(coords.size()) != word.size()) {
    throw UsageError("element has " + std::to_string(coords.size()) + " coordinates, word " + word.to_string() +
                     " has " + std::to_string(word.size()) + " letters");
  }
  return CellElem(std::move(coords));
}

json element_json(const Word& word, const CellElem& x) {
  return {{"type", word.cartan().type().to_string()}, {"word", word_json(word)}, {"coords", to_vector(x.coords())}};
}

json weight_json(const Weight& w) { return to_vector(w.coeffs()); }

json cmd_hbasis(const JobConfig& cfg) {
  const Word w = resolve_word(cfg);
  const HBasis b = h_basis(CellCrystal(w));
  return {{"type", w.cartan().type().to_string()}, {"word", word_json(w)}, {"basis", basis_json(b)}};
}

json cmd_act(const JobConfig& cfg) {
  const Word w = resolve_word(cfg);
  const CellCrystal c(w);
  const CellElem start = cfg.element.empty() ? CellElem::zero(w.size()) : parse_element(cfg.element, w);
  std::vector<OpStep> ops;
  try {
    ops = parse_op_string(cfg.ops);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  auto state = [&](const CellElem& x) {
    json eps = json::array(), phi = json::array();
    for (int i = 1; i <= c.rank(); ++i) {
      eps.push_back(ext_json(c.epsilon(x, i)));
      phi.push_back(ext_json(c.phi(x, i)));
    }
    return json{{"coords", to_vector(x.coords())}, {"wt", weight_json(c.weight(x))}, {"epsilon", eps}, {"phi", phi}};
  };

  json steps = json::array();
  json s0 = state(start);
  s0["op"] = nullptr;
  steps.push_back(s0);
  CellElem x = start;
  // The rightmost factor acts first.
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    OpStep unit = *it;
    const int n = std::abs(unit.count);
    if (unit.count < 0) unit.kind = unit.kind == OpStep::Kind::E ? OpStep::Kind::F : OpStep::Kind::E;
    unit.count = 1;
    for (int r = 0; r < n; ++r) {
      try {
        x = c.apply_string(x, std::span<const OpStep>(&unit, 1));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      json s = state(x);
      s["op"] = format_op_string(std::span<const OpStep>(&unit, 1));
      steps.push_back(s);
    }
  }
  return {{"type", w.cartan().type().to_string()},
          {"word", word_json(w)},
          {"ops", format_op_string(ops)},
          {"start", to_vector(start.coords())},
          {"steps", steps},
          {"result", element_json(w, x)}};
}

json cmd_braid(const JobConfig& cfg) {
  const Word from = resolve_word(cfg);
  if (cfg.target.empty()) throw UsageError("--target is required");
  Word to = from;
  try {
    to = Word::parse(from.cartan_ptr(), cfg.target);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const CellElem x = cfg.element.empty() ? CellElem::zero(from.size()) : parse_element(cfg.element, from);
  std::vector<BraidMove> path;
  try {
    path = matsumoto_path(from, to);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const BraidImage img = transform(from, x, path);
  json moves = json::array();
  for (const auto& m : path) moves.push_back({{"pos", m.pos}, {"kind", m.kind}});
  return {{"from", element_json(from, x)}, {"path", moves}, {"image", element_json(img.word, img.x)}};
}

json cmd_binf(const JobConfig& cfg) {
  const Word w = resolve_word(cfg);
  const int h = cfg.height < 0 ? 4 : cfg.height;
  const auto table = BinfTable::generate(CellCrystal(w), h);
  json layers = json::array();
  for (int k = 0; k <= h; ++k) {
    json elems = json::array();
    for (const auto& b : table.layer(k)) elems.push_back(to_vector(b.coords()));
    layers.push_back({{"height", k}, {"size", elems.size()}, {"elements", elems}});
  }
  json mult = json::array();
  for (const auto& [wt, n] : table.weight_multiplicities()) mult.push_back({{"weight", weight_json(wt)}, {"count", n}});
  return {{"type", w.cartan().type().to_string()},
          {"word", word_json(w)},
          {"max_height", h},
          {"size", table.size()},
          {"layers", layers},
          {"multiplicities", mult}};
}

json cmd_decompose(const JobConfig& cfg) {
  const Word w = resolve_word(cfg);
  const CellCrystal c(w);
  if (cfg.element.empty()) throw UsageError("--element is required");
  const CellElem x = parse_element(cfg.element, w);
  const HBasis basis = h_basis(c);
  const int h0 = cfg.height < 0 ? default_height(x) : cfg.height;
  const Decomposition d =
      with_table(c, h0, [&](const std::shared_ptr<const BinfTable>& t) { return decompose(basis, *t, x, cfg.bound); });
  return {{"x", element_json(w, x)}, {"c", d.c}, {"b", to_vector(d.b.coords())}};
}

json cmd_loc(const JobConfig& cfg) {
  const Word w = resolve_word(cfg);
  const CellCrystal c(w);
  if (cfg.element.empty()) throw UsageError("--element is required");
  const CellElem x = parse_element(cfg.element, w);
  const int h0 = cfg.height < 0 ? default_height(x) : cfg.height;

  return with_table(c, h0, [&](const std::shared_ptr<const BinfTable>& t) -> json {
    const LocalizedCrystal L(t);
    const LocalElem e = L.element(x);
    auto with_presentation = [&](const LocalElem& r) {
      const auto p = L.presentation(r, cfg.bound);
      return json{{"element", element_json(w, r.x)}, {"c", p.c}, {"b", to_vector(p.b.coords())}};
    };
    const std::string& a = cfg.action;
    if (a == "decompose") return with_presentation(e);
    if (a == "ominus") return with_presentation(L.ominus(e));
    if (a == "oplus") {
      if (cfg.other.empty()) throw UsageError("oplus needs --other");
      return with_presentation(L.oplus(e, L.element(parse_element(cfg.other, w))));
    }
    if (a == "eps" || a == "wt") {
      const auto p = L.presentation(e, cfg.bound);
      json eps = json::array(), phi = json::array();
      for (int i = 1; i <= c.rank(); ++i) {
        eps.push_back(L.eps_loc(p, i));
        phi.push_back(L.phi_loc(p, i));
      }
      return {{"element", element_json(w, x)},
              {"c", p.c},
              {"b", to_vector(p.b.coords())},
              {"epsilon", eps},
              {"phi", phi},
              {"wt", weight_json(L.wt_loc(p))}};
    }
    if (a == "act") {
      std::vector<OpStep> ops;
      try {
        ops = parse_op_string(cfg.ops);
      } catch (const DomainError& ex) {
        throw UsageError(ex.what());
      }
      LocalElem r = e;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->index < 1 || it->index > c.rank()) throw UsageError("operator index out of range");
        const bool raise = (it->kind == OpStep::Kind::E) == (it->count > 0);
        for (int k = 0; k < std::abs(it->count); ++k) r = raise ? L.e_loc(r, it->index) : L.f_loc(r, it->index);
      }
      json out = with_presentation(r);
      out["ops"] = format_op_string(ops);
      return out;
    }
    throw UsageError("unknown loc action '" + a + "' (act, eps, wt, oplus, ominus, decompose)");
  });
}

std::string cmd_graph(const JobConfig& cfg) {
  static constexpr const char* kColors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  const Word w = resolve_word(cfg);
  const CellCrystal c(w);
  std::vector<CellElem> nodes;
  std::function<bool(const CellElem&)> keep;
  std::optional<BinfTable> table;
  if (cfg.radius >= 0) {
    const int r = cfg.radius;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(w.size()), -r);
    for (;;) {
      nodes.emplace_back(cur);
      int k = w.size() - 1;
      while (k >= 0 && cur[static_cast<std::size_t>(k)] == r) cur[static_cast<std::size_t>(k--)] = -r;
      if (k < 0) break;
      ++cur[static_cast<std::size_t>(k)];
    }
    keep = [r](const CellElem& y) { return y.max_abs() <= r; };
  } else {
    const int h = cfg.height < 0 ? 2 : cfg.height;
    table = BinfTable::generate(c, h);
    for (int k = 0; k <= h; ++k) nodes.insert(nodes.end(), table->layer(k).begin(), table->layer(k).end());
    keep = [&table, h](const CellElem& y) { return y.height() <= h && table->contains(y); };
  }

  std::ostringstream dot;
  dot << "digraph crystal {\n";
  dot << "  label=\"" << w.cartan().type().to_string() << " word " << w.to_string() << "\";\n";
  dot << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& x : nodes) dot << "  \"" << x.to_string() << "\";\n";
  for (const auto& x : nodes) {
    for (int i = 1; i <= c.rank(); ++i) {
      const auto y = c.f_tilde(x, i);
      if (!y || !keep(*y)) continue;
      dot << "  \"" << x.to_string() << "\" -> \"" << y->to_string() << "\" [label=\"" << i << "\", color=\""
          << kColors[(i - 1) % 8] << "\"];\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

namespace {

void add_common(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--type", cfg.type, "Cartan type, e.g. A2, B3, G2");
  sub->add_option("--word", cfg.word, "reduced word, e.g. 1,2,1 (default: canonical longest word)");
}

void load_config(const std::string& path, JobConfig& cfg, const CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("bad config file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [&](const char* flag) {
    try {
      return sub.get_option(flag)->count() == 0;
    } catch (const CLI::OptionNotFound&) {
      return true;
    }
  };
  auto text = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : ",") + e.dump();
      return s;
    }
    return v.dump();
  };
  try {
    for (const auto& [key, v] : j.items()) {
      const std::string flag = "--" + key;
      if (!unset(flag.c_str())) continue;
      if (key == "type") cfg.type = v.get<std::string>();
      else if (key == "word") cfg.word = text(v);
      else if (key == "height") cfg.height = v.get<int>();
      else if (key == "radius") cfg.radius = v.get<int>();
      else if (key == "bound") cfg.bound = v.get<std::int64_t>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "samples") cfg.samples = v.get<std::size_t>();
      else if (key == "suite") cfg.suite = v.get<std::string>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "element") cfg.element = v.is_object() ? v.dump() : text(v);
      else if (key == "other") cfg.other = v.is_object() ? v.dump() : text(v);
      else if (key == "ops") cfg.ops = v.get<std::string>();
      else if (key == "target") cfg.target = text(v);
      else if (key == "box") cfg.box = v.get<int>();
      else throw UsageError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError("bad config value: " + std::string(e.what()));
  }
}

void emit(const JobConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Cellular crystals, B(∞) and the localized crystal.\n"
      "Weights use fundamental-weight coordinates; a_ij = <h_i, alpha_j>.\n"
      "G2 is labelled with a_12 = -1, a_21 = -3 (alpha_1 long).",
      "cellcrystal"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string config_path;

  auto* hbasis = app.add_subcommand("hbasis", "basis h_1..h_n of the shift lattice");
  auto* act = app.add_subcommand("act", "apply an operator string, e.g. \"f1 f2^2 e1\" (rightmost acts first)");
  auto* braid = app.add_subcommand("braid", "carry an element to another reduced word");
  auto* binf = app.add_subcommand("binf", "B(∞) layers by height and weight multiplicities");
  auto* decomp = app.add_subcommand("decompose", "x = sum c_i h_i + b with b in B(∞)");
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  auto* graph = app.add_subcommand("graph", "crystal graph as DOT");
  auto* loc = app.add_subcommand("loc", "localized crystal: act, eps, wt, oplus, ominus, decompose");

  for (auto* sub : {hbasis, act, braid, binf, decomp, verify, graph, loc}) {
    add_common(sub, cfg);
    sub->add_option("--config", config_path, "JSON file whose keys are flag names; flags win");
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
  }
  for (auto* sub : {act, braid, decomp, loc})
    sub->add_option("--element", cfg.element, "coordinates 1,0,2 or an element JSON object");
  act->add_option("--ops", cfg.ops, "operator string");
  loc->add_option("--ops", cfg.ops, "operator string for 'act'");
  loc->add_option("--other", cfg.other, "second element for 'oplus'");
  loc->add_option("action", cfg.action, "act | eps | wt | oplus | ominus | decompose")->required();
  braid->add_option("--target", cfg.target, "target reduced word");
  for (auto* sub : {binf, graph, decomp, loc, verify})
    sub->add_option("--height", cfg.height, "B(∞) table height");
  for (auto* sub : {decomp, loc, verify}) sub->add_option("--bound", cfg.bound, "bound on |c_i|");
  graph->add_option("--radius", cfg.radius, "draw the box [-r,r]^N instead of B(∞)");
  verify->add_option("--suite", cfg.suite, "one of: axioms, braid-morphism, h-reversal, shift-equivariance, coverage, "
                                           "categorical-e, connectivity");
  verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "sample count")->capture_default_str();
  verify->add_option("--radius", cfg.radius, "box radius for coverage, connectivity and sampling");
  verify->add_option("--box", cfg.box, "search box radius for connectivity")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!config_path.empty()) load_config(config_path, cfg, *sub);
    if (sub == verify) {
      const SuiteResult r = cmd_verify(cfg);
      emit(cfg, r.report.dump(2) + "\n", out);
      if (!r.passed) {
        err << "FAIL " << cfg.suite << ": " << r.report.value("first_failure", std::string()) << "\n";
        return 1;
      }
      return 0;
    }
    if (sub == graph) {
      emit(cfg, cmd_graph(cfg), out);
      return 0;
    }
    json result;
    if (sub == hbasis) result = cmd_hbasis(cfg);
    else if (sub == act) result = cmd_act(cfg);
    else if (sub == braid) result = cmd_braid(cfg);
    else if (sub == binf) result = cmd_binf(cfg);
    else if (sub == decomp) result = cmd_decompose(cfg);
    else result = cmd_loc(cfg);
    emit(cfg, result.dump(2) + "\n", out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cellcrystal::cli
