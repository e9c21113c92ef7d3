#include <functional>
#include <map>
#include <random>

#include "commands.hpp"

namespace cellcrystal::cli {

namespace {

struct Context {
  const JobConfig& cfg;
  Word word;
  CellCrystal crystal;
  std::mt19937_64 rng;

  explicit Context(const JobConfig& c) : cfg(c), word(resolve_word(c)), crystal(word), rng(c.seed) {}

  int radius(int fallback) const { return cfg.radius < 0 ? fallback : cfg.radius; }

  CellElem random_elem(int r) {
    std::uniform_int_distribution<std::int64_t> d(-r, r);
    std::vector<std::int64_t> v(static_cast<std::size_t>(word.size()));
    for (auto& x : v) x = d(rng);
    return CellElem(std::move(v));
  }
  int random_index() { return std::uniform_int_distribution<int>(1, crystal.rank())(rng); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }
};

json finish(const Context& ctx, const CheckReport& r) {
  json out{{"suite", ctx.cfg.suite},
           {"type", ctx.word.cartan().type().to_string()},
           {"word", std::vector<int>(ctx.word.letters().begin(), ctx.word.letters().end())},
           {"seed", ctx.cfg.seed},
           {"cases", r.cases},
           {"failures", r.failures},
           {"passed", r.passed()}};
  if (!r.passed()) out["first_failure"] = r.first_failure;
  return out;
}

std::string show(const CellElem& x, int i) { return "x=" + x.to_string() + " i=" + std::to_string(i); }

// Def. 3.1 clauses for one (x, i) in a crystal whose functions are given as
// callables; nullopt operators are the crystal's 0.
template <class Eps, class Phi, class Wt, class E, class F>
void axiom_case(CheckReport& r, const CartanData& cd, const CellElem& x, int i, Eps eps, Phi phi, Wt wt, E e, F f,
                const std::string& level) {
  ++r.cases;
  const auto tag = level + " " + show(x, i);
  const ExtInt ex = eps(x), px = phi(x);
  if (ex.is_finite() != px.is_finite()) return r.fail(tag + ": ε and φ disagree on finiteness");
  if (px.is_neg_inf()) {
    if (e(x) || f(x)) r.fail(tag + ": φ = -inf but an operator is defined");
    return;
  }
  const Weight w = wt(x);
  if (px != ex + w.pairing(i)) return r.fail(tag + ": φ ≠ ε + <h_i, wt>");
  if (const auto y = e(x)) {
    if (wt(*y) != w + cd.alpha(i) || eps(*y) != ex - 1 || phi(*y) != px + 1) return r.fail(tag + ": ẽ clause");
    const auto back = f(*y);
    if (!back || *back != x) return r.fail(tag + ": f̃ẽ ≠ id");
  }
  if (const auto y = f(x)) {
    if (wt(*y) != w - cd.alpha(i) || eps(*y) != ex + 1 || phi(*y) != px - 1) return r.fail(tag + ": f̃ clause");
    const auto back = e(*y);
    if (!back || *back != x) return r.fail(tag + ": ẽf̃ ≠ id");
  }
}

// The localized level, on presentations C_Λ∘S ~ (c, b). Images get their
// presentations from the definitions of F̃_i and Ẽ_i, so ε, φ and wt are
// never read off the representative.
std::size_t localized_axioms(Context& ctx, CheckReport& r) {
  const auto& c = ctx.crystal;
  const auto& cd = c.cartan();
  const HBasis basis = h_basis(c);
  const int bh = ctx.cfg.height < 0 ? 6 : ctx.cfg.height;
  int hmax = 0;
  for (const auto& v : basis.vectors) hmax = std::max<int>(hmax, static_cast<int>(v.height()));
  const auto table = std::make_shared<const BinfTable>(BinfTable::generate(c, bh + hmax + 1));
  const LocalizedCrystal L(table);
  std::vector<CellElem> pool;
  for (int h = 0; h <= bh; ++h) pool.insert(pool.end(), table->layer(h).begin(), table->layer(h).end());
  const std::int64_t bound = ctx.cfg.bound.value_or(3);
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);

  std::size_t cases = 0;
  for (std::size_t s = 0; s < ctx.cfg.samples; ++s, ++cases) {
    LocalPresentation p;
    p.c.resize(static_cast<std::size_t>(c.rank()));
    for (auto& v : p.c) v = coeff(ctx.rng);
    p.b = ctx.pick(pool);
    const int i = ctx.random_index();
    ++r.cases;
    const LocalElem x = L.from_pair(p);
    const std::string tag = "localized c=" + Weight(p.c).to_string() + " b=" + p.b.to_string() + " i=" +
                            std::to_string(i);
    const std::int64_t eps = L.eps_loc(p, i), phi = L.phi_loc(p, i);
    const Weight wt = L.wt_loc(p);
    if (phi != eps + wt.pairing(i)) {
      r.fail(tag + ": φ ≠ ε + <h_i, wt>");
      continue;
    }

    LocalPresentation pf{p.c, *c.f_tilde(p.b, i)};
    LocalPresentation pe;
    if (c.epsilon(p.b, i) > ExtInt(0)) {
      pe = {p.c, *c.e_tilde(p.b, i)};
    } else {
      const int j = cd.i_star(i);
      pe = {p.c, *c.e_tilde(basis.h(j) + p.b, i)};
      --pe.c[static_cast<std::size_t>(j - 1)];
    }
    if (!table->contains(pe.b) || !table->contains(pf.b)) {
      r.fail(tag + ": image presentation leaves B(∞)");
      continue;
    }
    const LocalElem e = L.e_loc(x, i), f = L.f_loc(x, i);
    if (L.from_pair(pe) != e || L.from_pair(pf) != f) r.fail(tag + ": presentation of the image disagrees");
    else if (L.wt_loc(pe) != wt + cd.alpha(i) || L.eps_loc(pe, i) != eps - 1 || L.phi_loc(pe, i) != phi + 1)
      r.fail(tag + ": Ẽ clause");
    else if (L.wt_loc(pf) != wt - cd.alpha(i) || L.eps_loc(pf, i) != eps + 1 || L.phi_loc(pf, i) != phi - 1)
      r.fail(tag + ": F̃ clause");
    else if (L.f_loc(e, i) != x || L.e_loc(f, i) != x)
      r.fail(tag + ": Ẽ and F̃ are not inverse");
  }
  return cases;
}

json suite_axioms(Context& ctx) {
  CheckReport r;
  const auto& c = ctx.crystal;
  const auto& cd = c.cartan();
  const int rad = ctx.radius(5);
  for (std::size_t s = 0; s < ctx.cfg.samples; ++s) {
    const CellElem x = ctx.random_elem(rad);
    const int i = ctx.random_index();
    axiom_case(
        r, cd, x, i, [&](const CellElem& y) { return c.epsilon(y, i); }, [&](const CellElem& y) { return c.phi(y, i); },
        [&](const CellElem& y) { return c.weight(y); }, [&](const CellElem& y) { return c.e_tilde(y, i); },
        [&](const CellElem& y) { return c.f_tilde(y, i); }, "cellular");
  }

  std::size_t localized = 0;
  if (is_reduced_longest(ctx.word)) {
    localized = localized_axioms(ctx, r);
  }
  json out = finish(ctx, r);
  out["localized_cases"] = localized;
  return out;
}

// A random walk over reduced words of the same element, one braid move per step.
struct WordWalk {
  Word current;
  std::vector<BraidMove> moves;

  const BraidMove& step(Context& ctx) {
    moves = applicable_moves(current);
    return ctx.pick(moves);
  }
};

json suite_braid_morphism(Context& ctx) {
  CheckReport r;
  WordWalk walk{ctx.word, {}};
  const int rad = ctx.radius(5);
  if (applicable_moves(ctx.word).empty()) throw UsageError("word " + ctx.word.to_string() + " admits no braid move");
  for (std::size_t s = 0; s < ctx.cfg.samples; ++s) {
    const BraidMove m = walk.step(ctx);
    const Word& w = walk.current;
    const CellCrystal src(w);
    const BraidImage img0 = braid_isomorphism(w, CellElem::zero(w.size()), m);
    const CellCrystal dst(img0.word);
    const CellElem x = ctx.random_elem(rad);
    const CellElem y = braid_isomorphism(w, x, m).x;
    ++r.cases;
    const std::string tag = "word=" + w.to_string() + " move=(" + std::to_string(m.pos) + "," +
                            std::to_string(m.kind) + ") x=" + x.to_string();
    if (dst.weight(y) != src.weight(x)) r.fail(tag + ": weight");
    for (int i = 1; i <= src.rank(); ++i) {
      if (dst.epsilon(y, i) != src.epsilon(x, i) || dst.phi(y, i) != src.phi(x, i)) {
        r.fail(tag + " i=" + std::to_string(i) + ": ε/φ");
        continue;
      }
      const auto ex = src.e_tilde(x, i), fx = src.f_tilde(x, i);
      const auto ey = dst.e_tilde(y, i), fy = dst.f_tilde(y, i);
      if (ex.has_value() != ey.has_value() || fx.has_value() != fy.has_value()) {
        r.fail(tag + " i=" + std::to_string(i) + ": operator domain");
        continue;
      }
      if (ex && braid_isomorphism(w, *ex, m).x != *ey) r.fail(tag + " i=" + std::to_string(i) + ": ẽ");
      if (fx && braid_isomorphism(w, *fx, m).x != *fy) r.fail(tag + " i=" + std::to_string(i) + ": f̃");
    }
    if (braid_isomorphism(img0.word, y, m).x != x) r.fail(tag + ": not involutive");
    walk.current = img0.word;
  }
  return finish(ctx, r);
}

json suite_h_reversal(Context& ctx) {
  CheckReport r;
  WordWalk walk{ctx.word, {}};
  const std::int64_t bound = ctx.cfg.bound.value_or(3);
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  for (std::size_t s = 0; s < ctx.cfg.samples; ++s) {
    const BraidMove m = walk.step(ctx);
    const Word& w = walk.current;
    const HBasis basis = h_basis(CellCrystal(w));
    std::vector<std::int64_t> c(static_cast<std::size_t>(basis.rank()));
    for (auto& v : c) v = coeff(ctx.rng);
    const CellElem h = basis.combine(c);
    const BraidImage img = braid_isomorphism(w, h, m);
    CellElem reversed = h;
    for (int t = 0; t < m.kind; ++t) reversed.at(m.pos + t) = h.at(m.pos + m.kind - 1 - t);
    ++r.cases;
    const std::string tag = "word=" + w.to_string() + " pos=" + std::to_string(m.pos) + " h=" + h.to_string();
    if (img.x != reversed) r.fail(tag + ": image " + img.x.to_string() + " is not the reversed window");
    else if (!in_h(CellCrystal(img.word), img.x)) r.fail(tag + ": image leaves the shift lattice");
    walk.current = img.word;
  }
  return finish(ctx, r);
}

json suite_shift(Context& ctx) {
  const int h = ctx.cfg.height < 0 ? 6 : ctx.cfg.height;
  const auto table = BinfTable::generate(ctx.crystal, h);
  const auto r = shift_equivariance_check(h_basis(ctx.crystal), table, ctx.cfg.samples, ctx.cfg.seed,
                                          static_cast<int>(ctx.cfg.bound.value_or(2)), h);
  return finish(ctx, r);
}

json suite_coverage(Context& ctx) {
  const int rad = ctx.radius(1);
  const HBasis basis = h_basis(ctx.crystal);
  const int h0 = ctx.cfg.height < 0 ? 24 : ctx.cfg.height;
  const CoverageReport cov = with_table(ctx.crystal, h0, [&](const std::shared_ptr<const BinfTable>& t) {
    return coverage_check(basis, *t, rad);
  });
  CheckReport r;
  r.cases = cov.total;
  for (const auto& x : cov.failures) r.fail("no decomposition of " + x.to_string());
  json out = finish(ctx, r);
  out["radius"] = rad;
  out["decomposed"] = cov.decomposed;
  return out;
}

json suite_categorical(Context& ctx) {
  const int bh = ctx.cfg.height < 0 ? 6 : ctx.cfg.height;
  const std::int64_t bound = ctx.cfg.bound.value_or(3);
  const auto& c = ctx.crystal;
  int max_h = 0;
  const HBasis basis = h_basis(c);
  for (const auto& v : basis.vectors) max_h = std::max<int>(max_h, static_cast<int>(v.height()));
  const auto table = std::make_shared<const BinfTable>(BinfTable::generate(c, bh + max_h));
  const LocalizedCrystal L(table);
  std::vector<CellElem> pool;
  for (int h = 0; h <= bh; ++h) pool.insert(pool.end(), table->layer(h).begin(), table->layer(h).end());
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);

  CheckReport r;
  std::size_t second = 0;
  for (std::size_t s = 0; s < ctx.cfg.samples; ++s) {
    LocalPresentation p;
    p.c.resize(static_cast<std::size_t>(c.rank()));
    for (auto& v : p.c) v = coeff(ctx.rng);
    p.b = ctx.pick(pool);
    const int i = ctx.random_index();
    if (c.epsilon(p.b, i) == ExtInt(0)) ++second;
    ++r.cases;
    const std::string tag = "c=" + Weight(p.c).to_string() + " b=" + p.b.to_string() + " i=" + std::to_string(i);
    try {
      const LocalElem a = L.e_categorical(p, i);
      const LocalElem b = L.e_loc(L.from_pair(p), i);
      if (a != b) r.fail(tag + ": " + a.x.to_string() + " vs " + b.x.to_string());
    } catch (const ModelViolation& e) {
      r.fail(tag + ": " + e.what());
    }
  }
  json out = finish(ctx, r);
  out["second_branch"] = second;
  return out;
}

json suite_connectivity(Context& ctx) {
  const int rad = ctx.radius(1);
  CheckReport r;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(ctx.word.size()), -rad);
  std::size_t found = 0;
  for (;;) {
    const CellElem x(cur);
    ++r.cases;
    const auto path = connected_check(ctx.crystal, x, ctx.cfg.box);
    if (!path) r.fail("no path from " + x.to_string() + " within box " + std::to_string(ctx.cfg.box));
    else if (ctx.crystal.apply_string(x, *path) != CellElem::zero(ctx.word.size()))
      r.fail("path from " + x.to_string() + " does not reach 0");
    else ++found;
    int k = ctx.word.size() - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == rad) cur[static_cast<std::size_t>(k--)] = -rad;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
  }
  json out = finish(ctx, r);
  out["found"] = found;
  out["box"] = ctx.cfg.box;
  return out;
}

using Suite = std::function<json(Context&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> m{
      {"axioms", suite_axioms},
      {"braid-morphism", suite_braid_morphism},
      {"h-reversal", suite_h_reversal},
      {"shift-equivariance", suite_shift},
      {"coverage", suite_coverage},
      {"categorical-e", suite_categorical},
      {"connectivity", suite_connectivity},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteResult cmd_verify(const JobConfig& cfg) {
  const auto it = suites().find(cfg.suite);
  if (it == suites().end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown suite '" + cfg.suite + "' (known: " + known + ")");
  }
  Context ctx(cfg);
  json report = it->second(ctx);
  const bool passed = report.at("passed").get<bool>();
  return {passed, std::move(report)};
}

}  // namespace cellcrystal::cli
