#include "cellcrystal/binf.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

BinfTable BinfTable::generate(const CellCrystal& crystal, int max_height) {
  if (max_height < 0) throw DomainError("max_height must be nonnegative");
  if (!is_reduced_longest(crystal.word())) {
    throw DomainError("B(∞) realisation needs a reduced word for w_0; got " + crystal.word().to_string());
  }
  BinfTable table(crystal);
  const CellElem zero = CellElem::zero(crystal.size());
  table.layers_.push_back({zero});
  table.members_.insert(zero);
  for (int h = 0; h < max_height; ++h) {
    std::unordered_set<CellElem, CellElemHash> next;
    for (const auto& b : table.layers_.back()) {
      for (int i = 1; i <= crystal.rank(); ++i) next.insert(*crystal.f_tilde(b, i));
    }
    std::vector<CellElem> layer(next.begin(), next.end());
    std::sort(layer.begin(), layer.end());
    table.members_.insert(layer.begin(), layer.end());
    table.layers_.push_back(std::move(layer));
  }
  return table;
}

std::span<const CellElem> BinfTable::layer(int h) const {
  if (h < 0 || h > max_height()) throw DomainError("layer " + std::to_string(h) + " outside table");
  return layers_[static_cast<std::size_t>(h)];
}

bool BinfTable::contains(const CellElem& x) const {
  crystal_.check_elem(x);
  if (!x.is_nonnegative()) return false;
  if (x.height() > max_height()) {
    throw TableTooSmall("element " + x.to_string() + " has height " + std::to_string(x.height()) +
                        " above table bound " + std::to_string(max_height()));
  }
  return members_.contains(x);
}

std::map<Weight, std::size_t> BinfTable::weight_multiplicities() const {
  std::map<Weight, std::size_t> out;
  for (const auto& layer : layers_)
    for (const auto& b : layer) ++out[crystal_.weight(b)];
  return out;
}

std::int64_t default_decompose_bound(const CellElem& x) { return 1 + x.max_abs(); }

namespace {

Decomposition decompose_within(const HBasis& basis, const BinfTable& table, const CellElem& x, std::int64_t r) {
  const int n = basis.rank();
  struct Candidate {
    std::int64_t height;
    std::vector<std::int64_t> c;
    CellElem b;
  };
  std::vector<Candidate> candidates;
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), -r);
  for (;;) {
    CellElem b = x - basis.combine(c);
    if (b.is_nonnegative()) candidates.push_back({b.height(), c, std::move(b)});
    int t = n - 1;
    while (t >= 0 && c[static_cast<std::size_t>(t)] == r) c[static_cast<std::size_t>(t--)] = -r;
    if (t < 0) break;
    ++c[static_cast<std::size_t>(t)];
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.height, a.c) < std::tie(b.height, b.c);
  });
  for (auto& cand : candidates) {
    if (table.contains(cand.b)) return {std::move(cand.c), std::move(cand.b)};
  }
  throw NoDecomposition("no decomposition of " + x.to_string() + " with |c_i| <= " + std::to_string(r));
}

}  // namespace

Decomposition decompose(const HBasis& basis, const BinfTable& table, const CellElem& x,
                        std::optional<std::int64_t> bound) {
  table.crystal().check_elem(x);
  if (bound) {
    if (*bound < 0) throw DomainError("decomposition bound must be nonnegative");
    return decompose_within(basis, table, x, *bound);
  }
  // Widen the box a few times before giving up; a larger box can also
  // reveal a lower candidate that avoids TableTooSmall.
  std::int64_t r = default_decompose_bound(x);
  for (int round = 0;; ++round, r *= 2) {
    try {
      return decompose_within(basis, table, x, r);
    } catch (const NoDecomposition&) {
      if (round == kDecomposeWidenings) throw;
    } catch (const TableTooSmall&) {
      if (round == kDecomposeWidenings) throw;
    }
  }
}

CheckReport shift_equivariance_check(const HBasis& basis, const BinfTable& table, std::size_t samples,
                                     std::uint64_t seed, int coeff_bound, int max_b_height) {
  const CellCrystal& cr = table.crystal();
  std::vector<CellElem> pool;
  for (int h = 0; h <= std::min(max_b_height, table.max_height()); ++h) {
    const auto layer = table.layer(h);
    pool.insert(pool.end(), layer.begin(), layer.end());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> index(1, cr.rank());

  CheckReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const CellElem& b = pool[pick(rng)];
    std::vector<std::int64_t> c(static_cast<std::size_t>(basis.rank()));
    for (auto& v : c) v = coeff(rng);
    const CellElem h = basis.combine(c);
    const int i = index(rng);
    ++report.cases;
    const bool e_ok = *cr.e_tilde(b + h, i) == *cr.e_tilde(b, i) + h;
    const bool f_ok = *cr.f_tilde(b + h, i) == *cr.f_tilde(b, i) + h;
    if (!e_ok || !f_ok) {
      report.fail("b=" + b.to_string() + " h=" + h.to_string() + " i=" + std::to_string(i) +
                  (e_ok ? "" : " (e)") + (f_ok ? "" : " (f)"));
    }
  }
  return report;
}

CoverageReport coverage_check(const HBasis& basis, const BinfTable& table, int radius) {
  const int len = table.crystal().size();
  CoverageReport report;
  std::vector<std::int64_t> coords(static_cast<std::size_t>(len), -radius);
  for (;;) {
    const CellElem x(coords);
    ++report.total;
    try {
      const Decomposition d = decompose(basis, table, x);
      if (basis.combine(d.c) + d.b == x) {
        ++report.decomposed;
      } else {
        report.failures.push_back(x);
      }
    } catch (const NoDecomposition&) {
      report.failures.push_back(x);
    }
    int t = len - 1;
    while (t >= 0 && coords[static_cast<std::size_t>(t)] == radius) coords[static_cast<std::size_t>(t--)] = -radius;
    if (t < 0) break;
    ++coords[static_cast<std::size_t>(t)];
  }
  return report;
}

namespace {

struct Edge {
  CellElem prev;
  OpStep op;  // op applied to prev gives the key
};

OpStep inverse(OpStep op) {
  op.kind = op.kind == OpStep::Kind::E ? OpStep::Kind::F : OpStep::Kind::E;
  return op;
}

}  // namespace

std::optional<std::vector<OpStep>> connected_check(const CellCrystal& crystal, const CellElem& x, int radius) {
  crystal.check_elem(x);
  const CellElem zero = CellElem::zero(crystal.size());
  if (x.max_abs() > radius) return std::nullopt;
  if (x == zero) return std::vector<OpStep>{};

  using Parents = std::unordered_map<CellElem, std::optional<Edge>, CellElemHash>;
  Parents from_x, from_zero;
  from_x.emplace(x, std::nullopt);
  from_zero.emplace(zero, std::nullopt);
  std::deque<CellElem> qx{x}, qz{zero};

  auto chain = [](const Parents& parents, CellElem node) {
    std::vector<OpStep> ops;  // application order from the root to node
    while (const auto& e = parents.at(node)) {
      ops.push_back(e->op);
      node = e->prev;
    }
    std::reverse(ops.begin(), ops.end());
    return ops;
  };

  // Expands one BFS level of `q`; returns the meeting node if any.
  auto expand = [&](std::deque<CellElem>& q, Parents& mine, const Parents& other) -> std::optional<CellElem> {
    for (std::size_t level = q.size(); level > 0; --level) {
      const CellElem cur = std::move(q.front());
      q.pop_front();
      for (int i = 1; i <= crystal.rank(); ++i) {
        if (!crystal.has_index(i)) continue;
        for (auto kind : {OpStep::Kind::E, OpStep::Kind::F}) {
          CellElem next = *(kind == OpStep::Kind::E ? crystal.e_tilde(cur, i) : crystal.f_tilde(cur, i));
          if (next.max_abs() > radius || mine.contains(next)) continue;
          mine.emplace(next, Edge{cur, OpStep{kind, i, 1}});
          if (other.contains(next)) return next;
          q.push_back(std::move(next));
        }
      }
    }
    return std::nullopt;
  };

  while (!qx.empty() && !qz.empty()) {
    auto meet = qx.size() <= qz.size() ? expand(qx, from_x, from_zero) : expand(qz, from_zero, from_x);
    if (!meet) continue;
    std::vector<OpStep> applied = chain(from_x, *meet);
    const std::vector<OpStep> back = chain(from_zero, *meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) applied.push_back(inverse(*it));
    // Operator notation: last applied step is leftmost.
    std::reverse(applied.begin(), applied.end());
    return applied;
  }
  return std::nullopt;
}

}  // namespace cellcrystal
