#include "cellcrystal/braid.hpp"

#include <algorithm>

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

namespace {

constexpr std::int64_t pos(std::int64_t v) { return v > 0 ? v : 0; }

}  // namespace

BraidWindow BraidWindow::at(const Word& w, BraidMove m) {
  if (!braid_move_applies(w, m)) {
    throw DomainError("no " + std::to_string(m.kind) + "-move at position " + std::to_string(m.pos) + " of " +
                      w.to_string());
  }
  BraidWindow win;
  win.move = m;
  win.first = w.at(m.pos);
  win.second = w.at(m.pos + 1);
  win.c1 = -w.cartan().a(win.first, win.second);
  win.c2 = -w.cartan().a(win.second, win.first);
  return win;
}

namespace letter_maps {

std::array<std::int64_t, 2> phi0(std::int64_t x, std::int64_t y) { return {y, x}; }

std::array<std::int64_t, 3> phi1(std::int64_t x, std::int64_t y, std::int64_t z) {
  const std::int64_t t = pos(-x + y - z);
  return {z + t, x + z, y - z - t};
}

std::array<std::int64_t, 4> phi2(std::int64_t c1, std::int64_t c2, std::int64_t x, std::int64_t y, std::int64_t z,
                                 std::int64_t w) {
  const std::int64_t inner = pos(x - c1 * y + z);
  const std::int64_t p = pos(-c2 * x + y - w + c2 * inner);
  const std::int64_t q = pos(-x + z - c1 * w + inner);
  return {w + p, x + c1 * w + q, y - p, z - c1 * w - q};
}

std::array<std::int64_t, 6> phi3(std::int64_t c1, std::int64_t c2, std::int64_t x, std::int64_t y, std::int64_t z,
                                 std::int64_t u, std::int64_t v, std::int64_t w) {
  const std::int64_t A = -x + c1 * y - z;
  const std::int64_t B = -y + c2 * z - u;
  const std::int64_t C = -z + c1 * u - v;
  const std::int64_t D = -u + c2 * v - w;
  const std::int64_t Ap = pos(A);
  const std::int64_t X = w + pos(D + pos(c2 * C + pos(2 * B + c2 * Ap)));
  const std::int64_t Y = x + c1 * w + pos(c1 * D + pos(3 * C + pos(2 * c1 * B + 2 * Ap)));
  const std::int64_t V = u - w - pos(2 * D + pos(2 * c2 * C + pos(3 * B + c2 * Ap)));
  const std::int64_t W = v - c1 * w - pos(c1 * D + pos(2 * C + pos(c1 * B + Ap)));
  const std::int64_t Z = y + u + w - X - V;
  const std::int64_t U = x + z + v - Y - W;
  return {X, Y, Z, U, V, W};
}

}  // namespace letter_maps

BraidImage braid_isomorphism(const Word& w, const CellElem& x, BraidMove m) {
  const BraidWindow win = BraidWindow::at(w, m);
  if (x.size() != w.size()) throw DomainError("element length does not match word");

  // f-counts -> letters, apply, letters -> f-counts.
  std::array<std::int64_t, 6> in{};
  for (int t = 0; t < m.kind; ++t) in[static_cast<std::size_t>(t)] = -x.at(m.pos + t);

  std::array<std::int64_t, 6> out{};
  switch (m.kind) {
    case 2: {
      const auto r = letter_maps::phi0(in[0], in[1]);
      std::copy(r.begin(), r.end(), out.begin());
      break;
    }
    case 3: {
      const auto r = letter_maps::phi1(in[0], in[1], in[2]);
      std::copy(r.begin(), r.end(), out.begin());
      break;
    }
    case 4: {
      const auto r = letter_maps::phi2(win.c1, win.c2, in[0], in[1], in[2], in[3]);
      std::copy(r.begin(), r.end(), out.begin());
      break;
    }
    case 6:
      out = letter_maps::phi3(win.c1, win.c2, in[0], in[1], in[2], in[3], in[4], in[5]);
      break;
    default:
      throw DomainError("unsupported braid move kind " + std::to_string(m.kind));
  }

  CellElem y = x;
  for (int t = 0; t < m.kind; ++t) y.at(m.pos + t) = -out[static_cast<std::size_t>(t)];
  return {apply_braid_move(w, m), std::move(y)};
}

BraidImage transform(const Word& w, const CellElem& x, std::span<const BraidMove> path) {
  BraidImage cur{w, x};
  for (const auto& m : path) cur = braid_isomorphism(cur.word, cur.x, m);
  return cur;
}

std::vector<BraidMove> reverse_path(std::span<const BraidMove> path) {
  return std::vector<BraidMove>(path.rbegin(), path.rend());
}

}  // namespace cellcrystal
