#include "cellcrystal/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

Word::Word(CartanPtr cartan, std::vector<int> letters) : cartan_(std::move(cartan)), letters_(std::move(letters)) {
  if (!cartan_) throw DomainError("word without root datum");
  for (int i : letters_) cartan_->check_index(i);
}

Word Word::parse(CartanPtr cartan, std::string_view text) {
  std::vector<int> letters;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      letters.push_back(std::stoi(token));
      token.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
      if (!separated) flush();
    } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']' || ch == '\t') {
      flush();
    } else {
      throw DomainError("unexpected character '" + std::string(1, ch) + "' in word '" + std::string(text) + "'");
    }
  }
  flush();
  return Word(std::move(cartan), std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(letters_[k]);
  }
  return out;
}

Word longest_word(const CartanPtr& cartan) { return Word(cartan, cartan->longest_word()); }

bool is_reduced(const Word& w) {
  // s_{i_k} lengthens v = s_{i_{k+1}}···s_{i_N} iff ⟨h_{i_k}, vρ⟩ > 0.
  const auto& cd = w.cartan();
  Weight mu = cd.rho();
  for (int k = w.size(); k >= 1; --k) {
    const int i = w.at(k);
    if (mu.pairing(i) <= 0) return false;
    mu = cd.reflect(i, mu);
  }
  return true;
}

bool is_reduced_longest(const Word& w) {
  return w.size() == w.cartan().type().positive_root_count() && is_reduced(w);
}

int braid_length(const CartanData& cd, int i, int j) {
  switch (cd.a(i, j) * cd.a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw DomainError("unsupported Cartan product for indices " + std::to_string(i) + "," + std::to_string(j));
}

bool braid_move_applies(const Word& w, BraidMove m) {
  if (m.pos < 1 || m.pos + m.kind - 1 > w.size()) return false;
  const int i = w.at(m.pos);
  const int j = w.at(m.pos + 1);
  if (i == j || braid_length(w.cartan(), i, j) != m.kind) return false;
  for (int t = 0; t < m.kind; ++t) {
    if (w.at(m.pos + t) != (t % 2 == 0 ? i : j)) return false;
  }
  return true;
}

std::vector<BraidMove> applicable_moves(const Word& w) {
  std::vector<BraidMove> moves;
  for (int pos = 1; pos < w.size(); ++pos) {
    for (int kind : {2, 3, 4, 6}) {
      if (braid_move_applies(w, {pos, kind})) moves.push_back({pos, kind});
    }
  }
  return moves;
}

Word apply_braid_move(const Word& w, BraidMove m) {
  if (m.pos < 1 || m.pos + m.kind - 1 > w.size()) {
    throw DomainError("braid window [" + std::to_string(m.pos) + "," + std::to_string(m.pos + m.kind - 1) +
                      "] outside word of length " + std::to_string(w.size()));
  }
  if (!braid_move_applies(w, m)) {
    throw DomainError("no " + std::to_string(m.kind) + "-move at position " + std::to_string(m.pos) + " of " +
                      w.to_string());
  }
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  const int i = w.at(m.pos);
  const int j = w.at(m.pos + 1);
  for (int t = 0; t < m.kind; ++t) letters[static_cast<std::size_t>(m.pos - 1 + t)] = (t % 2 == 0 ? j : i);
  return Word(w.cartan_ptr(), std::move(letters));
}

std::vector<BraidMove> matsumoto_path(const Word& from, const Word& to) {
  if (from.cartan().type() != to.cartan().type()) throw DomainError("words of different types");
  if (!is_reduced(from) || !is_reduced(to)) throw DomainError("matsumoto_path needs reduced words");
  if (from.element() != to.element()) throw DomainError("words represent different Weyl group elements");
  if (from == to) return {};

  std::map<std::vector<int>, std::pair<std::vector<int>, BraidMove>> parent;
  std::queue<Word> frontier;
  const std::vector<int> start(from.letters().begin(), from.letters().end());
  const std::vector<int> goal(to.letters().begin(), to.letters().end());
  parent.emplace(start, std::pair{start, BraidMove{}});
  frontier.push(from);
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop();
    for (const auto& m : applicable_moves(cur)) {
      Word next = apply_braid_move(cur, m);
      std::vector<int> key(next.letters().begin(), next.letters().end());
      if (parent.contains(key)) continue;
      parent.emplace(key, std::pair{std::vector<int>(cur.letters().begin(), cur.letters().end()), m});
      if (key == goal) {
        std::vector<BraidMove> path;
        for (auto k = goal; k != start;) {
          const auto& [prev, move] = parent.at(k);
          path.push_back(move);
          k = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      frontier.push(std::move(next));
    }
  }
  // Unreachable by Matsumoto's theorem.
  throw ModelViolation("no braid path between " + from.to_string() + " and " + to.to_string());
}

namespace {

using WordSet = std::vector<std::vector<int>>;

const WordSet& reduced_words_rec(const CartanData& cd, const WeylElement& w, std::map<IntMatrix, WordSet>& memo) {
  if (auto it = memo.find(w.matrix()); it != memo.end()) return it->second;
  WordSet out;
  const Weight mu = w.apply(cd.rho());
  bool any = false;
  for (int i = 1; i <= cd.rank(); ++i) {
    if (mu.pairing(i) >= 0) continue;
    any = true;
    const WeylElement rest = cd.reflection(i) * w;
    for (const auto& tail : reduced_words_rec(cd, rest, memo)) {
      std::vector<int> word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  if (!any) out.push_back({});
  return memo.emplace(w.matrix(), std::move(out)).first->second;
}

}  // namespace

std::vector<Word> all_reduced_words(const CartanPtr& cartan, const WeylElement& element) {
  std::map<IntMatrix, WordSet> memo;
  WordSet words = reduced_words_rec(*cartan, element, memo);
  std::sort(words.begin(), words.end());
  std::vector<Word> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(cartan, std::move(w));
  return out;
}

}  // namespace cellcrystal
