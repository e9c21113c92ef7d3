#include <doctest.h>

#include <random>
#include <set>

#include "cellcrystal/errors.hpp"
#include "cellcrystal/words.hpp"
#include "support.hpp"

using namespace cellcrystal;
using cellcrystal::testing::word_of;

TEST_CASE("word parsing") {
  const auto g2 = cartan_data("G2");
  CHECK(Word::parse(g2, "121212") == word_of("G2", {1, 2, 1, 2, 1, 2}));
  CHECK(Word::parse(g2, "1,2, 1") == word_of("G2", {1, 2, 1}));
  CHECK(Word::parse(g2, "[2 1]") == word_of("G2", {2, 1}));
  CHECK(Word::parse(g2, "").empty());
  CHECK_THROWS_AS(Word::parse(g2, "1,3"), DomainError);
  CHECK_THROWS_AS(Word::parse(g2, "1;2"), DomainError);
  CHECK(Word::parse(cartan_data("A10"), "10,9").at(1) == 10);
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(word_of("A2", {1, 2, 1})));
  CHECK_FALSE(is_reduced(word_of("A2", {1, 1})));
  CHECK(is_reduced(word_of("G2", {1, 2, 1, 2, 1, 2})));
  CHECK_FALSE(is_reduced(word_of("G2", {1, 2, 1, 2, 1, 2, 1})));
  CHECK_FALSE(is_reduced(word_of("A3", {1, 3, 1})));
  CHECK(is_reduced(word_of("A3", {})));
  CHECK(is_reduced_longest(word_of("A2", {2, 1, 2})));
  CHECK_FALSE(is_reduced_longest(word_of("A2", {2, 1})));
}

TEST_CASE("braid moves") {
  CHECK(apply_braid_move(word_of("A2", {1, 2, 1}), {1, 3}) == word_of("A2", {2, 1, 2}));
  CHECK(apply_braid_move(word_of("A3", {1, 3, 2, 1, 3, 2}), {1, 2}) == word_of("A3", {3, 1, 2, 1, 3, 2}));
  CHECK(apply_braid_move(word_of("G2", {1, 2, 1, 2, 1, 2}), {1, 6}) == word_of("G2", {2, 1, 2, 1, 2, 1}));
  CHECK(apply_braid_move(word_of("B2", {1, 2, 1, 2}), {1, 4}) == word_of("B2", {2, 1, 2, 1}));

  SUBCASE("pattern mismatch") {
    CHECK_THROWS_AS(apply_braid_move(word_of("A2", {1, 2, 1}), {1, 2}), DomainError);  // a_12 != 0
    CHECK_THROWS_AS(apply_braid_move(word_of("A3", {1, 2, 2}), {1, 3}), DomainError);
    CHECK_THROWS_AS(apply_braid_move(word_of("B2", {1, 2, 1, 2}), {1, 3}), DomainError);
  }
  SUBCASE("window out of range") {
    CHECK_THROWS_AS(apply_braid_move(word_of("A2", {1, 2, 1}), {2, 3}), DomainError);
    CHECK_THROWS_AS(apply_braid_move(word_of("A2", {1, 2, 1}), {0, 3}), DomainError);
  }
}

TEST_CASE("braid moves preserve the element and reducedness, and undo themselves") {
  for (const char* type : {"A3", "B3", "C3", "D4", "G2", "A4"}) {
    CAPTURE(type);
    const auto cd = cartan_data(type);
    const Word w0 = longest_word(cd);
    // Walk a few steps through the braid graph.
    std::mt19937_64 rng(7);
    Word cur = w0;
    for (int step = 0; step < 40; ++step) {
      const auto moves = applicable_moves(cur);
      REQUIRE_FALSE(moves.empty());
      const auto m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      const Word next = apply_braid_move(cur, m);
      CHECK(next.element() == cur.element());
      CHECK(is_reduced(next));
      CHECK(apply_braid_move(next, m) == cur);
      cur = next;
    }
  }
}

TEST_CASE("Matsumoto paths") {
  const Word a = word_of("A2", {1, 2, 1});
  const Word b = word_of("A2", {2, 1, 2});
  CHECK(matsumoto_path(a, b) == std::vector<BraidMove>{{1, 3}});
  CHECK(matsumoto_path(a, a).empty());

  const Word from = word_of("A3", {1, 2, 1, 3, 2, 1});
  const Word to = word_of("A3", {3, 2, 3, 1, 2, 3});
  const auto path = matsumoto_path(from, to);
  CHECK(path.size() >= 1);
  Word replay = from;
  for (const auto& m : path) replay = apply_braid_move(replay, m);
  CHECK(replay == to);

  SUBCASE("shortest: no path of smaller length exists") {
    // Every word one move closer than the path length must differ from `to`.
    std::set<std::vector<int>> seen{{from.letters().begin(), from.letters().end()}};
    std::vector<Word> level{from};
    for (std::size_t d = 0; d + 1 < path.size(); ++d) {
      std::vector<Word> next;
      for (const auto& w : level)
        for (const auto& m : applicable_moves(w)) {
          Word v = apply_braid_move(w, m);
          CHECK(v != to);
          if (seen.insert({v.letters().begin(), v.letters().end()}).second) next.push_back(v);
        }
      level = std::move(next);
    }
  }

  CHECK_THROWS_AS(matsumoto_path(word_of("A2", {1, 1}), word_of("A2", {2, 2})), DomainError);
  CHECK_THROWS_AS(matsumoto_path(word_of("A2", {1, 2}), word_of("A2", {2, 1})), DomainError);
}

TEST_CASE("all reduced words") {
  const auto a2 = cartan_data("A2");
  const auto words = all_reduced_words(a2, a2->longest_element());
  CHECK(words == std::vector<Word>{word_of("A2", {1, 2, 1}), word_of("A2", {2, 1, 2})});

  const auto id = all_reduced_words(a2, WeylElement::identity(2));
  REQUIRE(id.size() == 1);
  CHECK(id[0].empty());

  const auto a3 = cartan_data("A3");
  const auto w3 = all_reduced_words(a3, a3->longest_element());
  CHECK(w3.size() == 16);
  for (const auto& w : w3) {
    CHECK(is_reduced_longest(w));
    CHECK(w.element() == a3->longest_element());
  }
  CHECK(all_reduced_words(cartan_data("B2"), cartan_data("B2")->longest_element()).size() == 2);
  CHECK(all_reduced_words(cartan_data("G2"), cartan_data("G2")->longest_element()).size() == 2);
  // 1·2 in A3 has the single reduced word 12.
  CHECK(all_reduced_words(a3, word_of("A3", {1, 2}).element()).size() == 1);
  CHECK(all_reduced_words(a3, word_of("A3", {1, 3}).element()).size() == 2);
}
