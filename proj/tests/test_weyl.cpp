#include <doctest.h>

#include <algorithm>
#include <map>

#include "kv/errors.hpp"
#include "kv/rootdata.hpp"
#include "kv/weyl.hpp"
#include "oracles.hpp"

using namespace kv;

TEST_SUITE("weyl") {
  TEST_CASE("group orders and lengths") {
    CHECK(WeylGroup(build_root_datum("A1")).size() == 2);
    WeylGroup a2(build_root_datum("A2"));
    REQUIRE(a2.size() == 6);
    std::vector<std::size_t> lengths;
    for (const auto& w : a2.elements()) lengths.push_back(w.length());
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<std::size_t>{0, 1, 1, 2, 2, 3});
    CHECK(WeylGroup(build_root_datum("B2")).size() == 8);
    for (const char* t : {"A3", "B3", "C3", "G2", "D4", "A1xA2", "F4"}) {
      RootDatum rd = build_root_datum(t);
      WeylGroup g(rd);
      CAPTURE(t);
      CHECK(g.size() == rd.weyl_order());
      CHECK(g.longest().length() == rd.system().num_positive());
    }
  }

  TEST_CASE("words are reduced and match their action") {
    RootDatum rd = build_root_datum("B3");
    WeylGroup g(rd);
    for (const auto& w : g.elements()) {
      CHECK(word_action(rd.system(), w.word) == w.action);
      CHECK(inversion_count(rd.system(), w.action) == w.length());
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      auto inv = g.inverse_index(k);
      CHECK(g[k].action * g[inv].action == IntMatrix::identity(rd.rank()));
    }
  }

  TEST_CASE("element from a non-reduced word") {
    RootDatum rd = build_root_datum("A2");
    std::vector<int> word{0, 1, 1, 0, 1};
    auto w = element_from_word(rd.system(), word);
    CHECK(w.length() == 1);
    CHECK(w.word == std::vector<int>{1});
    CHECK(w.word_string() == "s2");
    CHECK(element_from_word(rd.system(), std::vector<int>{}).word_string() == "e");
    CHECK_THROWS_AS(element_from_word(rd.system(), std::vector<int>{2}), InputError);
  }

  TEST_CASE("coxeter elements") {
    auto count = [](const char* t) { return coxeter_elements(build_root_datum(t).system()).size(); };
    CHECK(count("A1") == 1);
    CHECK(count("A2") == 2);
    CHECK(count("A1xA1") == 1);
    CHECK(count("A3") == 4);
    CHECK(count("D4") == 8);
    auto a2 = coxeter_elements(build_root_datum("A2").system());
    CHECK(a2[0].word_string() == "s1 s2");
    CHECK(a2[1].word_string() == "s2 s1");
    for (const auto& c : coxeter_elements(build_root_datum("B3").system())) {
      CHECK(c.length() == 3);
      CHECK(c.support() == full_mask(3));
    }
  }

  TEST_CASE("minimal double coset representatives against the coset oracle") {
    WeylGroup a2(build_root_datum("A2"));
    CHECK(min_double_coset_reps(a2, 0b11, 0b11).size() == 1);
    CHECK(min_double_coset_reps(a2, 0b11, 0b11)[0].length() == 0);
    CHECK(min_double_coset_reps(a2, 0, 0).size() == 6);
    CHECK(min_double_coset_reps(a2, 0b01, 0b01).size() == 2);
    for (const char* t : {"A2", "B2", "G2", "A3", "B3"}) {
      RootDatum rd = build_root_datum(t);
      WeylGroup g(rd);
      const RootMask all = full_mask(rd.rank());
      for (RootMask j1 = 0; j1 <= all; ++j1)
        for (RootMask j2 = 0; j2 <= all; ++j2) {
          auto expected = oracle::double_coset_reps(g, j1, j2);
          std::set<std::size_t> got;
          for (std::size_t k = 0; k < g.size(); ++k)
            if (is_min_double_coset_rep(g, k, j1, j2)) got.insert(k);
          CAPTURE(t);
          CAPTURE(j1);
          CAPTURE(j2);
          CHECK(got == expected);
        }
    }
  }

  TEST_CASE("parabolic orders") {
    WeylGroup b3(build_root_datum("B3"));
    CHECK(parabolic_order(b3, 0) == 1);
    CHECK(parabolic_order(b3, 0b011) == 6);
    CHECK(parabolic_order(b3, 0b110) == 8);
    CHECK(parabolic_order(b3, 0b101) == 4);
    CHECK(parabolic_order(b3, 0b111) == 48);
  }

  TEST_CASE("fixed space and order") {
    RootDatum a1 = build_root_datum("A1");
    CHECK(fixed_space_dim(element_from_word(a1.system(), std::vector<int>{})) == 1);
    CHECK(fixed_space_dim(element_from_word(a1.system(), std::vector<int>{0})) == 0);
    RootDatum a2 = build_root_datum("A2");
    auto cox = element_from_word(a2.system(), std::vector<int>{0, 1});
    CHECK(fixed_space_dim(cox) == 0);
    CHECK(element_order(cox) == 3);
    CHECK(element_order(element_from_word(a2.system(), std::vector<int>{0})) == 2);
    // Coxeter numbers.
    for (auto [t, h] : std::vector<std::pair<const char*, Int>>{{"B3", 6}, {"G2", 6}, {"D4", 6}, {"F4", 12}}) {
      RootDatum rd = build_root_datum(t);
      std::vector<int> word;
      for (std::size_t i = 0; i < rd.rank(); ++i) word.push_back(static_cast<int>(i));
      CAPTURE(t);
      CHECK(element_order(element_from_word(rd.system(), word)) == h);
    }
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(WeylGroup(build_root_datum("F4"), 1000), SizeGuardError);
  }
}
