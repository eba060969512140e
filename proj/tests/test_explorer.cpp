#include "doctest.h"

#include <cstdlib>
#include <set>

#include "hourglass/explorer.hpp"
#include "hourglass/fraser.hpp"
#include "hourglass/trips.hpp"

using namespace hourglass;

namespace {

std::size_t catalan(int k) {
  std::vector<std::size_t> c(k + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[k];
}

}  // namespace

TEST_CASE("class sizes of superstandard graphs") {
  CHECK(move_class(fraser_map(RectTableau::column_superstandard(5, 2))).size() == 1);
  for (int r = 3; r <= 6; ++r) {
    const auto cls = move_class(fraser_map(RectTableau::superstandard(r, 2)));
    CHECK(cls.complete);
    CHECK(cls.size() == catalan(r - 2));
    CHECK(cls.trips == prom_all(RectTableau::superstandard(r, 2)));
  }
}

TEST_CASE("class members and edges are consistent") {
  const auto t = RectTableau::superstandard(6, 2);
  const auto cls = move_class(fraser_map(t));
  CHECK(cls.forms[0] == canonical_form(fraser_map(t)));
  std::set<std::string> distinct(cls.forms.begin(), cls.forms.end());
  CHECK(distinct.size() == cls.size());
  for (std::size_t k = 0; k < cls.size(); ++k) {
    CHECK(canonical_form(cls.members[k]) == cls.forms[k]);
    CHECK(cls.index_of(cls.forms[k]) == static_cast<int>(k));
    CHECK(recover_tableau(cls.members[k]) == t);
  }
  for (auto [i, j] : cls.edges) CHECK(i < j);
  CHECK(cls.index_of("nonsense") == -1);
}

TEST_CASE("square moves are involutions") {
  const auto cls = move_class(fraser_map(RectTableau::superstandard(5, 2)));
  for (const auto& g : cls.members) {
    const auto form = canonical_form(g);
    for (const auto& f : faces(g)) {
      if (!square_move_applies(g, f)) continue;
      const auto h = apply_square_move(g, f);
      CHECK(validate(h).ok);
      bool back = false;
      for (const auto& f2 : faces(h))
        if (square_move_applies(h, f2) && canonical_form(apply_square_move(h, f2)) == form) back = true;
      CHECK(back);
    }
  }
}

TEST_CASE("exploration cap") {
  setenv("HOURGLASS_MAX_CLASS", "3", 1);
  CHECK(max_class_size() == 3);
  bool thrown = false;
  try {
    move_class(fraser_map(RectTableau::superstandard(6, 2)));
  } catch (const BoundedExplorationError& e) {
    thrown = true;
    CHECK_FALSE(e.partial().complete);
    CHECK(e.partial().size() >= 1);
  }
  CHECK(thrown);
  setenv("HOURGLASS_MAX_CLASS", "junk", 1);
  CHECK(max_class_size() == 100000);
  unsetenv("HOURGLASS_MAX_CLASS");
  CHECK(max_class_size() == 100000);
}

TEST_CASE("Tamari correspondence") {
  for (int r = 3; r <= 6; ++r) {
    const auto rep = tamari_check(r);
    CHECK(rep.ok());
    CHECK(rep.class_size == catalan(r - 2));
    // Each triangulation of an r-gon has r - 3 flips, each edge counted twice.
    CHECK(rep.flip_edges * 2 == catalan(r - 2) * static_cast<std::size_t>(r - 3));
  }
  CHECK_THROWS_AS(tamari_check(2), std::domain_error);
}

TEST_CASE("flip detection") {
  const auto p = plain_polygon(5);
  const auto all = triangulate_all(p);
  REQUIRE(all.size() == 5);
  int flips = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) flips += differ_by_flip(all[a], all[b]);
  CHECK(flips == 5);
  CHECK_FALSE(differ_by_flip(all[0], all[0]));
}

TEST_CASE("class statistics") {
  for (int r = 1; r <= 4; ++r) {
    const auto st = class_statistics(r);
    CHECK(st.ok());
    CHECK(st.classes == catalan(r));
  }
  CHECK(class_statistics(3).classes == 5);
  const auto st4 = class_statistics(4);
  std::size_t sum = 0;
  for (auto k : st4.class_sizes) sum += k;
  CHECK(st4.graphs == sum);
  CHECK_THROWS_AS(class_statistics(0), std::domain_error);
  CHECK_THROWS_AS(class_statistics(8), std::domain_error);
}
