#include <doctest.h>

#include "toric/arrangement.hpp"
#include "toric/layers.hpp"
#include "toric/normal_forms.hpp"

using namespace toric;

namespace {

ToricArrangement make(int rank, std::vector<std::pair<std::vector<long>, Rat>> hyps) {
  ToricArrangement arr;
  arr.rank = rank;
  for (auto& [coords, offset] : hyps) {
    IntVec chi;
    for (long c : coords) chi.emplace_back(c);
    arr.hypersurfaces.push_back({std::move(chi), offset});
  }
  return arr;
}

// Example 2.2.5 coordinates
ToricArrangement fig1() {
  return make(2, {{{1, 0}, Rat(0)}, {{1, -1}, Rat(0)}, {{1, 1}, Rat(0)}});
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(fig1()).empty());
  SUBCASE("zero character") {
    auto bad = make(2, {{{0, 0}, Rat(0)}});
    auto errors = validate(bad);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("zero character") != std::string::npos);
  }
  SUBCASE("dimension mismatch") {
    auto bad = make(3, {{{1, 0}, Rat(0)}});
    CHECK(validate(bad).size() == 1);
  }
  SUBCASE("duplicates") {
    auto bad = make(2, {{{1, 0}, Rat(0)}, {{1, 0}, Rat(0)}});
    auto errors = validate(bad);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("duplicate") != std::string::npos);
  }
  SUBCASE("same character, different offsets is fine") {
    auto ok = make(2, {{{1, 0}, Rat(0)}, {{1, 0}, Rat(1, 2)}});
    CHECK(validate(ok).empty());
  }
  SUBCASE("offset out of range") {
    auto bad = make(2, {{{1, 0}, Rat(3, 2)}});
    CHECK(validate(bad).size() == 1);
  }
}

TEST_CASE("braid") {
  ToricArrangement b3 = braid(3);
  CHECK(b3.rank == 3);
  CHECK(b3.size() == 3);
  CHECK(braid(4).size() == 6);
  ToricArrangement b2 = braid(2);
  CHECK(b2.size() == 1);
  CHECK(b2.character(0) == IntVec{Int(1), Int(-1)});
  CHECK_THROWS_AS(braid(1), std::invalid_argument);
  // lexicographic (i, j) order
  CHECK(b3.character(0) == IntVec{Int(1), Int(-1), Int(0)});
  CHECK(b3.character(1) == IntVec{Int(1), Int(0), Int(-1)});
  CHECK(b3.character(2) == IntVec{Int(0), Int(1), Int(-1)});
  SUBCASE("characters span rank n-1") {
    for (int n = 2; n <= 6; ++n) {
      ToricArrangement b = braid(n);
      CHECK(b.character_matrix().rank() == n - 1);
      Int index = 1;
      for (const Int& d : snf(b.character_matrix()).divisors())
        if (d != 0) index *= d;
      CHECK(index == 1);  // braid sublattices are saturated
    }
  }
}

TEST_CASE("predicates") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(is_primitive(braid(n)));
    CHECK(is_central(braid(n)));
    CHECK_FALSE(is_essential(braid(n)));
  }
  CHECK(is_primitive(fig1()));
  CHECK(is_central(fig1()));
  CHECK(is_essential(fig1()));
  auto imprimitive = make(2, {{{2, 0}, Rat(0)}});
  CHECK_FALSE(is_primitive(imprimitive));
  auto noncentral = make(2, {{{1, 0}, Rat(1, 2)}});
  CHECK_FALSE(is_central(noncentral));
}

TEST_CASE("essentialize") {
  SUBCASE("braid(3) drops to rank 2 with the partition-lattice poset") {
    Essentialization e = essentialize(braid(3));
    CHECK(e.arrangement.rank == 2);
    CHECK(e.arrangement.size() == 3);
    CHECK(is_essential(e.arrangement));
    CHECK(is_primitive(e.arrangement));
    auto iso = posets::isomorphic(to_finite_poset(layer_poset(e.arrangement)),
                                  posets::partition_lattice(3));
    CHECK(iso.has_value());
  }
  SUBCASE("already essential input stays poset-isomorphic") {
    Essentialization e = essentialize(fig1());
    CHECK(e.arrangement.rank == 2);
    auto iso = posets::isomorphic(to_finite_poset(layer_poset(e.arrangement)),
                                  to_finite_poset(layer_poset(fig1())));
    CHECK(iso.has_value());
  }
  SUBCASE("braid(4): rank 3, 6 hypersurfaces, partition lattice of 4") {
    Essentialization e = essentialize(braid(4));
    CHECK(e.arrangement.rank == 3);
    CHECK(e.arrangement.size() == 6);
    posets::FinitePoset pi4 = posets::partition_lattice(4);
    CHECK(pi4.size == 15);
    CHECK(posets::isomorphic(to_finite_poset(layer_poset(e.arrangement)), pi4).has_value());
  }
  SUBCASE("hypersurface count preserved, primitivity preserved") {
    for (int n = 3; n <= 5; ++n) {
      Essentialization e = essentialize(braid(n));
      CHECK(e.arrangement.size() == braid(n).size());
      CHECK(is_primitive(e.arrangement) == is_primitive(braid(n)));
    }
  }
  SUBCASE("central input required") {
    auto noncentral = make(2, {{{1, 0}, Rat(1, 2)}});
    CHECK_THROWS_AS(essentialize(noncentral), std::invalid_argument);
  }
  SUBCASE("basis rows express the original characters") {
    ToricArrangement b4 = braid(4);
    Essentialization e = essentialize(b4);
    for (int i = 0; i < b4.size(); ++i) {
      IntVec rebuilt(b4.rank, Int(0));
      for (int k = 0; k < e.basis.rows(); ++k)
        for (int j = 0; j < b4.rank; ++j)
          rebuilt[j] += e.arrangement.character(i)[k] * e.basis.at(k, j);
      CHECK(rebuilt == b4.character(i));
    }
  }
}
