#include <doctest.h>

#include <set>

#include "nilo/orbits.hpp"

using nilo::ChevalleyAlgebra;
using nilo::OrbitRecord;
using nilo::Rational;
using nilo::Series;
using nilo::SimpleType;
using nilo::VecQ;
using nilo::WeightedDiagram;

namespace {

Eigen::VectorXi mk(std::initializer_list<int> v) {
  Eigen::VectorXi x(static_cast<int>(v.size()));
  int i = 0;
  for (int c : v) x(i++) = c;
  return x;
}

constexpr std::uint64_t kSeed = 1;
constexpr int kTrials = 8;

std::set<std::string> diagram_texts(const std::vector<OrbitRecord>& v) {
  std::set<std::string> out;
  for (const auto& r : v) out.insert(r.diagram.to_text());
  return out;
}

}  // namespace

TEST_CASE("diagram text round trip") {
  WeightedDiagram d{{Series::F, 4}, mk({2, 0, 2, 0})};
  CHECK(d.to_text() == "2,0,2,0");
  CHECK(WeightedDiagram::parse_marks("2,0,2,0", 4) == d.marks);
  CHECK(WeightedDiagram::parse_marks("0", 1) == mk({0}));
  CHECK(!WeightedDiagram::parse_marks("3,0,0,0", 4));
  CHECK(!WeightedDiagram::parse_marks("2,0,0", 4));
  CHECK(!WeightedDiagram::parse_marks("2,0,0,0,0", 4));
  CHECK(!WeightedDiagram::parse_marks("2,,0,0", 4));
  CHECK(!WeightedDiagram::parse_marks("2,0,0,", 4));
  CHECK(!WeightedDiagram::parse_marks("-1,0,0,0", 4));
  CHECK(!WeightedDiagram::parse_marks("", 4));
  CHECK(!WeightedDiagram::parse_marks("a,b", 2));
}

TEST_CASE("rank one and two valid diagrams") {
  ChevalleyAlgebra a1({Series::A, 1});
  CHECK(diagram_texts(enumerate_orbits(a1, kSeed, kTrials)) == std::set<std::string>{"0", "2"});
  CHECK(!nilo::is_characteristic(a1, mk({1}), kSeed, kTrials));

  ChevalleyAlgebra a2({Series::A, 2});
  CHECK(diagram_texts(enumerate_orbits(a2, kSeed, kTrials)) ==
        std::set<std::string>{"0,0", "1,1", "2,2"});
  // Marked element lies outside [e, g(-2)] for every e in g(2).
  CHECK(!nilo::is_characteristic(a2, mk({2, 1}), kSeed, kTrials));
  CHECK(nilo::is_characteristic(a2, mk({0, 0}), kSeed, kTrials));
}

TEST_CASE("orbit counts across the small types") {
  auto count = [](SimpleType t) {
    ChevalleyAlgebra g(t);
    return enumerate_orbits(g, kSeed, kTrials).size();
  };
  CHECK(count({Series::A, 3}) == 5);
  CHECK(count({Series::A, 4}) == 7);
  CHECK(count({Series::B, 2}) == 4);
  CHECK(count({Series::B, 3}) == 7);
  CHECK(count({Series::B, 4}) == 13);
  CHECK(count({Series::C, 3}) == 8);
  CHECK(count({Series::C, 4}) == 14);
  CHECK(count({Series::D, 4}) == 12);
  CHECK(count({Series::G, 2}) == 5);
  CHECK(count({Series::F, 4}) == 16);
}

TEST_CASE("the five orbits of the smallest exceptional algebra") {
  ChevalleyAlgebra g2({Series::G, 2});
  CHECK(diagram_texts(enumerate_orbits(g2, kSeed, kTrials)) ==
        std::set<std::string>{"0,0", "0,1", "1,0", "0,2", "2,2"});
}

TEST_CASE("witnesses are genuine sl2 triples") {
  ChevalleyAlgebra g({Series::B, 3});
  for (const auto& rec : enumerate_orbits(g, kSeed, kTrials)) {
    const WeightedDiagram& d = rec.diagram;
    CAPTURE(d.to_text());
    auto w = find_characteristic_witness(g, d.marks, kSeed, kTrials);
    REQUIRE(w.has_value());
    CHECK(w->dense_rank_certified);
    CHECK(g.bracket(w->e, w->f) == w->h);
    CHECK(g.bracket(w->h, w->e) == (w->e * Rational(2)).eval());
    CHECK(g.bracket(w->h, w->f) == (w->f * Rational(-2)).eval());
    CHECK(w->trials_used <= 1);  // valid diagrams should succeed immediately
  }
}

TEST_CASE("halving and divisibility") {
  ChevalleyAlgebra a2({Series::A, 2});
  WeightedDiagram reg{{Series::A, 2}, mk({2, 2})};
  CHECK(half_diagram(reg).marks == mk({1, 1}));
  CHECK_THROWS(nilo::half_diagram({{Series::A, 2}, mk({2, 1})}));
  CHECK(nilo::is_divisible(a2, mk({2, 2}), kSeed, kTrials));
  CHECK(!nilo::is_divisible(a2, mk({1, 1}), kSeed, kTrials));

  // sl2: half of the regular diagram is not a diagram.
  ChevalleyAlgebra a1({Series::A, 1});
  CHECK(!nilo::is_divisible(a1, mk({2}), kSeed, kTrials));

  // The zero orbit has no sl2 triple, so it is left out by convention even
  // though half of the zero diagram is the zero diagram.
  CHECK(!nilo::is_divisible(a2, mk({0, 0}), kSeed, kTrials));
  CHECK(nilo::half_diagram({{Series::A, 2}, mk({0, 0})}).marks == mk({0, 0}));
}

TEST_CASE("friendly pairs in the small exceptional types") {
  ChevalleyAlgebra g2({Series::G, 2});
  auto pairs2 = friendly_pairs(g2, kSeed, kTrials);
  REQUIRE(pairs2.size() == 1);
  CHECK(pairs2[0].upper.diagram.marks == mk({0, 2}));
  CHECK(pairs2[0].lower.diagram.marks == mk({0, 1}));
  CHECK(!pairs2[0].very_friendly.has_value());
  CHECK(!pairs2[0].a2_pair.has_value());
  CHECK(!pairs2[0].lower_reachable.has_value());

  ChevalleyAlgebra f4({Series::F, 4});
  auto pairs4 = friendly_pairs(f4, kSeed, kTrials);
  REQUIRE(pairs4.size() == 4);
  std::set<std::string> uppers;
  for (const auto& p : pairs4) {
    uppers.insert(p.upper.diagram.to_text());
    CHECK(p.upper.even);
    CHECK(nilo::half_diagram(p.upper.diagram).marks == p.lower.diagram.marks);
  }
  CHECK(uppers == std::set<std::string>{"2,0,0,0", "0,0,0,2", "0,2,0,0", "0,2,0,2"});
}

TEST_CASE("index and height ratios on friendly pairs") {
  for (SimpleType t : {SimpleType{Series::G, 2}, SimpleType{Series::F, 4},
                       SimpleType{Series::B, 4}, SimpleType{Series::C, 4},
                       SimpleType{Series::A, 5}}) {
    ChevalleyAlgebra g(t);
    CAPTURE(t.to_string());
    for (const auto& p : friendly_pairs(g, kSeed, kTrials)) {
      CAPTURE(p.upper.diagram.to_text());
      CHECK(p.upper.dynkin_index == Rational(4) * p.lower.dynkin_index);
      CHECK(p.upper.height == 2 * p.lower.height);
    }
  }
}

TEST_CASE("dynkin index values and trace-form oracle") {
  ChevalleyAlgebra a2({Series::A, 2});
  CHECK(nilo::dynkin_index(a2.roots(), mk({1, 1})) == Rational(1));
  CHECK(nilo::dynkin_index(a2.roots(), mk({2, 2})) == Rational(4));
  ChevalleyAlgebra g2({Series::G, 2});
  CHECK(nilo::dynkin_index(g2.roots(), mk({0, 1})) == Rational(1));
  ChevalleyAlgebra f4({Series::F, 4});
  CHECK(nilo::dynkin_index(f4.roots(), mk({1, 0, 0, 0})) == Rational(1));

  // Independent oracle: 2 h_vee (h, h) is the trace form of ad h, the sum of
  // squared root degrees.
  for (SimpleType t : {SimpleType{Series::A, 3}, SimpleType{Series::B, 3},
                       SimpleType{Series::C, 3}, SimpleType{Series::G, 2},
                       SimpleType{Series::F, 4}, SimpleType{Series::D, 4}}) {
    ChevalleyAlgebra g(t);
    const auto& rs = g.roots();
    long hvee = 1 + rs.coroot(rs.highest_root_index()).sum();
    for (const auto& rec : enumerate_orbits(g, kSeed, kTrials)) {
      CAPTURE(t.to_string());
      CAPTURE(rec.diagram.to_text());
      long sumsq = 0;
      for (int r = 0; r < rs.num_roots(); ++r) {
        long deg = rec.diagram.marks.dot(rs.root(r));
        sumsq += deg * deg;
      }
      CHECK(Rational(sumsq, 4 * hvee) == rec.dynkin_index);
      CHECK(rec.dynkin_index.is_integer());  // integral on valid diagrams
    }
  }
}

TEST_CASE("orbit dimensions and heights") {
  ChevalleyAlgebra a2({Series::A, 2});
  CHECK(nilo::orbit_dim(a2.roots(), mk({0, 0})) == 0);
  CHECK(nilo::orbit_dim(a2.roots(), mk({1, 1})) == 4);
  CHECK(nilo::orbit_dim(a2.roots(), mk({2, 2})) == 6);
  CHECK(nilo::diagram_height(a2.roots(), mk({1, 1})) == 2);
  CHECK(nilo::diagram_height(a2.roots(), mk({2, 2})) == 4);

  ChevalleyAlgebra g2({Series::G, 2});
  CHECK(nilo::orbit_dim(g2.roots(), mk({0, 2})) == 10);
  CHECK(nilo::diagram_height(g2.roots(), mk({2, 2})) == 10);

  ChevalleyAlgebra f4({Series::F, 4});
  CHECK(nilo::orbit_dim(f4.roots(), mk({0, 2, 0, 2})) == 44);
  CHECK(nilo::diagram_height(f4.roots(), mk({0, 2, 0, 2})) == 10);
  CHECK(nilo::diagram_height(f4.roots(), mk({2, 2, 2, 2})) == 22);
}

TEST_CASE("graded centralizer dimensions") {
  // Regular sl3: g^e(0) = 0, g^e(2) = 1, g^e(4) = 1, total = rank.
  ChevalleyAlgebra a2({Series::A, 2});
  auto ce = nilo::graded_centralizer_dims(a2.roots(), mk({2, 2}));
  CHECK(ce == std::map<int, int>{{0, 0}, {1, 0}, {2, 1}, {3, 0}, {4, 1}});

  ChevalleyAlgebra g2({Series::G, 2});
  auto zero = nilo::graded_centralizer_dims(g2.roots(), mk({0, 0}));
  CHECK(zero == std::map<int, int>{{0, 14}});

  // Sum over degrees is dim g(0) + dim g(1); values are nonnegative.
  for (SimpleType t : {SimpleType{Series::B, 3}, SimpleType{Series::G, 2},
                       SimpleType{Series::F, 4}, SimpleType{Series::A, 4}}) {
    ChevalleyAlgebra g(t);
    for (const auto& rec : enumerate_orbits(g, kSeed, kTrials)) {
      CAPTURE(t.to_string());
      CAPTURE(rec.diagram.to_text());
      nilo::Grading grading(g.roots(), rec.diagram.marks);
      auto dims = nilo::graded_centralizer_dims(g.roots(), rec.diagram.marks);
      int total = 0;
      for (auto [deg, dim] : dims) {
        CHECK(dim >= 0);
        total += dim;
      }
      CHECK(total == grading.dim(0) + grading.dim(1));
    }
  }
}

TEST_CASE("centralizer dimension identities on friendly pairs") {
  for (SimpleType t : {SimpleType{Series::G, 2}, SimpleType{Series::F, 4},
                       SimpleType{Series::B, 4}, SimpleType{Series::C, 4},
                       SimpleType{Series::A, 5}, SimpleType{Series::D, 4}}) {
    ChevalleyAlgebra g(t);
    CAPTURE(t.to_string());
    for (const auto& p : friendly_pairs(g, kSeed, kTrials)) {
      CAPTURE(p.upper.diagram.to_text());
      auto up = nilo::graded_centralizer_dims(g.roots(), p.upper.diagram.marks);
      auto low = nilo::graded_centralizer_dims(g.roots(), p.lower.diagram.marks);
      auto at = [](const std::map<int, int>& m, int i) {
        auto it = m.find(i);
        return it == m.end() ? 0 : it->second;
      };

      // Centralizer of the half element decomposes degree by degree against
      // the doubled grading.
      int max_low = low.empty() ? 0 : low.rbegin()->first;
      for (int i = 0; i <= max_low + 1; ++i)
        CHECK(at(up, 2 * i) + at(up, 2 * i + 2) == at(low, i));

      // Total-dimension form: dim g^{e<2>} = dim g^e + dim g^e_nil.
      nilo::Grading gu(g.roots(), p.upper.diagram.marks);
      nilo::Grading gl(g.roots(), p.lower.diagram.marks);
      int dim_ge = gu.dim(0) + gu.dim(1);
      int dim_ge_nil = gu.dim(1) + gu.dim(2);
      CHECK(gl.dim(0) + gl.dim(1) == dim_ge + dim_ge_nil);
      CHECK(dim_ge_nil % 2 == 0);

      // Paired degrees 4j-2, 4j have even combined centralizer dimension.
      int max_up = up.empty() ? 0 : up.rbegin()->first;
      for (int j = 1; 4 * j - 2 <= max_up; ++j)
        CHECK((at(up, 4 * j - 2) + at(up, 4 * j)) % 2 == 0);

      // Index of a divisible diagram is divisible by four.
      CHECK(p.upper.dynkin_index.is_integer());
      CHECK(p.upper.dynkin_index.to_long() % 4 == 0);
    }
  }
}

TEST_CASE("fork marks of type D diagrams have even sum") {
  for (int n : {4, 5}) {
    ChevalleyAlgebra g({Series::D, n});
    for (const auto& rec : enumerate_orbits(g, kSeed, kTrials)) {
      CAPTURE(rec.diagram.to_text());
      CHECK((rec.diagram.marks(n - 2) + rec.diagram.marks(n - 1)) % 2 == 0);
    }
  }
}

TEST_CASE("even valid diagrams have weakly decreasing even graded dims") {
  for (SimpleType t : {SimpleType{Series::B, 4}, SimpleType{Series::F, 4},
                       SimpleType{Series::A, 5}}) {
    ChevalleyAlgebra g(t);
    for (const auto& rec : enumerate_orbits(g, kSeed, kTrials)) {
      if (!rec.even) continue;
      CAPTURE(rec.diagram.to_text());
      nilo::Grading grading(g.roots(), rec.diagram.marks);
      for (int i = 0; i + 2 <= grading.max_degree(); i += 2)
        CHECK(grading.dim(i) >= grading.dim(i + 2));
    }
  }
}

TEST_CASE("orbit records carry consistent fields") {
  ChevalleyAlgebra f4({Series::F, 4});
  auto recs = enumerate_orbits(f4, kSeed, kTrials);
  int divisible_count = 0;
  for (const auto& rec : recs) {
    const WeightedDiagram& d = rec.diagram;
    CHECK(rec.even == d.all_even());
    CHECK(rec.height == nilo::diagram_height(f4.roots(), d.marks));
    CHECK(rec.dim_orbit == nilo::orbit_dim(f4.roots(), d.marks));
    CHECK(rec.graded_dims == nilo::graded_dims(f4.roots(), d.marks));
    if (rec.divisible) {
      ++divisible_count;
      REQUIRE(rec.half.has_value());
      CHECK(rec.half->marks * 2 == d.marks);
      CHECK(rec.even);
      CHECK(!d.is_zero());
    } else {
      CHECK(!rec.half.has_value());
    }
    CHECK(rec.dim_orbit % 2 == 0);  // orbit dimensions are even

    // Evenness is equivalent to vanishing odd graded dimensions.
    bool odd_all_zero = true;
    for (auto [deg, dim] : rec.graded_dims)
      if (deg % 2 != 0 && dim != 0) odd_all_zero = false;
    CHECK(rec.even == odd_all_zero);
  }
  CHECK(divisible_count == 4);  // the four friendly pairs; zero is left out
}

TEST_CASE("enumeration is sorted by marks") {
  ChevalleyAlgebra g({Series::C, 3});
  auto v = enumerate_orbits(g, kSeed, kTrials);
  for (size_t i = 0; i + 1 < v.size(); ++i)
    CHECK(nilo::diagram_less(v[i].diagram, v[i + 1].diagram));
}
