#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "geochroma/designs.hpp"

using namespace geochroma;

namespace {

// Pair multiplicities counted directly from the blocks.
std::map<std::pair<int, int>, int> pair_counts(const BlockDesign& d) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) ++m[{std::min(b[i], b[j]), std::max(b[i], b[j])}];
    }
  }
  return m;
}

bool is_exact_pair_cover(const BlockDesign& d) {
  const auto m = pair_counts(d);
  if (static_cast<int>(m.size()) != d.n * (d.n - 1) / 2) return false;
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for q <= 32") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    REQUIRE(field_supported(q));
    const FiniteField f(q);
    CHECK(f.order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (a != 0 && b != 0) CHECK(f.mul(a, b) != 0);
        for (int c = 0; c < q; c += (q > 16 ? 3 : 1)) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }
  CHECK_FALSE(field_supported(6));
  CHECK_FALSE(field_supported(64));
  CHECK(field_supported(1021));
}

TEST_CASE("projective plane axioms") {
  CHECK(projective_plane(2).points.size() == 7);
  CHECK(projective_plane(3).lines.size() == 13);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto p = projective_plane(q);
    const std::size_t N = static_cast<std::size_t>(q * q + q + 1);
    REQUIRE(p.points.size() == N);
    REQUIRE(p.lines.size() == N);
    for (const auto& l : p.lines) CHECK(static_cast<int>(l.size()) == q + 1);
    for (const auto& t : p.lines_through) CHECK(static_cast<int>(t.size()) == q + 1);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = a + 1; b < N; ++b) {
        CHECK(intersect(p.lines[a], p.lines[b]).size() == 1);
        CHECK(intersect(p.lines_through[a], p.lines_through[b]).size() == 1);
        const int l = p.line_of(static_cast<int>(a), static_cast<int>(b));
        CHECK(p.incident(static_cast<int>(a), l));
        CHECK(p.incident(static_cast<int>(b), l));
      }
    }
  }
}

TEST_CASE("pencils") {
  const auto p3 = projective_plane(3);
  const auto pencil = pencil_through(p3, 0, 4);
  REQUIRE(pencil.size() == 4);
  std::set<int> seen;
  for (const auto& l : pencil) {
    CHECK(l.size() == 3);
    for (int v : l) {
      CHECK(v != 0);
      CHECK(seen.insert(v).second);
    }
  }
  CHECK_THROWS_AS(pencil_through(p3, 0, 5), std::invalid_argument);

  const auto p8 = projective_plane(8);
  const auto nine = pencil_through(p8, 5, 9);
  REQUIRE(nine.size() == 9);
  std::set<int> all;
  for (const auto& l : nine) {
    CHECK(l.size() == 8);
    all.insert(l.begin(), l.end());
  }
  CHECK(all.size() == 72);
  CHECK_FALSE(all.contains(5));
}

TEST_CASE("sts9") {
  const auto s = sts9();
  CHECK(s.design.blocks.size() == 12);
  CHECK(is_exact_pair_cover(s.design));
  CHECK(validate_design(s.design).valid());
  for (const auto& cls : s.classes) {
    std::set<int> pts;
    for (int b : cls) pts.insert(s.design.blocks[static_cast<std::size_t>(b)].begin(), s.design.blocks[static_cast<std::size_t>(b)].end());
    CHECK(pts.size() == 9);
  }
  // Rows {0,1,2} and columns {0,3,6} with point i = 3y + x.
  const auto& blocks = s.design.blocks;
  CHECK(blocks[static_cast<std::size_t>(s.classes[0][0])] == std::vector<int>{0, 1, 2});
  CHECK(blocks[static_cast<std::size_t>(s.classes[1][0])] == std::vector<int>{0, 3, 6});

  auto broken = s.design;
  broken.blocks.pop_back();
  CHECK(validate_design(broken).uncovered.size() == 3);
  broken.blocks.push_back(broken.blocks.front());
  CHECK(validate_design(broken).repeated.size() == 3);
}

TEST_CASE("difference triple tables") {
  const auto t4 = difference_triples(4);
  CHECK(t4.n == 73);
  CHECK(t4.rows.size() == 6);
  bool has_12_13_25 = false, has_2_32_34 = false;
  for (const auto& r : t4.rows) {
    for (const auto& t : r.triples) {
      has_12_13_25 = has_12_13_25 || t == DifferenceTriple{12, 13, 25};
      has_2_32_34 = has_2_32_34 || t == DifferenceTriple{2, 32, 34};
    }
  }
  CHECK(has_12_13_25);
  CHECK(has_2_32_34);

  for (int k : {4, 6, 8, 10, 12}) {
    const auto t = difference_triples(k);
    const int n = 18 * k + 1;
    CHECK(t.n == n);
    CHECK(static_cast<int>(t.rows.size()) == k + 2);
    std::vector<int> entries;
    for (const auto& r : t.rows) {
      CHECK(r.box >= 1);
      CHECK(r.box <= k / 2 + 1);
      for (const auto& x : r.triples) {
        CHECK(x.d1 < x.d2);
        CHECK(x.d2 < x.d3);
        CHECK(((x.d1 + x.d2) % n == x.d3 % n || (x.d1 + x.d2 + x.d3) % n == 0));
        entries.insert(entries.end(), {x.d1, x.d2, x.d3});
      }
    }
    std::sort(entries.begin(), entries.end());
    std::vector<int> expected(static_cast<std::size_t>(9 * k));
    for (int i = 0; i < 9 * k; ++i) expected[static_cast<std::size_t>(i)] = i + 1;
    CHECK(entries == expected);
  }
  CHECK_THROWS(difference_triples(2));
  CHECK_THROWS(difference_triples(5));
}

TEST_CASE("validate_table names the offending row") {
  auto t = difference_triples(4);
  std::swap(t.rows[1].triples[0].d1, t.rows[2].triples[0].d2);
  try {
    validate_table(t);
    FAIL("expected a validation failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("row") != std::string::npos);
  }
}

TEST_CASE("cyclic_sts") {
  for (int k : {4, 6}) {
    const auto t = difference_triples(k);
    const int n = t.n;
    const auto d = cyclic_sts(n, t);
    CHECK(static_cast<int>(d.blocks.size()) == n * (n - 1) / 6);
    CHECK(is_exact_pair_cover(d));
    CHECK(validate_design(d).valid());
    // Rotation by one maps the block set onto itself.
    std::set<std::vector<int>> blocks(d.blocks.begin(), d.blocks.end());
    for (const auto& b : d.blocks) {
      std::vector<int> r;
      for (int v : b) r.push_back((v + 1) % n);
      std::sort(r.begin(), r.end());
      CHECK(blocks.contains(r));
    }
  }
  CHECK_THROWS(cyclic_sts(75, difference_triples(4)));
}
