// Finite fields, projective planes, Steiner triple systems and the difference
// triple tables behind the cyclic triple systems on 18k+1 points.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace geochroma {

/// GF(q) for primes q <= 1024 and the prime powers 4, 8, 9, 16, 25, 27, 32.
/// Elements are 0..q-1; an element of GF(p^e) encodes the polynomial whose
/// base-p digits are its coefficients.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for a == 0.
  int inv(int a) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

bool field_supported(int q);

struct ProjectivePlane {
  int q = 0;
  /// Homogeneous triples, first nonzero coordinate equal to 1.
  std::vector<std::array<int, 3>> points;
  /// Sorted point indices per line. Line i has the same normalized triple as point i.
  std::vector<std::vector<int>> lines;
  /// Sorted line indices per point.
  std::vector<std::vector<int>> lines_through;

  /// Index of the unique line through two distinct points.
  int line_of(int a, int b) const;
  bool incident(int point, int line) const;
};

/// Desarguesian plane PG(2, q).
ProjectivePlane projective_plane(int q);

/// The first m lines through z (in line-index order), each with z removed.
/// Throws std::invalid_argument when m > q + 1.
std::vector<std::vector<int>> pencil_through(const ProjectivePlane& plane, int z, int m);

struct BlockDesign {
  int n = 0;
  int block_size = 0;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const BlockDesign&, const BlockDesign&) = default;
};

struct DesignReport {
  std::vector<std::pair<int, int>> uncovered;
  /// Pairs lying in two or more blocks.
  std::vector<std::pair<int, int>> repeated;
  bool valid() const { return uncovered.empty() && repeated.empty(); }
};

DesignReport validate_design(const BlockDesign& d);

struct Sts9 {
  BlockDesign design;
  /// Four parallel classes of three block indices each: rows, columns and the
  /// two diagonal directions of AG(2,3), point i = 3y + x.
  std::array<std::array<int, 3>, 4> classes{};
};

Sts9 sts9();

struct DifferenceTriple {
  int d1 = 0, d2 = 0, d3 = 0;

  friend bool operator==(const DifferenceTriple&, const DifferenceTriple&) = default;
};

struct DifferenceRow {
  /// 1-based row number.
  int row = 0;
  /// Triples of the row, in column-block order (E1-3 first when present).
  std::vector<DifferenceTriple> triples;
  /// Color box, 1..k/2+1.
  int box = 0;
};

struct DifferenceTripleTable {
  int k = 0;
  int n = 0;
  std::vector<DifferenceRow> rows;
};

/// The k+2 row table for n = 18k+1, validated before it is returned; a
/// violation throws std::runtime_error naming the row.
DifferenceTripleTable difference_triples(int k);

/// Throws std::runtime_error describing the first violated table invariant.
void validate_table(const DifferenceTripleTable& table);

/// Blocks {s, s+d1, s+d1+d2} mod n for every triple and every s, each block
/// stored sorted, triple-major then rotation order. Throws when the blocks do
/// not form a 2-(n,3) design.
BlockDesign cyclic_sts(int n, const DifferenceTripleTable& table);

}  // namespace geochroma
