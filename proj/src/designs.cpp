#include "geochroma/designs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace geochroma {

namespace {

struct FieldSpec {
  int p;
  int e;
  std::vector<int> modulus;  // monic, low degree first
};

// Irreducible moduli for the non-prime orders.
const std::map<int, FieldSpec>& extension_specs() {
  static const std::map<int, FieldSpec> specs{
      {4, {2, 2, {1, 1, 1}}},          {8, {2, 3, {1, 1, 0, 1}}},  {9, {3, 2, {1, 0, 1}}},
      {16, {2, 4, {1, 1, 0, 0, 1}}},   {25, {5, 2, {2, 0, 1}}},    {27, {3, 3, {1, 2, 0, 1}}},
      {32, {2, 5, {1, 0, 1, 0, 0, 1}}},
  };
  return specs;
}

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

std::vector<int> digits(int v, int p, int e) {
  std::vector<int> out(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

bool field_supported(int q) { return (q <= 1024 && is_prime(q)) || extension_specs().contains(q); }

FiniteField::FiniteField(int q) : q_(q) {
  if (!field_supported(q)) throw std::invalid_argument("unsupported field order " + std::to_string(q));
  std::vector<int> modulus;
  if (is_prime(q)) {
    p_ = q;
    e_ = 1;
  } else {
    const auto& spec = extension_specs().at(q);
    p_ = spec.p;
    e_ = spec.e;
    modulus = spec.modulus;
  }
  const auto qq = static_cast<std::size_t>(q);
  add_.assign(qq * qq, 0);
  mul_.assign(qq * qq, 0);
  neg_.assign(qq, 0);
  inv_.assign(qq, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, e_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, e_);
      std::vector<int> s(static_cast<std::size_t>(e_));
      for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[idx(a, b)] = from_digits(s, p_);

      std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      // Reduce modulo the monic modulus, highest degree first.
      for (int d = 2 * e_ - 2; d >= e_; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= e_; ++i) {
          prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus[i]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(a, b)] = from_digits(prod, p_);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[static_cast<std::size_t>(a)];
}

int ProjectivePlane::line_of(int a, int b) const {
  if (a == b) throw std::invalid_argument("line_of needs two distinct points");
  const auto& la = lines_through[static_cast<std::size_t>(a)];
  const auto& lb = lines_through[static_cast<std::size_t>(b)];
  std::vector<int> common;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
  if (common.size() != 1) throw std::logic_error("two points do not span a unique line");
  return common.front();
}

bool ProjectivePlane::incident(int point, int line) const {
  const auto& l = lines[static_cast<std::size_t>(line)];
  return std::binary_search(l.begin(), l.end(), point);
}

ProjectivePlane projective_plane(int q) {
  const FiniteField f(q);
  ProjectivePlane plane;
  plane.q = q;
  plane.points.push_back({0, 0, 1});
  for (int b = 0; b < q; ++b) plane.points.push_back({0, 1, b});
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) plane.points.push_back({1, a, b});
  }
  const int count = static_cast<int>(plane.points.size());
  plane.lines.assign(static_cast<std::size_t>(count), {});
  plane.lines_through.assign(static_cast<std::size_t>(count), {});
  for (int l = 0; l < count; ++l) {
    const auto& c = plane.points[l];
    for (int p = 0; p < count; ++p) {
      const auto& x = plane.points[p];
      const int dot = f.add(f.add(f.mul(c[0], x[0]), f.mul(c[1], x[1])), f.mul(c[2], x[2]));
      if (dot == 0) {
        plane.lines[l].push_back(p);
        plane.lines_through[p].push_back(l);
      }
    }
  }
  return plane;
}

std::vector<std::vector<int>> pencil_through(const ProjectivePlane& plane, int z, int m) {
  if (z < 0 || z >= static_cast<int>(plane.points.size())) throw std::invalid_argument("pencil center out of range");
  if (m < 0 || m > plane.q + 1) {
    throw std::invalid_argument("a pencil has only q+1 = " + std::to_string(plane.q + 1) + " lines, asked for " +
                                std::to_string(m));
  }
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m; ++i) {
    std::vector<int> residue;
    for (int p : plane.lines[plane.lines_through[z][i]]) {
      if (p != z) residue.push_back(p);
    }
    out.push_back(std::move(residue));
  }
  return out;
}

DesignReport validate_design(const BlockDesign& d) {
  const auto n = static_cast<std::size_t>(d.n);
  std::vector<int> count(n * n, 0);
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const int u = std::min(b[i], b[j]);
        const int v = std::max(b[i], b[j]);
        if (u == v || u < 0 || v >= d.n) throw std::invalid_argument("block with repeated or out-of-range point");
        ++count[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
      }
    }
  }
  DesignReport report;
  for (int u = 0; u < d.n; ++u) {
    for (int v = u + 1; v < d.n; ++v) {
      const int c = count[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
      if (c == 0) report.uncovered.emplace_back(u, v);
      if (c > 1) report.repeated.emplace_back(u, v);
    }
  }
  return report;
}

Sts9 sts9() {
  Sts9 out;
  out.design.n = 9;
  out.design.block_size = 3;
  // Directions of the four parallel classes of AG(2,3).
  const std::array<std::array<int, 2>, 4> dir{{{1, 0}, {0, 1}, {1, 2}, {1, 1}}};
  for (int c = 0; c < 4; ++c) {
    std::vector<bool> seen(9, false);
    int slot = 0;
    for (int start = 0; start < 9; ++start) {
      if (seen[start]) continue;
      std::vector<int> block;
      int x = start % 3, y = start / 3;
      for (int t = 0; t < 3; ++t) {
        const int v = 3 * y + x;
        block.push_back(v);
        seen[v] = true;
        x = (x + dir[c][0]) % 3;
        y = (y + dir[c][1]) % 3;
      }
      std::sort(block.begin(), block.end());
      out.classes[c][slot++] = static_cast<int>(out.design.blocks.size());
      out.design.blocks.push_back(block);
    }
  }
  return out;
}

namespace {

DifferenceTripleTable generate_table(int k) {
  DifferenceTripleTable t;
  t.k = k;
  t.n = 18 * k + 1;
  t.rows.resize(static_cast<std::size_t>(k + 2));
  for (int r = 1; r <= k + 2; ++r) t.rows[r - 1].row = r;
  // Column blocks E1-3 (rows 3..k+2), then E4-6 and E7-9 (rows 1..k).
  for (int s = 1; s <= k; ++s) {
    t.rows[s + 1].triples.push_back({3 * s - 2, 4 * k + 2 - s, 4 * k + 2 * s});
  }
  for (int r = 1; r <= k; ++r) {
    const int e4 = 3 * k + 3 - 3 * r;
    const int e5 = r == 1 ? 3 * k + 1 : 4 * k + 2 * r - 1;
    t.rows[r - 1].triples.push_back({e4, e5, e4 + e5});
    const int e7 = 3 * r - 1;
    const int e8 = 8 * k - (r - 1);
    const int e9 = 2 * r <= k ? 8 * k + 2 * r : 10 * k - 2 * r + 1;
    t.rows[r - 1].triples.push_back({e7, e8, e9});
  }
  const int h = k / 2;
  for (int r = 1; r <= k + 2; ++r) {
    int box;
    if (r <= h - 1) {
      box = h - r;
    } else if (r <= k - 2) {
      box = r - h + 1;
    } else if (r == k - 1 || r == k + 2) {
      box = h;
    } else {
      box = h + 1;
    }
    t.rows[r - 1].box = box;
  }
  return t;
}

}  // namespace

void validate_table(const DifferenceTripleTable& table) {
  const int k = table.k;
  const int n = table.n;
  if (n != 18 * k + 1) throw std::runtime_error("table order n must equal 18k+1");
  std::vector<int> seen(static_cast<std::size_t>(9 * k + 1), 0);
  for (const auto& row : table.rows) {
    const std::string where = "difference table k=" + std::to_string(k) + " row " + std::to_string(row.row);
    if (row.box < 1 || row.box > k / 2 + 1) throw std::runtime_error(where + ": box label out of range");
    for (const auto& t : row.triples) {
      for (int d : {t.d1, t.d2, t.d3}) {
        if (d < 1 || d > 9 * k) throw std::runtime_error(where + ": entry " + std::to_string(d) + " outside 1..9k");
        if (seen[d]++) throw std::runtime_error(where + ": entry " + std::to_string(d) + " repeated");
      }
      if (!(t.d1 < t.d2 && t.d2 < t.d3)) throw std::runtime_error(where + ": triple not increasing");
      if ((t.d1 + t.d2 - t.d3) % n != 0 && (t.d1 + t.d2 + t.d3) % n != 0) {
        throw std::runtime_error(where + ": triple is not a difference triple mod n");
      }
    }
  }
  for (int d = 1; d <= 9 * k; ++d) {
    if (seen[d] != 1) throw std::runtime_error("difference table k=" + std::to_string(k) + ": entry " + std::to_string(d) + " missing");
  }
}

DifferenceTripleTable difference_triples(int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("difference_triples needs an even k >= 4");
  auto t = generate_table(k);
  validate_table(t);
  return t;
}

BlockDesign cyclic_sts(int n, const DifferenceTripleTable& table) {
  if (n != table.n) throw std::invalid_argument("cyclic_sts: n does not match the table (n = 18k+1)");
  BlockDesign d;
  d.n = n;
  d.block_size = 3;
  for (const auto& row : table.rows) {
    for (const auto& t : row.triples) {
      for (int s = 0; s < n; ++s) {
        std::vector<int> b{s, (s + t.d1) % n, (s + t.d1 + t.d2) % n};
        std::sort(b.begin(), b.end());
        d.blocks.push_back(std::move(b));
      }
    }
  }
  const auto report = validate_design(d);
  if (!report.valid()) {
    throw std::runtime_error("cyclic_sts: " + std::to_string(report.uncovered.size()) + " uncovered and " +
                             std::to_string(report.repeated.size()) + " repeated pairs");
  }
  return d;
}

}  // namespace geochroma
