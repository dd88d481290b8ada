#include "symdes/designs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace symdes {

namespace {

std::string block_str(const std::vector<int>& b) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << "}";
  return os.str();
}

}  // namespace

DesignParams verify_design(const IncidenceStructure& D) {
  int v = D.v;
  if (v < 1) throw DesignError("verify_design: v must be positive", std::to_string(v));
  if (static_cast<int>(D.blocks.size()) != v)
    throw DesignError("verify_design: not symmetric, |blocks| != v",
                      std::to_string(D.blocks.size()) + " blocks vs v=" + std::to_string(v));
  std::set<std::vector<int>> seen;
  size_t k = D.blocks.empty() ? 0 : D.blocks.front().size();
  for (const auto& raw : D.blocks) {
    std::vector<int> b = raw;
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end() ||
        (!b.empty() && (b.front() < 0 || b.back() >= v)))
      throw DesignError("verify_design: block is not a subset of the point set",
                        block_str(raw));
    if (b.size() != k)
      throw DesignError("verify_design: unequal block sizes", block_str(raw));
    if (!seen.insert(b).second)
      throw DesignError("verify_design: repeated block", block_str(raw));
  }
  // exhaustive pair count
  std::vector<int> pair_count(static_cast<size_t>(v) * v, 0);
  for (const auto& b : D.blocks)
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        int x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
        ++pair_count[static_cast<size_t>(x) * v + y];
      }
  int lambda = v >= 2 ? pair_count[1] : 0;  // pair (0,1)
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (pair_count[static_cast<size_t>(x) * v + y] != lambda)
        throw DesignError("verify_design: non-constant pair multiplicity",
                          "pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ") lies in " +
                              std::to_string(pair_count[static_cast<size_t>(x) * v + y]) +
                              " blocks, expected " + std::to_string(lambda));
  DesignParams p{v, static_cast<int>(k), lambda};
  auto rep = check_admissible(p.v, p.k, p.lambda);
  if (!rep.identity_holds || !rep.non_trivial)
    throw DesignError("verify_design: trivial or inconsistent parameters",
                      "(v,k,lambda)=(" + p.v.str() + "," + p.k.str() + "," +
                          p.lambda.str() + ")");
  return p;
}

IncidenceStructure complement(const IncidenceStructure& D) {
  IncidenceStructure C;
  C.v = D.v;
  for (const auto& b : D.blocks) {
    std::vector<char> in(D.v, 0);
    for (int p : b) in[p] = 1;
    std::vector<int> cb;
    for (int p = 0; p < D.v; ++p)
      if (!in[p]) cb.push_back(p);
    C.blocks.push_back(std::move(cb));
  }
  return C;
}

// ---------------------------------------------------------------------------
// Group tables

int GroupTable::inv(int a) const {
  for (int b = 0; b < n; ++b)
    if (table[a][b] == identity) return b;
  throw std::logic_error("GroupTable: element has no inverse");
}

void validate(const GroupTable& G) {
  if (G.n < 1 || static_cast<int>(G.table.size()) != G.n)
    throw std::invalid_argument("GroupTable: table size mismatch");
  for (const auto& row : G.table)
    if (static_cast<int>(row.size()) != G.n)
      throw std::invalid_argument("GroupTable: ragged table");
  if (G.identity < 0 || G.identity >= G.n)
    throw std::invalid_argument("GroupTable: identity index out of range");
  // Latin square
  for (int a = 0; a < G.n; ++a) {
    std::vector<char> row(G.n, 0), col(G.n, 0);
    for (int b = 0; b < G.n; ++b) {
      int ab = G.table[a][b], ba = G.table[b][a];
      if (ab < 0 || ab >= G.n || ba < 0 || ba >= G.n || row[ab] || col[ba])
        throw std::invalid_argument("GroupTable: not a Latin square");
      row[ab] = col[ba] = 1;
    }
  }
  for (int a = 0; a < G.n; ++a)
    if (G.table[G.identity][a] != a || G.table[a][G.identity] != a)
      throw std::invalid_argument("GroupTable: identity does not act as identity");
  if (G.n <= 32) {  // exhaustive associativity at fixture sizes
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        for (int c = 0; c < G.n; ++c)
          if (G.table[G.table[a][b]][c] != G.table[a][G.table[b][c]])
            throw std::invalid_argument("GroupTable: not associative");
  }
}

GroupTable cyclic_group(int n) {
  GroupTable G{n, 0, {}};
  G.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[a][b] = (a + b) % n;
  return G;
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  GroupTable G{A.n * B.n, A.identity * B.n + B.identity, {}};
  G.table.assign(G.n, std::vector<int>(G.n));
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1)
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2)
          G.table[a1 * B.n + b1][a2 * B.n + b2] =
              A.table[a1][a2] * B.n + B.table[b1][b2];
  return G;
}

namespace {

// Generic builder from a multiplication law on encoded tuples.
template <typename Law>
GroupTable from_law(int n, Law law) {
  GroupTable G{n, 0, {}};
  G.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[a][b] = law(a, b);
  validate(G);  // catches any slip in the law immediately
  return G;
}

// Z8 : Z2 with a^b = a^twist; twist in {3,5,7} gives SD16, M16, D16.
GroupTable z8_semi_z2(int twist) {
  return from_law(16, [twist](int x, int y) {
    int i1 = x & 7, j1 = x >> 3, i2 = y & 7, j2 = y >> 3;
    int i = (i1 + (j1 ? i2 * twist : i2)) & 7;
    return i | ((j1 ^ j2) << 3);
  });
}

GroupTable d8() {
  return from_law(8, [](int x, int y) {
    int i1 = x & 3, j1 = x >> 2, i2 = y & 3, j2 = y >> 2;
    int i = (i1 + (j1 ? 4 - i2 : i2)) & 3;
    return i | ((j1 ^ j2) << 2);
  });
}

GroupTable q8() {
  return from_law(8, [](int x, int y) {
    int i1 = x & 3, j1 = x >> 2, i2 = y & 3, j2 = y >> 2;
    int i = (i1 + (j1 ? 4 - i2 : i2) + (j1 && j2 ? 2 : 0)) & 3;
    return i | ((j1 ^ j2) << 2);
  });
}

}  // namespace

GroupTable elementary_abelian_16() {
  return from_law(16, [](int x, int y) { return x ^ y; });
}

GroupTable z4_x_z4() { return direct_product(cyclic_group(4), cyclic_group(4)); }
GroupTable z2_x_z8() { return direct_product(cyclic_group(2), cyclic_group(8)); }
GroupTable z2_x_z2_x_z4() {
  return direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(4)));
}

GroupTable dihedral_16() { return z8_semi_z2(7); }
GroupTable semidihedral_16() { return z8_semi_z2(3); }
GroupTable modular_16() { return z8_semi_z2(5); }

GroupTable quaternion_16() {
  return from_law(16, [](int x, int y) {
    int i1 = x & 7, j1 = x >> 3, i2 = y & 7, j2 = y >> 3;
    int i = (i1 + (j1 ? 8 - i2 : i2) + (j1 && j2 ? 4 : 0)) & 7;
    return i | ((j1 ^ j2) << 3);
  });
}

GroupTable d8_x_z2() { return direct_product(d8(), cyclic_group(2)); }
GroupTable q8_x_z2() { return direct_product(q8(), cyclic_group(2)); }

GroupTable z4_semi_z4() {
  return from_law(16, [](int x, int y) {
    int i1 = x & 3, j1 = x >> 2, i2 = y & 3, j2 = y >> 2;
    int i = (i1 + ((j1 & 1) ? 4 - i2 : i2)) & 3;
    return i | (((j1 + j2) & 3) << 2);
  });
}

GroupTable z4xz2_semi_z2() {
  // generators a (order 4), b, c (order 2); c a c = a b, everything else
  // commutes; elements encoded as a^i b^j c^l
  return from_law(16, [](int x, int y) {
    int i1 = x & 3, j1 = (x >> 2) & 1, l1 = x >> 3;
    int i2 = y & 3, j2 = (y >> 2) & 1, l2 = y >> 3;
    int i = (i1 + i2) & 3;
    int j = (j1 + j2 + l1 * i2) & 1;
    return i | (j << 2) | ((l1 ^ l2) << 3);
  });
}

GroupTable pauli_16() {
  // i^a X^b Z^c with ZX = -XZ; the central product D8 * Z4
  return from_law(16, [](int x, int y) {
    int a1 = x & 3, b1 = (x >> 2) & 1, c1 = x >> 3;
    int a2 = y & 3, b2 = (y >> 2) & 1, c2 = y >> 3;
    int a = (a1 + a2 + 2 * (c1 & b2)) & 3;
    return a | ((b1 ^ b2) << 2) | ((c1 ^ c2) << 3);
  });
}

// ---------------------------------------------------------------------------
// Difference sets

IncidenceStructure develop_difference_set(const GroupTable& G, const std::vector<int>& D) {
  validate(G);
  if (D.size() < 2)
    throw std::invalid_argument("develop_difference_set: |D| must be >= 2");
  for (int d : D)
    if (d < 0 || d >= G.n)
      throw std::invalid_argument("develop_difference_set: element out of range");
  IncidenceStructure S;
  S.v = G.n;
  std::set<std::vector<int>> seen;
  for (int g = 0; g < G.n; ++g) {
    std::vector<int> block;
    for (int d : D) block.push_back(G.mul(g, d));
    std::sort(block.begin(), block.end());
    if (!seen.insert(block).second)
      throw DesignError("develop_difference_set: translates collide (periodic set)",
                        block_str(block));
    S.blocks.push_back(std::move(block));
  }
  return S;
}

std::vector<std::vector<int>> search_difference_sets(const GroupTable& G, int k) {
  validate(G);
  std::vector<std::vector<int>> out;
  if (k < 2 || k > G.n) return out;
  if ((static_cast<long long>(k) * (k - 1)) % (G.n - 1) != 0) return out;
  int lambda = static_cast<int>(static_cast<long long>(k) * (k - 1) / (G.n - 1));
  std::vector<int> inv(G.n);
  for (int a = 0; a < G.n; ++a) inv[a] = G.inv(a);

  std::vector<int> cur{G.identity};  // normalisation: identity is a member
  std::vector<int> rest;
  for (int a = 0; a < G.n; ++a)
    if (a != G.identity) rest.push_back(a);

  std::vector<int> counts(G.n, 0);
  auto full_check = [&](const std::vector<int>& D) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int x : D)
      for (int y : D)
        if (x != y) ++counts[G.mul(x, inv[y])];
    for (int a = 0; a < G.n; ++a)
      if (a != G.identity && counts[a] != lambda) return false;
    return true;
  };

  // plain combination enumeration; fixture sizes make C(n-1, k-1) tiny
  std::vector<size_t> idx(static_cast<size_t>(k - 1));
  auto rec = [&](auto&& self, size_t pos, size_t from) -> void {
    if (pos == idx.size()) {
      if (full_check(cur)) {
        std::vector<int> D = cur;
        std::sort(D.begin(), D.end());
        out.push_back(std::move(D));
      }
      return;
    }
    for (size_t i = from; i + (idx.size() - pos) <= rest.size(); ++i) {
      cur.push_back(rest[i]);
      self(self, pos + 1, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

IncidenceStructure design_from_base_block(const PermutationGroup& G,
                                          const std::vector<int>& B) {
  if (!G.is_transitive())
    throw std::invalid_argument("design_from_base_block: group is not transitive");
  std::vector<int> base = B;
  std::sort(base.begin(), base.end());
  for (int p : base)
    if (p < 0 || p >= G.degree())
      throw std::invalid_argument("design_from_base_block: block point out of range");
  std::set<std::vector<int>> orbit{base};
  std::vector<std::vector<int>> queue{base};
  while (!queue.empty()) {
    std::vector<int> b = std::move(queue.back());
    queue.pop_back();
    for (const Permutation& g : G.generators()) {
      std::vector<int> im;
      im.reserve(b.size());
      for (int p : b) im.push_back(g(p));
      std::sort(im.begin(), im.end());
      if (orbit.insert(im).second) queue.push_back(std::move(im));
    }
  }
  if (orbit.size() != static_cast<size_t>(G.degree()))
    throw DesignError("design_from_base_block: orbit size != degree (not symmetric)",
                      std::to_string(orbit.size()) + " blocks");
  IncidenceStructure S;
  S.v = G.degree();
  S.blocks.assign(orbit.begin(), orbit.end());
  return S;
}

// ---------------------------------------------------------------------------
// Automorphism search: backtracking over point images, with per-block
// forward checking.  For each partially mapped block, its image so far must
// extend to some block; the union of the possible extensions per block cuts
// the candidate images of every unmapped point.  Points are chosen
// most-constrained-first, ties to the smallest point (deterministic).

namespace {

struct AutSearch {
  int v;
  std::vector<uint64_t> blocks;                // bitmask per block
  std::vector<std::vector<int>> point_blocks;  // blocks through each point
  std::vector<int> phi;
  uint64_t used = 0, mapped = 0;
  std::vector<uint64_t> img;  // image bits of each block so far
  StabChain* known;           // already-generated subgroup, for dedup
  std::vector<Permutation>* gens;

  void run() {
    int n_mapped = static_cast<int>(std::popcount(mapped));
    if (n_mapped == v) {
      Permutation g{std::vector<int>(phi)};
      if (!known->contains(g)) {
        gens->push_back(g);
        known->add(g);
      }
      return;
    }
    std::vector<uint64_t> ub(blocks.size());
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      uint64_t m = 0;
      for (uint64_t c : blocks)
        if ((c & used) == img[bi]) m |= c;
      if (!m) return;
      ub[bi] = m;
    }
    int best = -1, best_n = v + 1;
    uint64_t best_c = 0;
    uint64_t all = v == 64 ? ~0ull : (1ull << v) - 1;
    for (int p = 0; p < v; ++p) {
      if (mapped >> p & 1) continue;
      uint64_t c = all & ~used;
      for (int bi : point_blocks[p]) c &= ub[bi];
      int n = std::popcount(c);
      if (n == 0) return;
      if (n < best_n) {
        best_n = n;
        best = p;
        best_c = c;
      }
    }
    for (int q = 0; q < v; ++q) {
      if (!(best_c >> q & 1)) continue;
      phi[best] = q;
      mapped |= 1ull << best;
      used |= 1ull << q;
      for (int bi : point_blocks[best]) img[bi] |= 1ull << q;
      run();
      for (int bi : point_blocks[best]) img[bi] &= ~(1ull << q);
      mapped &= ~(1ull << best);
      used &= ~(1ull << q);
      phi[best] = -1;
    }
  }
};

}  // namespace

PermutationGroup automorphism_group(const IncidenceStructure& D) {
  verify_design(D);  // throws unless D really is a symmetric design
  if (D.v > 64)
    throw std::domain_error("automorphism_group: v > 64 exceeds the supported envelope");
  AutSearch s;
  s.v = D.v;
  for (const auto& b : D.blocks) {
    uint64_t m = 0;
    for (int p : b) m |= 1ull << p;
    s.blocks.push_back(m);
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  s.point_blocks.assign(D.v, {});
  for (size_t bi = 0; bi < s.blocks.size(); ++bi)
    for (int p = 0; p < D.v; ++p)
      if (s.blocks[bi] >> p & 1) s.point_blocks[p].push_back(static_cast<int>(bi));
  s.phi.assign(D.v, -1);
  s.img.assign(s.blocks.size(), 0);
  StabChain chain(D.v);
  std::vector<Permutation> gens;
  s.known = &chain;
  s.gens = &gens;
  s.run();
  if (gens.empty()) gens.push_back(Permutation::identity(D.v));
  return PermutationGroup(D.v, std::move(gens));
}

// ---------------------------------------------------------------------------

std::variant<int, ProfileViolation> partition_profile(const IncidenceStructure& D,
                                                      const BlockSystem& P) {
  std::vector<int> cls(D.v, -1);
  size_t csize = P.classes.empty() ? 0 : P.classes.front().size();
  for (size_t ci = 0; ci < P.classes.size(); ++ci) {
    if (P.classes[ci].size() != csize)
      throw std::invalid_argument("partition_profile: classes of unequal size");
    for (int p : P.classes[ci]) {
      if (p < 0 || p >= D.v || cls[p] != -1)
        throw std::invalid_argument("partition_profile: not a partition of the points");
      cls[p] = static_cast<int>(ci);
    }
  }
  for (int p = 0; p < D.v; ++p)
    if (cls[p] == -1)
      throw std::invalid_argument("partition_profile: not a partition of the points");

  int l = 0;
  const std::vector<int>* first_block = nullptr;
  int first_class = -1;
  for (const auto& b : D.blocks) {
    std::vector<int> inter(P.classes.size(), 0);
    for (int p : b) ++inter[cls[p]];
    for (size_t ci = 0; ci < P.classes.size(); ++ci) {
      if (inter[ci] == 0) continue;
      if (l == 0) {
        l = inter[ci];
        first_block = &b;
        first_class = static_cast<int>(ci);
      } else if (inter[ci] != l) {
        // witness: two nonzero intersections of distinct sizes (the second
        // one may come from an earlier block)
        ProfileViolation w;
        w.block = b;
        w.class1 = static_cast<int>(ci);
        w.size1 = inter[ci];
        w.class2 = first_class;
        w.size2 = l;
        (void)first_block;
        return w;
      }
    }
  }
  return l;
}

}  // namespace symdes
