#include "symdes/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symdes {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int x : img) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("Permutation: images are not a bijection of [0,n)");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  Permutation p;
  p.img = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
  return r;
}

Permutation Permutation::operator*(const Permutation& h) const {
  if (degree() != h.degree())
    throw std::invalid_argument("Permutation product: degree mismatch");
  Permutation r;
  r.img.resize(img.size());
  for (int i = 0; i < degree(); ++i) r.img[i] = h.img[img[i]];
  return r;
}

Permutation parse_cycles(const std::string& s, int degree) {
  Permutation p = Permutation::identity(degree);
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < s.size() && s[i] != ')'; ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (c == ' ' || c == ',') {
        if (!num.empty()) cyc.push_back(std::stoi(num)), num.clear();
      } else {
        throw std::invalid_argument("parse_cycles: unexpected character");
      }
    }
    if (i == s.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++i;  // ')'
    if (!num.empty()) cyc.push_back(std::stoi(num));
    std::set<int> in_cycle;
    for (int x : cyc) {
      if (x < 0 || x >= degree)
        throw std::invalid_argument("parse_cycles: point out of range");
      if (!in_cycle.insert(x).second)
        throw std::invalid_argument("parse_cycles: point repeated within a cycle");
    }
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (p.img[from] != from)
        throw std::invalid_argument("parse_cycles: point repeated across cycles");
      p.img[from] = to;
    }
  }
  return Permutation(p.img);  // re-validate
}

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(int degree, std::vector<int> seed_base) : deg(degree) {
  for (int b : seed_base) {
    if (b < 0 || b >= deg) throw std::invalid_argument("StabChain: base point out of range");
    levels.push_back(Level{b, {}, {}});
    rebuild_transversal(levels.size() - 1);
  }
}

// The group at level j is generated by the strong generators stored at level
// j and every deeper level, so the orbit/transversal must use all of them.
void StabChain::rebuild_transversal(size_t j) {
  Level& L = levels[j];
  L.transversal.clear();
  L.transversal.emplace(L.beta, Permutation::identity(deg));
  std::deque<int> queue{L.beta};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (size_t i = j; i < levels.size(); ++i) {
      for (const Permutation& s : levels[i].gens) {
        int q = s(p);
        if (!L.transversal.count(q)) {
          L.transversal.emplace(q, L.transversal.at(p) * s);
          queue.push_back(q);
        }
      }
    }
  }
}

std::pair<Permutation, size_t> StabChain::strip(Permutation g, size_t from) const {
  for (size_t i = from; i < levels.size(); ++i) {
    int p = g(levels[i].beta);
    auto it = levels[i].transversal.find(p);
    if (it == levels[i].transversal.end()) return {std::move(g), i};
    g = g * it->second.inverse();  // now fixes beta_i
  }
  return {std::move(g), levels.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != deg) return false;
  auto [h, i] = strip(g, 0);
  return i == levels.size() && h.is_identity();
}

void StabChain::insert_residue(Permutation h, size_t level) {
  if (level == levels.size()) {
    int beta = -1;
    for (int x = 0; x < deg; ++x)
      if (h(x) != x) {
        beta = x;
        break;
      }
    levels.push_back(Level{beta, {}, {}});
  }
  // h fixes the first `level` base points, so it is a generator of G^(level)
  levels[level].gens.push_back(std::move(h));
}

// Fixpoint over the standard Schreier-Sims correctness criterion: at every
// level the transversal matches the orbit and every Schreier generator
// strips to the identity through the deeper chain.  Whenever a residue is
// inserted anywhere, all transversals are rebuilt and the sweep restarts;
// each insertion strictly enlarges a stabilizer subgroup, so this ends.
void StabChain::complete() {
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (size_t j = 0; j < levels.size(); ++j) rebuild_transversal(j);
    for (size_t j = 0; j < levels.size() && !dirty; ++j) {
      std::vector<int> points;
      for (const auto& [p, u] : levels[j].transversal) points.push_back(p);
      for (int p : points) {
        // Schreier generators over every strong generator of the level-j group
        for (size_t gi = j; gi < levels.size() && !dirty; ++gi) {
          for (const Permutation& s : levels[gi].gens) {
            Permutation schreier = levels[j].transversal.at(p) * s *
                                   levels[j].transversal.at(s(p)).inverse();
            auto [h, lev] = strip(std::move(schreier), j + 1);
            if (!(lev == levels.size() && h.is_identity())) {
              insert_residue(std::move(h), lev);
              dirty = true;
              break;
            }
          }
        }
        if (dirty) break;
      }
    }
  }
}

void StabChain::add(const Permutation& g) {
  if (g.degree() != deg) throw std::invalid_argument("StabChain::add: degree mismatch");
  auto [h, i] = strip(g, 0);
  if (i == levels.size() && h.is_identity()) return;
  insert_residue(std::move(h), i);
  complete();
}

Bigint StabChain::order() const {
  Bigint o = 1;
  for (const auto& L : levels) o *= static_cast<int>(L.transversal.size());
  return o;
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const auto& L : levels) b.push_back(L.beta);
  return b;
}

std::vector<Permutation> StabChain::strong_generators(size_t level) const {
  std::vector<Permutation> out;
  for (size_t i = level; i < levels.size(); ++i)
    for (const Permutation& g : levels[i].gens) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : deg(degree), gens(std::move(generators)) {
  if (deg < 1 || deg > 10000)
    throw std::invalid_argument("PermutationGroup: degree must be in [1, 10000]");
  for (const Permutation& g : gens)
    if (g.degree() != deg)
      throw std::invalid_argument("PermutationGroup: generator degree mismatch");
}

const StabChain& PermutationGroup::chain() const {
  std::call_once(chain_once, [this] {
    auto c = std::make_unique<StabChain>(deg);
    for (const Permutation& g : gens) c->add(g);
    chain_ = std::move(c);
  });
  return *chain_;
}

std::vector<int> PermutationGroup::orbit(int x) const {
  if (x < 0 || x >= deg) throw std::invalid_argument("orbit: point out of range");
  std::vector<char> seen(deg, 0);
  seen[x] = 1;
  std::deque<int> queue{x};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const Permutation& g : gens)
      if (!seen[g(p)]) {
        seen[g(p)] = 1;
        queue.push_back(g(p));
      }
  }
  std::vector<int> out;
  for (int i = 0; i < deg; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

Bigint PermutationGroup::order() const { return chain().order(); }

bool PermutationGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == deg;
}

PermutationGroup PermutationGroup::stabilizer(int x) const {
  if (x < 0 || x >= deg) throw std::invalid_argument("stabilizer: point out of range");
  StabChain c(deg, {x});
  for (const Permutation& g : gens) c.add(g);
  return PermutationGroup(deg, c.strong_generators(1));
}

// ---------------------------------------------------------------------------
// Block systems (Atkinson's minimal-block algorithm)

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false if already united
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller point as representative
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, cls] : by_root) out.push_back(std::move(cls));
  return out;  // each sorted; ordered by minimum = root
}

}  // namespace

std::vector<BlockSystem> minimal_block_systems(const PermutationGroup& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("minimal_block_systems: group is not transitive");
  int n = G.degree();
  std::vector<BlockSystem> found;
  std::vector<std::vector<int>> zero_blocks;  // class of 0, per found system
  for (int beta = 1; beta < n; ++beta) {
    UnionFind uf(n);
    uf.unite(0, beta);
    std::vector<std::pair<int, int>> pending{{0, beta}};
    while (!pending.empty()) {
      auto [u, v] = pending.back();
      pending.pop_back();
      for (const Permutation& g : G.generators()) {
        int a = uf.find(g(u)), b = uf.find(g(v));
        if (a != b) {
          uf.unite(a, b);
          pending.emplace_back(a, b);
        }
      }
    }
    auto classes = classes_of(uf, n);
    size_t c = classes.front().size();
    if (c <= 1 || c >= static_cast<size_t>(n)) continue;  // trivial
    BlockSystem sys{std::move(classes)};
    if (std::find(found.begin(), found.end(), sys) == found.end()) {
      zero_blocks.push_back(sys.classes.front());
      found.push_back(std::move(sys));
    }
  }
  // keep the inclusion-minimal ones (each generated block is minimal for its
  // seed pair, but distinct seeds can generate nested systems)
  std::vector<BlockSystem> minimal;
  for (size_t i = 0; i < found.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < found.size() && !dominated; ++j) {
      if (i == j || zero_blocks[j].size() >= zero_blocks[i].size()) continue;
      dominated = std::includes(zero_blocks[i].begin(), zero_blocks[i].end(),
                                zero_blocks[j].begin(), zero_blocks[j].end());
    }
    if (!dominated) minimal.push_back(found[i]);
  }
  return minimal;
}

int flag_orbit_count(const IncidenceStructure& D, const PermutationGroup& G) {
  if (D.v != G.degree())
    throw std::invalid_argument("flag_orbit_count: degree does not match point count");
  std::map<std::vector<int>, int> block_index;
  for (size_t b = 0; b < D.blocks.size(); ++b) {
    std::vector<int> sorted = D.blocks[b];
    std::sort(sorted.begin(), sorted.end());
    block_index[sorted] = static_cast<int>(b);
  }
  // images of blocks under each generator (and the automorphism check)
  std::vector<std::vector<int>> gen_block_image(G.generators().size());
  for (size_t gi = 0; gi < G.generators().size(); ++gi) {
    const Permutation& g = G.generators()[gi];
    for (const auto& B : D.blocks) {
      std::vector<int> im;
      im.reserve(B.size());
      for (int p : B) im.push_back(g(p));
      std::sort(im.begin(), im.end());
      auto it = block_index.find(im);
      if (it == block_index.end()) {
        std::ostringstream os;
        os << "flag_orbit_count: generator " << gi << " does not preserve the block set";
        throw std::invalid_argument(os.str());
      }
      gen_block_image[gi].push_back(it->second);
    }
  }
  // flags indexed as (point, block)
  std::vector<std::pair<int, int>> flags;
  std::map<std::pair<int, int>, int> flag_index;
  for (size_t b = 0; b < D.blocks.size(); ++b)
    for (int p : D.blocks[b]) {
      flag_index[{p, static_cast<int>(b)}] = static_cast<int>(flags.size());
      flags.emplace_back(p, static_cast<int>(b));
    }
  UnionFind uf(static_cast<int>(flags.size()));
  for (size_t gi = 0; gi < G.generators().size(); ++gi) {
    const Permutation& g = G.generators()[gi];
    for (size_t f = 0; f < flags.size(); ++f) {
      auto [p, b] = flags[f];
      uf.unite(static_cast<int>(f), flag_index.at({g(p), gen_block_image[gi][b]}));
    }
  }
  std::set<int> roots;
  for (size_t f = 0; f < flags.size(); ++f) roots.insert(uf.find(static_cast<int>(f)));
  return static_cast<int>(roots.size());
}

}  // namespace symdes
