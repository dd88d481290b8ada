#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symdes/bigint.hpp"
#include "symdes/incidence.hpp"

namespace symdes {

// A permutation of [0, n) stored by images.  Products compose left-to-right:
// (g * h)(x) = h(g(x)), i.e. "apply g, then h".
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity

  static Permutation identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& h) const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

// Cycle notation, e.g. "(0 1 2)(3 4)"; commas also accepted as separators.
Permutation parse_cycles(const std::string& s, int degree);

// Deterministic stabilizer chain (no randomisation; orbits built in BFS
// order, new base points = smallest moved point of the offending residue).
class StabChain {
 public:
  explicit StabChain(int degree, std::vector<int> seed_base = {});

  bool contains(const Permutation& g) const;
  void add(const Permutation& g);  // no-op when g is already a member
  Bigint order() const;
  int degree() const { return deg; }
  std::vector<int> base() const;
  // Strong generators fixing the first `level` base points pointwise;
  // level 0 returns generators of the whole group.
  std::vector<Permutation> strong_generators(size_t level) const;

 private:
  struct Level {
    int beta;
    std::vector<Permutation> gens;
    std::map<int, Permutation> transversal;  // p -> u with u(beta) = p
  };
  int deg;
  std::vector<Level> levels;

  std::pair<Permutation, size_t> strip(Permutation g, size_t from) const;
  void insert_residue(Permutation h, size_t level);
  void complete();
  void rebuild_transversal(size_t level);
};

class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return deg; }
  const std::vector<Permutation>& generators() const { return gens; }

  std::vector<int> orbit(int x) const;  // sorted
  Bigint order() const;
  bool is_transitive() const;
  PermutationGroup stabilizer(int x) const;

  // The chain is built lazily; first access is internally synchronised so a
  // shared group value may be queried from several threads.
  const StabChain& chain() const;

 private:
  int deg;
  std::vector<Permutation> gens;
  mutable std::once_flag chain_once;
  mutable std::unique_ptr<StabChain> chain_;
};

struct BlockSystem {
  std::vector<std::vector<int>> classes;  // each sorted, ordered by minimum
  bool operator==(const BlockSystem&) const = default;
};

// All minimal non-trivial block systems of a transitive group; empty iff
// primitive.  Throws for intransitive input.
std::vector<BlockSystem> minimal_block_systems(const PermutationGroup& G);

// Number of G-orbits on incident (point, block) pairs.  Every generator must
// map blocks to blocks; violations throw naming the generator index.
int flag_orbit_count(const IncidenceStructure& D, const PermutationGroup& G);

}  // namespace symdes
