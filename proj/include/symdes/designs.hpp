#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "symdes/core_params.hpp"
#include "symdes/incidence.hpp"
#include "symdes/permgroup.hpp"

namespace symdes {

// Raised by verify_design and friends; carries the offending witness.
struct DesignError : std::runtime_error {
  std::string witness;
  DesignError(const std::string& what, std::string w)
      : std::runtime_error(what + " [witness: " + w + "]"), witness(std::move(w)) {}
};

// Exhaustive check that D is a non-trivial symmetric 2-design; returns the
// parameters.  Errors carry a witness (offending block or point pair).
DesignParams verify_design(const IncidenceStructure& D);

IncidenceStructure complement(const IncidenceStructure& D);

// Finite group as a literal multiplication table.  Latin-square property and
// (for n <= 32) associativity are validated on construction.
struct GroupTable {
  int n = 0;
  int identity = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
};

void validate(const GroupTable& G);

GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& A, const GroupTable& B);

// The order-16 groups, by explicit normal-form multiplication laws.
GroupTable elementary_abelian_16();                   // Z2^4
GroupTable z4_x_z4();
GroupTable z2_x_z8();
GroupTable z2_x_z2_x_z4();
GroupTable dihedral_16();                             // Z8 : Z2, a^b = a^-1
GroupTable semidihedral_16();                         // Z8 : Z2, a^b = a^3
GroupTable modular_16();                              // Z8 : Z2, a^b = a^5
GroupTable quaternion_16();
GroupTable d8_x_z2();
GroupTable q8_x_z2();
GroupTable z4_semi_z4();                              // Z4 : Z4, inverting
GroupTable z4xz2_semi_z2();                           // (Z4 x Z2) : Z2
GroupTable pauli_16();                                // central product D8 * Z4

// blocks = left translates gD; throws DesignError if translates collide.
IncidenceStructure develop_difference_set(const GroupTable& G,
                                          const std::vector<int>& D);

// All k-subsets containing the identity whose difference multiset covers
// every non-identity element exactly lambda = k(k-1)/(n-1) times.
// Immediately empty when lambda is not integral.
std::vector<std::vector<int>> search_difference_sets(const GroupTable& G, int k);

// blocks = orbit of B under G (set action); G must be transitive and the
// orbit must have size = degree, else DesignError.
IncidenceStructure design_from_base_block(const PermutationGroup& G,
                                          const std::vector<int>& B);

// Full automorphism group via backtracking over point images with
// forward-checked block-image masks.  Guaranteed envelope v <= 64.
// D must verify as a symmetric design first (verify_design is called).
PermutationGroup automorphism_group(const IncidenceStructure& D);

struct ProfileViolation {
  std::vector<int> block;
  int class1, class2;  // indices of classes met in distinct nonzero sizes
  int size1, size2;
};

// Constant l with every |B ∩ class| in {0, l}, or a violation witness.
// P must partition [0, v) into equal-size classes (BlockSystem invariant).
std::variant<int, ProfileViolation> partition_profile(const IncidenceStructure& D,
                                                      const BlockSystem& P);

}  // namespace symdes
