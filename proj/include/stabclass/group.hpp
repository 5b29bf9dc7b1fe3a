#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabclass {

using Element = std::uint32_t;

/// Raised for malformed group descriptions and violated group axioms.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group stored as a full multiplication table. Element 0 is the
/// identity. Copies share the immutable table.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table);

  std::size_t order() const { return data_->order; }
  const std::string& name() const { return data_->name; }
  Element mul(Element a, Element b) const { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const { return data_->inverse[a]; }
  static constexpr Element identity() { return 0; }

  std::size_t element_order(Element a) const;
  Element power(Element a, long long k) const;
  bool is_abelian() const;

  /// An element of order |G|, if the group is cyclic (least index wins).
  std::optional<Element> cyclic_generator() const;

  /// Direct-product factors when the group was built as A x B x ...; elements
  /// are then encoded in mixed radix with the last factor varying fastest.
  const std::vector<FiniteGroup>& factors() const { return data_->factors; }

  FiniteGroup renamed(std::string name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || (a.order() == b.order() && a.data_->table == b.data_->table);
  }

 private:
  struct Data {
    std::string name;
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<FiniteGroup> factors;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> images;

  Element operator()(Element g) const { return images[g]; }
  bool is_surjective() const;
};

/// Builds a homomorphism and checks that it preserves multiplication on all pairs.
GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<Element> images);

/// A surjection onto the cyclic group of order 2.
struct Character2 {
  GroupHom hom;
  std::vector<Element> kernel;  // sorted

  int value(Element g) const { return static_cast<int>(hom(g)); }
  bool is_trivial() const { return kernel.size() == hom.source.order(); }
};

/// The trivial character (not surjective); used for untwisted coefficients.
Character2 trivial_character(const FiniteGroup& g);

using Subgroup = std::vector<Element>;  // sorted element indices

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Closure of permutation generators; points are 1-based, `degree` >= max point.
FiniteGroup permutation_group(std::string name,
                              const std::vector<std::vector<std::vector<int>>>& generators_as_cycles,
                              std::size_t degree, std::size_t max_order = 5000);

/// Parses `Cn`, `Dn`, `S3`, `A4`, `Q8`, `V4`, `F21`, `perm[(1 2 3)(4 5), ...]` and
/// products joined with `x` or `×`.
FiniteGroup parse_group(std::string_view spec);

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);

/// Greedy generating set: walks elements in index order, keeping those not
/// already generated.
std::vector<Element> generating_set(const FiniteGroup& g);

/// A subgroup as a group in its own right, with the inclusion map.
struct MaterializedSubgroup {
  FiniteGroup group;
  GroupHom inclusion;
};
MaterializedSubgroup materialize(const FiniteGroup& g, const Subgroup& h, std::string name);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  std::vector<Element> coset_reps;  // least element of each coset, indexed by quotient element
};
Quotient quotient(const FiniteGroup& g, const Subgroup& normal, std::string name);

std::vector<Character2> orientation_characters(const FiniteGroup& g);

/// K normal of odd order with 2-group quotient P = G/K.
struct OddComplement {
  Subgroup kernel;
  MaterializedSubgroup k;
  Quotient p;
};
std::optional<OddComplement> odd_normal_complement(const FiniteGroup& g);

/// Automorphism of K given as an image table on K's own element indices.
struct KAutomorphism {
  Element rep;                 // coset representative in G
  std::vector<Element> images;
  bool inner = false;          // equals conjugation by some element of K
  bool is_identity() const;
};

/// For each coset representative g, the automorphism k -> g k g^{-1} of K.
std::vector<KAutomorphism> conjugation_action(const FiniteGroup& g, const MaterializedSubgroup& k,
                                              const std::vector<Element>& reps);

/// Character of G obtained from the 2-group quotient when |G/K| = 2.
Character2 character_from_complement(const FiniteGroup& g, const OddComplement& c);

/// Groups of order 2 mod 4 up to `max_order` reachable from the built-in
/// families: cyclic, dihedral, C2 x (odd abelian), dihedral x odd cyclic and
/// C2 x F21. Sorted by order then name.
std::vector<FiniteGroup> small_groups_2mod4(std::size_t max_order);

}  // namespace stabclass
