#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabclass/group.hpp"
#include "stabclass/linalg.hpp"

namespace stabclass {

enum class PageKind { LHSCohomological, AHSSHomological };
std::string to_string(PageKind k);

/// An entry is unknown when its input data is not available in range.
struct E2Entry {
  std::optional<AbelianGroup> group;
  std::string note;
};

struct E2Page {
  PageKind kind = PageKind::LHSCohomological;
  std::string title;
  std::size_t range = 0;  // entries present for p + q <= range
  std::map<std::pair<std::size_t, std::size_t>, E2Entry> entries;
  std::vector<std::string> notes;

  const E2Entry& at(std::size_t p, std::size_t q) const;
};

/// E2^{p,q} = H^p(P; H^q(K;Z) twisted by the character) for p + q <= range.
E2Page lhs_e2_page(const FiniteGroup& g, const OddComplement& c, const Character2& twist_on_p, std::size_t range);

/// H_n(X; A) = H_n(X) (x) A + Tor(H_{n-1}(X), A) for each degree of the input.
std::vector<AbelianGroup> change_coefficients(const std::vector<AbelianGroup>& integral, const AbelianGroup& a);

/// Homology of the Thom spectrum of a rank-zero virtual bundle with
/// orientation character alpha, i.e. H_n(BG; Z_alpha) in degrees 0..max_n.
/// For trivial alpha this is the homology of BG with a disjoint basepoint.
std::vector<AbelianGroup> twisted_thom_homology(const Character2& alpha, std::size_t max_n);

/// E^2_{p,q} = H_p(X; Omega_q^structure) for p + q <= range, from the integral
/// homology of X in degrees 0..range.
E2Page ahss_e2_page(const std::vector<AbelianGroup>& x_homology, const std::string& structure, std::size_t range,
                    const std::string& x_name = "X");

struct DiagonalReport {
  std::size_t degree = 0;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, AbelianGroup>> entries;  // nonzero entries
  std::optional<Integer> order_bound;  // absent if some entry is infinite or unknown
  bool collapse = false;
  std::vector<std::string> reasons;
};

/// Collapse is certified when every differential touching the diagonal has
/// a zero source or a zero target; unknown entries count as nonzero.
DiagonalReport diagonal_report(const E2Page& page, std::size_t n);

}  // namespace stabclass
