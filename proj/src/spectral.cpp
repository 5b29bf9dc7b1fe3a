#include "stabclass/spectral.hpp"

#include "stabclass/bordism.hpp"
#include "stabclass/cohomology.hpp"

namespace stabclass {

std::string to_string(PageKind k) {
  return k == PageKind::LHSCohomological ? "LHS-cohomological" : "AHSS-homological";
}

const E2Entry& E2Page::at(std::size_t p, std::size_t q) const {
  auto it = entries.find({p, q});
  if (it == entries.end())
    throw DomainError("E2 entry (" + std::to_string(p) + "," + std::to_string(q) + ") outside the computed range");
  return it->second;
}

namespace {

// H^q(K;Z) as a P-module, or nullopt when the action cannot be computed.
std::optional<GModule> kernel_cohomology_module(const FiniteGroup& p, const FiniteGroup& k,
                                                const std::vector<KAutomorphism>& autos, const AbelianGroup& hq,
                                                std::size_t q, std::string& note) {
  bool all_inner = true;
  for (const auto& a : autos) all_inner = all_inner && (a.inner || a.is_identity());
  if (all_inner || q == 0 || hq.is_zero()) return trivial_module(p, hq);
  const std::size_t gens = hq.rank + hq.torsion.size();
  std::vector<IntMatrix> action;
  if (auto x = k.cyclic_generator(); x && q % 2 == 0 && gens == 1) {
    // H^{2j}(C_m; Z) = Z/m; an automorphism x -> x^s acts through s^{-j}.
    const long m = static_cast<long>(k.order());
    for (const auto& a : autos) {
      long s = 1;
      for (Element y = *x; y != a.images[*x]; y = k.mul(y, *x)) ++s;
      Integer inv, base(s), mod(m), out;
      mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
      mpz_powm_ui(out.get_mpz_t(), inv.get_mpz_t(), q / 2, mod.get_mpz_t());
      action.push_back(IntMatrix::diagonal({out}, 1, 1));
    }
    note = "action through the dual of the conjugation action";
  } else {
    std::vector<std::vector<Element>> images;
    for (const auto& a : autos) images.push_back(a.images);
    try {
      auto cw = cohomology_with_action(k, images, q);
      if (!(cw.group == hq)) throw LinalgError("bar and product resolutions disagree on H^q(K;Z)");
      action = std::move(cw.action);
      note = "action computed on the bar resolution of K";
    } catch (const FeasibilityError& e) {
      note = std::string("action not computed: ") + e.what();
      return std::nullopt;
    }
  }
  GModule m = trivial_module(p, hq);
  m.action = std::move(action);
  validate_module(m);
  return m;
}

}  // namespace

E2Page lhs_e2_page(const FiniteGroup& g, const OddComplement& c, const Character2& twist_on_p, std::size_t range) {
  const FiniteGroup& p = c.p.group;
  const FiniteGroup& k = c.k.group;
  if (!(twist_on_p.hom.source == p)) throw GroupError("twist must be a character of the quotient P");
  E2Page page;
  page.kind = PageKind::LHSCohomological;
  page.title = "LHS E2 for " + g.name() + ": H^p(P; H^q(K;Z) twisted)";
  page.range = range;
  const auto autos = conjugation_action(g, c.k, c.p.coset_reps);
  bool trivial_action = true;
  for (const auto& a : autos) trivial_action = trivial_action && (a.inner || a.is_identity());
  if (!trivial_action)
    page.notes.push_back("P acts nontrivially on K; entries use the actual induced action, so the trivial-action form of the page does not apply");
  const auto hk = cohomology_range(best_resolution(k, range), trivial_module(k, AbelianGroup::integers()), range);
  const Resolution rp = best_resolution(p, range);
  for (std::size_t q = 0; q <= range; ++q) {
    std::string note;
    const auto mq = kernel_cohomology_module(p, k, autos, hk[q], q, note);
    const std::size_t top = range - q;
    if (!mq) {
      for (std::size_t pp = 0; pp <= top; ++pp) page.entries[{pp, q}] = E2Entry{std::nullopt, note};
      continue;
    }
    const GModule twisted = twist(*mq, twist_on_p);
    const auto col = cohomology_range(rp, twisted, top);
    for (std::size_t pp = 0; pp <= top; ++pp)
      page.entries[{pp, q}] = E2Entry{col[pp], "H^" + std::to_string(q) + "(K;Z) = " + hk[q].to_string() +
                                                   (note.empty() ? "" : "; " + note)};
  }
  return page;
}

std::vector<AbelianGroup> change_coefficients(const std::vector<AbelianGroup>& integral, const AbelianGroup& a) {
  std::vector<AbelianGroup> out;
  for (std::size_t n = 0; n < integral.size(); ++n) {
    AbelianGroup h = integral[n].tensor(a);
    if (n > 0) h = h.direct_sum(integral[n - 1].tor(a));
    out.push_back(h);
  }
  return out;
}

std::vector<AbelianGroup> twisted_thom_homology(const Character2& alpha, std::size_t max_n) {
  const FiniteGroup& g = alpha.hom.source;
  return homology_range(best_resolution(g, max_n), twisted_integers(alpha), max_n);
}

E2Page ahss_e2_page(const std::vector<AbelianGroup>& x_homology, const std::string& structure, std::size_t range,
                    const std::string& x_name) {
  const auto& table = coefficient_table(structure);
  if (x_homology.size() < range + 1) throw DomainError("homology of " + x_name + " not supplied through degree " + std::to_string(range));
  E2Page page;
  page.kind = PageKind::AHSSHomological;
  page.title = "AHSS E2 for " + structure + "-bordism of " + x_name;
  page.range = range;
  for (std::size_t q = 0; q <= range; ++q) {
    auto it = table.degrees.find(q);
    for (std::size_t p = 0; p + q <= range; ++p) {
      if (it == table.degrees.end()) {
        page.entries[{p, q}] = E2Entry{std::nullopt, "Omega_" + std::to_string(q) + "^" + structure + " not tabulated"};
        continue;
      }
      const std::vector<AbelianGroup> prefix(x_homology.begin(), x_homology.begin() + p + 1);
      page.entries[{p, q}] =
          E2Entry{change_coefficients(prefix, it->second.group)[p],
                  "H_" + std::to_string(p) + "(" + x_name + "; " + it->second.group.to_string() + "), coefficients: " +
                      it->second.citation};
    }
  }
  return page;
}

DiagonalReport diagonal_report(const E2Page& page, std::size_t n) {
  DiagonalReport rep;
  rep.degree = n;
  const bool homological = page.kind == PageKind::AHSSHomological;
  auto lookup = [&](long p, long q) -> std::optional<AbelianGroup> {
    if (p < 0 || q < 0) return AbelianGroup::zero();
    auto it = page.entries.find({static_cast<std::size_t>(p), static_cast<std::size_t>(q)});
    if (it == page.entries.end()) return std::nullopt;
    return it->second.group;
  };
  auto describe = [](long p, long q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
  Integer bound = 1;
  bool finite = true;
  rep.collapse = true;
  for (long p = 0; p <= static_cast<long>(n); ++p) {
    const long q = static_cast<long>(n) - p;
    const auto e = lookup(p, q);
    if (!e) {
      finite = false;
      rep.collapse = false;
      rep.reasons.push_back("entry " + describe(p, q) + " unknown");
      continue;
    }
    if (e->is_zero()) continue;
    rep.entries.push_back({{p, q}, *e});
    if (e->is_finite())
      bound *= e->order();
    else
      finite = false;
    // Differentials d_r for r >= 2 leaving and entering this entry.
    for (long r = 2; r <= static_cast<long>(n) + 2; ++r) {
      const long tp = homological ? p - r : p + r, tq = homological ? q + r - 1 : q - r + 1;
      const long sp = homological ? p + r : p - r, sq = homological ? q - r + 1 : q + r - 1;
      for (const auto& [xp, xq, dir] : {std::tuple{tp, tq, "to"}, std::tuple{sp, sq, "from"}}) {
        if (xp < 0 || xq < 0) continue;
        const auto other = lookup(xp, xq);
        if (other && other->is_zero()) continue;
        rep.collapse = false;
        rep.reasons.push_back("d_" + std::to_string(r) + " " + dir + " " + describe(xp, xq) + (other ? " is not zero" : " is not known"));
      }
    }
  }
  if (finite) rep.order_bound = bound;
  if (rep.collapse) rep.reasons.push_back("every differential into or out of the diagonal has zero source or zero target");
  return rep;
}

}  // namespace stabclass
