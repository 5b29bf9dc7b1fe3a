#include "stabclass/hypothesis.hpp"

#include "stabclass/cohomology.hpp"

namespace stabclass {

std::string to_string(ActionVerdictKind k) {
  switch (k) {
    case ActionVerdictKind::ProvedTrivial: return "proved_trivial";
    case ActionVerdictKind::ProvedNontrivial: return "proved_nontrivial";
    case ActionVerdictKind::TrivialUpTo: return "trivial_up_to";
  }
  return "?";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Applicable: return "applicable";
    case Conclusion::NotApplicable: return "not_applicable";
    case Conclusion::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::vector<std::vector<Element>> images_of(const std::vector<KAutomorphism>& autos) {
  std::vector<std::vector<Element>> out;
  for (const auto& a : autos) out.push_back(a.images);
  return out;
}

long mod_inverse(long a, long m) {
  Integer r;
  const Integer ai(a), mi(m);
  if (mpz_invert(r.get_mpz_t(), ai.get_mpz_t(), mi.get_mpz_t()) == 0) throw GroupError("exponent not invertible");
  return r.get_si();
}

// First generator moved by an action matrix, as (class, image) coordinates.
std::optional<std::pair<std::vector<long>, std::vector<long>>> moved_generator(const IntMatrix& act) {
  const std::size_t n = act.rows();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> col(n, 0);
    for (std::size_t j = 0; j < n; ++j) col[j] = act.get(j, i).get_si();
    std::vector<long> unit(n, 0);
    unit[i] = 1;
    if (col != unit) return std::make_pair(unit, col);
  }
  return std::nullopt;
}

ActionVerdict abelian_verdict(const FiniteGroup& g, const OddComplement& c, const std::vector<KAutomorphism>& autos) {
  ActionVerdict v;
  const FiniteGroup& k = c.k.group;
  const KAutomorphism* moved = nullptr;
  for (const auto& a : autos)
    if (!a.is_identity()) {
      moved = &a;
      break;
    }
  if (!moved) {
    v.kind = ActionVerdictKind::ProvedTrivial;
    v.method = "abelian kernel with trivial conjugation action; the induced action is trivial in every degree";
    return v;
  }
  v.kind = ActionVerdictKind::ProvedNontrivial;
  v.degree = 2;
  v.method = "abelian kernel: H^2(K;Z) = Hom(K,Q/Z) carries the dual of the conjugation action";
  ActionWitness w;
  w.degree = 2;
  w.rep = moved->rep;
  if (auto x = k.cyclic_generator()) {
    const long m = static_cast<long>(k.order());
    long s = 0;
    for (Element y = *x; y != moved->images[*x]; y = k.mul(y, *x)) ++s;
    s = (s + 1) % m;  // images[x] = x^s
    const long dual = mod_inverse(s, m);
    w.cohomology = AbelianGroup::cyclic(m).to_string();
    w.class_coords = {1};
    w.image_coords = {dual};
    w.description = "conjugation by element " + std::to_string(moved->rep) + " of " + g.name() + " sends x to x^" +
                    std::to_string(s) + " in K = " + w.cohomology + ", so it acts on H^2(K;Z) as multiplication by " +
                    std::to_string(dual);
  } else {
    Element moved_elem = 0;
    for (Element y = 0; y < k.order(); ++y)
      if (moved->images[y] != y) {
        moved_elem = y;
        break;
      }
    w.description = "conjugation by element " + std::to_string(moved->rep) + " of " + g.name() + " moves element " +
                    std::to_string(moved_elem) + " of K; a character separating it from its image is moved in H^2(K;Z)";
  }
  // Cross-check on the bar resolution when small enough.
  try {
    const auto cw = cohomology_with_action(k, {moved->images}, 2);
    w.cohomology = cw.group.to_string();
    if (auto mg = moved_generator(cw.action[0])) {
      if (w.class_coords.empty()) {
        w.class_coords = mg->first;
        w.image_coords = mg->second;
      }
      w.description += "; confirmed by a bar-resolution chain map";
    } else {
      w.description += "; WARNING: the bar-resolution computation saw no moved class";
    }
  } catch (const FeasibilityError&) {
  }
  v.witness = std::move(w);
  return v;
}

}  // namespace

ActionVerdict check_action_trivial(const FiniteGroup& g, const OddComplement& c, std::size_t max_degree) {
  const auto autos = conjugation_action(g, c.k, c.p.coset_reps);
  if (c.k.group.is_abelian()) return abelian_verdict(g, c, autos);
  ActionVerdict v;
  bool all_inner = true;
  for (const auto& a : autos) all_inner = all_inner && a.inner;
  if (all_inner) {
    v.kind = ActionVerdictKind::ProvedTrivial;
    v.method = "every coset representative acts on K by an inner automorphism, and inner automorphisms act trivially on cohomology";
    return v;
  }
  const auto images = images_of(autos);
  v.method = "induced action on H^q(K;Z) computed on the bar resolution";
  for (std::size_t q = 1; q <= max_degree; ++q) {
    CohomologyWithAction cw;
    try {
      cw = cohomology_with_action(c.k.group, images, q);
    } catch (const FeasibilityError&) {
      v.kind = ActionVerdictKind::TrivialUpTo;
      v.degree = q - 1;
      v.method += "; degree " + std::to_string(q) + " exceeds the dense size limit";
      return v;
    }
    for (std::size_t i = 0; i < autos.size(); ++i)
      if (auto mg = moved_generator(cw.action[i])) {
        v.kind = ActionVerdictKind::ProvedNontrivial;
        v.degree = q;
        ActionWitness w;
        w.degree = q;
        w.rep = autos[i].rep;
        w.cohomology = cw.group.to_string();
        w.class_coords = mg->first;
        w.image_coords = mg->second;
        w.description = "conjugation by element " + std::to_string(autos[i].rep) + " moves a generator of H^" +
                        std::to_string(q) + "(K;Z) = " + w.cohomology;
        v.witness = std::move(w);
        return v;
      }
  }
  v.kind = ActionVerdictKind::TrivialUpTo;
  v.degree = max_degree;
  return v;
}

HypothesisReport thom_simplification_applicable(const FiniteGroup& g, std::size_t max_degree) {
  HypothesisReport r;
  r.group = g.name();
  r.order = g.order();
  const auto c = odd_normal_complement(g);
  if (!c) {
    r.conclusion = Conclusion::NotApplicable;
    r.notes.push_back("no normal subgroup of odd order with 2-group quotient");
    return r;
  }
  r.decomposed = true;
  r.k_order = c->k.group.order();
  r.p_order = c->p.group.order();
  r.k_name = "K (order " + std::to_string(r.k_order) + ")";
  r.p_name = "P (order " + std::to_string(r.p_order) + ")";
  r.k_abelian = c->k.group.is_abelian();
  if (r.p_order == 1) {
    r.conclusion = Conclusion::NotApplicable;
    r.notes.push_back("G has odd order, so it has no orientation character and no unorientable bundles");
    return r;
  }
  r.verdict = check_action_trivial(g, *c, max_degree);
  switch (r.verdict->kind) {
    case ActionVerdictKind::ProvedTrivial:
      r.conclusion = Conclusion::Applicable;
      r.notes.push_back("bordism of Thom spectra over BG for bundles pulled back from BP reduces to BP");
      break;
    case ActionVerdictKind::ProvedNontrivial:
      r.conclusion = Conclusion::NotApplicable;
      r.notes.push_back("P acts nontrivially on H^" + std::to_string(r.verdict->degree) + "(K;Z)");
      break;
    case ActionVerdictKind::TrivialUpTo:
      r.conclusion = Conclusion::Undetermined;
      r.notes.push_back("action trivial through degree " + std::to_string(r.verdict->degree) +
                        " only; triviality in all degrees is not decided");
      break;
  }
  return r;
}

}  // namespace stabclass
