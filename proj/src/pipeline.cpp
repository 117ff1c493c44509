#include "toric/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/layers.hpp"

namespace toric {

namespace {

struct SupersolvabilityFlags {
  bool supersolvable = false;
  bool strictly = false;
};

SupersolvabilityFlags supersolvability_of(const ToricArrangement& arr) {
  LayerPoset lp = layer_poset(arr);
  posets::FinitePoset fp = to_finite_poset(lp);
  if (posets::bottom(fp) < 0 || !posets::is_pure(fp)) return {};
  SupersolvabilityFlags f;
  f.supersolvable = posets::supersolvable(fp).has_value();
  f.strictly = f.supersolvable && posets::strictly_supersolvable(fp).has_value();
  return f;
}

}  // namespace

ArrangementDigest digest_of(const ToricArrangement& arr) {
  ArrangementDigest d;
  d.rank = arr.rank;
  d.hypersurfaces = arr.size();
  d.central = is_central(arr);
  d.primitive = is_primitive(arr);
  d.essential = is_essential(arr);
  SupersolvabilityFlags f = supersolvability_of(arr);
  d.supersolvable = f.supersolvable;
  d.strictly_supersolvable = f.strictly;
  return d;
}

std::vector<unsigned> default_primes(const ToricArrangement& arr) {
  std::vector<unsigned> out;
  unsigned p = 2;
  if (arr.rank >= 2) {
    for (; line_count(p, arr.rank) <= arr.size(); ++p)
      if (is_prime(p)) out.push_back(p);
  }
  while (!is_prime(p)) ++p;
  out.push_back(p);
  return out;
}

ObstructionReport analyze(const ToricArrangement& arr, const std::vector<unsigned>& primes,
                          int search_depth) {
  auto errors = validate(arr);
  if (!errors.empty()) throw std::invalid_argument("invalid arrangement: " + errors.front());
  ObstructionReport report;
  report.digest = digest_of(arr);
  report.search_depth_used = search_depth;

  const ArrangementDigest& d = report.digest;
  if (d.primitive && d.rank >= 2) {
    report.exceptional_primes = exceptional_primes(arr);
    report.exceptional_primes_known = true;
  }

  std::vector<std::string> unmet;
  if (!d.central) unmet.push_back("central");
  if (!d.essential) unmet.push_back("essential");
  if (!d.primitive) unmet.push_back("primitive");
  if (!d.supersolvable) unmet.push_back("supersolvable");

  std::vector<unsigned> ps = primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  for (unsigned p : ps) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    PrimeVerdict v;
    v.p = p;
    if (!unmet.empty()) {
      v.status = PrimeVerdict::Status::Inconclusive;
      v.reason = "hypotheses unmet: ";
      for (size_t i = 0; i < unmet.size(); ++i) v.reason += (i ? ", " : "") + unmet[i];
      report.verdicts.push_back(std::move(v));
      continue;
    }
    if (!is_phi_p_surjective(arr, p)) {
      auto cover = build_p_cover(arr, p);
      if (!cover) throw std::logic_error("phi_p not surjective but no cover built");
      v.status = PrimeVerdict::Status::NonBlochKato;
      v.cover = *cover;
      auto orbit = orbit_witness(arr, *cover);
      if (!orbit) throw std::logic_error("degree-p cover without a nonsingleton orbit");
      v.witnesses.push_back(std::move(*orbit));
      PoincarePolynomial pp = poincare(char_poly(layer_poset(lift(arr, *cover))), arr.rank);
      if (auto betti = betti_witness(pp)) v.witnesses.push_back(std::move(*betti));
    } else {
      // exceptional prime: search p-power sublattices for a Betti witness
      bool found = false;
      Int det = 1;
      for (int k = 1; k <= search_depth && !found; ++k) {
        det *= p;
        for (const CoverMatrix& m : sublattice_covers(arr.rank, det)) {
          ToricArrangement lifted = lift(arr, m);
          PoincarePolynomial pp = poincare(char_poly(layer_poset(lifted)), arr.rank);
          if (auto betti = betti_witness(pp)) {
            v.status = PrimeVerdict::Status::NonBlochKato;
            v.cover = m;
            v.witnesses.push_back(std::move(*betti));
            found = true;
            break;
          }
        }
      }
      if (!found) {
        v.status = PrimeVerdict::Status::Inconclusive;
        v.reason = "phi_p surjective; search exhausted to depth " + std::to_string(search_depth);
      }
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

namespace {

void fail(std::vector<std::string>* diagnostics, bool& ok, const std::string& msg) {
  ok = false;
  if (diagnostics) diagnostics->push_back(msg);
}

bool is_p_power(Int n, unsigned p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool verify_report(const ToricArrangement& arr, const ObstructionReport& report,
                   std::vector<std::string>* diagnostics) {
  bool ok = true;
  ArrangementDigest d = digest_of(arr);
  const ArrangementDigest& rd = report.digest;
  if (d.rank != rd.rank || d.hypersurfaces != rd.hypersurfaces || d.central != rd.central ||
      d.primitive != rd.primitive || d.essential != rd.essential ||
      d.supersolvable != rd.supersolvable ||
      d.strictly_supersolvable != rd.strictly_supersolvable)
    fail(diagnostics, ok, "digest flags disagree with the arrangement");
  if (report.exceptional_primes_known) {
    if (!d.primitive || d.rank < 2)
      fail(diagnostics, ok, "exceptional primes claimed but not computable");
    else if (report.exceptional_primes != exceptional_primes(arr))
      fail(diagnostics, ok, "exceptional prime set disagrees");
  }
  bool hypotheses = d.central && d.essential && d.primitive && d.supersolvable;
  for (const PrimeVerdict& v : report.verdicts) {
    std::string tag = "p=" + std::to_string(v.p) + ": ";
    if (!is_prime(v.p)) {
      fail(diagnostics, ok, tag + "not a prime");
      continue;
    }
    if (v.status == PrimeVerdict::Status::Inconclusive) {
      if (v.cover || !v.witnesses.empty())
        fail(diagnostics, ok, tag + "inconclusive verdict carries a certificate");
      continue;
    }
    if (!hypotheses) {
      fail(diagnostics, ok, tag + "NonBlochKato verdict without the theorem hypotheses");
      continue;
    }
    if (!v.cover) {
      fail(diagnostics, ok, tag + "NonBlochKato verdict without a cover");
      continue;
    }
    Int degree = v.cover->degree();
    if (!is_p_power(degree, v.p))
      fail(diagnostics, ok, tag + "cover degree " + degree.get_str() + " is not a power of p");
    if (v.witnesses.empty()) fail(diagnostics, ok, tag + "no witnesses attached");
    for (const NonGenerationWitness& w : v.witnesses) {
      if (w.kind == NonGenerationWitness::Kind::BettiInequality) {
        PoincarePolynomial pp;
        try {
          pp = poincare(char_poly(layer_poset(lift(arr, *v.cover))), arr.rank);
        } catch (const std::exception& e) {
          fail(diagnostics, ok, tag + "lift poset rejected: " + e.what());
          continue;
        }
        if (pp.betti(1) != w.b1 || pp.betti(2) != w.b2)
          fail(diagnostics, ok, tag + "stored Betti numbers disagree with the lift");
        if (w.b2 <= w.b1 * (w.b1 - 1) / 2)
          fail(diagnostics, ok, tag + "Betti inequality does not hold");
      } else {
        if (!w.cover || !(*w.cover == *v.cover))
          fail(diagnostics, ok, tag + "orbit witness cover disagrees with the verdict cover");
        if (w.orbit.size() < 2) {
          fail(diagnostics, ok, tag + "orbit witness with fewer than 2 layers");
          continue;
        }
        try {
          orbit_witness(arr, *v.cover);  // hypotheses + deck invariance of the lift
        } catch (const std::exception& e) {
          fail(diagnostics, ok, tag + std::string("orbit hypotheses fail: ") + e.what());
          continue;
        }
        ToricArrangement lifted = lift(arr, *v.cover);
        if (!is_primitive(lifted) || !validate(lifted).empty())
          fail(diagnostics, ok, tag + "lifted arrangement is not a valid primitive arrangement");
        LayerPoset lp = layer_poset(lifted);
        std::vector<Layer> points = zero_dim_layers(lp);
        DeckGroup deck = deck_group(*v.cover);
        for (const Layer& l : w.orbit) {
          if (l.dim() != 0) fail(diagnostics, ok, tag + "orbit member of positive dimension");
          if (std::find(points.begin(), points.end(), l) == points.end())
            fail(diagnostics, ok, tag + "orbit member is not a layer of the lift");
        }
        // the stored orbit must be exactly the deck orbit of its members
        std::vector<Layer> actual;
        for (const TorsionVector& u : deck.elements) {
          Layer t = translate(w.orbit.front(), u);
          if (std::find(actual.begin(), actual.end(), t) == actual.end())
            actual.push_back(std::move(t));
        }
        auto by_cmp = [](const Layer& x, const Layer& y) { return cmp(x, y) < 0; };
        std::vector<Layer> stored = w.orbit;
        std::sort(stored.begin(), stored.end(), by_cmp);
        std::sort(actual.begin(), actual.end(), by_cmp);
        if (stored != actual)
          fail(diagnostics, ok, tag + "stored orbit differs from the deck orbit of its members");
      }
    }
  }
  return ok;
}

}  // namespace toric
