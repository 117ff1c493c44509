#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/covers.hpp"
#include "toric/posets.hpp"

namespace toric {

struct ArrangementDigest {
  int rank = 0;
  int hypersurfaces = 0;
  bool central = false;
  bool primitive = false;
  bool essential = false;
  bool supersolvable = false;
  bool strictly_supersolvable = false;
};

struct PrimeVerdict {
  enum class Status { NonBlochKato, Inconclusive };

  unsigned p = 0;
  Status status = Status::Inconclusive;
  std::optional<CoverMatrix> cover;
  std::vector<NonGenerationWitness> witnesses;
  std::string reason;  // set when inconclusive
};

struct ObstructionReport {
  ArrangementDigest digest;
  std::vector<unsigned> exceptional_primes;
  bool exceptional_primes_known = false;  // false when rank < 2 or not primitive
  std::vector<PrimeVerdict> verdicts;
  int search_depth_used = 0;
};

ArrangementDigest digest_of(const ToricArrangement& arr);

/// The finitely many primes that could be exceptional (line_count <= n)
/// plus the smallest prime beyond them.
std::vector<unsigned> default_primes(const ToricArrangement& arr);

/// Per-prime obstruction verdicts. Non-exceptional primes get a degree-p
/// cover with a deck-orbit witness (plus the Betti witness when it fires);
/// exceptional primes trigger a sublattice search over determinants
/// p..p^search_depth for a cover whose lift carries a Betti witness.
ObstructionReport analyze(const ToricArrangement& arr, const std::vector<unsigned>& primes,
                          int search_depth);

/// Re-checks every certificate in the report from scratch. Appends one
/// message per failure to diagnostics when given.
bool verify_report(const ToricArrangement& arr, const ObstructionReport& report,
                   std::vector<std::string>* diagnostics = nullptr);

}  // namespace toric
