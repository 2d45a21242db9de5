#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pqa/budget.hpp"
#include "pqa/pring.hpp"

namespace pqa {

/// Sequence w_1..w_d of p-monomials generating I; I_t = (w_i^{t_i}).
struct SequenceSpec {
  std::vector<PMonomial> entries;
  Vec t;  // one exponent per entry, all >= 1
};

/// One graded slot: the exponent class `label` carries the group Z/p^c.
struct Slot {
  Vec label;
  long long c = 1;
};

/// Action of one multiplier on one slot: x -> p^ppow * x transported into
/// `slot`; slot < 0 means the image is zero.
struct SlotTarget {
  int slot = -1;
  long long ppow = 0;
};

/// Finite Z^n-graded module: a direct sum of cyclic p-groups with monomial
/// actions. Multiplication by p (same slot, one extra p) is implicit.
/// Well-definedness invariant: ppow + c(source) >= c(target) for every action.
struct FiniteGradedModule {
  long long prime = 2;
  std::vector<Slot> slots;
  std::vector<std::vector<SlotTarget>> ring_actions;  // one row per ring multiplier
  std::vector<std::vector<SlotTarget>> seq_actions;   // one row per sequence entry

  long long fp_length() const;  // sum of the c_i (log_p of the element count)
};

/// Ordered generators m_1..m_L; step j is valid when every sequence action
/// sends m_j into the submodule generated by m_1..m_{j-1}.
struct FiltrationCertificate {
  std::vector<Vec> elements;  // slot-coefficient vectors
};

struct BuildOutcome {
  bool finite = false;
  FiniteGradedModule module;  // valid iff finite
  std::string reason;         // explanation when not finite
};

/// Graded pieces of R / (I_t + defining ideal): for each surviving exponent
/// class, the minimal p-power c with p^c x^class in the ideal. Finiteness is
/// detected on an exponent box; a nonzero class on the box shell propagates
/// to infinitely many classes and yields NotFinite (a value, not an error).
BuildOutcome build_quotient_module(const RingDescriptor& ring, const SequenceSpec& seq,
                                   const Budget& budget = {});

/// Exact check of the certificate invariants; a pass proves L <= length.
bool verify_certificate(const FiniteGradedModule& m, const FiltrationCertificate& cert);

/// Deterministic certified upper bound: socle-greedy when the socle is small
/// enough to enumerate, slot-by-slot filtration otherwise. Always verifies.
FiltrationCertificate greedy_upper_bound(const FiniteGradedModule& m, const Budget& budget = {});

struct QuasilengthResult {
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  FiltrationCertificate certificate;  // witnesses the upper bound
};

/// Branch-and-bound minimization over filtrations, memoized on a canonical
/// submodule form. `alpha` is an upper bound on the F_p-length of any cyclic
/// I-annihilated factor (0 = unknown); it seeds the lower bound
/// ceil(fp_length / alpha). `start` generates the submodule to filter from
/// (the result then measures M / <start>). Budget exhaustion degrades to
/// bounds, never to wrong answers.
QuasilengthResult exact_quasilength(const FiniteGradedModule& m, const Budget& budget = {},
                                    long long alpha = 0, const std::vector<Vec>& start = {});

struct GridPointResult {
  Vec t;
  bool finite = false;
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  mpq_class normalized_lower;  // lower / prod(t), zero when not finite
  mpq_class normalized_upper;
};

struct ContentEstimate {
  std::vector<GridPointResult> grid;
  std::string verdict;  // consistent-with-Q-sequence | inconsistent | inconclusive
  long long alpha = 0;  // per-factor length bound used (0 = unknown)
};

/// Evaluates the sequence over a grid of exponent tuples and aggregates a
/// heuristic verdict: consistent when every point is exact with normalized
/// value 1; inconsistent when the deepest diagonal point has normalized upper
/// bound below 1 - 1/min(t); inconclusive otherwise. Grid points run in
/// parallel (OpenMP) unless `parallel` is false; PQA_THREADS caps the thread
/// count. Results are deterministic regardless of thread count.
ContentEstimate content_estimate(const RingDescriptor& ring, const std::vector<PMonomial>& entries,
                                 const std::vector<Vec>& grid, const Budget& budget = {},
                                 bool parallel = true);

}  // namespace pqa
