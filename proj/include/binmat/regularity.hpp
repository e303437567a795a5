#pragma once

#include <optional>
#include <vector>

#include "binmat/fourier.hpp"
#include "binmat/gf2.hpp"
#include "binmat/rational.hpp"

namespace binmat {

struct CosetVerdict {
    Vec rep = 0;              // canonical coset shift
    long long size = 0;       // |X ∩ (H + rep)|
    Rat density;              // size / |H|
    bool uniform = true;      // translated slice eps-uniform inside H
    std::optional<Vec> witness_character;  // internal to H, set when not uniform
};

struct RegularityReport {
    Subspace subspace;  // H
    int codim = 0;
    Rat epsilon;
    Rat alpha;  // |X| / 2^n
    std::vector<CosetVerdict> cosets;      // reps ascending; coset of 0 first
    std::vector<std::size_t> sparse_set;   // indices with density < alpha/2
    std::vector<std::size_t> bad_set;      // indices failing uniformity
    bool regular = false;                  // |bad_set| <= eps * 2^codim
    Rat energy;                            // mean square coset density
};

/// Per-coset verdicts for H against X: restrict X to each coset, translate by
/// the canonical shift, and test eps-uniformity inside H (spectrum in H's
/// basis coordinates). eps must be in (0, 1/2).
RegularityReport is_epsilon_regular(const Subspace& h, const PointSet& x, const Rat& eps);

struct RefineResult {
    bool success = false;  // a regular subspace was reached within the codim budget
    RegularityReport report;
    std::vector<Rat> energy_trace;  // one entry per inspected subspace
    int iterations = 0;
};

/// Iterative refinement: start at the full space; while not regular, lift the
/// worst character of each failing coset to a full-space character and adjoin
/// the most frequent one (ties: least value) to H's dual. Energy never
/// decreases and the codimension grows by one per round, so the loop runs at
/// most max_codim times. success=false reports the last state reached.
RefineResult refine_to_regular(const PointSet& x, const Rat& eps, int max_codim);

struct KeyLemmaWitness {
    AffineFlat flat;       // H + a0; linear when a0 = 0
    Vec good_coset = 0;    // a0
    Rat epsilon_used;      // alpha^3 / 9
    bool verified = false; // every point of the flat confirmed inside X+X+X
    bool linear = false;
};

struct KeyLemmaResult {
    KeyLemmaWitness witness;
    RefineResult refine;
};

/// Runs refine_to_regular at eps = alpha^3/9, then picks the least coset that
/// is neither sparse (density < alpha/2) nor bad, and exhaustively verifies
/// its flat inside the triple-sum support. Requires |x| >= alpha * 2^n.
/// Throws budget_error if refinement runs out of codimension, internal_error
/// if no good coset exists (that would falsify the refinement guarantees).
KeyLemmaResult key_lemma_witness(const PointSet& x, const Rat& alpha, int max_codim);

}  // namespace binmat
