#pragma once

// Threshold pipelines: turn a bound pair for u_n into explicit hold points
// for the order-3 log-monotonicity inequalities (respectively the order-2
// Laguerre bound inequality), take the maximum together with the bounds'
// validity start, and refine to the true minimal start by exact scanning of
// the initial window.
//
// Index convention: "the sequence from M on is 3-log-monotonic" means the
// three u-inequalities hold at every index n >= M + 1; the Laguerre claim
// "from M on" means L_2(a_n) > 0 for every n >= M. Reports state which
// convention they use.

#include "holocert/bounds.hpp"
#include "holocert/recurrence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holocert {

struct Thresholds4 {
    index_t N2;  // g > 1 from here
    index_t N3;  // g(n) - f(n+1) > 0 from here
    index_t N4;  // g(n-1) g(n+1) - f(n)^2 > 0 from here
    index_t N;   // max(valid_from, N2, N3, N4)
};

// Hold points are computed from `anchor` (normally offset + 1, the first
// index where u is defined); N4's expression needs g at n-1, so it starts
// at anchor + 1. Throws inapplicable_error when any hold point is "never".
Thresholds4 theorem4_thresholds(const BoundPair& pair, index_t anchor);

struct Thresholds5 {
    index_t N2;  // g(n-1) g(n)^2 g(n+1) - 4 f(n) + 3 > 0 from here
    index_t N;   // max(valid_from, N2)
};

Thresholds5 theorem5_threshold(const BoundPair& pair, index_t anchor);

struct LogMono3Refinement {
    index_t horizon = 0;
    std::optional<index_t> last_violation;  // largest scanned index violating any inequality
    index_t refined_start = 0;              // claim start M: u-inequalities hold on (M, horizon]
    std::vector<index_t> boundary_indices;  // exact-zero evaluations (counted as violations)
    std::size_t violation_count = 0;
};

// Exact scan of the three u-inequalities over [offset+1, horizon].
LogMono3Refinement refine_threshold_logmono3(SequenceCache& cache, index_t N, index_t horizon);

struct Laguerre2Refinement {
    index_t horizon = 0;
    std::optional<index_t> last_violation;  // largest n with L_2(a_n) <= 0
    index_t refined_start = 0;              // claim start M: L_2(a_n) > 0 for n in [M, horizon]
    std::vector<index_t> boundary_indices;
    std::size_t violation_count = 0;
};

// Exact scan of L_2(a_n) > 0 over [offset, horizon].
Laguerre2Refinement refine_threshold_laguerre2(SequenceCache& cache, index_t N, index_t horizon);

struct PipelineOptions {
    std::optional<index_t> horizon;  // default: max(2N, 5000)
    int expansion_order = 5;         // K for self-certified bounds
    index_t n1_hint = 0;
};

struct LogMono3Report {
    std::string sequence_name;
    BoundPair pair;
    std::optional<BoundCertificate> certificate;  // present for self-certified bounds
    std::optional<RationalFunction> scale;        // the recurrence's term-wise scale, if any
    index_t anchor = 0;
    index_t N1 = 0;
    Thresholds4 thresholds{};
    LogMono3Refinement refinement;
    std::vector<BoundViolation> sandwich_violations;  // exact bound check on [N1, horizon]
};

struct Laguerre2Report {
    std::string sequence_name;
    BoundPair pair;
    std::optional<BoundCertificate> certificate;
    std::optional<RationalFunction> scale;
    index_t anchor = 0;
    index_t N1 = 0;
    Thresholds5 thresholds{};
    Laguerre2Refinement refinement;
    std::vector<BoundViolation> sandwich_violations;
};

// Full pipelines, shared by the CLI and the acceptance suite. When no pair
// is supplied, bounds are certified end-to-end from the (unscaled)
// recurrence and transferred through the scale factor when one is present.
LogMono3Report run_logmono3(const Recurrence& rec, std::optional<BoundPair> supplied,
                            const PipelineOptions& opts = {});
Laguerre2Report run_laguerre2(const Recurrence& rec, std::optional<BoundPair> supplied,
                              const PipelineOptions& opts = {});

}  // namespace holocert
