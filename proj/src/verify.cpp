#include "holocert/verify.hpp"

#include <algorithm>

namespace holocert {

namespace {

index_t require_hold(const RationalFunction& expr, index_t from, const char* what) {
    auto hp = hold_point(expr, from);
    if (!hp)
        throw inapplicable_error(std::string(what) +
                                 " is not eventually positive: theorem inapplicable with this pair");
    return *hp;
}

index_t default_horizon(index_t n) { return std::max<index_t>(2 * n, 5000); }

}  // namespace

Thresholds4 theorem4_thresholds(const BoundPair& pair, index_t anchor) {
    Thresholds4 t;
    t.N2 = require_hold(pair.g - RationalFunction(Rational(1)), anchor, "g - 1");
    t.N3 = require_hold(pair.g - pair.f.shifted(Rational(1)), anchor, "g(n) - f(n+1)");
    t.N4 = require_hold(pair.g.shifted(Rational(-1)) * pair.g.shifted(Rational(1)) - pair.f * pair.f,
                        anchor + 1, "g(n-1) g(n+1) - f(n)^2");
    t.N = std::max({pair.valid_from, t.N2, t.N3, t.N4});
    return t;
}

Thresholds5 theorem5_threshold(const BoundPair& pair, index_t anchor) {
    Thresholds5 t;
    RationalFunction expr = pair.g.shifted(Rational(-1)) * pair.g * pair.g * pair.g.shifted(Rational(1)) -
                            RationalFunction(Rational(4)) * pair.f + RationalFunction(Rational(3));
    t.N2 = require_hold(expr, anchor + 1, "g(n-1) g(n)^2 g(n+1) - 4 f(n) + 3");
    t.N = std::max(pair.valid_from, t.N2);
    return t;
}

LogMono3Refinement refine_threshold_logmono3(SequenceCache& cache, index_t N, index_t horizon) {
    if (horizon <= N) throw error("refinement horizon must exceed N");
    LogMono3Refinement out;
    out.horizon = horizon;
    auto rows = scan_logmono(cache, cache.offset() + 1, horizon);
    for (const auto& row : rows) {
        bool violated = false, boundary = false;
        auto check = [&](CheckOutcome o) {
            if (o == CheckOutcome::fails) violated = true;
            if (o == CheckOutcome::boundary) {
                violated = true;
                boundary = true;
            }
        };
        check(row.u_above_one);
        check(row.u_decreasing);
        check(row.u_log_convex);
        if (violated) {
            ++out.violation_count;
            out.last_violation = row.n;
            if (boundary) out.boundary_indices.push_back(row.n);
        }
    }
    out.refined_start = out.last_violation.value_or(cache.offset());
    return out;
}

Laguerre2Refinement refine_threshold_laguerre2(SequenceCache& cache, index_t N, index_t horizon) {
    if (horizon <= N) throw error("refinement horizon must exceed N");
    Laguerre2Refinement out;
    out.horizon = horizon;
    auto violations = scan_laguerre(cache, 2, cache.offset(), horizon);
    out.violation_count = violations.size();
    for (const auto& v : violations) {
        out.last_violation = v.n;
        if (v.boundary) out.boundary_indices.push_back(v.n);
    }
    out.refined_start = out.last_violation ? *out.last_violation + 1 : cache.offset();
    return out;
}

namespace {

// Resolves the bound pair for a (possibly scaled) recurrence: either the
// supplied one, validated, or a self-certified pair transferred through the
// scale factor.
struct ResolvedBounds {
    BoundPair pair;
    std::optional<BoundCertificate> certificate;
};

ResolvedBounds resolve_bounds(const Recurrence& rec, std::optional<BoundPair> supplied,
                              const PipelineOptions& opts) {
    ResolvedBounds out;
    if (supplied) {
        out.pair = std::move(*supplied);
        validate_pair(out.pair);
        return out;
    }
    Recurrence base = rec;
    base.scale.reset();
    SequenceCache base_cache(base);
    ProposedBounds proposed = propose_bounds(base_cache, opts.expansion_order, opts.n1_hint);
    out.certificate = proposed.cert;
    out.pair = u_bounds_from_b(proposed.cert);
    if (rec.scale) out.pair = scale_bounds(out.pair, *rec.scale);
    validate_pair(out.pair);
    return out;
}

}  // namespace

LogMono3Report run_logmono3(const Recurrence& rec, std::optional<BoundPair> supplied,
                            const PipelineOptions& opts) {
    LogMono3Report report;
    report.sequence_name = rec.name;
    report.scale = rec.scale;
    SequenceCache cache(rec);

    ResolvedBounds rb = resolve_bounds(rec, std::move(supplied), opts);
    report.pair = rb.pair;
    report.certificate = std::move(rb.certificate);
    report.N1 = report.pair.valid_from;
    report.anchor = rec.offset + 1;
    report.thresholds = theorem4_thresholds(report.pair, report.anchor);

    index_t horizon = opts.horizon ? std::max(*opts.horizon, report.thresholds.N + 1)
                                   : default_horizon(report.thresholds.N);
    report.sandwich_violations =
        verify_bounds_scan(cache, report.pair, std::max(report.N1, rec.offset + 1), horizon);
    report.refinement = refine_threshold_logmono3(cache, report.thresholds.N, horizon);
    return report;
}

Laguerre2Report run_laguerre2(const Recurrence& rec, std::optional<BoundPair> supplied,
                              const PipelineOptions& opts) {
    Laguerre2Report report;
    report.sequence_name = rec.name;
    report.scale = rec.scale;
    SequenceCache cache(rec);

    ResolvedBounds rb = resolve_bounds(rec, std::move(supplied), opts);
    report.pair = rb.pair;
    report.certificate = std::move(rb.certificate);
    report.N1 = report.pair.valid_from;
    report.anchor = rec.offset + 1;
    report.thresholds = theorem5_threshold(report.pair, report.anchor);

    index_t horizon = opts.horizon ? std::max(*opts.horizon, report.thresholds.N + 1)
                                   : default_horizon(report.thresholds.N);
    report.sandwich_violations =
        verify_bounds_scan(cache, report.pair, std::max(report.N1, rec.offset + 1), horizon);
    report.refinement = refine_threshold_laguerre2(cache, report.thresholds.N, horizon);
    return report;
}

}  // namespace holocert
