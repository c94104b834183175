#pragma once

// End-to-end certification: packs the cusp, checks the Q(n) and normalized
// length thresholds, counts mutants, and assembles the verdicts into one
// report. Failures are reported as data, never thrown.

#include <optional>
#include <string>
#include <vector>

#include "hypmut/commens.hpp"
#include "hypmut/dehn.hpp"
#include "hypmut/packing.hpp"
#include "hypmut/pretzel.hpp"

namespace hypmut::pretzel {

enum class CertifyMode { Cusped, Closed };

inline const char* to_string(CertifyMode m) {
    return m == CertifyMode::Cusped ? "Cusped" : "Closed";
}

struct SlopeInfo {
    long long q = 0;
    long long surgery_p = 1;
    long long surgery_q = 0;
    double normalized_length = 0.0;  // exact packing value
    double lower_bound = 0.0;        // sqrt((2n-1)(1+q^2)/(4n))
    bool meets_threshold = false;
};

struct CertificationReport {
    CertifyMode mode = CertifyMode::Cusped;
    PretzelTuple tuple;
    int n = 0;
    std::vector<Violation> violations;
    bool thresholds_met = false;
    double q_threshold_published = 0.0;
    double q_threshold_derived = 0.0;
    double slope_threshold = 0.0;  // 20.76 * sqrt(2n+1)
    double ell_w = 0.0;
    std::vector<SlopeInfo> slopes;
    std::vector<long long> failing_entries;
    std::optional<long long> mutant_count_enumerated;
    long long mutant_count_formula = 0;
    int preserved_lengths = 0;
    std::pair<double, double> volume_bounds{0.0, 0.0};
    commens::ChecklistConclusion incommensurability =
        commens::ChecklistConclusion::NotApplicable;
    std::vector<std::string> notes;
};

inline CertificationReport certify(const PretzelTuple& t, CertifyMode mode) {
    CertificationReport r;
    r.mode = mode;
    r.tuple = t;
    r.violations = validate(t);
    const int m = t.size();

    if (m < 5 || m % 2 == 0) {
        r.notes.push_back(
            "tuple is not an odd pretzel-knot tuple with n >= 2; nothing to "
            "certify");
        return r;
    }
    r.n = t.n();
    const int n = r.n;
    if (!r.violations.empty()) {
        for (Violation v : r.violations)
            r.notes.push_back(std::string("validation: ") + to_string(v));
        return r;
    }

    // even entry may sit in any slot after mutations
    for (int i = 0; i < m; ++i)
        if (t.q[i] % 2 == 0)
            r.notes.push_back("even entry q = " + std::to_string(t.q[i]) +
                              " in slot " + std::to_string(i + 1));

    const packing::CuspRectangle rect = packing::solve_crossing_rectangle(n);
    r.ell_w = rect.ell_w;
    r.q_threshold_published = q_threshold(n);
    r.q_threshold_derived = q_threshold_derived(n);
    r.slope_threshold =
        dehn::kPublishedLengthMultiplier * std::sqrt(2.0 * n + 1.0);

    bool all_q = true;
    bool all_L = true;
    for (long long q : t.q) {
        SlopeInfo s;
        s.q = q;
        const bool half_twist = (q % 2 != 0);
        s.surgery_q = half_twist ? (q - 1) / 2 : q / 2;
        s.normalized_length =
            packing::normalized_slope_length(rect, q, half_twist);
        s.lower_bound = std::sqrt((2.0 * n - 1.0) *
                                  (1.0 + static_cast<double>(q) * q) /
                                  (4.0 * n));
        s.meets_threshold = s.normalized_length >= r.slope_threshold;
        if (!(static_cast<double>(q) >= r.q_threshold_published)) {
            all_q = false;
            r.failing_entries.push_back(q);
        }
        if (!s.meets_threshold) all_L = false;
        r.slopes.push_back(s);
    }
    r.thresholds_met = all_q && all_L;

    const GeneratorKind kind = (mode == CertifyMode::Cusped)
                                   ? GeneratorKind::All
                                   : GeneratorKind::UnlinkedOnly;
    r.mutant_count_formula =
        (2 * n <= 20) ? mutant_count_formula(n, kind) : -1;
    if (m <= kEnumerationSizeGuard) {
        r.mutant_count_enumerated =
            count_mutants(t, MutationGenerators::make(kind, m));
        if (*r.mutant_count_enumerated != r.mutant_count_formula)
            r.notes.push_back(
                "mutant count discrepancy: enumeration of the generator "
                "closure gives " +
                std::to_string(*r.mutant_count_enumerated) +
                ", the published formula gives " +
                std::to_string(r.mutant_count_formula));
    } else {
        r.notes.push_back("mutant enumeration skipped (size guard)");
    }

    r.preserved_lengths =
        r.thresholds_met ? (mode == CertifyMode::Cusped ? 2 * n + 1 : 2 * n + 2)
                         : 0;
    r.volume_bounds = volume_bounds(n);
    if (mode == CertifyMode::Closed)
        r.notes.push_back(
            "closed mode: conclusions hold for all sufficiently large "
            "surgeries (p, q) on the knot cusp; no effective bound");

    const commens::CommensurabilityChecklist checklist =
        commens::commensurability_checklist(t);
    r.incommensurability = checklist.conclusion;
    for (const auto& item : checklist.items)
        r.notes.push_back("checklist " + item.name + ": " +
                          (item.passed ? "pass" : "fail") +
                          (item.conditional ? " (conditional)" : "") + " - " +
                          item.note);
    return r;
}

}  // namespace hypmut::pretzel
