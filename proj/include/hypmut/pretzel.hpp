#pragma once

// Pretzel tuples: family validation, dihedral canonical forms, mutation
// orbit enumeration, and the Q(n) / volume threshold formulas.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hypmut/dehn.hpp"
#include "hypmut/errors.hpp"

namespace hypmut::pretzel {

// Ordered twist parameters (q_1, ..., q_m), m = 2n+1 for the knot family.
struct PretzelTuple {
    std::vector<long long> q;

    PretzelTuple() = default;
    explicit PretzelTuple(std::vector<long long> entries)
        : q(std::move(entries)) {}
    PretzelTuple(std::initializer_list<long long> entries) : q(entries) {}

    int size() const { return static_cast<int>(q.size()); }
    // twist-region count m = 2n+1
    int n() const { return (size() - 1) / 2; }

    auto operator<=>(const PretzelTuple&) const = default;
};

enum class Violation {
    TooFewEntries,
    EvenLength,
    DuplicateEntry,
    MoreThanOneEven,
    NoEvenEntry,
    EntryNotAboveSix,
    ClassificationHypothesis,
};

inline const char* to_string(Violation v) {
    switch (v) {
        case Violation::TooFewEntries: return "TooFewEntries";
        case Violation::EvenLength: return "EvenLength";
        case Violation::DuplicateEntry: return "DuplicateEntry";
        case Violation::MoreThanOneEven: return "MoreThanOneEven";
        case Violation::NoEvenEntry: return "NoEvenEntry";
        case Violation::EntryNotAboveSix: return "EntryNotAboveSix";
        default: return "ClassificationHypothesis";
    }
}

// Family invariants: odd length >= 5, pairwise distinct entries, exactly one
// even entry (in any slot, since mutations move it), every entry > 6,
// and the classification hypothesis sum(1/q_i) <= m - 2.
inline std::vector<Violation> validate(const PretzelTuple& t) {
    std::vector<Violation> out;
    const int m = t.size();
    if (m < 5) out.push_back(Violation::TooFewEntries);
    if (m % 2 == 0) out.push_back(Violation::EvenLength);

    std::vector<long long> sorted = t.q;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        out.push_back(Violation::DuplicateEntry);

    int evens = 0;
    bool small_entry = false;
    for (long long v : t.q) {
        if (v % 2 == 0) ++evens;
        if (v <= 6) small_entry = true;
    }
    if (evens > 1) out.push_back(Violation::MoreThanOneEven);
    if (evens == 0 && m > 0) out.push_back(Violation::NoEvenEntry);
    if (small_entry) out.push_back(Violation::EntryNotAboveSix);

    bool nonzero = true;
    for (long long v : t.q) nonzero = nonzero && v != 0;
    if (nonzero && m > 0) {
        double s = 0.0;
        for (long long v : t.q) s += 1.0 / static_cast<double>(v);
        if (!(s <= m - 2)) out.push_back(Violation::ClassificationHypothesis);
    }
    return out;
}

// Lexicographic minimum over the 2m dihedral images (all cyclic rotations of
// the tuple and of its reversal). Two tuples present the same link exactly
// when their canonical forms agree.
inline PretzelTuple canonical_form(const PretzelTuple& t) {
    const int m = t.size();
    if (m == 0) return t;
    std::vector<long long> best = t.q;
    std::vector<long long> probe(m);
    const std::vector<long long> reversed(t.q.rbegin(), t.q.rend());
    for (const std::vector<long long>* base : {&t.q, &reversed}) {
        for (int shift = 0; shift < m; ++shift) {
            for (int i = 0; i < m; ++i) probe[i] = (*base)[(i + shift) % m];
            if (probe < best) best = probe;
        }
    }
    return PretzelTuple{std::move(best)};
}

// Full dihedral-equivalence test by direct orbit comparison, independent of
// canonical_form.
inline bool dihedral_equivalent(const PretzelTuple& a, const PretzelTuple& b) {
    const int m = a.size();
    if (m != b.size()) return false;
    const std::vector<long long> reversed(a.q.rbegin(), a.q.rend());
    std::vector<long long> probe(m);
    for (const std::vector<long long>* base : {&a.q, &reversed}) {
        for (int shift = 0; shift < m; ++shift) {
            for (int i = 0; i < m; ++i) probe[i] = (*base)[(i + shift) % m];
            if (probe == b.q) return true;
        }
    }
    return false;
}

// sigma_a swaps slots a and a+1 (1-based), exchanging adjacent twist regions.
inline PretzelTuple mutate(const PretzelTuple& t, int a) {
    if (a < 1 || a >= t.size())
        throw domain_error("mutate: index must satisfy 1 <= a <= m-1");
    PretzelTuple out = t;
    std::swap(out.q[a - 1], out.q[a]);
    return out;
}

enum class GeneratorKind { All, UnlinkedOnly };

// Adjacent-transposition generator set: slots 1..2n for All, 2..2n when the
// first crossing-circle sphere is excluded.
struct MutationGenerators {
    GeneratorKind kind = GeneratorKind::All;
    std::vector<int> indices;

    static MutationGenerators make(GeneratorKind kind, int m) {
        MutationGenerators g;
        g.kind = kind;
        for (int a = (kind == GeneratorKind::All ? 1 : 2); a <= m - 1; ++a)
            g.indices.push_back(a);
        return g;
    }
};

inline long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// (2n)!/2 for the full generator set, (2n-1)!/2 for the unlinked one.
inline long long mutant_count_formula(int n, GeneratorKind kind) {
    return kind == GeneratorKind::All ? factorial(2 * n) / 2
                                      : factorial(2 * n - 1) / 2;
}

inline constexpr int kEnumerationSizeGuard = 11;

namespace detail {

// The generator swaps are adjacent transpositions, so they generate the full
// symmetric group on the slots they touch: the closure of {t} is every
// arrangement (All), or every arrangement fixing slot 1 (UnlinkedOnly).
// Each dihedral class meets the closure in exactly two arrangements when all
// entries are distinct, paired by tail reversal, so visiting tails with
// tail < reversed(tail) walks the distinct canonical forms exactly once.
template <typename Fn>
void for_each_mutant(const PretzelTuple& t, GeneratorKind kind, bool force,
                     Fn&& fn) {
    const int m = t.size();
    if (m > kEnumerationSizeGuard && !force)
        throw size_guard_error(
            "enumerate_mutants: tuple length " + std::to_string(m) +
            " exceeds the size guard (" +
            std::to_string(kEnumerationSizeGuard) + "); override to proceed");
    std::vector<long long> tail;
    long long head = 0;
    if (kind == GeneratorKind::All) {
        std::vector<long long> sorted = t.q;
        std::sort(sorted.begin(), sorted.end());
        head = sorted.front();
        tail.assign(sorted.begin() + 1, sorted.end());
    } else {
        head = t.q.front();
        tail.assign(t.q.begin() + 1, t.q.end());
        std::sort(tail.begin(), tail.end());
    }
    std::vector<long long> arrangement(m);
    arrangement[0] = head;
    do {
        if (!std::lexicographical_compare(tail.begin(), tail.end(),
                                          tail.rbegin(), tail.rend()))
            continue;
        std::copy(tail.begin(), tail.end(), arrangement.begin() + 1);
        fn(PretzelTuple{arrangement});
    } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace detail

// Closure of {t} under the generator swaps, reduced to distinct canonical
// forms and returned in ascending order. Requires a family-valid tuple.
inline std::vector<PretzelTuple> enumerate_mutants(const PretzelTuple& t,
                                                   const MutationGenerators& g,
                                                   bool force = false) {
    if (!validate(t).empty())
        throw usage_error("enumerate_mutants: tuple fails family validation");
    std::vector<PretzelTuple> out;
    if (g.kind == GeneratorKind::All) {
        // min-first arrangements are emitted in lex order and are already
        // canonical once the smaller of tail/reversed-tail is kept
        detail::for_each_mutant(t, g.kind, force, [&](PretzelTuple rep) {
            out.push_back(std::move(rep));
        });
    } else {
        detail::for_each_mutant(t, g.kind, force, [&](const PretzelTuple& rep) {
            out.push_back(canonical_form(rep));
        });
        std::sort(out.begin(), out.end());
    }
    return out;
}

inline long long count_mutants(const PretzelTuple& t,
                               const MutationGenerators& g,
                               bool force = false) {
    if (!validate(t).empty())
        throw usage_error("count_mutants: tuple fails family validation");
    long long count = 0;
    detail::for_each_mutant(t, g.kind, force,
                            [&](const PretzelTuple&) { ++count; });
    return count;
}

// Q(n) = sqrt(multiplier^2 (2n+1)(4n)/(2n-1) - 1): every q_i >= Q(n) forces
// each slope's normalized length past multiplier * sqrt(2n+1).
inline double q_threshold_for_multiplier(int n, double multiplier) {
    if (n < 2) throw domain_error("q_threshold: n must be >= 2");
    const double factor =
        (2.0 * n + 1.0) * (4.0 * n) / (2.0 * n - 1.0);
    return std::sqrt(multiplier * multiplier * factor - 1.0);
}

inline double q_threshold(int n) {
    return q_threshold_for_multiplier(n, dehn::kPublishedLengthMultiplier);
}

// Same threshold with the multiplier recomputed from the inverse solve
// instead of the published 20.76.
inline double q_threshold_derived(int n) {
    return q_threshold_for_multiplier(
        n, dehn::min_L_for_total_length(hypcore::kPublishedLengthCutoff));
}

// Volume of the regular ideal octahedron; comparisons against published
// values use the 4-digit truncation.
inline constexpr double kVOct = 3.66386237670887;
inline constexpr double kVOctPublished = 3.6638;

// [(2n-1)/2 * v_oct, (4n+2) * v_oct]
inline std::pair<double, double> volume_bounds(int n) {
    if (n < 2) throw domain_error("volume_bounds: n must be >= 2");
    return {(2.0 * n - 1.0) / 2.0 * kVOct, (4.0 * n + 2.0) * kVOct};
}

}  // namespace hypmut::pretzel
