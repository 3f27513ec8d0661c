#pragma once

#include <optional>
#include <vector>

#include "lieforms/compact_form.hpp"

namespace lieforms {

/// Whether the longest Weyl element composed with psi acts as -1 on the
/// whole root system (checked on the simple roots, which suffices).
bool condition_v(const RootSystem& rs, const DiagramAutomorphism& psi);

/// The four families for which the condition fails among involutive forms:
/// split A_n (n >= 2), split D_n (n >= 3 odd), split E6, and quasi-split
/// non-split D_n (n >= 4 even).
struct ExceptionList {
    static bool split_a(const DynkinType& t) {
        return t.family == Family::A && t.rank >= 2 && t.twist == 1;
    }
    static bool split_d_odd(const DynkinType& t) {
        return t.family == Family::D && t.rank >= 3 && t.rank % 2 == 1 && t.twist == 1;
    }
    static bool split_e6(const DynkinType& t) {
        return t.family == Family::E && t.rank == 6 && t.twist == 1;
    }
    static bool quasisplit_d_even(const DynkinType& t) {
        return t.family == Family::D && t.rank >= 4 && t.rank % 2 == 0 && t.twist == 2;
    }
    static bool matches(const DynkinType& t) {
        return split_a(t) || split_d_odd(t) || split_e6(t) || quasisplit_d_even(t);
    }
};

/// Per (type, twist) result. The five booleans are all equal by the chain
/// of equivalences (Cartan-type automorphism <=> compact inner form <=>
/// compact Cartan subgroup <=> discrete series <=> the -1 condition); only
/// the last is computed, the others are copied labels. When the condition
/// holds, the record carries the constructive compact-form certificate.
struct ClassificationRecord {
    DynkinType dynkin;
    bool condition_v = false;
    bool is_cartan_type = false;
    bool has_compact_inner_form = false;
    bool has_compact_cartan = false;
    bool has_discrete_series = false;
    std::optional<Certificate> witness;
};

/// Classifies one (type, twist). On a positive result this also constructs
/// the witness: the compact-form certificate must pass all three checks and
/// the longest-element involution must satisfy its postconditions.
ClassificationRecord classify(const DynkinType& t);

/// Records for every valid (family, rank <= max_rank, twist), ordered by
/// (family, rank, twist).
std::vector<ClassificationRecord> full_table(int max_rank);

/// Whether, over all involutive records (twist 1 or 2), the condition fails
/// exactly on the ExceptionList families.
bool exception_list_consistent(const std::vector<ClassificationRecord>& records);

} // namespace lieforms
