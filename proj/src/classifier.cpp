#include "lieforms/classifier.hpp"

#include <map>

namespace lieforms {

bool condition_v(const RootSystem& rs, const DiagramAutomorphism& psi) {
    if (psi.perm.size() != rs.rank()) throw Error("condition_v: rank mismatch");
    const WeylElement w = longest_element(rs);
    for (int i = 0; i < rs.rank(); ++i)
        if (w.apply(psi.perm[i]) != rs.negative_of(i)) return false;
    return true;
}

namespace {

ClassificationRecord classify_over(const RootSystem& rs, const StructureConstants* sc,
                                   const DynkinType& t) {
    const DiagramAutomorphism psi = standard_twist(t, rs.cartan());
    ClassificationRecord rec;
    rec.dynkin = t;
    rec.condition_v = condition_v(rs, psi);
    rec.is_cartan_type = rec.condition_v;
    rec.has_compact_inner_form = rec.condition_v;
    rec.has_compact_cartan = rec.condition_v;
    rec.has_discrete_series = rec.condition_v;

    if (rec.condition_v) {
        std::optional<StructureConstants> local;
        if (sc == nullptr) {
            local.emplace(StructureConstants::build(rs));
            sc = &*local;
        }
        Certificate cert = certify_compact(*sc);
        cert.dynkin = t; // carry the twist of the request
        weyl_involution(*sc, psi); // postconditions checked inside
        if (!cert.all_passed())
            throw InvariantViolation("classify: compact-form certificate failed for " + t.name());
        rec.witness = std::move(cert);
    }
    return rec;
}

} // namespace

ClassificationRecord classify(const DynkinType& t) {
    if (!twist_valid(t.family, t.rank, t.twist))
        throw ParseError(ParseError::Kind::TwistUnavailable,
                         "twist " + std::to_string(t.twist) + " is not available for " + t.name());
    const RootSystem rs = RootSystem::build(t);
    return classify_over(rs, nullptr, t);
}

std::vector<ClassificationRecord> full_table(int max_rank) {
    if (max_rank < 1) throw Error("full_table: max_rank must be positive");
    std::vector<ClassificationRecord> out;

    for (const Family family : {Family::A, Family::B, Family::C, Family::D,
                                Family::E, Family::F, Family::G}) {
        for (int rank = 1; rank <= max_rank; ++rank) {
            if (!rank_valid(family, rank)) continue;
            const DynkinType base{family, rank, 1};
            const RootSystem rs = RootSystem::build(base);
            std::optional<StructureConstants> sc; // shared across twists of this type
            for (int twist = 1; twist <= 3; ++twist) {
                if (!twist_valid(family, rank, twist)) continue;
                const DynkinType t{family, rank, twist};
                if (!sc && condition_v(rs, standard_twist(t, rs.cartan())))
                    sc.emplace(StructureConstants::build(rs));
                out.push_back(classify_over(rs, sc ? &*sc : nullptr, t));
            }
        }
    }
    return out;
}

bool exception_list_consistent(const std::vector<ClassificationRecord>& records) {
    for (const auto& rec : records) {
        if (rec.dynkin.twist > 2) continue; // triality rows sit outside the involutive classification
        if (rec.condition_v == ExceptionList::matches(rec.dynkin)) return false;
    }
    return true;
}

} // namespace lieforms
