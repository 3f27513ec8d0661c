#include "lieforms/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lieforms {

namespace {

std::string base_name(const DynkinType& t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

std::vector<int> word_1based(const WeylElement& w) {
    std::vector<int> out;
    out.reserve(w.word.size());
    for (int i : w.word) out.push_back(i + 1);
    return out;
}

std::vector<int> perm_1based(const DiagramAutomorphism& psi) {
    std::vector<int> out;
    out.reserve(psi.perm.size());
    for (Eigen::Index i = 0; i < psi.perm.size(); ++i) out.push_back(psi.perm[i] + 1);
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// "isomorphic to A3" on D3 rows, triality marker on twist-3 rows.
std::string record_note(const ClassificationRecord& rec) {
    std::string note;
    if (rec.dynkin.family == Family::D && rec.dynkin.rank == 3) note = "isomorphic to A3";
    if (rec.dynkin.twist == 3) {
        if (!note.empty()) note += "; ";
        note += "triality: outside the involutive classification";
    }
    return note;
}

std::string sample_str(const Certificate& cert) {
    std::string s;
    for (std::size_t i = 0; i < cert.gram_diagonal_sample.size(); ++i) {
        if (i) s += ' ';
        s += to_string(cert.gram_diagonal_sample[i]);
    }
    return s;
}

} // namespace

std::string coords_str(const Root& r) {
    std::string s;
    for (Eigen::Index j = 0; j < r.size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(r[j]);
    }
    return s;
}

std::vector<std::array<int, 3>> constant_rows(const StructureConstants& sc) {
    std::vector<std::array<int, 3>> rows;
    const int total = sc.rs().size();
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b)
            if (sc.sum_index(a, b) >= 0) rows.push_back({a, b, sc.n(a, b)});
    return rows;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json json_roots(const RootSystem& rs) {
    Json j;
    j["type"] = rs.dynkin().name();
    Json cart = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan()(i, k));
        cart.push_back(std::move(row));
    }
    j["cartan"] = std::move(cart);
    Json pos = Json::array();
    for (int r = 0; r < rs.num_positive(); ++r) {
        Json row = Json::array();
        for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.root(r)[k]);
        pos.push_back(std::move(row));
    }
    j["positive_roots"] = std::move(pos);
    return j;
}

Json json_weyl(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& mw0) {
    Json j;
    j["type"] = rs.dynkin().name();
    j["length"] = w.length();
    j["word"] = word_1based(w);
    j["minus_w0"] = perm_1based(mw0);
    j["minus_w0_order"] = mw0.order;
    return j;
}

Json json_constants(const StructureConstants& sc) {
    Json j;
    j["type"] = sc.rs().dynkin().name();
    Json entries = Json::array();
    for (const auto& [a, b, v] : constant_rows(sc)) {
        Json e;
        Json alpha = Json::array(), beta = Json::array();
        for (int k = 0; k < sc.rank(); ++k) {
            alpha.push_back(sc.rs().root(a)[k]);
            beta.push_back(sc.rs().root(b)[k]);
        }
        e["alpha"] = std::move(alpha);
        e["beta"] = std::move(beta);
        e["n"] = v;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json json_certificate(const Certificate& cert) {
    Json j;
    j["type"] = cert.dynkin.name();
    j["closure"] = cert.closure;
    j["negative_definite"] = cert.negative_definite;
    j["antilinear_fixed"] = cert.antilinear_fixed;
    Json sample = Json::array();
    for (const auto& v : cert.gram_diagonal_sample) sample.push_back(to_string(v));
    j["gram_diagonal_sample"] = std::move(sample);
    return j;
}

Json json_record(const ClassificationRecord& rec) {
    Json j;
    j["type"] = base_name(rec.dynkin);
    j["twist"] = rec.dynkin.twist;
    j["condition_v"] = rec.condition_v;
    j["cartan_type"] = rec.is_cartan_type;
    j["compact_inner_form"] = rec.has_compact_inner_form;
    j["compact_cartan"] = rec.has_compact_cartan;
    j["discrete_series"] = rec.has_discrete_series;
    j["witness"] = rec.witness ? json_certificate(*rec.witness) : Json(nullptr);
    j["derived_fields"] = Json::array({"cartan_type", "compact_cartan", "discrete_series"});
    const std::string note = record_note(rec);
    if (!note.empty()) j["note"] = note;
    return j;
}

Json json_records(const std::vector<ClassificationRecord>& recs) {
    Json arr = Json::array();
    for (const auto& rec : recs) arr.push_back(json_record(rec));
    return arr;
}

std::string table_roots(const RootSystem& rs) {
    std::ostringstream os;
    os << rs.dynkin().name() << ": " << rs.num_positive() << " positive roots, rank " << rs.rank()
       << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%4s  %6s  %s\n", "idx", "height", "root");
    os << buf;
    for (int r = 0; r < rs.num_positive(); ++r) {
        std::snprintf(buf, sizeof buf, "%4d  %6d  ", r + 1, rs.height_of(r));
        os << buf << coords_str(rs.root(r)) << "\n";
    }
    return os.str();
}

std::string table_weyl(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& mw0) {
    std::ostringstream os;
    os << rs.dynkin().name() << ": longest Weyl element\n";
    os << "length: " << w.length() << "\n";
    os << "word: " << join_ints(word_1based(w)) << "\n";
    os << "minus_w0: " << join_ints(perm_1based(mw0)) << "\n";
    os << "minus_w0 order: " << mw0.order << "\n";
    return os.str();
}

std::string table_constants(const StructureConstants& sc) {
    const auto rows = constant_rows(sc);
    std::ostringstream os;
    os << sc.rs().dynkin().name() << ": " << rows.size() << " structure constants\n";
    std::size_t w = 5;
    for (const auto& [a, b, v] : rows) {
        w = std::max(w, coords_str(sc.rs().root(a)).size());
        w = std::max(w, coords_str(sc.rs().root(b)).size());
    }
    auto pad = [w](const std::string& s) {
        return s + std::string(w + 2 - s.size(), ' ');
    };
    os << pad("alpha") << pad("beta") << "N\n";
    for (const auto& [a, b, v] : rows)
        os << pad(coords_str(sc.rs().root(a))) << pad(coords_str(sc.rs().root(b))) << v << "\n";
    return os.str();
}

std::string table_certificate(const Certificate& cert) {
    std::ostringstream os;
    os << cert.dynkin.name() << ": compact form certificate\n";
    os << "closure: " << (cert.closure ? "pass" : "FAIL") << "\n";
    os << "negative definite: " << (cert.negative_definite ? "pass" : "FAIL") << "\n";
    os << "antilinear fixed points: " << (cert.antilinear_fixed ? "pass" : "FAIL") << "\n";
    os << "gram diagonal sample: " << sample_str(cert) << "\n";
    os << "result: " << (cert.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string table_records(const std::vector<ClassificationRecord>& recs) {
    static constexpr const char* headers[] = {"type",           "twist",
                                              "condition_v",    "cartan_type",
                                              "compact_inner_form", "compact_cartan",
                                              "discrete_series", "witness", "note"};
    std::ostringstream os;
    auto cell = [](const std::string& s, std::size_t w) {
        return s + (s.size() < w ? std::string(w - s.size(), ' ') : std::string());
    };
    std::size_t widths[9];
    for (int k = 0; k < 9; ++k) widths[k] = std::string(headers[k]).size() + 2;
    widths[0] = std::max<std::size_t>(widths[0], 6);
    for (int k = 0; k < 9; ++k) os << (k + 1 < 9 ? cell(headers[k], widths[k]) : std::string(headers[k]));
    os << "\n";
    for (const auto& rec : recs) {
        const std::string cols[9] = {
            base_name(rec.dynkin),
            std::to_string(rec.dynkin.twist),
            bool_str(rec.condition_v),
            bool_str(rec.is_cartan_type),
            bool_str(rec.has_compact_inner_form),
            bool_str(rec.has_compact_cartan),
            bool_str(rec.has_discrete_series),
            rec.witness ? "yes" : "-",
            record_note(rec),
        };
        for (int k = 0; k < 9; ++k) os << (k + 1 < 9 ? cell(cols[k], widths[k]) : cols[k]);
        os << "\n";
    }
    return os.str();
}

std::string csv_roots(const RootSystem& rs) {
    std::ostringstream os;
    os << "idx,height,coords\n";
    for (int r = 0; r < rs.num_positive(); ++r)
        os << r + 1 << "," << rs.height_of(r) << "," << coords_str(rs.root(r)) << "\n";
    return os.str();
}

std::string csv_weyl(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& mw0) {
    std::ostringstream os;
    os << "field,value\n";
    os << "type," << rs.dynkin().name() << "\n";
    os << "length," << w.length() << "\n";
    os << "word," << join_ints(word_1based(w)) << "\n";
    os << "minus_w0," << join_ints(perm_1based(mw0)) << "\n";
    os << "minus_w0_order," << mw0.order << "\n";
    return os.str();
}

std::string csv_constants(const StructureConstants& sc) {
    std::ostringstream os;
    os << "alpha_coords,beta_coords,N\n";
    for (const auto& [a, b, v] : constant_rows(sc))
        os << coords_str(sc.rs().root(a)) << "," << coords_str(sc.rs().root(b)) << "," << v << "\n";
    return os.str();
}

std::string csv_certificate(const Certificate& cert) {
    std::ostringstream os;
    os << "check,result\n";
    os << "type," << cert.dynkin.name() << "\n";
    os << "closure," << bool_str(cert.closure) << "\n";
    os << "negative_definite," << bool_str(cert.negative_definite) << "\n";
    os << "antilinear_fixed," << bool_str(cert.antilinear_fixed) << "\n";
    os << "gram_diagonal_sample," << sample_str(cert) << "\n";
    return os.str();
}

std::string csv_records(const std::vector<ClassificationRecord>& recs) {
    std::ostringstream os;
    os << "type,twist,condition_v,cartan_type,compact_inner_form,compact_cartan,"
          "discrete_series,witness,note\n";
    for (const auto& rec : recs) {
        os << base_name(rec.dynkin) << "," << rec.dynkin.twist << "," << bool_str(rec.condition_v)
           << "," << bool_str(rec.is_cartan_type) << "," << bool_str(rec.has_compact_inner_form)
           << "," << bool_str(rec.has_compact_cartan) << "," << bool_str(rec.has_discrete_series)
           << "," << (rec.witness ? "yes" : "") << "," << record_note(rec) << "\n";
    }
    return os.str();
}

} // namespace lieforms
