// lieforms: exact root systems, Chevalley structure constants, compact real
// forms and the classification of types admitting a compact inner form.
//
// Exit codes: 0 success, 2 usage or parse error, 3 the requested compact
// form is ruled out by the classification, 4 internal invariant violation.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lieforms/classifier.hpp"
#include "lieforms/render.hpp"

namespace {

using namespace lieforms;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& f) {
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    return Format::Table;
}

int run_roots(const std::string& type_str, Format fmt, bool count_only) {
    const RootSystem rs = RootSystem::build(parse_type(type_str));
    if (count_only) {
        std::cout << rs.num_positive() << "\n";
        return 0;
    }
    switch (fmt) {
        case Format::Json: std::cout << dump(json_roots(rs)); break;
        case Format::Csv: std::cout << csv_roots(rs); break;
        case Format::Table: std::cout << table_roots(rs); break;
    }
    return 0;
}

int run_weyl(const std::string& type_str, Format fmt) {
    const RootSystem rs = RootSystem::build(parse_type(type_str));
    const WeylElement w = longest_element(rs);
    const DiagramAutomorphism mw0 = minus_w0(rs);
    switch (fmt) {
        case Format::Json: std::cout << dump(json_weyl(rs, w, mw0)); break;
        case Format::Csv: std::cout << csv_weyl(rs, w, mw0); break;
        case Format::Table: std::cout << table_weyl(rs, w, mw0); break;
    }
    return 0;
}

int run_constants(const std::string& type_str, Format fmt) {
    const StructureConstants sc = build_constants(RootSystem::build(parse_type(type_str)));
    switch (fmt) {
        case Format::Json: std::cout << dump(json_constants(sc)); break;
        case Format::Csv: std::cout << csv_constants(sc); break;
        case Format::Table: std::cout << table_constants(sc); break;
    }
    return 0;
}

int run_certify(const std::string& type_str, Format fmt) {
    const DynkinType t = parse_type(type_str);
    const RootSystem rs = RootSystem::build(t);
    const DiagramAutomorphism psi = standard_twist(t, rs.cartan());
    if (!condition_v(rs, psi))
        throw PredictedAbsenceError("certify " + t.name() +
                                    ": no compact inner form predicted for this (type, twist); "
                                    "see `classify " + t.name() + "`");
    const StructureConstants sc = build_constants(rs);
    Certificate cert = certify_compact(sc);
    cert.dynkin = t;
    weyl_involution(sc, psi); // postconditions verified inside

    switch (fmt) {
        case Format::Json: std::cout << dump(json_certificate(cert)); break;
        case Format::Csv: std::cout << csv_certificate(cert); break;
        case Format::Table: std::cout << table_certificate(cert); break;
    }
    if (!cert.all_passed())
        throw InvariantViolation("certificate check failed for " + t.name());
    return 0;
}

int run_classify(const std::string& type_str, bool all, int max_rank, bool check_paper, Format fmt) {
    std::vector<ClassificationRecord> recs;
    if (all) {
        recs = full_table(max_rank);
    } else {
        recs.push_back(classify(parse_type(type_str)));
    }

    const bool consistent = exception_list_consistent(recs);
    switch (fmt) {
        case Format::Json: {
            if (check_paper) {
                Json j;
                j["records"] = json_records(recs);
                j["exception_list_consistent"] = consistent;
                std::cout << dump(j);
            } else if (!all) {
                std::cout << dump(json_record(recs.front()));
            } else {
                std::cout << dump(json_records(recs));
            }
            break;
        }
        case Format::Csv: std::cout << csv_records(recs); break;
        case Format::Table: {
            std::cout << table_records(recs);
            if (check_paper)
                std::cout << "exception list consistent: " << (consistent ? "yes" : "NO") << "\n";
            break;
        }
    }
    if (check_paper && !consistent)
        throw InvariantViolation("classification disagrees with the known exception list");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root systems, Chevalley bases and compact real forms"};
    app.require_subcommand(1);

    std::string type_str, format = "table";
    bool count_only = false, all = false, check_paper = false;
    int max_rank = 8;
    const auto fmt_check = CLI::IsMember({"table", "json", "csv"});

    auto* roots = app.add_subcommand("roots", "positive roots of a type, in generation order");
    roots->add_option("type", type_str, "type string, e.g. A2, D4^3")->required();
    roots->add_option("--format", format, "output format")->check(fmt_check);
    roots->add_flag("--count-only", count_only, "print only the number of positive roots");

    auto* weyl = app.add_subcommand("weyl", "longest element reduced word and -w0 permutation");
    weyl->add_option("type", type_str, "type string")->required();
    weyl->add_option("--format", format, "output format")->check(fmt_check);

    auto* constants = app.add_subcommand("constants", "signed structure-constant table");
    constants->add_option("type", type_str, "type string")->required();
    constants->add_option("--format", format, "output format")->check(fmt_check);

    auto* certify = app.add_subcommand("certify", "compact real form certificate");
    certify->add_option("type", type_str, "type string")->required();
    certify->add_option("--format", format, "output format")->check(fmt_check);

    auto* classify = app.add_subcommand("classify", "compact-inner-form classification");
    classify->add_option("type", type_str, "type string (omit with --all)");
    classify->add_flag("--all", all, "classify every valid (type, twist) up to --max-rank");
    classify->add_option("--max-rank", max_rank, "rank bound for --all")->check(CLI::PositiveNumber);
    classify->add_flag("--check-paper", check_paper,
                       "verify the classification against the known exception list");
    classify->add_option("--format", format, "output format")->check(fmt_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (roots->parsed()) return run_roots(type_str, fmt, count_only);
        if (weyl->parsed()) return run_weyl(type_str, fmt);
        if (constants->parsed()) return run_constants(type_str, fmt);
        if (certify->parsed()) return run_certify(type_str, fmt);
        if (classify->parsed()) {
            if (!all && type_str.empty()) {
                std::cerr << "classify: give a type or --all\n";
                return 2;
            }
            return run_classify(type_str, all, max_rank, check_paper, fmt);
        }
    } catch (const lieforms::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lieforms::PredictedAbsenceError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const lieforms::InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
