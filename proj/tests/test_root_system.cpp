#include <doctest.h>

#include "lieforms/render.hpp"
#include "lieforms/root_system.hpp"
#include "oracles.hpp"

using namespace lieforms;

namespace {

Root mk(std::initializer_list<int> v) {
    Root r(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (int x : v) r[k++] = x;
    return r;
}

const std::vector<DynkinType>& all_split_types(int max_rank) {
    static std::vector<DynkinType> types;
    types.clear();
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int n = 1; n <= max_rank; ++n)
            if (rank_valid(f, n)) types.push_back({f, n, 1});
    return types;
}

int classical_positive_count(const DynkinType& t) {
    switch (t.family) {
        case Family::A: return t.rank * (t.rank + 1) / 2;
        case Family::B:
        case Family::C: return t.rank * t.rank;
        case Family::D: return t.rank * (t.rank - 1);
        case Family::G: return 6;
        case Family::F: return 24;
        case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    }
    return -1;
}

} // namespace

TEST_CASE("parse_type accepts the grammar") {
    CHECK(parse_type("A1") == DynkinType{Family::A, 1, 1});
    CHECK(parse_type("D4^3") == DynkinType{Family::D, 4, 3});
    CHECK(parse_type("E6^2") == DynkinType{Family::E, 6, 2});
    CHECK(parse_type("A10") == DynkinType{Family::A, 10, 1});
    CHECK(parse_type("D3^2") == DynkinType{Family::D, 3, 2});
    CHECK(parse_type("B2").name() == "B2");
    CHECK(parse_type("A3^2").name() == "A3^2");
}

TEST_CASE("parse_type rejects with distinct error kinds") {
    auto kind_of = [](const char* s) {
        try {
            parse_type(s);
        } catch (const ParseError& e) {
            return e.kind;
        }
        throw std::logic_error("expected a parse failure");
    };
    CHECK(kind_of("Z9") == ParseError::Kind::Malformed);
    CHECK(kind_of("") == ParseError::Kind::Malformed);
    CHECK(kind_of("A") == ParseError::Kind::Malformed);
    CHECK(kind_of("a2") == ParseError::Kind::Malformed);
    CHECK(kind_of("A2x") == ParseError::Kind::Malformed);
    CHECK(kind_of("A2^") == ParseError::Kind::Malformed);
    CHECK(kind_of("C2") == ParseError::Kind::RankOutOfRange); // B2 is canonical
    CHECK(kind_of("B1") == ParseError::Kind::RankOutOfRange);
    CHECK(kind_of("D2") == ParseError::Kind::RankOutOfRange);
    CHECK(kind_of("E9") == ParseError::Kind::RankOutOfRange);
    CHECK(kind_of("F5") == ParseError::Kind::RankOutOfRange);
    CHECK(kind_of("G3") == ParseError::Kind::RankOutOfRange);
    CHECK(kind_of("A0") == ParseError::Kind::RankOutOfRange);
    CHECK(kind_of("A1^2") == ParseError::Kind::TwistUnavailable);
    CHECK(kind_of("B3^2") == ParseError::Kind::TwistUnavailable);
    CHECK(kind_of("D5^3") == ParseError::Kind::TwistUnavailable);
    CHECK(kind_of("E7^2") == ParseError::Kind::TwistUnavailable);
}

TEST_CASE("cartan matrices of the pinned types") {
    Eigen::MatrixXi a1(1, 1);
    a1 << 2;
    CHECK(cartan_matrix({Family::A, 1, 1}) == a1);

    Eigen::MatrixXi a2(2, 2);
    a2 << 2, -1, -1, 2;
    CHECK(cartan_matrix({Family::A, 2, 1}) == a2);

    Eigen::MatrixXi g2(2, 2);
    g2 << 2, -1, -3, 2;
    CHECK(cartan_matrix({Family::G, 2, 1}) == g2);

    Eigen::MatrixXi b2(2, 2);
    b2 << 2, -2, -1, 2;
    CHECK(cartan_matrix({Family::B, 2, 1}) == b2);

    Eigen::MatrixXi f4(4, 4);
    f4 << 2, -1, 0, 0, -1, 2, -2, 0, 0, -1, 2, -1, 0, 0, -1, 2;
    CHECK(cartan_matrix({Family::F, 4, 1}) == f4);
}

TEST_CASE("symmetrizers are minimal positive integers") {
    auto symm = [](const DynkinType& t) { return symmetrizer(cartan_matrix(t)); };
    CHECK(symm({Family::A, 4, 1}) == Eigen::VectorXi::Ones(4));
    CHECK(symm({Family::G, 2, 1}) == mk({1, 3}));
    CHECK(symm({Family::B, 3, 1}) == mk({2, 2, 1}));
    CHECK(symm({Family::C, 3, 1}) == mk({1, 1, 2}));
    CHECK(symm({Family::F, 4, 1}) == mk({2, 2, 1, 1}));
    CHECK(symm({Family::E, 6, 1}) == Eigen::VectorXi::Ones(6));
}

TEST_CASE("positive root counts match the classical closed forms") {
    for (const DynkinType& t : all_split_types(8)) {
        const RootSystem rs = RootSystem::build(t);
        CHECK_MESSAGE(rs.num_positive() == classical_positive_count(t), t.name());
        CHECK(rs.size() == 2 * rs.num_positive());
    }
}

TEST_CASE("A2 roots in generation order") {
    const RootSystem rs = RootSystem::build(parse_type("A2"));
    REQUIRE(rs.num_positive() == 3);
    CHECK(rs.root(0) == mk({1, 0}));
    CHECK(rs.root(1) == mk({0, 1}));
    CHECK(rs.root(2) == mk({1, 1}));
    CHECK(rs.root(3) == mk({-1, 0})); // negatives at the fixed offset
    CHECK(rs.negative_of(0) == 3);
    CHECK(rs.negative_of(4) == 1);
}

TEST_CASE("G2 generation: 12 roots, highest root 3a1+2a2") {
    const RootSystem rs = RootSystem::build(parse_type("G2"));
    CHECK(rs.size() == 12);
    CHECK(rs.root(rs.num_positive() - 1) == mk({3, 2}));
    CHECK(rs.contains(mk({2, 1})));
    CHECK_FALSE(rs.contains(mk({2, 2})));
}

TEST_CASE("E8 root count cross-checked against the even lattice") {
    const RootSystem rs = RootSystem::build(parse_type("E8"));
    CHECK(rs.size() == 240);
    CHECK(rs.size() == oracles::e8_lattice_root_count());
}

TEST_CASE("roots have uniform sign and closure under negation") {
    for (const char* name : {"A3", "B4", "C4", "D4", "G2", "F4", "E6"}) {
        const RootSystem rs = RootSystem::build(parse_type(name));
        for (int r = 0; r < rs.size(); ++r) {
            const Root& c = rs.root(r);
            const bool pos = (c.array() >= 0).all();
            const bool neg = (c.array() <= 0).all();
            CHECK(pos != neg);
            CHECK(rs.index_of(-c) == rs.negative_of(r));
            CHECK(rs.pairing_with_coroot(r, r) == 2);
        }
    }
}

TEST_CASE("root strings: pinned examples") {
    const RootSystem a2 = RootSystem::build(parse_type("A2"));
    const RootString s = a2.root_string(0, 1); // alpha = a1, beta = a2
    CHECK(s.down == 0);
    CHECK(s.up == 1);

    const RootSystem g2 = RootSystem::build(parse_type("G2"));
    const RootString t = g2.root_string(0, 1); // string a2, a2+a1, a2+2a1, a2+3a1
    CHECK(t.down == 0);
    CHECK(t.up == 3);

    const RootSystem b2 = RootSystem::build(parse_type("B2"));
    const int theta = b2.index_of(mk({1, 2}));
    REQUIRE(theta >= 0);
    const RootString u = b2.root_string(0, theta); // orthogonal pair
    CHECK(u.down == 0);
    CHECK(u.up == 0);
    CHECK(b2.pairing_with_coroot(theta, 0) == 0);
}

TEST_CASE("root string rejects beta = +-alpha") {
    const RootSystem rs = RootSystem::build(parse_type("A2"));
    CHECK_THROWS_AS(rs.root_string(0, 0), Error);
    CHECK_THROWS_AS(rs.root_string(0, rs.negative_of(0)), Error);
}

TEST_CASE("string identity down - up = <beta, alpha^v>") {
    for (const char* name : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
        const RootSystem rs = RootSystem::build(parse_type(name));
        for (int a = 0; a < rs.size(); ++a)
            for (int b = 0; b < rs.size(); ++b) {
                if (b == a || b == rs.negative_of(a)) continue;
                const RootString s = rs.root_string(a, b);
                CHECK(s.down - s.up == rs.pairing_with_coroot(b, a));
            }
    }
}

TEST_CASE("parents decompose every non-simple positive root") {
    const RootSystem rs = RootSystem::build(parse_type("F4"));
    for (int g = 0; g < rs.num_positive(); ++g) {
        const auto [i, b] = rs.parent(g);
        if (rs.height_of(g) == 1) {
            CHECK(i == -1);
            continue;
        }
        REQUIRE(i >= 0);
        Root sum = rs.root(b);
        sum[i] += 1;
        CHECK(sum == rs.root(g));
        // smallest simple index with g - alpha_i still positive
        for (int k = 0; k < i; ++k) {
            Root probe = rs.root(g);
            probe[k] -= 1;
            const int idx = rs.index_of(probe);
            CHECK((idx < 0 || !rs.is_positive(idx)));
        }
    }
}

TEST_CASE("non-Cartan input is rejected") {
    Eigen::MatrixXi affine(2, 2); // affine A1: valid-looking entries, infinite closure
    affine << 2, -2, -2, 2;
    CHECK_THROWS_AS(enumerate_roots(affine), InvariantViolation);

    Eigen::MatrixXi bad_diag(2, 2);
    bad_diag << 1, -1, -1, 2;
    CHECK_THROWS_AS(enumerate_roots(bad_diag), InvariantViolation);

    Eigen::MatrixXi bad_zero(2, 2);
    bad_zero << 2, 0, -1, 2;
    CHECK_THROWS_AS(enumerate_roots(bad_zero), InvariantViolation);

    Eigen::MatrixXi bad_range(2, 2);
    bad_range << 2, -4, -1, 2;
    CHECK_THROWS_AS(enumerate_roots(bad_range), InvariantViolation);
}

TEST_CASE("root system JSON matches the documented schema and round-trips") {
    const RootSystem rs = RootSystem::build(parse_type("A2"));
    const Json j = json_roots(rs);
    CHECK(j["type"] == "A2");
    CHECK(j["cartan"] == Json::array({Json::array({2, -1}), Json::array({-1, 2})}));
    CHECK(j["positive_roots"].size() == 3);
    CHECK(j["positive_roots"][2] == Json::array({1, 1}));

    const std::string bytes = dump(j);
    CHECK(dump(Json::parse(bytes)) == bytes);
}
