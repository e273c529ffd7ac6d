#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "ctube/rigid.hpp"
#include "ctube/seed.hpp"

using namespace ctube;

namespace {

template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f) {
    try {
        std::forward<F>(f)();
        return std::nullopt;
    } catch (const CtError& e) {
        return e.kind();
    }
}

MaximalRigid worked_t() { return make_maximal_rigid(2, {Indec(1, 2, 3), Indec(1, 1, 3)}); }

std::set<std::set<Indec>> as_sets(const std::vector<MaximalRigid>& ts) {
    std::set<std::set<Indec>> out;
    for (const MaximalRigid& t : ts) out.emplace(t.summands.begin(), t.summands.end());
    return out;
}

}  // namespace

TEST_CASE("enum_rigid_indecs lists the n(n+1) grid in lexicographic order") {
    CHECK(enum_rigid_indecs(1) == std::vector<Indec>{Indec(1, 1, 2), Indec(2, 1, 2)});
    std::vector<Indec> two = enum_rigid_indecs(2);
    CHECK(two.size() == 6);
    CHECK(std::is_sorted(two.begin(), two.end()));
    CHECK(two.front() == Indec(1, 1, 3));
    CHECK(two.back() == Indec(3, 2, 3));
    CHECK(enum_rigid_indecs(4).size() == 20);
    CHECK(thrown_kind([] { enum_rigid_indecs(0); }) == ErrorKind::InvalidRank);
}

TEST_CASE("enum_maximal_rigids matches the central binomial census") {
    std::vector<MaximalRigid> one = enum_maximal_rigids(1);
    CHECK(one.size() == 2);
    CHECK(one[0].summands == std::vector<Indec>{Indec(1, 1, 2)});
    CHECK(one[1].summands == std::vector<Indec>{Indec(2, 1, 2)});

    std::vector<MaximalRigid> two = enum_maximal_rigids(2);
    CHECK(two.size() == 6);
    std::set<std::set<Indec>> expected;
    for (int a = 1; a <= 3; ++a) {
        expected.insert({Indec(a, 2, 3), Indec(a, 1, 3)});
        expected.insert({Indec(a, 2, 3), Indec(a + 1, 1, 3)});
    }
    CHECK(as_sets(two) == expected);

    CHECK(enum_maximal_rigids(3).size() == 20);
}

TEST_CASE("make_maximal_rigid validates and pins the long summand first") {
    MaximalRigid t = make_maximal_rigid(2, {Indec(1, 1, 3), Indec(1, 2, 3)});
    CHECK(t.summands == std::vector<Indec>{Indec(1, 2, 3), Indec(1, 1, 3)});

    CHECK(thrown_kind([] { make_maximal_rigid(0, {}); }) == ErrorKind::InvalidRank);
    CHECK(thrown_kind([] { make_maximal_rigid(2, {Indec(1, 2, 3)}); }) == ErrorKind::UsageError);
    CHECK(thrown_kind([] { make_maximal_rigid(2, {Indec(1, 3, 3), Indec(1, 1, 3)}); }) ==
          ErrorKind::NotRigid);
    CHECK(thrown_kind([] { make_maximal_rigid(2, {Indec(1, 2, 4), Indec(1, 1, 4)}); }) ==
          ErrorKind::RankMismatch);
    // Ext-orthogonality failures and missing length-n summands are rejected.
    CHECK(thrown_kind([] { make_maximal_rigid(2, {Indec(1, 2, 3), Indec(2, 2, 3)}); }) ==
          ErrorKind::UsageError);
    CHECK(thrown_kind([] { make_maximal_rigid(2, {Indec(1, 1, 3), Indec(2, 1, 3)}); }) ==
          ErrorKind::UsageError);
}

TEST_CASE("mutate_rigid replaces one slot by the unique completion") {
    MaximalRigid t = worked_t();

    auto [t2, e2] = mutate_rigid(t, 2);
    CHECK(t2.summands == std::vector<Indec>{Indec(1, 2, 3), Indec(2, 1, 3)});
    CHECK(e2.removed == Indec(1, 1, 3));
    CHECK(e2.replacement == Indec(2, 1, 3));
    CHECK(e2.U == TubeObject{});
    CHECK(e2.U_prime == TubeObject{Indec(1, 2, 3)});

    auto [t1, e1] = mutate_rigid(t, 1);
    CHECK(t1.summands == std::vector<Indec>{Indec(3, 2, 3), Indec(1, 1, 3)});
    CHECK(e1.removed == Indec(1, 2, 3));
    CHECK(e1.replacement == Indec(3, 2, 3));
    CHECK(e1.U == TubeObject{Indec(1, 1, 3), Indec(1, 1, 3)});
    CHECK(e1.U_prime == TubeObject{});

    for (int k = 1; k <= 2; ++k) {
        auto [tm, em] = mutate_rigid(t, k);
        auto [back, eb] = mutate_rigid(tm, k);
        CHECK(back.summands == t.summands);
        CHECK(eb.removed == em.replacement);
        CHECK(eb.replacement == em.removed);
    }

    CHECK(thrown_kind([&] { mutate_rigid(t, 0); }) == ErrorKind::BadDirection);
    CHECK(thrown_kind([&] { mutate_rigid(t, 3); }) == ErrorKind::BadDirection);
}

TEST_CASE("exchange_triangles instantiates the middle-term formulas") {
    // Short pair, direct orientation, both zero factors in one middle.
    auto [u_a, up_a] = exchange_triangles(Indec(1, 1, 3), Indec(2, 1, 3));
    CHECK(u_a == TubeObject{});
    CHECK(up_a == TubeObject{Indec(1, 2, 3)});

    // Long pair with h = 2: one middle vanishes entirely.
    auto [u_b, up_b] = exchange_triangles(Indec(1, 2, 3), Indec(3, 2, 3));
    CHECK(u_b == TubeObject{Indec(1, 1, 3), Indec(1, 1, 3)});
    CHECK(up_b == TubeObject{});

    // Long pair with h = 1, the reverse replacement.
    auto [u_c, up_c] = exchange_triangles(Indec(3, 2, 3), Indec(1, 2, 3));
    CHECK(u_c == TubeObject{});
    CHECK(up_c == TubeObject{Indec(1, 1, 3), Indec(1, 1, 3)});

    // Short pair that only fits with the roles swapped.
    auto [u_d, up_d] = exchange_triangles(Indec(1, 1, 3), Indec(3, 1, 3));
    CHECK(u_d == TubeObject{Indec(3, 2, 3)});
    CHECK(up_d == TubeObject{});

    CHECK(thrown_kind([] { exchange_triangles(Indec(1, 2, 3), Indec(1, 1, 3)); }) ==
          ErrorKind::NotExchangePair);
    CHECK(thrown_kind([] { exchange_triangles(Indec(1, 1, 3), Indec(1, 1, 3)); }) ==
          ErrorKind::NotExchangePair);
    CHECK(thrown_kind([] { exchange_triangles(Indec(1, 2, 3), Indec(1, 2, 3)); }) ==
          ErrorKind::NotExchangePair);
}

TEST_CASE("b_matrix reproduces the worked example and its invariants") {
    IntMatrix b = b_matrix(worked_t());
    REQUIRE(b.rows() == 2);
    REQUIRE(b.cols() == 2);
    CHECK(b.at(0, 0) == 0);
    CHECK(b.at(0, 1) == -1);
    CHECK(b.at(1, 0) == 2);
    CHECK(b.at(1, 1) == 0);

    IntMatrix b1 = b_matrix(enum_maximal_rigids(1)[0]);
    REQUIRE(b1.rows() == 1);
    CHECK(b1.at(0, 0) == 0);

    for (int n = 1; n <= 3; ++n)
        for (const MaximalRigid& t : enum_maximal_rigids(n)) {
            IntMatrix bt = b_matrix(t);
            // diag(2,1,...,1) B_T is skew-symmetric.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    mpz_class lhs = bt.at(i, j) * (i == 0 ? 2 : 1);
                    mpz_class rhs = bt.at(j, i) * (j == 0 ? 2 : 1);
                    CHECK(lhs == -rhs);
                }
        }
}

TEST_CASE("quiver_arrows inverts the matrix relation and adds the loop") {
    std::map<std::pair<int, int>, int> arrows = quiver_arrows(worked_t());
    std::map<std::pair<int, int>, int> expected{{{1, 1}, 1}, {{1, 2}, 0}, {{2, 1}, 1}};
    CHECK(arrows == expected);
    for (const MaximalRigid& t : enum_maximal_rigids(3)) {
        std::map<std::pair<int, int>, int> arr = quiver_arrows(t);
        CHECK(arr.at({1, 1}) == 1);
        // No 2-cycles away from the loop.
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j) CHECK((arr.at({i, j}) == 0 || arr.at({j, i}) == 0));
    }
}

TEST_CASE("check_compatibility holds for every rigid object at rank 2") {
    MaximalRigid t = worked_t();
    auto [t2, e2] = mutate_rigid(t, 2);
    CHECK(check_compatibility(Indec(3, 1, 3), e2));
    auto [t1, e1] = mutate_rigid(t, 1);
    CHECK(check_compatibility(Indec(1, 2, 3), e1));
    CHECK(thrown_kind([&] { check_compatibility(Indec(1, 3, 3), e1); }) == ErrorKind::NotRigid);

    for (const MaximalRigid& root : enum_maximal_rigids(2))
        for (int k = 1; k <= 2; ++k) {
            auto [tm, e] = mutate_rigid(root, k);
            for (const Indec& m : enum_rigid_indecs(2)) CHECK(check_compatibility(m, e));
        }
}

TEST_CASE("mutation commutes with b_matrix at small rank") {
    for (int n = 1; n <= 3; ++n)
        for (const MaximalRigid& t : enum_maximal_rigids(n))
            for (int k = 1; k <= n; ++k) {
                IntMatrix left = mutate_matrix(b_matrix(t), k);
                IntMatrix right = b_matrix(mutate_rigid(t, k).first);
                CHECK(left == right);
            }
}
