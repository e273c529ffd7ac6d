#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <optional>
#include <set>

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

IntMatrix m_of(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

LaurentPoly poly_of(int nvars, const std::vector<std::pair<std::vector<int>, long>>& terms) {
    LaurentPoly v(nvars);
    for (const auto& [e, c] : terms) v.add_term(e, c);
    return v;
}

std::map<Indec, ClusterRecord> records_by_object(const PatternResult& pat) {
    std::map<Indec, ClusterRecord> out;
    for (const ClusterRecord& r : pat.records) out.emplace(r.object, r);
    return out;
}

}  // namespace

TEST_CASE("matrix mutation follows the sign-split rule on all 2n rows") {
    IntMatrix top = m_of({{0, -1}, {2, 0}});
    CHECK(mutate_matrix(top, 2) == m_of({{0, 1}, {-2, 0}}));

    ExtendedMatrix em = with_principal_coefficients(top);
    CHECK(em.m == m_of({{0, -1}, {2, 0}, {1, 0}, {0, 1}}));
    CHECK(principal_part(em) == top);
    CHECK(coefficient_part(em) == IntMatrix::identity(2));

    ExtendedMatrix mu1 = mutate_matrix(em, 1);
    CHECK(mu1.m == m_of({{0, 1}, {-2, 0}, {-1, 0}, {0, 1}}));

    ExtendedMatrix mu2 = mutate_matrix(em, 2);
    CHECK(coefficient_part(mu2) == m_of({{1, 0}, {2, -1}}));

    for (int k = 1; k <= 2; ++k) {
        CHECK(mutate_matrix(mutate_matrix(top, k), k) == top);
        CHECK(mutate_matrix(mutate_matrix(em, k), k) == em);
    }
    CHECK(thrown_kind([&] { mutate_matrix(top, 0); }) == ErrorKind::BadDirection);
    CHECK(thrown_kind([&] { mutate_matrix(em, 3); }) == ErrorKind::BadDirection);
}

TEST_CASE("the initial seed tracks the shifted summands") {
    Seed s0 = initial_seed(worked_t());
    CHECK(s0.matrix.m == m_of({{0, -1}, {2, 0}, {1, 0}, {0, 1}}));
    CHECK(s0.cluster[0] == LaurentPoly::variable(4, 0));
    CHECK(s0.cluster[1] == LaurentPoly::variable(4, 1));
    CHECK(s0.objects.summands == std::vector<Indec>{Indec(3, 2, 3), Indec(3, 1, 3)});
}

TEST_CASE("seed mutation reproduces the worked rank-2 exchanges") {
    Seed s0 = initial_seed(worked_t());

    Seed s2 = mutate_seed(s0, 2);
    CHECK(s2.cluster[1] == poly_of(4, {{{1, -1, 0, 0}, 1}, {{0, -1, 0, 1}, 1}}));
    CHECK(s2.objects.summands[1] == Indec(1, 1, 3));
    CHECK(s2.cluster[0] == s0.cluster[0]);

    Seed s1 = mutate_seed(s0, 1);
    CHECK(s1.cluster[0] == poly_of(4, {{{-1, 2, 1, 0}, 1}, {{-1, 0, 0, 0}, 1}}));
    CHECK(s1.objects.summands[0] == Indec(2, 2, 3));

    for (int k = 1; k <= 2; ++k) {
        Seed back = mutate_seed(mutate_seed(s0, k), k);
        CHECK(back.matrix == s0.matrix);
        CHECK(back.cluster == s0.cluster);
        CHECK(back.objects.summands == s0.objects.summands);
    }
}

TEST_CASE("deeper rank-2 mutations, including a coefficient-2 term") {
    Seed s0 = initial_seed(worked_t());

    Seed s12 = mutate_seed(mutate_seed(s0, 1), 2);
    CHECK(s12.cluster[1] ==
          poly_of(4, {{{-1, 1, 1, 1}, 1}, {{-1, -1, 0, 1}, 1}, {{0, -1, 0, 0}, 1}}));
    CHECK(s12.objects.summands[1] == Indec(2, 1, 3));
    CHECK(denominator_vector(s12.cluster[1], 2) == std::vector<int>{1, 1});
    CHECK(g_vector(s12.cluster[1], principal_part(s0.matrix)) == std::vector<int>{0, -1});

    Seed s21 = mutate_seed(mutate_seed(s0, 2), 1);
    CHECK(s21.cluster[0] == poly_of(4, {{{-1, 0, 1, 2}, 1},
                                        {{1, -2, 0, 0}, 1},
                                        {{0, -2, 0, 1}, 2},
                                        {{-1, -2, 0, 2}, 1}}));
    CHECK(s21.objects.summands[0] == Indec(1, 2, 3));
    CHECK(denominator_vector(s21.cluster[0], 2) == std::vector<int>{1, 2});
    CHECK(g_vector(s21.cluster[0], principal_part(s0.matrix)) == std::vector<int>{1, -2});
}

TEST_CASE("denominator vectors read off minimal exponents") {
    LaurentPoly x2p = poly_of(4, {{{1, -1, 0, 0}, 1}, {{0, -1, 0, 1}, 1}});
    CHECK(denominator_vector(x2p, 2) == std::vector<int>{0, 1});
    LaurentPoly x1p = poly_of(4, {{{-1, 2, 1, 0}, 1}, {{-1, 0, 0, 0}, 1}});
    CHECK(denominator_vector(x1p, 2) == std::vector<int>{1, 0});
    CHECK(denominator_vector(LaurentPoly::variable(4, 0), 2) == std::vector<int>{-1, 0});
    CHECK(thrown_kind([] { denominator_vector(LaurentPoly(4), 2); }) == ErrorKind::Undefined);
}

TEST_CASE("g-vectors are the common degree under the principal grading") {
    IntMatrix b0 = m_of({{0, -1}, {2, 0}});
    LaurentPoly x2p = poly_of(4, {{{1, -1, 0, 0}, 1}, {{0, -1, 0, 1}, 1}});
    CHECK(g_vector(x2p, b0) == std::vector<int>{1, -1});
    LaurentPoly x1p = poly_of(4, {{{-1, 2, 1, 0}, 1}, {{-1, 0, 0, 0}, 1}});
    CHECK(g_vector(x1p, b0) == std::vector<int>{-1, 0});
    CHECK(g_vector(LaurentPoly::variable(4, 0), b0) == std::vector<int>{1, 0});
    CHECK(g_vector(LaurentPoly::variable(4, 1), b0) == std::vector<int>{0, 1});

    LaurentPoly bad = LaurentPoly::variable(4, 0) + LaurentPoly::variable(4, 1);
    CHECK(thrown_kind([&] { g_vector(bad, b0); }) == ErrorKind::GradingViolation);
    CHECK(thrown_kind([&] { g_vector(LaurentPoly(4), b0); }) == ErrorKind::Undefined);
}

TEST_CASE("c-matrices stay sign-coherent through the worked mutations") {
    Seed s0 = initial_seed(worked_t());
    CHECK(c_matrix(s0) == IntMatrix::identity(2));
    CHECK(c_matrix(mutate_seed(s0, 1)) == m_of({{-1, 0}, {0, 1}}));
    CHECK(c_matrix(mutate_seed(s0, 2)) == m_of({{1, 0}, {2, -1}}));

    Seed doctored = s0;
    doctored.matrix.m.at(2, 0) = 1;
    doctored.matrix.m.at(3, 0) = -1;
    CHECK(thrown_kind([&] { c_matrix(doctored); }) == ErrorKind::InternalInvariantBroken);
}

TEST_CASE("specializing coefficients recovers the plain exchange algebra") {
    LaurentPoly x2p = poly_of(4, {{{1, -1, 0, 0}, 1}, {{0, -1, 0, 1}, 1}});
    CHECK(specialize_coefficients(x2p) ==
          poly_of(4, {{{1, -1, 0, 0}, 1}, {{0, -1, 0, 0}, 1}}));
    LaurentPoly x1p = poly_of(4, {{{-1, 2, 1, 0}, 1}, {{-1, 0, 0, 0}, 1}});
    CHECK(specialize_coefficients(x1p) ==
          poly_of(4, {{{-1, 2, 0, 0}, 1}, {{-1, 0, 0, 0}, 1}}));
    CHECK(specialize_coefficients(LaurentPoly::constant(4, 1)) == LaurentPoly::constant(4, 1));
}

TEST_CASE("the rank-2 pattern closes on six seeds carrying all six variables") {
    PatternResult pat = enumerate_pattern(initial_seed(worked_t()));
    CHECK(pat.seeds.size() == 6);
    CHECK(pat.records.size() == 6);
    CHECK(pat.edges.size() == 6);

    // Each seed meets exactly two of the six undirected edges: a hexagon.
    std::map<int, int> degree;
    for (const PatternEdge& e : pat.edges) {
        ++degree[e.from];
        ++degree[e.to];
    }
    for (int i = 0; i < 6; ++i) CHECK(degree[i] == 2);

    std::map<Indec, ClusterRecord> rec = records_by_object(pat);
    auto expect = [&](Indec m, std::vector<int> den, std::vector<int> g) {
        REQUIRE(rec.contains(m));
        CHECK(rec.at(m).den == den);
        CHECK(rec.at(m).g == g);
    };
    expect(Indec(3, 2, 3), {-1, 0}, {1, 0});
    expect(Indec(3, 1, 3), {0, -1}, {0, 1});
    expect(Indec(2, 2, 3), {1, 0}, {-1, 0});
    expect(Indec(1, 1, 3), {0, 1}, {1, -1});
    expect(Indec(2, 1, 3), {1, 1}, {0, -1});
    expect(Indec(1, 2, 3), {1, 2}, {1, -2});

    // Positivity of every coefficient, and the known coefficient-2 term.
    for (const ClusterRecord& r : pat.records)
        for (const auto& [e, c] : r.variable.terms()) CHECK(c > 0);
    CHECK(rec.at(Indec(1, 2, 3)).variable.terms().at({0, -2, 0, 1}) == 2);

    // All c-vector columns across the pattern: the four positive vectors
    // and their negatives.
    std::set<std::vector<int>> cols;
    for (const Seed& s : pat.seeds) {
        IntMatrix c = c_matrix(s);
        for (int j = 0; j < 2; ++j)
            cols.insert({static_cast<int>(c.at(0, j).get_si()),
                         static_cast<int>(c.at(1, j).get_si())});
    }
    std::set<std::vector<int>> expected_cols{{1, 0},  {0, 1},  {1, 1},  {1, 2},
                                             {-1, 0}, {0, -1}, {-1, -1}, {-1, -2}};
    CHECK(cols == expected_cols);
}

TEST_CASE("pattern sizes at neighboring ranks") {
    PatternResult one = enumerate_pattern(initial_seed(make_maximal_rigid(1, {Indec(1, 1, 2)})));
    CHECK(one.seeds.size() == 2);
    CHECK(one.records.size() == 2);
    CHECK(one.edges.size() == 1);
    std::map<Indec, ClusterRecord> rec1 = records_by_object(one);
    CHECK(rec1.at(Indec(1, 1, 2)).den == std::vector<int>{1});
    CHECK(rec1.at(Indec(1, 1, 2)).g == std::vector<int>{-1});
    CHECK(rec1.at(Indec(2, 1, 2)).den == std::vector<int>{-1});

    MaximalRigid t3 =
        make_maximal_rigid(3, {Indec(1, 3, 4), Indec(1, 1, 4), Indec(1, 2, 4)});
    PatternResult three = enumerate_pattern(initial_seed(t3));
    CHECK(three.seeds.size() == 20);
    CHECK(three.records.size() == 12);
    CHECK(three.edges.size() == 30);
}

TEST_CASE("the seed cap aborts oversized enumerations") {
    CHECK(thrown_kind([] { enumerate_pattern(initial_seed(worked_t()), 3); }) ==
          ErrorKind::UsageError);
}

TEST_CASE("exact Laurent division rejects non-unit non-divisors") {
    LaurentPoly p = LaurentPoly::variable(2, 0) + LaurentPoly::constant(2, 1);

    // Monomials are units of the Laurent ring, so dividing by one succeeds.
    LaurentPoly by_unit = p.divide_exact(LaurentPoly::variable(2, 1));
    CHECK(by_unit == poly_of(2, {{{1, -1}, 1}, {{0, -1}, 1}}));

    LaurentPoly square_plus_one =
        LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 0) + LaurentPoly::constant(2, 1);
    CHECK(thrown_kind([&] { square_plus_one.divide_exact(p); }) ==
          ErrorKind::LaurentViolation);

    LaurentPoly q = (p * p).divide_exact(p);
    CHECK(q == p);
}
