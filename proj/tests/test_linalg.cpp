#include <doctest.h>

#include <random>

#include "lanke/linalg.hpp"

using namespace lanke;

TEST_SUITE_BEGIN("linalg");

static SparseMatrix<RationalField> from_dense(const std::vector<std::vector<long>>& d) {
    RationalField Q;
    SparseMatrix<RationalField> m;
    m.ncols = d.empty() ? 0 : (Index)d[0].size();
    for (const auto& row : d) {
        SparseVec<RationalField> v;
        for (Index j = 0; j < row.size(); ++j)
            if (row[j]) v.terms.push_back({j, Q.from_long(row[j])});
        m.rows.push_back(v);
    }
    return m;
}

TEST_CASE("echelonize basics") {
    RationalField Q;
    SparseMatrix<RationalField> zero;
    zero.ncols = 4;
    zero.rows.resize(3);
    CHECK(echelonize(Q, zero).rank() == 0);

    auto ident = from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(echelonize(Q, ident).rank() == 3);

    auto m = from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    auto s = echelonize(Q, m);
    CHECK(s.rank() == 2);

    // idempotence: echelonizing the RREF basis returns the same rows
    SparseMatrix<RationalField> again;
    again.ncols = s.ncols;
    again.rows = s.basis;
    auto s2 = echelonize(Q, again);
    REQUIRE(s2.rank() == s.rank());
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        CHECK(s2.pivots[i] == s.pivots[i]);
        CHECK(s2.basis[i].terms == s.basis[i].terms);
    }
}

TEST_CASE("kernel_basis") {
    RationalField Q;
    // I - (1,2) acting on a 2-dim space: kernel is the symmetric line
    auto m = from_dense({{1, -1}, {-1, 1}});
    auto k = kernel_basis(Q, m);
    CHECK(k.size() == 1);

    auto inv = from_dense({{2, 1}, {1, 1}});
    CHECK(kernel_basis(Q, inv).empty());

    auto wide = from_dense({{1, 2, 3, 4}, {0, 0, 1, 1}});
    CHECK(kernel_basis(Q, wide).size() == 2);
}

template <class F>
static Index rank_of(const F& fld, const SparseMatrix<F>& m) {
    Echelon<F> e(fld, m.ncols);
    for (const auto& r : m.rows) e.insert(r);
    return e.rank();
}

TEST_CASE("rank equals rank of transpose on random sparse matrices") {
    std::mt19937 rng(12345);
    RationalField Q;
    for (int trial = 0; trial < 6; ++trial) {
        int nr = 40 + (int)(rng() % 161), nc = 40 + (int)(rng() % 161);
        SparseMatrix<RationalField> m, t;
        m.ncols = (Index)nc;
        t.ncols = (Index)nr;
        m.rows.resize(nr);
        t.rows.resize(nc);
        std::vector<std::vector<long>> dense(nr, std::vector<long>(nc, 0));
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (rng() % 100 < 5) dense[i][j] = (long)(rng() % 19) - 9;
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (dense[i][j]) {
                    m.rows[i].terms.push_back({(Index)j, Q.from_long(dense[i][j])});
                    t.rows[j].terms.push_back({(Index)i, Q.from_long(dense[i][j])});
                }
        CHECK(rank_of(Q, m) == rank_of(Q, t));
    }
}

TEST_CASE("multimodular rank agrees with rational elimination") {
    std::mt19937 rng(999);
    RationalField Q;
    PrimeField F1(MOD_PRIME_1), F2(MOD_PRIME_2);
    for (int trial = 0; trial < 8; ++trial) {
        int nr = 30 + (int)(rng() % 120), nc = 30 + (int)(rng() % 271);
        std::vector<IntRow> rows(nr);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (rng() % 100 < 4) rows[i].push_back({(Index)j, (long)(rng() % 2001) - 1000});
        Echelon<RationalField> eq(Q, nc);
        Echelon<PrimeField> e1(F1, nc), e2(F2, nc);
        for (const auto& r : rows) {
            eq.insert(row_from_ints(Q, r));
            e1.insert(row_from_ints(F1, r));
            e2.insert(row_from_ints(F2, r));
        }
        CHECK(e1.rank() == eq.rank());
        CHECK(e2.rank() == eq.rank());
    }
}

TEST_CASE("reduce and membership") {
    RationalField Q;
    Echelon<RationalField> e(Q, 3);
    e.insert(row_from_ints(Q, {{0, 1}, {1, 1}}));
    e.insert(row_from_ints(Q, {{1, 1}, {2, 1}}));
    CHECK(e.contains(row_from_ints(Q, {{0, 1}, {2, -1}})));
    CHECK_FALSE(e.contains(row_from_ints(Q, {{0, 1}, {2, 1}})));
    CHECK(e.reduce(row_from_ints(Q, {{0, 2}, {1, 2}})).empty());
}

TEST_CASE("subspace_intersection") {
    RationalField Q;
    // A = span{e0+e1, e2}, B = span{e1+e2, e0+e2}: A cap B is 1-dimensional
    std::vector<SparseVec<RationalField>> A = {row_from_ints(Q, {{0, 1}, {1, 1}}),
                                               row_from_ints(Q, {{2, 1}})};
    std::vector<SparseVec<RationalField>> B = {row_from_ints(Q, {{1, 1}, {2, 1}}),
                                               row_from_ints(Q, {{0, 1}, {2, 1}})};
    auto inter = subspace_intersection(Q, 3, A, B);
    CHECK(inter.rank() == 1);
    // the intersection vector lies in both spans
    Echelon<RationalField> ea(Q, 3), eb(Q, 3);
    for (auto& a : A) ea.insert(a);
    for (auto& b : B) eb.insert(b);
    for (auto& v : inter.basis) {
        CHECK(ea.contains(v));
        CHECK(eb.contains(v));
    }
}

TEST_CASE("induced_action_on_quotient") {
    RationalField Q;
    Echelon<RationalField> rel(Q, 2);
    rel.insert(row_from_ints(Q, {{0, 1}, {1, 1}}));  // e0 = -e1 in the quotient
    auto ident = from_dense({{1, 0}, {0, 1}});
    auto q = induced_action_on_quotient(Q, rel, ident);
    REQUIRE(q.ncols == 1);
    CHECK(q.rows[0].terms == std::vector<std::pair<Index, Rat>>{{0, Rat(1)}});

    // swap action on the quotient of the antisymmetric relation acts by -1
    auto swap = from_dense({{0, 1}, {1, 0}});
    auto qs = induced_action_on_quotient(Q, rel, swap);
    CHECK(qs.rows[0].terms == std::vector<std::pair<Index, Rat>>{{0, Rat(-1)}});

    // an action that does not preserve the relations is rejected
    Echelon<RationalField> rel2(Q, 2);
    rel2.insert(row_from_ints(Q, {{0, 1}}));
    CHECK_THROWS_AS(induced_action_on_quotient(Q, rel2, swap), structural_error);
}

TEST_CASE("dump format and crt") {
    RationalField Q;
    SparseMatrix<RationalField> m;
    m.ncols = 4;
    SparseVec<RationalField> v;
    v.terms.push_back({0, Rat(1, 2)});
    v.terms.push_back({3, Rat(-2)});
    m.rows.push_back(v);
    CHECK(dump_matrix(Q, m) == "0:1/2 3:-2\n");

    CHECK(crt_balanced(5, MOD_PRIME_1, 5, MOD_PRIME_2) == 5);
    std::uint64_t r1 = MOD_PRIME_1 - 7, r2 = MOD_PRIME_2 - 7;
    CHECK(crt_balanced(r1, MOD_PRIME_1, r2, MOD_PRIME_2) == -7);
    CHECK(crt_balanced(123456, MOD_PRIME_1, 123456, MOD_PRIME_2) == 123456);
}

TEST_SUITE_END();
