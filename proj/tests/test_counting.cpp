#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincons/counting.hpp"

using namespace spincons;

TEST_CASE("killing_dim pinned values and rank agreement at small valence") {
    CHECK(killing_dim(0, 0) == 1);
    CHECK(killing_dim(1, 0) == 15);
    CHECK(killing_dim(0, 2) == 10);
    CHECK(killing_dim(3, 0) == 300);
    // spanning + rank reproduces the closed form for k + l <= 2
    for (auto [k, twol] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {0, 4}})
        CHECK(killing_rank_dimension(k, twol) == killing_dim(k, twol));
}

TEST_CASE("current_counts pinned values") {
    auto c1 = current_counts(2, 0);
    CHECK(c1.T == 15);
    CHECK(c1.Z == 84);
    CHECK(c1.V == 378);
    auto ch = current_counts(1, 0);
    CHECK(ch.T == 1);
    CHECK(ch.Z == 15);
    CHECK(ch.V == 140);
    CHECK(current_counts(4, 0).T == 300);
    CHECK(current_counts(2, 1).T == 300);
}

TEST_CASE("weight_dims pinned values and sum identity") {
    CHECK(weight_dims(2, 1) == 84);
    CHECK(weight_dims(1, 1) == 15);
    CHECK(weight_dims(2, 2) == 678);
    CHECK(weight_dims(2, 2) == current_counts(2, 1).T + current_counts(2, 0).V);
}

TEST_CASE("consistency identities hold exactly for s in {1/2..2}, w <= 8") {
    for (int twos : {1, 2, 3, 4}) {
        ConsistencyReport rep = consistency_check(twos, 8);
        CHECK(rep.all_ok);
        for (const auto& row : rep.rows) {
            CHECK(row.weight_dim == row.from_counts);
            CHECK(row.weight_dim == row.from_killing);
            CHECK(row.weight_dim > 0);
        }
    }
    // the two worked examples: (k,k)_R at k = 2s+w-1 and the chiral doubling
    CHECK(killing_dim(2, 0) == 84);
    CHECK(2 * killing_dim(1, 4) == 378);
}

TEST_CASE("enumerate_basis cardinalities and rank certificates") {
    const double L = 6.283185307179586;
    // (s=1/2, w=0) -> 1; (s=1, w=0) -> 15; (s=1/2, w=1) -> 15
    struct Case { int twos, w; int64_t count; };
    for (const Case& c : {Case{1, 0, 1}, Case{2, 0, 15}, Case{1, 1, 15}}) {
        auto basis = enumerate_basis(c.twos, c.w);
        CHECK((int64_t)basis.size() == c.count);
        std::vector<CurrentFactory> facs;
        for (auto& e : basis) facs.push_back(e.factory);
        Rng rng(1234);
        std::vector<SolutionField> fams;
        for (size_t j = 0; j < basis.size() + 6; ++j)
            fams.push_back(random_commensurate_family(rng, c.twos, 3, L, 2));
        CHECK(independence_rank(facs, fams, 0.0, 11, L) == (int)basis.size());
    }
    CHECK_THROWS_AS(enumerate_basis(2, 1), std::length_error);   // 84 classes: formula-only
    CHECK_THROWS_AS(enumerate_basis(1, 3), std::length_error);
}
