#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "impbase/errors.hpp"
#include "impbase/reduction.hpp"

using namespace impbase;
using namespace fixtures;

namespace {

// Lattice isomorphism via the element map: the projected family must be the
// output family, and containment must transfer both ways.
bool families_isomorphic(const ClosureSystem& original, const ClosureSystem& image,
                         const ReductionMap& map) {
    std::vector<ElementSet> projected;
    for (ElementSet c : original.closed_family()) projected.push_back(map.project(c));
    std::vector<ElementSet> target = image.closed_family();
    if (projected.size() != target.size()) return false;

    auto sorted = [](std::vector<ElementSet> v) {
        std::sort(v.begin(), v.end(), ElementSetLess{});
        return v;
    };
    if (sorted(projected) != sorted(target)) return false;

    const auto& fam = original.closed_family();
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
            if (fam[i].subset_of(fam[j]) != projected[i].subset_of(projected[j])) return false;
    return true;
}

} // namespace

TEST_CASE("reduced and standard predicates") {
    CHECK(is_reduced(pentagon()));
    CHECK(is_standard(pentagon()));

    CHECK(is_reduced(pentagon4()));
    CHECK(!is_standard(pentagon4())); // phi(d) minus d is a b c, not closed

    Universe u({"x", "y", "z"});
    ClosureSystem merged = make_system(u, {"{}", "x y", "x y z"});
    CHECK(!is_reduced(merged)); // x and y share their singleton closure
    CHECK(!is_standard(merged));
}

TEST_CASE("reduce leaves reduced systems alone") {
    auto [out, map] = reduce_system(pentagon4());
    CHECK(out == pentagon4());
    CHECK(map.is_identity());
}

TEST_CASE("reduce merges equal singleton closures") {
    Universe u({"x", "y", "z"});
    ClosureSystem merged = make_system(u, {"{}", "x y", "x y z"});
    auto [out, map] = reduce_system(merged);
    CHECK(out.universe().labels() == std::vector<std::string>{"x", "z"});
    CHECK(map.representative(*u.index_of("y")) == *u.index_of("x"));
    CHECK(is_reduced(out));
    CHECK(families_isomorphic(merged, out, map));
}

TEST_CASE("reduce strips a non-empty zero closure") {
    Universe u({"z", "a", "b"});
    ClosureSystem sys = make_system(u, {"z", "z a", "z a b"});
    REQUIRE(sys.empty_closure() == parse_set(u, "z"));
    auto [out, map] = reduce_system(sys);
    CHECK(out.universe().labels() == std::vector<std::string>{"a", "b"});
    CHECK(map.removed_zero() == parse_set(u, "z"));
    CHECK(out.empty_closure().empty());
    CHECK(families_isomorphic(sys, out, map));
}

TEST_CASE("reduce is idempotent") {
    std::mt19937_64 rng(131);
    for (int t = 0; t < 60; ++t) {
        ClosureSystem sys = random_system(6, rng);
        auto [once, map1] = reduce_system(sys);
        auto [twice, map2] = reduce_system(once);
        CHECK(twice == once);
        CHECK(map2.is_identity());
        CHECK(is_reduced(once));
        CHECK(once.empty_closure().empty());
        CHECK(families_isomorphic(sys, once, map1));
    }
}

TEST_CASE("standardize the four-element pentagon representation") {
    auto [out, map] = standardize_system(pentagon4());
    CHECK(out == pentagon());
    Universe u4 = pentagon4().universe();
    CHECK(map.dropped_nonstandard() == parse_set(u4, "d"));
    CHECK(families_isomorphic(pentagon4(), out, map));
}

TEST_CASE("standardize leaves standard systems alone") {
    auto [out, map] = standardize_system(pentagon());
    CHECK(out == pentagon());
    CHECK(map.is_identity());
}

TEST_CASE("standardize requires a reduced input") {
    Universe u({"x", "y", "z"});
    ClosureSystem merged = make_system(u, {"{}", "x y", "x y z"});
    CHECK_THROWS_AS(standardize_system(merged), NotReducedError);
}

TEST_CASE("standardize keeps the lattice") {
    std::mt19937_64 rng(137);
    for (int t = 0; t < 60; ++t) {
        ClosureSystem sys = reduce_system(random_system(6, rng)).first;
        auto [out, map] = standardize_system(sys);
        CHECK(is_standard(out));
        CHECK(out.closed_family().size() == sys.closed_family().size());
        CHECK(families_isomorphic(sys, out, map));
        for (std::size_t i = 0; i < out.universe_size(); ++i) {
            ElementSet rest = out.singleton_closure(static_cast<int>(i)) -
                              ElementSet::single(static_cast<int>(i));
            CHECK(out.is_closed(rest));
        }
    }
}
