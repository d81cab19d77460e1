#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "impbase/bases.hpp"
#include "impbase/io.hpp"

using namespace impbase;
using namespace fixtures;

TEST_CASE("imp files round trip") {
    std::istringstream in(
        "# a comment\n"
        "b -> a\n"
        "\n"
        "a c -> b   # trailing comment\n"
        "{} -> c\n");
    Basis basis = read_imp(in);
    REQUIRE(basis.size() == 3);
    CHECK(basis.universe.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(basis.implications[2].premise.empty());

    std::ostringstream out;
    write_imp(out, basis);
    std::istringstream back(out.str());
    Basis again = read_imp(back);
    CHECK(again.implications == basis.implications);
    CHECK(again.universe == basis.universe);
}

TEST_CASE("imp parse errors name the line") {
    std::istringstream no_arrow("a b c\n");
    CHECK_THROWS_WITH_AS(read_imp(no_arrow), doctest::Contains("line 1"), ParseError);

    std::istringstream no_rhs("x ->\n");
    CHECK_THROWS_AS(read_imp(no_rhs), ParseError);

    std::istringstream two_arrows("a -> b -> c\n");
    CHECK_THROWS_AS(read_imp(two_arrows), ParseError);

    std::istringstream bad_empty("a {} -> b\n");
    CHECK_THROWS_AS(read_imp(bad_empty), ParseError);
}

TEST_CASE("fam files round trip with an explicit universe") {
    ClosureSystem sys = sample5();
    std::ostringstream out;
    write_fam(out, sys);
    std::istringstream back(out.str());
    ClosureSystem again = read_fam(back);
    CHECK(again == sys);
    CHECK(!again.was_completed());
}

TEST_CASE("fam universe defaults to natural label order") {
    std::istringstream in(
        "# family\n"
        "b a\n"
        "{}\n"
        "c\n");
    ClosureSystem sys = read_fam(in);
    CHECK(sys.universe().labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(sys.closed_family().size() == 4); // the full set joins {}, {b a}, {c}
}

TEST_CASE("fam universe line fixes the order and the label set") {
    std::istringstream in(
        "universe: 1 2 3\n"
        "{}\n"
        "1 2\n");
    ClosureSystem sys = read_fam(in);
    CHECK(sys.universe().labels() == std::vector<std::string>{"1", "2", "3"});

    std::istringstream bad(
        "universe: 1 2\n"
        "3\n");
    CHECK_THROWS_AS(read_fam(bad), ParseError);
}

TEST_CASE("rebind maps labels onto another universe") {
    Universe target({"x", "y", "z"});
    std::istringstream in("y -> x\n");
    Basis basis = read_imp(in);
    Basis bound = rebind(basis, target);
    CHECK(bound.implications[0].premise == ElementSet::single(1));
    CHECK(bound.implications[0].conclusion == ElementSet::single(0));

    std::istringstream other("w -> x\n");
    CHECK_THROWS_AS(rebind(read_imp(other), target), std::invalid_argument);
}

TEST_CASE("random bases survive a write and read back") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 30; ++t) {
        ClosureSystem sys = random_system(5, rng);
        Basis delta = build_sigma_delta(sys);
        if (delta.empty()) continue;
        std::ostringstream out;
        write_imp(out, delta);
        std::istringstream back(out.str());
        Basis again = rebind(read_imp(back), sys.universe());
        CHECK(again.implications == delta.implications);
    }
}
