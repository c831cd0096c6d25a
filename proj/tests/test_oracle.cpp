#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "kunzsg/cross_validate.hpp"
#include "kunzsg/oracle.hpp"
#include "support.hpp"

using namespace kunzsg;
using namespace kunzsg::oracle;
using testing::kv;

TEST_CASE("brute gaps")
{
    const std::vector<Int> a{3, 10, 14}, b{2, 3}, c{4, 5, 6, 7}, bad{4, 6};
    CHECK(brute_gaps(a) == std::vector<Int>{1, 2, 4, 5, 7, 8, 11});
    CHECK(brute_gaps(b) == std::vector<Int>{1});
    CHECK(brute_gaps(c) == std::vector<Int>{1, 2, 3});
    CHECK_THROWS_AS((void)brute_gaps(bad), Error);
    CHECK(brute_kunz(a) == kv(3, {3, 4}));
}

TEST_CASE("element table bound")
{
    for (const auto& x : enumerate_kunz(4, 5)) {
        const auto t = ElementTable::of(x);
        REQUIRE(t.bound() >= x.frobenius() + 2 * 4 + 2);
        REQUIRE(t.frobenius() == x.frobenius());
    }
}

TEST_CASE("brute special gaps")
{
    CHECK(brute_special_gaps(kv(4, {5, 4, 5})) == std::vector<Int>{14, 17, 19});
    CHECK(brute_special_gaps(kv(3, {1, 1})) == std::vector<Int>{2});
    CHECK(brute_special_gaps(kv(2, {5})) == std::vector<Int>{9});
}

TEST_CASE("oversemigroups")
{
    const auto o = enumerate_oversemigroups(kv(3, {3, 4}));
    // 2 + 4 + 4 valid vectors in the box (1..3) x (1..4)
    CHECK(o.size() == 10);
    std::vector<KunzVector> irr;
    for (const auto& v : o) {
        if (brute_m_irreducible(v)) irr.push_back(v);
    }
    CHECK(irr == std::vector<KunzVector>{kv(3, {1, 1}), kv(3, {1, 2}), kv(3, {2, 1}),
                                          kv(3, {2, 3}), kv(3, {2, 4}), kv(3, {3, 1})});
    CHECK(enumerate_oversemigroups(kv(3, {1, 1})) == std::vector<KunzVector>{kv(3, {1, 1})});
    CHECK(enumerate_oversemigroups(kv(4, {1, 1, 2}))
          == std::vector<KunzVector>{kv(4, {1, 1, 1}), kv(4, {1, 1, 2})});
}

TEST_CASE("oversemigroup count is monotone")
{
    const auto corpus = enumerate_kunz(3, 6);
    std::map<KunzVector, std::size_t> size;
    for (const auto& x : corpus) size[x] = enumerate_oversemigroups(x).size();
    for (const auto& a : corpus) {
        for (const auto& b : corpus) {
            if (componentwise_leq(a, b)) REQUIRE(size[a] <= size[b]);
        }
    }
}

TEST_CASE("adjunction reaches exactly the box scan")
{
    for (int m = 2; m <= 5; ++m) {
        for (const auto& x : enumerate_kunz(m, 4)) {
            const auto adj = oversemigroups_by_adjunction(x);
            REQUIRE(adj == enumerate_oversemigroups(x));
            REQUIRE(adj.front() == KunzVector::ordinary(m));
        }
    }
}

TEST_CASE("genus levels from adjunction")
{
    // grow downward from the ordinary semigroup: every genus-g vector is found
    // as some vector whose adjunction closure contains a genus-(g-1) vector
    for (int m = 3; m <= 5; ++m) {
        const Int top = m + 4;
        std::map<Int, std::set<KunzVector>> by_genus;
        for (const auto& x : enumerate_kunz(m, top)) {
            if (x.genus() <= top) by_genus[x.genus()].insert(x);
        }
        std::map<Int, std::set<KunzVector>> reached;
        for (const auto& [g, level] : by_genus) {
            for (const auto& x : level) {
                for (const auto& y : oversemigroups_by_adjunction(x)) {
                    Int gy = 0;
                    for (Int c : y.coords()) gy += c;
                    reached[gy].insert(y);
                }
            }
        }
        for (const auto& [g, level] : by_genus) REQUIRE(reached[g] == level);
        REQUIRE(by_genus[m - 1].size() == 1);
    }
}

TEST_CASE("brute decompositions")
{
    auto d = brute_minimal_decompositions(kv(3, {13, 7}));
    CHECK(d.min_size == 2);
    REQUIRE(d.decompositions.size() == 1);
    CHECK(testing::gens_of(d.decompositions[0])
          == std::vector<std::vector<Int>>{{3, 13, 23}, {3, 20}});

    d = brute_minimal_decompositions(kv(4, {5, 4, 5}));
    CHECK(d.min_size == 3);
    CHECK(d.decompositions.size() == 9);
    for (const auto& f : d.decompositions) CHECK(intersect(f) == kv(4, {5, 4, 5}));

    d = brute_minimal_decompositions(kv(4, {1, 1, 1}));
    CHECK(d.min_size == 1);
    CHECK(d.decompositions == std::vector<std::vector<KunzVector>>{{kv(4, {1, 1, 1})}});
}

TEST_CASE("irreducibility oracles")
{
    CHECK(brute_m_irreducible(kv(5, {1, 2, 1, 1})));
    CHECK_FALSE(brute_irreducible(kv(5, {1, 2, 1, 1})));
    CHECK(brute_irreducible(kv(3, {1, 1})));
}

TEST_CASE("cross_validate")
{
    auto r = cross_validate(3, 6);
    CHECK(r.ok());
    CHECK(r.vectors == 26);

    r = cross_validate(4, 1);
    CHECK(r.ok());
    CHECK(r.vectors == 1);

    r = cross_validate(5, 3);
    CHECK(r.ok());
    for (const auto& c : r.checks) CHECK(c.failed == 0);

    CHECK_THROWS_AS((void)cross_validate(7, 3), Error);
    CHECK_THROWS_AS((void)cross_validate(3, 9), Error);
    CHECK_THROWS_AS((void)cross_validate(1, 3), Error);
}

TEST_CASE("parallel report equals the serial one")
{
    for (int m : {3, 4, 5}) {
        const auto a = cross_validate(m, 4);
        const auto b = cross_validate_serial(m, 4);
        REQUIRE(a.vectors == b.vectors);
        REQUIRE(a.failures == b.failures);
        REQUIRE(a.notes == b.notes);
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            REQUIRE(a.checks[i].name == b.checks[i].name);
            REQUIRE(a.checks[i].checked == b.checks[i].checked);
            REQUIRE(a.checks[i].failed == b.checks[i].failed);
        }
    }
}

TEST_CASE("printed notes are reported")
{
    const auto r = cross_validate(4, 5);
    CHECK(r.ok());
    CHECK_FALSE(r.notes.empty());
    bool containment = false, count = false, frob = false;
    for (const auto& n : r.notes) {
        containment = containment || n.find("31") != std::string::npos;
        count = count || n.find("52") != std::string::npos;
        frob = frob || n.find("4,6,13") != std::string::npos;
    }
    CHECK(containment);
    CHECK(count);
    CHECK(frob);
}
