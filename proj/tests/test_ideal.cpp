#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "edgereg/errors.hpp"
#include "edgereg/ideal.hpp"

using namespace edgereg;

namespace {

Multidegree md(std::vector<int> v) { return v; }

// Membership reference independent of divisibility: the ideal's monomials in
// a bounding box, produced by closing the generators under multiplication.
std::set<Multidegree> closure_in_box(const MonomialIdeal& i, const Multidegree& box) {
    std::set<Multidegree> inside;
    std::vector<Multidegree> queue;
    for (const auto& g : i.gens())
        if (divides(g, box)) {
            inside.insert(g);
            queue.push_back(g);
        }
    while (!queue.empty()) {
        Multidegree m = queue.back();
        queue.pop_back();
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == box[v]) continue;
            ++m[v];
            if (inside.insert(m).second) queue.push_back(m);
            --m[v];
        }
    }
    return inside;
}

void check_membership_against_closure(const MonomialIdeal& i, const Multidegree& box) {
    auto inside = closure_in_box(i, box);
    Multidegree m(box.size(), 0);
    while (true) {
        CAPTURE(m);
        CHECK(i.contains(m) == (inside.count(m) > 0));
        std::size_t v = 0;
        while (v < box.size() && m[v] == box[v]) m[v++] = 0;
        if (v == box.size()) break;
        ++m[v];
    }
}

}  // namespace

TEST_CASE("multidegree helpers") {
    CHECK(total_degree(md({2, 0, 3})) == 5);
    CHECK(total_degree(md({})) == 0);
    CHECK(divides(md({1, 0}), md({2, 1})));
    CHECK_FALSE(divides(md({1, 2}), md({2, 1})));
    CHECK(join(md({1, 0, 2}), md({0, 3, 2})) == md({1, 3, 2}));
}

TEST_CASE("monomial strings") {
    Ring r = Ring::x_vars(3);
    CHECK(monomial_string(r, md({1, 1, 0})) == "x1*x2");
    CHECK(monomial_string(r, md({2, 0, 1})) == "x1^2*x3");
    CHECK(monomial_string(r, md({0, 0, 0})) == "1");
}

TEST_CASE("construction canonicalizes") {
    Ring r = Ring::x_vars(2);
    auto i = MonomialIdeal::make(r, {md({1, 0}), md({1, 1}), md({2, 0}), md({0, 1})});
    CHECK(i.gens() == std::vector<Multidegree>{md({0, 1}), md({1, 0})});

    auto j = MonomialIdeal::make(r, {md({0, 1}), md({1, 0}), md({0, 1})});
    CHECK(i == j);  // duplicates collapse, order is canonical

    CHECK(MonomialIdeal().is_zero());
    CHECK(MonomialIdeal::make(r, {}).is_zero());
}

TEST_CASE("construction rejects bad input") {
    Ring r = Ring::x_vars(2);
    CHECK_THROWS_AS(MonomialIdeal::make(r, {md({0, 0})}), std::invalid_argument);  // unit
    CHECK_THROWS_AS(MonomialIdeal::make(r, {md({1, -1})}), std::invalid_argument);
    CHECK_THROWS_AS(MonomialIdeal::make(r, {md({1})}), std::invalid_argument);  // length
    Ring dup{{"x1", "x1"}};
    CHECK_THROWS_AS(MonomialIdeal::make(dup, {md({1, 0})}), std::invalid_argument);
}

TEST_CASE("generators stay minimal and sorted") {
    std::mt19937 gen(7);
    Ring r = Ring::x_vars(3);
    for (int round = 0; round < 50; ++round) {
        std::vector<Multidegree> gens;
        int count = 1 + static_cast<int>(gen() % 6);
        for (int k = 0; k < count; ++k) {
            Multidegree m(3);
            do {
                for (auto& e : m) e = static_cast<int>(gen() % 4);
            } while (total_degree(m) == 0);
            gens.push_back(m);
        }
        auto i = MonomialIdeal::make(r, gens);
        CHECK(std::is_sorted(i.gens().begin(), i.gens().end()));
        for (std::size_t a = 0; a < i.gens().size(); ++a)
            for (std::size_t b = 0; b < i.gens().size(); ++b)
                if (a != b) CHECK_FALSE(divides(i.gens()[a], i.gens()[b]));
        std::shuffle(gens.begin(), gens.end(), gen);
        CHECK(MonomialIdeal::make(r, gens) == i);
        for (const auto& g : gens) CHECK(i.contains(g));
    }
}

TEST_CASE("edge ideals") {
    auto i = edge_ideal(complete_graph(2));
    CHECK(i.ring().vars == std::vector<std::string>{"x1", "x2"});
    CHECK(i.gens() == std::vector<Multidegree>{md({1, 1})});

    CHECK(edge_ideal(cycle_graph(3)).gen_count() == 3);
    CHECK(edge_ideal(Graph::make(3, {})).is_zero());
    CHECK(edge_ideal(path_graph(3)).gens() ==
          std::vector<Multidegree>{md({0, 1, 1}), md({1, 1, 0})});
}

TEST_CASE("add_squares") {
    auto j = add_squares(edge_ideal(complete_graph(2)));
    CHECK(j.gens() == std::vector<Multidegree>{md({0, 2}), md({1, 1}), md({2, 0})});

    // squares swallow higher pure powers
    Ring r = Ring::x_vars(2);
    auto k = add_squares(MonomialIdeal::make(r, {md({3, 0}), md({1, 1})}));
    CHECK(k.gens() == std::vector<Multidegree>{md({0, 2}), md({1, 1}), md({2, 0})});

    auto squares_only = add_squares(MonomialIdeal::make(Ring::x_vars(2), {}));
    CHECK(squares_only.gens() == std::vector<Multidegree>{md({0, 2}), md({2, 0})});
}

TEST_CASE("powers") {
    Ring r3 = Ring::x_vars(3);
    auto i = MonomialIdeal::make(r3, {md({1, 1, 0}), md({0, 1, 1})});
    auto i2 = power(i, 2);
    CHECK(i2.gens() == std::vector<Multidegree>{md({0, 2, 2}), md({1, 2, 1}), md({2, 2, 0})});

    auto j = add_squares(edge_ideal(complete_graph(2)));
    auto j2 = power(j, 2);  // (x1, x2)^4
    CHECK(j2.gen_count() == 5);
    for (const auto& g : j2.gens()) CHECK(total_degree(g) == 4);
    CHECK_FALSE(j2.contains(md({3, 0})));
    CHECK(j2.contains(md({4, 0})));
    CHECK(j2.contains(md({2, 3})));

    CHECK(power(i, 1) == i);
    CHECK_THROWS_AS(power(i, 0), std::invalid_argument);
    CHECK(power(MonomialIdeal::make(r3, {}), 3).is_zero());
}

TEST_CASE("power is multiplicative") {
    auto i = add_squares(edge_ideal(path_graph(3)));
    for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t) {
            std::vector<Multidegree> products;
            auto is = power(i, s);
            auto it = power(i, t);
            for (const auto& a : is.gens())
                for (const auto& b : it.gens()) {
                    Multidegree m(a.size());
                    for (std::size_t v = 0; v < a.size(); ++v) m[v] = a[v] + b[v];
                    products.push_back(std::move(m));
                }
            CHECK(MonomialIdeal::make(i.ring(), products) == power(i, s + t));
        }
}

TEST_CASE("membership matches multiplicative closure") {
    Ring r3 = Ring::x_vars(3);
    check_membership_against_closure(
        MonomialIdeal::make(r3, {md({1, 1, 0}), md({0, 1, 1})}), md({4, 4, 4}));
    check_membership_against_closure(
        MonomialIdeal::make(r3, {md({2, 0, 0}), md({1, 1, 1}), md({0, 3, 0})}), md({4, 4, 4}));
    check_membership_against_closure(power(add_squares(edge_ideal(cycle_graph(3))), 2),
                                     md({4, 4, 4}));
}

TEST_CASE("polarization introduces primed copies") {
    Ring r1 = Ring::x_vars(1);
    auto p = polarize(MonomialIdeal::make(r1, {md({2})}));
    CHECK(p.ring().vars == std::vector<std::string>{"x1", "x1'"});
    CHECK(p.gens() == std::vector<Multidegree>{md({1, 1})});

    Ring r2 = Ring::x_vars(2);
    auto q = polarize(MonomialIdeal::make(r2, {md({3, 1})}));
    CHECK(q.ring().vars == std::vector<std::string>{"x1", "x2", "x1'", "x1''"});
    CHECK(q.gens() == std::vector<Multidegree>{md({1, 1, 1, 1})});

    auto tri = edge_ideal(cycle_graph(3));
    CHECK(polarize(tri) == tri);  // squarefree: ring unchanged too
}

TEST_CASE("polarizing squares gives the whisker edge ideal") {
    for (const Graph& g : {complete_graph(2), path_graph(3), cycle_graph(4), cycle_graph(5)}) {
        auto pol = polarize(add_squares(edge_ideal(g)));
        auto star = edge_ideal(whisker(g));
        CHECK(pol.gens() == star.gens());  // same exponent vectors, primed names
        CHECK(renamed(pol, star.ring()) == star);
    }
    auto pol = polarize(add_squares(edge_ideal(complete_graph(2))));
    CHECK(pol.ring().vars == std::vector<std::string>{"x1", "x2", "x1'", "x2'"});
    Ring xy{{"x1", "x2", "y1", "y2"}};
    auto r = renamed(pol, xy);
    CHECK(monomial_string(xy, r.gens()[1]) == "x1*y1");
}

TEST_CASE("polarization preserves degrees and generator count") {
    std::mt19937 gen(11);
    for (int round = 0; round < 30; ++round) {
        std::vector<Multidegree> gens;
        int count = 1 + static_cast<int>(gen() % 5);
        for (int k = 0; k < count; ++k) {
            Multidegree m(3);
            do {
                for (auto& e : m) e = static_cast<int>(gen() % 4);
            } while (total_degree(m) == 0);
            gens.push_back(m);
        }
        auto i = MonomialIdeal::make(Ring::x_vars(3), gens);
        auto p = polarize(i);
        REQUIRE(p.gen_count() == i.gen_count());
        std::vector<int> before, after;  // generator orders differ between rings
        for (int k = 0; k < p.gen_count(); ++k) {
            before.push_back(total_degree(i.gens()[k]));
            after.push_back(total_degree(p.gens()[k]));
            for (int e : p.gens()[k]) CHECK(e <= 1);
        }
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
        CHECK(polarize(p) == p);  // idempotent on squarefree output
    }
}

TEST_CASE("restriction") {
    Ring r3{{"x1", "x2", "y1"}};
    auto i = MonomialIdeal::make(r3, {md({1, 1, 0}), md({1, 0, 1})});
    auto cut = restrict_ideal(i, RestrictionVector::free_then_zero(2, 1));
    CHECK(cut.ring().vars == std::vector<std::string>{"x1", "x2"});
    CHECK(cut.gens() == std::vector<Multidegree>{md({1, 1})});

    // finite nonzero caps keep the variable
    auto capped = restrict_ideal(MonomialIdeal::make(Ring::x_vars(2), {md({2, 0}), md({1, 1})}),
                                 RestrictionVector{{1, RestrictionVector::unbounded}});
    CHECK(capped.ring().size() == 2);
    CHECK(capped.gens() == std::vector<Multidegree>{md({1, 1})});

    CHECK_THROWS_AS(restrict_ideal(i, RestrictionVector::all_unbounded(2)), std::invalid_argument);
    CHECK_THROWS_AS(restrict_ideal(i, RestrictionVector{{-3, 0, 0}}), std::invalid_argument);
    CHECK(restrict_ideal(i, RestrictionVector{{0, 0, 0}}).is_zero());
}

TEST_CASE("restricting whiskered powers recovers plain powers") {
    for (const Graph& g : {complete_graph(2), path_graph(3), cycle_graph(3), path_graph(4)}) {
        auto star = edge_ideal(whisker(g));
        auto caps = RestrictionVector::free_then_zero(g.n, g.n);
        for (int s = 1; s <= 3; ++s) {
            auto lhs = restrict_ideal(power(star, s), caps);
            auto rhs = power(edge_ideal(g), s);
            CAPTURE(g.edges);
            CAPTURE(s);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("standard monomials and socle") {
    auto jk2 = add_squares(edge_ideal(complete_graph(2)));
    CHECK(standard_monomials(jk2) ==
          std::vector<Multidegree>{md({0, 0}), md({0, 1}), md({1, 0})});
    CHECK(socle_degrees(jk2) == std::vector<int>{1, 1});

    auto jp3 = add_squares(edge_ideal(path_graph(3)));
    CHECK(standard_monomials(jp3).size() == 5);
    CHECK(socle_degrees(jp3) == std::vector<int>{1, 2});

    auto pure = MonomialIdeal::make(Ring::x_vars(2), {md({2, 0}), md({0, 2})});
    CHECK(standard_monomials(pure).size() == 4);
    CHECK(socle_degrees(pure) == std::vector<int>{2});

    CHECK_THROWS_AS(standard_monomials(edge_ideal(complete_graph(2))), std::invalid_argument);
}

TEST_CASE("standard monomials of squares ideals are stable-set indicators") {
    for (const Graph& g : {path_graph(4), cycle_graph(5), complete_graph(4)}) {
        auto j = add_squares(edge_ideal(g));
        auto standard = standard_monomials(j);
        std::set<Multidegree> expect;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
            bool stable = true;
            for (auto [u, v] : g.edges)
                if ((s >> (u - 1) & 1) && (s >> (v - 1) & 1)) stable = false;
            if (!stable) continue;
            Multidegree m(static_cast<std::size_t>(g.n), 0);
            for (int v = 1; v <= g.n; ++v)
                if (s >> (v - 1) & 1) m[v - 1] = 1;
            expect.insert(m);
        }
        CHECK(standard.size() == expect.size());
        for (const auto& m : standard) CHECK(expect.count(m) == 1);
    }
}

TEST_CASE("renamed") {
    auto i = edge_ideal(complete_graph(2));
    Ring ab{{"a", "b"}};
    auto j = renamed(i, ab);
    CHECK(j.ring() == ab);
    CHECK(j.gens() == i.gens());
    CHECK_THROWS_AS(renamed(i, Ring::x_vars(3)), std::invalid_argument);
}
