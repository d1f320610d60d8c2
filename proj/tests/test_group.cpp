#include <doctest.h>

#include "gcpoly/finite_group.hpp"
#include "gcpoly/group.hpp"

using namespace gcp;

TEST_SUITE("group") {

TEST_CASE("descriptor validates p | r") {
    CHECK_THROWS_AS(GroupDescriptor(4, 3, 2), DomainError);
    CHECK(GroupDescriptor(4, 2, 2).order() == 16);
    CHECK(GroupDescriptor(3, 1, 3).order() == 162);
}

TEST_CASE("generator images") {
    GroupDescriptor d(3, 1, 2);
    GroupElem t1 = monomial_from_generator({'t', 1}, d);
    CHECK(t1.perm == std::vector<unsigned>{0, 1});
    CHECK(t1.phases == std::vector<unsigned>{1, 0});
    GroupElem s1 = monomial_from_generator({'s', 1}, d);
    CHECK(s1.perm == std::vector<unsigned>{1, 0});
    CHECK(s1.phases == std::vector<unsigned>{0, 0});
    // s_1 t_1 = t_2 s_1
    GroupElem t2 = monomial_from_generator({'t', 2}, d);
    CHECK(elem_mul(s1, t1) == elem_mul(t2, s1));
}

TEST_CASE("inverses over the whole group") {
    GroupDescriptor d(3, 1, 2);
    GroupElem one = identity_elem(3, 2);
    for (const GroupElem& a : enumerate_group(d)) {
        CHECK(elem_mul(a, elem_inv(a)) == one);
        CHECK(elem_mul(elem_inv(a), a) == one);
    }
}

TEST_CASE("enumeration orders") {
    CHECK(enumerate_group(GroupDescriptor(2, 1, 2)).size() == 8);
    CHECK(enumerate_group(GroupDescriptor(3, 1, 2)).size() == 18);
    CHECK(enumerate_group(GroupDescriptor(2, 1, 3)).size() == 48);
    CHECK(enumerate_group(GroupDescriptor(4, 2, 2)).size() == 16);
}

TEST_CASE("conjugacy structure of G(2,1,2)") {
    auto elems = enumerate_group(GroupDescriptor(2, 1, 2));
    auto classes = conjugacy_classes(elems);
    CHECK(classes.size() == 5);
    std::size_t total = 0;
    for (const auto& cls : classes) total += cls.size();
    CHECK(total == 8);
    // t_1 and t_2 are conjugate by s_1
    GroupDescriptor d(2, 1, 2);
    GroupElem t1 = monomial_from_generator({'t', 1}, d);
    GroupElem t2 = monomial_from_generator({'t', 2}, d);
    CHECK(is_conjugate_brute(t1, t2, elems));
    CHECK_FALSE(is_conjugate_brute(t1, identity_elem(2, 2), elems));
}

TEST_CASE("color cycle data is conjugation invariant") {
    auto elems = enumerate_group(GroupDescriptor(3, 1, 2));
    for (const GroupElem& a : elems)
        for (const GroupElem& x : elems) {
            GroupElem b = elem_mul(elem_mul(elem_inv(x), a), x);
            CHECK(color_cycle_invariant(a) == color_cycle_invariant(b));
        }
}

TEST_CASE("finite group wrapper") {
    FiniteGroup g = imprimitive_finite_group(GroupDescriptor(2, 1, 2));
    CHECK(g.order() == 8);
    CHECK(g.num_generators() == 3);
    CHECK(g.classes().size() == 5);
    for (int e = 0; e < g.order(); ++e) {
        CHECK(g.mul(e, g.inv(e)) == g.identity());
        // BFS parent words reproduce the element
        int acc = g.identity();
        for (int gi : g.word_for(e)) acc = g.mul(acc, g.generator_elements()[gi]);
        CHECK(acc == e);
    }
    GroupDescriptor d(2, 1, 2);
    GroupElem t1 = monomial_from_generator({'t', 1}, d);
    CHECK(g.find_element(t1) >= 0);
    GroupElem outside = identity_elem(3, 2);
    CHECK(g.find_element(outside) == -1);
}

TEST_CASE("direct product group") {
    FiniteGroup a = imprimitive_finite_group(GroupDescriptor(2, 1, 2));
    FiniteGroup p = direct_product(a, a);
    CHECK(p.order() == 64);
    CHECK(p.num_generators() == 6);
    CHECK(p.generator_names()[3] == "s1'");
}

TEST_CASE("symmetric and cyclic groups") {
    CHECK(symmetric_group(4).order() == 24);
    CHECK(cyclic_group(5).order() == 5);
    CHECK(cyclic_group(5).classes().size() == 5);
}

}  // TEST_SUITE
