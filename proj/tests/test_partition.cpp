#include <doctest.h>

#include "logdeg/partition.hpp"

using namespace logdeg;

TEST_CASE("partition basics") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partition_count(10) == 42);

    PartitionTuple t{{Partition::of({3, 1})}};
    CHECK(m_of(t) == 3);
    PartitionTuple t2{{Partition::of({2, 2}), Partition::of({1})}};
    CHECK(m_of(t2) == 4);
    PartitionTuple empty{{Partition{}, Partition{}}};
    CHECK(m_of(empty) == 1);

    CHECK(sign_of(PartitionTuple{{Partition::of({2, 2})}}) == 1);   // (-1)^(4-2)
    CHECK(sign_of(PartitionTuple{{Partition::of({2})}}) == -1);     // (-1)^(2-1)
    CHECK(sign_of(PartitionTuple{{Partition::of({1, 1, 1})}}) == 1);

    CHECK(aut_of(PartitionTuple{{Partition::of({2, 2, 1})}}) == 2);
    CHECK(aut_of(PartitionTuple{{Partition::of({3, 2, 1})}}) == 1);
    CHECK(aut_of(PartitionTuple{{Partition::of({1, 1, 1}), Partition::of({2, 2})}}) == 12);
}

TEST_CASE("sign and m are multiplicative over concatenation") {
    auto cat = [](PartitionTuple a, const PartitionTuple& b) {
        for (const auto& e : b.entries) a.entries.push_back(e);
        return a;
    };
    std::vector<PartitionTuple> pool = {
        PartitionTuple{{Partition::of({2})}},
        PartitionTuple{{Partition::of({3, 1})}},
        PartitionTuple{{Partition::of({2, 2}), Partition::of({1, 1})}},
    };
    for (const auto& a : pool)
        for (const auto& b : pool) {
            PartitionTuple ab = cat(a, b);
            CHECK(sign_of(ab) == sign_of(a) * sign_of(b));
            CHECK(m_of(ab) == m_of(a) * m_of(b));
            CHECK(aut_of(ab) == aut_of(a) * aut_of(b));
            CHECK(sign_of(ab) * sign_of(ab) == 1);
        }
}

TEST_CASE("tuple counts match products of partition counts") {
    CHECK(tuples_of({Int(2), Int(3)}).size() == 2 * 3);
    CHECK(tuples_of({Int(4)}).size() == 5);
    CHECK(tuples_of({Int(2), Int(2), Int(2)}).size() == 8);
}

TEST_CASE("diagonal decomposition for n = (2)") {
    auto v = diagonal_decomposition({Int(2)}, PairingTable::trivial(1));
    // -(1/2) [(2) (x) (2)] + (1/2) [(1,1) (x) (1,1)]
    REQUIRE(v.terms.size() == 2);
    Partition two = Partition::of({2});
    Partition oneone = Partition::of({1, 1});
    for (const auto& [term, c] : v.terms) {
        CHECK(term.first.tuple == term.second.tuple);
        if (term.first.tuple.entries[0] == two) CHECK(c == make_rat(-1, 2));
        if (term.first.tuple.entries[0] == oneone) CHECK(c == make_rat(1, 2));
    }
}

TEST_CASE("diagonal decomposition trivial cases") {
    auto v1 = diagonal_decomposition({Int(1)}, PairingTable::trivial(1));
    REQUIRE(v1.terms.size() == 1);
    CHECK(v1.terms.begin()->second == 1);

    auto v11 = diagonal_decomposition({Int(1), Int(1)}, PairingTable::trivial(2));
    REQUIRE(v11.terms.size() == 1);
    CHECK(v11.terms.begin()->second == 1);
}

TEST_CASE("diagonal decomposition contracts to the identity resolution") {
    // Pairing the left side against the dual basis (multiplying by
    // (-1)^mu m_mu Aut(mu) on the matching term) recovers coefficient 1 on
    // every diagonal pair: the formal statement of Gamma Gamma^{-1} = id.
    for (const auto& sizes : std::vector<std::vector<Int>>{{Int(3)}, {Int(2), Int(2)}}) {
        auto v = diagonal_decomposition(sizes, PairingTable::trivial(sizes.size()));
        for (const auto& [term, c] : v.terms) {
            const auto& mu = term.first.tuple;
            CHECK(c * Rat(sign_of(mu)) * Rat(aut_of(mu)) * Rat(m_of(mu)) == 1);
        }
        CHECK(v.terms.size() == tuples_of(sizes).size());
    }
}

TEST_CASE("gamma inverse identity") {
    CHECK(gamma_inverse_check({Int(1)}));
    CHECK(gamma_inverse_check({Int(4)}));
    CHECK(gamma_inverse_check({Int(2), Int(3)}));
    CHECK(gamma_inverse_check({Int(5)}));
    CHECK(gamma_inverse_check({Int(2), Int(2), Int(2)}));
}

TEST_CASE("custom pairing tables") {
    PairingTable t;
    t.factors = {{LabelPair{"1", "pt", Rat(1)}, LabelPair{"pt", "1", Rat(1)}}};
    auto v = diagonal_decomposition({Int(1)}, t);
    CHECK(v.terms.size() == 2);  // (1)x(pt) and (pt)x(1)
    for (const auto& [term, c] : v.terms) CHECK(c == 1);
}
