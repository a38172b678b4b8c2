#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "sgc/search.hpp"

using namespace sgc;
using namespace sgc::testing;

TEST_CASE("orbit of an edgeless graph is itself") {
    OrbitIndex o = pivot_orbit(Graph(3));
    CHECK(o.members.size() == 1);
    CHECK_FALSE(o.truncated);
    CHECK(o.members[0].pivots.empty());
}

TEST_CASE("orbit of the three path is the three stars") {
    OrbitIndex o = pivot_orbit(path_graph(3));
    CHECK(o.members.size() == 3);
    CHECK_FALSE(o.truncated);
    // each member is reproduced by replaying its pivot word on the seed
    for (const OrbitMember& m : o.members) {
        Graph cur = path_graph(3);
        for (const auto& [u, v] : m.pivots) cur = pivot(cur, u, v);
        CHECK(cur == m.graph);
    }
}

TEST_CASE("orbit members are distinct as labeled graphs") {
    OrbitIndex o = pivot_orbit(cycle_graph(5));
    for (std::size_t i = 0; i < o.members.size(); ++i)
        for (std::size_t j = i + 1; j < o.members.size(); ++j)
            CHECK_FALSE(o.members[i].graph == o.members[j].graph);
}

TEST_CASE("orbit truncation is flagged") {
    OrbitIndex o = pivot_orbit(path_graph(3), 2);
    CHECK(o.truncated);
    CHECK(o.members.size() <= 2);
    CHECK_THROWS_AS(pivot_orbit(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("trivial containments") {
    CHECK(is_pivot_minor(Graph(0), path_graph(3)).answer == MinorAnswer::Yes);
    CHECK(is_pivot_minor(path_graph(4), path_graph(3)).answer == MinorAnswer::No);
}

TEST_CASE("labeled containment checks the identity prefix") {
    // the path pivots into the star at 2, freeing the prefix {0,1} of edges
    MinorResult r = is_pivot_minor(Graph(2), path_graph(3), false);
    CHECK(r.answer == MinorAnswer::Yes);
    REQUIRE(r.witness.has_value());
    CHECK(witness_matches(Graph(2), path_graph(3), *r.witness));

    // a lone distant edge never reaches the prefix without relabeling
    Graph host = Graph::from_edges(3, {{1, 2}});
    CHECK(is_pivot_minor(path_graph(2), host, false).answer == MinorAnswer::No);
    // yet it is there up to isomorphism
    CHECK(is_pivot_minor(path_graph(2), host, true).answer == MinorAnswer::Yes);
}

TEST_CASE("pivoting the square exposes the long path") {
    MinorResult r = is_pivot_minor(path_graph(3), cycle_graph(4));
    CHECK(r.answer == MinorAnswer::Yes);
    REQUIRE(r.witness.has_value());
    CHECK(witness_matches(path_graph(3), cycle_graph(4), *r.witness));
    Graph residual = replay_witness(cycle_graph(4), *r.witness);
    CHECK(residual.vertex_count() == 3);
}

TEST_CASE("bipartite hosts refute odd cycles immediately") {
    Graph host = generate(GridKind::Rectangular, 3, 3);
    MinorResult r = is_pivot_minor(complete_graph(3), host);
    CHECK(r.answer == MinorAnswer::No);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("the triangular grid contains the triangle") {
    MinorResult r = is_pivot_minor(complete_graph(3), generate(GridKind::Triangular, 2, 2));
    CHECK(r.answer == MinorAnswer::Yes);
    REQUIRE(r.witness.has_value());
    CHECK(witness_matches(complete_graph(3), generate(GridKind::Triangular, 2, 2), *r.witness));
}

TEST_CASE("a truncated search without a hit answers unknown") {
    MinorResult r = is_pivot_minor(complete_graph(3), cycle_graph(5), true, 1);
    CHECK(r.answer == MinorAnswer::Unknown);
}

TEST_CASE("witness replay validates its input") {
    PivotMinorWitness bad_pivot;
    bad_pivot.pivots = {{0, 2}}; // not an edge of the path
    CHECK_THROWS_AS(replay_witness(path_graph(3), bad_pivot), std::invalid_argument);

    PivotMinorWitness dup;
    dup.deletions = {1, 1};
    CHECK_THROWS_AS(replay_witness(path_graph(3), dup), std::invalid_argument);
}

TEST_CASE("witness matching rejects a forged embedding") {
    MinorResult r = is_pivot_minor(path_graph(3), cycle_graph(4));
    REQUIRE(r.witness.has_value());
    PivotMinorWitness forged = *r.witness;
    std::swap(forged.embedding[0], forged.embedding[1]);
    // the path is asymmetric under swapping an end with the middle
    CHECK_FALSE(witness_matches(path_graph(3), cycle_graph(4), forged));

    PivotMinorWitness short_emb = *r.witness;
    short_emb.embedding.pop_back();
    CHECK_FALSE(witness_matches(path_graph(3), cycle_graph(4), short_emb));
}

TEST_CASE("every found witness replays and matches") {
    // sweep small targets against small hosts in both modes
    std::vector<Graph> targets{Graph(1), path_graph(2), path_graph(3), complete_graph(3)};
    std::vector<Graph> hosts{path_graph(4), cycle_graph(4), complete_graph(4),
                             generate(GridKind::Triangular, 2, 2)};
    for (const Graph& g : targets)
        for (const Graph& h : hosts)
            for (bool iso : {false, true}) {
                MinorResult r = is_pivot_minor(g, h, iso);
                if (r.answer == MinorAnswer::Yes) {
                    REQUIRE(r.witness.has_value());
                    CHECK(witness_matches(g, h, *r.witness));
                }
            }
}
