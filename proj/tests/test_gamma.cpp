#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "thompson/gamma.hpp"

using namespace thompson;

TEST_CASE("triple counts") {
  CHECK(triple_count(3) == 1);
  CHECK(triple_count(4) == 3);
  CHECK(triple_count(6) == 28);
  for (int n = 3; n <= 12; ++n)
    CHECK(BigInt(enumerate_triples(n).size()) == triple_count(n));
}

TEST_CASE("gamma graph basics") {
  LabelledGraph g3 = gamma_graph(3);
  CHECK(g3.vertex_count() == 1);
  CHECK(g3.edge_count() == 0);

  LabelledGraph g4 = gamma_graph(4);
  CHECK(g4.vertex_count() == 3);

  // vertex degree is bounded by twice the number of labels
  LabelledGraph g6 = gamma_graph(6);
  for (const auto& key : g6.vertex_keys()) CHECK(g6.degree(key) <= 2 * 3);
}

TEST_CASE("triple actions commute with the forest actions", "[property]") {
  const std::array<GenLabel, 6> labels = {GenLabel::x0,    GenLabel::x0inv,
                                          GenLabel::x1,    GenLabel::x1inv,
                                          GenLabel::xbar1, GenLabel::xbar1inv};
  for (const auto& f : enumerate_marked_forests(6)) {
    TreeTriple t = marked_to_triple(f);
    for (GenLabel l : labels) {
      auto viaForest = apply_generator(f, l);
      auto viaTriple = triple_action(t, l);
      if (viaForest) {
        REQUIRE(viaTriple);
        CHECK(marked_to_triple(*viaForest) == *viaTriple);
      } else {
        // the triple may still act when the forest lacks room only via the
        // sentinel leaves; completion makes the domains equal
        CHECK_FALSE(viaTriple);
      }
    }
  }
}

TEST_CASE("scattered graph counts") {
  for (int n = 0; n <= 6; ++n) {
    auto sg = scattered_graph(n);
    CHECK(sg.preQuotientVertices == (2 * n + 1) * catalan(n));
    // multiplicity of a class with s trees left and t trees right is (s+t choose s)
    for (const auto& [key, mult] : sg.multiplicity) {
      MarkedForest f = MarkedForest::parse(key);
      unsigned s = static_cast<unsigned>(f.mark);
      unsigned t = static_cast<unsigned>(f.trees.size() - 1 - f.mark);
      CHECK(mult == binomial(s + t, s));
    }
  }
  auto sg2 = scattered_graph(2);
  CHECK(sg2.multiplicity.at(". *. .") == 2);  // s = t = 1 gives two copies
}

TEST_CASE("scattered graph is gamma_{n+3} with the symmetric labels") {
  for (int n = 0; n <= 5; ++n) {
    auto sg = scattered_graph(n);
    LabelledGraph gamma = gamma_graph(n + 3).filter_labels({"x1", "xb1"});
    std::map<std::string, std::string> vmap;
    for (const auto& key : sg.graph.vertex_keys())
      vmap[key] = marked_to_triple(MarkedForest::parse(key)).str();
    CHECK(isomorphic_under_map(sg.graph, gamma, vmap));
  }
}
