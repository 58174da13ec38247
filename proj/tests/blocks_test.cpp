#include "bipart/blocks.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "bipart/bipartizer.hpp"
#include "bipart/enumerate.hpp"
#include "bipart/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace bipart {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAreArray;
using namespace testing;

using Pairs = std::vector<std::pair<VertexSet, std::size_t>>;

VertexSet from_mask(std::uint32_t m) {
  VertexSet s;
  for (Vertex v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1U) s.insert(v);
  }
  return s;
}

CliqueWeighting unit_on(const Graph& h, const std::vector<VertexSet>& keys) {
  CliqueWeighting f(h.order());
  for (const VertexSet& k : keys) f.assign(h, k, 1);
  return f;
}

TEST(BlockDecompositionTest, Examples) {
  const BlockDecomposition h = block_decomposition(tree_solid_h());
  EXPECT_THAT(h.blocks, ElementsAre(VertexSet{0, 1, 2}, VertexSet{2, 3}));
  EXPECT_EQ(h.cut_vertices, VertexSet{2});
  EXPECT_EQ(block_size_excess(h), 3u);

  const BlockDecomposition p4 = block_decomposition(path(4));
  EXPECT_EQ(p4.blocks.size(), 3u);
  EXPECT_EQ(p4.cut_vertices, (VertexSet{1, 2}));

  const BlockDecomposition k4 = block_decomposition(complete(4));
  EXPECT_THAT(k4.blocks, ElementsAre(VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(k4.cut_vertices.empty());

  EXPECT_THAT(block_decomposition(Graph(1)).blocks, ElementsAre(VertexSet{0}));
  EXPECT_THAT(block_decomposition(Graph(2)).blocks, ElementsAre(VertexSet{0}, VertexSet{1}));
}

TEST(BlockDecompositionTest, MatchesBruteForceBlocks) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, {}, [&](const Graph& g) {
      std::vector<VertexSet> expected;
      for (std::uint32_t m : oracle::blocks(g)) expected.push_back(from_mask(m));
      const BlockDecomposition d = block_decomposition(g);
      ASSERT_THAT(d.blocks, UnorderedElementsAreArray(expected));
      bool all_complete = true;
      for (const VertexSet& b : d.blocks) all_complete &= oracle::is_clique_mask(g, oracle::to_mask(b));
      EXPECT_EQ(is_block_graph(g), all_complete);
      for (Vertex v = 0; v < n; ++v) {
        const auto holders = std::count_if(d.blocks.begin(), d.blocks.end(),
                                           [&](const VertexSet& b) { return b.contains(v); });
        EXPECT_EQ(d.cut_vertices.contains(v), holders >= 2);
      }
    });
  }
}

TEST(BlockDecompositionTest, BlockCountIdentityOnConnectedGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, {true, false}, [&](const Graph& g) {
      EXPECT_EQ(block_size_excess(block_decomposition(g)), n - 1);
    });
  }
}

TEST(BlockGraphTest, Examples) {
  EXPECT_TRUE(is_block_graph(tree_solid_h()));
  EXPECT_TRUE(is_block_graph(tree_hollow_h()));
  EXPECT_FALSE(is_block_graph(cycle(4)));
  EXPECT_TRUE(is_block_graph(path(6)));
  EXPECT_TRUE(is_block_graph(star(4)));
}

// All complete paths u..v whose inner vertices and cliques do not repeat,
// built by choosing the inner vertex sequence first.
std::vector<std::pair<VertexSet, std::vector<VertexSet>>> brute_paths(
    const Graph& h, const CliqueWeighting& f, Vertex u, Vertex v) {
  std::vector<VertexSet> positive;
  for (const auto& [k, w] : f.entries()) {
    if (k.size() >= 2) positive.push_back(k);
  }
  std::vector<std::pair<VertexSet, std::vector<VertexSet>>> out;
  std::vector<Vertex> seq{u};
  std::function<void()> grow = [&] {
    std::vector<Vertex> full = seq;
    full.push_back(v);
    std::vector<VertexSet> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t step) {
      if (step + 1 == full.size()) {
        out.emplace_back(VertexSet(seq.begin() + 1, seq.end()), chosen);
        return;
      }
      for (const VertexSet& k : positive) {
        if (!k.contains(full[step]) || !k.contains(full[step + 1])) continue;
        if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
        chosen.push_back(k);
        pick(step + 1);
        chosen.pop_back();
      }
    };
    pick(0);
    for (Vertex w = 0; w < h.order(); ++w) {
      if (w == u || w == v || std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      seq.push_back(w);
      grow();
      seq.pop_back();
    }
  };
  grow();
  return out;
}

TEST(DisjointPathsTest, Examples) {
  EXPECT_TRUE(find_two_disjoint_f_paths(paw(), paw_weights(), 0, 1));
  const Graph p3 = path(3);
  EXPECT_FALSE(find_two_disjoint_f_paths(p3, unit_on(p3, {{0, 1}, {1, 2}}), 0, 2));
  const Graph k2 = complete(2);
  EXPECT_FALSE(find_two_disjoint_f_paths(k2, unit_on(k2, {{0, 1}}), 0, 1));
  EXPECT_THROW(find_two_disjoint_f_paths(k2, unit_on(k2, {{0, 1}}), 1, 1), PreconditionError);
}

TEST(DisjointPathsTest, WholeTriangleGivesNoPair) {
  // u-w-v around the triangle would reuse the triangle itself.
  const Graph k3 = complete(3);
  const CliqueWeighting f = unit_on(k3, {{0, 1, 2}});
  EXPECT_FALSE(find_two_disjoint_f_paths(k3, f, 0, 1));
  EXPECT_TRUE(is_tree(bipartize(k3, f).graph()));
}

TEST(DisjointPathsTest, FourCycleGivesTheTwoSides) {
  const Graph c4 = cycle(4);
  const auto paths =
      find_two_disjoint_f_paths(c4, unit_on(c4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0, 2);
  ASSERT_TRUE(paths);
  EXPECT_THAT(paths->first.vertices, ElementsAre(0, 1, 2));
  EXPECT_THAT(paths->second.vertices, ElementsAre(0, 3, 2));
  EXPECT_THAT(paths->first.cliques, ElementsAre(VertexSet{0, 1}, VertexSet{1, 2}));
}

TEST(DisjointPathsTest, AgreesWithBruteForceOnSmallSupports) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for_each_labeled_graph(n, {true, false}, [&](const Graph& h) {
      std::vector<VertexSet> keys;
      for (const Clique& k : enumerate_cliques(h)) {
        if (k.size() >= 2) keys.push_back(k);
      }
      for (std::uint32_t mask = 0; mask < (1U << keys.size()); ++mask) {
        std::vector<VertexSet> chosen;
        for (std::size_t i = 0; i < keys.size(); ++i) {
          if ((mask >> i) & 1U) chosen.push_back(keys[i]);
        }
        const CliqueWeighting f = unit_on(h, chosen);
        const Graph b = bipartize(h, f).graph();
        // A forest has exactly order - components edges.
        const bool cyclic = b.size() + components(b).size() > b.order();
        for (Vertex v = 1; v < n; ++v) {
          for (Vertex u = 0; u < v; ++u) {
            const auto all = brute_paths(h, f, u, v);
            bool exists = false;
            for (std::size_t i = 0; i < all.size() && !exists; ++i) {
              for (std::size_t j = i + 1; j < all.size() && !exists; ++j) {
                exists = !all[i].first.intersects(all[j].first);
              }
            }
            const auto found = find_two_disjoint_f_paths(h, f, u, v);
            ASSERT_EQ(found.has_value(), exists) << "mask " << mask << " pair " << u << v;
            if (found) EXPECT_TRUE(cyclic);
          }
        }
      }
    });
  }
}

TEST(TreeCharacterizationTest, SampleTreeWeightingIsATree) {
  const TreeVerdict v = is_tree_bipartization(tree_solid_h(), tree_solid_f());
  EXPECT_TRUE(v.is_tree);
  EXPECT_EQ(v.violated_condition, 0);
  const Graph g = bipartize(tree_solid_h(), tree_solid_f()).graph();
  EXPECT_TRUE(is_tree(g));
  EXPECT_EQ(g.order(), 11u);
  EXPECT_TRUE(is_tree_bipartization(tree_hollow_h(), tree_hollow_f()).is_tree);
}

TEST(TreeCharacterizationTest, PawWeightingsFail) {
  const TreeVerdict f = is_tree_bipartization(paw(), paw_weights());
  EXPECT_FALSE(f.is_tree);
  EXPECT_EQ(f.violated_condition, 1);
  EXPECT_EQ(f.witness, (VertexSet{0, 1}));

  const TreeVerdict g = is_tree_bipartization(paw(), paw_unit_edges());
  EXPECT_FALSE(g.is_tree);
  EXPECT_EQ(g.violated_condition, 3);
  EXPECT_EQ(g.witness, (VertexSet{0, 1}));
  EXPECT_FALSE(is_tree(bipartize(paw(), paw_unit_edges()).graph()));
}

TEST(TreeCharacterizationTest, NonBlockGraph) {
  const Graph c4 = cycle(4);
  const TreeVerdict v = is_tree_bipartization(c4, unit_on(c4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(v.violated_condition, 2);
  EXPECT_EQ(v.witness, (VertexSet{0, 1, 2, 3}));
}

TEST(TreeCharacterizationTest, MissingBlockWeight) {
  const Graph k3 = complete(3);
  const TreeVerdict v = is_tree_bipartization(k3, unit_on(k3, {{0, 1}, {0, 1, 2}, {1, 2}}));
  EXPECT_EQ(v.violated_condition, 3);
}

TEST(TreeCharacterizationTest, SingletonsAreIgnored) {
  CliqueWeighting f = tree_solid_f();
  f.assign(tree_solid_h(), {2}, 5);
  EXPECT_TRUE(is_tree_bipartization(tree_solid_h(), f).is_tree);
}

TEST(TreeCharacterizationTest, Preconditions) {
  EXPECT_THROW(is_tree_bipartization(Graph(2), CliqueWeighting(2)), PreconditionError);
  const Graph k2 = complete(2);
  EXPECT_THROW(is_tree_bipartization(k2, weighting_from_pairs(k2, Pairs{{{0}, 1}})),
               PreconditionError);
}

TEST(TreeWeightingTest, Examples) {
  const Graph k3 = complete(3);
  const CliqueWeighting f = tree_weighting_for(k3);
  EXPECT_EQ(f, unit_on(k3, {{0, 1}, {0, 2}}));
  const Graph g = bipartize(k3, f).graph();
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(is_tree(g));

  const Graph k1(1);
  EXPECT_EQ(bipartize(k1, tree_weighting_for(k1)).graph(), complete(2));

  const Graph p3 = path(3);
  EXPECT_EQ(tree_weighting_for(p3), unit_on(p3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_tree(bipartize(p3, tree_weighting_for(p3)).graph()));
  EXPECT_THROW(tree_weighting_for(Graph(0)), PreconditionError);
  EXPECT_THROW(tree_weighting_for(Graph(2)), PreconditionError);
}

TEST(TreeWeightingTest, AlwaysATreeOnConnectedGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, {true, false}, [&](const Graph& h) {
      EXPECT_TRUE(is_tree(bipartize(h, tree_weighting_for(h)).graph()));
    });
  }
}

}  // namespace
}  // namespace bipart
