#include <gtest/gtest.h>

#include <cmath>

#include "ramsey/cliques.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/graph_io.hpp"

using namespace ramsey;

TEST(Probability, ThresholdEncoding) {
  EXPECT_EQ(Probability::parse("0").threshold(), 0u);
  EXPECT_EQ(Probability::parse("1").threshold(), kThresholdOne);
  EXPECT_EQ(Probability::parse("1/2").threshold(), kThresholdOne / 2);
  EXPECT_EQ(Probability::parse("0.5").threshold(), kThresholdOne / 2);
  EXPECT_EQ(Probability::from_double(0.5).threshold(), kThresholdOne / 2);
  EXPECT_EQ(Probability::parse("1/3").threshold(), kThresholdOne / 3);
  EXPECT_EQ(*Probability::parse("0.05").exact(), make_rational(1, 20));
  EXPECT_THROW(Probability::parse("1.5"), ContractViolation);
  EXPECT_THROW(Probability::from_double(-0.1), ContractViolation);
  EXPECT_THROW(Probability::parse("abc"), ParseError);
}

TEST(Rng, CounterStreamIsRandomAccess) {
  RngStream a(42, Stream::Edges);
  RngStream b(42, Stream::Edges);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.at(static_cast<std::uint64_t>(i)));
  EXPECT_NE(RngStream(42, Stream::Edges).at(0), RngStream(42, Stream::Sampling).at(0));
  EXPECT_NE(RngStream(42, Stream::Edges).at(0), RngStream(43, Stream::Edges).at(0));
  // frozen first draw: the generator mapping must never change
  EXPECT_EQ(RngStream(0, Stream::Edges).at(0), splitmix64_finalize(stream_key(0, 0) + kGoldenGamma));
}

TEST(Gnp, Extremes) {
  for (RngSeed s : {0ULL, 1ULL, 99ULL}) {
    EXPECT_EQ(gnp(8, Probability::parse("0"), s), Graph(8));
    EXPECT_EQ(gnp(8, Probability::parse("1"), s), Graph::complete(8));
  }
  EXPECT_EQ(gnp(0, Probability::parse("1/2"), 3), Graph(0));
}

TEST(Gnp, EdgeCountWithinFiveSigma) {
  const double mean = 1000.0 * 999.0 / 4.0;
  const double sd = std::sqrt(1000.0 * 999.0 / 2.0 / 4.0);
  for (RngSeed s = 0; s < 20; ++s) {
    const double m = static_cast<double>(gnp(1000, Probability::parse("1/2"), s).edge_count());
    EXPECT_LT(std::abs(m - mean), 5 * sd) << "seed " << s;
  }
}

TEST(Gnp, DeterministicAndMonotoneCoupled) {
  const Probability lo = Probability::from_double(0.1), hi = Probability::from_double(0.35);
  for (RngSeed s = 0; s < 30; ++s) {
    Graph a = gnp(60, lo, s), b = gnp(60, hi, s);
    EXPECT_EQ(a, gnp(60, lo, s));
    EXPECT_EQ(graph_union(a, b), b) << "p1 <= p2 must give nested graphs";
  }
}

TEST(CompleteBipartite, Shape) {
  auto s7 = complete_bipartite(7);
  EXPECT_EQ(s7.partition.first.size(), 4u);
  EXPECT_EQ(s7.partition.second.size(), 3u);
  EXPECT_EQ(s7.graph.edge_count(), 12u);
  EXPECT_EQ(s7.partition.first, VertexSet(7, {0, 1, 2, 3}));

  EXPECT_TRUE(is_gamma_dense(complete_bipartite(100).graph, make_rational(1, 5)));
  for (std::size_t n = 2; n <= 40; ++n) {
    auto s = complete_bipartite(n);
    EXPECT_FALSE(contains_clique(s.graph, 3));
    EXPECT_EQ(s.graph.edge_count(), ((n + 1) / 2) * (n / 2));
    EXPECT_GE(Rational(static_cast<long long>(4 * s.graph.edge_count())), Rational(static_cast<long long>(n * n - 1)));
    EXPECT_TRUE((s.partition.first & s.partition.second).empty());
    EXPECT_EQ((s.partition.first | s.partition.second).size(), n);
  }
  EXPECT_THROW(complete_bipartite(1), ContractViolation);
}

TEST(Perturbed, Examples) {
  auto a = perturbed_bipartite(10, Probability::parse("0"), 5);
  EXPECT_EQ(a.graph, complete_bipartite_graph(5, 5));
  EXPECT_TRUE(a.random_edges.empty());

  auto b = perturbed_bipartite(10, Probability::parse("1"), 5);
  EXPECT_EQ(b.graph, Graph::complete(10));
  EXPECT_EQ(b.random_edges.size(), 45u);

  auto c1 = perturbed_bipartite(40, Probability::parse("0.05"), 7);
  auto c2 = perturbed_bipartite(40, Probability::parse("0.05"), 7);
  EXPECT_EQ(to_text(c1.graph), to_text(c2.graph));
}

TEST(Perturbed, LabelsCoverUnionAndContainSeed) {
  for (RngSeed s = 0; s < 20; ++s) {
    auto pg = perturbed_bipartite(31, Probability::parse("0.2"), s);
    Graph seed = Graph::from_edges(31, pg.seed_edges);
    Graph rnd = Graph::from_edges(31, pg.random_edges);
    EXPECT_EQ(graph_union(seed, rnd), pg.graph);
    EXPECT_EQ(graph_union(pg.graph, complete_bipartite(31).graph), pg.graph);
    EXPECT_EQ(rnd, gnp(31, Probability::parse("0.2"), s));
  }
  auto pg = perturbed_bipartite(10, Probability::parse("0"), 1);
  EXPECT_EQ(pg.gamma, make_rational(25, 100));
}

TEST(Perturbed, FileSeed) {
  Graph seed = Graph::from_edges(6, {{0, 1}, {2, 3}});
  auto pg = perturbed_from_seed(seed, 6, Probability::parse("0"), 1);
  EXPECT_EQ(pg.graph, seed);
  EXPECT_FALSE(pg.partition.has_value());
  EXPECT_THROW(perturbed_from_seed(seed, 7, Probability::parse("0"), 1), ContractViolation);
}

TEST(ExpectedCliqueCount, Examples) {
  EXPECT_EQ(expected_clique_count(6, Rational(1), 3), Rational(20));
  EXPECT_EQ(expected_clique_count(10, make_rational(1, 2), 3), Rational(15));
  for (long long n = 3; n < 10; ++n) EXPECT_EQ(expected_clique_count(n, Rational(0), 3), Rational(0));
  EXPECT_DOUBLE_EQ(expected_clique_count(10, 0.5, 3), 15.0);
  EXPECT_THROW(expected_clique_count(10, Rational(2), 3), ContractViolation);
}
