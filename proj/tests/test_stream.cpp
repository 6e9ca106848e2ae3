#include <gtest/gtest.h>

#include <map>

#include "adsv/generate.hpp"
#include "adsv/stream.hpp"

using namespace adsv;

TEST(Parse, TurnstileTriangle) {
  auto g = parse_stream("n=3 model=turnstile\n1 2 +1\n2 3 +1\n1 3 +1\n");
  EXPECT_EQ(g.n(), 3u);
  ASSERT_EQ(g.tokens.size(), 3u);
  EXPECT_EQ(g.tokens[2].u, 1u);
  EXPECT_EQ(g.tokens[2].v, 3u);
  EXPECT_EQ(g.tokens[2].value, 1);
}

TEST(Parse, Cancellation) {
  auto g = parse_stream("n=2 model=turnstile\n1 2 +1\n1 2 -1\n");
  EXPECT_EQ(final_matrix(g)[1][2], 0);
  EXPECT_EQ(final_matrix(g)[2][1], 0);
}

TEST(Parse, AdjacencyListGroupedByOwner) {
  auto g = parse_stream("n=3 model=adjlist\n1: 2 3\n2: 1 3\n3: 1 2\n");
  ASSERT_EQ(g.tokens.size(), 6u);
  EXPECT_EQ(g.tokens[0].kind, TokenKind::adjlist_entry);
  EXPECT_EQ(g.tokens[0].u, 1u);
  EXPECT_EQ(g.tokens[3].u, 2u);
  EXPECT_THROW(parse_stream("n=3 model=adjlist\n1: 2\n2: 1\n1: 3\n"), ParseError);
}

TEST(Parse, HeaderOptionsAndSets) {
  auto g = parse_stream("n=4 model=weighted W=5 source=2 target=4\n1 2 5\n# comment\n3 4 1\n");
  EXPECT_EQ(g.header.W, 5);
  EXPECT_EQ(*g.header.source, 2u);
  EXPECT_EQ(*g.header.target, 4u);
  auto h = parse_stream("n=4 model=vanilla\n1 2\nset: 1 2 3\nset: 4\npair: 1 | 2 3\n");
  ASSERT_EQ(h.sets.size(), 2u);
  ASSERT_EQ(h.set_pairs.size(), 1u);
  auto ss = set_stream(h);
  EXPECT_EQ(ss.size(), 4u + 2u + 4u);
  EXPECT_EQ(ss.back().kind, TokenKind::set_end);
  EXPECT_EQ(ss[7].value, 1);  // vertex 2 of the pair is on the W side
}

TEST(Parse, ErrorsCarryLineNumbers) {
  try {
    parse_stream("n=3 model=vanilla\n1 2\n1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_stream("n=3 model=vanilla\n2 2\n"), ParseError);
  EXPECT_THROW(parse_stream("n=3 model=weighted W=2\n1 2 3\n"), ParseError);
  EXPECT_THROW(parse_stream("n=3 model=bogus\n"), ParseError);
  EXPECT_THROW(parse_stream("1 2\n"), ParseError);
  EXPECT_THROW(parse_stream("n=3 model=vanilla\nset: 1 2\n1 2\n"), ParseError);
}

TEST(Format, TextAndBinaryRoundTrip) {
  Rng rng(3);
  auto g = gen::turnstile_gnp(9, 0.4, 3, rng);
  g.sets.push_back({1, 2, 3});
  auto back = parse_stream(format_stream(g));
  EXPECT_EQ(final_matrix(back), final_matrix(g));
  EXPECT_EQ(back.tokens.size(), g.tokens.size());
  EXPECT_EQ(back.sets, g.sets);
  auto bin = decode_binary(encode_binary(g));
  EXPECT_EQ(format_stream(bin), format_stream(g));
}

TEST(Replay, ObserversSeeIdenticalSequences) {
  Rng rng(4);
  auto g = gen::gnp(10, 0.5, rng);
  std::vector<std::uint64_t> a, b;
  std::size_t count = 0;
  replay(g, {[&](const StreamToken& t) { a.push_back(t.u * 100 + t.v); },
             [&](const StreamToken& t) { b.push_back(t.u * 100 + t.v); },
             [&](const StreamToken&) { ++count; }});
  EXPECT_EQ(a, b);
  EXPECT_EQ(count, g.tokens.size());
  std::vector<std::uint64_t> again;
  replay(g, {[&](const StreamToken& t) { again.push_back(t.u * 100 + t.v); }});
  EXPECT_EQ(again, a);
}

TEST(Generate, Reproducible) {
  gen::Options o;
  o.n = 12;
  o.seed = 77;
  for (const auto& k : gen::kinds()) EXPECT_EQ(format_stream(gen::make(k, o)), format_stream(gen::make(k, o))) << k;
  o.n = 5;
  auto k5 = gen::make("clique", o);
  EXPECT_EQ(k5.tokens.size(), 10u);
}

TEST(Generate, TurnstileNeverGoesNegative) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    auto g = gen::turnstile_gnp(10, 0.4, 3, rng);
    std::map<std::pair<Vertex, Vertex>, std::int64_t> m;
    for (const auto& t : g.tokens) {
      auto& x = m[{std::min(t.u, t.v), std::max(t.u, t.v)}];
      x += t.value;
      ASSERT_GE(x, 0);
    }
  }
}
