#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adsv/field.hpp"
#include "adsv/stream.hpp"

namespace adsv::gen {

struct Options {
  std::uint32_t n = 8;
  double p = 0.3;        // edge probability for random kinds
  std::int64_t W = 4;    // weight bound for weighted kinds
  std::uint64_t seed = 1;
};

// Fixture kinds: gnp, path, cycle, clique, dag, weighted-gnp, adjlist.
GraphInstance make(const std::string& kind, const Options& opt);
std::vector<std::string> kinds();

// Building blocks used by the kinds above and by tests.
GraphInstance gnp(std::uint32_t n, double p, Rng& rng, StreamModel model = StreamModel::vanilla);
// Turnstile stream whose final graph is G(n,p) with multiplicities in [1,max_mult]; decoy edges are
// inserted and later deleted, and the token order is shuffled subject to each decoy's deletion
// following its insertion.
GraphInstance turnstile_gnp(std::uint32_t n, double p, std::int64_t max_mult, Rng& rng);
GraphInstance random_dag(std::uint32_t n, double p, Rng& rng);
// Each ordered pair is an arc with probability p; cycles are likely.
GraphInstance random_digraph(std::uint32_t n, double p, Rng& rng);
GraphInstance weighted_gnp(std::uint32_t n, double p, std::int64_t W, Rng& rng, StreamModel model);
GraphInstance adjlist_gnp(std::uint32_t n, double p, Rng& rng);
std::vector<Vertex> random_subset(std::uint32_t n, double p, Rng& rng);
// Appends `count` random vertex sets (or U|W pairs) as the edge-count set family.
void add_random_sets(GraphInstance& g, std::size_t count, bool pairs, Rng& rng);

// A random instance in the model the named scheme reads, with its source, target, sets and W filled in.
GraphInstance for_scheme(const std::string& scheme, std::uint32_t n, Rng& rng);

}  // namespace adsv::gen
