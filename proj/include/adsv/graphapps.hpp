#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "adsv/oracle.hpp"
#include "adsv/protocol.hpp"

namespace adsv {

// Dual certificate for a maximum matching: 2|M| = |ustar| + n - (odd components of G - ustar).
struct MatchingCertificate {
  std::vector<std::pair<Vertex, Vertex>> matching;
  std::vector<Vertex> ustar;
  std::vector<std::vector<Vertex>> components;  // of G - ustar
};

// Maximum matching with the Gallai-Edmonds barrier as ustar.
MatchingCertificate tutte_berge_certificate(const oracle::DenseGraph& g);
// Size of a maximum matching in g with the vertices in `removed` deleted.
int max_matching_size(const oracle::DenseGraph& g, const std::vector<bool>& removed = {});

// Shape of the edge counts inside frugal composites: s' = floor(sqrt(s)), so their s'^2 table fits in O(s).
ShapeConfig inner_shape(const SchemeParams& p, std::uint32_t n);

std::unique_ptr<Scheme> make_maxmatch_frugal();
std::unique_ptr<Scheme> make_maxmatch_laconic();
std::unique_ptr<Scheme> make_mis();
std::unique_ptr<Scheme> make_toposort();
std::unique_ptr<Scheme> make_acyclicity();
std::unique_ptr<Scheme> make_components();

}  // namespace adsv
