#pragma once

#include <memory>
#include <vector>

#include "adsv/edgecount.hpp"
#include "adsv/protocol.hpp"

namespace adsv {

// Honest polynomials, exposed for tests.
std::vector<Fe> tri_laconic_poly(const GraphInstance& g, const ShapeConfig& shape, const FieldConfig& f);
std::vector<Fe> tri_frugal_poly(const GraphInstance& g, const ShapeConfig& shape, const FieldConfig& f);

std::unique_ptr<Scheme> make_tri_laconic();
std::unique_ptr<Scheme> make_tri_frugal();
std::unique_ptr<Scheme> make_tri_sparse();
std::unique_ptr<Scheme> make_tri_adj();

}  // namespace adsv
