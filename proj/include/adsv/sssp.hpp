#pragma once

#include <memory>

#include "adsv/protocol.hpp"
#include "adsv/transcript.hpp"

namespace adsv {

// Distance label for vertices the source cannot reach.
inline constexpr std::uint64_t kUnreachable = kDelimiter;

// Source vertex of an instance; vertex 1 when the header names none.
Vertex source_of(const InstanceHeader& h);

std::unique_ptr<Scheme> make_sssp_unweighted();
std::unique_ptr<Scheme> make_stpath();
std::unique_ptr<Scheme> make_sssp_wturnstile();
std::unique_ptr<Scheme> make_sssp_wvanilla();

}  // namespace adsv
