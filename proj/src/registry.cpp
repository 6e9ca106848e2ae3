#include <map>

#include "adsv/edgecount.hpp"
#include "adsv/graphapps.hpp"
#include "adsv/protocol.hpp"
#include "adsv/sssp.hpp"
#include "adsv/triangles.hpp"

namespace adsv {

namespace {

const std::vector<std::unique_ptr<Scheme>>& registry() {
  static const std::vector<std::unique_ptr<Scheme>> all = [] {
    std::vector<std::unique_ptr<Scheme>> v;
    v.push_back(make_tri_laconic());
    v.push_back(make_tri_frugal());
    v.push_back(make_tri_sparse());
    v.push_back(make_tri_adj());
    v.push_back(make_edgecount_induced());
    v.push_back(make_edgecount_cross());
    v.push_back(make_maxmatch_frugal());
    v.push_back(make_maxmatch_laconic());
    v.push_back(make_mis());
    v.push_back(make_toposort());
    v.push_back(make_acyclicity());
    v.push_back(make_components());
    v.push_back(make_sssp_unweighted());
    v.push_back(make_stpath());
    v.push_back(make_sssp_wturnstile());
    v.push_back(make_sssp_wvanilla());
    return v;
  }();
  return all;
}

}  // namespace

const Scheme& find_scheme(const std::string& name) {
  for (const auto& s : registry())
    if (s->name() == name) return *s;
  throw ConfigError("unknown scheme '" + name + "'");
}

std::vector<std::string> scheme_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s->name());
  return out;
}

}  // namespace adsv
