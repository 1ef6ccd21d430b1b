// Copyright 2026 The colnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colnum/report_json.hpp"

#include "colnum/error.hpp"

namespace colnum {

Json radius_json(Radius r) {
  if (r.is_infinite()) return "inf";
  return r.value();
}

Json to_json(const ReachReport& report) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["r"] = radius_json(report.radius);
  j["value"] = report.value;
  j["per_vertex"] = report.per_vertex;
  return j;
}

Json to_json(const ExactResult& result) {
  Json j;
  j["kind"] = to_string(result.kind);
  j["r"] = radius_json(result.radius);
  j["value"] = result.value;
  j["witness"] = result.witness.sequence();
  j["explored"] = result.explored;
  return j;
}

Json to_json(const UniformRun& run) {
  Json j;
  j["mode"] = run.mode;
  j["n"] = run.sigma_star.size();
  j["k"] = run.k;
  j["weights"] = run.weights;
  j["A"] = run.total_weight;
  if (run.eps) j["eps"] = to_string(*run.eps);
  j["sigma_star"] = run.sigma_star.sequence();

  Json layers = Json::array();
  for (const auto& b : run.layers) {
    layers.push_back({{"r", b.r}, {"a", b.a}, {"w", b.w}, {"lhs", b.lhs},
                      {"rhs_num", b.rhs_num}, {"rhs_den", b.rhs_den}, {"ok", b.ok}});
  }
  j["layers"] = std::move(layers);

  if (run.prepared) {
    Json c4 = Json::array();
    for (const auto& c : run.prepared->claim4)
      c4.push_back({{"scol2_h", c.scol2_h}, {"wcol2r_g", c.wcol2r_g}, {"ok", c.holds}});
    j["claim4"] = std::move(c4);
  }
  if (run.trace) {
    j["claim5_max"] = run.trace->claim5_max;
    j["claim5_violations"] = run.trace->claim5_violations;
    j["rounds"] = run.trace->rounds;
    bool uniform_counts = true;
    for (auto c : run.trace->processed_counts) uniform_counts = uniform_counts && c == run.total_weight;
    j["processed_exactly_A"] = uniform_counts;
  } else {
    j["claim5_max"] = Json::array();
  }

  if (!run.checks.empty() || run.mode != "instance") {
    Json checks = Json::array();
    for (const auto& c : run.checks)
      checks.push_back({{"r", c.r}, {"lhs", c.lhs}, {"w", c.w}, {"bound", to_string(c.bound)}, {"ok", c.ok}});
    j["checks"] = std::move(checks);
  }
  if (!run.audit.empty()) {
    Json audit = Json::array();
    for (const auto& a : run.audit) {
      audit.push_back({{"x1", a.max_x1}, {"x2", a.max_x2}, {"x3", a.max_x3},
                       {"bound_x1", a.bound_x1}, {"bound_x2", to_string(a.bound_x2)},
                       {"bound_x3", to_string(a.bound_x3)}, {"ok", a.ok}});
    }
    j["audit"] = std::move(audit);
  }
  j["ok"] = run.ok;
  return j;
}

Json labels_json(const Example21Graph& g) {
  Json j = Json::object();
  for (Vertex v = 0; v < g.labels.size(); ++v) j[g.labels[v]] = v;
  return j;
}

Json to_json(const Example21Facts& facts) {
  return Json{{"E1", facts.e1}, {"E2", facts.e2}, {"E3", facts.e3}, {"failures", facts.failures}};
}

Json to_json(const Example21Claims& c, const Example21Params& p) {
  Json j;
  j["params"] = {{"t", p.t}, {"n", p.n}, {"r", p.r}, {"r_prime", p.r_prime}};
  j["claim1"] = {{"scol_r", c.claim1_value}, {"bound", c.claim1_bound}, {"ok", c.claim1}};
  j["claim2"] = {{"scol_r_prime", c.claim2_value}, {"bound", c.claim2_bound}, {"ok", c.claim2}};
  j["claim3"] = {{"samples", c.samples},
                 {"threshold_r", "246*n/1000"},
                 {"threshold_r_prime", "754*n*t/1000"},
                 {"failures", c.claim3_failures},
                 {"min_scol_r", c.claim3_min_scol_r},
                 {"max_scol_r", c.claim3_max_scol_r},
                 {"min_scol_r_prime", c.claim3_min_scol_rp},
                 {"max_scol_r_prime", c.claim3_max_scol_rp},
                 {"ok", c.claim3_failures == 0}};
  j["ok"] = c.ok();
  return j;
}

UniformInstance parse_instance_json(std::string_view text, std::size_t exact_cap) {
  try {
    auto doc = Json::parse(text);
    UniformInstance inst;
    inst.n = doc.at("n").get<std::size_t>();
    const auto& layers = doc.at("layers");
    if (!layers.is_array() || layers.empty()) throw_invalid("instance: \"layers\" must be a nonempty array");
    for (std::size_t i = 0; i < layers.size(); ++i) {
      const auto& lj = layers[i];
      std::vector<Edge> edges;
      for (const auto& e : lj.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw_invalid("instance: layer " + std::to_string(i) + ": bad edge");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
      Layer layer;
      try {
        layer.graph = Graph(inst.n, edges);
      } catch (const Error& err) {
        throw_invalid("instance: layer " + std::to_string(i) + ": " + err.what());
      }
      auto r = lj.at("r").get<long long>();
      auto a = lj.at("a").get<long long>();
      if (r < 1 || a < 1) throw_invalid("instance: layer " + std::to_string(i) + ": r and a must be positive");
      layer.r = static_cast<unsigned>(r);
      layer.a = static_cast<std::uint64_t>(a);
      const auto& sj = lj.at("sigma");
      if (sj.is_string()) {
        auto s = sj.get<std::string>();
        SigmaProvider provider;
        if (s == "exact") {
          provider = exact_sigma_provider(exact_cap);
        } else if (s == "degeneracy") {
          provider = degeneracy_sigma_provider();
        } else {
          throw_invalid("instance: layer " + std::to_string(i) + ": unknown sigma \"" + s + "\"");
        }
        layer.sigma = provider(layer.graph, Radius(2 * layer.r));
      } else {
        auto seq = sj.get<std::vector<Vertex>>();
        if (seq.size() != inst.n)
          throw_invalid("instance: layer " + std::to_string(i) + ": sigma must list all " + std::to_string(inst.n) +
                        " vertices");
        try {
          layer.sigma = Ordering(std::move(seq));
        } catch (const Error& err) {
          throw_invalid("instance: layer " + std::to_string(i) + ": " + err.what());
        }
      }
      inst.layers.push_back(std::move(layer));
    }
    inst.validate();
    return inst;
  } catch (const Json::exception& e) {
    throw_invalid(std::string("instance: ") + e.what());
  }
}

}  // namespace colnum
