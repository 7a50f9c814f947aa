#pragma once

// JSON views of verdicts and witnesses.  Field names and ordering are part
// of the stable output surface.

#include <json.hpp>

#include "bnls/chain_search.hpp"

namespace bnls {

using Json = nlohmann::ordered_json;

inline Json to_json(const WitnessStats& st) {
  Json j;
  j["eta"] = Json::array({st.eta[0], st.eta[1]});
  j["beta"] = st.beta;
  j["nu"] = st.nu;
  j["m"] = st.m;
  j["gamma"] = Json::array({st.gamma[0], st.gamma[1]});
  j["node_slack"] = st.node_slack;
  return j;
}

inline Json to_json(const LimitWitness& w) {
  Json j;
  j["params"] = {{"g", w.params.g}, {"r", w.params.r}, {"d", w.params.d}};
  j["chain"] = {{"g1", w.chain.g1},
                {"g2", w.chain.g2},
                {"n", w.chain.n_bridges},
                {"t", w.chain.t}};
  j["mode"] = to_string(w.mode);
  j["criterion"] = to_string(w.criterion);
  Json components = Json::array();
  components.push_back(
      {{"type", "tail"}, {"genus", w.chain.g1}, {"seq", w.tail1_seq}});
  for (const BridgeAspect& asp : w.bridges)
    components.push_back({{"type", "bridge"},
                          {"torsion", w.chain.t},
                          {"class_k", asp.class_k},
                          {"seq_left", asp.seq_left},
                          {"seq_right", asp.seq_right}});
  components.push_back(
      {{"type", "tail"}, {"genus", w.chain.g2}, {"seq", w.tail2_seq}});
  j["components"] = std::move(components);
  j["stats"] = to_json(stats(w));
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["mode"] = to_string(v.mode);
  j["criterion"] = to_string(v.criterion);
  j["space_complete"] = v.space_complete;
  j["note"] = v.note;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

}  // namespace bnls
