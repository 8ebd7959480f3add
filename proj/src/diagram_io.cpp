#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "hypercat/diagram.hpp"

namespace hypercat {

using nlohmann::json;

json to_json(const DotDiagram& f) {
  const auto dot_id = [](DotId d) { return "d" + std::to_string(d); };
  const auto box_id = [](BoxId b) { return "b" + std::to_string(b); };

  json boxes = json::array(), dots = json::array(), wiring_in = json::array(), wiring_out = json::array();
  for (DotId d = 0; d < f.dot_count(); ++d) dots.push_back({{"id", dot_id(d)}, {"object", f.dot_label(d)}});
  for (BoxId b = 0; b < f.box_count(); ++b) {
    const Box& box = f.box(b);
    boxes.push_back({{"id", box_id(b)}, {"label", box.label}});
    for (std::size_t i = 0; i < box.ins.size(); ++i)
      wiring_in.push_back({{"port", {{"box", box_id(b)}, {"index", i}}}, {"dot", dot_id(box.ins[i])}});
    for (std::size_t j = 0; j < box.outs.size(); ++j)
      wiring_out.push_back({{"port", {{"box", box_id(b)}, {"index", j}}}, {"dot", dot_id(box.outs[j])}});
  }
  json inputs = json::array(), outputs = json::array();
  for (DotId d : f.inputs()) inputs.push_back(dot_id(d));
  for (DotId d : f.outputs()) outputs.push_back(dot_id(d));
  return {{"boxes", boxes},         {"dots", dots},           {"inputs", inputs},
          {"outputs", outputs},     {"wiring_in", wiring_in}, {"wiring_out", wiring_out}};
}

namespace {

// Port lists must be total: indices 0..k-1 each wired exactly once.
std::vector<DotId> collect_ports(const std::map<std::size_t, DotId>& wired, const std::string& what) {
  std::vector<DotId> out;
  for (const auto& [index, dot] : wired) {
    if (index != out.size()) throw Error(what + " port " + std::to_string(out.size()) + " is not wired");
    out.push_back(dot);
  }
  return out;
}

}  // namespace

DotDiagram diagram_from_json(const json& doc) {
  try {
    std::map<std::string, DotId> dot_index;
    std::vector<std::string> labels;
    for (const auto& d : doc.at("dots")) {
      const auto id = d.at("id").get<std::string>();
      if (!dot_index.emplace(id, labels.size()).second) throw Error("duplicate dot id '" + id + "'");
      labels.push_back(d.at("object").get<std::string>());
    }
    const auto dot_of = [&](const json& ref) {
      const auto id = ref.get<std::string>();
      auto it = dot_index.find(id);
      if (it == dot_index.end()) throw Error("unknown dot id '" + id + "'");
      return it->second;
    };

    std::map<std::string, BoxId> box_index;
    std::vector<std::string> box_labels;
    for (const auto& b : doc.value("boxes", json::array())) {
      const auto id = b.at("id").get<std::string>();
      if (!box_index.emplace(id, box_labels.size()).second) throw Error("duplicate box id '" + id + "'");
      box_labels.push_back(b.at("label").get<std::string>());
    }

    std::vector<std::map<std::size_t, DotId>> ins(box_labels.size()), outs(box_labels.size());
    const auto read_wiring = [&](const char* key, std::vector<std::map<std::size_t, DotId>>& target) {
      for (const auto& w : doc.value(key, json::array())) {
        const auto& port = w.at("port");
        const auto id = port.at("box").get<std::string>();
        auto it = box_index.find(id);
        if (it == box_index.end()) throw Error("unknown box id '" + id + "'");
        const auto index = port.at("index").get<std::size_t>();
        if (!target[it->second].emplace(index, dot_of(w.at("dot"))).second)
          throw Error(std::string(key) + ": port " + std::to_string(index) + " of box '" + id +
                      "' wired twice");
      }
    };
    read_wiring("wiring_in", ins);
    read_wiring("wiring_out", outs);

    std::vector<Box> boxes;
    for (BoxId b = 0; b < box_labels.size(); ++b)
      boxes.push_back({box_labels[b], collect_ports(ins[b], "input"), collect_ports(outs[b], "output")});

    std::vector<DotId> inputs, outputs;
    for (const auto& ref : doc.value("inputs", json::array())) inputs.push_back(dot_of(ref));
    for (const auto& ref : doc.value("outputs", json::array())) outputs.push_back(dot_of(ref));
    return DotDiagram(std::move(labels), std::move(boxes), std::move(inputs), std::move(outputs));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed diagram document: ") + e.what());
  }
}

DotDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open diagram file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("'" + path + "': " + e.what());
  }
  return diagram_from_json(doc);
}

}  // namespace hypercat
