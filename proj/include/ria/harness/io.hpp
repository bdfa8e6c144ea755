#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "ria/mts/instance.hpp"
#include "ria/paging/instance.hpp"
#include "ria/setcover/instance.hpp"

namespace ria::harness {

using Instance = std::variant<paging::PagingInstance, mts::MtsInstance, setcover::SetCoverInstance>;
using json = nlohmann::json;

inline std::string instance_name(const Instance& inst) {
  return std::visit([](const auto& i) { return i.name; }, inst);
}

inline std::string instance_problem(const Instance& inst) {
  return std::visit([](const auto& i) { return std::string(problem_name(i)); }, inst);
}

inline void validate(const Instance& inst) {
  std::visit([](const auto& i) { i.validate(); }, inst);
}

inline json to_json(const paging::PagingInstance& inst) {
  return {{"problem", "paging"}, {"name", inst.name}, {"k", inst.k}, {"n", inst.n},
          {"sequence", inst.sequence}};
}

// Costs go out as exact strings ("3/7" or "12") so they read back unchanged.
inline json to_json(const mts::MtsInstance& inst) {
  json tasks = json::array();
  for (const auto& task : inst.tasks) {
    json row = json::array();
    for (const auto& c : task) row.push_back(mts::to_string(c));
    tasks.push_back(std::move(row));
  }
  return {{"problem", "mts"}, {"name", inst.name}, {"n", inst.n}, {"tasks", std::move(tasks)}};
}

inline json to_json(const setcover::SetCoverInstance& inst) {
  return {{"problem", "setcover"}, {"name", inst.name}, {"n", inst.n}, {"family", inst.family},
          {"sequence", inst.sequence}};
}

inline json to_json(const Instance& inst) {
  return std::visit([](const auto& i) { return to_json(i); }, inst);
}

namespace detail {

inline mts::Rational cost_from_json(const json& v) {
  if (v.is_string()) return mts::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mts::Rational(v.get<long long>());
  if (v.is_number()) return mts::parse_rational(v.dump());
  throw InvalidInstance("mts: task costs must be numbers or decimal strings");
}

}  // namespace detail

// Parses and validates one instance document.
inline Instance instance_from_json(const json& doc, const std::string& fallback_name = "") {
  try {
    const std::string problem = doc.at("problem").get<std::string>();
    const std::string name = doc.value("name", fallback_name.empty() ? problem : fallback_name);
    if (problem == "paging") {
      paging::PagingInstance inst;
      inst.k = doc.at("k").get<std::size_t>();
      inst.n = doc.at("n").get<std::size_t>();
      inst.sequence = doc.at("sequence").get<std::vector<paging::PageId>>();
      inst.name = name;
      inst.validate();
      return inst;
    }
    if (problem == "mts") {
      mts::MtsInstance inst;
      inst.n = doc.at("n").get<std::size_t>();
      for (const auto& row : doc.at("tasks")) {
        std::vector<mts::Rational> task;
        for (const auto& c : row) task.push_back(detail::cost_from_json(c));
        inst.tasks.push_back(std::move(task));
      }
      inst.name = name;
      inst.validate();
      return inst;
    }
    if (problem == "setcover") {
      setcover::SetCoverInstance inst;
      inst.n = doc.at("n").get<std::size_t>();
      inst.family = doc.at("family").get<std::vector<std::vector<setcover::Element>>>();
      inst.sequence = doc.at("sequence").get<std::vector<setcover::Element>>();
      inst.name = name;
      inst.validate();
      return inst;
    }
    throw InvalidInstance("unknown problem '" + problem + "'");
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("malformed instance: ") + e.what());
  }
}

inline Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInstance(path.string() + ": " + e.what());
  }
  return instance_from_json(doc, path.stem().string());
}

inline std::string dump_instance(const Instance& inst) { return to_json(inst).dump() + "\n"; }

inline void save_instance(const Instance& inst, const std::filesystem::path& path) {
  validate(inst);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_instance(inst);
}

}  // namespace ria::harness
