// Copyright 2026 The Authors.
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

#include "gbsm/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gbsm {

using nlohmann::json;

namespace {

double require_cost(const json& node, const char* what) {
  if (!node.is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a number");
  }
  const double v = node.get<double>();
  if (v < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  }
  return v;
}

ProfitSpec parse_profit(const json& node, int num_elements) {
  if (!node.is_object() || !node.contains("kind")) {
    throw std::invalid_argument("profit must be an object with a kind");
  }
  const std::string kind = node.at("kind").get<std::string>();
  auto parse_weights = [&](const json& arr) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != num_elements) {
      throw std::invalid_argument("weights must list one value per element");
    }
    std::vector<double> weights;
    for (const json& w : arr) weights.push_back(require_cost(w, "weight"));
    return weights;
  };
  if (kind == "modular") {
    return ModularSpec{parse_weights(node.at("weights"))};
  }
  if (kind == "concave_modular") {
    return ConcaveModularSpec{parse_weights(node.at("weights"))};
  }
  if (kind == "coverage") {
    const json& covers_node = node.at("covers");
    if (!covers_node.is_array() ||
        static_cast<int>(covers_node.size()) != num_elements) {
      throw std::invalid_argument("covers must list one array per element");
    }
    std::vector<double> item_weights;
    for (const json& w : node.at("item_weights")) {
      item_weights.push_back(require_cost(w, "item weight"));
    }
    std::vector<std::vector<int>> covers;
    for (const json& row : covers_node) {
      std::vector<int> cover;
      for (const json& item : row) {
        const int id = item.get<int>();
        if (id < 0 || id >= static_cast<int>(item_weights.size())) {
          throw std::invalid_argument("covered item out of range");
        }
        cover.push_back(id);
      }
      covers.push_back(std::move(cover));
    }
    return CoverageSpec{std::move(covers), std::move(item_weights)};
  }
  throw std::invalid_argument("unknown profit kind: " + kind);
}

json profit_to_json(const ProfitSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ModularSpec>) {
          return {{"kind", "modular"}, {"weights", s.weights}};
        } else if constexpr (std::is_same_v<S, CoverageSpec>) {
          return {{"kind", "coverage"},
                  {"covers", s.covers},
                  {"item_weights", s.item_weights}};
        } else {
          return {{"kind", "concave_modular"}, {"weights", s.weights}};
        }
      },
      spec);
}

json candidate_to_json(const CandidateSet& candidate) {
  return {{"elements", candidate.elements},
          {"min_cost", round_to_significant(candidate.min_cost)},
          {"gain", round_to_significant(candidate.gain)}};
}

}  // namespace

double round_to_significant(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return std::strtod(buffer, nullptr);
}

Problem parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    const json& bins = doc.at("bins");
    const json& elements = doc.at("elements");
    const json& matrix = doc.at("assign_cost");
    if (!bins.is_array() || bins.empty()) {
      throw std::invalid_argument("bins must be a nonempty array");
    }
    const int m = static_cast<int>(bins.size());
    const int n = static_cast<int>(elements.size());
    for (int x = 0; x < n; ++x) {
      if (!elements[x].is_number_integer() || elements[x].get<int>() != x) {
        throw std::invalid_argument("elements must be [0..n-1]");
      }
    }
    std::vector<double> bin_costs(m);
    for (int s = 0; s < m; ++s) {
      if (!bins[s].is_object() || bins[s].at("id").get<int>() != s) {
        throw std::invalid_argument("bin ids must be 0..m-1 in order");
      }
      bin_costs[s] = require_cost(bins[s].at("cost"), "bin cost");
    }
    if (!matrix.is_array() || static_cast<int>(matrix.size()) != m) {
      throw std::invalid_argument("assign_cost must have one row per bin");
    }
    std::vector<CostValue> assign;
    assign.reserve(static_cast<std::size_t>(m) * n);
    for (const json& row : matrix) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw std::invalid_argument(
            "assign_cost rows must have one entry per element");
      }
      for (const json& cell : row) {
        assign.push_back(cell.is_null() ? CostValue::forbidden()
                                        : CostValue::finite(require_cost(
                                              cell, "assignment cost")));
      }
    }
    const double budget = require_cost(doc.at("budget"), "budget");
    Instance instance(std::move(bin_costs), n, std::move(assign), budget);
    ProfitSpec profit = parse_profit(doc.at("profit"), n);
    return Problem{std::move(instance), std::move(profit)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") +
                                e.what());
  }
}

std::string serialize_problem(const Problem& problem) {
  const Instance& instance = problem.instance;
  json bins = json::array();
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    bins.push_back({{"id", s}, {"cost", instance.bin_cost(s)}});
  }
  json elements = json::array();
  for (ElementId x = 0; x < instance.num_elements(); ++x) elements.push_back(x);
  json matrix = json::array();
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    json row = json::array();
    for (ElementId x = 0; x < instance.num_elements(); ++x) {
      const CostValue c = instance.assign_cost(s, x);
      if (c.is_forbidden()) {
        row.push_back(nullptr);
      } else {
        row.push_back(c.value());
      }
    }
    matrix.push_back(std::move(row));
  }
  json doc{{"bins", std::move(bins)},
           {"elements", std::move(elements)},
           {"assign_cost", std::move(matrix)},
           {"budget", instance.budget()},
           {"profit", profit_to_json(problem.profit)}};
  return doc.dump(2);
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

void save_problem(const Problem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << serialize_problem(problem) << '\n';
}

std::string serialize_result(const Solution& solution,
                             const RunReport& report) {
  const PartialSolution& best = solution.best;
  json assignment = json::object();
  for (ElementId x : best.elements) {
    assignment[std::to_string(x)] = best.assignment[x];
  }
  json iterations = json::array();
  for (const IterationRecord& it : report.iterations) {
    iterations.push_back(
        {{"elements", it.chosen},
         {"min_cost", round_to_significant(it.min_cost)},
         {"gain", round_to_significant(it.gain)},
         {"running_cost", round_to_significant(it.running_cost)}});
  }
  json report_node{
      {"iterations", std::move(iterations)},
      {"discarded", report.discarded ? candidate_to_json(*report.discarded)
                                     : json(nullptr)},
      {"greedy_profit", round_to_significant(report.greedy_profit)},
      {"second_profit", report.second_profit
                            ? json(round_to_significant(*report.second_profit))
                            : json(nullptr)},
      {"returned",
       report.returned == ChosenCandidate::kGreedy ? "greedy" : "second"}};
  json doc{
      {"status", solution.status == SolveStatus::kSolved ? "solved"
                                                         : "empty_infeasible"},
      {"profit", round_to_significant(best.cached_profit)},
      {"cost", round_to_significant(best.cached_cost)},
      {"bins", best.bins},
      {"elements", best.elements},
      {"assignment", std::move(assignment)},
      {"report", std::move(report_node)}};
  return doc.dump(2);
}

}  // namespace gbsm
