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

#include "mirauct/io.hpp"

#include <fstream>
#include <sstream>

#include "mirauct/error.hpp"

namespace mirauct {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw InvalidInputError(std::string("missing field '") + field + "'");
  }
  return *it;
}

int require_int(const nlohmann::json& j, const char* field) {
  const nlohmann::json& value = require_field(j, field);
  if (!value.is_number_integer()) {
    throw InvalidInputError(std::string("field '") + field + "' must be an integer");
  }
  return value.get<int>();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw InvalidInputError("rationals must be integers or \"num/den\" strings");
}

}  // namespace

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw InvalidInputError("expected an array of rationals");
  }
  std::vector<Rational> values;
  values.reserve(j.size());
  for (const auto& item : j) values.push_back(rational_from_json(item));
  return values;
}

nlohmann::json rationals_to_json(std::span<const Rational> values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& v : values) out.push_back(to_fraction(v));
  return out;
}

MultiplierVector multiplier_vector_from_json(const nlohmann::json& j) {
  return MultiplierVector(rationals_from_json(j));
}

nlohmann::json multiplier_vector_to_json(const MultiplierVector& v) {
  return rationals_to_json(v.entries());
}

std::shared_ptr<const PublicValuation> valuation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InvalidInputError("valuation must be a JSON object");
  }
  const nlohmann::json& type = require_field(j, "type");
  if (!type.is_string()) {
    throw InvalidInputError("valuation 'type' must be a string");
  }
  const std::string kind = type.get<std::string>();
  if (kind == "coverage") {
    const nlohmann::json& slots = require_field(j, "viewers_of_slot");
    if (!slots.is_array()) {
      throw InvalidInputError("'viewers_of_slot' must be an array of viewer arrays");
    }
    std::vector<std::vector<int>> viewers_of_slot;
    viewers_of_slot.reserve(slots.size());
    for (const auto& slot : slots) {
      if (!slot.is_array()) {
        throw InvalidInputError("'viewers_of_slot' must be an array of viewer arrays");
      }
      std::vector<int> viewers;
      for (const auto& v : slot) {
        if (!v.is_number_integer()) {
          throw InvalidInputError("viewer indices must be integers");
        }
        viewers.push_back(v.get<int>());
      }
      viewers_of_slot.push_back(std::move(viewers));
    }
    return std::make_shared<const CoverageValuation>(require_int(j, "num_viewers"),
                                                     std::move(viewers_of_slot));
  }
  if (kind == "explicit") {
    return std::make_shared<const ExplicitValuation>(
        require_int(j, "m"), rationals_from_json(require_field(j, "values")));
  }
  if (kind == "additive") {
    return std::make_shared<const AdditiveValuation>(
        rationals_from_json(require_field(j, "weights")));
  }
  throw InvalidInputError("unknown valuation type '" + kind + "'");
}

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InvalidInputError("instance must be a JSON object");
  }
  Instance instance;
  instance.m = require_int(j, "m");
  if (instance.m < 1) {
    throw InvalidInputError("instance must have at least one item");
  }
  if (auto it = j.find("n"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() < 1) {
      throw InvalidInputError("instance field 'n' must be a positive integer");
    }
    instance.n = it->get<int>();
  }
  instance.valuation = valuation_from_json(require_field(j, "valuation"));
  if (instance.valuation->num_items() != instance.m) {
    throw InvalidInputError("instance 'm' disagrees with the valuation's item count");
  }
  return instance;
}

nlohmann::json instance_to_json(const Instance& instance) {
  nlohmann::json j = {{"m", instance.m}, {"valuation", instance.valuation->to_json()}};
  if (instance.n) j["n"] = *instance.n;
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open instance file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("cannot parse instance file '" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInputError("cannot write instance file '" + path + "'");
  }
  out << instance_to_json(instance).dump(2) << '\n';
}

Instance preset_instance(const std::string& name) {
  if (name == "appendix-a") {
    // Three slots, ten viewers: slot 0 reaches viewers 0-4, slot 1
    // reaches 5-9, slot 2 overlaps both with viewers 2-7.
    std::vector<std::vector<int>> viewers_of_slot = {
        {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {2, 3, 4, 5, 6, 7}};
    Instance instance;
    instance.m = 3;
    instance.n = 2;
    instance.valuation =
        std::make_shared<const CoverageValuation>(10, std::move(viewers_of_slot));
    return instance;
  }
  throw InvalidInputError("unknown preset '" + name + "'");
}

std::vector<Rational> parse_bid_list(const std::string& text) {
  std::vector<Rational> bids;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    // Trim surrounding spaces; parse_rational rejects anything else odd.
    const auto begin = token.find_first_not_of(" \t");
    const auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw InvalidInputError("empty bid in list '" + text + "'");
    }
    bids.push_back(parse_rational(token.substr(begin, end - begin + 1)));
  }
  if (bids.empty()) {
    throw InvalidInputError("bid list is empty");
  }
  return bids;
}

nlohmann::json outcome_to_json(const Outcome& outcome) {
  nlohmann::json assignment = nlohmann::json::object();
  for (std::size_t i = 0; i < outcome.assignment.size(); ++i) {
    assignment[std::to_string(i)] = outcome.assignment[i].members();
  }
  return {{"assignment", std::move(assignment)},
          {"payments", rationals_to_json(outcome.payments)},
          {"welfare", to_fraction(outcome.welfare)},
          {"chosen_entry", outcome.chosen_entry}};
}

nlohmann::json range_to_json(const Range& range) {
  nlohmann::json out = nlohmann::json::array();
  for (const RangeEntry& entry : range.entries()) {
    nlohmann::json allocation = nlohmann::json::array();
    for (const ItemSet& part : entry.allocation.parts()) {
      allocation.push_back(part.members());
    }
    out.push_back({{"source", multiplier_vector_to_json(entry.source)},
                   {"allocation", std::move(allocation)},
                   {"part_values", rationals_to_json(entry.values)}});
  }
  return out;
}

RangeMode range_mode_from_string(const std::string& name) {
  if (name == "simple") return RangeMode::kSimple;
  if (name == "vector_fitting") return RangeMode::kVectorFitting;
  throw InvalidInputError("unknown mode '" + name + "' (expected simple or vector_fitting)");
}

std::string to_string(RangeMode mode) {
  return mode == RangeMode::kSimple ? "simple" : "vector_fitting";
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInputError("cannot write CSV file '" + path + "'");
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << (c ? "," : "") << header[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw InvalidInputError("CSV row arity mismatch");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << row[c];
    }
    out << '\n';
  }
}

}  // namespace mirauct
