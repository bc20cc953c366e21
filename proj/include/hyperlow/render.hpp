#ifndef HYPERLOW_RENDER_HPP
#define HYPERLOW_RENDER_HPP

#include <json.hpp>
#include <string>

#include "hyperlow/battery.hpp"
#include "hyperlow/criteria.hpp"
#include "hyperlow/generator.hpp"
#include "hyperlow/symbolic.hpp"

namespace hyperlow {

inline constexpr const char* kSchema = "hyperlow/1";

// Every JSON document carries {"schema": kSchema, "kind": kind}.
nlohmann::json envelope(const std::string& kind);

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const NodePairSet& s);
nlohmann::json to_json(const Gamma& g);
nlohmann::json to_json(const InjectionWitness& w);
nlohmann::json to_json(const CriterionQuery& q, const CriterionVerdict& v);
nlohmann::json to_json(const LoweringElement& T);
nlohmann::json to_json(const ReachClosure& c);
nlohmann::json to_json(const ReachReport& r);
nlohmann::json to_json(const BatteryResult& r);

std::string render_text(const CriterionQuery& q, const CriterionVerdict& v);
std::string render_text(const ReachReport& r);
std::string render_text(const BatteryResult& r);

// "p  n  max  argmax_lambda  elapsed_ms", tab separated.
std::string table1_header();
std::string table1_row(const Table1Entry& e);

}  // namespace hyperlow

#endif
