#pragma once

#include "qdga/ideal.hpp"
#include "qdga/tensor.hpp"

#include <json.hpp>

#include <string>

namespace qdga {

enum class OutputFormat { Text, Latex, Json };

OutputFormat parse_format(const std::string& name);

// Text output is accepted back by parse_expression.
std::string to_text(const Word& w);
std::string to_text(const DWord& w);
std::string to_text(const Poly& u);
std::string to_text(const Tensor& t);

std::string to_latex(const Cyc& c);
std::string to_latex(const Poly& u);
std::string to_latex(const Tensor& t);

nlohmann::json to_json(const Tensor& t);
nlohmann::json to_json(const WitnessTerm& term);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const MembershipVerdict& v);

std::string render(const Tensor& t, OutputFormat fmt);

}  // namespace qdga
