#pragma once

// JSON tensor files:
//   {"format": "sym3-v1", "field": "rational" | "float", "components": [c1, ..., c10]}
// Components follow the Sym3Tensor order. Rationals are strings "p/q" (or
// "p"), floats are JSON numbers.

#include <sym3inv/tensor_core.hpp>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <variant>

namespace sym3 {

using AnyTensor = std::variant<Sym3Tensor<ExactScalar>, Sym3Tensor<double>>;

class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnreadableFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AnyTensor tensor_from_json(const nlohmann::json& j);
/// Throws UnreadableFile if the file cannot be opened, MalformedInput on bad content.
AnyTensor read_tensor_file(const std::filesystem::path& path);

nlohmann::json tensor_to_json(const Sym3Tensor<ExactScalar>& t);
nlohmann::json tensor_to_json(const Sym3Tensor<double>& t);

nlohmann::json scalar_to_json(const ExactScalar& q);  // "p/q" string
nlohmann::json scalar_to_json(double x);              // number

Sym3Tensor<double> to_float(const Sym3Tensor<ExactScalar>& t);

}  // namespace sym3
