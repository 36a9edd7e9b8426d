#include <sym3inv/tensor_io.hpp>

#include <fstream>

namespace sym3 {

namespace {

ExactScalar rational_component(const nlohmann::json& c) {
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what());
    }
  }
  if (c.is_number_integer()) return ExactScalar(mpz_class(c.dump(), 10));
  throw MalformedInput("rational components must be \"p/q\" strings or integers");
}

}  // namespace

AnyTensor tensor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedInput("tensor file must hold a JSON object");
  if (!j.contains("format") || j["format"] != "sym3-v1") throw MalformedInput("expected \"format\": \"sym3-v1\"");
  if (!j.contains("field") || !j["field"].is_string()) throw MalformedInput("missing \"field\"");
  if (!j.contains("components") || !j["components"].is_array())
    throw MalformedInput("missing \"components\" array");
  const auto& comps = j["components"];
  if (comps.size() != 10)
    throw MalformedInput("expected 10 components, found " + std::to_string(comps.size()));

  const std::string field = j["field"];
  if (field == "rational") {
    Sym3Tensor<ExactScalar> t;
    for (std::size_t i = 0; i < 10; ++i) t.c[i] = rational_component(comps[i]);
    return t;
  }
  if (field == "float") {
    Sym3Tensor<double> t;
    for (std::size_t i = 0; i < 10; ++i) {
      if (!comps[i].is_number()) throw MalformedInput("float components must be JSON numbers");
      t.c[i] = comps[i].get<double>();
    }
    return t;
  }
  throw MalformedInput("field must be \"rational\" or \"float\", got \"" + field + "\"");
}

AnyTensor read_tensor_file(const std::filesystem::path& path) {
  std::error_code ec;
  std::ifstream in(path);
  if (!std::filesystem::is_regular_file(path, ec) || !in) throw UnreadableFile("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
  return tensor_from_json(j);
}

nlohmann::json scalar_to_json(const ExactScalar& q) { return format_rational(q); }
nlohmann::json scalar_to_json(double x) { return x; }

nlohmann::json tensor_to_json(const Sym3Tensor<ExactScalar>& t) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : t.c) comps.push_back(scalar_to_json(c));
  return {{"format", "sym3-v1"}, {"field", "rational"}, {"components", comps}};
}

nlohmann::json tensor_to_json(const Sym3Tensor<double>& t) {
  nlohmann::json comps = nlohmann::json::array();
  for (double c : t.c) comps.push_back(c);
  return {{"format", "sym3-v1"}, {"field", "float"}, {"components", comps}};
}

Sym3Tensor<double> to_float(const Sym3Tensor<ExactScalar>& t) {
  Sym3Tensor<double> out;
  for (std::size_t i = 0; i < 10; ++i) out.c[i] = t.c[i].get_d();
  return out;
}

}  // namespace sym3
