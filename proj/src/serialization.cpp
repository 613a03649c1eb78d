#include "weakdistill/serialization.hpp"

namespace weakdistill {

json to_json(const SchmidtState& s) {
  return json{{"alpha", s.alpha()}, {"beta", s.beta()}, {"dim_b", s.dim_b()}};
}

json to_json(const TwoQubitDensity& rho) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) {
      const Complex z = rho.matrix()(i, j);
      row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(row);
  }
  return json{{"matrix", rows}};
}

json to_json(const LSDecomposition& dec) {
  return json{{"lambda", dec.lambda()},
              {"separable", to_json(dec.separable())},
              {"pure", to_json(dec.pure())}};
}

SchmidtState schmidt_from_json(const json& j) {
  return SchmidtState(j.at("alpha").get<double>(), j.at("beta").get<double>(),
                      j.at("dim_b").get<int>());
}

TwoQubitDensity density_from_json(const json& j) {
  const auto& rows = j.at("matrix");
  if (rows.size() != 4) throw ConfigError("density matrix must be 4x4");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (row.size() != 4) throw ConfigError("density matrix must be 4x4");
    for (int k = 0; k < 4; ++k) {
      const auto& entry = row.at(static_cast<std::size_t>(k));
      m(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return TwoQubitDensity(m);
}

LSDecomposition ls_from_json(const json& j) {
  return LSDecomposition(j.at("lambda").get<double>(),
                         density_from_json(j.at("separable")),
                         schmidt_from_json(j.at("pure")));
}

}  // namespace weakdistill
