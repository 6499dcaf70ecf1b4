#include "garside/coxeter_matrix.hpp"

#include <json.hpp>

#include <algorithm>

#include "garside/errors.hpp"

namespace garside {

namespace {

void validate(const std::vector<std::string>& names, const std::vector<std::vector<int>>& m) {
  const std::size_t n = names.size();
  if (n == 0) throw InvalidMatrixError("empty generator list");
  if (n > 64) throw InvalidMatrixError("rank > 64 not supported");
  if (m.size() != n) throw InvalidMatrixError("matrix row count does not match generators");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidMatrixError("matrix is not square");
    if (m[i][i] != 1) throw InvalidMatrixError("diagonal entry must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw InvalidMatrixError("matrix is not symmetric");
      if (m[i][j] != kInfiniteBond && m[i][j] < 2)
        throw InvalidMatrixError("off-diagonal label must be >= 2 or infinity");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j]) throw InvalidMatrixError("duplicate generator name " + names[i]);
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> names, std::vector<std::vector<int>> entries)
    : names_(std::move(names)), entries_(std::move(entries)) {
  validate(names_, entries_);
}

int CoxeterMatrix::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

CoxeterMatrix CoxeterMatrix::reordered(const std::vector<int>& order) const {
  const int n = rank();
  if (static_cast<int>(order.size()) != n) throw InvalidMatrixError("generator order has wrong size");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw InvalidMatrixError("generator order is not a permutation");
    seen[v] = true;
  }
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = names_[order[i]];
    for (int j = 0; j < n; ++j) m[i][j] = entries_[order[i]][order[j]];
  }
  return CoxeterMatrix(std::move(names), std::move(m));
}

std::vector<std::string> default_generator_names(int rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (int i = 1; i <= rank; ++i) names.push_back(std::to_string(i));
  return names;
}

namespace {

std::vector<std::vector<int>> blank(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::type_A(int rank) {
  if (rank < 1) throw InvalidMatrixError("type A needs rank >= 1");
  auto m = blank(rank);
  for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return CoxeterMatrix(default_generator_names(rank), std::move(m));
}

CoxeterMatrix CoxeterMatrix::type_B(int rank) {
  if (rank < 2) throw InvalidMatrixError("type B needs rank >= 2");
  auto m = blank(rank);
  for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 4;
  return CoxeterMatrix(default_generator_names(rank), std::move(m));
}

CoxeterMatrix CoxeterMatrix::type_H3() {
  auto m = blank(3);
  m[0][1] = m[1][0] = 5;
  m[1][2] = m[2][1] = 3;
  return CoxeterMatrix(default_generator_names(3), std::move(m));
}

CoxeterMatrix CoxeterMatrix::type_I2(int bond) {
  if (bond != kInfiniteBond && bond < 2) throw InvalidMatrixError("I2 bond must be >= 2 or infinity");
  auto m = blank(2);
  m[0][1] = m[1][0] = bond;
  return CoxeterMatrix(default_generator_names(2), std::move(m));
}

CoxeterMatrix CoxeterMatrix::affine_A(int n) {
  if (n < 2) throw InvalidMatrixError("affine A needs rank >= 2");
  const int g = n + 1;
  auto m = blank(g);
  for (int i = 0; i < g; ++i) {
    int j = (i + 1) % g;
    m[i][j] = m[j][i] = 3;
  }
  return CoxeterMatrix(default_generator_names(g), std::move(m));
}

CoxeterMatrix CoxeterMatrix::affine_B3() {
  // Generators 1,2 fork into 3 with bond 3; 3 - 4 carries bond 4.
  auto m = blank(4);
  m[0][2] = m[2][0] = 3;
  m[1][2] = m[2][1] = 3;
  m[2][3] = m[3][2] = 4;
  return CoxeterMatrix(default_generator_names(4), std::move(m));
}

CoxeterMatrix CoxeterMatrix::affine_C(int n) {
  if (n < 2) throw InvalidMatrixError("affine C needs rank >= 2");
  const int g = n + 1;
  auto m = blank(g);
  for (int i = 0; i + 1 < g; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  m[0][1] = m[1][0] = 4;
  m[g - 2][g - 1] = m[g - 1][g - 2] = 4;
  return CoxeterMatrix(default_generator_names(g), std::move(m));
}

CoxeterMatrix CoxeterMatrix::right_angled(int rank, const std::vector<std::pair<int, int>>& commuting_edges) {
  if (rank < 1) throw InvalidMatrixError("right-angled needs rank >= 1");
  auto m = blank(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (i != j) m[i][j] = kInfiniteBond;
  for (auto [a, b] : commuting_edges) {
    if (a < 1 || a > rank || b < 1 || b > rank || a == b)
      throw InvalidMatrixError("bad edge in right-angled graph");
    m[a - 1][b - 1] = m[b - 1][a - 1] = 2;
  }
  return CoxeterMatrix(default_generator_names(rank), std::move(m));
}

CoxeterMatrix parse_coxeter_input(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidMatrixError(std::string("bad presentation document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidMatrixError("presentation document must be a JSON object");

  if (doc.contains("matrix")) {
    auto rows = doc.at("matrix");
    if (!rows.is_array()) throw InvalidMatrixError("matrix must be an array of rows");
    std::vector<std::vector<int>> m;
    for (const auto& row : rows) {
      std::vector<int> r;
      for (const auto& cell : row) {
        if (cell.is_string()) {
          if (cell.get<std::string>() == "inf")
            r.push_back(kInfiniteBond);
          else
            throw InvalidMatrixError("matrix entries must be integers or \"inf\"");
        } else if (cell.is_number_integer()) {
          r.push_back(cell.get<int>());
        } else {
          throw InvalidMatrixError("matrix entries must be integers or \"inf\"");
        }
      }
      m.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (doc.contains("generators"))
      names = doc.at("generators").get<std::vector<std::string>>();
    else
      names = default_generator_names(static_cast<int>(m.size()));
    return CoxeterMatrix(std::move(names), std::move(m));
  }

  if (!doc.contains("type")) throw InvalidMatrixError("document needs \"type\" or \"matrix\"");
  const std::string type = doc.at("type").get<std::string>();
  auto get_rank = [&]() {
    if (!doc.contains("rank")) throw InvalidMatrixError("type " + type + " needs \"rank\"");
    return doc.at("rank").get<int>();
  };

  if (type == "A") return CoxeterMatrix::type_A(get_rank());
  if (type == "B") return CoxeterMatrix::type_B(get_rank());
  if (type == "H3") return CoxeterMatrix::type_H3();
  if (type == "I2") {
    if (!doc.contains("bond")) throw InvalidMatrixError("type I2 needs \"bond\"");
    const auto& b = doc.at("bond");
    int bond = b.is_string() && b.get<std::string>() == "inf" ? kInfiniteBond : b.get<int>();
    return CoxeterMatrix::type_I2(bond);
  }
  if (type == "affineA") return CoxeterMatrix::affine_A(get_rank());
  if (type == "affineB3") {
    if (doc.contains("rank") && doc.at("rank").get<int>() != 3)
      throw InvalidMatrixError("affineB3 has rank 3");
    return CoxeterMatrix::affine_B3();
  }
  if (type == "affineC") return CoxeterMatrix::affine_C(get_rank());
  if (type == "rightangled") {
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges"))
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidMatrixError("edges must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    return CoxeterMatrix::right_angled(get_rank(), edges);
  }
  throw UnknownTypeError("unknown system type: " + type);
}

}  // namespace garside
