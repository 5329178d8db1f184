#include "bifree/json_io.hpp"

#include "bifree/errors.hpp"

namespace bifree {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Rat> rat_vector(const Json& j) {
  if (!j.is_array()) throw parse_error("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

std::vector<std::vector<Rat>> rat_grid(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a rational grid");
  std::vector<std::vector<Rat>> out;
  for (const auto& row : j) out.push_back(rat_vector(row));
  return out;
}

Json grid_json(const std::vector<std::vector<Rat>>& grid) {
  Json rows = Json::array();
  for (const auto& row : grid) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Json to_json(const Rat& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rat rat_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("rational must be an object");
  const auto& num = field(j, "num");
  const auto& den = field(j, "den");
  if (!num.is_string() || !den.is_string())
    throw parse_error("rational num/den must be decimal strings");
  return rat_from_string(num.get<std::string>() + "/" + den.get<std::string>());
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& blk : p.blocks()) out.push_back(blk);
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("partition must be a list of blocks");
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (const auto& b : j) {
    if (!b.is_array()) throw parse_error("partition block must be a list");
    std::vector<int> blk;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw parse_error("partition elements must be integers");
      blk.push_back(e.get<int>());
      n = std::max(n, blk.back());
    }
    blocks.push_back(std::move(blk));
  }
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const argument_error& e) {
    throw parse_error(e.what());
  }
}

Json to_json(const BNCPartition& p) {
  Json blocks = Json::array();
  for (const auto& blk : p.flat().blocks()) {
    Json b = Json::array();
    for (int e : blk)
      b.push_back(Json{{"side", p.chi().side_of(e) == Side::Left ? "l" : "r"},
                       {"index", p.chi().side_index(e)}});
    blocks.push_back(b);
  }
  return Json{{"n_left", p.chi().n_left}, {"n_right", p.chi().n_right}, {"blocks", blocks}};
}

BNCPartition bnc_from_json(const Json& j) {
  int n = field(j, "n_left").get<int>(), m = field(j, "n_right").get<int>();
  ChiMap chi(n, m);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : field(j, "blocks")) {
    std::vector<int> blk;
    for (const auto& e : b) {
      std::string side = field(e, "side").get<std::string>();
      int index = field(e, "index").get<int>();
      if (side != "l" && side != "r") throw parse_error("side must be 'l' or 'r'");
      blk.push_back(chi.flat_of(side == "l" ? Side::Left : Side::Right, index));
    }
    blocks.push_back(std::move(blk));
  }
  try {
    return BNCPartition(chi, Partition::from_blocks(chi.total(), blocks));
  } catch (const argument_error& e) {
    throw parse_error(e.what());
  }
}

Json to_json(const Series1& s) {
  Json coeffs = Json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_json(s.coeff(k)));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

Series1 series1_from_json(const Json& j) {
  std::vector<Rat> coeffs = rat_vector(field(j, "coeffs"));
  if (coeffs.size() != field(j, "order").get<std::size_t>() + 1)
    throw parse_error("Series1: order does not match coefficient count");
  return Series1::from_coeffs(std::move(coeffs));
}

Json to_json(const Series2& s) {
  Json rows = Json::array();
  for (int i = 0; i <= s.order_z(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj <= s.order_w(); ++jj) row.push_back(to_json(s.coeff(i, jj)));
    rows.push_back(row);
  }
  return Json{{"orders", {s.order_z(), s.order_w()}},
              {"valid", {s.valid_z(), s.valid_w()}},
              {"coeffs", rows}};
}

Series2 series2_from_json(const Json& j) {
  const auto& orders = field(j, "orders");
  Series2 s(orders.at(0).get<int>(), orders.at(1).get<int>());
  auto grid = rat_grid(field(j, "coeffs"));
  if (static_cast<int>(grid.size()) != s.order_z() + 1)
    throw parse_error("Series2: row count does not match orders");
  for (int i = 0; i <= s.order_z(); ++i) {
    if (static_cast<int>(grid[i].size()) != s.order_w() + 1)
      throw parse_error("Series2: column count does not match orders");
    for (int jj = 0; jj <= s.order_w(); ++jj) s.set_coeff(i, jj, grid[i][jj]);
  }
  if (j.contains("valid"))
    return s.restricted(j["valid"].at(0).get<int>(), j["valid"].at(1).get<int>());
  return s;
}

Json to_json(const MultFn& f) {
  Json values = Json::array();
  for (int n = 1; n <= f.order(); ++n) values.push_back(to_json(f.value(n)));
  return Json{{"order", f.order()}, {"values", values}};
}

MultFn mult_fn_from_json(const Json& j) {
  std::vector<Rat> values = rat_vector(field(j, "values"));
  if (values.size() != field(j, "order").get<std::size_t>())
    throw parse_error("MultFn: order does not match value count");
  return MultFn(std::move(values));
}

Json to_json(const PairSpec& p) {
  std::vector<std::vector<Rat>> kab(p.order_a(), std::vector<Rat>(p.order_b()));
  for (int n = 1; n <= p.order_a(); ++n)
    for (int m = 1; m <= p.order_b(); ++m) kab[n - 1][m - 1] = p.kappa_ab(n, m);
  Json ka = Json::array(), kb = Json::array();
  for (const auto& v : p.kappa_a_seq()) ka.push_back(to_json(v));
  for (const auto& v : p.kappa_b_seq()) kb.push_back(to_json(v));
  return Json{{"orders", {p.order_a(), p.order_b()}},
              {"kappa_a", ka},
              {"kappa_b", kb},
              {"kappa_ab", grid_json(kab)}};
}

PairSpec pair_spec_from_json(const Json& j) {
  try {
    return PairSpec(rat_vector(field(j, "kappa_a")), rat_vector(field(j, "kappa_b")),
                    rat_grid(field(j, "kappa_ab")));
  } catch (const argument_error& e) {
    throw parse_error(e.what());
  }
}

Json to_json(const MomentSpec& m) {
  std::vector<std::vector<Rat>> grid(m.order_a() + 1, std::vector<Rat>(m.order_b() + 1));
  for (int n = 0; n <= m.order_a(); ++n)
    for (int mm = 0; mm <= m.order_b(); ++mm) grid[n][mm] = m.moment(n, mm);
  return Json{{"orders", {m.order_a(), m.order_b()}}, {"moments", grid_json(grid)}};
}

MomentSpec moment_spec_from_json(const Json& j) {
  auto grid = rat_grid(field(j, "moments"));
  if (grid.empty() || grid[0].empty()) throw parse_error("MomentSpec: empty grid");
  if (grid[0][0] != 1) throw parse_error("MomentSpec: phi(1) must be 1");
  MomentSpec ms(static_cast<int>(grid.size()) - 1, static_cast<int>(grid[0].size()) - 1);
  for (std::size_t n = 0; n < grid.size(); ++n) {
    if (grid[n].size() != grid[0].size()) throw parse_error("MomentSpec: ragged grid");
    for (std::size_t m = 0; m < grid[n].size(); ++m)
      if (n + m > 0) ms.set_moment(static_cast<int>(n), static_cast<int>(m), grid[n][m]);
  }
  return ms;
}

Json to_json(const ConditionalPairSpec& cs) {
  Json j = to_json(cs.base());
  Json kca = Json::array(), kcb = Json::array();
  for (const auto& v : cs.kappa_c_a_seq()) kca.push_back(to_json(v));
  for (const auto& v : cs.kappa_c_b_seq()) kcb.push_back(to_json(v));
  std::vector<std::vector<Rat>> grid(cs.base().order_a(),
                                     std::vector<Rat>(cs.base().order_b()));
  for (int n = 1; n <= cs.base().order_a(); ++n)
    for (int m = 1; m <= cs.base().order_b(); ++m) grid[n - 1][m - 1] = cs.kappa_c_ab(n, m);
  j["kappa_c_a"] = kca;
  j["kappa_c_b"] = kcb;
  j["kappa_c_ab"] = grid_json(grid);
  return j;
}

ConditionalPairSpec conditional_from_json(const Json& j) {
  try {
    return ConditionalPairSpec(pair_spec_from_json(j), rat_vector(field(j, "kappa_c_a")),
                               rat_vector(field(j, "kappa_c_b")),
                               rat_grid(field(j, "kappa_c_ab")));
  } catch (const argument_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace bifree
