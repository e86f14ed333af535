#include "gybe/fusion.hpp"

#include <algorithm>
#include <set>

#include "gybe/error.hpp"

namespace gybe {

int FusionRing::index_of(const std::string& label) const {
  auto idx = find(label);
  if (!idx) fail("unknown label '" + label + "'");
  return *idx;
}

std::optional<int> FusionRing::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

const std::vector<int>& FusionRing::fuse(int a, int b) const {
  auto it = table.find({std::min(a, b), std::max(a, b)});
  if (it == table.end())
    fail("incomplete fusion table: no entry for " + labels[a] + " x " +
         labels[b]);
  return it->second;
}

int FusionRing::n_abc(int a, int b, int c) const {
  const auto& channels = fuse(a, b);
  return int(std::count(channels.begin(), channels.end(), c));
}

std::vector<std::vector<long>> FusionRing::fusion_matrix(int a) const {
  std::vector<std::vector<long>> m(size(), std::vector<long>(size(), 0));
  for (int b = 0; b < size(); ++b)
    for (int c : fuse(a, b)) m[b][c] += 1;
  return m;
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Multiset product of a multiset of labels with one label.
std::vector<int> fuse_multiset(const FusionRing& ring,
                               const std::vector<int>& xs, int b) {
  std::vector<int> out;
  for (int a : xs) {
    const auto& ch = ring.fuse(a, b);
    out.insert(out.end(), ch.begin(), ch.end());
  }
  return sorted(std::move(out));
}

}  // namespace

void FusionRing::validate() const {
  const int n = size();
  if (n == 0) fail("fusion ring has no labels");
  std::set<std::string> names(labels.begin(), labels.end());
  if (int(names.size()) != n) fail("duplicate label names");
  if (unit < 0 || unit >= n) fail("unit label out of range");
  if (int(dual.size()) != n) fail("dual map must cover every label");

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const auto& ch = fuse(a, b);
      if (ch.empty())
        fail("empty fusion product " + labels[a] + " x " + labels[b]);
      for (std::size_t i = 0; i + 1 < ch.size(); ++i)
        if (ch[i] == ch[i + 1])
          fail("fusion multiplicities are not supported: " + labels[a] +
               " x " + labels[b] + " contains " + labels[ch[i]] + " twice");
      for (int c : ch)
        if (c < 0 || c >= n)
          fail("fusion product " + labels[a] + " x " + labels[b] +
               " references an unknown label");
    }

  for (int a = 0; a < n; ++a) {
    if (fuse(unit, a) != std::vector<int>{a})
      fail("unit law fails for label " + labels[a]);
    if (dual[a] < 0 || dual[a] >= n || dual[dual[a]] != a)
      fail("dual map is not an involution at label " + labels[a]);
    if (n_abc(a, dual[a], unit) != 1)
      fail("unit does not appear in " + labels[a] + " x dual(" + labels[a] +
           ")");
  }

  // Associativity: (a⊗b)⊗c and a⊗(b⊗c) as multisets, for all triples.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto lhs = fuse_multiset(*this, fuse(a, b), c);
        const auto rhs = fuse_multiset(*this, fuse(b, c), a);
        if (lhs != rhs)
          fail("non-associative fusion at (" + labels[a] + ", " + labels[b] +
               ", " + labels[c] + ")");
      }
}

bool FusionRing::operator==(const FusionRing& o) const {
  return labels == o.labels && unit == o.unit && dual == o.dual &&
         table == o.table;
}

const CycloScalar* CategoryData::find_r(int a, int b, int c) const {
  auto it = r_symbols.find({a, b, c});
  return it == r_symbols.end() ? nullptr : &it->second;
}

const FMatrixData* CategoryData::find_f(int a, int b, int c, int d) const {
  auto it = f_matrices.find({a, b, c, d});
  return it == f_matrices.end() ? nullptr : &it->second;
}

bool CategoryData::operator==(const CategoryData& o) const {
  if (!(name == o.name && field_order == o.field_order && ring == o.ring))
    return false;
  if (kauffman_variable.has_value() != o.kauffman_variable.has_value())
    return false;
  if (kauffman_variable && !(*kauffman_variable == *o.kauffman_variable))
    return false;
  if (r_symbols.size() != o.r_symbols.size() ||
      f_matrices.size() != o.f_matrices.size())
    return false;
  for (const auto& [k, v] : r_symbols) {
    auto it = o.r_symbols.find(k);
    if (it == o.r_symbols.end() || !(it->second == v)) return false;
  }
  for (const auto& [k, v] : f_matrices) {
    auto it = o.f_matrices.find(k);
    if (it == o.f_matrices.end()) return false;
    if (it->second.row_channels != v.row_channels ||
        it->second.col_channels != v.col_channels ||
        it->second.matrix != v.matrix)
      return false;
  }
  return true;
}

namespace {

// Admissible channel sets for F^{abc}_d under the two tree decompositions.
std::vector<int> admissible_rows(const FusionRing& ring, int a, int b, int c,
                                 int d) {
  std::vector<int> out;
  for (int k : ring.fuse(b, c))
    if (ring.n_abc(a, k, d) > 0) out.push_back(k);
  return sorted(std::move(out));
}

std::vector<int> admissible_cols(const FusionRing& ring, int a, int b, int c,
                                 int d) {
  std::vector<int> out;
  for (int y : ring.fuse(a, b))
    if (ring.n_abc(y, c, d) > 0) out.push_back(y);
  return sorted(std::move(out));
}

}  // namespace

CategoryData parse_category(const Json& j) {
  if (!j.is_object()) fail("category file: expected a JSON object");
  CategoryData cat;
  cat.name = j.value("name", std::string{});
  if (!j.contains("cyclotomic_order"))
    fail("category file: missing cyclotomic_order");
  cat.field_order = j.at("cyclotomic_order").get<int>();
  if (cat.field_order < 1 || cat.field_order > limits::field_order_cap())
    fail("category file: cyclotomic_order out of range");

  if (!j.contains("labels") || !j.at("labels").is_array() ||
      j.at("labels").empty())
    fail("category file: missing or empty labels");
  for (const auto& l : j.at("labels"))
    cat.ring.labels.push_back(l.get<std::string>());

  if (!j.contains("unit")) fail("category file: missing unit");
  {
    auto u = cat.ring.find(j.at("unit").get<std::string>());
    if (!u) fail("category file: unit is not a listed label");
    cat.ring.unit = *u;
  }

  if (!j.contains("dual") || !j.at("dual").is_object())
    fail("category file: missing dual map");
  cat.ring.dual.assign(cat.ring.size(), -1);
  for (const auto& [k, v] : j.at("dual").items()) {
    auto a = cat.ring.find(k);
    auto b = cat.ring.find(v.get<std::string>());
    if (!a || !b) fail("category file: dual map references unknown label '" +
                       (a ? v.get<std::string>() : k) + "'");
    cat.ring.dual[*a] = *b;
  }
  for (int a = 0; a < cat.ring.size(); ++a)
    if (cat.ring.dual[a] < 0)
      fail("category file: dual map misses label '" + cat.ring.labels[a] + "'");

  if (!j.contains("fusion") || !j.at("fusion").is_array())
    fail("category file: missing fusion table");
  int entry_no = 0;
  for (const auto& f : j.at("fusion")) {
    ++entry_no;
    const std::string where = "fusion entry " + std::to_string(entry_no);
    if (!f.is_object() || !f.contains("a") || !f.contains("b") ||
        !f.contains("c"))
      fail("category file: " + where + " needs fields a, b, c");
    auto a = cat.ring.find(f.at("a").get<std::string>());
    auto b = cat.ring.find(f.at("b").get<std::string>());
    if (!a || !b)
      fail("category file: " + where + " references an unknown label");
    std::vector<int> channels;
    for (const auto& c : f.at("c")) {
      auto ci = cat.ring.find(c.get<std::string>());
      if (!ci)
        fail("category file: " + where + " channel '" + c.get<std::string>() +
             "' is not a listed label");
      channels.push_back(*ci);
    }
    std::sort(channels.begin(), channels.end());
    for (std::size_t i = 0; i + 1 < channels.size(); ++i)
      if (channels[i] == channels[i + 1])
        fail("category file: " + where +
             ": fusion multiplicities are not supported");
    const auto key = std::make_pair(std::min(*a, *b), std::max(*a, *b));
    auto it = cat.ring.table.find(key);
    if (it != cat.ring.table.end()) {
      if (it->second != channels)
        fail("category file: " + where + ": " + f.at("a").get<std::string>() +
             " x " + f.at("b").get<std::string>() +
             " disagrees with the entry for the swapped pair "
             "(fusion must be commutative)");
    } else {
      cat.ring.table.emplace(key, std::move(channels));
    }
  }
  // Totality: every unordered pair must be covered.
  for (int a = 0; a < cat.ring.size(); ++a)
    for (int b = a; b < cat.ring.size(); ++b)
      if (!cat.ring.table.count({a, b}))
        fail("category file: incomplete fusion table: missing " +
             cat.ring.labels[a] + " x " + cat.ring.labels[b]);

  cat.ring.validate();

  if (j.contains("kauffman_variable"))
    cat.kauffman_variable = scalar_from_json(
        j.at("kauffman_variable"), cat.field_order, "kauffman_variable");

  if (j.contains("R")) {
    int r_no = 0;
    for (const auto& r : j.at("R")) {
      ++r_no;
      const std::string where = "R entry " + std::to_string(r_no);
      for (const char* k : {"a", "b", "c", "value"})
        if (!r.contains(k))
          fail("category file: " + where + " needs fields a, b, c, value");
      const int a = cat.ring.index_of(r.at("a").get<std::string>());
      const int b = cat.ring.index_of(r.at("b").get<std::string>());
      const int c = cat.ring.index_of(r.at("c").get<std::string>());
      if (cat.ring.n_abc(a, b, c) == 0)
        fail("category file: " + where + ": R^{" + cat.ring.labels[a] + "," +
             cat.ring.labels[b] + "}_" + cat.ring.labels[c] +
             " is not an admissible channel");
      CycloScalar v = scalar_from_json(r.at("value"), cat.field_order, where);
      if (v.is_zero())
        fail("category file: " + where + ": R-symbol must be nonzero");
      if (!cat.r_symbols.emplace(std::array<int, 3>{a, b, c}, std::move(v))
               .second)
        fail("category file: " + where + ": duplicate R-symbol");
    }
  }

  if (j.contains("F")) {
    int f_no = 0;
    for (const auto& f : j.at("F")) {
      ++f_no;
      const std::string where = "F entry " + std::to_string(f_no);
      for (const char* k :
           {"a", "b", "c", "d", "row_channels", "col_channels", "entries"})
        if (!f.contains(k)) fail("category file: " + where + " needs field '" +
                                 std::string(k) + "'");
      const int a = cat.ring.index_of(f.at("a").get<std::string>());
      const int b = cat.ring.index_of(f.at("b").get<std::string>());
      const int c = cat.ring.index_of(f.at("c").get<std::string>());
      const int d = cat.ring.index_of(f.at("d").get<std::string>());
      FMatrixData fm;
      for (const auto& ch : f.at("row_channels"))
        fm.row_channels.push_back(cat.ring.index_of(ch.get<std::string>()));
      for (const auto& ch : f.at("col_channels"))
        fm.col_channels.push_back(cat.ring.index_of(ch.get<std::string>()));
      const std::string fname = "F^{" + cat.ring.labels[a] +
                                cat.ring.labels[b] + cat.ring.labels[c] +
                                "}_" + cat.ring.labels[d];
      if (sorted(fm.row_channels) != admissible_rows(cat.ring, a, b, c, d))
        fail("category file: " + where + ": row channels of " + fname +
             " do not match the admissible fusion channels");
      if (sorted(fm.col_channels) != admissible_cols(cat.ring, a, b, c, d))
        fail("category file: " + where + ": column channels of " + fname +
             " do not match the admissible fusion channels");
      const int rows = int(fm.row_channels.size());
      const int cols = int(fm.col_channels.size());
      if (rows != cols)
        fail("category file: " + where + ": " + fname +
             " must be square (associative fusion gives equal counts)");
      const auto& entries = f.at("entries");
      if (!entries.is_array() || int(entries.size()) != rows * cols)
        fail("category file: " + where + ": entries must hold " +
             std::to_string(rows * cols) + " scalars");
      fm.matrix = ExactMatrix(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
          fm.matrix.set(i, k,
                        scalar_from_json(entries.at(std::size_t(i) * cols + k),
                                         cat.field_order, where));
      if (fm.matrix.is_singular())
        fail("category file: " + where + ": singular F-matrix " + fname);
      if (!cat.f_matrices.emplace(std::array<int, 4>{a, b, c, d}, std::move(fm))
               .second)
        fail("category file: " + where + ": duplicate F-matrix " + fname);
    }
  }

  return cat;
}

CategoryData parse_category_file(const std::string& path) {
  return parse_category(load_json_file(path));
}

Json serialize_category(const CategoryData& cat) {
  Json j;
  j["name"] = cat.name;
  j["cyclotomic_order"] = cat.field_order;
  j["labels"] = cat.ring.labels;
  j["unit"] = cat.ring.labels[cat.ring.unit];
  Json dual;
  for (int a = 0; a < cat.ring.size(); ++a)
    dual[cat.ring.labels[a]] = cat.ring.labels[cat.ring.dual[a]];
  j["dual"] = std::move(dual);
  Json fusion = Json::array();
  for (int a = 0; a < cat.ring.size(); ++a)
    for (int b = a; b < cat.ring.size(); ++b) {
      Json entry;
      entry["a"] = cat.ring.labels[a];
      entry["b"] = cat.ring.labels[b];
      Json channels = Json::array();
      for (int c : cat.ring.fuse(a, b)) channels.push_back(cat.ring.labels[c]);
      entry["c"] = std::move(channels);
      fusion.push_back(std::move(entry));
    }
  j["fusion"] = std::move(fusion);
  if (cat.kauffman_variable)
    j["kauffman_variable"] = scalar_to_json(*cat.kauffman_variable);
  if (!cat.r_symbols.empty()) {
    Json rs = Json::array();
    for (const auto& [key, value] : cat.r_symbols) {
      Json entry;
      entry["a"] = cat.ring.labels[key[0]];
      entry["b"] = cat.ring.labels[key[1]];
      entry["c"] = cat.ring.labels[key[2]];
      entry["value"] = scalar_to_json(value);
      rs.push_back(std::move(entry));
    }
    j["R"] = std::move(rs);
  }
  if (!cat.f_matrices.empty()) {
    Json fs = Json::array();
    for (const auto& [key, fm] : cat.f_matrices) {
      Json entry;
      entry["a"] = cat.ring.labels[key[0]];
      entry["b"] = cat.ring.labels[key[1]];
      entry["c"] = cat.ring.labels[key[2]];
      entry["d"] = cat.ring.labels[key[3]];
      Json rows = Json::array(), cols = Json::array();
      for (int ch : fm.row_channels) rows.push_back(cat.ring.labels[ch]);
      for (int ch : fm.col_channels) cols.push_back(cat.ring.labels[ch]);
      entry["row_channels"] = std::move(rows);
      entry["col_channels"] = std::move(cols);
      Json entries = Json::array();
      for (int i = 0; i < fm.matrix.rows(); ++i)
        for (int k = 0; k < fm.matrix.cols(); ++k)
          entries.push_back(scalar_to_json(fm.matrix.at(i, k)));
      entry["entries"] = std::move(entries);
      fs.push_back(std::move(entry));
    }
    j["F"] = std::move(fs);
  }
  return j;
}

FusionRing gen_so_odd_level2(int r) {
  if (r < 1) fail("gen_so_odd_level2 requires r >= 1");
  FusionRing ring;
  ring.labels.push_back("1");
  ring.labels.push_back("Z");
  for (int i = 1; i <= r; ++i) ring.labels.push_back("X" + std::to_string(i));
  ring.labels.push_back("Xe");
  ring.labels.push_back("Xep");
  const int one = 0, z = 1, xe = r + 2, xep = r + 3;
  const auto x = [&](int i) { return 1 + i; };  // X_i at index i+1

  ring.unit = one;
  ring.dual.assign(ring.size(), 0);
  for (int a = 0; a < ring.size(); ++a) ring.dual[a] = a;  // all self-dual

  auto put = [&](int a, int b, std::vector<int> channels) {
    std::sort(channels.begin(), channels.end());
    ring.table[{std::min(a, b), std::max(a, b)}] = std::move(channels);
  };

  for (int a = 0; a < ring.size(); ++a) put(one, a, {a});
  put(z, z, {one});
  put(z, xe, {xep});
  put(z, xep, {xe});
  std::vector<int> one_plus_all_x{one}, z_plus_all_x{z};
  for (int i = 1; i <= r; ++i) {
    one_plus_all_x.push_back(x(i));
    z_plus_all_x.push_back(x(i));
  }
  put(xe, xe, one_plus_all_x);
  put(xep, xep, one_plus_all_x);
  put(xe, xep, z_plus_all_x);
  for (int i = 1; i <= r; ++i) {
    put(z, x(i), {x(i)});
    put(xe, x(i), {xe, xep});
    put(xep, x(i), {xe, xep});
    put(x(i), x(i), {one, z, x(std::min(2 * i, 2 * r + 1 - 2 * i))});
    for (int jj = i + 1; jj <= r; ++jj)
      put(x(i), x(jj), {x(jj - i), x(std::min(i + jj, 2 * r + 1 - i - jj))});
  }

  ring.validate();
  return ring;
}

FusionRing relabel_jk(const FusionRing& ring) {
  const FusionRing reference = gen_so_odd_level2(1);
  if (!(ring == reference))
    fail("jk relabeling applies only to the r = 1 ring");
  // 1→0, Xe→1, X1→2, Xep→3, Z→4; new label order is 0..4.
  const std::vector<int> new_index_of_old = {0, 4, 2, 1, 3};
  FusionRing out;
  out.labels = {"0", "1", "2", "3", "4"};
  out.unit = new_index_of_old[ring.unit];
  out.dual.assign(5, 0);
  for (int a = 0; a < 5; ++a)
    out.dual[new_index_of_old[a]] = new_index_of_old[ring.dual[a]];
  for (const auto& [key, channels] : ring.table) {
    std::vector<int> mapped;
    for (int c : channels) mapped.push_back(new_index_of_old[c]);
    std::sort(mapped.begin(), mapped.end());
    const int a = new_index_of_old[key.first], b = new_index_of_old[key.second];
    out.table[{std::min(a, b), std::max(a, b)}] = std::move(mapped);
  }
  out.validate();
  return out;
}

}  // namespace gybe
