#include "gybe/error.hpp"
#include "gybe/fusion.hpp"

namespace gybe {

namespace {

// Category files for the built-ins; data/ ships the same text.
constexpr const char* kJk6Json = R"json({
  "name": "jk6",
  "cyclotomic_order": 24,
  "labels": ["0", "1", "2", "3", "4"],
  "unit": "0",
  "dual": {"0": "0", "1": "1", "2": "2", "3": "3", "4": "4"},
  "fusion": [
    {"a": "0", "b": "0", "c": ["0"]},
    {"a": "0", "b": "1", "c": ["1"]},
    {"a": "0", "b": "2", "c": ["2"]},
    {"a": "0", "b": "3", "c": ["3"]},
    {"a": "0", "b": "4", "c": ["4"]},
    {"a": "1", "b": "1", "c": ["0", "2"]},
    {"a": "1", "b": "2", "c": ["1", "3"]},
    {"a": "1", "b": "3", "c": ["2", "4"]},
    {"a": "1", "b": "4", "c": ["3"]},
    {"a": "2", "b": "2", "c": ["0", "2", "4"]},
    {"a": "2", "b": "3", "c": ["1", "3"]},
    {"a": "2", "b": "4", "c": ["2"]},
    {"a": "3", "b": "3", "c": ["0", "2"]},
    {"a": "3", "b": "4", "c": ["1"]},
    {"a": "4", "b": "4", "c": ["0"]}
  ],
  "kauffman_variable": [{"p": 1, "q": 1, "k": 5}],
  "R": [
    {"a": "2", "b": "2", "c": "0", "value": [{"p": 1, "q": 1, "k": 8}]},
    {"a": "2", "b": "2", "c": "2", "value": [{"p": 1, "q": 1, "k": 16}]},
    {"a": "2", "b": "2", "c": "4", "value": [{"p": 1, "q": 1, "k": 20}]}
  ],
  "F": [
    {"a": "1", "b": "2", "c": "2", "d": "1",
     "row_channels": ["0", "2"], "col_channels": ["1", "3"],
     "entries": [
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": -1, "q": 2, "k": 3}, {"p": -1, "q": 2, "k": 21}]
     ]},
    {"a": "1", "b": "2", "c": "2", "d": "3",
     "row_channels": ["4", "2"], "col_channels": ["1", "3"],
     "entries": [
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": -1, "q": 2, "k": 3}, {"p": -1, "q": 2, "k": 21}]
     ]},
    {"a": "3", "b": "2", "c": "2", "d": "1",
     "row_channels": ["4", "2"], "col_channels": ["1", "3"],
     "entries": [
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": -1, "q": 2, "k": 3}, {"p": -1, "q": 2, "k": 21}]
     ]},
    {"a": "3", "b": "2", "c": "2", "d": "3",
     "row_channels": ["0", "2"], "col_channels": ["1", "3"],
     "entries": [
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": 1, "q": 2, "k": 3}, {"p": 1, "q": 2, "k": 21}],
       [{"p": -1, "q": 2, "k": 3}, {"p": -1, "q": 2, "k": 21}]
     ]}
  ]
})json";

// The 1, psi constituents are invertible; their braiding scalars are all the
// data needed to rebuild the published matrix, so no F-matrices are stored
// and no sigma-sector braiding is shipped.
constexpr const char* kIsingJson = R"json({
  "name": "ising",
  "cyclotomic_order": 24,
  "labels": ["1", "sigma", "psi"],
  "unit": "1",
  "dual": {"1": "1", "sigma": "sigma", "psi": "psi"},
  "fusion": [
    {"a": "1", "b": "1", "c": ["1"]},
    {"a": "1", "b": "sigma", "c": ["sigma"]},
    {"a": "1", "b": "psi", "c": ["psi"]},
    {"a": "sigma", "b": "sigma", "c": ["1", "psi"]},
    {"a": "sigma", "b": "psi", "c": ["sigma"]},
    {"a": "psi", "b": "psi", "c": ["1"]}
  ],
  "R": [
    {"a": "1", "b": "1", "c": "1", "value": [{"p": 1, "q": 1, "k": 0}]},
    {"a": "1", "b": "psi", "c": "psi", "value": [{"p": 1, "q": 1, "k": 0}]},
    {"a": "psi", "b": "1", "c": "psi", "value": [{"p": 1, "q": 1, "k": 0}]},
    {"a": "psi", "b": "psi", "c": "1", "value": [{"p": -1, "q": 1, "k": 0}]}
  ]
})json";

}  // namespace

std::string builtin_category_text(const std::string& name) {
  if (name == "jk6") return kJk6Json;
  if (name == "ising") return kIsingJson;
  fail("unknown built-in category '" + name + "' (available: ising, jk6)");
}

CategoryData builtin_category(const std::string& name) {
  Json j = Json::parse(builtin_category_text(name));
  return parse_category(j);
}

ExactMatrix reference_jk6_r_matrix() {
  const CycloScalar a = CycloScalar(-1, 2);
  // (√3/2)·i = (ζ24^4 + ζ24^8)/2.
  const CycloScalar b = CycloScalar::from_terms(
      24, {{make_rational(1, 2), 4}, {make_rational(1, 2), 8}});
  const CycloScalar c = CycloScalar(1, 2);
  const CycloScalar d = -b;
  const CycloScalar o;
  const std::vector<std::vector<CycloScalar>> rows = {
      {a, o, b, o, o, o, o, o},
      {o, d, o, c, o, o, o, o},
      {b, o, a, o, o, o, o, o},
      {o, c, o, d, o, o, o, o},
      {o, o, o, o, d, o, c, o},
      {o, o, o, o, o, a, o, b},
      {o, o, o, o, c, o, d, o},
      {o, o, o, o, o, b, o, a}};
  ExactMatrix m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m.set(i, j, rows[i][j]);
  return m;
}

ExactMatrix reference_ising_r_matrix() {
  ExactMatrix m(8, 8);
  const CycloScalar one(1, 1), minus(-1, 1);
  m.set(0, 0, one);
  m.set(1, 3, one);
  m.set(2, 2, minus);
  m.set(3, 1, one);
  m.set(4, 6, one);
  m.set(5, 5, minus);
  m.set(6, 4, one);
  m.set(7, 7, one);
  return m;
}

}  // namespace gybe
