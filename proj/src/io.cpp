#include "jinv/io.hpp"

#include <fstream>

namespace jinv {

json to_json(const GaussRat& v) {
  if (v.im == 0) return rat_str(v.re);
  return json{{"re", rat_str(v.re)}, {"im", rat_str(v.im)}};
}

GaussRat gauss_from_json(const json& j) {
  try {
    if (j.is_string()) return GaussRat(rat_parse(j.get<std::string>()));
    if (j.is_number_integer()) return GaussRat(rat(j.get<long>()));
    if (j.is_object()) {
      Rat re_part = j.contains("re") ? rat_parse(j.at("re").get<std::string>()) : Rat(0);
      Rat im_part = j.contains("im") ? rat_parse(j.at("im").get<std::string>()) : Rat(0);
      return {re_part, im_part};
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad scalar: ") + e.what());
  }
  throw SchemaError("bad scalar: expected string or {re, im}");
}

json to_json(const CompQ& u) {
  json arr = json::array();
  for (int i = 0; i < u.dim(); ++i) arr.push_back(to_json(u.c[i]));
  return arr;
}

CompQ comp_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("composition element must be an array");
  AlgebraId a;
  switch (j.size()) {
    case 1: a = AlgebraId::R; break;
    case 2: a = AlgebraId::C; break;
    case 4: a = AlgebraId::H; break;
    case 8: a = AlgebraId::O; break;
    default: throw SchemaError("composition element length must be 1/2/4/8");
  }
  CompQ u(a);
  for (size_t i = 0; i < j.size(); ++i) u.c[i] = gauss_from_json(j[i]);
  return u;
}

json to_json(const HermQ& x) {
  json j;
  j["algebra"] = algebra_name(x.alg);
  j["diag"] = json::array({to_json(x.d[0]), to_json(x.d[1]), to_json(x.d[2])});
  j["p"] = to_json(x.off[0]);
  j["q"] = to_json(x.off[1]);
  j["r"] = to_json(x.off[2]);
  return j;
}

HermQ herm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra"))
    throw SchemaError("Hermitian element must be an object with an 'algebra' tag");
  AlgebraId a = algebra_from_string(j.at("algebra").get<std::string>());
  HermQ x(a);
  const json& d = j.at("diag");
  if (!d.is_array() || d.size() != 3) throw SchemaError("diag must have 3 entries");
  for (int i = 0; i < 3; ++i) x.d[i] = gauss_from_json(d[i]);
  const char* keys[3] = {"p", "q", "r"};
  for (int k = 0; k < 3; ++k) {
    if (!j.contains(keys[k])) continue;  // omitted off-diagonal means zero
    CompQ u = comp_from_json(j.at(keys[k]));
    if (u.dim() > comp_dim(a)) throw SchemaError("off-diagonal entry larger than algebra");
    x.off[k] = u.promoted(a);
  }
  return x;
}

json to_json(const Mat3<GaussRat>& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < 3; ++j2) row.push_back(to_json(m.at(i, j2)));
    rows.push_back(row);
  }
  return json{{"model", "mat3"}, {"entries", rows}};
}

Mat3<GaussRat> mat3_from_json(const json& j) {
  const json& e = j.is_object() ? j.at("entries") : j;
  if (!e.is_array() || e.size() != 3) throw SchemaError("mat3 needs 3 rows");
  Mat3<GaussRat> m;
  for (int i = 0; i < 3; ++i) {
    if (!e[i].is_array() || e[i].size() != 3) throw SchemaError("mat3 rows need 3 entries");
    for (int c = 0; c < 3; ++c) m.at(i, c) = gauss_from_json(e[i][c]);
  }
  return m;
}

json tuple_to_json(const std::vector<HermQ>& t) {
  json elems = json::array();
  for (const auto& x : t) elems.push_back(to_json(x));
  return json{{"elements", elems}};
}

std::vector<HermQ> tuple_from_json(const json& j) {
  const json& elems = j.is_array() ? j : j.at("elements");
  if (!elems.is_array() || elems.empty()) throw SchemaError("tuple needs elements");
  std::vector<HermQ> t;
  for (const auto& e : elems) t.push_back(herm_from_json(e));
  for (const auto& x : t)
    if (x.alg != t[0].alg) throw SchemaError("tuple algebra tags must agree");
  return t;
}

json word_to_json(const GroupWord& w) {
  json toks = json::array();
  for (const auto& t : w.toks) {
    switch (t.kind) {
      case GroupToken::Kind::Transpose:
        toks.push_back(json{{"op", "transpose"}});
        break;
      case GroupToken::Kind::Elem:
        toks.push_back(json{{"op", "elem"}, {"i", t.i}, {"j", t.j},
                            {"lambda", to_json(t.lambda)}});
        break;
      case GroupToken::Kind::ElemRight:
        toks.push_back(json{{"op", "elem"}, {"side", "right"}, {"i", t.i},
                            {"j", t.j}, {"lambda", to_json(t.lambda)}});
        break;
    }
  }
  return toks;
}

GroupWord word_from_json(const json& j, AlgebraId model) {
  if (!j.is_array()) throw SchemaError("group word must be an array of tokens");
  GroupWord w{model, {}};
  for (const auto& tok : j) {
    std::string op = tok.at("op").get<std::string>();
    if (op == "transpose") {
      w.toks.push_back(transpose_token());
      continue;
    }
    if (op != "elem") throw SchemaError("unknown token op '" + op + "'");
    int i = tok.at("i").get<int>(), jj = tok.at("j").get<int>();
    const json& lj = tok.at("lambda");
    CompQ lambda = lj.is_array() ? comp_from_json(lj) : CompQ(model, gauss_from_json(lj));
    bool right = tok.contains("side") && tok.at("side").get<std::string>() == "right";
    w.toks.push_back(right ? elementary_right(i, jj, lambda) : elementary(i, jj, lambda));
  }
  return w;
}

namespace {

json complex_to_json(const CD& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json herm_cd_to_json(const Herm<CD>& x) {
  json j;
  j["algebra"] = algebra_name(x.alg);
  j["diag"] = json::array(
      {complex_to_json(x.d[0]), complex_to_json(x.d[1]), complex_to_json(x.d[2])});
  const char* keys[3] = {"p", "q", "r"};
  for (int k = 0; k < 3; ++k) {
    json arr = json::array();
    for (int i = 0; i < x.off[k].dim(); ++i) arr.push_back(complex_to_json(x.off[k].c[i]));
    j[keys[k]] = arr;
  }
  return j;
}

}  // namespace

json to_json(const RealizationResult& r) {
  json j;
  j["algebra"] = model_name(r.alg);
  j["lambda"] = complex_to_json(r.lambda);
  j["mu"] = complex_to_json(r.mu);
  json tup = json::array();
  for (const auto& x : r.tuple) tup.push_back(herm_cd_to_json(x));
  j["tuple"] = tup;
  json tgt = json::array();
  for (const auto& c : r.target) tgt.push_back(complex_to_json(c));
  j["target"] = tgt;
  j["residual"] = r.residual;
  j["branch"] = r.branch;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON in '") + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace jinv
