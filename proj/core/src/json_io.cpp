#include "lgdual/json_io.hpp"

#include <set>

namespace lgdual::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::vector<std::string> string_list(const Json& j) {
  if (!j.is_array()) bad("expected an array of labels");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad("labels must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const char* op_tag(GroupTerm::Kind k) {
  switch (k) {
    case GroupTerm::Kind::kAdd: return "+";
    case GroupTerm::Kind::kSub:
    case GroupTerm::Kind::kNeg: return "-";
    case GroupTerm::Kind::kMul: return "*";
    case GroupTerm::Kind::kJoin: return "∨";
    case GroupTerm::Kind::kMeet: return "∧";
    default: return "";
  }
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat parse_rat(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(parse_int(j));
  bad("expected a rational string \"p/q\", got " + j.dump());
}

Json to_json(const DivNat& d) {
  if (d.fits_u64()) return d.to_ulong();
  return d.str();
}

DivNat parse_divnat(const Json& j) {
  if (j.is_number_unsigned()) return DivNat(j.get<unsigned long>());
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (v < 0) bad("natural number expected, got " + j.dump());
    return DivNat(static_cast<unsigned long>(v));
  }
  if (j.is_string()) return DivNat::parse(j.get<std::string>());
  bad("expected a natural number, got " + j.dump());
}

Json to_json(const Int& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Int parse_int(const Json& j) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Rat r = Rat::parse(j.get<std::string>());
    if (!r.is_integer()) bad("expected an integer, got " + j.dump());
    return r.num();
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const RatRegion& region) {
  Json out = Json::array();
  for (const auto& c : region.components()) {
    if (const auto* p = std::get_if<Rat>(&c)) {
      out.push_back(Json{{"point", to_json(*p)}});
    } else {
      const auto& iv = std::get<RatInterval>(c);
      out.push_back(Json{{"interval", Json::array({to_json(iv.lo), to_json(iv.hi)})}});
    }
  }
  return out;
}

RatRegion parse_region(const Json& j) {
  if (!j.is_array()) bad("a region is a JSON array of {\"point\"} / {\"interval\"} objects");
  RatRegion r;
  for (const auto& c : j) {
    if (!c.is_object() || c.size() != 1) bad("bad region component " + c.dump());
    if (c.contains("point")) {
      r.add_point(parse_rat(c["point"]));
    } else if (c.contains("interval")) {
      const Json& iv = c["interval"];
      if (!iv.is_array() || iv.size() != 2) bad("an interval is [\"lo\", \"hi\"]");
      r.add_interval(parse_rat(iv[0]), parse_rat(iv[1]));
    } else {
      bad("bad region component " + c.dump());
    }
  }
  return r;
}

Json to_json(const AdcSet& s) {
  Json out;
  out["contains_zero"] = s.contains_zero();
  if (s.is_cofinite()) {
    Json ex = Json::array();
    for (const auto& n : s.exclusions()) ex.push_back(to_json(n));
    out["cofinite_exclusions"] = ex;
  } else {
    Json up = Json::array();
    for (const auto& d : s.upsets()) up.push_back(to_json(d));
    out["upsets"] = up;
  }
  return out;
}

Json to_json(const FinASpace& x) {
  Json pts = Json::object();
  for (const auto& p : x.points()) pts[p.label] = to_json(p.zeta);
  return Json{{"points", pts}};
}

FinASpace parse_space(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_object()) bad("\"points\" must map labels to zeta values");
  std::vector<FinASpace::Point> out;
  for (const auto& [label, zeta] : pts.items()) out.push_back({label, parse_divnat(zeta)});
  return FinASpace(std::move(out));
}

Json subset_to_json(const FinASpace& x, const PointSet& s) { return Json(x.labels_of(s)); }

PointSet parse_subset(const FinASpace& x, const Json& j) { return x.subset(string_list(j)); }

Json to_json(const AMapFin& f) {
  Json m = Json::object();
  for (std::size_t i = 0; i < f.assignment.size(); ++i)
    m[f.source.label(i)] = f.target.label(f.assignment[i]);
  return Json{{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"map", m}};
}

AMapFin parse_amap(const Json& j) {
  AMapFin f{parse_space(field(j, "source")), parse_space(field(j, "target")), {}};
  const Json& m = field(j, "map");
  if (!m.is_object()) bad("\"map\" must be an object from source to target labels");
  f.assignment.assign(f.source.size(), 0);
  std::vector<bool> seen(f.source.size(), false);
  for (const auto& [from, to] : m.items()) {
    if (!to.is_string()) bad("map targets must be labels");
    std::size_t i = f.source.index_of(from);
    f.assignment[i] = f.target.index_of(to.get<std::string>());
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) bad("map is not total: \"" + f.source.label(i) + "\" has no image");
  return f;
}

Json to_json(const Draft& d) {
  Json levels = Json::array();
  for (const auto& [r, lv] : d.levels) {
    levels.push_back(Json{{"r", to_json(r)},
                          {"down", subset_to_json(d.space, lv.down)},
                          {"up", subset_to_json(d.space, lv.up)}});
  }
  return Json{{"space", to_json(d.space)},
              {"alpha", to_json(d.alpha)},
              {"beta", to_json(d.beta)},
              {"levels", levels}};
}

Draft parse_draft(const Json& j) {
  Draft d{parse_space(field(j, "space")), parse_rat(field(j, "alpha")),
          parse_rat(field(j, "beta")), {}};
  for (const auto& lv : array_field(j, "levels")) {
    Rat r = parse_rat(field(lv, "r"));
    Level level{parse_subset(d.space, field(lv, "down")), parse_subset(d.space, field(lv, "up"))};
    if (!d.levels.emplace(r, std::move(level)).second) bad("duplicate level " + r.str());
  }
  return d;
}

Json to_json(const RatFunction& f) {
  return Json{{"values", values_to_json(f.space, f.values)},
              {"lo", to_json(f.lo)},
              {"hi", to_json(f.hi)}};
}

RatFunction parse_rat_function(const Json& j, const FinASpace& space) {
  return RatFunction{space, parse_values(field(j, "values"), space), parse_rat(field(j, "lo")),
                     parse_rat(field(j, "hi"))};
}

Json values_to_json(const FinASpace& space, const FnValues& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[space.label(i)] = to_json(v[i]);
  return out;
}

FnValues parse_values(const Json& j, const FinASpace& space) {
  if (!j.is_object()) bad("values must map labels to rationals");
  FnValues v(space.size());
  std::vector<bool> seen(space.size(), false);
  for (const auto& [label, value] : j.items()) {
    std::size_t i = space.index_of(label);
    v[i] = parse_rat(value);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) bad("no value for point \"" + space.label(i) + "\"");
  return v;
}

Json to_json(const FnGroup& g) {
  Json gens = Json::array();
  for (const auto& gen : g.generators) gens.push_back(values_to_json(g.space, gen));
  return Json{{"space", to_json(g.space)}, {"generators", gens}};
}

FnGroup parse_group(const Json& j) {
  FnGroup g{parse_space(field(j, "space")), {}};
  for (const auto& gen : array_field(j, "generators")) g.generators.push_back(parse_values(gen, g.space));
  return g;
}

Json to_json(const GroupTerm& t) {
  using Kind = GroupTerm::Kind;
  switch (t.kind) {
    case Kind::kGen: return Json{{"gen", t.gen}};
    case Kind::kConst: return Json{{"const", t.value.get_str()}};
    case Kind::kMul: return Json{{"*", Json::array({t.value.get_str(), to_json(t.args[0])})}};
    default: break;
  }
  Json args = Json::array();
  for (const auto& a : t.args) args.push_back(to_json(a));
  return Json{{op_tag(t.kind), args}};
}

GroupTerm parse_term(const Json& j) {
  if (!j.is_object() || j.size() != 1) bad("a term is a one-key object, got " + j.dump());
  const auto& [tag, body] = *j.items().begin();
  if (tag == "gen") {
    if (!body.is_number_unsigned() || body.get<std::size_t>() == 0)
      bad("\"gen\" takes a 1-based generator index");
    return GroupTerm::generator(body.get<std::size_t>());
  }
  if (tag == "const") return GroupTerm::constant(parse_int(body));
  if (!body.is_array()) bad("operator \"" + tag + "\" takes an array of arguments");
  if (tag == "*") {
    if (body.size() != 2) bad("\"*\" takes [multiplier, term]");
    return GroupTerm::mul(parse_int(body[0]), parse_term(body[1]));
  }
  if (tag == "-" && body.size() == 1) return GroupTerm::neg(parse_term(body[0]));
  if (body.size() != 2) bad("operator \"" + tag + "\" takes two arguments");
  GroupTerm a = parse_term(body[0]);
  GroupTerm b = parse_term(body[1]);
  if (tag == "+") return GroupTerm::add(std::move(a), std::move(b));
  if (tag == "-") return GroupTerm::sub(std::move(a), std::move(b));
  if (tag == "∨" || tag == "join") return GroupTerm::join(std::move(a), std::move(b));
  if (tag == "∧" || tag == "meet") return GroupTerm::meet(std::move(a), std::move(b));
  bad("unknown term operator \"" + tag + "\"");
}

Json to_json(const IntPwl& f) {
  Json bp = Json::array();
  for (const auto& x : f.breakpoints()) bp.push_back(to_json(x));
  Json pc = Json::array();
  for (const auto& p : f.pieces()) pc.push_back(Json{{"z1", to_json(p.z1)}, {"z2", to_json(p.z2)}});
  return Json{{"breakpoints", bp}, {"pieces", pc}};
}

IntPwl parse_pwl(const Json& j) {
  std::vector<Rat> bp;
  for (const auto& x : array_field(j, "breakpoints")) bp.push_back(parse_rat(x));
  std::vector<AffinePiece> pc;
  for (const auto& p : array_field(j, "pieces"))
    pc.push_back({parse_int(field(p, "z1")), parse_int(field(p, "z2"))});
  return IntPwl(std::move(bp), std::move(pc));
}

Json to_json(const DraftDiagnostic& d, const FinASpace& x) {
  Json out{{"valid", d.ok()}};
  if (d.ok()) return out;
  out["axiom"] = to_string(d.status);
  if (d.r) out["r"] = to_json(*d.r);
  if (d.s) out["s"] = to_json(*d.s);
  if (d.point) out["point"] = x.label(*d.point);
  out["message"] = d.message;
  return out;
}

Json to_json(const ANormalReport& r, const FinASpace& x) {
  Json w = Json::array();
  for (const auto& s : r.witnesses) {
    w.push_back(Json{{"x", x.label(s.x)},
                     {"y", x.label(s.y)},
                     {"U", subset_to_json(x, s.u)},
                     {"V", subset_to_json(x, s.v)}});
  }
  return Json{{"N1", Json{{"holds", r.n1}, {"reason", r.n1_reason}}},
              {"N2", Json{{"holds", r.n2}, {"reason", r.n2_reason}}},
              {"N3'", Json{{"holds", r.n3_prime}, {"witnesses", w}}}};
}

Json to_json(const SwReport& r, const FinASpace& x) {
  Json out{{"ok", r.ok()}, {"separating", r.separating}, {"denominators", r.denominators}};
  if (r.unseparated)
    out["unseparated"] = Json::array({x.label(r.unseparated->first), x.label(r.unseparated->second)});
  if (r.bad_point) out["bad_point"] = x.label(*r.bad_point);
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

Json to_json(const MaxSpectrum& m) {
  Json corr = Json::object();
  for (std::size_t i = 0; i < m.correspondence.size(); ++i)
    corr[m.space.label(i)] = m.space.label(m.correspondence[i]);
  return Json{{"space", to_json(m.space)}, {"correspondence", corr}};
}

Json to_json(const EtaReport& r) {
  return Json{{"ok", r.ok()},
              {"bijective", r.bijective},
              {"zeta_preserved", r.zeta_preserved},
              {"canonical_group", to_json(r.canonical)},
              {"max", to_json(r.max)}};
}

Json to_json(const CompletenessReport& r, const FinASpace& x) {
  Json out{{"complete", r.complete}, {"separating", r.separating}, {"epsilon_iso", r.epsilon_iso}};
  if (r.max) out["max"] = to_json(*r.max);
  if (!r.basis_terms.empty()) {
    Json terms = Json::object();
    for (std::size_t i = 0; i < r.basis_terms.size(); ++i) terms[x.label(i)] = render(r.basis_terms[i]);
    out["basis_terms"] = terms;
  }
  if (r.unreachable_point) out["unreachable_point"] = x.label(*r.unreachable_point);
  if (r.unreachable_value) out["unreachable_value"] = to_json(*r.unreachable_value);
  out["message"] = r.message;
  return out;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lgdual::io
