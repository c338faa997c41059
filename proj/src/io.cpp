#include "fuscond/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fuscond/errors.h"

namespace fuscond {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + what + "': " + e.what());
  }
}

void expect_schema(const Json& j, const std::string& want) {
  if (schema_of(j) != want) throw ParseError("expected schema " + want + ", found " + schema_of(j));
}

Json scalars_to_json(const ScalarVector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

ScalarVector scalars_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("field '") + what + "' must be an array");
  ScalarVector out;
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

std::vector<std::size_t> indices_or_labels(const Json& j, const std::vector<std::string>& labels, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("field '") + what + "' must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (e.is_string()) {
      auto it = std::find(labels.begin(), labels.end(), e.get<std::string>());
      if (it == labels.end()) throw ParseError(std::string("unknown label in '") + what + "': " + e.get<std::string>());
      out.push_back(static_cast<std::size_t>(it - labels.begin()));
    } else if (e.is_number_integer() && e.get<long long>() >= 0) {
      out.push_back(static_cast<std::size_t>(e.get<long long>()));
    } else {
      throw ParseError(std::string("entries of '") + what + "' must be labels or indices");
    }
  }
  return out;
}

Json labels_json(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(names.at(i));
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) {
    const Cyclotomic& c = s.exact();
    if (c.is_rational() && boost::multiprecision::denominator(c.rational_value()) == 1) {
      const Integer num = boost::multiprecision::numerator(c.rational_value());
      if (boost::multiprecision::abs(num) < Integer(1) << 53) return Json(num.convert_to<long long>());
    }
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(to_string(q));
    return Json{{"cyclotomic", Json{{"order", c.order()}, {"coeffs", coeffs}}}};
  }
  const Complex z = s.to_complex();
  return Json{{"re", to_double(z.real())}, {"im", to_double(z.imag())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar::rational(Rational(j.get<long long>()));
  if (j.is_number_float()) return Scalar(Complex(j.get<double>()));
  if (j.is_string()) return Scalar::rational(parse_rational(j.get<std::string>()));
  if (j.is_object() && j.contains("cyclotomic")) {
    const Json& c = j.at("cyclotomic");
    const auto order = get_as<unsigned>(field(c, "order"), "order");
    if (order == 0 || order > kMaxCyclotomicOrder) throw ParseError("cyclotomic order out of range");
    std::vector<Rational> coeffs;
    for (const auto& q : field(c, "coeffs")) {
      if (q.is_string()) {
        coeffs.push_back(parse_rational(q.get<std::string>()));
      } else if (q.is_number_integer()) {
        coeffs.push_back(Rational(q.get<long long>()));
      } else {
        throw ParseError("cyclotomic coefficients must be integers or \"p/q\" strings");
      }
    }
    return Scalar(Cyclotomic::from_powers(order, coeffs));
  }
  if (j.is_object() && j.contains("re")) {
    const double re = get_as<double>(j.at("re"), "re");
    const double im = j.contains("im") ? get_as<double>(j.at("im"), "im") : 0.0;
    return Scalar(Complex(Real(re), Real(im)));
  }
  throw ParseError("unrecognized scalar: " + j.dump());
}

std::string schema_of(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || !j.at("schema").is_string()) {
    throw ParseError("document has no schema tag");
  }
  const auto s = j.at("schema").get<std::string>();
  if (s != "ring.v1" && s != "mtc.v1" && s != "bundle.v1") throw ParseError("unsupported schema '" + s + "'");
  return s;
}

Json ring_to_json(const BasedRing& ring) {
  return Json{{"schema", "ring.v1"},
              {"rank", ring.rank()},
              {"labels", ring.names()},
              {"unit", 0},
              {"dual", ring.duals()},
              {"fusion", ring.fusion_flat()}};
}

BasedRing ring_from_json(const Json& j) {
  expect_schema(j, "ring.v1");
  auto labels = get_as<std::vector<std::string>>(field(j, "labels"), "labels");
  const auto rank = get_as<std::size_t>(field(j, "rank"), "rank");
  if (rank != labels.size()) throw ParseError("rank does not match the number of labels");
  if (j.contains("unit") && get_as<std::size_t>(j.at("unit"), "unit") != 0) {
    throw ParseError("the unit must be label 0");
  }
  auto dual = indices_or_labels(field(j, "dual"), labels, "dual");
  auto fusion = get_as<std::vector<int>>(field(j, "fusion"), "fusion");
  try {
    return BasedRing(std::move(labels), std::move(dual), std::move(fusion));
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

Json mtc_to_json(const ModularData& md) {
  Json s = Json::array();
  for (const auto& row : md.s_matrix()) s.push_back(scalars_to_json(row));
  Json out{{"schema", "mtc.v1"},
           {"rank", md.rank()},
           {"labels", md.labels()},
           {"dual", md.duals()},
           {"s_matrix", s},
           {"twists", scalars_to_json(md.twists())}};
  if (md.has_attached_fusion()) out["fusion"] = md.fusion_ring().fusion_flat();
  return out;
}

ModularData mtc_from_json(const Json& j) {
  expect_schema(j, "mtc.v1");
  auto labels = get_as<std::vector<std::string>>(field(j, "labels"), "labels");
  if (j.contains("rank") && get_as<std::size_t>(j.at("rank"), "rank") != labels.size()) {
    throw ParseError("rank does not match the number of labels");
  }
  auto dual = indices_or_labels(field(j, "dual"), labels, "dual");
  ScalarMatrix s;
  const Json& sj = field(j, "s_matrix");
  if (!sj.is_array()) throw ParseError("s_matrix must be an array of rows");
  for (const auto& row : sj) s.push_back(scalars_from_json(row, "s_matrix"));
  auto twists = scalars_from_json(field(j, "twists"), "twists");
  try {
    ModularData md(labels, dual, std::move(s), std::move(twists));
    if (j.contains("fusion")) {
      md.attach_fusion(BasedRing(labels, dual, get_as<std::vector<int>>(j.at("fusion"), "fusion")));
    }
    return md;
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

Json bundle_to_json(const CondensationBundle& b) {
  const Ambient& a = b.ambient;
  Json amb;
  switch (a.kind()) {
    case Ambient::Kind::Modular:
      amb = Json{{"kind", "mtc"}, {"mtc", mtc_to_json(a.factors().front())}};
      break;
    case Ambient::Kind::Product: {
      Json factors = Json::array();
      for (const auto& f : a.factors()) factors.push_back(mtc_to_json(f));
      amb = Json{{"kind", "product"}, {"separator", a.separator()}, {"factors", factors}};
      break;
    }
    case Ambient::Kind::Ring:
      amb = Json{{"kind", "ring"}, {"ring", ring_to_json(*a.ring())}, {"dims", scalars_to_json(a.dims().values)}};
      break;
    case Ambient::Kind::Dims:
      amb = Json{{"kind", "dims"},
                 {"labels", a.labels()},
                 {"dual", a.duals()},
                 {"dims", scalars_to_json(a.dims().values)}};
      break;
  }
  if ((a.kind() == Ambient::Kind::Ring || a.kind() == Ambient::Kind::Dims) && a.twists()) {
    amb["twists"] = scalars_to_json(*a.twists());
  }
  Json out{{"schema", "bundle.v1"},
           {"name", b.name},
           {"ambient", amb},
           {"mult", b.mult},
           {"module_ring", ring_to_json(b.module_ring)},
           {"dA", scalars_to_json(b.dA.values)},
           {"local", labels_json(b.module_ring.names(), b.local.members)}};
  if (b.induction) out["induction"] = *b.induction;
  return out;
}

CondensationBundle bundle_from_json(const Json& j) {
  expect_schema(j, "bundle.v1");
  const Json& aj = field(j, "ambient");
  const auto kind = get_as<std::string>(field(aj, "kind"), "kind");
  auto optional_twists = [&]() -> std::optional<ScalarVector> {
    if (!aj.contains("twists")) return std::nullopt;
    return scalars_from_json(aj.at("twists"), "twists");
  };
  auto make_ambient = [&]() -> Ambient {
    if (kind == "mtc") return Ambient::from_modular(mtc_from_json(field(aj, "mtc")));
    if (kind == "product") {
      std::vector<ModularData> factors;
      for (const auto& f : field(aj, "factors")) factors.push_back(mtc_from_json(f));
      const std::string sep = aj.contains("separator") ? get_as<std::string>(aj.at("separator"), "separator") : ":";
      return Ambient::from_factors(std::move(factors), sep);
    }
    if (kind == "ring") {
      BasedRing ring = ring_from_json(field(aj, "ring"));
      DimVector dims = aj.contains("dims") ? DimVector{scalars_from_json(aj.at("dims"), "dims"), DimSource::Supplied}
                                           : fp_dims(ring);
      return Ambient::from_ring(std::move(ring), std::move(dims), optional_twists());
    }
    if (kind == "dims") {
      auto labels = get_as<std::vector<std::string>>(field(aj, "labels"), "labels");
      auto dual = indices_or_labels(field(aj, "dual"), labels, "dual");
      DimVector dims{scalars_from_json(field(aj, "dims"), "dims"), DimSource::Supplied};
      return Ambient::from_dims(std::move(labels), std::move(dual), std::move(dims), optional_twists());
    }
    throw ParseError("unknown ambient kind '" + kind + "'");
  };
  try {
    Ambient ambient = make_ambient();
    BasedRing ring = ring_from_json(field(j, "module_ring"));
    DimVector dA = j.contains("dA") ? DimVector{scalars_from_json(j.at("dA"), "dA"), DimSource::Supplied}
                                    : fp_dims(ring);
    if (dA.size() != ring.rank()) throw ParseError("dA length does not match the module ring");
    std::optional<std::vector<std::vector<int>>> induction;
    if (j.contains("induction")) induction = get_as<std::vector<std::vector<int>>>(j.at("induction"), "induction");
    auto local = indices_or_labels(field(j, "local"), ring.names(), "local");
    for (auto y : local) {
      if (y >= ring.rank()) throw ParseError("local index out of range");
    }
    std::string name = j.contains("name") ? get_as<std::string>(j.at("name"), "name") : "bundle";
    auto mult = get_as<std::vector<int>>(field(j, "mult"), "mult");
    return CondensationBundle{std::move(name), std::move(ambient), std::move(mult), std::move(ring),
                              std::move(dA), std::move(induction), Subring(std::move(local))};
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace fuscond
