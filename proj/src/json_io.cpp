#include "mukai/json_io.hpp"

namespace mukai {

namespace {

const Int& json_safe_bound() {
  static const Int bound = Int::from_string("9007199254740991");  // 2^53 - 1
  return bound;
}

[[noreturn]] void bad(const std::string& what, const Json& j) {
  throw Error(Errc::Parse, what + ", got " + j.dump());
}

}  // namespace

Json encode(const Int& v) {
  if (v.abs() <= json_safe_bound()) return Json(v.to_i64());
  return Json(v.to_string());
}

Json encode(const Rat& v) { return Json(v.to_string()); }

Json encode(const CRat& v) {
  return Json{{"re", v.real().to_string()}, {"im", v.imag().to_string()}};
}

namespace {

template <class S>
Json encode_graded(const GradedClass<S>& x) {
  Json c = Json::array();
  for (int i = 0; i < kH2Dim; ++i) c.push_back(encode(x.c(i)));
  return Json{{"r", encode(x.r)}, {"c", std::move(c)}, {"s", encode(x.s)}};
}

}  // namespace

Json encode(const GradedI& x) { return encode_graded(x); }
Json encode(const GradedQ& x) { return encode_graded(x); }
Json encode(const GradedC& x) { return encode_graded(x); }

Json encode(const Sublattice& l) {
  Json basis = Json::array();
  for (int i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < kTotalDim; ++j) row.push_back(encode(l.basis()(i, j)));
    basis.push_back(std::move(row));
  }
  return Json{{"rank", l.rank()}, {"basis", std::move(basis)}};
}

Json encode(const NormalForm& nf) {
  if (const auto* sf = std::get_if<SymplecticForm>(&nf))
    return Json{{"type", "symplectic"},
                {"lambda", encode(sf->lambda)},
                {"B", encode_vec(sf->b_field)},
                {"omega", encode_vec(sf->omega)}};
  const auto& cf = std::get<ComplexForm>(nf);
  return Json{{"type", "complex"},
              {"sigma", encode_vec(cf.sigma)},
              {"B", encode_vec(cf.b_field)}};
}

Json encode(const PositivePlane& p) {
  return Json{{"u", encode_vec(p.u)}, {"v", encode_vec(p.v)}, {"ratio_d", encode(p.ratio_d)}};
}

Json encode(const FourSpace& pi) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < kTotalDim; ++j) row.push_back(encode(pi.rows()(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"basis", std::move(rows)}};
}

Json encode(const ClassicalReduction& red) {
  Json out{{"H", encode(red.h_plane)},
           {"B_prime", encode_vec(red.b_prime)},
           {"complement", encode(red.complement)},
           {"complement_complex_type", red.complement_complex_type}};
  out["sigma"] = red.sigma ? encode_vec(*red.sigma) : Json(nullptr);
  return out;
}

Json encode(const EtaReport& rep) {
  return Json{{"eta_bijective", rep.eta_bijective},
              {"isometry", rep.isometry},
              {"hodge", rep.hodge},
              {"index", encode(rep.index)},
              {"r", encode(rep.r)}};
}

Int decode_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int::from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(e.what(), j);
    }
  }
  bad("expected an integer (number or decimal string)", j);
}

Rat decode_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Rat::from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(e.what(), j);
    } catch (const std::domain_error& e) {
      bad(e.what(), j);
    }
  }
  bad("expected a rational (\"p/q\" string or integer)", j);
}

CRat decode_crat(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im")) bad("expected {\"re\":...,\"im\":...}", j);
    return CRat(decode_rat(j.at("re")), decode_rat(j.at("im")));
  }
  return CRat(decode_rat(j));
}

GradedC decode_graded(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("c") || !j.contains("s"))
    bad("expected {\"r\":...,\"c\":[...],\"s\":...}", j);
  const Json& c = j.at("c");
  if (!c.is_array() || c.size() != kH2Dim)
    bad("expected 22 degree-2 coordinates", c);
  GradedC out;
  out.r = decode_crat(j.at("r"));
  for (int i = 0; i < kH2Dim; ++i) out.c(i) = decode_crat(c.at(i));
  out.s = decode_crat(j.at("s"));
  return out;
}

namespace {

template <class S, int N, class F>
Eigen::Matrix<S, N, 1> decode_fixed_vec(const Json& j, F decode_scalar, const char* what) {
  if (!j.is_array() || j.size() != N) bad(std::string("expected ") + what, j);
  Eigen::Matrix<S, N, 1> out;
  for (int i = 0; i < N; ++i) out(i) = decode_scalar(j.at(i));
  return out;
}

}  // namespace

Vec22q decode_vec22q(const Json& j) {
  return decode_fixed_vec<Rat, kH2Dim>(j, decode_rat, "22 rationals");
}

Vec22c decode_vec22c(const Json& j) {
  return decode_fixed_vec<CRat, kH2Dim>(j, decode_crat, "22 Gaussian rationals");
}

Vec24q decode_vec24q(const Json& j) {
  return decode_fixed_vec<Rat, kTotalDim>(j, decode_rat, "24 rationals");
}

Sublattice decode_sublattice(const Json& j) {
  if (!j.is_object() || !j.contains("basis")) bad("expected {\"rank\":...,\"basis\":[...]}", j);
  const Json& basis = j.at("basis");
  if (!basis.is_array()) bad("expected an array of rows", basis);
  IMat rows(basis.size(), kTotalDim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Json& row = basis.at(i);
    if (!row.is_array() || row.size() != kTotalDim) bad("expected 24 integers per row", row);
    for (int jcol = 0; jcol < kTotalDim; ++jcol) rows(i, jcol) = decode_int(row.at(jcol));
  }
  return Sublattice::from_rows(rows);
}

NormalForm decode_normal_form(const Json& j) {
  if (!j.is_object() || !j.contains("type")) bad("expected a tagged normal form", j);
  std::string type = j.at("type").get<std::string>();
  if (type == "symplectic")
    return SymplecticForm{decode_crat(j.at("lambda")), decode_vec22q(j.at("B")),
                          decode_vec22q(j.at("omega"))};
  if (type == "complex")
    return ComplexForm{decode_vec22c(j.at("sigma")), decode_vec22q(j.at("B"))};
  bad("unknown normal form type", j.at("type"));
}

FourSpace decode_four_space(const Json& j) {
  if (!j.is_object() || !j.contains("basis")) bad("expected {\"basis\":[[...]x4]}", j);
  const Json& rows = j.at("basis");
  if (!rows.is_array() || rows.size() != 4) bad("expected four basis rows", rows);
  FourSpace::Rows out;
  for (int i = 0; i < 4; ++i) out.row(i) = decode_vec24q(rows.at(i)).transpose();
  return FourSpace::from_rows(std::move(out));
}

}  // namespace mukai
