#pragma once

// JSON schema shared by the CLI and the serialization tests.
//
//   Int         number, or decimal string beyond 53-bit safety
//   Rat         string "p/q"
//   CRat        {"re":"p/q","im":"p/q"}
//   GradedClass {"r":..., "c":[22 scalars], "s":...}
//   Sublattice  {"rank":k, "basis":[[24 ints]...]}  (canonical HNF rows)
//   NormalForm  {"type":"symplectic","lambda":...,"B":[...],"omega":[...]}
//               {"type":"complex","sigma":[...],"B":[...]}
//
// Decoding accepts any scalar form that promotes losslessly to the target
// flavor and throws Errc::Parse otherwise.

#include "mukai/gcy.hpp"
#include "mukai/hodge.hpp"

#include <json.hpp>

namespace mukai {

using Json = nlohmann::ordered_json;

Json encode(const Int& v);
Json encode(const Rat& v);
Json encode(const CRat& v);
Json encode(const GradedI& x);
Json encode(const GradedQ& x);
Json encode(const GradedC& x);
Json encode(const Sublattice& l);
Json encode(const NormalForm& nf);
Json encode(const PositivePlane& p);
Json encode(const FourSpace& pi);
Json encode(const ClassicalReduction& red);
Json encode(const EtaReport& rep);

template <class S>
Json encode_vec(const Eigen::MatrixBase<S>& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

Int decode_int(const Json& j);
Rat decode_rat(const Json& j);
CRat decode_crat(const Json& j);
GradedC decode_graded(const Json& j);
Vec22q decode_vec22q(const Json& j);
Vec22c decode_vec22c(const Json& j);
Vec24q decode_vec24q(const Json& j);
Sublattice decode_sublattice(const Json& j);
NormalForm decode_normal_form(const Json& j);
FourSpace decode_four_space(const Json& j);

}  // namespace mukai
