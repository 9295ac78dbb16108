/*
   Copyright 2026 The gwa-skew Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef GWASKEW_JSON_IO_HPP
#define GWASKEW_JSON_IO_HPP

#include <json.hpp>

#include "gwaskew/derivation.hpp"
#include "gwaskew/disc_plane.hpp"
#include "gwaskew/ortho.hpp"

namespace gwa::json_io {

using Json = nlohmann::json;

// All from_json functions throw ParseError naming the offending field.

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const AffineAuto& phi);
AffineAuto affine_from_json(const Json& j);

Json to_json(const GwaElement& e);
GwaElement element_from_json(const Json& j);

Json to_json(const GwaAlgebra& algebra);
GwaAlgebra algebra_from_json(const Json& j);

Json to_json(const DerivationValues& v);
Json to_json(const SkewDerivation& d);
DerivationValues values_from_json(const Json& j);

Json to_json(const TheoremData& data);
TheoremData theorem_data_from_json(const Json& j);

FiniteOrderData finite_order_from_json(const Json& j);
Prop51Data prop51_from_json(const Json& j);

Json to_json(const SigmaQData& data);
SigmaQData sigma_q_from_json(const Json& j);

Json to_json(const OrthoCertificate& cert);
OrthoCertificate certificate_from_json(const Json& j);

Grading grading_from_json(const Json& j);

}  // namespace gwa::json_io

#endif  // GWASKEW_JSON_IO_HPP
