#ifndef THETA_JSON_IO_HPP
#define THETA_JSON_IO_HPP

#include <json.hpp>
#include <optional>

#include "theta/laurent.hpp"
#include "theta/matrix.hpp"
#include "theta/prime_field.hpp"
#include "theta/strata.hpp"
#include "theta/supports.hpp"
#include "theta/tame.hpp"

namespace theta {

using Json = nlohmann::json;

// Scalars serialize as lists of {num, den, vpow} with decimal-string
// integers; terms are sorted by vpow so serialization is canonical.
Json scalar_to_json(const BaseScalar& x);
BaseScalar scalar_from_json(const Json& j);

// Single-term variant used for twists and parameter entries.
Json unit_to_json(const BaseScalar& x);
BaseScalar unit_from_json(const Json& j);

Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json support_to_json(const Support& s);
Support support_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json report_to_json(const StrataReport& r);

Json pf_to_json(const PFElem& x);
PFElem pf_from_json(const Json& j, const FqField& fld);

Json pf_matrix_to_json(const Matrix<PFElem>& m);
Matrix<PFElem> pf_matrix_from_json(const Json& j, const FqField& fld);

Json ring_to_json(const RingContext& ctx);
RingContext ring_from_json(const Json& j);

Json specialization_to_json(const Specialization& s);
Specialization specialization_from_json(const Json& j, const RingContext& ctx);

// Schema helpers; all failures surface as SchemaError.
const Json& require_field(const Json& j, const std::string& name);
long require_int(const Json& j, const std::string& name);

}  // namespace theta

#endif
