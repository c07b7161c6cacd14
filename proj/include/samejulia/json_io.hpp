#pragma once

// JSON forms of the library's values. Complex numbers are [re, im] pairs and
// polynomials are arrays of such pairs indexed by power.

#include <string_view>

#include <json.hpp>

#include "samejulia/boettcher.hpp"
#include "samejulia/classify.hpp"
#include "samejulia/decompose.hpp"
#include "samejulia/poly.hpp"
#include "samejulia/symmetry.hpp"

namespace samejulia::json_io {

using nlohmann::json;

json to_json(Complex c);
json to_json(const Poly& p);
json to_json(const AffineMap& L);

/// Throws InputError on anything but a non-empty array of finite [re, im] pairs.
Complex complex_from_json(const json& j);
Poly poly_from_json(const json& j);

/// Inline JSON when `arg` starts with '[', otherwise a path to a JSON file.
Poly load_poly(std::string_view arg);

json to_json(const Centering& c);
json to_json(const SymmetryGroup& s);
json to_json(const HatData& h);
json to_json(const BoettcherSeries& b);
json to_json(const GreenValue& g);
json to_json(const RootSearch& r);
json to_json(const DecompositionResult& d);
json to_json(const Classification& c);
json to_json(const SameJuliaVerdict& v);

}  // namespace samejulia::json_io
