#pragma once

#include <json.hpp>

#include "heckeho/ff.hpp"
#include "heckeho/gln.hpp"
#include "heckeho/haff.hpp"
#include "heckeho/weyl.hpp"

namespace heckeho::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

// {"factors": [3, 2], "torus_rank": 0, "q": 3}
weyl::GroupSpec spec_from_json(const json& j);
json to_json(const weyl::GroupSpec& spec);

// {"exponents": [[..], ..], "torus_exponents": [..], "J": ["s1.0", ..]}
haff::AffChar char_from_json(const weyl::GroupSpec& spec, const json& j);
json to_json(const weyl::GroupSpec& spec, const haff::AffChar& chi);

// Elements are coefficient vectors [c0, c1, ..]; a bare integer is read as c0.
ff::Elem elem_from_json(const ff::GaloisField& f, const json& j);
json elem_to_json(const ff::GaloisField& f, ff::Elem e);

// {"p": 3, "m": 1}
ff::Field field_from_json(const json& j);
json to_json(const ff::GaloisField& f);

// {"chi": .., "lambda": [..], "nu": [..], "field": {..}}; an optional "spec"
// key is ignored here and handled by the caller.
gln::SimpleSS simple_from_json(const weyl::GroupSpec& spec, const json& j);
json to_json(const gln::SimpleSS& m);

}  // namespace heckeho::io
