#pragma once

#include <string>

#include <json.hpp>

#include "tbk/verdict.hpp"

namespace tbk {

// Insertion-ordered JSON keeps report key order stable across runs.
using Json = nlohmann::ordered_json;

Json poly_to_json(const PolyZ& p);   // decimal strings, lowest degree first
Json poly_to_json(const PolyQ& p);   // "a" or "a/b" strings
Json poly_to_json(const PolyF2& p);  // 0/1 integers

Json report_to_json(const KnotReport& rep);

std::string render_json(const KnotReport& rep);
std::string render_markdown(const KnotReport& rep);
std::string render_table(const KnotReport& rep);

}  // namespace tbk
