#pragma once

// JSON inputs (relation systems, alpha, test functions) and heatmap output.

#include <iosfwd>

#include "json.hpp"
#include "zfp/density.hpp"
#include "zfp/grid.hpp"
#include "zfp/relations.hpp"

namespace zfp {

// {"n": int, "rows": [{"b": [ints], "a": int, "q": int, "p": int}, ...]}; validated.
RelationSystem relation_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RelationSystem& system);

// {"decimal": ["...", ...]} or {"exact": [[{"num": int, "den": int, "p": int}, ...], ...]}.
AlphaVector alpha_from_json(const nlohmann::json& j, int precision_bits);
nlohmann::json to_json(const AlphaVector& alpha, int digits = 40);

// [{"m": [ints], "re": real, "im": real}, ...], or {"terms": [...], "decay_b": real, "decay_c": real}.
TestFunction test_function_from_json(const nlohmann::json& j, std::size_t dimension);

// Parses a whole stream; malformed JSON becomes Error(kParse).
nlohmann::json read_json(std::istream& in, const std::string& what);

// Binary P5, 8 bits, linear [v_min, v_max] -> [0, 255]; a constant grid maps to 128.
void write_pgm(const Grid2D& grid, std::ostream& out);

// Binary P6, diverging: 0 -> white, negative -> blue, positive -> red over +-max|v|.
void write_ppm_diverging(const Grid2D& grid, std::ostream& out);

// {"mode", "v_min", "v_max", "resolution", "metadata"}.
nlohmann::json heatmap_sidecar(const Grid2D& grid, bool diverging);

}  // namespace zfp
