#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csg/braid.hpp"
#include "csg/groupoid.hpp"
#include "csg/kan.hpp"
#include "csg/symmetric.hpp"

namespace csg {

// Horn files:
//   {"instance": "braid", "level": 2, "k": 1,
//    "faces": {"0": "s1", "2": "s1^-1"}, "base": "[1,0,2]"}
// Faces are braid words (level n - 1 implied) or permutation literals.

using AnyHorn = std::variant<Horn<Symmetric>, Horn<Braid>>;

/// Throws csg::Error(Parse) on malformed input. Horn compatibility is not
/// checked here.
AnyHorn parse_horn_json(std::string_view text);
std::string horn_to_json(const Horn<Symmetric>& h);
std::string horn_to_json(const Horn<Braid>& h);

/// Simplices with their objects, faces, degeneracies and quotient images.
std::string nerve_to_json(const std::vector<NerveSimplex<Symmetric>>& simplices);
std::string nerve_to_json(const std::vector<NerveSimplex<Braid>>& simplices);

/// Graphviz digraph of the objects and arrows of Gamma_level (symmetric).
std::string gamma_skeleton_dot(std::size_t level);

}  // namespace csg
