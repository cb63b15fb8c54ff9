#pragma once

#include "bellkit/geom.hpp"
#include "bellkit/localset.hpp"
#include "bellkit/scenario.hpp"

#include <array>
#include <vector>

namespace bellkit {

/// An extremal nonlocal no-signaling box: zero marginals and correlators
/// saturating the matching tight functional at value 4.
struct PRBox {
    int i = 0, j = 0, s = +1;  // label matching the functional f^s_ij
    Behavior behavior;
    CorrelatorPoint point;
};

/// The no-signaling polytope in (m, c) coordinates: positivity of the 16
/// reconstructed probabilities is the only inequality family.
geom::HPolytope ns_hrep();

/// The 8 PR boxes, constructed analytically, ordered like chsh_facets().
std::vector<PRBox> pr_boxes();

/// Vertex enumeration of ns_hrep: the 16 deterministic points united with
/// the 8 PR boxes.
geom::VPolytope ns_vertices();

struct TesseractReport {
    bool complete = false;
    std::vector<std::array<int, 4>> points;      // collected c-vectors
    std::vector<std::array<int, 4>> missing;     // sign vectors not covered
    std::vector<std::array<int, 4>> duplicates;  // covered more than once
};

/// Checks that the given c-vectors fill the hypercube {-1,+1}^4 exactly.
TesseractReport tesseract_check(const std::vector<std::array<int, 4>>& cvectors);

/// The full construction: 8 local correlation vertices (both tetrahedra)
/// plus the 8 PR c-vectors.
TesseractReport tesseract_check();

}  // namespace bellkit
