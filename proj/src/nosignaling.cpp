#include "bellkit/nosignaling.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bellkit {

geom::HPolytope ns_hrep() {
    geom::HPolytope h;
    h.ambient_dim = 8;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    // p(ab|xy) = (1 + a<Ax> + b<By> + ab<AxBy>)/4 >= 0
                    const int av = outcome_value(a);
                    const int bv = outcome_value(b);
                    RatVec n(8, 0);
                    n[x] = -av;
                    n[2 + y] = -bv;
                    n[4 + 2 * x + y] = -av * bv;
                    h.ineqs.push_back(geom::Inequality{std::move(n), 1});
                }
    std::sort(h.ineqs.begin(), h.ineqs.end(),
              [](const geom::Inequality& a, const geom::Inequality& b) {
                  return std::tie(a.normal, a.bound) < std::tie(b.normal, b.bound);
              });
    return h;
}

std::vector<PRBox> pr_boxes() {
    std::vector<PRBox> out;
    const auto facets = chsh_facets();
    for (std::size_t k = 0; k < facets.size(); ++k) {
        PRBox box;
        box.s = k < 4 ? +1 : -1;
        box.i = static_cast<int>((k % 4) / 2);
        box.j = static_cast<int>(k % 2);
        box.point.m = {0, 0, 0, 0};
        box.point.c = facets[k].beta_c;
        box.behavior = from_correlators(box.point);
        out.push_back(std::move(box));
    }
    return out;
}

geom::VPolytope ns_vertices() { return geom::vertex_enumeration(ns_hrep()); }

TesseractReport tesseract_check(const std::vector<std::array<int, 4>>& cvectors) {
    TesseractReport report;
    report.points = cvectors;
    std::map<std::array<int, 4>, int> seen;
    for (const auto& v : cvectors) {
        for (int x : v)
            if (x != 1 && x != -1)
                throw std::invalid_argument("tesseract_check: entries must be +1 or -1");
        ++seen[v];
    }
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> v;
        for (int t = 0; t < 4; ++t) v[t] = (mask >> t) & 1 ? -1 : 1;
        if (!seen.count(v)) report.missing.push_back(v);
    }
    for (const auto& [v, count] : seen)
        if (count > 1) report.duplicates.push_back(v);
    report.complete = report.missing.empty() && report.duplicates.empty() &&
                      cvectors.size() == 16;
    return report;
}

TesseractReport tesseract_check() {
    std::vector<std::array<int, 4>> points;
    for (int s : {+1, -1})
        for (const auto& v : correlation_tetrahedron(s).vertices) {
            std::array<int, 4> c;
            for (int t = 0; t < 4; ++t) c[t] = v[t].convert_to<int>();
            points.push_back(c);
        }
    for (const auto& box : pr_boxes()) {
        std::array<int, 4> c;
        for (int t = 0; t < 4; ++t) c[t] = box.point.c[t].convert_to<int>();
        points.push_back(c);
    }
    return tesseract_check(points);
}

}  // namespace bellkit
