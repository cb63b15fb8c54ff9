#include "bellkit/geom.hpp"

#include "simplex.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace bellkit::geom {

namespace {

/// Reduced row echelon form in place. Returns the pivot column indices.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rational lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

long rank_of(RatMat m) { return static_cast<long>(rref(m).size()); }

/// Inverse of a square nonsingular matrix by Gauss-Jordan.
RatMat inverse(const RatMat& b) {
    const int n = static_cast<int>(b.size());
    RatMat aug(n, RatVec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = b[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw std::logic_error("inverse: singular matrix");
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

/// Extreme rays of the pointed cone {y : row . y >= 0 for every row}.
///
/// Double description: start from a simplicial subcone spanned by n
/// independent rows, then insert the remaining rows one at a time, always
/// the row with the fewest currently tight generators. Adjacency of a
/// positive/negative generator pair is decided by the rank of their common
/// tight rows (must be n - 2), which stays correct under degeneracy.
std::vector<RatVec> dd_generators(const RatMat& rows) {
    if (rows.empty()) throw std::logic_error("dd_generators: no rows");
    const int n = static_cast<int>(rows[0].size());

    std::vector<int> base;
    RatMat acc;
    for (int i = 0; i < static_cast<int>(rows.size()) && static_cast<int>(base.size()) < n; ++i) {
        acc.push_back(rows[i]);
        if (rank_of(acc) == static_cast<long>(acc.size())) {
            base.push_back(i);
        } else {
            acc.pop_back();
        }
    }
    if (static_cast<int>(base.size()) < n)
        throw std::logic_error("dd_generators: cone is not pointed");

    const RatMat binv = inverse(acc);
    std::vector<RatVec> gens;
    for (int j = 0; j < n; ++j) {
        RatVec g(n);
        for (int i = 0; i < n; ++i) g[i] = binv[i][j];
        make_primitive(g);
        gens.push_back(std::move(g));
    }

    std::vector<int> processed = base;
    std::vector<int> remaining;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (std::find(base.begin(), base.end(), i) == base.end()) remaining.push_back(i);
    }

    const auto adjacent = [&](const RatVec& p, const RatVec& q) {
        RatMat tight;
        for (int r : processed) {
            if (dot(rows[r], p) == 0 && dot(rows[r], q) == 0) tight.push_back(rows[r]);
        }
        return rank_of(tight) == n - 2;
    };

    while (!remaining.empty()) {
        std::size_t pick = 0;
        long best = -1;
        for (std::size_t t = 0; t < remaining.size(); ++t) {
            long tight = 0;
            for (const auto& g : gens)
                if (dot(rows[remaining[t]], g) == 0) ++tight;
            if (best < 0 || tight < best) {
                best = tight;
                pick = t;
            }
        }
        const int row_index = remaining[pick];
        const RatVec& m = rows[row_index];
        remaining.erase(remaining.begin() + static_cast<long>(pick));

        std::vector<RatVec> pos, neg, next;
        for (auto& g : gens) {
            const Rational d = dot(m, g);
            if (d > 0) {
                pos.push_back(g);
            } else if (d < 0) {
                neg.push_back(g);
            } else {
                next.push_back(g);
            }
        }
        next.insert(next.end(), pos.begin(), pos.end());

        std::set<RatVec> fresh;
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                if (!adjacent(p, q)) continue;
                RatVec comb(n);
                const Rational dp = dot(m, p);
                const Rational dq = dot(m, q);
                for (int i = 0; i < n; ++i) comb[i] = dp * q[i] - dq * p[i];
                make_primitive(comb);
                fresh.insert(std::move(comb));
            }
        }
        for (const auto& c : fresh) next.push_back(c);

        gens = std::move(next);
        processed.push_back(row_index);
    }

    std::sort(gens.begin(), gens.end());
    return gens;
}

void check_vertex_sizes(const VPolytope& poly) {
    for (const auto& v : poly.vertices) {
        if (static_cast<int>(v.size()) != poly.ambient_dim)
            throw std::invalid_argument("polytope vertex has wrong dimension");
    }
}

}  // namespace

long rank(RatMat matrix) { return static_cast<long>(rref(matrix).size()); }

VPolytope canonical(const VPolytope& polytope) {
    check_vertex_sizes(polytope);
    VPolytope out = polytope;
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    return out;
}

bool same_vertex_set(const VPolytope& a, const VPolytope& b) {
    if (a.ambient_dim != b.ambient_dim) return false;
    return canonical(a).vertices == canonical(b).vertices;
}

long affine_dimension(const VPolytope& polytope) {
    check_vertex_sizes(polytope);
    if (polytope.vertices.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < polytope.vertices.size(); ++i)
        diffs.push_back(polytope.vertices[i] - polytope.vertices[0]);
    return rank(std::move(diffs));
}

MembershipResult membership(const RatVec& point, const VPolytope& polytope) {
    check_vertex_sizes(polytope);
    const int n = polytope.ambient_dim;
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("membership: point has wrong dimension");
    const auto& verts = polytope.vertices;
    const int k = static_cast<int>(verts.size());
    if (k == 0) throw std::invalid_argument("membership: empty vertex list");

    lp::Problem feas;
    feas.num_vars = k;
    feas.nonneg.assign(k, true);
    feas.objective.assign(k, 0);
    for (int j = 0; j < n; ++j) {
        RatVec row(k);
        for (int i = 0; i < k; ++i) row[i] = verts[i][j];
        feas.eq_rows.push_back(std::move(row));
        feas.eq_rhs.push_back(point[j]);
    }
    feas.eq_rows.push_back(RatVec(k, 1));
    feas.eq_rhs.push_back(1);

    const auto first = lp::solve(feas);
    if (first.status == lp::Status::Optimal) {
        // Rebalance: among all convex decompositions, minimize the largest
        // weight. Variables are the k weights plus the cap t.
        lp::Problem bal;
        bal.num_vars = k + 1;
        bal.nonneg.assign(k + 1, true);
        bal.objective.assign(k + 1, 0);
        bal.objective[k] = -1;
        for (int j = 0; j <= n; ++j) {
            RatVec row = feas.eq_rows[j];
            row.push_back(0);
            bal.eq_rows.push_back(std::move(row));
            bal.eq_rhs.push_back(feas.eq_rhs[j]);
        }
        for (int i = 0; i < k; ++i) {
            RatVec row(k + 1, 0);
            row[i] = 1;
            row[k] = -1;
            bal.ub_rows.push_back(std::move(row));
            bal.ub_rhs.push_back(0);
        }
        const auto balsol = lp::solve(bal);
        if (balsol.status != lp::Status::Optimal)
            throw std::logic_error("membership: balance LP failed on a feasible point");
        RatVec weights(balsol.x.begin(), balsol.x.begin() + k);

        Rational total = 0;
        RatVec combo(n, 0);
        for (int i = 0; i < k; ++i) {
            if (weights[i] < 0) throw std::logic_error("membership: negative witness weight");
            total += weights[i];
            combo = combo + weights[i] * verts[i];
        }
        if (total != 1 || combo != point)
            throw std::logic_error("membership: witness does not reproduce the point");
        return InsideWitness{std::move(weights)};
    }

    // Outside: find the box-normalized functional with the largest violation.
    // Variables are the n normal coordinates followed by the bound.
    lp::Problem sep;
    sep.num_vars = n + 1;
    sep.nonneg.assign(n + 1, false);
    sep.objective = point;
    sep.objective.push_back(-1);
    for (int i = 0; i < k; ++i) {
        RatVec row = verts[i];
        row.push_back(-1);
        sep.ub_rows.push_back(std::move(row));
        sep.ub_rhs.push_back(0);
    }
    for (int j = 0; j < n; ++j) {
        RatVec up(n + 1, 0), down(n + 1, 0);
        up[j] = 1;
        down[j] = -1;
        sep.ub_rows.push_back(std::move(up));
        sep.ub_rhs.push_back(1);
        sep.ub_rows.push_back(std::move(down));
        sep.ub_rhs.push_back(1);
    }
    const auto sepsol = lp::solve(sep);
    if (sepsol.status != lp::Status::Optimal || sepsol.value <= 0)
        throw std::logic_error("membership: separation LP failed on an outside point");

    RatVec normal(sepsol.x.begin(), sepsol.x.begin() + n);
    Rational bound = sepsol.x[n];
    make_primitive(normal, &bound);
    for (const auto& v : verts) {
        if (dot(normal, v) > bound)
            throw std::logic_error("membership: separator cuts a vertex");
    }
    if (dot(normal, point) <= bound)
        throw std::logic_error("membership: separator misses the point");
    return SeparatingHyperplane{std::move(normal), std::move(bound)};
}

HPolytope facet_enumeration(const VPolytope& polytope) {
    const VPolytope poly = canonical(polytope);
    if (poly.vertices.empty())
        throw std::invalid_argument("facet_enumeration: empty vertex list");
    const int n = poly.ambient_dim;
    const auto& verts = poly.vertices;
    const RatVec& v0 = verts[0];

    RatMat diffs;
    for (std::size_t i = 1; i < verts.size(); ++i) diffs.push_back(verts[i] - v0);
    RatMat reduced = diffs;
    const auto piv = rref(reduced);
    const int d = static_cast<int>(piv.size());

    HPolytope out;
    out.ambient_dim = n;

    // Affine hull: kernel basis of the difference space, one equality per
    // free column of the reduced system.
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    RatMat eqrows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec w(n, 0);
        w[f] = 1;
        for (int j = 0; j < d; ++j) w[piv[j]] = -reduced[j][f];
        make_primitive(w);
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        Rational val = dot(w, v0);
        eqrows.push_back(w);
        out.eqs.push_back(Equality{std::move(w), std::move(val)});
    }
    std::sort(out.eqs.begin(), out.eqs.end(), [](const Equality& a, const Equality& b) {
        return std::tie(a.normal, a.value) < std::tie(b.normal, b.value);
    });

    if (d == 0) return out;  // a single point has no facets

    // Facets of the full-dimensional shadow on the pivot coordinates are the
    // extreme rays of the dual cone of its homogenization.
    RatMat dual_rows;
    for (const auto& v : verts) {
        RatVec row(d + 1);
        for (int j = 0; j < d; ++j) row[j] = v[piv[j]] - v0[piv[j]];
        row[d] = 1;
        dual_rows.push_back(std::move(row));
    }

    // Equality system in reduced form, for canonicalizing lifted normals.
    RatMat eqreduced = eqrows;
    const auto eqpiv = rref(eqreduced);

    for (const auto& ray : dd_generators(dual_rows)) {
        RatVec normal(n, 0);
        for (int j = 0; j < d; ++j) normal[piv[j]] = -ray[j];
        Rational bound = ray[d] + dot(normal, v0);
        for (std::size_t j = 0; j < eqpiv.size(); ++j) {
            const Rational f = normal[eqpiv[j]];
            if (f == 0) continue;
            normal = normal - f * eqreduced[j];
            bound -= f * dot(eqreduced[j], v0);
        }
        make_primitive(normal, &bound);
        out.ineqs.push_back(Inequality{std::move(normal), std::move(bound)});
    }
    std::sort(out.ineqs.begin(), out.ineqs.end(), [](const Inequality& a, const Inequality& b) {
        return std::tie(a.normal, a.bound) < std::tie(b.normal, b.bound);
    });
    out.ineqs.erase(std::unique(out.ineqs.begin(), out.ineqs.end()), out.ineqs.end());
    return out;
}

VPolytope vertex_enumeration(const HPolytope& polytope) {
    const int n = polytope.ambient_dim;
    for (const auto& e : polytope.eqs)
        if (static_cast<int>(e.normal.size()) != n)
            throw std::invalid_argument("vertex_enumeration: equality has wrong dimension");
    for (const auto& q : polytope.ineqs)
        if (static_cast<int>(q.normal.size()) != n)
            throw std::invalid_argument("vertex_enumeration: inequality has wrong dimension");

    VPolytope empty;
    empty.ambient_dim = n;

    // Eliminate the equalities: x = part + K u with u free of dimension q.
    RatMat eqsys;
    for (const auto& e : polytope.eqs) {
        RatVec row = e.normal;
        row.push_back(e.value);
        eqsys.push_back(std::move(row));
    }
    std::vector<int> eqpiv;
    if (!eqsys.empty()) {
        eqpiv = rref(eqsys);
        if (!eqpiv.empty() && eqpiv.back() == n) return empty;  // 0 = 1
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t j = 0; j < eqpiv.size(); ++j) is_pivot[eqpiv[j]] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const int q = static_cast<int>(free_cols.size());

    RatVec part(n, 0);
    for (std::size_t j = 0; j < eqpiv.size(); ++j) part[eqpiv[j]] = eqsys[j][n];
    RatMat basis(n, RatVec(q, 0));  // columns span the solution space
    for (int l = 0; l < q; ++l) {
        basis[free_cols[l]][l] = 1;
        for (std::size_t j = 0; j < eqpiv.size(); ++j)
            basis[eqpiv[j]][l] = -eqsys[j][free_cols[l]];
    }

    RatMat a_rows;
    RatVec a_rhs;
    for (const auto& ineq : polytope.ineqs) {
        RatVec row(q, 0);
        for (int l = 0; l < q; ++l)
            for (int i = 0; i < n; ++i) row[l] += ineq.normal[i] * basis[i][l];
        a_rows.push_back(std::move(row));
        a_rhs.push_back(ineq.bound - dot(ineq.normal, part));
    }

    if (q == 0) {
        for (const auto& b : a_rhs)
            if (b < 0) return empty;
        VPolytope out;
        out.ambient_dim = n;
        out.vertices.push_back(part);
        return out;
    }

    lp::Problem base;
    base.num_vars = q;
    base.nonneg.assign(q, false);
    base.objective.assign(q, 0);
    base.ub_rows = a_rows;
    base.ub_rhs = a_rhs;
    if (lp::solve(base).status == lp::Status::Infeasible) return empty;

    for (int l = 0; l < q; ++l) {
        for (int sign : {1, -1}) {
            lp::Problem dir = base;
            dir.objective[l] = sign;
            const auto sol = lp::solve(dir);
            if (sol.status == lp::Status::Unbounded) {
                RatVec ray(n, 0);
                for (int i = 0; i < n; ++i)
                    for (int m = 0; m < q; ++m) ray[i] += basis[i][m] * sol.ray[m];
                make_primitive(ray);
                throw UnboundedPolytopeError(std::move(ray));
            }
            if (sol.status != lp::Status::Optimal)
                throw std::logic_error("vertex_enumeration: direction LP failed");
        }
    }

    // Bounded and nonempty: the homogenization is a pointed cone whose
    // extreme rays all have positive last coordinate.
    RatMat cone;
    for (std::size_t i = 0; i < a_rows.size(); ++i) {
        RatVec row(q + 1);
        for (int l = 0; l < q; ++l) row[l] = -a_rows[i][l];
        row[q] = a_rhs[i];
        cone.push_back(std::move(row));
    }
    RatVec top(q + 1, 0);
    top[q] = 1;
    cone.push_back(std::move(top));

    VPolytope out;
    out.ambient_dim = n;
    for (const auto& g : dd_generators(cone)) {
        if (g[q] <= 0) throw std::logic_error("vertex_enumeration: ray in a bounded polytope");
        RatVec x = part;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < q; ++l) x[i] += basis[i][l] * (g[l] / g[q]);
        out.vertices.push_back(std::move(x));
    }
    return canonical(out);
}

}  // namespace bellkit::geom
