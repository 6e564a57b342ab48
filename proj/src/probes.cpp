#include "linefan/probes.hpp"

#include "linefan/resultant.hpp"
#include "linefan/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace linefan {

namespace {

constexpr int kReseeds = 8;

std::vector<Scalar> random_vector(Lcg& rng, int n, long bound) {
    std::vector<Scalar> v;
    for (int k = 0; k < n; ++k) v.emplace_back(rng.uniform(-bound, bound));
    return v;
}

ExactMatrix random_matrix(Lcg& rng, int rows, int cols, long bound) {
    for (;;) {
        ExactMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar(rng.uniform(-bound, bound));
        }
        if (m.rank() == std::min(rows, cols)) return m;
    }
}

// Constant coordinates as polynomials in nvars parameters.
std::vector<MultiPoly> constant_point(std::span<const Scalar> x, int nvars) {
    std::vector<MultiPoly> out;
    for (const auto& c : x) out.push_back(MultiPoly::constant(nvars, c));
    return out;
}

// base + sum_k var_k * dirs[k]
std::vector<MultiPoly> affine_point(std::span<const Scalar> base, const std::vector<std::vector<Scalar>>& dirs,
                                    const std::vector<int>& vars, int nvars) {
    std::vector<MultiPoly> out = constant_point(base, nvars);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        MultiPoly v = MultiPoly::variable(nvars, vars[k]);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!dirs[k][i].is_zero()) out[i] += v.scaled(dirs[k][i]);
        }
    }
    return out;
}

// Distinct solutions of a system in nvars unknowns; unused unknowns make a
// nonempty solution set positive-dimensional.
int count_cell(std::vector<MultiPoly> eqs, int nvars, std::uint64_t seed) {
    std::erase_if(eqs, [](const MultiPoly& p) { return p.is_zero(); });
    for (const auto& p : eqs) {
        if (p.is_constant()) return 0;
    }
    if (nvars == 0) return 1;
    if (eqs.empty()) throw PositiveDimensional("every condition vanishes identically");
    std::vector<int> target(static_cast<std::size_t>(nvars), -1);
    int used = 0;
    for (int v = 0; v < nvars; ++v) {
        if (std::any_of(eqs.begin(), eqs.end(), [v](const MultiPoly& p) { return p.uses_var(v); })) {
            target[static_cast<std::size_t>(v)] = used++;
        }
    }
    for (auto& p : eqs) p = p.rename(target, used);
    int count = count_affine_solutions(eqs, seed);
    if (count > 0 && used < nvars) throw PositiveDimensional("a parameter is unconstrained");
    return count;
}

// Removes the largest factor of p that involves only `var`. Such a factor
// marks a special point of the line parameter (a singular point of the
// hypersurface on the line) rather than a solution branch.
MultiPoly strip_content(const MultiPoly& p, int var) {
    if (p.is_zero() || !p.uses_var(var)) return p;
    std::map<Exponents, MultiPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        rest[static_cast<std::size_t>(var)] = 0;
        Exponents mono{};
        mono[static_cast<std::size_t>(var)] = e[static_cast<std::size_t>(var)];
        groups.try_emplace(rest, p.nvars()).first->second.add_term(mono, c);
    }
    std::vector<UniPoly> parts;
    for (const auto& [rest, q] : groups) parts.push_back(UniPoly::from_multi(q, var));
    UniPoly h = gcd_many(parts);
    if (h.degree() <= 0) return p;
    return p.exact_quotient(h.to_multi(p.nvars(), var));
}

std::vector<MultiPoly> slice(const std::vector<MultiPoly>& v, std::size_t from, std::size_t to) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    Scalar s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// An algebraic family of points: coordinate k is coords[k](theta) over the
// roots theta of modulus.
struct AlgebraicPoints {
    UniPoly modulus;
    std::vector<UniPoly> coords;
};

// Direction points of the lines of X through q other than r, as points of P^4.
std::vector<AlgebraicPoints> other_lines_at(const MultiPoly& g, const LineP4& r, const ProjPoint& q, Lcg& rng) {
    LocalModel lm = normalize_chart(g, q);
    FanCount fc = count_plane_points(lm.fan_system(), rng.next());
    if (fc.infinite) return {};
    ProjPoint dir_r = lm.direction_of_line(r);
    std::vector<AlgebraicPoints> out;
    for (const auto& br : fc.branches) {
        UniPoly m = br.modulus;
        for (const auto& theta : gaussian_rational_roots(m)) {
            std::vector<Scalar> c;
            for (const auto& u : br.coords) c.push_back(u.evaluate(theta));
            if (proportional(c, dir_r.coords())) m = exact_div(m, UniPoly({-theta, Scalar(1)}));
        }
        if (m.degree() < 1) continue;
        AlgebraicPoints ap{m, {}};
        for (int i = 0; i < kAmbient; ++i) {
            UniPoly x;
            for (int k = 1; k <= 3; ++k) x += br.coords[static_cast<std::size_t>(k - 1)].scaled(lm.chart.at(i, k));
            ap.coords.push_back(x % m);
        }
        out.push_back(std::move(ap));
    }
    return out;
}

// Monomial exponent vectors of degree d in nv variables.
std::vector<std::vector<int>> monomials(int nv, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nv - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

// Rows of the conditions "form of degree d vanishes on the points", one row
// per theta-coefficient of every monomial residue.
std::vector<std::vector<Scalar>> vanishing_rows(const std::vector<AlgebraicPoints>& pts, int d) {
    std::vector<std::vector<Scalar>> rows;
    if (pts.empty()) return rows;
    int nv = static_cast<int>(pts[0].coords.size());
    auto monos = monomials(nv, d);
    for (const auto& ap : pts) {
        std::vector<std::vector<UniPoly>> powers(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) {
            auto& list = powers[static_cast<std::size_t>(v)];
            list.push_back(UniPoly::constant(Scalar(1)));
            for (int k = 1; k <= d; ++k) list.push_back(mul_mod(list.back(), ap.coords[static_cast<std::size_t>(v)], ap.modulus));
        }
        int dm = ap.modulus.degree();
        std::vector<std::vector<Scalar>> block(static_cast<std::size_t>(dm), std::vector<Scalar>(monos.size()));
        for (std::size_t j = 0; j < monos.size(); ++j) {
            UniPoly val = UniPoly::constant(Scalar(1));
            for (int v = 0; v < nv; ++v) {
                int e = monos[j][static_cast<std::size_t>(v)];
                if (e != 0) val = mul_mod(val, powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)], ap.modulus);
            }
            for (int t = 0; t <= val.degree(); ++t) block[static_cast<std::size_t>(t)][j] = val.coeff(t);
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    return rows;
}

int kernel_dimension(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    if (rows.empty()) return static_cast<int>(cols);
    return static_cast<int>(cols) - ExactMatrix::from_rows(rows).rank();
}

int total_points(const std::vector<AlgebraicPoints>& pts) {
    int n = 0;
    for (const auto& p : pts) n += p.modulus.degree();
    return n;
}

}  // namespace

std::vector<MultiPoly> join_coefficients(const MultiPoly& g, const std::vector<MultiPoly>& q, const std::vector<MultiPoly>& q2,
                                         int nvars) {
    int lam = nvars;
    int mu = nvars + 1;
    MultiPoly l = MultiPoly::variable(nvars + 2, lam);
    MultiPoly m = MultiPoly::variable(nvars + 2, mu);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < q.size(); ++i) images.push_back(q[i].with_nvars(nvars + 2) * l + q2[i].with_nvars(nvars + 2) * m);
    MultiPoly h = g.substitute(images);
    int n = g.total_degree();
    std::vector<MultiPoly> out(static_cast<std::size_t>(n + 1), MultiPoly(nvars));
    for (const auto& [e, c] : h.terms()) {
        Exponents f = e;
        int k = f[static_cast<std::size_t>(mu)];
        f[static_cast<std::size_t>(lam)] = 0;
        f[static_cast<std::size_t>(mu)] = 0;
        out[static_cast<std::size_t>(k)].add_term(f, c);
    }
    return out;
}

FanCount lines_through_point(const MultiPoly& g, const ProjPoint& p, std::uint64_t seed) {
    LocalModel lm = normalize_chart(g, p);
    return count_plane_points(lm.fan_system(), seed);
}

MuResult mu_generic(const MultiPoly& g, const PointSampler& sampler, int trials, std::uint64_t seed) {
    Lcg rng(seed);
    MuResult res;
    std::map<int, int> hits;
    for (int t = 0; t < trials; ++t) {
        ProjPoint p = sampler(rng);
        std::uint64_t fan_seed = rng.next();
        try {
            FanCount fc = lines_through_point(g, p, fan_seed);
            std::string note = fc.infinite ? "cone point" : "";
            if (!fc.infinite) ++hits[fc.distinct];
            res.samples.push_back({p, std::move(fc), note});
        } catch (const MathError& e) {
            res.samples.push_back({p, std::nullopt, e.what()});
        }
    }
    if (hits.empty()) throw MathError("no general point found");
    res.mu = hits.rbegin()->first;
    for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
        if (it->second >= 2) {
            res.mu = it->first;
            break;
        }
    }
    return res;
}

LineReducedness reduced_at_line(const MultiPoly& g, const LineP4& r, const std::optional<ProjPoint>& base) {
    if (!line_on_hypersurface(g, r)) throw MathError("line is not on the hypersurface");
    if (base) {
        LocalModel lm = normalize_chart(g, *base);
        int len = local_multiplicity(lm.fan_system(), lm.direction_of_line(r));
        return {len == 1, len, *base};
    }
    for (long k = 0; k < 40; ++k) {
        long s = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
        ProjPoint p(r.point_at(Scalar(1), Scalar(s)));
        auto grad = gradient_at(g, p.coords());
        if (std::all_of(grad.begin(), grad.end(), [](const Scalar& c) { return c.is_zero(); })) continue;
        LocalModel lm = normalize_chart(g, p);
        try {
            int len = local_multiplicity(lm.fan_system(), lm.direction_of_line(r));
            return {len == 1, len, p};
        } catch (const PositiveDimensional&) {
            // r sits in a curve of lines through p, as at a cone point
        }
    }
    throw MathError("no smooth point of the line has r isolated in its fan");
}

int singular_points_on_line(const MultiPoly& g, const LineP4& r) { return restrict_gradient_to_line(g, r).gcd_degree; }

int mubar(const MultiPoly& g, const LineP4& r, const LineP4& r2) {
    check_hypersurface(g);
    int n = g.total_degree();
    if (n < 4) throw MathError("mubar needs degree at least 4");
    if (r.meets(r2)) throw MathError("lines not skew");
    if (!line_on_hypersurface(g, r) || !line_on_hypersurface(g, r2)) throw MathError("line is not on the hypersurface");
    const auto& a = r.a().coords();
    const auto& b = r.b().coords();
    const auto& a2 = r2.a().coords();
    const auto& b2 = r2.b().coords();
    auto inner = [&](const std::vector<MultiPoly>& q, const std::vector<MultiPoly>& q2, int nv) {
        return slice(join_coefficients(g, q, q2, nv), 1, static_cast<std::size_t>(n));
    };
    int total = 0;
    // cells of P^1 x P^1: q = a + s b or b, q2 = a2 + t b2 or b2
    total += count_cell(inner(affine_point(a, {b}, {0}, 2), affine_point(a2, {b2}, {1}, 2), 2), 2, 1);
    total += count_cell(inner(constant_point(b, 1), affine_point(a2, {b2}, {0}, 1), 1), 1, 2);
    total += count_cell(inner(affine_point(a, {b}, {0}, 1), constant_point(b2, 1), 1), 1, 3);
    total += count_cell(inner(constant_point(b, 0), constant_point(b2, 0), 0), 0, 4);
    return total;
}

int sigma_degree(const MultiPoly& g, const LineP4& r, std::uint64_t seed) {
    check_hypersurface(g);
    int n = g.total_degree();
    if (n < 4) throw MathError("sigma degree needs degree at least 4");
    if (!line_on_hypersurface(g, r)) throw MathError("line is not on the hypersurface");
    Lcg rng(seed);
    const auto& a = r.a().coords();
    const auto& b = r.b().coords();
    for (int attempt = 0; attempt <= kReseeds; ++attempt) {
        std::vector<std::vector<Scalar>> plane;
        for (int k = 0; k < 3; ++k) plane.push_back(random_vector(rng, kAmbient, 9));
        if (ExactMatrix::from_rows({a, b, plane[0], plane[1], plane[2]}).rank() < kAmbient) continue;
        try {
            int total = 0;
            std::uint64_t tag = rng.next();
            // s affine (variable 0) or s = infinity; the plane point in its three cells
            for (int s_cell = 0; s_cell < 2; ++s_cell) {
                int off = s_cell == 0 ? 1 : 0;
                for (int p_cell = 0; p_cell < 3; ++p_cell) {
                    int nv = off + (2 - p_cell);
                    std::vector<MultiPoly> q = s_cell == 0 ? affine_point(a, {b}, {0}, nv) : constant_point(b, nv);
                    std::vector<std::vector<Scalar>> dirs(plane.begin() + p_cell + 1, plane.end());
                    std::vector<int> vars;
                    for (int k = 0; k < 2 - p_cell; ++k) vars.push_back(off + k);
                    std::vector<MultiPoly> q2 = affine_point(plane[static_cast<std::size_t>(p_cell)], dirs, vars, nv);
                    auto coeffs = join_coefficients(g, q, q2, nv);
                    if (s_cell == 0) {
                        for (auto& c : coeffs) c = strip_content(c, 0);
                    }
                    total += count_cell(slice(coeffs, 1, coeffs.size()), nv, tag + static_cast<std::uint64_t>(3 * s_cell + p_cell));
                }
            }
            return total;
        } catch (const PositiveDimensional&) {
        }
    }
    throw MathError("no plane in general position found");
}

int sigma_degree_interpolated(const MultiPoly& g, const LineP4& r, std::uint64_t seed, int max_degree) {
    check_hypersurface(g);
    if (!line_on_hypersurface(g, r)) throw MathError("line is not on the hypersurface");
    Lcg rng(seed);
    std::vector<Scalar> h = random_vector(rng, kAmbient, 9);
    ExactMatrix proj = random_matrix(rng, 3, kAmbient, 9);
    std::vector<AlgebraicPoints> pts;
    long s = 0;
    int misses = 0;
    auto sample = [&]() {
        ++s;
        ProjPoint q(r.point_at(Scalar(1), Scalar(s)));
        std::vector<AlgebraicPoints> lines;
        try {
            lines = other_lines_at(g, r, q, rng);
        } catch (const MathError&) {
            if (++misses > 20) throw MathError("insufficient rational data");
            return;
        }
        Scalar hq = dot(h, q.coords());
        for (auto& ap : lines) {
            // the point where the line through q in direction d meets {h = 0}
            UniPoly hd;
            for (int i = 0; i < kAmbient; ++i) hd += ap.coords[static_cast<std::size_t>(i)].scaled(h[static_cast<std::size_t>(i)]);
            std::vector<UniPoly> x;
            for (int i = 0; i < kAmbient; ++i) {
                x.push_back((hd.scaled(q[i]) - ap.coords[static_cast<std::size_t>(i)].scaled(hq)) % ap.modulus);
            }
            AlgebraicPoints img{ap.modulus, {}};
            for (int row = 0; row < 3; ++row) {
                UniPoly y;
                for (int i = 0; i < kAmbient; ++i) y += x[static_cast<std::size_t>(i)].scaled(proj.at(row, i));
                img.coords.push_back(y % ap.modulus);
            }
            pts.push_back(std::move(img));
        }
    };
    for (int d = 1; d <= max_degree; ++d) {
        auto need = static_cast<int>(monomials(3, d).size()) + 6;
        while (total_points(pts) < need) sample();
        if (kernel_dimension(vanishing_rows(pts, d), monomials(3, d).size()) > 0) return d;
    }
    throw MathError("no plane curve up to the degree bound");
}

int f2_rank(const MultiPoly& g, const ProjPoint& p) {
    LocalModel lm = normalize_chart(g, p);
    if (lm.F.empty()) return 0;
    const MultiPoly& f2 = lm.F[0];
    ExactMatrix m(3, 3);
    for (const auto& [e, c] : f2.terms()) {
        std::vector<int> idx;
        for (int k = 0; k < 3; ++k) {
            for (int t = 0; t < e[static_cast<std::size_t>(k)]; ++t) idx.push_back(k);
        }
        if (idx[0] == idx[1]) {
            m.at(idx[0], idx[0]) = c;
        } else {
            Scalar half = c * Scalar::ratio(1, 2);
            m.at(idx[0], idx[1]) = half;
            m.at(idx[1], idx[0]) = half;
        }
    }
    return m.rank();
}

int sing_locus_plane_count(const MultiPoly& g, std::uint64_t seed) {
    check_hypersurface(g);
    Lcg rng(seed);
    std::vector<MultiPoly> partials;
    for (int k = 0; k < kAmbient; ++k) partials.push_back(g.partial(k));
    for (int attempt = 0; attempt <= kReseeds; ++attempt) {
        auto images = linear_forms(random_matrix(rng, kAmbient, 3, 9));
        std::vector<MultiPoly> restricted;
        for (const auto& p : partials) restricted.push_back(p.substitute(images));
        FanCount fc = count_plane_points(PlaneSystem::make(std::move(restricted)), rng.next());
        if (!fc.infinite) return fc.distinct;
    }
    throw MathError("every plane meets the singular locus in a curve");
}

MultiPoly hyperplane_section(const MultiPoly& g, std::uint64_t seed) {
    check_hypersurface(g);
    Lcg rng(seed);
    return g.substitute(linear_forms(random_matrix(rng, kAmbient, 4, 9)));
}

SurfaceLines lines_on_surface(const MultiPoly& f, std::uint64_t seed) {
    if (f.nvars() != 4 || f.is_zero() || !f.is_homogeneous()) throw MathError("expected a nonzero form in four variables");
    int n = f.total_degree();
    if (n <= 1) return {true, 0};
    Lcg rng(seed);
    MultiPoly h = linear_change(f, random_matrix(rng, 4, 4, 3));
    // Schubert cells of G(1,3): row-reduced 2x4 matrices by pivot columns
    struct Cell {
        int i, j;
    };
    const std::vector<Cell> cells{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    SurfaceLines out;
    std::uint64_t tag = rng.next();
    try {
        for (const auto& cell : cells) {
            // free entries right of each pivot, skipping the other pivot column
            std::vector<std::pair<int, int>> free;
            for (int c = cell.i + 1; c < 4; ++c) {
                if (c != cell.j) free.emplace_back(0, c);
            }
            for (int c = cell.j + 1; c < 4; ++c) free.emplace_back(1, c);
            // the big cell is ordered (a, c, b, d) for x2 = a x0 + b x1, x3 = c x0 + d x1
            std::vector<int> order(free.size());
            std::iota(order.begin(), order.end(), 0);
            if (free.size() == 4) order = {0, 2, 1, 3};
            int nv = static_cast<int>(free.size());
            std::vector<MultiPoly> u = constant_point(std::vector<Scalar>(4, Scalar(0)), nv);
            std::vector<MultiPoly> v = u;
            u[static_cast<std::size_t>(cell.i)] = MultiPoly::constant(nv, Scalar(1));
            v[static_cast<std::size_t>(cell.j)] = MultiPoly::constant(nv, Scalar(1));
            for (std::size_t k = 0; k < free.size(); ++k) {
                auto [row, col] = free[k];
                (row == 0 ? u : v)[static_cast<std::size_t>(col)] = MultiPoly::variable(nv, order[k]);
            }
            out.count += count_cell(join_coefficients(h, u, v, nv), nv, tag + static_cast<std::uint64_t>(cell.i * 4 + cell.j));
        }
    } catch (const PositiveDimensional&) {
        return {true, 0};
    }
    return out;
}

bool quadric_bundle_probe(const MultiPoly& g, const LineP4& r, std::uint64_t seed) {
    check_hypersurface(g);
    if (!line_on_hypersurface(g, r)) throw MathError("line is not on the hypersurface");
    Lcg rng(seed);
    std::vector<AlgebraicPoints> pts;
    int lines = 0;
    for (long s = 1; s <= 12 && total_points(pts) < 45; ++s) {
        ProjPoint q(r.point_at(Scalar(1), Scalar(s)));
        std::vector<AlgebraicPoints> found;
        try {
            found = other_lines_at(g, r, q, rng);
        } catch (const MathError&) {
            continue;
        }
        AlgebraicPoints base{UniPoly::x(), {}};
        for (int i = 0; i < kAmbient; ++i) base.coords.push_back(UniPoly::constant(q[i]));
        pts.push_back(std::move(base));
        for (auto& ap : found) {
            lines += ap.modulus.degree();
            // the direction point and one more point of each line
            AlgebraicPoints other{ap.modulus, {}};
            for (int i = 0; i < kAmbient; ++i) other.coords.push_back((ap.coords[static_cast<std::size_t>(i)] + UniPoly::constant(q[i])) % ap.modulus);
            pts.push_back(std::move(ap));
            pts.push_back(std::move(other));
        }
    }
    if (lines < 3 || total_points(pts) < 15) throw MathError("insufficient rational data");
    int k1 = kernel_dimension(vanishing_rows(pts, 1), 5);
    int k2 = kernel_dimension(vanishing_rows(pts, 2), 15);
    // quadrics in the ideal of a codimension-k1 linear space
    int span = kAmbient - k1;
    int in_ideal = 15 - span * (span + 1) / 2;
    return k2 > in_ideal;
}

Classification classify(const ProbeReport& rep) {
    Classification out;
    if (!rep.mu) {
        if (rep.n == 3) {
            out.case_label = 1;
        } else {
            out.failed.push_back("mu missing");
        }
        return out;
    }
    int n = rep.n;
    int mu = *rep.mu;
    if (n == 3) {
        out.case_label = 1;
    } else if (n == 4 && mu == 4) {
        out.case_label = 2;
    } else if (n == 5 && mu == 3) {
        out.case_label = 3;
    } else if (n == 6 && mu == 2) {
        out.case_label = 4;
    } else if (n <= 6 && mu >= 3 && rep.components_hint && *rep.components_hint >= 3) {
        out.case_label = 5;
    }
    if (out.case_label) return out;
    auto show = [](int v) { return std::to_string(v); };
    if (n == 4) out.failed.push_back("case 2 needs mu=4, got " + show(mu));
    if (n == 5) out.failed.push_back("case 3 needs mu=3, got " + show(mu));
    if (n == 6) out.failed.push_back("case 4 needs mu=2, got " + show(mu));
    if (n > 6) out.failed.push_back("degree " + show(n) + " exceeds 6");
    if (n <= 6) {
        if (mu < 3) out.failed.push_back("case 5 needs mu>=3, got " + show(mu));
        if (!rep.components_hint) {
            out.failed.push_back("case 5 needs components_hint>=3, got unknown");
        } else if (*rep.components_hint < 3) {
            out.failed.push_back("case 5 needs components_hint>=3, got " + show(*rep.components_hint));
        }
    }
    return out;
}

}  // namespace linefan
