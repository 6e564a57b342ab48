#include "linefan/catalog.hpp"

#include "linefan/parse.hpp"
#include "linefan/resultant.hpp"
#include "modular.hpp"

#include <algorithm>
#include <map>

namespace linefan {

namespace {

constexpr int kProjectionBudget = 8;
constexpr int kFreshSamples = 50;
constexpr int kCenterRetries = 20;
constexpr std::size_t kMaxInterpolationPrimes = 400;

std::vector<Exponents> monomials(int nvars, int degree) {
    std::vector<Exponents> out;
    Exponents e{};
    // odometer over compositions of `degree`, descending lex
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k);
            rec(var + 1, left - k);
        }
    };
    rec(0, degree);
    return out;
}

long binomial(int n, int k) {
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

struct ModKernel {
    int dim = 0;
    std::size_t free_col = 0;
    std::vector<detail::u64> vec;
};

ModKernel kernel_mod(const detail::PrimeField& f, const std::vector<ProjPoint>& pts, const std::vector<Exponents>& mons) {
    const std::size_t cols = mons.size();
    std::vector<std::vector<detail::u64>> a;
    a.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<std::vector<detail::u64>> powers(5);
        for (int i = 0; i < 5; ++i) {
            auto x = f.reduce(p[i]);
            if (!x) throw std::logic_error("sample point is not integral");
            auto& list = powers[static_cast<std::size_t>(i)];
            list.push_back(1);
            for (int k = 1; k <= 12; ++k) list.push_back(f.mul(list.back(), *x));
        }
        std::vector<detail::u64> row(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            detail::u64 v = 1;
            for (std::size_t i = 0; i < 5; ++i) v = f.mul(v, powers[i][mons[c][i]]);
            row[c] = v;
        }
        a.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        detail::u64 inv = f.inv(a[r][c]);
        for (std::size_t k = c; k < cols; ++k) a[r][k] = f.mul(a[r][k], inv);
        for (std::size_t rr = 0; rr < a.size(); ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            detail::u64 factor = a[rr][c];
            for (std::size_t k = c; k < cols; ++k) a[rr][k] = f.sub(a[rr][k], f.mul(factor, a[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    ModKernel out;
    out.dim = static_cast<int>(cols - pivots.size());
    if (out.dim != 1) return out;
    std::size_t fc = 0;
    while (fc < pivots.size() && pivots[fc] == fc) ++fc;
    out.free_col = fc;
    out.vec.assign(cols, 0);
    out.vec[fc] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) out.vec[pivots[k]] = f.neg(a[k][fc]);
    return out;
}

bool vanishes_on(const MultiPoly& g, const std::vector<ProjPoint>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return g.evaluate(p.coords()).is_zero(); });
}

std::vector<ProjPoint> draw(const PointSampler& sampler, Lcg& rng, std::size_t count) {
    std::vector<ProjPoint> pts;
    pts.reserve(count);
    for (std::size_t k = 0; k < count; ++k) pts.push_back(sampler(rng).primitive());
    return pts;
}

std::vector<Scalar> unit(int size, int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(size), Scalar(0));
    v[static_cast<std::size_t>(k)] = Scalar(1);
    return v;
}

std::vector<Scalar> random_ints(Lcg& rng, int n, long bound) {
    std::vector<Scalar> v;
    for (int k = 0; k < n; ++k) v.emplace_back(rng.uniform(-bound, bound));
    return v;
}

bool all_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

// Restriction of g to the line p + t d as a univariate polynomial in t.
UniPoly along(const MultiPoly& g, std::span<const Scalar> p, std::span<const Scalar> d) {
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < p.size(); ++i) {
        images.push_back(MultiPoly::constant(1, p[i]) + MultiPoly::variable(1, 0).scaled(d[i]));
    }
    return UniPoly::from_multi(g.substitute(images), 0);
}

// Residual point of a tangent line at p on a cubic: G(p + t d) = t^2 (c2 + c3 t).
std::optional<std::vector<Scalar>> tangent_step(const MultiPoly& g, std::span<const Scalar> p, Lcg& rng) {
    std::vector<Scalar> grad = gradient_at(g, p);
    auto lead = std::find_if(grad.begin(), grad.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (lead == grad.end()) return std::nullopt;
    auto k = static_cast<std::size_t>(lead - grad.begin());
    std::vector<Scalar> d = random_ints(rng, static_cast<int>(p.size()), 5);
    Scalar dot;
    for (std::size_t i = 0; i < d.size(); ++i) dot += grad[i] * d[i];
    d[k] -= dot / grad[k];
    UniPoly u = along(g, p, d);
    if (u.coeff(3).is_zero() || u.coeff(2).is_zero()) return std::nullopt;
    Scalar t = -u.coeff(2) / u.coeff(3);
    std::vector<Scalar> q(p.begin(), p.end());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += t * d[i];
    if (all_zero(q)) return std::nullopt;
    return ProjPoint(q).primitive().coords();
}

}  // namespace

PointSampler cubic_point_sampler(const MultiPoly& g, const ProjPoint& start) {
    return [g, start](Lcg& rng) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            auto q = tangent_step(g, start.coords(), rng);
            if (!q) continue;
            auto r = tangent_step(g, *q, rng);
            if (r) return ProjPoint(*r);
        }
        throw MathError("cubic sampler found no rational point");
    };
}

namespace {

// Random quadric on P^m whose listed monomials have coefficient zero.
MultiPoly quadric_avoiding(Lcg& rng, int nvars, const std::vector<std::pair<int, int>>& forbidden) {
    MultiPoly q(nvars);
    for (int i = 0; i < nvars; ++i) {
        for (int j = i; j < nvars; ++j) {
            if (std::find(forbidden.begin(), forbidden.end(), std::make_pair(i, j)) != forbidden.end()) continue;
            // nonzero, so no extra linear space lies on the quadrics by accident
            q += (MultiPoly::variable(nvars, i) * MultiPoly::variable(nvars, j)).scaled(Scalar(rng.nonzero(3)));
        }
    }
    return q;
}

// A point of {q1 = q2 = 0} in P^5 on the plane spanned by the line <e0, e1>
// (on both quadrics) and z: the quadrics restrict to u times linear forms.
std::optional<std::vector<Scalar>> ci_point(const MultiPoly& q1, const MultiPoly& q2, std::span<const Scalar> z) {
    std::vector<MultiPoly> images;
    for (int i = 0; i < 6; ++i) {
        MultiPoly c = MultiPoly::variable(3, 2).scaled(z[static_cast<std::size_t>(i)]);
        if (i == 0) c += MultiPoly::variable(3, 0);
        if (i == 1) c += MultiPoly::variable(3, 1);
        images.push_back(c);
    }
    MultiPoly u = MultiPoly::variable(3, 2);
    std::vector<std::vector<Scalar>> rows;
    for (const auto* q : {&q1, &q2}) {
        MultiPoly l = q->substitute(images).exact_quotient(u);
        std::vector<Scalar> row;
        for (int v = 0; v < 3; ++v) {
            Exponents e{};
            e[static_cast<std::size_t>(v)] = 1;
            row.push_back(l.coefficient(e));
        }
        rows.push_back(std::move(row));
    }
    auto ker = ExactMatrix::from_rows(rows).kernel();
    if (ker.size() != 1 || ker[0][2].is_zero()) return std::nullopt;
    const auto& stu = ker[0];
    std::vector<Scalar> x(6);
    for (std::size_t i = 0; i < 6; ++i) x[i] = stu[2] * z[i];
    x[0] += stu[0];
    x[1] += stu[1];
    return ProjPoint(x).primitive().coords();
}

// Plücker vector of u ^ v in the LineP4 ordering.
std::vector<Scalar> wedge(std::span<const Scalar> u, std::span<const Scalar> v) {
    std::vector<Scalar> p;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) p.push_back(u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] - u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)]);
    }
    return p;
}

std::vector<Scalar> tensor(std::span<const Scalar> a, std::span<const Scalar> b) {
    std::vector<Scalar> out;
    for (const auto& x : a) {
        for (const auto& y : b) out.push_back(x * y);
    }
    return out;
}

// A point of the kernel of `rows` not proportional to `avoid` (when given).
std::optional<std::vector<Scalar>> random_kernel_point(const std::vector<std::vector<Scalar>>& rows, Lcg& rng,
                                                       std::span<const Scalar> avoid = {}) {
    auto ker = ExactMatrix::from_rows(rows).kernel();
    if (ker.empty()) return std::nullopt;
    std::vector<Scalar> v(ker[0].size());
    for (const auto& k : ker) {
        Scalar c(rng.nonzero(5));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * k[i];
    }
    if (all_zero(v)) return std::nullopt;
    if (!avoid.empty() && proportional(v, avoid)) return std::nullopt;
    return v;
}

template <typename Build>
FamilySpec with_projection(FamilySpec spec, Lcg& rng, Build&& build) {
    for (int attempt = 0; attempt < kProjectionBudget; ++attempt) {
        try {
            build(spec, rng.fork(static_cast<std::uint64_t>(attempt)));
            return spec;
        } catch (const MathError& e) {
            std::string what = e.what();
            if (what != "degree too low" && what != "degree too high or degenerate samples" &&
                what != "line meets the projection center" && what != "degenerate projection") {
                throw;
            }
        }
    }
    throw MathError("degenerate projection");
}

const char* kCubicSmooth = "x0^2*x4 + x0*x1^2 + x0*x2^2 + x0*x3^2 + x1^3 + x2^3 + x3^3 + x4^3";
const char* kExample41 = "y4 + y1*y4 - y2^2 - y3^2 - y1*y2^2 - 2*y2*y3*y4 - y4^3";

FamilySpec cubic_family(const std::string& name, const MultiPoly& g, const ProjPoint& base, std::vector<LineP4> lines, int mu) {
    FamilySpec spec;
    spec.name = name;
    spec.implicit_eq = g;
    spec.base_point = base;
    spec.sampler = cubic_point_sampler(g, base);
    spec.known_lines = std::move(lines);
    spec.expected = {3, mu, 1, 1};
    return spec;
}

FamilySpec build_ci22(std::uint64_t seed) {
    FamilySpec spec;
    spec.name = "ci22";
    spec.ambient_dim = 5;
    spec.expected = {4, 4, 1, 2};
    Lcg rng(seed);
    // through the skew lines <e0, e1> and <e4, e5>
    const std::vector<std::pair<int, int>> forbidden{{0, 0}, {0, 1}, {1, 1}, {4, 4}, {4, 5}, {5, 5}};
    MultiPoly q1 = quadric_avoiding(rng, 6, forbidden);
    MultiPoly q2 = quadric_avoiding(rng, 6, forbidden);
    SourceSampler source = [q1, q2](Lcg& r) {
        for (;;) {
            if (auto x = ci_point(q1, q2, random_ints(r, 6, 5))) return *x;
        }
    };
    return with_projection(std::move(spec), rng, [&](FamilySpec& s, Lcg r) {
        Projection proj = Projection::random(5, r);
        auto center = proj.matrix().kernel().front();
        if (q1.evaluate(center).is_zero() && q2.evaluate(center).is_zero()) throw MathError("degenerate projection");
        s.sampler = project_from_center(source, proj);
        s.known_lines = {known_line_transport(proj, unit(6, 0), unit(6, 1)), known_line_transport(proj, unit(6, 4), unit(6, 5))};
        s.implicit_eq = implicitize_interpolation(s.sampler, 4, r.next());
    });
}

FamilySpec build_grass_quintic(std::uint64_t seed) {
    FamilySpec spec;
    spec.name = "grass_quintic";
    spec.ambient_dim = 6;
    spec.expected = {5, 3, 1, 3};
    Lcg rng(seed);
    // three linear conditions on Plücker vectors, vanishing on the pencils
    // e0 ^ <e1, e2> and e3 ^ <e4, e1>
    const std::vector<std::size_t> zero{0, 1, 9, 5};  // p01, p02, p34, p13
    std::vector<std::vector<Scalar>> constraints;
    for (int k = 0; k < 3; ++k) {
        std::vector<Scalar> c = random_ints(rng, 10, 3);
        for (auto z : zero) c[z] = Scalar(0);
        constraints.push_back(std::move(c));
    }
    SourceSampler source = [constraints](Lcg& r) {
        for (;;) {
            std::vector<Scalar> u = random_ints(r, 5, 5);
            if (all_zero(u)) continue;
            // c(u ^ v) = 0 is linear in v
            std::vector<std::vector<Scalar>> rows;
            for (const auto& c : constraints) {
                std::vector<Scalar> row(5);
                for (int j = 0; j < 5; ++j) row[static_cast<std::size_t>(j)] = Scalar(0);
                std::size_t idx = 0;
                for (int i = 0; i < 5; ++i) {
                    for (int j = i + 1; j < 5; ++j, ++idx) {
                        row[static_cast<std::size_t>(j)] += c[idx] * u[static_cast<std::size_t>(i)];
                        row[static_cast<std::size_t>(i)] -= c[idx] * u[static_cast<std::size_t>(j)];
                    }
                }
                rows.push_back(std::move(row));
            }
            auto v = random_kernel_point(rows, r, u);
            if (!v) continue;
            auto p = wedge(u, *v);
            if (!all_zero(p)) return ProjPoint(p).primitive().coords();
        }
    };
    std::vector<Scalar> e0 = unit(5, 0);
    std::vector<Scalar> e3 = unit(5, 3);
    return with_projection(std::move(spec), rng, [&](FamilySpec& s, Lcg r) {
        Projection proj = Projection::random(9, r);
        s.sampler = project_from_center(source, proj);
        s.known_lines = {known_line_transport(proj, wedge(e0, unit(5, 1)), wedge(e0, unit(5, 2))),
                         known_line_transport(proj, wedge(e3, unit(5, 4)), wedge(e3, unit(5, 1)))};
        s.implicit_eq = implicitize_interpolation(s.sampler, 5, r.next());
    });
}

FamilySpec build_p2xp2(std::uint64_t seed) {
    FamilySpec spec;
    spec.name = "p2xp2_section";
    spec.ambient_dim = 7;
    spec.expected = {6, 2, 2, 4};
    Lcg rng(seed);
    std::vector<std::vector<Scalar>> h;
    while (h.empty() || ExactMatrix::from_rows(h).rank() < 3) {
        h.clear();
        for (int i = 0; i < 3; ++i) h.push_back(random_ints(rng, 3, 3));
    }
    // v with u^T H v = 0
    auto partner_row = [h](std::span<const Scalar> u) {
        std::vector<Scalar> row(3);
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t i = 0; i < 3; ++i) row[j] += u[i] * h[i][j];
        }
        return row;
    };
    SourceSampler source = [partner_row](Lcg& r) {
        for (;;) {
            std::vector<Scalar> u = random_ints(r, 3, 5);
            if (all_zero(u)) continue;
            auto v = random_kernel_point({partner_row(u)}, r);
            if (v) return ProjPoint(tensor(u, *v)).primitive().coords();
        }
    };
    auto ruling = [&](const std::vector<Scalar>& u, const Projection& proj) {
        auto ker = ExactMatrix::from_rows({partner_row(u)}).kernel();
        return known_line_transport(proj, tensor(u, ker[0]), tensor(u, ker[1]));
    };
    return with_projection(std::move(spec), rng, [&](FamilySpec& s, Lcg r) {
        Projection proj = Projection::random(8, r);
        s.sampler = project_from_center(source, proj);
        s.known_lines = {ruling(unit(3, 0), proj), ruling(unit(3, 1), proj)};
        s.implicit_eq = implicitize_interpolation(s.sampler, 6, r.next());
    });
}

FamilySpec build_segre_cube(std::uint64_t seed) {
    FamilySpec spec;
    spec.name = "segre_cube";
    spec.ambient_dim = 7;
    spec.expected = {6, 3, 3, 5};
    Lcg rng(seed);
    SourceSampler source = [](Lcg& r) {
        for (;;) {
            auto a = random_ints(r, 2, 5);
            auto b = random_ints(r, 2, 5);
            auto c = random_ints(r, 2, 5);
            if (all_zero(a) || all_zero(b) || all_zero(c)) continue;
            return ProjPoint(tensor(tensor(a, b), c)).primitive().coords();
        }
    };
    auto ruling = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Projection& proj) {
        auto ab = tensor(a, b);
        return known_line_transport(proj, tensor(ab, unit(2, 0)), tensor(ab, unit(2, 1)));
    };
    return with_projection(std::move(spec), rng, [&](FamilySpec& s, Lcg r) {
        Projection proj = Projection::random(7, r);
        s.sampler = project_from_center(source, proj);
        s.known_lines = {ruling(unit(2, 0), unit(2, 0), proj), ruling(unit(2, 1), unit(2, 1), proj)};
        // a generic center gives no quintic
        bool quintic = true;
        try {
            implicitize_interpolation(s.sampler, 5, r.next());
        } catch (const MathError& e) {
            if (std::string(e.what()) != "degree too low") throw;
            quintic = false;
        }
        if (quintic) throw MathError("degenerate projection");
        s.implicit_eq = implicitize_interpolation(s.sampler, 6, r.next());
    });
}

}  // namespace

Projection::Projection(ExactMatrix pi) : pi_(std::move(pi)) {
    if (pi_.rows() != 5 || pi_.rank() != 5) throw MathError("projection needs a 5-row matrix of rank 5");
}

Projection Projection::random(int source_dim, Lcg& rng, long bound) {
    for (;;) {
        ExactMatrix m(5, source_dim + 1);
        for (int r = 0; r < 5; ++r) {
            for (int c = 0; c <= source_dim; ++c) m.at(r, c) = Scalar(rng.uniform(-bound, bound));
        }
        if (m.rank() == 5) return Projection(std::move(m));
    }
}

std::optional<ProjPoint> Projection::apply(std::span<const Scalar> x) const {
    if (static_cast<int>(x.size()) != pi_.cols()) throw MathError("source point has the wrong dimension");
    std::vector<Scalar> y = pi_.apply(x);
    if (all_zero(y)) return std::nullopt;
    return ProjPoint(std::move(y));
}

PointSampler project_from_center(SourceSampler source, Projection proj) {
    return [source = std::move(source), proj = std::move(proj)](Lcg& rng) {
        for (int k = 0; k < kCenterRetries; ++k) {
            if (auto y = proj.apply(source(rng))) return y->primitive();
        }
        throw MathError("samples keep hitting the projection center");
    };
}

LineP4 known_line_transport(const Projection& proj, std::span<const Scalar> a, std::span<const Scalar> b) {
    auto ya = proj.apply(a);
    auto yb = proj.apply(b);
    if (!ya || !yb || proportional(ya->coords(), yb->coords())) throw MathError("line meets the projection center");
    return LineP4(*ya, *yb);
}

MultiPoly implicitize_interpolation(const PointSampler& sampler, int degree, std::uint64_t seed) {
    if (degree < 1) throw MathError("interpolation degree must be positive");
    Lcg rng(seed);
    const std::vector<Exponents> mons = monomials(5, degree);
    const std::size_t need = static_cast<std::size_t>(binomial(degree + 4, 4)) + 10;
    std::vector<ProjPoint> pts = draw(sampler, rng, need);
    std::vector<ProjPoint> fresh = draw(sampler, rng, kFreshSamples);

    std::vector<mpz_class> acc;
    mpz_class modulus = 1;
    std::optional<std::size_t> free_col;
    std::optional<std::vector<mpq_class>> previous;
    int smallest = -1;
    for (std::size_t k = 0; k < kMaxInterpolationPrimes; ++k) {
        detail::PrimeField f = detail::PrimeField::nth(k);
        ModKernel ker = kernel_mod(f, pts, mons);
        // a prime can only enlarge the kernel
        if (smallest < 0 || ker.dim < smallest) {
            smallest = ker.dim;
            free_col.reset();
        }
        if (k == 1 && smallest == 0) throw MathError("degree too low");
        if (k == 1 && smallest >= 2) throw MathError("degree too high or degenerate samples");
        if (ker.dim != 1) continue;
        if (!free_col || *free_col != ker.free_col) {
            free_col = ker.free_col;
            acc.assign(mons.size(), mpz_class(0));
            modulus = 1;
            previous.reset();
        }
        detail::Crt crt(modulus, f);
        for (std::size_t c = 0; c < mons.size(); ++c) crt.combine(acc[c], ker.vec[c]);
        modulus *= detail::to_mpz(f.p());

        std::vector<mpq_class> cand;
        for (const auto& a : acc) {
            auto q = detail::rational_reconstruction(a, modulus);
            if (!q) break;
            cand.push_back(*q);
        }
        if (cand.size() != mons.size()) {
            previous.reset();
            continue;
        }
        if (previous && *previous == cand) {
            MultiPoly g(5);
            for (std::size_t c = 0; c < mons.size(); ++c) g.add_term(mons[c], Scalar(cand[c]));
            if (vanishes_on(g, pts) && vanishes_on(g, fresh)) return g.primitive();
        }
        previous = std::move(cand);
    }
    throw MathError("interpolation did not stabilize");
}

MultiPoly project_complete_intersection(const MultiPoly& q1, const MultiPoly& q2, const Projection& proj) {
    if (proj.source_dim() != 5 || q1.nvars() != 6 || q2.nvars() != 6) throw MathError("expected two quadrics on P^5");
    const ExactMatrix& pi = proj.matrix();
    auto center = pi.kernel().front();
    // a right inverse of pi lifts y to the source; the fibre is lift + lambda * center
    ExactMatrix lift = pi.transpose() * (pi * pi.transpose()).inverse();
    std::vector<MultiPoly> images;
    for (int i = 0; i < 6; ++i) {
        MultiPoly x = MultiPoly::variable(6, 5).scaled(center[static_cast<std::size_t>(i)]);
        for (int j = 0; j < 5; ++j) x += MultiPoly::variable(6, j).scaled(lift.at(i, j));
        images.push_back(std::move(x));
    }
    MultiPoly r = resultant(q1.substitute(images), q2.substitute(images), 5);
    if (r.is_zero()) throw MathError("degenerate projection");
    return r.with_nvars(5).primitive();
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"cubic_smooth", "example41", "ci22", "grass_quintic", "p2xp2_section", "segre_cube"};
    return names;
}

FamilySpec build_family(std::string_view name, std::uint64_t seed) {
    FamilySpec spec;
    if (name == "cubic_smooth") {
        MultiPoly g = parse_hypersurface(kCubicSmooth);
        LineP4 r(ProjPoint::from_ints(std::vector<long>{0, 1, -1, 0, 0}), ProjPoint::from_ints(std::vector<long>{0, 0, 0, 1, -1}));
        spec = cubic_family("cubic_smooth", g, ProjPoint(unit(5, 0)), {r}, 6);
    } else if (name == "example41") {
        MultiPoly g = parse_hypersurface(kExample41);
        LineP4 r(ProjPoint(unit(5, 0)), ProjPoint(unit(5, 1)));
        spec = cubic_family("example41", g, ProjPoint(unit(5, 0)), {r}, 3);
    } else if (name == "ci22") {
        spec = build_ci22(seed);
    } else if (name == "grass_quintic") {
        spec = build_grass_quintic(seed);
    } else if (name == "p2xp2_section") {
        spec = build_p2xp2(seed);
    } else if (name == "segre_cube") {
        spec = build_segre_cube(seed);
    } else {
        throw MathError("unknown family " + std::string(name));
    }
    spec.seed = seed;
    for (const auto& l : spec.known_lines) {
        if (!line_on_hypersurface(spec.implicit_eq, l)) throw MathError("known line is not on the implicit equation");
    }
    return spec;
}

}  // namespace linefan
