#include "linefan/geometry.hpp"

#include <algorithm>

namespace linefan {

namespace {

ExactMatrix stack(std::initializer_list<const std::vector<Scalar>*> rows) {
    std::vector<std::vector<Scalar>> r;
    for (const auto* v : rows) r.push_back(*v);
    return ExactMatrix::from_rows(r);
}

void check_point(const ProjPoint& p) {
    if (p.size() != kAmbient) throw MathError("expected a point of P^4, got " + std::to_string(p.size()) + " coordinates");
}

}  // namespace

int plucker_index(int i, int j) {
    static constexpr std::array<std::array<int, kAmbient>, kAmbient> table{{
        {-1, 0, 1, 2, 3},
        {-1, -1, 4, 5, 6},
        {-1, -1, -1, 7, 8},
        {-1, -1, -1, -1, 9},
        {-1, -1, -1, -1, -1},
    }};
    if (i < 0 || j >= kAmbient || i >= j) throw MathError("plucker index needs 0 <= i < j <= 4");
    return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

LineP4::LineP4(ProjPoint a, ProjPoint b) : a_(std::move(a)), b_(std::move(b)) {
    check_point(a_);
    check_point(b_);
    bool any = false;
    for (int i = 0; i < kAmbient; ++i) {
        for (int j = i + 1; j < kAmbient; ++j) {
            Scalar v = a_[i] * b_[j] - a_[j] * b_[i];
            any = any || !v.is_zero();
            p_[static_cast<std::size_t>(plucker_index(i, j))] = std::move(v);
        }
    }
    if (!any) throw MathError("line needs two distinct points");
}

LineP4 LineP4::parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw MathError("line must be given as two points separated by ';'");
    return LineP4(ProjPoint::parse(text.substr(0, semi)), ProjPoint::parse(text.substr(semi + 1)));
}

const Scalar& LineP4::plucker(int i, int j) const { return p_[static_cast<std::size_t>(plucker_index(i, j))]; }

std::vector<Scalar> LineP4::point_at(const Scalar& s, const Scalar& t) const {
    std::vector<Scalar> x;
    for (int k = 0; k < kAmbient; ++k) x.push_back(s * a_[k] + t * b_[k]);
    return x;
}

bool LineP4::contains(const ProjPoint& q) const {
    check_point(q);
    return stack({&a_.coords(), &b_.coords(), &q.coords()}).rank() == 2;
}

bool LineP4::meets(const LineP4& other) const {
    return stack({&a_.coords(), &b_.coords(), &other.a_.coords(), &other.b_.coords()}).rank() <= 3;
}

std::string LineP4::to_string() const { return a_.to_string() + ";" + b_.to_string(); }

bool operator==(const LineP4& l, const LineP4& m) { return proportional(l.p_, m.p_); }

LineP4 plucker_from_span(const ProjPoint& a, const ProjPoint& b) { return LineP4(a, b); }

std::array<Scalar, 5> grassmann_relations(const std::array<Scalar, 10>& p) {
    auto at = [&](int i, int j) -> const Scalar& { return p[static_cast<std::size_t>(plucker_index(i, j))]; };
    std::array<Scalar, 5> out;
    std::size_t k = 0;
    // one relation per omitted index
    for (int skip = kAmbient - 1; skip >= 0; --skip) {
        std::array<int, 4> q{};
        std::size_t n = 0;
        for (int v = 0; v < kAmbient; ++v) {
            if (v != skip) q[n++] = v;
        }
        out[k++] = at(q[0], q[1]) * at(q[2], q[3]) - at(q[0], q[2]) * at(q[1], q[3]) + at(q[0], q[3]) * at(q[1], q[2]);
    }
    return out;
}

std::vector<MultiPoly> line_images(const LineP4& r, int nvars, int s_var, int t_var) {
    MultiPoly s = MultiPoly::variable(nvars, s_var);
    MultiPoly t = MultiPoly::variable(nvars, t_var);
    std::vector<MultiPoly> images;
    for (int k = 0; k < kAmbient; ++k) images.push_back(s.scaled(r.a()[k]) + t.scaled(r.b()[k]));
    return images;
}

void check_hypersurface(const MultiPoly& g) {
    if (g.nvars() != kAmbient) throw MathError("hypersurface equation must use five variables x0..x4");
    if (g.is_zero()) throw MathError("hypersurface equation is zero");
    if (!g.is_homogeneous()) throw MathError("hypersurface equation is not homogeneous");
}

MultiPoly restrict_to_line(const MultiPoly& g, const LineP4& r) { return g.substitute(line_images(r, 2, 0, 1)); }

bool line_on_hypersurface(const MultiPoly& g, const LineP4& r) {
    check_hypersurface(g);
    return restrict_to_line(g, r).is_zero();
}

std::vector<Scalar> gradient_at(const MultiPoly& g, std::span<const Scalar> x) {
    std::vector<Scalar> out;
    for (int k = 0; k < g.nvars(); ++k) out.push_back(g.partial(k).evaluate(x));
    return out;
}

LocalModel normalize_chart(const MultiPoly& g, const ProjPoint& point) {
    check_hypersurface(g);
    check_point(point);
    ProjPoint p = point.normalized();
    if (!g.evaluate(p.coords()).is_zero()) throw MathError("point " + point.to_string() + " is not on the hypersurface");
    std::vector<Scalar> grad = gradient_at(g, p.coords());
    int a = 0;
    while (p[a].is_zero()) ++a;
    int b = -1;
    for (int j = 0; j < kAmbient && b < 0; ++j) {
        if (j != a && !grad[static_cast<std::size_t>(j)].is_zero()) b = j;
    }
    // Euler: g_a p_a = -sum of the others, so a nonzero gradient has an entry off a
    if (b < 0) throw MathError("singular base point");
    const Scalar& gb = grad[static_cast<std::size_t>(b)];

    ExactMatrix m(kAmbient, kAmbient);
    for (int i = 0; i < kAmbient; ++i) m.at(i, 0) = p[i];
    int col = 1;
    for (int j = 0; j < kAmbient; ++j) {
        if (j == a || j == b) continue;
        m.at(j, col) = Scalar(1);
        m.at(b, col) = -(grad[static_cast<std::size_t>(j)] / gb);
        ++col;
    }
    m.at(b, 4) = gb.inverse();

    std::vector<MultiPoly> images;
    for (int i = 0; i < kAmbient; ++i) {
        MultiPoly x = MultiPoly::constant(4, m.at(i, 0));
        for (int k = 1; k < kAmbient; ++k) {
            if (!m.at(i, k).is_zero()) x += MultiPoly::variable(4, k - 1).scaled(m.at(i, k));
        }
        images.push_back(std::move(x));
    }
    MultiPoly affine = g.substitute(images);
    MultiPoly y4 = MultiPoly::variable(4, 3);
    if (!(affine.homogeneous_part(0).is_zero() && affine.homogeneous_part(1) == y4)) {
        throw MathError("chart normalization failed");
    }
    int n = g.total_degree();
    std::vector<MultiPoly> fs;
    std::vector<MultiPoly> hs;
    for (int i = 2; i <= n; ++i) {
        MultiPoly gi = affine.homogeneous_part(i);
        MultiPoly fi = gi.specialize(3, Scalar(0));
        hs.push_back((gi - fi).exact_quotient(y4));
        fs.push_back(fi.with_nvars(3));
    }
    ExactMatrix inv = m.inverse();
    return LocalModel{n, std::move(p), std::move(affine), std::move(fs), std::move(hs), std::move(m), std::move(inv)};
}

PlaneSystem LocalModel::fan_system() const { return PlaneSystem::make(F); }

LineP4 LocalModel::line_of_direction(const ProjPoint& dir) const {
    if (dir.size() != 3) throw MathError("tangent direction needs three coordinates");
    std::vector<Scalar> v{Scalar(0), dir[0], dir[1], dir[2], Scalar(0)};
    return LineP4(p, ProjPoint(chart.apply(v)));
}

ProjPoint LocalModel::direction_of_line(const LineP4& r) const {
    if (!r.contains(p)) throw MathError("line does not pass through the base point");
    const ProjPoint& q = proportional(r.a().coords(), p.coords()) ? r.b() : r.a();
    std::vector<Scalar> v = chart_inverse.apply(q.coords());
    if (!v[4].is_zero()) throw MathError("line is not tangent at the base point");
    return ProjPoint({v[1], v[2], v[3]});
}

GradientOnLine restrict_gradient_to_line(const MultiPoly& g, const LineP4& r) {
    if (!line_on_hypersurface(g, r)) throw MathError("line is not on the hypersurface");
    int n = g.total_degree();
    // x = a + s*b, a univariate parametrization missing only the point b
    MultiPoly s = MultiPoly::variable(1, 0);
    std::vector<MultiPoly> images;
    for (int k = 0; k < kAmbient; ++k) images.push_back(MultiPoly::constant(1, r.a()[k]) + s.scaled(r.b()[k]));
    GradientOnLine out;
    std::vector<UniPoly> nonzero;
    int deficiency = n - 1;
    for (int k = 0; k < kAmbient; ++k) {
        UniPoly u = UniPoly::from_multi(g.partial(k).substitute(images), 0);
        if (!u.is_zero()) {
            nonzero.push_back(u);
            deficiency = std::min(deficiency, n - 1 - u.degree());
        }
        out.partials[static_cast<std::size_t>(k)] = std::move(u);
    }
    if (nonzero.empty()) {
        out.inside_singular_locus = true;
        out.gcd_degree = n - 1;
        return out;
    }
    out.gcd_degree = gcd_many(nonzero).degree() + deficiency;
    return out;
}

}  // namespace linefan
